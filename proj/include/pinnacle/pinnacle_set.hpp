#pragma once

#include <compare>
#include <vector>

namespace pinnacle {

// a finite set of candidate pinnacle values, kept strictly increasing
class PinnacleSet {
public:
    PinnacleSet() = default;
    explicit PinnacleSet(std::vector<int> values); // sorts; rejects dupes and values < 1

    // {3, 5, ..., 2d+1}: the smallest admissible set of size d
    static PinnacleSet minimal(int d);

    bool empty() const { return s_.empty(); }
    int size() const { return static_cast<int>(s_.size()); }
    int max() const; // throws input_error when empty
    bool contains(int v) const;
    const std::vector<int>& values() const { return s_; }

    PinnacleSet without_max() const; // throws input_error when empty
    PinnacleSet with(int v) const;   // throws input_error if v already present

    auto operator<=>(const PinnacleSet&) const = default;

private:
    std::vector<int> s_;
};

} // namespace pinnacle
