#pragma once

#include <utility>
#include <vector>

#include "pinnacle/perm.hpp"
#include "pinnacle/pinnacle_set.hpp"

namespace pinnacle {

// diagonal lattice path from (0,0): steps are +1 (up) or -1 (down)
class LatticePath {
public:
    LatticePath() = default;
    explicit LatticePath(std::vector<int> steps); // entries must be +-1

    int length() const { return static_cast<int>(steps_.size()); } // x
    const std::vector<int>& steps() const { return steps_; }
    std::vector<int> heights() const; // x+1 entries, starts at 0
    int endpoint_height() const;

    bool operator==(const LatticePath&) const = default;

private:
    std::vector<int> steps_;
};

// required endpoint height for an x-step path in the correspondence:
// 1 when x is odd, 2 when x is even
int required_endpoint(int x);

// true iff x >= 1 and the path ends at required_endpoint(x)
bool validate_endpoint(const LatticePath& p);

// (up-steps, down-steps); valid endpoint forces (floor(x/2)+1, ceil(x/2)-1);
// throws input_error when the endpoint is wrong
std::pair<int, int> step_counts(const LatticePath& p);

// number of down-steps that start on the x-axis
int negative_regions(const LatticePath& p);

// steps are labeled 2..x+1 left to right (label = step index + 1);
// a step is marked iff it is a down-step whose whole edge stays weakly above
// the axis (end height >= 0) or an up-step strictly below it (end height <= -1)
struct MarkedPath {
    LatticePath path;
    std::vector<int> marked; // 1-based step indices, increasing

    std::vector<int> marked_labels() const;   // indices shifted to labels
    std::vector<int> unmarked_labels() const;
};

MarkedPath mark(const LatticePath& p);

// M(P): marked labels plus x+2; always an admissible set
PinnacleSet pinnacle_set_of_path(const LatticePath& p); // throws input_error on bad endpoint

// inverse construction, built right to left from (m-2, required_endpoint(m));
// throws input_error for the empty or an inadmissible set
LatticePath path_of_pinnacle_set(const PinnacleSet& S);

// interleave U(P) = {1} + unmarked labels with M(P): u1 m1 u2 m2 ...
// followed by the leftover u's; its pinnacle set is M(P)
Permutation zigzag_permutation_of_path(const LatticePath& p);

} // namespace pinnacle
