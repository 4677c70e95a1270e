#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "pinnacle/errors.hpp"
#include "pinnacle/pinnacle_set.hpp"

namespace pinnacle {

// a word of pairwise distinct integers over an arbitrary alphabet
// (segments of permutations keep their original letters)
using ValueWord = std::vector<int>;

// a rearrangement of 1..n; the empty and one-letter words are allowed
// (they are recursion bases elsewhere)
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(ValueWord letters); // throws input_error unless letters = some rearrangement of 1..n
    static Permutation identity(int n);

    int size() const { return static_cast<int>(w_.size()); }
    int at(int i) const { return w_[i - 1]; } // 1-based
    const ValueWord& word() const { return w_; }

    bool operator==(const Permutation&) const = default;

private:
    ValueWord w_;
};

// positions use 1-based indexing throughout
std::vector<int> descent_positions(const ValueWord& w); // i with w(i) > w(i+1)
std::vector<int> peak_positions(const ValueWord& w);    // i with w(i-1) < w(i) > w(i+1)

std::vector<int> descent_set(const Permutation& w);
std::vector<int> peak_set(const Permutation& w);
PinnacleSet pinnacle_set(const Permutation& w); // values at peak positions

// ranks of the elements of X that lie in T: { i : x_i in T } for X = {x_1 < x_2 < ...};
// X must be strictly increasing, T need not be a subset (T ∩ X is used)
std::vector<int> standardize(const std::vector<int>& X, const std::vector<int>& T);

inline constexpr int kEnumerationGuard = 12;

// streams S_n in lexicographic order; refuses n beyond the guard
template <class F>
void for_each_permutation(int n, F&& fn, int guard = kEnumerationGuard) {
    if (n < 0) throw input_error("for_each_permutation: negative n");
    if (n > guard) throw guard_error("for_each_permutation: n exceeds enumeration guard");
    ValueWord w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        fn(static_cast<const ValueWord&>(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

// the block of S_n whose first letter is `first`, again in lexicographic order;
// the blocks over first = 1..n partition S_n, which is what the parallel
// counting oracle shards on
template <class F>
void for_each_permutation_with_first(int n, int first, F&& fn, int guard = kEnumerationGuard) {
    if (n < 1 || first < 1 || first > n) throw input_error("for_each_permutation_with_first: bad arguments");
    if (n > guard) throw guard_error("for_each_permutation_with_first: n exceeds enumeration guard");
    ValueWord w(n);
    w[0] = first;
    int v = 1;
    for (int i = 1; i < n; ++i) {
        if (v == first) ++v;
        w[i] = v++;
    }
    do {
        fn(static_cast<const ValueWord&>(w));
    } while (std::next_permutation(w.begin() + 1, w.end()));
}

} // namespace pinnacle
