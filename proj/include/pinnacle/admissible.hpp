#pragma once

#include <vector>

#include "pinnacle/numbers.hpp"
#include "pinnacle/perm.hpp"
#include "pinnacle/pinnacle_set.hpp"

namespace pinnacle {

// S = {s_1 < ... < s_d} is admissible iff s_k > 2k for every k; equivalently
// some permutation realizes S as its pinnacle set.  The empty set qualifies.
bool is_admissible(const PinnacleSet& S);

// smallest n such that some w in S_n has pinnacle set S: max S (1 for the
// empty set); throws input_error for inadmissible S
int min_ambient_n(const PinnacleSet& S);

// the canonical witness in S_{max S}: pinnacles at even positions in
// increasing order, complement letters filling the rest increasingly;
// throws input_error for empty or inadmissible S
Permutation canonical_permutation(const PinnacleSet& S);

// all admissible sets with maximum exactly m and size d, lexicographically
std::vector<PinnacleSet> enumerate_admissible(int m, int d);

// every admissible subset of [n], including the empty set, lex order by (m, set)
std::vector<PinnacleSet> enumerate_admissible_upto(int n);

// number of admissible sets with max m and size d:
// p#(m;d) = sum_{k<m} p#(k;d-1) when m > 2d, p#(0;0) = 1, else 0
class AdmissibleCountTable {
public:
    explicit AdmissibleCountTable(int max_m);
    Count at(int m, int d) const; // 0 outside the triangle
    Count row_sum(int m) const;
    int max_m() const { return max_m_; }

private:
    int max_m_;
    std::vector<std::vector<Count>> t_; // t_[m][d]
};

Count count_admissible(int m, int d);    // shared memo table behind a mutex
Count count_admissible_with_max(int m);  // binomial(m-2, floor(m/2)); 0 for m < 3
Count count_admissible_upto(int n);      // binomial(n-1, floor((n-1)/2)), includes the empty set

} // namespace pinnacle
