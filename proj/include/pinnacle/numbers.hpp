#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pinnacle {

// all permutation counts are exact; they overflow 64 bits well inside the
// ranges we care about, so everything arithmetic runs on cpp_int
using Count = boost::multiprecision::cpp_int;

Count pow2(int k); // 2^k, k >= 0
Count factorial(int n);
Count binomial(int n, int k); // 0 outside 0 <= k <= n
Count catalan(int d);         // binomial(2d, d) / (d + 1)

// Stirling numbers of the second kind, S(n,k) = number of ways to partition
// an n-set into k nonempty blocks.  S(n,k) = k*S(n-1,k) + S(n-1,k-1).
class StirlingTable {
public:
    Count at(int n, int k); // grows the triangle on demand; 0 outside 0<=k<=n
    int rows() const { return static_cast<int>(rows_.size()); }

private:
    std::vector<std::vector<Count>> rows_;
};

// shared memoized table behind a mutex
Count stirling2(int n, int k);

} // namespace pinnacle
