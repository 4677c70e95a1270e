#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pinnacle/numbers.hpp"
#include "pinnacle/perm.hpp"
#include "pinnacle/pinnacle_set.hpp"

namespace pinnacle {

// p_S(n) = number of w in S_n whose pinnacle set is exactly S

struct CacheStats {
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
};

// memo store shared by the recurrence engines; keys are canonical (S, max S)
// pairs ((empty, 1) for the empty set) and values are p_S(max S) — the
// 2^(n-t) reduction factor is always applied outside the cache
class CountCache {
public:
    CountCache() = default;
    CountCache(const CountCache& other);
    CountCache& operator=(const CountCache&) = delete;

    std::optional<Count> get(const PinnacleSet& S) const;
    void put(const PinnacleSet& S, const Count& value);
    std::size_t size() const;
    CacheStats stats() const;

    // snapshot format: header "pinnacle-count-cache v1", then one
    // "S=<comma list>;n=<int>;p=<digits>" line per entry, string-sorted
    void save(const std::string& path) const;
    static CountCache load(const std::string& path);

    std::vector<std::pair<std::pair<std::vector<int>, int>, Count>> entries() const;

private:
    static std::pair<std::vector<int>, int> key_of(const PinnacleSet& S);
    mutable std::mutex mu_;
    mutable CacheStats stats_;
    std::map<std::pair<std::vector<int>, int>, Count> m_;
};

struct BruteForceOptions {
    int guard = 11; // refuse larger n (exit code 3 in the CLI)
    int jobs = 1;   // shards the enumeration by first letter
};

// exhaustive oracle: scans S_n and counts pinnacle-set matches
Count brute_force_count(const PinnacleSet& S, int n, const BruteForceOptions& opt = {});

// one exhaustive scan bucketing all of S_n by pinnacle set
std::map<PinnacleSet, Count> brute_force_census(int n, const BruteForceOptions& opt = {});

// p_S(n) = 2^(n-t) p_S(t) for any max(S) <= t <= n (t >= 1 for the empty set)
struct Reduction {
    Count factor;
    int reduced_n;
};
Reduction reduce(const PinnacleSet& S, int n, int t);

// splitting recurrence: at n = max S,
//   p_S(n) = sum over nonempty proper A of [n-1] of
//            p_{std_A(S)}(|A|) * p_{std_{A^c}(S)}(n-1-|A|),
// with p_empty as the only base case; subsets whose standardizations are
// inadmissible are pruned (their summand is provably zero)
Count quadratic_count(const PinnacleSet& S, int n, CountCache& cache);

struct QuadraticBreakdown {
    Count value;
    std::uint64_t terms_total = 0;   // 2^(m-1) - 2 at the evaluation size m = max S
    std::uint64_t terms_nonzero = 0; // summands with both standardizations admissible
};
QuadraticBreakdown quadratic_count_stats(const PinnacleSet& S, int n, CountCache& cache);

// max-insertion recurrence: at n = m = max S with d = |S|, S' = S minus m,
//   p_S(m) = (m-2d) p_{S'}(m-1) + 2 * sum over admissible T = S' + {j},
//            j in [m] minus S, of p_T(m-1),
// bottoming out at the empty-set and one-element closed forms
Count linear_count(const PinnacleSet& S, int n, CountCache& cache);

Count closed_form_single(int l, int n);        // 2^(n-2) (2^(l-2) - 1), 3 <= l <= n
Count closed_form_double(int l, int m, int n); // 2^(n+m-l-5)(3^(l-1)-2^l+1) - 2^(n-3)(2^(l-2)-1)

// p over the top block {n-d+1,...,n}: d! (d+1)! 2^(n-2d-1) S(n-d, d+1)
Count max_count(int n, int d); // requires d >= 1, 2d < n
// p over {3,5,...,2d+1}: 2^(n-d-1)
Count min_count(int n, int d); // requires d >= 0, 2d < n

struct BoundsCheck {
    bool lower_ok = false;
    bool upper_ok = false;
    Count value, lower, upper;
};
BoundsCheck check_bounds(const PinnacleSet& S, int n, CountCache& cache); // requires 2|S| < n

// injection from the minimal class into class S (same size d, 2d < n):
// pinnacle 2k+1 becomes s_k; valley letters {1,2,4,...,2d} are relabeled by
// the top-down greedy ch_i = max{x not in S : x <= c_i, x < ch_(i+1)} (kept
// fixed whenever possible); outside letters map order-isomorphically onto
// what remains.  Injective with image inside class S.
Permutation inject_minimal(const Permutation& w, const PinnacleSet& S);

struct DMaxResult {
    int d = 0;
    bool tie = false; // several d attain the maximum (smallest is reported)
};
DMaxResult d_max(int n); // argmax over 1 <= d, 2d < n of max_count(n, d); n >= 4

// all n in [4, n_max] with d(n) = d(n+1) = d(n+2) = d(n+3), paired with d(n)
std::vector<std::pair<int, int>> plateau_starts(int n_max);

// q_S(n) = sum over I subset of S of 2^|I| p_I(n)
Count q_transform(const PinnacleSet& S, int n, CountCache& cache);

enum class Method { automatic, brute, quadratic, linear, closed };

// dispatcher; automatic picks closed forms (sizes 0-2, minimal and top-block
// sets) and the max-insertion recurrence otherwise
Count count(const PinnacleSet& S, int n, Method method, CountCache& cache,
            const BruteForceOptions& brute_opt = {});

} // namespace pinnacle
