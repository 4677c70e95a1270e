// acceptance gate: every criterion prints one [PASS]/[FAIL] line; the binary
// exits nonzero when any line failed.  Criterion 10b checks a tempting product
// rule that is genuinely false; it is implemented faithfully and therefore
// reports FAIL with its counterexample rather than being weakened to pass.
#include <algorithm>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pinnacle/admissible.hpp"
#include "pinnacle/counting.hpp"
#include "pinnacle/lattice.hpp"
#include "pinnacle/numbers.hpp"
#include "pinnacle/perm.hpp"

using namespace pinnacle;

namespace {

int g_failed = 0;

void report(const std::string& id, const std::string& what, bool ok,
            const std::string& note = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << ": " << what;
    if (!ok && !note.empty()) std::cout << " -- " << note;
    std::cout << "\n";
    if (!ok) ++g_failed;
}

PinnacleSet ps(std::vector<int> v) { return PinnacleSet(std::move(v)); }

// small independent binomial so table row sums are not checked against the
// library's own arithmetic
long long local_binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::vector<long long> row(n + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j >= 1; --j) row[j] += row[j - 1];
    return row[k];
}

// 1: the exhaustive census, the splitting recurrence, the max-insertion
// recurrence and the dispatcher give identical class sizes for every
// admissible set, exhaustively for n <= 9, and the classes tile S_n
bool criterion_engines() {
    BruteForceOptions opt;
    opt.jobs = 4;
    CountCache cq, cl, ca;
    for (int n = 1; n <= 9; ++n) {
        auto census = brute_force_census(n, opt);
        auto sets = enumerate_admissible_upto(n);
        if (census.size() != sets.size()) return false;
        Count total = 0;
        for (const auto& S : sets) {
            auto it = census.find(S);
            if (it == census.end()) return false;
            const Count& expect = it->second;
            total += expect;
            if (quadratic_count(S, n, cq) != expect) return false;
            if (linear_count(S, n, cl) != expect) return false;
            if (count(S, n, Method::automatic, ca) != expect) return false;
        }
        if (total != factorial(n)) return false;
    }
    return true;
}

// 2: the admissible-count triangle reproduces its fixed values and its row
// sums follow the central binomial column
bool criterion_triangle() {
    AdmissibleCountTable t(20);
    const std::vector<std::vector<long long>> rows{
        {1},                          // m = 3
        {1},                          // m = 4
        {1, 2},                       // m = 5
        {1, 3},                       // m = 6
        {1, 4, 5},                    // m = 7
        {1, 5, 9},                    // m = 8
        {1, 6, 14, 14},               // m = 9
        {1, 7, 20, 28},               // m = 10
        {1, 8, 27, 48, 42},           // m = 11
        {1, 9, 35, 75, 90},           // m = 12
        {1, 10, 44, 110, 165, 132},   // m = 13
        {1, 11, 54, 154, 275, 297},   // m = 14
    };
    for (int m = 3; m <= 14; ++m) {
        const auto& expect = rows[m - 3];
        for (int d = 1; 2 * d < m; ++d)
            if (t.at(m, d) != Count(expect[d - 1])) return false;
        if (static_cast<int>(expect.size()) != (m - 1) / 2) return false;
    }
    if (t.at(12, 5) != 90 || t.at(9, 3) != 14) return false;
    for (int m = 3; m <= 20; ++m) {
        if (t.row_sum(m) != Count(local_binom(m - 2, m / 2))) return false;
        if (count_admissible_with_max(m) != t.row_sum(m)) return false;
        for (int d = 1; 2 * d < m && m <= 14; ++d)
            if (count_admissible(m, d) != t.at(m, d)) return false;
    }
    return true;
}

// 3: the admissible sets inside [7] are exactly the fixed list, and the
// canonical witness realizes every admissible set with max <= 9 at its
// minimal ambient size
bool criterion_sets_and_witnesses() {
    std::vector<PinnacleSet> expect{
        ps({}),        ps({3}),       ps({4}),       ps({5}),       ps({3, 5}),
        ps({4, 5}),    ps({6}),       ps({3, 6}),    ps({4, 6}),    ps({5, 6}),
        ps({7}),       ps({3, 7}),    ps({4, 7}),    ps({5, 7}),    ps({6, 7}),
        ps({3, 5, 7}), ps({3, 6, 7}), ps({4, 5, 7}), ps({4, 6, 7}), ps({5, 6, 7}),
    };
    if (enumerate_admissible_upto(7) != expect) return false;

    if (canonical_permutation(ps({5, 8, 9})).word() !=
        ValueWord{1, 5, 2, 8, 3, 9, 4, 6, 7})
        return false;
    if (canonical_permutation(ps({3})).word() != ValueWord{1, 3, 2}) return false;
    if (canonical_permutation(ps({3, 5})).word() != ValueWord{1, 3, 2, 5, 4}) return false;

    for (int m = 3; m <= 9; ++m)
        for (int d = 1; 2 * d < m; ++d)
            for (const auto& S : enumerate_admissible(m, d)) {
                Permutation w = canonical_permutation(S);
                if (w.size() != m) return false;
                if (!(pinnacle_set(w) == S)) return false;
                if (min_ambient_n(S) != m) return false;
            }
    return true;
}

// 4: the twenty class sizes inside S_7, in display order, match their fixed
// values, and an exhaustive census independently confirms each one
bool criterion_s7_classes() {
    const std::vector<long long> expect{64,  32,  96, 224, 480, 992, 16, 48, 48, 144,
                                        288, 112, 336, 688, 1200, 8,  24, 24, 72, 144};
    const int n = 7;
    CountCache cache;
    std::vector<std::pair<PinnacleSet, Count>> rows;
    rows.push_back({PinnacleSet(), count(PinnacleSet(), n, Method::automatic, cache)});
    for (int d = 1; 2 * d < n; ++d)
        for (int m = 2 * d + 1; m <= n; ++m)
            for (const auto& S : enumerate_admissible(m, d))
                rows.push_back({S, count(S, n, Method::automatic, cache)});
    if (rows.size() != expect.size()) return false;
    auto census = brute_force_census(n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].second != Count(expect[i])) return false;
        if (census.at(rows[i].first) != Count(expect[i])) return false;
    }
    return true;
}

// 5: the set <-> path correspondence round-trips in both directions over its
// whole range (sets with max <= 14, paths with <= 12 steps), 1715 items each way
bool criterion_roundtrips() {
    long long sets_seen = 0;
    for (int m = 3; m <= 14; ++m)
        for (int d = 1; 2 * d < m; ++d)
            for (const auto& S : enumerate_admissible(m, d)) {
                ++sets_seen;
                LatticePath p = path_of_pinnacle_set(S);
                if (p.length() != m - 2) return false;
                if (!(pinnacle_set_of_path(p) == S)) return false;
            }
    long long expected_sets = 0;
    for (int m = 3; m <= 14; ++m) expected_sets += local_binom(m - 2, m / 2);
    if (expected_sets != 1715 || sets_seen != 1715) return false;

    long long paths_seen = 0;
    for (int x = 1; x <= 12; ++x)
        for (unsigned mask = 0; mask < (1u << x); ++mask) {
            std::vector<int> steps(x, -1);
            for (int b = 0; b < x; ++b)
                if (mask & (1u << b)) steps[b] = 1;
            LatticePath p(steps);
            if (!validate_endpoint(p)) continue;
            ++paths_seen;
            if (!(path_of_pinnacle_set(pinnacle_set_of_path(p)) == p)) return false;
        }
    return paths_seen == 1715;
}

// 6: every class size sits between the closed-form extremes, with equality
// exactly on the minimal set (lower) and the top block of [n] (upper), n <= 10
bool criterion_bounds() {
    CountCache cache;
    for (int n = 1; n <= 10; ++n)
        for (const auto& S : enumerate_admissible_upto(n)) {
            int d = S.size();
            if (2 * d >= n) continue;
            BoundsCheck b = check_bounds(S, n, cache);
            if (!b.lower_ok || !b.upper_ok) return false;
            bool is_min = S == PinnacleSet::minimal(d);
            if ((b.value == b.lower) != is_min) return false;
            if (d == 0) {
                if (b.value != b.upper) return false;
                continue;
            }
            bool is_top = S.max() == n && S.values().front() == n - d + 1;
            if ((b.value == b.upper) != is_top) return false;
        }
    return true;
}

// 7: the class-maximizing size follows its fixed profile, never ties through
// n = 200, and its four-long plateaus start exactly where expected
bool criterion_dmax() {
    const std::vector<int> expect{1, 1, 1, 2, 2, 2, 3, 3, 3, 4,
                                  4, 4, 4, 5, 5, 5, 6, 6, 6};
    for (int n = 4; n <= 22; ++n)
        if (d_max(n).d != expect[n - 4]) return false;
    for (int n = 4; n <= 200; ++n)
        if (d_max(n).tie) return false;
    const std::vector<std::pair<int, int>> plats{{13, 4},   {38, 12},  {63, 20},
                                                 {85, 27},  {110, 35}, {135, 43},
                                                 {160, 51}, {185, 59}};
    return plateau_starts(200) == plats;
}

// 8: the tightest-packed sets are counted by the Catalan numbers, and the
// cumulative count telescopes the triangle exactly
bool criterion_catalan() {
    const std::vector<long long> cat{1,    2,    5,     14,    42,    132,
                                     429, 1430, 4862, 16796, 58786, 208012};
    for (int d = 1; d <= 12; ++d)
        if (count_admissible(2 * d + 1, d) != Count(cat[d - 1])) return false;
    AdmissibleCountTable t(20);
    Count cum = 1; // the empty set
    if (count_admissible_upto(1) != 1 || count_admissible_upto(2) != 1) return false;
    for (int m = 3; m <= 20; ++m) {
        cum += t.row_sum(m);
        if (count_admissible_upto(m) != cum) return false;
    }
    return true;
}

// 9: the subset-weighted transform collapses to pure powers for the empty
// set and singletons, and to the mixed power form for every pair
bool criterion_q_transform() {
    CountCache cache;
    for (int n = 1; n <= 9; ++n)
        if (q_transform(ps({}), n, cache) != pow2(n - 1)) return false;
    for (int n = 3; n <= 9; ++n)
        for (int l = 3; l <= n; ++l)
            if (q_transform(ps({l}), n, cache) != pow2(n + l - 3)) return false;
    for (int n = 2; n <= 9; ++n)
        for (int l = 1; l < n; ++l)
            for (int m = l + 1; m <= n; ++m) {
                Count tri = 1;
                for (int i = 1; i < l; ++i) tri *= 3;
                if (q_transform(ps({l, m}), n, cache) != pow2(n + m - l - 3) * (tri + 1))
                    return false;
            }
    // spot-check the definition itself against exhaustive counts
    for (const auto& S : {ps({3, 5, 7}), ps({4, 6})}) {
        int n = 7;
        Count direct = 0;
        const auto& v = S.values();
        for (unsigned mask = 0; mask < (1u << v.size()); ++mask) {
            std::vector<int> I;
            for (std::size_t b = 0; b < v.size(); ++b)
                if (mask & (1u << b)) I.push_back(v[b]);
            direct += pow2(static_cast<int>(I.size())) * brute_force_count(ps(I), n);
        }
        if (q_transform(S, n, cache) != direct) return false;
    }
    return true;
}

// 10a: the class sizes of the admissible sets tile n! exactly, n <= 9
bool criterion_sums() {
    CountCache cache;
    for (int n = 1; n <= 9; ++n) {
        Count total = 0;
        for (const auto& S : enumerate_admissible_upto(n))
            total += count(S, n, Method::automatic, cache);
        if (total != factorial(n)) return false;
    }
    return true;
}

// 10b: the stated product rule p_{S+{n}}(n) = (n - 2|S|) p_S(n-1); checked
// faithfully over every admissible S and n <= 7 with S+{n} admissible
bool criterion_lifting(std::string& note) {
    bool ok = true;
    for (int n = 3; n <= 7; ++n)
        for (const auto& S : enumerate_admissible_upto(n - 1)) {
            if (!S.empty() && S.max() >= n) continue;
            PinnacleSet lifted = S.with(n);
            if (!is_admissible(lifted)) continue;
            Count lhs = brute_force_count(lifted, n);
            Count rhs = Count(n - 2 * S.size()) * brute_force_count(S, n - 1);
            if (lhs != rhs && ok) {
                ok = false;
                note = "counterexample S={";
                const auto& v = S.values();
                for (std::size_t i = 0; i < v.size(); ++i)
                    note += (i ? "," : "") + std::to_string(v[i]);
                note += "}, n=" + std::to_string(n) + ": rule gives " + rhs.str() +
                        ", true count is " + lhs.str();
            }
        }
    return ok;
}

// 10c: the minimal-class relabeling is injective into each same-size class,
// exhaustively for n <= 8
bool criterion_injection() {
    for (int n = 4; n <= 8; ++n) {
        std::map<int, std::vector<Permutation>> sources;
        for_each_permutation(n, [&](const ValueWord& w) {
            Permutation p(w);
            PinnacleSet P = pinnacle_set(p);
            if (P == PinnacleSet::minimal(P.size())) sources[P.size()].push_back(p);
        });
        for (const auto& S : enumerate_admissible_upto(n)) {
            int d = S.size();
            if (2 * d >= n) continue;
            std::set<ValueWord> images;
            for (const auto& p : sources[d]) {
                Permutation img = inject_minimal(p, S);
                if (!(pinnacle_set(img) == S)) return false;
                images.insert(img.word());
            }
            if (images.size() != sources[d].size()) return false;
        }
    }
    return true;
}

// 10d: pinnacle sets of random permutations are always admissible and never
// larger than floor((n-1)/2)
bool criterion_random_sanity() {
    std::mt19937 rng(20260818u);
    for (int trial = 0; trial < 100000; ++trial) {
        int n = 1 + static_cast<int>(rng() % 50);
        ValueWord w(n);
        for (int i = 0; i < n; ++i) w[i] = i + 1;
        std::shuffle(w.begin(), w.end(), rng);
        std::vector<int> vals;
        for (int i : peak_positions(w)) vals.push_back(w[i - 1]);
        PinnacleSet P(vals);
        if (!is_admissible(P)) return false;
        if (P.size() > (n - 1) / 2) return false;
    }
    return true;
}

} // namespace

int main() {
    try {
        report("1", "all four counting engines agree with the exhaustive census (n <= 9)",
               criterion_engines());
        report("2", "admissible-count triangle matches its fixed values through m = 14",
               criterion_triangle());
        report("3", "admissible sets of [7] and canonical witnesses through max 9",
               criterion_sets_and_witnesses());
        report("4", "the twenty class sizes inside S_7 match their fixed values",
               criterion_s7_classes());
        report("5", "set <-> path correspondence round-trips 1715 items each way",
               criterion_roundtrips());
        report("6", "class sizes meet the closed-form bounds with exact equality cases",
               criterion_bounds());
        report("7", "class-maximizing size profile, tie-freeness and plateaus to n = 200",
               criterion_dmax());
        report("8", "Catalan boundary and cumulative counts telescope the triangle",
               criterion_catalan());
        report("9", "subset-weighted transform collapses to its power formulas",
               criterion_q_transform());
        report("10a", "class sizes tile n! exactly (n <= 9)", criterion_sums());
        std::string note;
        bool lift = criterion_lifting(note);
        report("10b", "stated product rule for appending n as a new pinnacle", lift, note);
        report("10c", "minimal-class relabeling is injective into every class (n <= 8)",
               criterion_injection());
        report("10d", "random pinnacle sets are admissible and small (100000 samples)",
               criterion_random_sanity());
    } catch (const std::exception& e) {
        std::cout << "[FAIL] unexpected exception: " << e.what() << "\n";
        return 2;
    }
    if (g_failed) {
        std::cout << g_failed << " criterion check(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
