#include "pinnacle/verify.hpp"

#include <algorithm>
#include <map>

#include "pinnacle/admissible.hpp"
#include "pinnacle/counting.hpp"
#include "pinnacle/errors.hpp"
#include "pinnacle/lattice.hpp"
#include "pinnacle/numbers.hpp"
#include "pinnacle/perm.hpp"
#include "pinnacle/textio.hpp"

namespace pinnacle {

namespace {

struct Ctx {
    const VerifyOptions& opt;
    VerifyReport& rep;
    std::string suite;

    void mark(const char* op) { rep.coverage.insert(op); }
    void check(bool ok, const std::string& detail) {
        ++rep.checks;
        if (!ok) rep.failures.push_back({suite, detail});
    }
};

std::string at(const PinnacleSet& S, int n) {
    return " at S=" + format_set(S) + ", n=" + std::to_string(n);
}

bool is_top_block(const PinnacleSet& S) {
    return !S.empty() && S.values()[0] == S.max() - S.size() + 1;
}

// every counting engine against an exhaustive scan, plus the statistics
// against their raw definitions
void suite_engines(Ctx& c) {
    BruteForceOptions bopt;
    bopt.guard = std::max(bopt.guard, c.opt.n_max);
    bopt.jobs = c.opt.jobs;

    for (int n = 0; n <= std::min(c.opt.n_max, 6); ++n) {
        for_each_permutation(n, [&](const ValueWord& w) {
            Permutation p(w);
            std::vector<int> des, pk, pin;
            for (int i = 1; i <= n - 1; ++i)
                if (w[i - 1] > w[i]) des.push_back(i);
            for (int i = 2; i <= n - 1; ++i)
                if (w[i - 2] < w[i - 1] && w[i - 1] > w[i]) {
                    pk.push_back(i);
                    pin.push_back(w[i - 1]);
                }
            std::sort(pin.begin(), pin.end());
            c.check(descent_set(p) == des, "descent positions disagree with the definition");
            c.check(peak_set(p) == pk, "peak positions disagree with the definition");
            c.check(pinnacle_set(p).values() == pin, "pinnacle values disagree with the definition");
            c.check(is_admissible(pinnacle_set(p)), "a realized pinnacle set must be admissible");
        });
    }
    c.mark("enumerate_permutations");
    c.mark("descent_set");
    c.mark("peak_set");
    c.mark("pinnacle_set");
    c.mark("is_admissible");

    {
        std::vector<int> A{2, 4, 5, 7, 9};
        c.check(standardize(A, {4, 7}) == std::vector<int>({2, 4}), "standardize rank fixture");
        c.check(standardize(A, A) == std::vector<int>({1, 2, 3, 4, 5}), "standardize of the full chain");
        c.check(standardize(A, {1, 3}).empty(), "standardize of a disjoint target");
        c.mark("standardize");
    }

    for (int n = 0; n <= c.opt.n_max; ++n) {
        auto census = brute_force_census(n, bopt);
        Count total = 0;
        std::vector<PinnacleSet> seen;
        for (const auto& [S, v] : census) {
            seen.push_back(S);
            total += v;
        }
        c.check(total == factorial(n), "census of S_" + std::to_string(n) + " does not total n!");
        if (n >= 1) {
            auto expected = enumerate_admissible_upto(n);
            std::sort(expected.begin(), expected.end());
            c.check(seen == expected,
                    "census support must be every admissible set inside [" + std::to_string(n) + "]");
        }
        CountCache cq, cl; // fresh caches keep the engines independent
        for (const auto& [S, v] : census) {
            c.check(quadratic_count(S, n, cq) == v, "splitting recurrence disagrees with the scan" + at(S, n));
            c.check(linear_count(S, n, cl) == v, "max-insertion recurrence disagrees with the scan" + at(S, n));
            c.check(count(S, n, Method::automatic, cl) == v, "dispatcher disagrees with the scan" + at(S, n));
            int d = S.size();
            if (d == 1)
                c.check(closed_form_single(S.max(), n) == v, "one-element closed form disagrees" + at(S, n));
            if (d == 2)
                c.check(closed_form_double(S.values()[0], S.values()[1], n) == v,
                        "two-element closed form disagrees" + at(S, n));
            if (d >= 1 && is_top_block(S))
                c.check(pow2(n - S.max()) * max_count(S.max(), d) == v,
                        "top-block formula disagrees" + at(S, n));
            if (d >= 1 && S == PinnacleSet::minimal(d))
                c.check(min_count(n, d) == v, "minimal-set formula disagrees" + at(S, n));
        }
        if (n >= 3) {
            PinnacleSet probe(std::vector<int>{3});
            Count direct = brute_force_count(probe, n, bopt);
            c.check(direct == census.at(probe), "single-set scan disagrees with the census" + at(probe, n));
            auto r = reduce(probe, n, 3);
            c.check(r.factor * brute_force_count(probe, r.reduced_n, bopt) == direct,
                    "reduction factor disagrees with the scan" + at(probe, n));
            c.mark("brute_force_count");
            c.mark("reduce");
        }
    }
    c.mark("quadratic_count");
    c.mark("linear_count");
    c.mark("count");
    c.mark("closed_form_single");
    c.mark("closed_form_double");
    c.mark("max_count");
    c.mark("min_count");
}

// both directions of the set <-> path correspondence, the zigzag witness,
// and the canonical witness
void suite_bijection(Ctx& c) {
    int m_max = std::max(c.opt.m_max, 3);
    for (const PinnacleSet& S : enumerate_admissible_upto(m_max)) {
        if (S.empty()) continue;
        int m = S.max();
        int x = m - 2;
        LatticePath P = path_of_pinnacle_set(S);
        c.check(P.length() == x, "path length must be max(S)-2" + at(S, m));
        c.check(validate_endpoint(P), "endpoint height is off" + at(S, m));
        auto uc = step_counts(P);
        c.check(uc.first + uc.second == x && uc.first - uc.second == P.endpoint_height(),
                "step counts are inconsistent" + at(S, m));
        c.check(pinnacle_set_of_path(P) == S, "set->path->set roundtrip broke" + at(S, m));
        int neg = negative_regions(P);
        c.check(S.size() == (x + 1) / 2 - neg,
                "size identity |S| = ceil(x/2) - (down-steps off the axis) broke" + at(S, m));
        MarkedPath mp = mark(P);
        c.check(static_cast<int>(mp.marked_labels().size()) == S.size() - 1,
                "marked step count must be |S|-1" + at(S, m));
        Permutation z = zigzag_permutation_of_path(P);
        c.check(z.size() == m, "zigzag witness must live in S_{max S}" + at(S, m));
        c.check(pinnacle_set(z) == S, "zigzag witness has the wrong pinnacle set" + at(S, m));
        Permutation w0 = canonical_permutation(S);
        c.check(w0.size() == min_ambient_n(S), "canonical witness length != minimal ambient size" + at(S, m));
        c.check(pinnacle_set(w0) == S, "canonical witness has the wrong pinnacle set" + at(S, m));
    }
    c.mark("enumerate_admissible");
    c.mark("path_of_pinnacle_set");
    c.mark("validate_endpoint");
    c.mark("step_counts");
    c.mark("pinnacle_set_of_path");
    c.mark("negative_regions");
    c.mark("mark");
    c.mark("zigzag_permutation_of_path");
    c.mark("canonical_permutation");
    c.mark("min_ambient_n");

    int x_max = std::min(m_max - 2, 16);
    for (int x = 1; x <= x_max; ++x) {
        Count valid = 0;
        for (std::uint32_t bits = 0; bits < (std::uint32_t(1) << x); ++bits) {
            std::vector<int> steps(x);
            for (int i = 0; i < x; ++i) steps[i] = (bits >> i) & 1u ? 1 : -1;
            LatticePath P(steps);
            if (!validate_endpoint(P)) continue;
            ++valid;
            PinnacleSet S = pinnacle_set_of_path(P);
            c.check(path_of_pinnacle_set(S) == P,
                    "path->set->path roundtrip broke at " + format_path(P));
        }
        c.check(valid == count_admissible_with_max(x + 2),
                "valid " + std::to_string(x) + "-step paths must match sets with max " +
                    std::to_string(x + 2));
    }
    c.mark("count_admissible_with_max");
}

void suite_bounds(Ctx& c) {
    CountCache cache;
    for (int n = 1; n <= c.opt.n_max; ++n) {
        for (const PinnacleSet& S : enumerate_admissible_upto(n)) {
            int d = S.size();
            if (2 * d >= n) continue;
            auto b = check_bounds(S, n, cache);
            c.check(b.lower_ok, "lower bound broke" + at(S, n));
            c.check(b.upper_ok, "upper bound broke" + at(S, n));
            bool is_min = S == PinnacleSet::minimal(d);
            c.check((b.value == b.lower) == is_min,
                    "lower-bound equality must single out the minimal set" + at(S, n));
            if (d >= 1) {
                bool is_top = is_top_block(S) && S.max() == n;
                c.check((b.value == b.upper) == is_top,
                        "upper-bound equality must single out the top block of [n]" + at(S, n));
            }
        }
    }
    c.mark("check_bounds");
    c.mark("min_count");
    c.mark("max_count");
}

// the subset transform against its closed forms for 0-2 elements
void suite_qidentities(Ctx& c) {
    CountCache cache;
    for (int n = 1; n <= c.opt.n_max; ++n) {
        c.check(q_transform(PinnacleSet(), n, cache) == pow2(n - 1),
                "empty-set transform must be 2^(n-1) at n=" + std::to_string(n));
        for (int l = 3; l <= n; ++l)
            c.check(q_transform(PinnacleSet(std::vector<int>{l}), n, cache) == pow2(n + l - 3),
                    "one-element transform identity broke" + at(PinnacleSet(std::vector<int>{l}), n));
        for (int l = 3; l <= n; ++l)
            for (int m = l + 1; m <= n; ++m) {
                PinnacleSet S(std::vector<int>{l, m});
                Count rhs = pow2(n + m - l - 3) *
                            (boost::multiprecision::pow(Count(3), unsigned(l - 1)) + 1);
                c.check(q_transform(S, n, cache) == rhs,
                        "two-element transform identity broke" + at(S, n));
            }
    }
    c.mark("q_transform");
}

// the claimed product rule p_{S+{n}}(n) = (n - 2|S|) p_S(n-1); it is false,
// and this suite documents the counterexamples
void suite_lifting(Ctx& c) {
    CountCache cache;
    for (int n = 4; n <= c.opt.n_max; ++n) {
        for (const PinnacleSet& S : enumerate_admissible_upto(n - 1)) {
            PinnacleSet T = S.with(n);
            if (!is_admissible(T)) continue;
            Count lhs = linear_count(T, n, cache);
            Count rhs = Count(n - 2 * S.size()) * linear_count(S, n - 1, cache);
            c.check(lhs == rhs, "product rule fails" + at(S, n) + ": p_" + format_set(T) + "(" +
                                    std::to_string(n) + ")=" + lhs.str() + " but (n-2|S|)p_S(n-1)=" +
                                    rhs.str());
        }
    }
}

// the minimal class maps injectively into every same-size class
void suite_injection(Ctx& c) {
    for (int n = 1; n <= std::min(c.opt.n_max, 8); ++n) {
        std::map<int, std::vector<Permutation>> minimal_class;
        for_each_permutation(n, [&](const ValueWord& w) {
            Permutation p(w);
            PinnacleSet pin = pinnacle_set(p);
            if (pin == PinnacleSet::minimal(pin.size())) minimal_class[pin.size()].push_back(p);
        });
        for (const PinnacleSet& S : enumerate_admissible_upto(n)) {
            int d = S.size();
            if (2 * d >= n) continue;
            const auto& cls = minimal_class[d];
            c.check(!cls.empty(), "minimal class is empty" + at(S, n));
            std::set<ValueWord> images;
            for (const Permutation& w : cls) {
                Permutation img = inject_minimal(w, S);
                c.check(pinnacle_set(img) == S,
                        "image of " + format_permutation(w) + " left the target class" + at(S, n));
                if (S == PinnacleSet::minimal(d))
                    c.check(img == w, "the map must fix the minimal class" + at(S, n));
                images.insert(img.word());
            }
            c.check(images.size() == cls.size(), "images collide" + at(S, n));
        }
    }
    c.mark("inject_minimal");
}

// class sizes sum to n!, the admissible-set tables agree with enumeration
// and their binomial/Catalan closed forms, and the argmax scan is faithful
void suite_sums(Ctx& c) {
    CountCache cache;
    for (int n = 1; n <= c.opt.n_max; ++n) {
        Count total = 0;
        for (const PinnacleSet& S : enumerate_admissible_upto(n))
            total += count(S, n, Method::automatic, cache);
        c.check(total == factorial(n),
                "class sizes must total n! at n=" + std::to_string(n));
    }
    c.mark("count");
    c.mark("enumerate_admissible");

    int m_top = std::max(c.opt.m_max, 12);
    AdmissibleCountTable table(m_top);
    for (int m = 0; m <= m_top; ++m) {
        Count row = 0;
        for (int d = 0; d <= m; ++d) {
            Count ct = count_admissible(m, d);
            c.check(table.at(m, d) == ct, "table and memo disagree at (" + std::to_string(m) + ";" +
                                              std::to_string(d) + ")");
            if (m >= 3 && d >= 1 && m <= 14) {
                auto sets = enumerate_admissible(m, d);
                c.check(Count(sets.size()) == ct,
                        "enumeration size disagrees at (" + std::to_string(m) + ";" +
                            std::to_string(d) + ")");
                for (const auto& S : sets)
                    c.check(S.size() == d && S.max() == m && is_admissible(S),
                            "enumerated set out of family at (" + std::to_string(m) + ";" +
                                std::to_string(d) + ")");
            }
            row += ct;
        }
        if (m >= 3)
            c.check(row == count_admissible_with_max(m),
                    "row sum must be binomial(m-2, floor(m/2)) at m=" + std::to_string(m));
    }
    for (int n = 1; n <= m_top; ++n) {
        Count cum = 1; // the empty set
        for (int m = 3; m <= n; ++m) cum += count_admissible_with_max(m);
        c.check(cum == count_admissible_upto(n),
                "cumulative count must be binomial(n-1, floor((n-1)/2)) at n=" + std::to_string(n));
        c.check(Count(enumerate_admissible_upto(n).size()) == count_admissible_upto(n),
                "cumulative enumeration size disagrees at n=" + std::to_string(n));
    }
    for (int d = 1; d <= 12; ++d)
        c.check(count_admissible(2 * d + 1, d) == catalan(d),
                "boundary value must be the Catalan number at d=" + std::to_string(d));
    c.mark("count_admissible");
    c.mark("count_admissible_with_max");
    c.mark("count_admissible_upto");

    for (int n = 2; n <= 12; ++n) {
        c.check(stirling2(n, 1) == 1 && stirling2(n, n) == 1, "partition-count edges broke");
        c.check(stirling2(n, 2) == pow2(n - 1) - 1, "S(n,2) identity broke at n=" + std::to_string(n));
        c.check(stirling2(n, n - 1) == binomial(n, 2), "S(n,n-1) identity broke at n=" + std::to_string(n));
    }
    c.mark("stirling2");

    for (int n = 4; n <= std::max(c.opt.n_max, 22); ++n) {
        auto r = d_max(n);
        Count best = max_count(n, r.d);
        bool tie = false;
        for (int e = 1; 2 * e < n; ++e) {
            Count ve = max_count(n, e);
            c.check(ve <= best, "argmax missed a larger size at n=" + std::to_string(n));
            if (e < r.d) c.check(ve < best, "argmax must be the smallest maximizer at n=" + std::to_string(n));
            if (e != r.d && ve == best) tie = true;
        }
        c.check(r.tie == tie, "tie flag is wrong at n=" + std::to_string(n));
    }
    c.mark("d_max");

    auto pl = plateau_starts(30);
    for (int n = 4; n <= 30; ++n) {
        int d0 = d_max(n).d;
        bool run4 = d_max(n + 1).d == d0 && d_max(n + 2).d == d0 && d_max(n + 3).d == d0;
        bool listed = std::find(pl.begin(), pl.end(), std::make_pair(n, d0)) != pl.end();
        c.check(run4 == listed, "plateau membership is wrong at n=" + std::to_string(n));
    }
    c.mark("plateau_starts");
}

} // namespace

std::vector<std::string> all_suites() {
    return {"engines", "bijection", "bounds", "qidentities", "lifting", "injection", "sums"};
}

std::vector<std::string> all_public_operations() {
    return {
        "descent_set",       "peak_set",         "pinnacle_set",        "standardize",
        "enumerate_permutations", "is_admissible", "min_ambient_n",     "canonical_permutation",
        "enumerate_admissible",   "count_admissible", "count_admissible_with_max",
        "count_admissible_upto",  "validate_endpoint", "step_counts",   "negative_regions",
        "mark",              "pinnacle_set_of_path", "path_of_pinnacle_set",
        "zigzag_permutation_of_path", "brute_force_count", "reduce",    "quadratic_count",
        "linear_count",      "closed_form_single", "closed_form_double", "stirling2",
        "max_count",         "min_count",        "check_bounds",        "inject_minimal",
        "d_max",             "plateau_starts",   "q_transform",         "count",
    };
}

VerifyReport run_verify(const VerifyOptions& opt) {
    VerifyReport rep;
    std::vector<std::string> wanted = opt.suites.empty() ? all_suites() : opt.suites;
    auto known = all_suites();
    for (const auto& s : wanted)
        if (std::find(known.begin(), known.end(), s) == known.end())
            throw input_error("unknown verify suite: " + s);
    Ctx c{opt, rep, ""};
    for (const auto& s : wanted) {
        c.suite = s;
        rep.suites_run.push_back(s);
        if (s == "engines")
            suite_engines(c);
        else if (s == "bijection")
            suite_bijection(c);
        else if (s == "bounds")
            suite_bounds(c);
        else if (s == "qidentities")
            suite_qidentities(c);
        else if (s == "lifting")
            suite_lifting(c);
        else if (s == "injection")
            suite_injection(c);
        else if (s == "sums")
            suite_sums(c);
    }
    return rep;
}

} // namespace pinnacle
