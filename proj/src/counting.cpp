#include "pinnacle/counting.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

#include "pinnacle/admissible.hpp"
#include "pinnacle/errors.hpp"

namespace pinnacle {

namespace {

void collect_pinnacle_values(const ValueWord& w, std::vector<int>& out) {
    out.clear();
    int n = static_cast<int>(w.size());
    for (int i = 1; i + 1 < n; ++i)
        if (w[i - 1] < w[i] && w[i] > w[i + 1]) out.push_back(w[i]);
    std::sort(out.begin(), out.end());
}

bool pinnacle_values_match(const ValueWord& w, const std::vector<int>& sv,
                           std::vector<int>& scratch) {
    collect_pinnacle_values(w, scratch);
    return scratch == sv;
}

bool admissible_raw(const std::vector<int>& v) {
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] <= 2 * static_cast<int>(k + 1)) return false;
    return true;
}

} // namespace

CountCache::CountCache(const CountCache& other) {
    std::lock_guard<std::mutex> lk(other.mu_);
    m_ = other.m_;
    stats_ = other.stats_;
}

std::pair<std::vector<int>, int> CountCache::key_of(const PinnacleSet& S) {
    if (S.empty()) return {{}, 1};
    return {S.values(), S.max()};
}

std::optional<Count> CountCache::get(const PinnacleSet& S) const {
    auto k = key_of(S);
    std::lock_guard<std::mutex> lk(mu_);
    auto it = m_.find(k);
    if (it == m_.end()) {
        ++stats_.misses;
        return std::nullopt;
    }
    ++stats_.hits;
    return it->second;
}

void CountCache::put(const PinnacleSet& S, const Count& value) {
    auto k = key_of(S);
    std::lock_guard<std::mutex> lk(mu_);
    m_.emplace(std::move(k), value); // first write wins; engines agree on values
}

std::size_t CountCache::size() const {
    std::lock_guard<std::mutex> lk(mu_);
    return m_.size();
}

CacheStats CountCache::stats() const {
    std::lock_guard<std::mutex> lk(mu_);
    return stats_;
}

std::vector<std::pair<std::pair<std::vector<int>, int>, Count>> CountCache::entries() const {
    std::lock_guard<std::mutex> lk(mu_);
    return {m_.begin(), m_.end()};
}

void CountCache::save(const std::string& path) const {
    std::vector<std::string> lines;
    {
        std::lock_guard<std::mutex> lk(mu_);
        lines.reserve(m_.size());
        for (const auto& [key, val] : m_) {
            std::string s = "S=";
            for (std::size_t i = 0; i < key.first.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(key.first[i]);
            }
            s += ";n=" + std::to_string(key.second) + ";p=" + val.str();
            lines.push_back(std::move(s));
        }
    }
    std::sort(lines.begin(), lines.end());
    std::ofstream f(path);
    if (!f) throw input_error("cannot open cache file for writing: " + path);
    f << "pinnacle-count-cache v1\n";
    for (const auto& s : lines) f << s << '\n';
    f.flush();
    if (!f) throw input_error("failed writing cache file: " + path);
}

CountCache CountCache::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw input_error("cannot open cache file: " + path);
    std::string line;
    if (!std::getline(f, line) || line != "pinnacle-count-cache v1")
        throw input_error("bad cache header in " + path);
    CountCache c;
    std::string prev;
    int lineno = 1;
    auto all_digits = [](const std::string& t) {
        if (t.empty()) return false;
        for (unsigned char ch : t)
            if (!std::isdigit(ch)) return false;
        return true;
    };
    while (std::getline(f, line)) {
        ++lineno;
        auto fail = [&](const std::string& why) -> void {
            throw input_error("cache file " + path + " line " + std::to_string(lineno) +
                              ": " + why);
        };
        if (!prev.empty() && !(prev < line)) fail("entries not strictly sorted");
        if (line.rfind("S=", 0) != 0) fail("expected an S= entry");
        auto pn = line.find(";n=");
        auto pp = line.find(";p=");
        if (pn == std::string::npos || pp == std::string::npos || pp < pn)
            fail("malformed entry");
        std::string sv = line.substr(2, pn - 2);
        std::string nv = line.substr(pn + 3, pp - (pn + 3));
        std::string pv = line.substr(pp + 3);
        std::vector<int> vals;
        if (!sv.empty()) {
            std::size_t pos = 0;
            for (;;) {
                auto comma = sv.find(',', pos);
                std::string tok =
                    comma == std::string::npos ? sv.substr(pos) : sv.substr(pos, comma - pos);
                if (!all_digits(tok) || tok.size() > 9) fail("bad set element");
                vals.push_back(std::stoi(tok));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        }
        for (std::size_t i = 0; i + 1 < vals.size(); ++i)
            if (vals[i] >= vals[i + 1]) fail("set not strictly increasing");
        if (!vals.empty() && vals.front() < 1) fail("set elements must be positive");
        if (!all_digits(nv) || nv.size() > 9) fail("bad n field");
        int nn = std::stoi(nv);
        if (nn != (vals.empty() ? 1 : vals.back()))
            fail("entry not canonical (n must equal max S, or 1 for the empty set)");
        if (!all_digits(pv)) fail("bad count field");
        c.m_.emplace(std::make_pair(std::move(vals), nn), Count(pv));
        prev = std::move(line);
    }
    return c;
}

Count brute_force_count(const PinnacleSet& S, int n, const BruteForceOptions& opt) {
    if (n < 0) throw input_error("negative ambient size");
    if (n > opt.guard)
        throw guard_error("exhaustive scan limited to n <= " + std::to_string(opt.guard));
    const std::vector<int>& sv = S.values();
    if (n <= 2 || opt.jobs <= 1) {
        std::uint64_t hits = 0;
        std::vector<int> scratch;
        for_each_permutation(
            n,
            [&](const ValueWord& w) {
                if (pinnacle_values_match(w, sv, scratch)) ++hits;
            },
            opt.guard);
        return Count(hits);
    }
    int jobs = std::min(opt.jobs, n);
    std::vector<std::uint64_t> partial(jobs, 0);
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int t = 0; t < jobs; ++t) {
        threads.emplace_back([&, t] {
            std::vector<int> scratch;
            for (int first = t + 1; first <= n; first += jobs)
                for_each_permutation_with_first(
                    n, first,
                    [&](const ValueWord& w) {
                        if (pinnacle_values_match(w, sv, scratch)) ++partial[t];
                    },
                    opt.guard);
        });
    }
    for (auto& th : threads) th.join();
    std::uint64_t hits = 0;
    for (auto h : partial) hits += h;
    return Count(hits);
}

std::map<PinnacleSet, Count> brute_force_census(int n, const BruteForceOptions& opt) {
    if (n < 0) throw input_error("negative ambient size");
    if (n > opt.guard)
        throw guard_error("exhaustive scan limited to n <= " + std::to_string(opt.guard));
    auto scan = [&](int t, int jobs, std::map<std::vector<int>, std::uint64_t>& local) {
        std::vector<int> scratch;
        auto visit = [&](const ValueWord& w) {
            collect_pinnacle_values(w, scratch);
            ++local[scratch];
        };
        if (jobs <= 1)
            for_each_permutation(n, visit, opt.guard);
        else
            for (int first = t + 1; first <= n; first += jobs)
                for_each_permutation_with_first(n, first, visit, opt.guard);
    };
    std::vector<std::map<std::vector<int>, std::uint64_t>> locals;
    if (n <= 2 || opt.jobs <= 1) {
        locals.resize(1);
        scan(0, 1, locals[0]);
    } else {
        int jobs = std::min(opt.jobs, n);
        locals.resize(jobs);
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        for (int t = 0; t < jobs; ++t)
            threads.emplace_back([&, t, jobs] { scan(t, jobs, locals[t]); });
        for (auto& th : threads) th.join();
    }
    std::map<PinnacleSet, Count> out;
    for (auto& local : locals)
        for (auto& [vals, cnt] : local) out[PinnacleSet(vals)] += Count(cnt);
    return out;
}

Reduction reduce(const PinnacleSet& S, int n, int t) {
    if (n < 1 || t < 1 || t > n) throw input_error("reduction needs 1 <= t <= n");
    if (!S.empty() && t < S.max()) throw input_error("reduction needs t >= max S");
    return {pow2(n - t), t};
}

namespace {

constexpr int kQuadraticGuard = 22; // the subset loop is 2^(max S - 1) wide

Count quad_impl(const PinnacleSet& S, int n, CountCache& cache, QuadraticBreakdown* top) {
    if (n < 0) throw input_error("negative ambient size");
    if (S.empty()) return n == 0 ? Count(1) : pow2(n - 1);
    if (!is_admissible(S) || S.max() > n) return Count(0);
    int m = S.max();
    if (!top) {
        if (auto hit = cache.get(S)) return pow2(n - m) * *hit;
    }
    if (m > kQuadraticGuard)
        throw guard_error("splitting recurrence limited to max(S) <= " +
                          std::to_string(kQuadraticGuard));
    int k = m - 1; // the letters 1..m-1 get split between the two sides of m
    std::uint32_t sbits = 0;
    for (int v : S.values())
        if (v <= k) sbits |= std::uint32_t(1) << (v - 1);
    std::uint64_t nonzero = 0;
    Count acc = 0;
    std::vector<int> I, J;
    const std::uint32_t limit = std::uint32_t(1) << k;
    for (std::uint32_t mask = 1; mask + 1 < limit; ++mask) {
        I.clear();
        J.clear();
        int ra = 0, rb = 0;
        for (int v = 1; v <= k; ++v) {
            bool in_a = (mask >> (v - 1)) & 1u;
            int r = in_a ? ++ra : ++rb;
            if ((sbits >> (v - 1)) & 1u) (in_a ? I : J).push_back(r);
        }
        if (!admissible_raw(I) || !admissible_raw(J)) continue; // summand provably zero
        ++nonzero;
        acc += quad_impl(PinnacleSet(I), ra, cache, nullptr) *
               quad_impl(PinnacleSet(J), rb, cache, nullptr);
    }
    cache.put(S, acc);
    if (top) {
        top->terms_total = (std::uint64_t(1) << k) - 2;
        top->terms_nonzero = nonzero;
    }
    return pow2(n - m) * acc;
}

} // namespace

Count quadratic_count(const PinnacleSet& S, int n, CountCache& cache) {
    return quad_impl(S, n, cache, nullptr);
}

QuadraticBreakdown quadratic_count_stats(const PinnacleSet& S, int n, CountCache& cache) {
    QuadraticBreakdown b;
    b.value = quad_impl(S, n, cache, &b);
    return b;
}

Count linear_count(const PinnacleSet& S, int n, CountCache& cache) {
    if (n < 0) throw input_error("negative ambient size");
    if (S.empty()) return n == 0 ? Count(1) : pow2(n - 1);
    if (!is_admissible(S) || S.max() > n) return Count(0);
    int m = S.max();
    int d = S.size();
    if (d == 1) return closed_form_single(m, n);
    Count factor = pow2(n - m);
    if (auto hit = cache.get(S)) return factor * *hit;
    PinnacleSet S2 = S.without_max();
    Count p = Count(m - 2 * d) * linear_count(S2, m - 1, cache);
    Count tsum = 0;
    for (int j = 1; j < m; ++j) {
        if (S.contains(j)) continue;
        PinnacleSet T = S2.with(j);
        if (!is_admissible(T)) continue;
        tsum += linear_count(T, m - 1, cache);
    }
    p += 2 * tsum;
    cache.put(S, p);
    return factor * p;
}

Count closed_form_single(int l, int n) {
    if (l < 3 || l > n) throw input_error("one-element form needs 3 <= l <= n");
    return pow2(n - 2) * (pow2(l - 2) - 1);
}

Count closed_form_double(int l, int m, int n) {
    if (l < 3 || m <= l || m > n) throw input_error("two-element form needs 3 <= l < m <= n");
    Count tri = boost::multiprecision::pow(Count(3), unsigned(l - 1));
    return pow2(n + m - l - 5) * (tri - pow2(l) + 1) - pow2(n - 3) * (pow2(l - 2) - 1);
}

Count max_count(int n, int d) {
    if (d < 1 || 2 * d >= n) throw input_error("top-block count needs 1 <= d and 2d < n");
    return factorial(d) * factorial(d + 1) * pow2(n - 2 * d - 1) * stirling2(n - d, d + 1);
}

Count min_count(int n, int d) {
    if (d < 0 || 2 * d >= n) throw input_error("minimal count needs 0 <= d and 2d < n");
    return pow2(n - d - 1);
}

BoundsCheck check_bounds(const PinnacleSet& S, int n, CountCache& cache) {
    int d = S.size();
    if (2 * d >= n) throw input_error("bounds need 2|S| < n");
    if (!is_admissible(S)) throw input_error("bounds apply to admissible sets");
    if (!S.empty() && S.max() > n) throw input_error("set must fit inside [n]");
    BoundsCheck r;
    r.value = count(S, n, Method::automatic, cache);
    r.lower = min_count(n, d);
    r.upper = d == 0 ? r.lower : max_count(n, d); // no sets of size 0 besides the empty one
    r.lower_ok = r.value >= r.lower;
    r.upper_ok = r.value <= r.upper;
    return r;
}

Permutation inject_minimal(const Permutation& w, const PinnacleSet& S) {
    int n = w.size();
    int d = S.size();
    if (!is_admissible(S)) throw input_error("target set must be admissible");
    if (2 * d >= n) throw input_error("injection needs 2|S| < n");
    if (!S.empty() && S.max() > n) throw input_error("target set must fit inside [n]");
    if (!(pinnacle_set(w) == PinnacleSet::minimal(d)))
        throw input_error("source permutation must have the minimal pinnacle set");

    // parse w = u . w' . v where w' holds exactly the letters 1..2d+1
    // (just the letter 1 when d = 0), u decreasing, v increasing; all of
    // this is forced by the pinnacle set, so failures mean a logic bug
    int top = d == 0 ? 1 : 2 * d + 1;
    const ValueWord& word = w.word();
    int lo = n, hi = -1;
    for (int i = 0; i < n; ++i)
        if (word[i] <= top) {
            lo = std::min(lo, i);
            hi = std::max(hi, i);
        }
    for (int i = lo; i <= hi; ++i)
        if (word[i] > top) throw input_error("minimal-class parse failed");
    for (int i = 0; i + 1 < lo; ++i)
        if (word[i] < word[i + 1]) throw input_error("minimal-class parse failed");
    for (int i = hi + 1; i + 1 < n; ++i)
        if (word[i] > word[i + 1]) throw input_error("minimal-class parse failed");

    // valleys 1,2,4,...,2d relabel by the top-down greedy rule; admissibility
    // of S guarantees feasibility (below any c_i at most i-1 values are taken)
    std::vector<int> c;
    c.push_back(1);
    for (int i = 1; i <= d; ++i) c.push_back(2 * i);
    std::vector<int> chat(c.size());
    int upper = n + 1;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        int x = std::min(c[i], upper - 1);
        while (x >= 1 && S.contains(x)) --x;
        if (x < 1) throw input_error("valley relabeling infeasible");
        chat[i] = x;
        upper = x;
    }

    std::vector<char> used(n + 1, 0);
    for (int v : S.values()) used[v] = 1;
    for (int x : chat) used[x] = 1;
    std::vector<int> img(n + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) img[c[i]] = chat[i];
    for (int k = 1; k <= d; ++k) img[2 * k + 1] = S.values()[k - 1];
    int next = 1;
    for (int v = top + 1; v <= n; ++v) { // letters above the block keep their order
        while (used[next]) ++next;
        img[v] = next;
        used[next] = 1;
    }
    ValueWord out(n);
    for (int i = 0; i < n; ++i) out[i] = img[word[i]];
    return Permutation(out);
}

DMaxResult d_max(int n) {
    if (n < 4) throw input_error("needs n >= 4");
    DMaxResult r;
    Count best = -1;
    for (int d = 1; 2 * d < n; ++d) {
        Count v = max_count(n, d);
        if (v > best) {
            best = v;
            r.d = d;
            r.tie = false;
        } else if (v == best) {
            r.tie = true;
        }
    }
    return r;
}

std::vector<std::pair<int, int>> plateau_starts(int n_max) {
    if (n_max < 4) throw input_error("needs n_max >= 4");
    std::vector<int> dd(n_max + 4, 0);
    for (int n = 4; n <= n_max + 3; ++n) dd[n] = d_max(n).d;
    std::vector<std::pair<int, int>> out;
    for (int n = 4; n <= n_max; ++n)
        if (dd[n] == dd[n + 1] && dd[n] == dd[n + 2] && dd[n] == dd[n + 3])
            out.emplace_back(n, dd[n]);
    return out;
}

Count q_transform(const PinnacleSet& S, int n, CountCache& cache) {
    int d = S.size();
    if (d > 20) throw guard_error("subset transform limited to |S| <= 20");
    const auto& vals = S.values();
    Count acc = 0;
    std::vector<int> I;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << d); ++mask) {
        I.clear();
        for (int i = 0; i < d; ++i)
            if ((mask >> i) & 1u) I.push_back(vals[i]);
        acc += pow2(static_cast<int>(I.size())) * count(PinnacleSet(I), n, Method::automatic, cache);
    }
    return acc;
}

Count count(const PinnacleSet& S, int n, Method method, CountCache& cache,
            const BruteForceOptions& brute_opt) {
    if (method == Method::brute) return brute_force_count(S, n, brute_opt);
    if (n < 0) throw input_error("negative ambient size");
    if (S.empty()) return n == 0 ? Count(1) : pow2(n - 1);
    if (!is_admissible(S) || S.max() > n) return Count(0);
    if (method == Method::quadratic) return quadratic_count(S, n, cache);
    if (method == Method::linear) return linear_count(S, n, cache);
    int m = S.max();
    int d = S.size();
    const auto& v = S.values();
    if (d == 1) return closed_form_single(m, n);
    if (d == 2) return closed_form_double(v[0], v[1], n);
    if (v[0] == m - d + 1) return pow2(n - m) * max_count(m, d); // top block of [m]
    if (S == PinnacleSet::minimal(d)) return min_count(n, d);
    if (method == Method::closed) throw input_error("no closed form covers this set");
    return linear_count(S, n, cache);
}

} // namespace pinnacle
