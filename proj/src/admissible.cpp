#include "pinnacle/admissible.hpp"

#include <algorithm>
#include <mutex>

#include "pinnacle/errors.hpp"

namespace pinnacle {

PinnacleSet::PinnacleSet(std::vector<int> values) : s_(std::move(values)) {
    std::sort(s_.begin(), s_.end());
    for (size_t i = 0; i < s_.size(); ++i) {
        if (s_[i] < 1) throw input_error("PinnacleSet: values must be >= 1");
        if (i > 0 && s_[i] == s_[i - 1]) throw input_error("PinnacleSet: duplicate value");
    }
}

PinnacleSet PinnacleSet::minimal(int d) {
    if (d < 0) throw input_error("PinnacleSet::minimal: negative size");
    std::vector<int> v;
    for (int k = 1; k <= d; ++k) v.push_back(2 * k + 1);
    return PinnacleSet(std::move(v));
}

int PinnacleSet::max() const {
    if (s_.empty()) throw input_error("PinnacleSet::max: empty set");
    return s_.back();
}

bool PinnacleSet::contains(int v) const {
    return std::binary_search(s_.begin(), s_.end(), v);
}

PinnacleSet PinnacleSet::without_max() const {
    if (s_.empty()) throw input_error("PinnacleSet::without_max: empty set");
    return PinnacleSet(std::vector<int>(s_.begin(), s_.end() - 1));
}

PinnacleSet PinnacleSet::with(int v) const {
    if (contains(v)) throw input_error("PinnacleSet::with: value already present");
    auto c = s_;
    c.push_back(v);
    return PinnacleSet(std::move(c));
}

bool is_admissible(const PinnacleSet& S) {
    const auto& s = S.values();
    for (int k = 1; k <= static_cast<int>(s.size()); ++k)
        if (s[k - 1] <= 2 * k) return false;
    return true;
}

int min_ambient_n(const PinnacleSet& S) {
    if (!is_admissible(S)) throw input_error("min_ambient_n: set is not admissible");
    return S.empty() ? 1 : S.max();
}

Permutation canonical_permutation(const PinnacleSet& S) {
    if (S.empty()) throw input_error("canonical_permutation: empty set has no canonical witness");
    if (!is_admissible(S)) throw input_error("canonical_permutation: set is not admissible");
    int m = S.max();
    int d = S.size();
    ValueWord w(m, 0);
    for (int j = 1; j <= d; ++j) w[2 * j - 1] = S.values()[j - 1]; // position 2j, 1-based
    int t = 1;
    for (int i = 0; i < m; ++i) {
        if (w[i] != 0) continue;
        while (S.contains(t)) ++t;
        w[i] = t++;
    }
    return Permutation(std::move(w));
}

namespace {

void enumerate_rec(int m, int d, int next_index, int min_value, std::vector<int>& cur,
                   std::vector<PinnacleSet>& out) {
    // cur holds the first next_index-1 elements; element k must exceed 2k and stay below m
    if (next_index == d) {
        auto full = cur;
        full.push_back(m);
        out.push_back(PinnacleSet(std::move(full)));
        return;
    }
    for (int v = std::max(min_value, 2 * next_index + 1); v < m; ++v) {
        cur.push_back(v);
        enumerate_rec(m, d, next_index + 1, v + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<PinnacleSet> enumerate_admissible(int m, int d) {
    std::vector<PinnacleSet> out;
    if (d < 1 || m <= 2 * d) return out;
    std::vector<int> cur;
    enumerate_rec(m, d, 1, 3, cur, out);
    return out;
}

std::vector<PinnacleSet> enumerate_admissible_upto(int n) {
    std::vector<PinnacleSet> out;
    out.push_back(PinnacleSet{});
    for (int m = 3; m <= n; ++m)
        for (int d = 1; 2 * d < m; ++d)
            for (auto& S : enumerate_admissible(m, d)) out.push_back(std::move(S));
    return out;
}

AdmissibleCountTable::AdmissibleCountTable(int max_m) : max_m_(max_m) {
    if (max_m < 0) throw input_error("AdmissibleCountTable: negative max_m");
    t_.assign(max_m + 1, {});
    for (int m = 0; m <= max_m; ++m) {
        int dmax = m / 2;
        t_[m].assign(dmax + 1, Count(0));
        for (int d = 0; d <= dmax; ++d) {
            if (d == 0) {
                t_[m][d] = (m == 0) ? 1 : 0;
            } else if (m > 2 * d) {
                Count sum = 0;
                for (int k = 0; k < m; ++k)
                    if (d - 1 < static_cast<int>(t_[k].size())) sum += t_[k][d - 1];
                t_[m][d] = sum;
            }
        }
    }
}

Count AdmissibleCountTable::at(int m, int d) const {
    if (m < 0 || m > max_m_ || d < 0 || d >= static_cast<int>(t_[m].size())) return 0;
    return t_[m][d];
}

Count AdmissibleCountTable::row_sum(int m) const {
    Count s = 0;
    if (m < 0 || m > max_m_) return s;
    for (int d = 1; d < static_cast<int>(t_[m].size()); ++d) s += t_[m][d];
    return s;
}

Count count_admissible(int m, int d) {
    if (m < 0 || d < 0) return 0;
    static AdmissibleCountTable* table = nullptr;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (!table || table->max_m() < m) {
        auto* grown = new AdmissibleCountTable(std::max(m, table ? 2 * table->max_m() : 32));
        delete table;
        table = grown;
    }
    return table->at(m, d);
}

Count count_admissible_with_max(int m) {
    if (m < 3) return 0;
    return binomial(m - 2, m / 2);
}

Count count_admissible_upto(int n) {
    if (n < 1) throw input_error("count_admissible_upto: n must be >= 1");
    return binomial(n - 1, (n - 1) / 2);
}

} // namespace pinnacle
