#include "pinnacle/perm.hpp"

#include <unordered_set>

namespace pinnacle {

Permutation::Permutation(ValueWord letters) : w_(std::move(letters)) {
    int n = static_cast<int>(w_.size());
    std::vector<bool> seen(n + 1, false);
    for (int v : w_) {
        if (v < 1 || v > n || seen[v]) throw input_error("Permutation: letters must be a rearrangement of 1..n");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 0) throw input_error("Permutation::identity: negative n");
    ValueWord w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

std::vector<int> descent_positions(const ValueWord& w) {
    std::vector<int> out;
    for (int i = 1; i + 1 <= static_cast<int>(w.size()); ++i)
        if (w[i - 1] > w[i]) out.push_back(i);
    return out;
}

std::vector<int> peak_positions(const ValueWord& w) {
    std::vector<int> out;
    int n = static_cast<int>(w.size());
    for (int i = 2; i <= n - 1; ++i)
        if (w[i - 2] < w[i - 1] && w[i - 1] > w[i]) out.push_back(i);
    return out;
}

std::vector<int> descent_set(const Permutation& w) { return descent_positions(w.word()); }
std::vector<int> peak_set(const Permutation& w) { return peak_positions(w.word()); }

PinnacleSet pinnacle_set(const Permutation& w) {
    std::vector<int> vals;
    for (int i : peak_positions(w.word())) vals.push_back(w.at(i));
    return PinnacleSet(std::move(vals));
}

std::vector<int> standardize(const std::vector<int>& X, const std::vector<int>& T) {
    for (size_t i = 1; i < X.size(); ++i)
        if (X[i - 1] >= X[i]) throw input_error("standardize: X must be strictly increasing");
    std::unordered_set<int> t(T.begin(), T.end());
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(X.size()); ++i)
        if (t.count(X[i])) out.push_back(i + 1);
    return out;
}

} // namespace pinnacle
