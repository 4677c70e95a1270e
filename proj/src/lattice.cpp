#include "pinnacle/lattice.hpp"

#include <algorithm>

#include "pinnacle/admissible.hpp"
#include "pinnacle/errors.hpp"

namespace pinnacle {

LatticePath::LatticePath(std::vector<int> steps) : steps_(std::move(steps)) {
    for (int s : steps_)
        if (s != 1 && s != -1) throw input_error("LatticePath: steps must be +1 or -1");
}

std::vector<int> LatticePath::heights() const {
    std::vector<int> h(steps_.size() + 1, 0);
    for (size_t i = 0; i < steps_.size(); ++i) h[i + 1] = h[i] + steps_[i];
    return h;
}

int LatticePath::endpoint_height() const {
    int h = 0;
    for (int s : steps_) h += s;
    return h;
}

int required_endpoint(int x) { return (x % 2 != 0) ? 1 : 2; }

bool validate_endpoint(const LatticePath& p) {
    return p.length() >= 1 && p.endpoint_height() == required_endpoint(p.length());
}

std::pair<int, int> step_counts(const LatticePath& p) {
    if (!validate_endpoint(p)) throw input_error("step_counts: path does not end at the required height");
    int ups = 0;
    for (int s : p.steps())
        if (s == 1) ++ups;
    return {ups, p.length() - ups};
}

int negative_regions(const LatticePath& p) {
    int h = 0, neg = 0;
    for (int s : p.steps()) {
        if (s == -1 && h == 0) ++neg;
        h += s;
    }
    return neg;
}

MarkedPath mark(const LatticePath& p) {
    MarkedPath mp{p, {}};
    auto h = p.heights();
    for (int i = 1; i <= p.length(); ++i) {
        int step = p.steps()[i - 1];
        if ((step == -1 && h[i] >= 0) || (step == 1 && h[i] <= -1)) mp.marked.push_back(i);
    }
    return mp;
}

std::vector<int> MarkedPath::marked_labels() const {
    std::vector<int> out;
    for (int i : marked) out.push_back(i + 1);
    return out;
}

std::vector<int> MarkedPath::unmarked_labels() const {
    std::vector<int> out;
    size_t j = 0;
    for (int i = 1; i <= path.length(); ++i) {
        if (j < marked.size() && marked[j] == i) {
            ++j;
        } else {
            out.push_back(i + 1);
        }
    }
    return out;
}

PinnacleSet pinnacle_set_of_path(const LatticePath& p) {
    if (!validate_endpoint(p)) throw input_error("pinnacle_set_of_path: path does not end at the required height");
    auto labels = mark(p).marked_labels();
    labels.push_back(p.length() + 2);
    return PinnacleSet(std::move(labels));
}

LatticePath path_of_pinnacle_set(const PinnacleSet& S) {
    if (S.empty()) throw input_error("path_of_pinnacle_set: the empty set has no path (no maximum)");
    if (!is_admissible(S)) throw input_error("path_of_pinnacle_set: set is not admissible");
    int m = S.max();
    std::vector<int> rest(S.values().begin(), S.values().end() - 1);
    // heights right to left, starting at the endpoint (m-2, required_endpoint(m))
    std::vector<int> ys;
    ys.push_back(required_endpoint(m));
    for (int i = 1; i <= m - 2; ++i) {
        int prev = ys.back();
        bool hit = !rest.empty() && rest.back() == m - i;
        int next;
        if (hit) {
            rest.pop_back();
            next = (prev >= 0) ? prev + 1 : prev - 1; // move away from y = -1/2
        } else {
            next = (prev >= 0) ? prev - 1 : prev + 1; // move toward / across it
        }
        ys.push_back(next);
    }
    std::reverse(ys.begin(), ys.end());
    if (ys.front() != 0) throw input_error("path_of_pinnacle_set: construction did not return to the origin");
    std::vector<int> steps;
    for (size_t i = 0; i + 1 < ys.size(); ++i) steps.push_back(ys[i + 1] - ys[i]);
    return LatticePath(std::move(steps));
}

Permutation zigzag_permutation_of_path(const LatticePath& p) {
    auto M = pinnacle_set_of_path(p).values();
    auto mp = mark(p);
    std::vector<int> U;
    U.push_back(1);
    for (int label : mp.unmarked_labels()) U.push_back(label);
    ValueWord w;
    for (size_t i = 0; i < U.size(); ++i) {
        w.push_back(U[i]);
        if (i < M.size()) w.push_back(M[i]);
    }
    return Permutation(std::move(w));
}

} // namespace pinnacle
