#include "pinnacle/textio.hpp"

#include <algorithm>
#include <cctype>

#include "pinnacle/errors.hpp"

namespace pinnacle {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// strips one matching pair of {} or [] if present
std::string unwrap(const std::string& s) {
    if (s.size() >= 2 && ((s.front() == '{' && s.back() == '}') ||
                          (s.front() == '[' && s.back() == ']')))
        return trim(s.substr(1, s.size() - 2));
    return s;
}

int parse_int(const std::string& tok, bool allow_negative) {
    std::string t = trim(tok);
    bool neg = false;
    if (allow_negative && !t.empty() && t[0] == '-') {
        neg = true;
        t = t.substr(1);
    }
    if (t.empty() || t.size() > 9 ||
        !std::all_of(t.begin(), t.end(),
                     [](unsigned char c) { return std::isdigit(c); }))
        throw input_error("bad number: '" + tok + "'");
    int v = std::stoi(t);
    return neg ? -v : v;
}

std::vector<int> parse_list(const std::string& inner, bool allow_negative) {
    std::vector<int> out;
    std::size_t pos = 0;
    for (;;) {
        auto comma = inner.find(',', pos);
        std::string tok =
            comma == std::string::npos ? inner.substr(pos) : inner.substr(pos, comma - pos);
        out.push_back(parse_int(tok, allow_negative));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

} // namespace

PinnacleSet parse_set(const std::string& text) {
    std::string t = trim(text);
    bool braced = !t.empty() && (t.front() == '{' || t.front() == '[');
    t = unwrap(t);
    if (t.empty()) {
        if (braced) return PinnacleSet();
        throw input_error("empty set text; write {} for the empty set");
    }
    return PinnacleSet(parse_list(t, false));
}

Permutation parse_permutation(const std::string& text) {
    std::string t = unwrap(trim(text));
    if (t.empty()) throw input_error("empty permutation text");
    if (t.find(',') != std::string::npos) return Permutation(parse_list(t, false));
    // compact digit word; every letter is one digit
    ValueWord w;
    for (char ch : t) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw input_error("bad permutation text: '" + text + "'");
        w.push_back(ch - '0');
    }
    return Permutation(w);
}

LatticePath parse_path(const std::string& text) {
    std::string t = unwrap(trim(text));
    if (t.empty()) throw input_error("empty path text");
    if (t.find(',') != std::string::npos) return LatticePath(parse_list(t, true));
    std::vector<int> steps;
    for (char ch : t) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        char u = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        if (u == 'U')
            steps.push_back(1);
        else if (u == 'D')
            steps.push_back(-1);
        else
            throw input_error("bad path text: '" + text + "'");
    }
    return LatticePath(steps);
}

std::string format_set(const PinnacleSet& S) {
    std::string out = "{";
    const auto& v = S.values();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    out += '}';
    return out;
}

std::string format_permutation(const Permutation& w) {
    const ValueWord& v = w.word();
    std::string out;
    if (w.size() <= 9) {
        for (int x : v) out += static_cast<char>('0' + x);
        return out;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

std::string format_path(const LatticePath& P) {
    std::string out;
    for (int s : P.steps()) out += s > 0 ? 'U' : 'D';
    return out;
}

} // namespace pinnacle
