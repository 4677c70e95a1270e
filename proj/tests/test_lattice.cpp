#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "pinnacle/admissible.hpp"
#include "pinnacle/errors.hpp"
#include "pinnacle/lattice.hpp"
#include "pinnacle/perm.hpp"

using namespace pinnacle;

namespace {

LatticePath lp(std::vector<int> s) { return LatticePath(std::move(s)); }
PinnacleSet ps(std::vector<int> v) { return PinnacleSet(std::move(v)); }

// the worked figures used throughout; step lists, not strings, to keep the
// tests independent of the text layer
const std::vector<int> kLeft{-1, 1, 1, 1, -1, 1};                  // DUUUDU
const std::vector<int> kRight{-1, -1, 1, 1, 1, -1, 1};             // DDUUUDU
const std::vector<int> kLong{-1, -1, 1, -1, 1, 1, -1, 1, 1, 1,
                             -1, -1, -1, 1, 1, 1, 1, -1, -1};      // 19 steps

std::vector<LatticePath> all_paths(int x) {
    std::vector<LatticePath> out;
    for (unsigned mask = 0; mask < (1u << x); ++mask) {
        std::vector<int> s(x, -1);
        for (int b = 0; b < x; ++b)
            if (mask & (1u << b)) s[b] = 1;
        out.push_back(lp(std::move(s)));
    }
    return out;
}

} // namespace

TEST_CASE("path construction and heights") {
    CHECK(lp({1, -1}).length() == 2);
    CHECK(lp({1, -1}).heights() == std::vector<int>{0, 1, 0});
    CHECK(lp({-1, -1, 1}).endpoint_height() == -1);
    CHECK(lp({}).heights() == std::vector<int>{0});
    CHECK_THROWS_AS(lp({0}), input_error);
    CHECK_THROWS_AS(lp({2, -1}), input_error);
}

TEST_CASE("endpoint requirement alternates with parity") {
    CHECK(required_endpoint(1) == 1);
    CHECK(required_endpoint(2) == 2);
    CHECK(required_endpoint(7) == 1);
    CHECK(required_endpoint(12) == 2);

    CHECK(validate_endpoint(lp({1})));
    CHECK(validate_endpoint(lp({1, 1})));
    CHECK(validate_endpoint(lp(kLeft)));  // 6 steps, ends at 2
    CHECK(validate_endpoint(lp(kRight))); // 7 steps, ends at 1
    CHECK(validate_endpoint(lp(kLong)));  // 19 steps, ends at 1
    CHECK_FALSE(validate_endpoint(lp({-1})));
    CHECK_FALSE(validate_endpoint(lp({1, -1})));
    CHECK_FALSE(validate_endpoint(lp({})));
}

TEST_CASE("step counts are forced by the endpoint") {
    CHECK(step_counts(lp(kRight)) == std::pair<int, int>{4, 3});
    CHECK(step_counts(lp(kLeft)) == std::pair<int, int>{4, 2});
    CHECK(step_counts(lp({1})) == std::pair<int, int>{1, 0});
    for (int x = 1; x <= 10; ++x)
        for (const auto& p : all_paths(x))
            if (validate_endpoint(p))
                CHECK(step_counts(p) == std::pair<int, int>{x / 2 + 1, (x + 1) / 2 - 1});
    CHECK_THROWS_AS(step_counts(lp({-1})), input_error);
}

TEST_CASE("negative regions count down-steps leaving the axis") {
    CHECK(negative_regions(lp(kRight)) == 1);
    CHECK(negative_regions(lp(kLeft)) == 1);
    CHECK(negative_regions(lp(kLong)) == 3);
    CHECK(negative_regions(lp({1, 1, 1})) == 0);
    CHECK(negative_regions(lp({-1, 1, -1, 1, -1, 1, 1})) == 3);
}

TEST_CASE("marking the worked figures") {
    MarkedPath right = mark(lp(kRight));
    CHECK(right.marked == std::vector<int>{3, 6});
    CHECK(right.marked_labels() == std::vector<int>{4, 7});
    CHECK(right.unmarked_labels() == std::vector<int>{2, 3, 5, 6, 8});

    MarkedPath left = mark(lp(kLeft));
    CHECK(left.marked_labels() == std::vector<int>{6});

    MarkedPath lng = mark(lp(kLong));
    CHECK(lng.marked_labels() == std::vector<int>{4, 6, 12, 13, 19, 20});
}

TEST_CASE("pinnacle set of a path appends the terminal label") {
    CHECK(pinnacle_set_of_path(lp(kRight)) == ps({4, 7, 9}));
    CHECK(pinnacle_set_of_path(lp(kLeft)) == ps({6, 8}));
    CHECK(pinnacle_set_of_path(lp(kLong)) == ps({4, 6, 12, 13, 19, 20, 21}));
    // the 18-step prefix of the long figure is also a valid path
    CHECK(pinnacle_set_of_path(lp(std::vector<int>(kLong.begin(), kLong.end() - 1))) ==
          ps({4, 6, 12, 13, 19, 20}));
    CHECK(pinnacle_set_of_path(lp({1})) == ps({3}));
    CHECK_THROWS_AS(pinnacle_set_of_path(lp({-1})), input_error);
}

TEST_CASE("set cardinality is forced by endpoint and negative regions") {
    for (int x = 1; x <= 12; ++x)
        for (const auto& p : all_paths(x)) {
            if (!validate_endpoint(p)) continue;
            PinnacleSet S = pinnacle_set_of_path(p);
            CHECK(is_admissible(S));
            CHECK(S.max() == x + 2);
            CHECK(S.size() == (x + 1) / 2 - negative_regions(p));
        }
}

TEST_CASE("path reconstruction fixtures") {
    CHECK(path_of_pinnacle_set(ps({4, 7, 9})) == lp(kRight));
    CHECK(path_of_pinnacle_set(ps({6, 8})) == lp(kLeft));
    CHECK(path_of_pinnacle_set(ps({4, 6, 12, 13, 19, 20, 21})) == lp(kLong));
    CHECK(path_of_pinnacle_set(ps({3})) == lp({1}));
    CHECK_THROWS_AS(path_of_pinnacle_set(ps({})), input_error);
    CHECK_THROWS_AS(path_of_pinnacle_set(ps({2})), input_error);
    CHECK_THROWS_AS(path_of_pinnacle_set(ps({3, 4})), input_error);
}

TEST_CASE("the correspondence is a bijection on both sides") {
    // set -> path -> set, every admissible nonempty S with max <= 12
    for (int m = 3; m <= 12; ++m)
        for (int d = 1; 2 * d < m; ++d)
            for (const auto& S : enumerate_admissible(m, d)) {
                LatticePath p = path_of_pinnacle_set(S);
                CHECK(p.length() == m - 2);
                CHECK(validate_endpoint(p));
                CHECK(pinnacle_set_of_path(p) == S);
            }

    // path -> set -> path, and valid paths are exactly as numerous as sets
    for (int x = 1; x <= 12; ++x) {
        int valid = 0;
        for (const auto& p : all_paths(x)) {
            if (!validate_endpoint(p)) continue;
            ++valid;
            CHECK(path_of_pinnacle_set(pinnacle_set_of_path(p)) == p);
        }
        CHECK(Count(valid) == count_admissible_with_max(x + 2));
    }
}

TEST_CASE("paths that never dip below the axis pack their set tight") {
    for (int d = 1; d <= 5; ++d) {
        int seen = 0;
        for (const auto& S : enumerate_admissible(2 * d + 1, d)) {
            LatticePath p = path_of_pinnacle_set(S);
            auto h = p.heights();
            CHECK(*std::min_element(h.begin(), h.end()) >= 0);
            ++seen;
        }
        CHECK(Count(seen) == catalan(d));
    }
    // and conversely a dip costs cardinality
    CHECK(pinnacle_set_of_path(lp({-1, 1, 1})).size() == 1);
}

TEST_CASE("zigzag weave fixtures") {
    CHECK(zigzag_permutation_of_path(lp(kRight)).word() ==
          ValueWord{1, 4, 2, 7, 3, 9, 5, 6, 8});
    CHECK(zigzag_permutation_of_path(lp(kLeft)).word() ==
          ValueWord{1, 6, 2, 8, 3, 4, 5, 7});
}

TEST_CASE("zigzag weave realizes the set of the path") {
    for (int x = 1; x <= 10; ++x)
        for (const auto& p : all_paths(x)) {
            if (!validate_endpoint(p)) continue;
            Permutation w = zigzag_permutation_of_path(p);
            CHECK(w.size() == x + 2);
            CHECK(pinnacle_set(w) == pinnacle_set_of_path(p));
        }
}
