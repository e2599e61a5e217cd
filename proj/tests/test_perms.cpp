#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

#include <schurkit/schurkit.hpp>

#include "property_checks.hpp"

using namespace schurkit;

namespace {

Permutation perm(std::initializer_list<int> w) { return Permutation(std::vector<int>(w)); }

} // namespace

TEST_CASE("permutation basics", "[perms]") {
    Permutation w = perm({1, 4, 3, 2});
    CHECK(w.size() == 4);
    CHECK(w(2) == 4);
    CHECK(w(7) == 7); // beyond the window: fixed
    CHECK(w.text() == "(1,4,3,2)");

    CHECK(Permutation::identity(3).is_identity());
    CHECK(Permutation::identity(0) == Permutation::identity(5));
    CHECK(Permutation::longest(4) == perm({4, 3, 2, 1}));

    SECTION("validation") {
        CHECK_THROWS_AS(perm({1, 3}), domain_error);
        CHECK_THROWS_AS(perm({2, 2, 1}), domain_error);
        CHECK_THROWS_AS(perm({0, 1}), domain_error);
    }

    SECTION("embedding stability") {
        Permutation u = perm({2, 1});
        CHECK(u == u.embedded(6));
        CHECK(u.embedded(6).trimmed().size() == 2);
        CHECK(u.embedded(6)(5) == 5);
        CHECK_THROWS_AS(perm({3, 2, 1}).embedded(2), dimension_error);
    }

    SECTION("inverse and composition") {
        Permutation u = perm({3, 1, 4, 2});
        CHECK(compose(u, u.inverse()).is_identity());
        CHECK(compose(u.inverse(), u).is_identity());
        CHECK(u.inverse() == perm({2, 4, 1, 3}));
        // (u v)(i) = u(v(i))
        Permutation v = perm({2, 3, 1});
        CHECK(compose(u, v)(1) == u(v(1)));
        CHECK(compose(u, v) == perm({1, 4, 3, 2}));
    }

    SECTION("simple transpositions, descents, ascents") {
        CHECK(perm({1, 3, 2}).times_s(1) == perm({3, 1, 2}));
        CHECK(perm({2, 1}).times_s(3) == perm({2, 1, 4, 3})); // auto-embeds
        CHECK_THROWS_AS(w.times_s(0), dimension_error);

        CHECK(perm({1, 4, 3, 2}).smallest_descent() == 2);
        CHECK(Permutation::identity(4).smallest_descent() == 0);
        CHECK(Permutation::longest(4).smallest_ascent(4) == 0);
        CHECK(perm({4, 3, 1, 2}).smallest_ascent(4) == 3);
        // ascents live in S_n: the trailing fixed point region counts
        CHECK(perm({2, 1}).smallest_ascent(4) == 2);
    }
}

TEST_CASE("length and Lehmer code", "[perms]") {
    CHECK(length(Permutation::identity(5)) == 0);
    CHECK(length(Permutation::longest(4)) == 6);
    CHECK(length(perm({1, 3, 4, 2})) == 2);

    CHECK(lehmer_code(perm({4, 2, 1, 3, 5})) == std::vector<int>{3, 1, 0, 0, 0});
    CHECK(lehmer_code(Permutation::longest(4)) == std::vector<int>{3, 2, 1, 0});
    CHECK(lehmer_code(Permutation::identity(3)) == std::vector<int>{0, 0, 0});

    // length is the sum of the code
    std::mt19937 rng(20250817u);
    for (int round = 0; round < 20; ++round) {
        Permutation w = props::random_permutation(rng, 6);
        auto code = lehmer_code(w);
        int total = 0;
        for (int c : code) total += c;
        CHECK(total == length(w));
    }
}

TEST_CASE("pattern avoidance", "[perms]") {
    CHECK_FALSE(avoids_pattern(perm({2, 1, 4, 3}), {2, 1, 4, 3}));
    CHECK(avoids_pattern(perm({4, 2, 1, 3, 5}), {1, 3, 2}));
    CHECK(avoids_pattern(Permutation::identity(4), {2, 1, 4, 3}));
    CHECK(avoids_pattern(Permutation::identity(4), {1, 3, 2}));

    CHECK(is_vexillary(perm({1, 4, 3, 2})));
    CHECK_FALSE(is_vexillary(perm({2, 1, 4, 3})));
    CHECK(is_dominant(perm({4, 2, 1, 3, 5})));
    CHECK_FALSE(is_dominant(perm({1, 3, 2})));

    // dominant permutations are vexillary (132-avoidance implies 2143-avoidance)
    std::vector<int> base{1, 2, 3, 4, 5};
    do {
        Permutation w{std::vector<int>(base)};
        if (is_dominant(w)) CHECK(is_vexillary(w));
    } while (std::next_permutation(base.begin(), base.end()));
}

TEST_CASE("vexillary shape and flag", "[perms]") {
    auto [l1, b1] = vexillary_shape_and_flag(perm({1, 3, 2}));
    CHECK(l1 == Partition({1}));
    CHECK(b1 == Flag({2}));

    auto [l2, b2] = vexillary_shape_and_flag(perm({1, 4, 3, 2}));
    CHECK(l2 == Partition({2, 1}));
    CHECK(b2 == Flag({2, 3}));

    auto [l3, b3] = vexillary_shape_and_flag(perm({3, 2, 1}));
    CHECK(l3 == Partition({2, 1}));
    CHECK(b3 == Flag({1, 2}));

    CHECK_THROWS_AS(vexillary_shape_and_flag(perm({2, 1, 4, 3})), domain_error);

    SECTION("dominant case: shape is the sorted code, flag entries are row indices") {
        Permutation w = Permutation::longest(4);
        auto [l, b] = vexillary_shape_and_flag(w);
        CHECK(l == Partition({3, 2, 1}));
        CHECK(b == Flag({1, 2, 3}));
    }
}

TEST_CASE("shift prepends fixed points", "[perms]") {
    Permutation w = perm({3, 2, 1});
    CHECK(shift(w, 0) == w);
    CHECK(shift(w, 1) == perm({1, 4, 3, 2}));
    CHECK(shift(w, 2) == perm({1, 2, 5, 4, 3}));
    CHECK(shift(shift(w, 1), 1) == shift(w, 2));
    CHECK_THROWS_AS(shift(w, -1), domain_error);

    SECTION("shifting a vexillary permutation keeps the shape, shifts the flag") {
        std::vector<int> base{1, 2, 3, 4, 5};
        do {
            Permutation w5{std::vector<int>(base)};
            if (!is_vexillary(w5) || w5.is_identity()) continue;
            auto [lam, b] = vexillary_shape_and_flag(w5);
            for (int h = 1; h <= 2; ++h) {
                auto [lam_h, b_h] = vexillary_shape_and_flag(shift(w5, h));
                REQUIRE(lam_h == lam);
                REQUIRE(b_h.size() == b.size());
                for (size_t i = 0; i < b.size(); ++i)
                    REQUIRE(b_h[i] == b[i] + h);
            }
        } while (std::next_permutation(base.begin(), base.end()));
    }
}

TEST_CASE("dominant extension", "[perms]") {
    Permutation w = perm({4, 2, 1, 3, 5});
    CHECK(extend_dominant(w, 1, 0) == perm({5, 4, 2, 1, 3, 6}));
    CHECK(extend_dominant(w, 0, 1) == perm({5, 3, 2, 1, 4, 6}));
    CHECK(extend_dominant(w, 0, 0) == w);

    SECTION("extending the longest element keeps a staircase code") {
        Permutation e = extend_dominant(Permutation::longest(3), 1, 1);
        CHECK(lehmer_code(e.trimmed()) == std::vector<int>{4, 3, 2, 1, 0});
        CHECK(e == Permutation::longest(5));
    }

    SECTION("code of the extension matches the extended shape") {
        std::vector<int> base{1, 2, 3, 4};
        do {
            Permutation w4{std::vector<int>(base)};
            if (!is_dominant(w4)) continue;
            Partition lam = dominant_shape(w4);
            for (int k = 0; k <= 2; ++k)
                for (int l = 0; l <= 2; ++l) {
                    Permutation e = extend_dominant(w4, k, l);
                    REQUIRE(is_dominant(e));
                    REQUIRE(dominant_shape(e) == staircase_extend(lam, k, l));
                }
        } while (std::next_permutation(base.begin(), base.end()));
    }

    SECTION("preconditions") {
        CHECK_THROWS_AS(extend_dominant(perm({1, 3, 2}), 1, 0), domain_error);
        CHECK_THROWS_AS(extend_dominant(w, -1, 0), domain_error);
        CHECK_THROWS_AS(extend_dominant(w, 0, -1), domain_error);
    }
}

TEST_CASE("Richardson permutations", "[perms]") {
    CHECK(is_richardson(Permutation::identity(4)));
    CHECK(is_richardson(perm({2, 1, 5, 4, 3})));
    CHECK(is_richardson(Permutation::longest(5)));
    CHECK_FALSE(is_richardson(perm({1, 3, 4, 2})));
    CHECK_FALSE(is_richardson(perm({3, 1, 2})));

    auto blocks = richardson_blocks(perm({2, 1, 5, 4, 3}));
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0] == std::pair<int, int>{0, 2});
    CHECK(blocks[1] == std::pair<int, int>{2, 3});

    // singleton blocks are the fixed points
    auto id_blocks = richardson_blocks(Permutation::identity(3));
    REQUIRE(id_blocks.size() == 3);
    CHECK(id_blocks[2] == std::pair<int, int>{2, 1});

    CHECK_THROWS_AS(richardson_blocks(perm({1, 3, 4, 2})), domain_error);

    SECTION("blocks reassemble the permutation") {
        Permutation w = perm({3, 2, 1, 4, 6, 5});
        REQUIRE(is_richardson(w));
        Permutation rebuilt = Permutation::identity(w.size());
        for (auto [offset, size] : richardson_blocks(w)) {
            Permutation block = shift(Permutation::longest(size), offset);
            rebuilt = compose(rebuilt, block.embedded(w.size()));
        }
        CHECK(rebuilt == w);
    }
}

TEST_CASE("permutation parsing", "[perms]") {
    CHECK(parse_permutation("(1,4,3,2)") == perm({1, 4, 3, 2}));
    CHECK(parse_permutation("(1432)") == perm({1, 4, 3, 2}));
    CHECK(parse_permutation("( 2, 1 )") == perm({2, 1}));
    CHECK(parse_permutation("(1)") == Permutation::identity(1));

    // multi-digit values need the comma form
    CHECK(parse_permutation("(10,9,8,7,6,5,4,3,2,1)") == Permutation::longest(10));

    CHECK_THROWS_AS(parse_permutation("1432"), usage_error);
    CHECK_THROWS_AS(parse_permutation("(14,32"), usage_error);
    CHECK_THROWS_AS(parse_permutation("(1,,2)"), usage_error);
    CHECK_THROWS_AS(parse_permutation("(1,3)"), usage_error);   // not a bijection
    CHECK_THROWS_AS(parse_permutation("(1432) x"), usage_error);

    SECTION("text round-trips") {
        std::mt19937 rng(20250817u);
        for (int round = 0; round < 20; ++round) {
            Permutation w = props::random_permutation(rng, 8);
            CHECK(parse_permutation(w.text()) == w);
        }
    }
}

TEST_CASE("exhaustive permutation properties", "[perms]") {
    std::ostringstream log;
    CHECK(props::dominant_monomial_characterization(log) == 0);
    CHECK(props::extension_code_commutation(log) == 0);
    INFO(log.str());
}
