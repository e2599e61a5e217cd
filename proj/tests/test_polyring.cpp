#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <sstream>

#include <schurkit/schurkit.hpp>

#include "property_checks.hpp"

using namespace schurkit;

namespace {

LaurentPoly x(int v, int e = 1) { return LaurentPoly::var(v, e); }

} // namespace

TEST_CASE("addition is exact and cancels to zero", "[polyring]") {
    CHECK((x(1) + x(2)).text() == "x1 + x2");
    CHECK((x(1) + (-x(1))).is_zero());
    CHECK((x(1) - x(1)).text() == "0");
    // The two one-step paths of a 1x1 grid; the x1-exponent breaks the
    // degree tie, so the x2 term leads.
    CHECK((x(1, -1) + x(2, -1)).text() == "x2^-1 + x1^-1");
}

TEST_CASE("multiplication is exact on Laurent monomials", "[polyring]") {
    LaurentPoly p = x(1) * x(2) + x(3, 2);
    CHECK(LaurentPoly::one() * p == p);
    CHECK(((x(1) + x(2)) * (x(1) - x(2))).text() == "x1^2 - x2^2");
    Monomial a = Monomial::from_factors({{1, 3}, {2, 4}});
    Monomial b = Monomial::from_factors({{1, -2}, {2, -1}});
    CHECK((a * b).text() == "x1*x2^3");
    CHECK((a / a).is_one());
    CHECK(a.pow(-1) == a.inverse());
}

TEST_CASE("canonical term order is graded lexicographic, descending", "[polyring]") {
    // Flagged Schur of (2,1) with flag (2,3), as the CLI prints it.
    LaurentPoly p = x(1, 2) * x(2) + x(1, 2) * x(3) + x(1) * x(2, 2) + x(1) * x(2) * x(3) +
                    x(2, 2) * x(3);
    CHECK(p.text() == "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3");
    CHECK(term_order_before(Monomial::from_factors({{1, 1}, {2, 2}}),
                            Monomial::from_factors({{1, 1}, {2, 1}, {3, 1}})));
    // Higher total degree always comes first.
    CHECK(term_order_before(Monomial::var(2, 3), Monomial::var(1, 2)));
    CHECK((x(2) + LaurentPoly::constant(-3) + x(1)).text() == "x1 + x2 - 3");
}

TEST_CASE("determinants of polynomial matrices are exact", "[polyring]") {
    PolyMatrix m1(1, 1);
    m1.at(0, 0) = x(1) + x(2);
    CHECK(determinant(m1) == x(1) + x(2));

    PolyMatrix m2(2, 2);
    m2.at(0, 0) = x(1);
    m2.at(0, 1) = x(2);
    m2.at(1, 0) = x(2);
    m2.at(1, 1) = x(1);
    CHECK(determinant(m2).text() == "x1^2 - x2^2");

    PolyMatrix hankel(2, 2);
    hankel.at(0, 0) = LaurentPoly::constant(5);
    hankel.at(0, 1) = LaurentPoly::constant(14);
    hankel.at(1, 0) = LaurentPoly::constant(14);
    hankel.at(1, 1) = LaurentPoly::constant(42);
    CHECK(determinant(hankel) == LaurentPoly::constant(14));

    PolyMatrix bad(2, 3);
    CHECK_THROWS_AS(determinant(bad), dimension_error);
}

TEST_CASE("large determinants fall back to exact elimination", "[polyring]") {
    // 7x7 constant matrix: the polynomial path (Bareiss) must agree with the
    // integer fraction-free elimination.
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-4, 4);
    PolyMatrix m(7, 7);
    std::vector<std::vector<Int>> ints(7, std::vector<Int>(7));
    for (size_t i = 0; i < 7; ++i)
        for (size_t j = 0; j < 7; ++j) {
            int v = d(rng);
            m.at(i, j) = LaurentPoly::constant(v);
            ints[i][j] = v;
        }
    CHECK(determinant(m) == LaurentPoly::constant(detail::integer_determinant(ints)));
}

TEST_CASE("substitution evaluates and specializes", "[polyring]") {
    LaurentPoly p = x(1, 2) * x(2);
    CHECK(p.value_at_ones() == 1);
    CHECK(principal_specialization(x(1) + x(2)) == LaurentPoly::one() + x(1));
    // Principal specialization of the Schubert polynomial of (1,4,3,2):
    // q + 2q^2 + q^3 + q^4 in q = x1.
    LaurentPoly s = schubert_poly(parse_permutation("(1,4,3,2)"));
    CHECK(principal_specialization(s).text() == "x1^4 + x1^3 + 2*x1^2 + x1");
    // Unassigned variables map to themselves.
    std::map<int, LaurentPoly> only_x1{{1, LaurentPoly::constant(1)}};
    CHECK(substitute(p, only_x1) == x(2));
    // A negative power of a non-monomial image leaves the Laurent ring.
    std::map<int, LaurentPoly> bad{{1, x(1) + x(2)}};
    CHECK_THROWS_AS(substitute(x(1, -1), bad), domain_error);
    // ... but a monomial image of a negative power is fine.
    std::map<int, LaurentPoly> mono{{1, LaurentPoly::monomial(Monomial::var(2, 3), 1)}};
    CHECK(substitute(x(1, -1), mono) == x(2, -3));
}

TEST_CASE("monomial quotients live in the Laurent ring", "[polyring]") {
    CHECK(monomial_quotient(x(1, 2) * x(2), Monomial::from_factors({{1, 1}, {2, 1}})) == x(1));
    CHECK(monomial_quotient(x(1) + x(2), Monomial::var(1)).text() == "1 + x1^-1*x2");
    CHECK(monomial_quotient(LaurentPoly::zero(), Monomial::var(1)).is_zero());
}

TEST_CASE("exact polynomial division detects remainders", "[polyring]") {
    LaurentPoly a = (x(1) + x(2)) * (x(1) - x(2)) * (x(1) + LaurentPoly::constant(3));
    CHECK(divide_exact(a, x(1) + x(2)) == (x(1) - x(2)) * (x(1) + LaurentPoly::constant(3)));
    CHECK_THROWS_AS(divide_exact(x(1) * x(2), x(1) + x(2)), internal_error);
    CHECK_THROWS_AS(divide_exact(x(1), LaurentPoly::constant(2)), internal_error);
    CHECK_THROWS_AS(divide_exact(x(1), LaurentPoly::zero()), internal_error);
}

TEST_CASE("variable reindexing maps terms exactly", "[polyring]") {
    LaurentPoly p = x(1, 2) * x(3) + x(2);
    CHECK(p.with_shifted_vars(2) == x(3, 2) * x(5) + x(4));
    CHECK(p.with_swapped_vars(1, 2) == x(2, 2) * x(3) + x(1));
    CHECK(p.with_swapped_vars(1, 2).with_swapped_vars(1, 2) == p);
}

TEST_CASE("seeded algebra properties hold", "[polyring]") {
    std::ostringstream log;
    schurkit::props::Rng rng(20250817);
    CHECK(schurkit::props::ring_axioms(rng, log) == 0);
    CHECK(schurkit::props::determinant_vs_cofactor(rng, log) == 0);
    CHECK(schurkit::props::substitute_homomorphism(rng, log) == 0);
    CHECK(schurkit::props::monomial_quotient_roundtrip(rng, log) == 0);
    INFO(log.str());
}
