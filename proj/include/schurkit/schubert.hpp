#pragma once

#include <map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"
#include "permutation.hpp"
#include "tableaux.hpp"

namespace schurkit {

// Divided difference del_i f = (f - s_i f) / (x_i - x_{i+1}), where s_i swaps
// x_i and x_{i+1}. Computed by synthetic division of the antisymmetric part,
// bucketed by the exponent of x_i: a term c*m with x_i-exponent d >= 1
// contributes c*m/x_i to the quotient and pushes c*m*x_{i+1}/x_i down to
// bucket d-1; exactness forces bucket 0 to cancel completely.
// Requires f free of negative powers of x_i and x_{i+1}.
inline LaurentPoly divided_difference(const LaurentPoly& f, int i) {
    if (i < 1) throw dimension_error("divided_difference: index must be >= 1");
    if (f.has_negative_power(i) || f.has_negative_power(i + 1))
        throw domain_error("divided_difference: negative powers of x" + std::to_string(i) +
                           " or x" + std::to_string(i + 1));
    LaurentPoly g = f - f.with_swapped_vars(i, i + 1);
    std::map<int, std::map<Monomial, Int, TermOrder>, std::greater<int>> buckets;
    for (const auto& [m, c] : g.terms()) buckets[m.exponent_of(i)][m] += c;
    std::vector<std::pair<Monomial, Int>> quotient;
    while (!buckets.empty()) {
        auto it = buckets.begin();
        const int d = it->first;
        auto level = std::move(it->second);
        buckets.erase(it);
        if (d == 0) {
            for (const auto& [m, c] : level)
                check_internal(c == 0, "divided difference: division left a remainder");
            continue;
        }
        for (const auto& [m, c] : level) {
            if (c == 0) continue;
            Monomial qm = m * Monomial::var(i, -1);
            quotient.emplace_back(qm, c);
            buckets[d - 1][qm * Monomial::var(i + 1, 1)] += c;
        }
    }
    return LaurentPoly::from_terms(quotient);
}

// Applies divided differences in the listed order: word {a, b} means
// del_b(del_a(f)).
inline LaurentPoly apply_divided_differences(LaurentPoly f, const std::vector<int>& word) {
    for (int d : word) f = divided_difference(f, d);
    return f;
}

// The staircase monomial x1^(n-1) x2^(n-2) ... x_{n-1}, i.e. the Schubert
// polynomial of the longest element of S_n.
inline LaurentPoly staircase_monomial(int n) {
    if (n < 1) throw domain_error("staircase_monomial: n must be >= 1");
    std::vector<std::pair<int, int>> factors;
    for (int k = 1; k < n; ++k) factors.emplace_back(k, n - k);
    return LaurentPoly::monomial(Monomial::from_factors(factors), 1);
}

// Schubert polynomial of w: start from the staircase monomial for the longest
// element w0 of S_n and peel one divided difference per step. With
// z = w^{-1} w0, repeatedly take the smallest descent d of z, replace the
// polynomial by del_d of it, and z by z s_d, until z is the identity; each
// step shortens z, and the d's read off a reduced word for w0 w.
inline LaurentPoly schubert_poly(const Permutation& w_in) {
    Permutation w = w_in.trimmed();
    const int n = w.size();
    if (n == 0) return LaurentPoly::one();
    LaurentPoly poly = staircase_monomial(n);
    Permutation winv = w.inverse();
    std::vector<int> zv(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) zv[static_cast<size_t>(i - 1)] = winv(n + 1 - i);
    Permutation z(std::move(zv));
    while (true) {
        int d = z.smallest_descent();
        if (d == 0) break;
        poly = divided_difference(poly, d);
        z = z.times_s(d);
    }
    return poly;
}

// Shape of a dominant (132-avoiding) permutation: its Lehmer code, which is
// weakly decreasing, read as a partition. The Schubert polynomial of a
// dominant permutation is exactly the code monomial.
inline Partition dominant_shape(const Permutation& w) {
    if (!is_dominant(w)) throw domain_error("dominant_shape: permutation is not dominant");
    std::vector<int> code = lehmer_code(w.trimmed());
    while (!code.empty() && code.back() == 0) code.pop_back();
    return Partition(std::move(code));
}

// Flagged-Schur form of a vexillary (2143-avoiding) Schubert polynomial:
// the flagged Schur polynomial of shape lambda(w) and flag b(w).
inline LaurentPoly vexillary_flagged_form(const Permutation& w) {
    auto [shape, flag] = vexillary_shape_and_flag(w);
    return flagged_schur(shape, flag);
}

} // namespace schurkit
