#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"

namespace schurkit {

// Dense matrix of Laurent polynomials, row-major.
struct PolyMatrix {
    size_t rows = 0, cols = 0;
    std::vector<LaurentPoly> entries;

    PolyMatrix() = default;
    PolyMatrix(size_t r, size_t c) : rows(r), cols(c), entries(r * c) {}

    LaurentPoly& at(size_t i, size_t j) { return entries[i * cols + j]; }
    const LaurentPoly& at(size_t i, size_t j) const { return entries[i * cols + j]; }
};

// Exact quotient a / b of Laurent polynomials, assuming b divides a. Works by
// repeated leading-term reduction in the canonical term order (which is
// compatible with multiplication, so the leading term of the remaining
// dividend is always divisible by the leading term of b when the division is
// exact). Throws internal_error if the division is not exact.
inline LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw internal_error("polynomial division by zero");
    if (a.is_zero()) return a;
    LaurentPoly rem = a, quot;
    const auto& [bm, bc] = b.leading_term();
    // In an exact division every intermediate remainder is a tail of the
    // quotient times b, so its terms never drop below a's minimal term in the
    // canonical order. Falling below it proves the division inexact.
    const Monomial a_min = a.terms().back().first;
    size_t steps = 0;
    while (!rem.is_zero()) {
        if (++steps > 1000000) throw internal_error("polynomial division did not terminate");
        const auto& [rm, rc] = rem.leading_term();
        if (term_order_before(a_min, rm))
            throw internal_error("polynomial division left a remainder");
        Int qc = schurkit::divide_exact(rc, bc); // throws if a coefficient fails to divide
        LaurentPoly qterm = LaurentPoly::monomial(rm / bm, qc);
        quot += qterm;
        rem -= qterm * b;
    }
    return quot;
}

namespace detail {

// Expansion by minors along the first remaining row, memoized on the set of
// remaining columns. Division-free; ideal for the tiny matrices (n <= 6) the
// determinantal identities produce.
inline LaurentPoly laplace_minor(const PolyMatrix& m, uint32_t colmask,
                                 std::unordered_map<uint32_t, LaurentPoly>& memo) {
    if (colmask == 0) return LaurentPoly::one();
    auto it = memo.find(colmask);
    if (it != memo.end()) return it->second;
    size_t row = m.rows - static_cast<size_t>(__builtin_popcount(colmask));
    LaurentPoly det;
    int sign = 1;
    for (size_t j = 0; j < m.cols; ++j) {
        if (!(colmask & (1u << j))) continue;
        const LaurentPoly& e = m.at(row, j);
        if (!e.is_zero()) {
            LaurentPoly sub = laplace_minor(m, colmask & ~(1u << j), memo);
            det += sign > 0 ? e * sub : -(e * sub);
        }
        sign = -sign;
    }
    memo.emplace(colmask, det);
    return det;
}

// Fraction-free elimination (Bareiss): every division is exact and asserted.
inline LaurentPoly bareiss_determinant(PolyMatrix m) {
    const size_t n = m.rows;
    int sign = 1;
    LaurentPoly prev_pivot = LaurentPoly::one();
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m.at(swap_row, k).is_zero()) ++swap_row;
            if (swap_row == n) return LaurentPoly::zero();
            for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                LaurentPoly num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = divide_exact(num, prev_pivot);
            }
            m.at(i, k) = LaurentPoly::zero();
        }
        prev_pivot = m.at(k, k);
    }
    LaurentPoly det = m.at(n - 1, n - 1);
    return sign > 0 ? det : -det;
}

} // namespace detail

// Exact determinant. Expansion by minors with memoization for sizes <= 6,
// fraction-free elimination with asserted exact divisions beyond that.
inline LaurentPoly determinant(const PolyMatrix& m) {
    if (m.rows != m.cols) throw dimension_error("determinant of a non-square matrix");
    if (m.rows == 0) return LaurentPoly::one();
    if (m.rows <= 6) {
        std::unordered_map<uint32_t, LaurentPoly> memo;
        return detail::laplace_minor(m, (1u << m.rows) - 1, memo);
    }
    return detail::bareiss_determinant(m);
}

} // namespace schurkit
