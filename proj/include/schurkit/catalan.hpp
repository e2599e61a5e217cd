#pragma once

#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "laurent.hpp"
#include "partition.hpp"

namespace schurkit {

// Catalan number C_n = binom(2n, n) / (n + 1).
inline Int catalan(int n) {
    if (n < 0) throw domain_error("catalan: n must be >= 0");
    return divide_exact(binomial(2LL * n, n), Int(n + 1));
}

namespace detail {

// Exact integer determinant by fraction-free elimination.
inline Int integer_determinant(std::vector<std::vector<Int>> m) {
    const size_t h = m.size();
    if (h == 0) return 1;
    Int sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < h; ++k) {
        if (m[k][k] == 0) {
            size_t r = k + 1;
            while (r < h && m[r][k] == 0) ++r;
            if (r == h) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < h; ++i)
            for (size_t j = k + 1; j < h; ++j)
                m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    return sign * m[h - 1][h - 1];
}

} // namespace detail

// Hankel determinant of Catalan numbers: det(C_{n+i+j-2})_{i,j=1..h},
// with the empty determinant (h = 0) equal to 1.
inline Int catalan_hankel(int n, int h) {
    if (n < 0) throw domain_error("catalan_hankel: n must be >= 0");
    if (h < 0) throw domain_error("catalan_hankel: h must be >= 0");
    std::vector<std::vector<Int>> m(static_cast<size_t>(h), std::vector<Int>(static_cast<size_t>(h)));
    for (int i = 1; i <= h; ++i)
        for (int j = 1; j <= h; ++j)
            m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = catalan(n + i + j - 2);
    return detail::integer_determinant(std::move(m));
}

// q-Catalan polynomial (Carlitz-Riordan), in the variable x1 standing for q:
//   Cat_q(n) = sum over subdiagrams mu of the staircase (n-1, ..., 1) of
//   q^(n(n-1)/2 - |mu|).
// Cat_q(3) = 1 + 2q + q^2 + q^3; Cat_q(n) evaluates to C_n at q = 1.
inline LaurentPoly q_catalan(int n) {
    if (n < 1) throw domain_error("q_catalan: n must be >= 1");
    long long total = static_cast<long long>(n) * (n - 1) / 2;
    LaurentPoly sum = LaurentPoly::zero();
    for (const Partition& mu : subdiagrams(staircase(n))) {
        int e = static_cast<int>(total - mu.size());
        sum += LaurentPoly::monomial(e == 0 ? Monomial::one() : Monomial::var(1, e), 1);
    }
    return sum;
}

} // namespace schurkit
