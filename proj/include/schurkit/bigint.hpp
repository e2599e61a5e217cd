#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "errors.hpp"

namespace schurkit {

// Arbitrary-precision signed integer. Exactness is non-negotiable: maximizer
// values and intermediate determinant coefficients exceed machine range.
using Int = boost::multiprecision::cpp_int;

inline std::string to_string(const Int& v) { return v.str(); }

// Binomial coefficient C(n, k) as an exact integer; 0 for k < 0 or k > n.
inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // always exact: r is a binomial coefficient prefix
    }
    return r;
}

// Exact integer quotient; throws internal_error if b does not divide a.
inline Int divide_exact(const Int& a, const Int& b) {
    check_internal(b != 0, "integer division by zero");
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    check_internal(r == 0, "integer division left a remainder");
    return q;
}

} // namespace schurkit
