#pragma once

#include <algorithm>
#include <climits>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace schurkit {

// A Laurent monomial: product of x_v^e over finitely many variables.
// Stored as (variable index, exponent) pairs sorted by variable index, with
// all exponents nonzero and all variable indices >= 1. Exponents may be
// negative (inverse path weights live here).
struct Monomial {
    std::vector<std::pair<int, int>> exps;

    Monomial() = default;

    // Builds a canonical monomial from an arbitrary factor list.
    static Monomial from_factors(std::vector<std::pair<int, int>> factors) {
        std::sort(factors.begin(), factors.end());
        Monomial m;
        for (const auto& [var, exp] : factors) {
            if (var < 1) throw domain_error("monomial variable index must be positive");
            if (exp == 0) continue;
            if (!m.exps.empty() && m.exps.back().first == var)
                m.exps.back().second += exp;
            else
                m.exps.emplace_back(var, exp);
            if (m.exps.back().second == 0) m.exps.pop_back();
        }
        return m;
    }

    static Monomial one() { return Monomial(); }

    static Monomial var(int v, int e = 1) { return from_factors({{v, e}}); }

    bool is_one() const { return exps.empty(); }

    int exponent_of(int v) const {
        for (const auto& [var, exp] : exps)
            if (var == v) return exp;
        return 0;
    }

    // Total degree (sum of exponents, negatives included).
    long long degree() const {
        long long d = 0;
        for (const auto& [var, exp] : exps) d += exp;
        return d;
    }

    // Largest variable index present (0 for the constant monomial).
    int max_var() const { return exps.empty() ? 0 : exps.back().first; }

    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        r.exps.reserve(a.exps.size() + b.exps.size());
        size_t i = 0, j = 0;
        while (i < a.exps.size() || j < b.exps.size()) {
            if (j == b.exps.size() || (i < a.exps.size() && a.exps[i].first < b.exps[j].first)) {
                r.exps.push_back(a.exps[i++]);
            } else if (i == a.exps.size() || b.exps[j].first < a.exps[i].first) {
                r.exps.push_back(b.exps[j++]);
            } else {
                int e = a.exps[i].second + b.exps[j].second;
                if (e != 0) r.exps.emplace_back(a.exps[i].first, e);
                ++i, ++j;
            }
        }
        return r;
    }

    // a / b, always defined in the Laurent ring.
    friend Monomial operator/(const Monomial& a, const Monomial& b) { return a * b.inverse(); }

    Monomial inverse() const { return pow(-1); }

    Monomial pow(int e) const {
        Monomial r;
        if (e == 0) return r;
        r.exps = exps;
        for (auto& [var, exp] : r.exps) exp *= e;
        return r;
    }

    // Exchanges the exponents of x_i and x_j.
    Monomial with_swapped_vars(int i, int j) const {
        std::vector<std::pair<int, int>> f = exps;
        for (auto& [var, exp] : f) {
            if (var == i) var = j;
            else if (var == j) var = i;
        }
        return from_factors(std::move(f));
    }

    // Renames x_t to x_{t+offset} for every variable.
    Monomial with_shifted_vars(int offset) const {
        Monomial r = *this;
        for (auto& [var, exp] : r.exps) {
            if (var + offset < 1) throw domain_error("variable shift out of range");
            var += offset;
        }
        return r;
    }

    // Canonical text form, e.g. "x1^2*x2" or "x3^-1"; "1" for the constant.
    std::string text() const {
        if (exps.empty()) return "1";
        std::string s;
        for (const auto& [var, exp] : exps) {
            if (!s.empty()) s += '*';
            s += 'x';
            s += std::to_string(var);
            if (exp != 1) {
                s += '^';
                s += std::to_string(exp);
            }
        }
        return s;
    }
};

// Canonical display/term order: graded lexicographic, descending. Higher
// total degree first; ties broken variable-by-variable from x1, higher
// exponent first. Returns true when `a` strictly precedes `b`. This is a
// total order, usable as a std::map comparator.
inline bool term_order_before(const Monomial& a, const Monomial& b) {
    long long da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    size_t i = 0, j = 0;
    while (i < a.exps.size() || j < b.exps.size()) {
        int va = i < a.exps.size() ? a.exps[i].first : INT_MAX;
        int vb = j < b.exps.size() ? b.exps[j].first : INT_MAX;
        int ea = va <= vb ? a.exps[i].second : 0;
        int eb = vb <= va ? b.exps[j].second : 0;
        if (ea != eb) return ea > eb;
        if (va <= vb) ++i;
        if (vb <= va) ++j;
    }
    return false;
}

struct TermOrder {
    bool operator()(const Monomial& a, const Monomial& b) const { return term_order_before(a, b); }
};

} // namespace schurkit
