#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "monomial.hpp"

namespace schurkit {

// Sparse Laurent polynomial with exact integer coefficients. Terms are kept
// sorted in the canonical display order (graded-lex descending) with no zero
// coefficients, so equal polynomials have identical representations.
class LaurentPoly {
public:
    using Term = std::pair<Monomial, Int>;

    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }

    static LaurentPoly constant(Int c) {
        LaurentPoly p;
        if (c != 0) p.terms_.emplace_back(Monomial::one(), std::move(c));
        return p;
    }

    static LaurentPoly one() { return constant(1); }

    static LaurentPoly monomial(Monomial m, Int c = 1) {
        LaurentPoly p;
        if (c != 0) p.terms_.emplace_back(std::move(m), std::move(c));
        return p;
    }

    static LaurentPoly var(int v, int e = 1) { return monomial(Monomial::var(v, e)); }

    // Builds a canonical polynomial from an arbitrary term list.
    static LaurentPoly from_terms(const std::vector<Term>& terms) {
        std::map<Monomial, Int, TermOrder> acc;
        for (const auto& [m, c] : terms) acc[m] += c;
        return from_map(acc);
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    bool is_monomial() const { return terms_.size() == 1 && terms_[0].second == 1; }

    // Single-term test (any coefficient).
    bool is_single_term() const { return terms_.size() == 1; }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    const Int& coefficient(const Monomial& m) const {
        static const Int kZero = 0;
        for (const auto& [mono, c] : terms_)
            if (mono == m) return c;
        return kZero;
    }

    // Leading term in the canonical order; polynomial must be nonzero.
    const Term& leading_term() const {
        if (terms_.empty()) throw domain_error("leading term of the zero polynomial");
        return terms_.front();
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            bool take_a;
            if (i == a.terms_.size()) take_a = false;
            else if (j == b.terms_.size()) take_a = true;
            else if (a.terms_[i].first == b.terms_[j].first) {
                Int c = a.terms_[i].second + b.terms_[j].second;
                if (c != 0) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
                ++i, ++j;
                continue;
            } else {
                take_a = term_order_before(a.terms_[i].first, b.terms_[j].first);
            }
            r.terms_.push_back(take_a ? a.terms_[i++] : b.terms_[j++]);
        }
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r = a;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        // Multiply the smaller term list into the larger one.
        const LaurentPoly& s = a.terms_.size() <= b.terms_.size() ? a : b;
        const LaurentPoly& l = a.terms_.size() <= b.terms_.size() ? b : a;
        if (s.is_single_term()) {
            LaurentPoly r;
            r.terms_.reserve(l.terms_.size());
            const auto& [sm, sc] = s.terms_[0];
            for (const auto& [m, c] : l.terms_) r.terms_.emplace_back(sm * m, sc * c);
            if (!std::is_sorted(r.terms_.begin(), r.terms_.end(), term_before))
                std::sort(r.terms_.begin(), r.terms_.end(), term_before);
            return r;
        }
        std::map<Monomial, Int, TermOrder> acc;
        for (const auto& [ma, ca] : s.terms_)
            for (const auto& [mb, cb] : l.terms_) acc[ma * mb] += ca * cb;
        return from_map(acc);
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly pow(int e) const {
        if (e < 0) {
            if (!is_single_term()) throw domain_error("negative power of a non-monomial");
            const auto& [m, c] = terms_[0];
            if (c != 1 && c != -1) throw domain_error("negative power of a non-unit coefficient");
            Int rc = (c == -1 && (e % 2 != 0)) ? -1 : 1;
            return monomial(m.pow(e), rc);
        }
        LaurentPoly r = one(), base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base = (e >>= 1) > 0 ? base * base : base;
        }
        return r;
    }

    // Divides every term by monomial m (always defined in the Laurent ring).
    LaurentPoly monomial_quotient(const Monomial& m) const {
        LaurentPoly r = *this;
        Monomial inv = m.inverse();
        for (auto& [mono, c] : r.terms_) mono = mono * inv;
        // Division by a fixed monomial preserves the term order.
        return r;
    }

    // Exchanges x_i and x_j in every term.
    LaurentPoly with_swapped_vars(int i, int j) const {
        std::vector<Term> ts = terms_;
        for (auto& [m, c] : ts) m = m.with_swapped_vars(i, j);
        std::sort(ts.begin(), ts.end(), term_before);
        LaurentPoly r;
        r.terms_ = std::move(ts);
        return r;
    }

    // Renames x_t to x_{t+offset} in every term.
    LaurentPoly with_shifted_vars(int offset) const {
        std::vector<Term> ts = terms_;
        for (auto& [m, c] : ts) m = m.with_shifted_vars(offset);
        std::sort(ts.begin(), ts.end(), term_before);
        LaurentPoly r;
        r.terms_ = std::move(ts);
        return r;
    }

    // Exact image under the ring map x_v -> assignment[v] (unassigned
    // variables map to themselves). Any variable occurring with a negative
    // exponent must map to a single term with coefficient +-1, otherwise the
    // image is not a Laurent polynomial.
    LaurentPoly substitute(const std::map<int, LaurentPoly>& assignment) const {
        LaurentPoly result;
        for (const auto& [m, c] : terms_) {
            LaurentPoly term = constant(c);
            for (const auto& [var, exp] : m.exps) {
                auto it = assignment.find(var);
                if (it == assignment.end()) {
                    term *= var_power(var, exp);
                    continue;
                }
                const LaurentPoly& image = it->second;
                if (exp < 0 && !(image.is_single_term() &&
                                 (image.terms_[0].second == 1 || image.terms_[0].second == -1)))
                    throw domain_error(
                        "substitute: negative power of a non-invertible image for x" +
                        std::to_string(var));
                term *= image.pow(exp);
            }
            result += term;
        }
        return result;
    }

    // Sum of all coefficients = value at x_1 = x_2 = ... = 1.
    Int value_at_ones() const {
        Int s = 0;
        for (const auto& [m, c] : terms_) s += c;
        return s;
    }

    // Largest variable index occurring (0 for constants).
    int max_var() const {
        int v = 0;
        for (const auto& [m, c] : terms_) v = std::max(v, m.max_var());
        return v;
    }

    // True if some term has a negative exponent on x_v.
    bool has_negative_power(int v) const {
        for (const auto& [m, c] : terms_)
            if (m.exponent_of(v) < 0) return true;
        return false;
    }

    // Canonical text form: terms in canonical order, joined with " + " / " - ",
    // coefficient omitted when +-1, e.g. "x1^2*x2 - x3^-1"; "0" when zero.
    std::string text() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Int a = c < 0 ? Int(-c) : c;
            if (first) {
                if (c < 0) s += '-';
                first = false;
            } else {
                s += c < 0 ? " - " : " + ";
            }
            if (m.is_one()) {
                s += to_string(a);
            } else {
                if (a != 1) {
                    s += to_string(a);
                    s += '*';
                }
                s += m.text();
            }
        }
        return s;
    }

private:
    static bool term_before(const Term& a, const Term& b) {
        return term_order_before(a.first, b.first);
    }

    static LaurentPoly from_map(const std::map<Monomial, Int, TermOrder>& acc) {
        LaurentPoly p;
        p.terms_.reserve(acc.size());
        for (const auto& [m, c] : acc)
            if (c != 0) p.terms_.emplace_back(m, c);
        return p;
    }

    static LaurentPoly var_power(int v, int e) { return monomial(Monomial::var(v, e)); }

    std::vector<Term> terms_;
};

// Free-function spellings (thin aliases over the operators).
inline LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
inline LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
inline LaurentPoly substitute(const LaurentPoly& p, const std::map<int, LaurentPoly>& a) {
    return p.substitute(a);
}
inline LaurentPoly monomial_quotient(const LaurentPoly& p, const Monomial& m) {
    return p.monomial_quotient(m);
}

// Principal specialization x_i -> q^{i-1}, with q encoded as x1.
inline LaurentPoly principal_specialization(const LaurentPoly& p) {
    std::map<int, LaurentPoly> assignment;
    for (int v = 1; v <= p.max_var(); ++v) assignment[v] = LaurentPoly::var(1, v - 1);
    if (!assignment.empty()) assignment[1] = LaurentPoly::one();
    return p.substitute(assignment);
}

} // namespace schurkit
