#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "partition.hpp"

namespace schurkit {

// Semistandard filling of a Young diagram: rows weakly increase, columns
// strictly increase; paired with a Flag, row i entries are bounded by b_i.
struct FlaggedTableau {
    Partition shape;
    std::vector<std::vector<int>> entries; // entries[i] has shape.parts[i] values

    bool operator==(const FlaggedTableau& o) const {
        return shape == o.shape && entries == o.entries;
    }

    // Text format: rows '/'-separated, entries space-separated,
    // e.g. "1 1 2 2 3/2 3 3 3/3 4 4 5/5 6".
    std::string text() const {
        std::string s;
        for (size_t i = 0; i < entries.size(); ++i) {
            if (i) s += '/';
            for (size_t j = 0; j < entries[i].size(); ++j) {
                if (j) s += ' ';
                s += std::to_string(entries[i][j]);
            }
        }
        return s;
    }
};

// True iff t is semistandard and obeys the row bounds of b.
inline bool tableau_is_valid(const FlaggedTableau& t, const Flag& b) {
    if (t.entries.size() != t.shape.rows() || b.size() != t.shape.rows()) return false;
    for (size_t i = 0; i < t.entries.size(); ++i) {
        const auto& row = t.entries[i];
        if (row.size() != static_cast<size_t>(t.shape[i])) return false;
        for (size_t j = 0; j < row.size(); ++j) {
            if (row[j] < 1 || row[j] > b[i]) return false;
            if (j > 0 && row[j - 1] > row[j]) return false;
            if (i > 0 && j < t.entries[i - 1].size() && t.entries[i - 1][j] >= row[j])
                return false;
        }
    }
    return true;
}

namespace detail {

inline void fill_tableau(const Partition& lambda, const Flag& b, size_t row, size_t col,
                         FlaggedTableau& t, std::vector<FlaggedTableau>& out) {
    if (row == lambda.rows()) {
        out.push_back(t);
        return;
    }
    if (col == static_cast<size_t>(lambda[row])) {
        fill_tableau(lambda, b, row + 1, 0, t, out);
        return;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, t.entries[row][col - 1]);                    // row weak
    if (row > 0 && col < t.entries[row - 1].size())
        lo = std::max(lo, t.entries[row - 1][col] + 1);                          // column strict
    for (int v = lo; v <= b[row]; ++v) {
        t.entries[row].push_back(v);
        fill_tableau(lambda, b, row, col + 1, t, out);
        t.entries[row].pop_back();
    }
}

} // namespace detail

// Complete, duplicate-free enumeration of the flagged tableaux of shape
// lambda with row bounds b, in row-reading lexicographic order.
inline std::vector<FlaggedTableau> enumerate_tableaux(const Partition& lambda, const Flag& b) {
    if (b.size() != lambda.rows())
        throw dimension_error("enumerate_tableaux: flag length " + std::to_string(b.size()) +
                              " does not match " + std::to_string(lambda.rows()) + " rows");
    std::vector<FlaggedTableau> out;
    FlaggedTableau t;
    t.shape = lambda;
    t.entries.assign(lambda.rows(), {});
    detail::fill_tableau(lambda, b, 0, 0, t, out);
    return out;
}

// Content monomial M(T) = prod_k x_k^{multiplicity of k in T}.
inline LaurentPoly weight_monomial(const FlaggedTableau& t) {
    std::vector<std::pair<int, int>> factors;
    for (const auto& row : t.entries)
        for (int v : row) factors.emplace_back(v, 1);
    return LaurentPoly::monomial(Monomial::from_factors(std::move(factors)));
}

// Flagged Schur polynomial: sum of content monomials over all flagged
// tableaux of shape lambda with bounds b. 1 for the empty shape, 0 when the
// tableau set is empty.
inline LaurentPoly flagged_schur(const Partition& lambda, const Flag& b) {
    LaurentPoly s;
    for (const auto& t : enumerate_tableaux(lambda, b)) s += weight_monomial(t);
    return s;
}

// h-flagged Schur polynomial: bounds b_i = h + i.
inline LaurentPoly h_flagged_schur(const Partition& lambda, int h) {
    if (h < 1) throw domain_error("h_flagged_schur: h must be >= 1");
    return flagged_schur(lambda, h_flag(lambda.rows(), h));
}

// Complete homogeneous symmetric polynomial h_d in variables x_1..x_k;
// h_0 = 1, h_d = 0 for d < 0, and h_d = 0 for d > 0 with k = 0.
inline LaurentPoly complete_homogeneous(int d, int k) {
    if (d < 0) return LaurentPoly::zero();
    if (d == 0) return LaurentPoly::one();
    if (k <= 0) return LaurentPoly::zero();
    // Multisets 1 <= i_1 <= ... <= i_d <= k, built iteratively.
    std::vector<LaurentPoly::Term> terms;
    std::vector<int> idx(d, 1);
    while (true) {
        std::vector<std::pair<int, int>> factors;
        for (int v : idx) factors.emplace_back(v, 1);
        terms.emplace_back(Monomial::from_factors(std::move(factors)), 1);
        int p = d - 1;
        while (p >= 0 && idx[p] == k) --p;
        if (p < 0) break;
        int v = idx[p] + 1;
        for (int q = p; q < d; ++q) idx[q] = v;
    }
    return LaurentPoly::from_terms(terms);
}

// Generalized Jacobi-Trudi determinant: det(h_{lambda_i - i + j}(b_i)).
inline LaurentPoly jacobi_trudi(const Partition& lambda, const Flag& b) {
    if (b.size() != lambda.rows())
        throw dimension_error("jacobi_trudi: flag length does not match row count");
    const size_t m = lambda.rows();
    PolyMatrix mat(m, m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            mat.at(i, j) = complete_homogeneous(
                lambda[i] - static_cast<int>(i) + static_cast<int>(j), b[i]);
    return determinant(mat);
}

// Replaces each entry t_ij of an h-flagged tableau by h + i - t_ij, giving a
// plane partition (weakly decreasing rows and columns, entries in [0, h]).
inline std::vector<std::vector<int>> to_plane_partition(const FlaggedTableau& t, int h) {
    std::vector<std::vector<int>> pp(t.entries.size());
    for (size_t i = 0; i < t.entries.size(); ++i) {
        pp[i].reserve(t.entries[i].size());
        for (int v : t.entries[i]) {
            int e = h + static_cast<int>(i) + 1 - v; // rows are 1-based in the defining rule
            if (e < 0)
                throw domain_error("to_plane_partition: entry violates the h-flag bound");
            pp[i].push_back(e);
        }
    }
    return pp;
}

// Inverse of to_plane_partition.
inline FlaggedTableau from_plane_partition(const std::vector<std::vector<int>>& pp,
                                           const Partition& shape, int h) {
    FlaggedTableau t;
    t.shape = shape;
    t.entries.resize(pp.size());
    for (size_t i = 0; i < pp.size(); ++i) {
        t.entries[i].reserve(pp[i].size());
        for (int e : pp[i]) {
            if (e < 0 || e > h) throw domain_error("from_plane_partition: entry out of [0,h]");
            t.entries[i].push_back(h + static_cast<int>(i) + 1 - e);
        }
    }
    return t;
}

} // namespace schurkit
