#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "partition.hpp"
#include "tableaux.hpp"

namespace schurkit {

// The two determinantal routes to an h-flagged Schur polynomial. Both express
// s^{(h)}_lambda as a monomial prefactor times an h x h LGV determinant of
// partition functions on the grid of an extended diagram:
//   plain:     grid of lambda[h-1,h-1],   A_i = (i-1, -m-h+1),
//              B_j = (lambda_1+h-1, 1-j),
//              prefactor  prod_{k<=h} x_k^{lambda_1+h-k}
//                       * prod_{r<=m} x_{h+r}^{lambda_r};
//   staircase: grid of lambda^[h-1,h-1], A_i = (i-1, -m-2h+i+1),
//              B_j = (lambda_1+2h-j-1, 1-j),
//              prefactor  prod_{k<=h} x_k^{lambda_1+2(h-k)}
//                       * prod_{r<=m} x_{h+r}^{lambda_r}.
enum class DetVariant { plain, staircase };

inline const char* variant_name(DetVariant v) {
    return v == DetVariant::plain ? "plain" : "staircase";
}

// Extended diagram whose grid hosts the determinant.
inline Partition det_grid_diagram(const Partition& lambda, int h, DetVariant variant) {
    return variant == DetVariant::plain ? extend(lambda, h - 1, h - 1)
                                        : staircase_extend(lambda, h - 1, h - 1);
}

inline std::vector<GridPoint> det_starts(const Partition& lambda, int h, DetVariant variant) {
    const int m = static_cast<int>(lambda.rows());
    std::vector<GridPoint> a;
    for (int i = 1; i <= h; ++i) {
        int y = variant == DetVariant::plain ? -m - h + 1 : -m - 2 * h + i + 1;
        a.push_back(GridPoint{i - 1, y});
    }
    return a;
}

inline std::vector<GridPoint> det_ends(const Partition& lambda, int h, DetVariant variant) {
    const int l1 = lambda.empty() ? 0 : lambda[0];
    std::vector<GridPoint> b;
    for (int j = 1; j <= h; ++j) {
        int x = variant == DetVariant::plain ? l1 + h - 1 : l1 + 2 * h - j - 1;
        b.push_back(GridPoint{x, 1 - j});
    }
    return b;
}

inline LaurentPoly det_prefactor(const Partition& lambda, int h, DetVariant variant) {
    const int l1 = lambda.empty() ? 0 : lambda[0];
    std::vector<std::pair<int, int>> factors;
    for (int k = 1; k <= h; ++k) {
        int e = variant == DetVariant::plain ? l1 + h - k : l1 + 2 * (h - k);
        factors.emplace_back(k, e);
    }
    for (size_t r = 1; r <= lambda.rows(); ++r)
        factors.emplace_back(h + static_cast<int>(r), lambda[r - 1]);
    return LaurentPoly::monomial(Monomial::from_factors(std::move(factors)));
}

// h-flagged Schur polynomial via the LGV determinant, either variant.
// Equals h_flagged_schur(lambda, h) exactly; 1 for the empty shape.
inline LaurentPoly h_flagged_via_lgv(const Partition& lambda, int h, DetVariant variant) {
    if (h < 1) throw domain_error("h_flagged_via_lgv: h must be >= 1");
    if (lambda.empty()) return LaurentPoly::one();
    WeightedGrid g(det_grid_diagram(lambda, h, variant));
    LaurentPoly det = lgv_determinant(g, det_starts(lambda, h, variant),
                                      det_ends(lambda, h, variant));
    return det_prefactor(lambda, h, variant) * det;
}

// Closed form of a determinant entry as a 1-flagged Schur polynomial over a
// shifted variable window, divided by a monomial:
//   Z(A, B) = s^{(1)}_{diagram}(x_{var_start}, ..., x_{var_start + rows})
//             / denominator.
// Indices (i, j) follow the printed worked-example layout, which is the 180
// degree rotation of the endpoint-construction matrix: printed entry (i, j)
// describes Z(A_{h+1-i}, B_{h+1-j}), carries diagram extend(lambda, j-1, i-1)
// (staircase_extend for the staircase variant), and its variable window
// starts at x_{h+1-j}. The denominator is x_{v0}^{D_1} * prod_t x_{v0+t}^{D_t}
// for D the diagram and v0 the window start.
struct OneFlaggedEntry {
    Partition diagram;
    Monomial denominator;
    int var_start = 1;

    std::string text() const {
        return "s1[" + diagram.text() + "](x" + std::to_string(var_start) + "..) / " +
               denominator.text();
    }
};

inline OneFlaggedEntry entry_as_one_flagged(const Partition& lambda, int h, int i, int j,
                                            DetVariant variant) {
    if (i < 1 || i > h || j < 1 || j > h)
        throw dimension_error("entry_as_one_flagged: index out of range");
    OneFlaggedEntry e;
    e.diagram = variant == DetVariant::plain ? extend(lambda, j - 1, i - 1)
                                             : staircase_extend(lambda, j - 1, i - 1);
    e.var_start = h + 1 - j;
    std::vector<std::pair<int, int>> factors;
    if (!e.diagram.empty()) {
        factors.emplace_back(e.var_start, e.diagram[0]);
        for (size_t t = 1; t <= e.diagram.rows(); ++t)
            factors.emplace_back(e.var_start + static_cast<int>(t), e.diagram[t - 1]);
    }
    e.denominator = Monomial::from_factors(std::move(factors));
    return e;
}

// Evaluates the closed form of an entry: the 1-flagged Schur polynomial of
// its diagram, relabeled into the entry's variable window, divided by the
// entry's monomial. Must equal the corresponding partition function.
inline LaurentPoly entry_value(const OneFlaggedEntry& e) {
    LaurentPoly s = h_flagged_schur(e.diagram, 1).with_shifted_vars(e.var_start - 1);
    return s.monomial_quotient(e.denominator);
}

// The partition function a printed entry (i, j) must reproduce.
inline LaurentPoly entry_partition_function(const Partition& lambda, int h, int i, int j,
                                            DetVariant variant) {
    WeightedGrid g(det_grid_diagram(lambda, h, variant));
    GridPoint a = det_starts(lambda, h, variant)[static_cast<size_t>(h - i)];
    GridPoint b = det_ends(lambda, h, variant)[static_cast<size_t>(h - j)];
    return partition_function(g, a, b);
}

} // namespace schurkit
