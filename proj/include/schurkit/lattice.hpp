#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "partition.hpp"

namespace schurkit {

// Lattice point (x, y) with x the column coordinate and y <= 0 the row
// coordinate of a diagram grid.
struct GridPoint {
    int x = 0;
    int y = 0;

    bool operator==(const GridPoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const GridPoint& o) const { return !(*this == o); }

    std::string text() const {
        return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    }
};

// The weighted grid of a Young diagram lambda, drawn in the fourth quadrant:
// the top-left corner of the diagram sits at the origin, row s of the diagram
// occupies 0 >= y >= -s. Horizontal (east) edges on the line y = -s carry
// weight x_{s+1}^{-1}; vertical (north) edges carry weight 1. Edges exist
// exactly on the boundary or interior of the diagram:
//   east  (x,-s) -> (x+1,-s)  iff x+1 <= max(lambda_s, lambda_{s+1})
//                                  (lambda_0 read as lambda_1),
//   north (x,-s) -> (x,-s+1)  iff s >= 1 and x <= lambda_s.
struct WeightedGrid {
    Partition diagram;

    explicit WeightedGrid(Partition d) : diagram(std::move(d)) {}

    int depth() const { return static_cast<int>(diagram.rows()); } // rows m; y in [-m, 0]

    // Columns available on the horizontal line y = -s.
    int row_max_x(int s) const {
        if (s < 0 || s > depth()) return -1;
        int above = s == 0 ? diagram.part(1) : diagram.part(s);
        int below = diagram.part(s + 1);
        return std::max(above, below);
    }

    bool in_grid(const GridPoint& p) const {
        return p.y <= 0 && -p.y <= depth() && p.x >= 0 && p.x <= row_max_x(-p.y);
    }

    bool has_east(const GridPoint& p) const {
        return in_grid(p) && p.x + 1 <= row_max_x(-p.y);
    }

    bool has_north(const GridPoint& p) const {
        int s = -p.y;
        return in_grid(p) && s >= 1 && p.x <= diagram.part(s);
    }

    // Weight of the east edge leaving (x, -s): x_{s+1}^{-1}.
    Monomial east_weight(const GridPoint& p) const { return Monomial::var(-p.y + 1, -1); }

    int point_count() const {
        int n = 0;
        for (int s = 0; s <= depth(); ++s) n += row_max_x(s) + 1;
        return n;
    }

    // Dense index of a grid point (row-major, top row first).
    int point_index(const GridPoint& p) const {
        int idx = 0;
        for (int s = 0; s < -p.y; ++s) idx += row_max_x(s) + 1;
        return idx + p.x;
    }
};

// Monotone (east/north) path on a grid, stored as its full point sequence.
struct LatticePath {
    std::vector<GridPoint> points;

    LaurentPoly weight(const WeightedGrid& g) const {
        Monomial w;
        for (size_t i = 0; i + 1 < points.size(); ++i)
            if (points[i + 1].y == points[i].y) w = w * g.east_weight(points[i]);
        return LaurentPoly::monomial(w);
    }

    // Bitmask of visited point indices (grids are capped at 64 points for
    // brute-force work).
    uint64_t vertex_mask(const WeightedGrid& g) const {
        uint64_t m = 0;
        for (const auto& p : points) m |= uint64_t(1) << g.point_index(p);
        return m;
    }

    std::string text() const {
        std::string s;
        for (size_t i = 0; i < points.size(); ++i) {
            if (i) s += "→"; // ->
            s += points[i].text();
        }
        return s;
    }
};

// Tuple of paths with fixed endpoints on a shared grid.
struct PathSystem {
    std::vector<LatticePath> paths;

    LaurentPoly weight(const WeightedGrid& g) const {
        LaurentPoly w = LaurentPoly::one();
        for (const auto& p : paths) w *= p.weight(g);
        return w;
    }
};

// Weighted sum over all monotone paths a -> b, by dynamic programming in
// increasing (x, then y) order. 1 when a = b, 0 when b is unreachable.
inline LaurentPoly partition_function(const WeightedGrid& g, const GridPoint& a,
                                      const GridPoint& b) {
    if (!g.in_grid(a)) throw domain_error("partition_function: start " + a.text() + " outside grid");
    if (!g.in_grid(b)) throw domain_error("partition_function: end " + b.text() + " outside grid");
    if (b.x < a.x || b.y < a.y) return LaurentPoly::zero();
    // dp indexed by (x, s = -y); propagate east and north edges forward.
    const int m = g.depth();
    std::vector<std::vector<LaurentPoly>> dp(
        static_cast<size_t>(b.x - a.x) + 1,
        std::vector<LaurentPoly>(static_cast<size_t>(m) + 1));
    auto cell = [&](int x, int y) -> LaurentPoly& {
        return dp[static_cast<size_t>(x - a.x)][static_cast<size_t>(-y)];
    };
    cell(a.x, a.y) = LaurentPoly::one();
    for (int x = a.x; x <= b.x; ++x) {
        for (int y = a.y; y <= b.y; ++y) {
            GridPoint p{x, y};
            if (!g.in_grid(p)) continue;
            const LaurentPoly& v = cell(x, y);
            if (v.is_zero()) continue;
            if (y < b.y && g.has_north(p)) cell(x, y + 1) += v;
            if (x < b.x && g.has_east(p))
                cell(x + 1, y) += v * LaurentPoly::monomial(g.east_weight(p));
        }
    }
    return cell(b.x, b.y);
}

// Prop.-style product form of the 1-flagged Schur polynomial:
//   s^{(1)}_lambda = x_1^{lambda_1} x_2^{lambda_1} x_3^{lambda_2} ...
//                    x_{m+1}^{lambda_m} * Z_lambda(A, B)
// with A the bottom-left and B the top-right corner of the grid.
inline LaurentPoly one_flagged_via_paths(const Partition& lambda) {
    if (lambda.empty()) return LaurentPoly::one();
    const int m = static_cast<int>(lambda.rows());
    WeightedGrid g(lambda);
    LaurentPoly z = partition_function(g, GridPoint{0, -m}, GridPoint{lambda[0], 0});
    std::vector<std::pair<int, int>> factors{{1, lambda[0]}};
    for (int r = 1; r <= m; ++r) factors.emplace_back(r + 1, lambda[r - 1]);
    return LaurentPoly::monomial(Monomial::from_factors(std::move(factors))) * z;
}

namespace detail {

// `at` is taken by value: recursion grows cur.points, so references into it
// would not survive the reallocation.
inline void list_paths(const WeightedGrid& g, GridPoint at, const GridPoint& b,
                       LatticePath& cur, std::vector<LatticePath>& out) {
    if (at == b) {
        out.push_back(cur);
        return;
    }
    if (at.x > b.x || at.y > b.y) return;
    if (g.has_east(at) && at.x < b.x) {
        GridPoint next{at.x + 1, at.y};
        cur.points.push_back(next);
        list_paths(g, next, b, cur, out);
        cur.points.pop_back();
    }
    if (g.has_north(at) && at.y < b.y) {
        GridPoint next{at.x, at.y + 1};
        cur.points.push_back(next);
        list_paths(g, next, b, cur, out);
        cur.points.pop_back();
    }
}

} // namespace detail

// All monotone paths a -> b (exhaustive; intended for small grids).
inline std::vector<LatticePath> enumerate_paths(const WeightedGrid& g, const GridPoint& a,
                                                const GridPoint& b) {
    if (!g.in_grid(a) || !g.in_grid(b)) throw domain_error("enumerate_paths: endpoint outside grid");
    std::vector<LatticePath> out;
    LatticePath cur;
    cur.points.push_back(a);
    detail::list_paths(g, a, b, cur, out);
    return out;
}

namespace detail {

inline void check_brute_force_size(const WeightedGrid& g) {
    if (g.point_count() > 40)
        throw usage_error("brute-force path enumeration is capped at grids with 40 lattice "
                          "points (got " + std::to_string(g.point_count()) + ")");
}

inline void collect_disjoint_systems(const WeightedGrid& g,
                                     const std::vector<std::vector<LatticePath>>& choices,
                                     size_t k, uint64_t used, PathSystem& cur,
                                     std::vector<PathSystem>& out) {
    if (k == choices.size()) {
        out.push_back(cur);
        return;
    }
    for (const auto& p : choices[k]) {
        uint64_t mask = p.vertex_mask(g);
        if (mask & used) continue;
        cur.paths.push_back(p);
        collect_disjoint_systems(g, choices, k + 1, used | mask, cur, out);
        cur.paths.pop_back();
    }
}

} // namespace detail

// All tuples of pairwise vertex-disjoint paths, path k from starts[k] to
// ends[k]. Brute force; grids capped at 40 lattice points.
inline std::vector<PathSystem> nc_path_systems(const WeightedGrid& g,
                                               const std::vector<GridPoint>& starts,
                                               const std::vector<GridPoint>& ends) {
    if (starts.size() != ends.size())
        throw dimension_error("nc_path_systems: endpoint lists differ in length");
    detail::check_brute_force_size(g);
    std::vector<std::vector<LatticePath>> choices;
    for (size_t k = 0; k < starts.size(); ++k)
        choices.push_back(enumerate_paths(g, starts[k], ends[k]));
    std::vector<PathSystem> out;
    PathSystem cur;
    detail::collect_disjoint_systems(g, choices, 0, 0, cur, out);
    return out;
}

// Weighted sum over all noncrossing path systems (brute-force LGV oracle).
inline LaurentPoly z_nc(const WeightedGrid& g, const std::vector<GridPoint>& starts,
                        const std::vector<GridPoint>& ends) {
    LaurentPoly z;
    for (const auto& sys : nc_path_systems(g, starts, ends)) z += sys.weight(g);
    return z;
}

// det(Z(A_i, B_j)): the LGV determinant. Compatibility of the endpoint family
// is the caller's obligation; the det_starts/det_ends families used in this
// library are compatible by construction.
inline LaurentPoly lgv_determinant(const WeightedGrid& g, const std::vector<GridPoint>& starts,
                                   const std::vector<GridPoint>& ends) {
    if (starts.size() != ends.size())
        throw dimension_error("lgv_determinant: endpoint lists differ in length");
    const size_t h = starts.size();
    PolyMatrix m(h, h);
    for (size_t i = 0; i < h; ++i)
        for (size_t j = 0; j < h; ++j) m.at(i, j) = partition_function(g, starts[i], ends[j]);
    return determinant(m);
}

// Tail-swap involution step of the LGV proof. Picks the path with the
// smallest index sharing a vertex with another path, its first shared vertex
// C in path order, and the smallest-index partner through C; swaps the two
// suffixes after C. Returns (i, j, modified system); i == j == SIZE_MAX when
// the system is already noncrossing.
struct TailSwapResult {
    size_t i = SIZE_MAX;
    size_t j = SIZE_MAX;
    PathSystem system;
};

inline TailSwapResult tail_swap(const PathSystem& sys) {
    const auto& paths = sys.paths;
    for (size_t i = 0; i < paths.size(); ++i) {
        for (size_t pos = 0; pos < paths[i].points.size(); ++pos) {
            const GridPoint& c = paths[i].points[pos];
            for (size_t j = 0; j < paths.size(); ++j) {
                if (j == i) continue;
                auto it = std::find(paths[j].points.begin(), paths[j].points.end(), c);
                if (it == paths[j].points.end()) continue;
                // First shared vertex of the smallest crossing index found.
                const size_t jpos = static_cast<size_t>(it - paths[j].points.begin());
                TailSwapResult r;
                r.i = i;
                r.j = j;
                r.system = sys;
                auto& pi = r.system.paths[i].points;
                auto& pj = r.system.paths[j].points;
                std::vector<GridPoint> tail_i(pi.begin() + static_cast<long>(pos) + 1, pi.end());
                std::vector<GridPoint> tail_j(pj.begin() + static_cast<long>(jpos) + 1, pj.end());
                pi.resize(pos + 1);
                pj.resize(jpos + 1);
                pi.insert(pi.end(), tail_j.begin(), tail_j.end());
                pj.insert(pj.end(), tail_i.begin(), tail_i.end());
                return r;
            }
        }
    }
    TailSwapResult r;
    r.system = sys;
    return r;
}

} // namespace schurkit
