#pragma once

#include <algorithm>
#include <chrono>
#include <thread>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "permutation.hpp"
#include "schubert.hpp"

namespace schurkit {

// Result of a full sweep of Schubert polynomial evaluations at
// x1 = x2 = ... = 1 over S_n.
struct SearchReport {
    int n = 0;
    Int max_value = 0;
    std::vector<Permutation> argmax; // lexicographically sorted, ambient size n
    bool all_argmax_richardson = false;
    long long runtime_ms = 0;
};

namespace detail {

struct SubtreeResult {
    Int max_value = 0;
    std::vector<Permutation> argmax;
};

inline void record_value(const Permutation& v, const Int& val, SubtreeResult& r) {
    if (val > r.max_value) {
        r.max_value = val;
        r.argmax.clear();
        r.argmax.push_back(v);
    } else if (val == r.max_value) {
        r.argmax.push_back(v);
    }
}

// Spanning tree of S_n rooted at the longest element: the canonical parent of
// any u below the root is u s_a with a the smallest ascent of u, so v s_d is
// a child of v exactly when d is a descent of v that becomes the smallest
// ascent of v s_d. Walking an edge applies one divided difference, so every
// Schubert polynomial of S_n is produced by exactly n! - 1 applications.
inline void search_dfs(const Permutation& v, const LaurentPoly& poly, int n, SubtreeResult& r) {
    record_value(v, poly.value_at_ones(), r);
    for (int d = 1; d < n; ++d) {
        if (v(d) <= v(d + 1)) continue;
        Permutation c = v.times_s(d);
        if (c.smallest_ascent(n) != d) continue;
        search_dfs(c, divided_difference(poly, d), n, r);
    }
}

inline void merge(SubtreeResult& into, SubtreeResult&& part) {
    if (part.max_value > into.max_value) {
        into.max_value = std::move(part.max_value);
        into.argmax = std::move(part.argmax);
    } else if (part.max_value == into.max_value) {
        into.argmax.insert(into.argmax.end(), part.argmax.begin(), part.argmax.end());
    }
}

} // namespace detail

// Maximizes the Schubert polynomial evaluation at x = (1, 1, ...) over S_n
// and reports every maximizer. The sweep costs one divided difference per
// permutation; anything past n = 7 is refused unless budget_override is set
// (n = 8 is a stretch target, n >= 9 is a long-run job measured in hours).
inline SearchReport max_search(int n, int threads = 1, bool budget_override = false) {
    if (n < 1) throw domain_error("max_search: n must be >= 1");
    if (n >= 8 && !budget_override)
        throw budget_error("max_search: n = " + std::to_string(n) +
                           " sweeps all n! Schubert polynomials and exceeds the default budget; "
                           "pass the budget override to confirm");
    if (threads < 1) threads = 1;

    const auto t0 = std::chrono::steady_clock::now();
    detail::SubtreeResult total;
    Permutation root = Permutation::longest(n);
    LaurentPoly root_poly = staircase_monomial(n);
    detail::record_value(root, root_poly.value_at_ones(), total);

    // Peel two tree levels serially and hand the grandchild subtrees out as
    // independent tasks; results are merged in task order, and the argmax
    // list is sorted afterwards, so the outcome never depends on scheduling.
    std::vector<std::pair<Permutation, LaurentPoly>> tasks;
    for (int d1 = 1; d1 < n; ++d1) {
        if (root(d1) <= root(d1 + 1)) continue;
        Permutation c1 = root.times_s(d1);
        if (c1.smallest_ascent(n) != d1) continue;
        LaurentPoly p1 = divided_difference(root_poly, d1);
        detail::record_value(c1, p1.value_at_ones(), total);
        for (int d2 = 1; d2 < n; ++d2) {
            if (c1(d2) <= c1(d2 + 1)) continue;
            Permutation c2 = c1.times_s(d2);
            if (c2.smallest_ascent(n) != d2) continue;
            tasks.emplace_back(std::move(c2), divided_difference(p1, d2));
        }
    }

    std::vector<detail::SubtreeResult> results(tasks.size());
    if (threads == 1 || tasks.size() <= 1) {
        for (size_t t = 0; t < tasks.size(); ++t)
            detail::search_dfs(tasks[t].first, tasks[t].second, n, results[t]);
    } else {
        size_t nthreads = std::min<size_t>(static_cast<size_t>(threads), tasks.size());
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (size_t w = 0; w < nthreads; ++w) {
            pool.emplace_back([&, w] {
                for (size_t t = w; t < tasks.size(); t += nthreads)
                    detail::search_dfs(tasks[t].first, tasks[t].second, n, results[t]);
            });
        }
        for (auto& th : pool) th.join();
    }
    for (auto& part : results) detail::merge(total, std::move(part));

    SearchReport report;
    report.n = n;
    report.max_value = std::move(total.max_value);
    report.argmax.reserve(total.argmax.size());
    for (auto& w : total.argmax) report.argmax.push_back(w.embedded(n));
    std::sort(report.argmax.begin(), report.argmax.end(),
              [](const Permutation& a, const Permutation& b) { return a.oneline < b.oneline; });
    report.all_argmax_richardson =
        std::all_of(report.argmax.begin(), report.argmax.end(),
                    [](const Permutation& w) { return is_richardson(w); });
    report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    return report;
}

} // namespace schurkit
