#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace schurkit {

// Permutation of {1..n} in one-line notation, stable under the embedding
// that appends fixed points: equality and ordering compare the trimmed form
// (trailing fixed points dropped).
struct Permutation {
    std::vector<int> oneline;

    Permutation() = default;
    explicit Permutation(std::vector<int> w) : oneline(std::move(w)) {
        std::vector<bool> seen(oneline.size() + 1, false);
        for (int v : oneline) {
            if (v < 1 || v > static_cast<int>(oneline.size()) || seen[v])
                throw domain_error("permutation: not a bijection of {1..n}");
            seen[v] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> w(static_cast<size_t>(std::max(n, 0)));
        std::iota(w.begin(), w.end(), 1);
        return Permutation(std::move(w));
    }

    // Longest element of S_n: (n, n-1, ..., 1).
    static Permutation longest(int n) {
        std::vector<int> w(static_cast<size_t>(std::max(n, 0)));
        for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = n - i;
        return Permutation(std::move(w));
    }

    int size() const { return static_cast<int>(oneline.size()); }

    // Image of i (1-based); i beyond the stored window is fixed.
    int operator()(int i) const {
        return i >= 1 && i <= size() ? oneline[static_cast<size_t>(i - 1)] : i;
    }

    bool is_identity() const {
        for (int i = 1; i <= size(); ++i)
            if ((*this)(i) != i) return false;
        return true;
    }

    // Copy with trailing fixed points dropped.
    Permutation trimmed() const {
        std::vector<int> w = oneline;
        while (!w.empty() && w.back() == static_cast<int>(w.size())) w.pop_back();
        Permutation p;
        p.oneline = std::move(w); // already validated
        return p;
    }

    // Copy embedded into S_n (n >= current trimmed size) by appending fixed points.
    Permutation embedded(int n) const {
        std::vector<int> w = oneline;
        if (static_cast<int>(w.size()) > n) {
            Permutation t = trimmed();
            if (t.size() > n) throw dimension_error("permutation does not fit in S_n");
            w = std::move(t.oneline);
        }
        while (static_cast<int>(w.size()) < n) w.push_back(static_cast<int>(w.size()) + 1);
        Permutation p;
        p.oneline = std::move(w);
        return p;
    }

    bool operator==(const Permutation& o) const {
        return trimmed().oneline == o.trimmed().oneline;
    }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const {
        return trimmed().oneline < o.trimmed().oneline;
    }

    Permutation inverse() const {
        std::vector<int> w(oneline.size());
        for (int i = 1; i <= size(); ++i) w[static_cast<size_t>((*this)(i) - 1)] = i;
        Permutation p;
        p.oneline = std::move(w);
        return p;
    }

    // Right product with the simple transposition s_d: swaps positions d, d+1.
    Permutation times_s(int d) const {
        if (d < 1) throw dimension_error("simple transposition index must be >= 1");
        Permutation p = embedded(std::max(size(), d + 1));
        std::swap(p.oneline[static_cast<size_t>(d - 1)], p.oneline[static_cast<size_t>(d)]);
        return p;
    }

    // Smallest d with w(d) > w(d+1); 0 if none (identity).
    int smallest_descent() const {
        for (int d = 1; d < size(); ++d)
            if ((*this)(d) > (*this)(d + 1)) return d;
        return 0;
    }

    // Smallest d with w(d) < w(d+1) within S_n; 0 if none (longest element).
    int smallest_ascent(int n) const {
        for (int d = 1; d < n; ++d)
            if ((*this)(d) < (*this)(d + 1)) return d;
        return 0;
    }

    // Canonical text form "(1,4,3,2)".
    std::string text() const {
        std::string s = "(";
        for (size_t i = 0; i < oneline.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(oneline[i]);
        }
        return s + ")";
    }
};

// Composition (u v)(i) = u(v(i)).
inline Permutation compose(const Permutation& u, const Permutation& v) {
    int n = std::max(u.size(), v.size());
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) w[static_cast<size_t>(i - 1)] = u(v(i));
    return Permutation(std::move(w));
}

// Inversion count #{(i,j): i < j, w(i) > w(j)}.
inline int length(const Permutation& w) {
    int n = w.size(), len = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w(i) > w(j)) ++len;
    return len;
}

// Lehmer code c_i = #{j > i : w(j) < w(i)}, trailing zeros kept (one entry
// per position of the stored one-line form).
inline std::vector<int> lehmer_code(const Permutation& w) {
    int n = w.size();
    std::vector<int> c(static_cast<size_t>(n), 0);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w(j) < w(i)) ++c[static_cast<size_t>(i - 1)];
    return c;
}

// True iff no index subsequence of w realizes the pattern (given in one-line
// notation, e.g. {1,3,2} or {2,1,4,3}). Depth-first search with pruning;
// patterns here have length 3 or 4 and n stays small.
inline bool avoids_pattern(const Permutation& w, const std::vector<int>& pattern) {
    const int n = w.size(), k = static_cast<int>(pattern.size());
    std::vector<int> chosen;
    bool found = false;
    auto consistent = [&](int next) {
        int m = static_cast<int>(chosen.size());
        for (int a = 0; a < m; ++a) {
            bool want = pattern[static_cast<size_t>(a)] < pattern[static_cast<size_t>(m)];
            bool have = w(chosen[static_cast<size_t>(a)]) < w(next);
            if (want != have) return false;
        }
        return true;
    };
    std::function<void(int)> go = [&](int start) {
        if (found) return;
        if (static_cast<int>(chosen.size()) == k) {
            found = true;
            return;
        }
        for (int i = start; i <= n; ++i) {
            if (!consistent(i)) continue;
            chosen.push_back(i);
            go(i + 1);
            chosen.pop_back();
            if (found) return;
        }
    };
    go(1);
    return !found;
}

inline bool is_vexillary(const Permutation& w) { return avoids_pattern(w, {2, 1, 4, 3}); }
inline bool is_dominant(const Permutation& w) { return avoids_pattern(w, {1, 3, 2}); }

// Shape and flag of a vexillary permutation: lambda(w) = Lehmer code sorted
// decreasingly (zeros dropped); b(w) = (min I_i(w) - 1 over nonempty I_i)
// sorted increasingly, where I_i(w) = {j > i : w(j) < w(i)}.
inline std::pair<Partition, Flag> vexillary_shape_and_flag(const Permutation& w) {
    if (!is_vexillary(w)) throw domain_error("vexillary_shape_and_flag: permutation is not vexillary");
    std::vector<int> code = lehmer_code(w);
    std::vector<int> shape;
    std::vector<int> flag;
    for (int i = 1; i <= w.size(); ++i) {
        if (code[static_cast<size_t>(i - 1)] == 0) continue;
        shape.push_back(code[static_cast<size_t>(i - 1)]);
        for (int j = i + 1; j <= w.size(); ++j) {
            if (w(j) < w(i)) {
                flag.push_back(j - 1); // min I_i(w) - 1
                break;
            }
        }
    }
    std::sort(shape.begin(), shape.end(), std::greater<int>());
    std::sort(flag.begin(), flag.end());
    return {Partition(std::move(shape)), Flag(std::move(flag))};
}

// h-shifted permutation 1^h x w: prepends h fixed points.
inline Permutation shift(const Permutation& w, int h) {
    if (h < 0) throw domain_error("shift: h must be >= 0");
    std::vector<int> v;
    v.reserve(static_cast<size_t>(w.size() + h));
    for (int i = 1; i <= h; ++i) v.push_back(i);
    for (int i = 1; i <= w.size(); ++i) v.push_back(w(i) + h);
    return Permutation(std::move(v));
}

namespace detail {

// One (1,0)-extension step: the first entry is doubled. Prepends w_1 + 1 and
// bumps every original value above w_1 by one.
inline Permutation extend_dominant_row(const Permutation& w) {
    if (w.size() == 0) return Permutation({2, 1});
    int w1 = w(1);
    std::vector<int> v;
    v.reserve(static_cast<size_t>(w.size()) + 1);
    v.push_back(w1 + 1);
    for (int i = 1; i <= w.size(); ++i) v.push_back(w(i) + (w(i) > w1 ? 1 : 0));
    return Permutation(std::move(v));
}

// One (0,1)-extension step: the preimage of 1 is doubled. Bumps every value
// by one and replaces the entry that was 1 by the pair (2, 1).
inline Permutation extend_dominant_col(const Permutation& w) {
    if (w.size() == 0) return Permutation({2, 1});
    std::vector<int> v;
    v.reserve(static_cast<size_t>(w.size()) + 1);
    for (int i = 1; i <= w.size(); ++i) {
        if (w(i) == 1) {
            v.push_back(2);
            v.push_back(1);
        } else {
            v.push_back(w(i) + 1);
        }
    }
    return Permutation(std::move(v));
}

} // namespace detail

// k (1,0)-extension steps followed by l (0,1)-extension steps on a dominant
// permutation (the two steps commute). The Lehmer code of the result, read as
// a partition, is staircase_extend(lambda(w), k, l).
inline Permutation extend_dominant(const Permutation& w, int k, int l) {
    if (!is_dominant(w)) throw domain_error("extend_dominant: permutation is not dominant");
    if (k < 0 || l < 0) throw domain_error("extend_dominant: negative extension");
    Permutation r = w.trimmed();
    for (int t = 0; t < k; ++t) r = detail::extend_dominant_row(r);
    for (int t = 0; t < l; ++t) r = detail::extend_dominant_col(r);
    return r;
}

// Richardson permutation: a concatenation of decreasing blocks of consecutive
// integers, i.e. (i1, i1-1, ..., 1, i2, i2-1, ..., i1+1, ...).
inline bool is_richardson(const Permutation& w) {
    int n = w.size(), p = 1;
    while (p <= n) {
        int top = w(p);
        if (top < p) return false;
        for (int t = 0; t <= top - p; ++t)
            if (w(p + t) != top - t) return false;
        p = top + 1;
    }
    return true;
}

// Decomposes a Richardson permutation into its decreasing blocks, returned
// as (offset, size) pairs: the block occupies positions/values
// offset+1 .. offset+size.
inline std::vector<std::pair<int, int>> richardson_blocks(const Permutation& w) {
    if (!is_richardson(w)) throw domain_error("richardson_blocks: not a Richardson permutation");
    std::vector<std::pair<int, int>> blocks;
    int n = w.size(), p = 1;
    while (p <= n) {
        int top = w(p);
        blocks.emplace_back(p - 1, top - p + 1);
        p = top + 1;
    }
    return blocks;
}

// Parses "(1,4,3,2)" or the compact digit form "(1432)" (n <= 9).
inline Permutation parse_permutation(const std::string& s) {
    auto fail = [&](size_t pos, const std::string& why) {
        throw usage_error("permutation: " + why + " at position " + std::to_string(pos) +
                          " in '" + s + "'");
    };
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && s[i] == ' ') ++i; };
    skip_ws();
    if (i >= s.size() || s[i] != '(') fail(i, "expected '('");
    ++i;
    skip_ws();
    bool compact = true;
    for (size_t j = i; j < s.size() && s[j] != ')'; ++j)
        if (s[j] == ',' || s[j] == ' ') compact = false;
    std::vector<int> vals;
    if (compact) {
        while (i < s.size() && s[i] != ')') {
            if (s[i] < '1' || s[i] > '9') fail(i, "expected a digit 1-9");
            vals.push_back(s[i] - '0');
            ++i;
        }
        if (i >= s.size()) fail(i, "expected ')'");
        ++i;
    } else {
        while (true) {
            skip_ws();
            if (i >= s.size() || s[i] < '0' || s[i] > '9') fail(i, "expected a digit");
            long v = 0;
            while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
                v = v * 10 + (s[i] - '0');
                if (v > 1000000) fail(i, "value too large");
                ++i;
            }
            vals.push_back(static_cast<int>(v));
            skip_ws();
            if (i < s.size() && s[i] == ',') { ++i; continue; }
            if (i < s.size() && s[i] == ')') { ++i; break; }
            fail(i, "expected ',' or ')'");
        }
    }
    skip_ws();
    if (i != s.size()) fail(i, "trailing characters");
    try {
        return Permutation(std::move(vals));
    } catch (const domain_error& e) {
        throw usage_error(std::string("permutation: ") + e.what());
    }
}

} // namespace schurkit
