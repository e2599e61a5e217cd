#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "errors.hpp"

namespace schurkit {

// Partition / Young diagram: weakly decreasing positive parts, no trailing
// zeros; the empty list is the empty diagram.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1) throw domain_error("partition parts must be positive");
            if (i > 0 && parts[i - 1] < parts[i])
                throw domain_error("partition parts must weakly decrease");
        }
    }

    size_t rows() const { return parts.size(); }
    bool empty() const { return parts.empty(); }
    int operator[](size_t i) const { return parts[i]; } // 0-based
    // 1-based part access with lambda_r = 0 beyond the last row.
    int part(size_t r) const { return r >= 1 && r <= parts.size() ? parts[r - 1] : 0; }

    long long size() const {
        long long s = 0;
        for (int p : parts) s += p;
        return s;
    }

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return !(*this == o); }

    // mu fits inside this diagram row by row.
    bool contains(const Partition& mu) const {
        if (mu.rows() > rows()) return false;
        for (size_t i = 0; i < mu.rows(); ++i)
            if (mu.parts[i] > parts[i]) return false;
        return true;
    }

    // Text format "(3,3,1)"; "()" for the empty diagram.
    std::string text() const {
        std::string s = "(";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts[i]);
        }
        return s + ")";
    }
};

// Flag: weakly increasing positive row bounds, one per row of a paired shape.
struct Flag {
    std::vector<int> bounds;

    Flag() = default;
    explicit Flag(std::vector<int> b) : bounds(std::move(b)) {
        for (size_t i = 0; i < bounds.size(); ++i) {
            if (bounds[i] < 1) throw domain_error("flag bounds must be positive");
            if (i > 0 && bounds[i - 1] > bounds[i])
                throw domain_error("flag bounds must weakly increase");
        }
    }

    size_t size() const { return bounds.size(); }
    int operator[](size_t i) const { return bounds[i]; } // 0-based

    bool operator==(const Flag& o) const { return bounds == o.bounds; }

    std::string text() const {
        std::string s = "(";
        for (size_t i = 0; i < bounds.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(bounds[i]);
        }
        return s + ")";
    }
};

// Flag b_i = h + i for an m-row shape (the h-flagged flag).
inline Flag h_flag(size_t m, int h) {
    std::vector<int> b(m);
    for (size_t i = 0; i < m; ++i) b[i] = h + static_cast<int>(i) + 1;
    return Flag(std::move(b));
}

namespace detail {

inline void list_subdiagrams(const Partition& lambda, size_t row, std::vector<int>& prefix,
                             std::vector<Partition>& out) {
    out.emplace_back(Partition(prefix));
    if (row >= lambda.rows()) return;
    int hi = lambda.parts[row];
    if (row > 0 && !prefix.empty()) hi = std::min(hi, prefix.back());
    else if (row > 0) return; // previous row empty: no further rows allowed
    for (int v = 1; v <= hi; ++v) {
        prefix.push_back(v);
        list_subdiagrams(lambda, row + 1, prefix, out);
        prefix.pop_back();
    }
}

} // namespace detail

// All subdiagrams mu (mu_i <= lambda_i rowwise; mu may have fewer rows), in a
// fixed graded order: by total size, then parts lexicographically descending.
inline std::vector<Partition> subdiagrams(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> prefix;
    detail::list_subdiagrams(lambda, 0, prefix, out);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(b.parts.begin(), b.parts.end(), a.parts.begin(),
                                            a.parts.end());
    });
    return out;
}

// lambda[k,l]: k new top rows of length lambda_1 + l, then every original
// part increased by l (add k rows from above and l columns from the left).
inline Partition extend(const Partition& lambda, int k, int l) {
    if (k < 0 || l < 0) throw domain_error("extend: negative extension");
    if (lambda.empty()) {
        if (k > 0 || l > 0) throw domain_error("extend: empty diagram has no width to extend");
        return lambda;
    }
    std::vector<int> p;
    p.reserve(lambda.rows() + static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) p.push_back(lambda.parts[0] + l);
    for (int part : lambda.parts) p.push_back(part + l);
    return Partition(std::move(p));
}

// lambda^[k,l]: staircase extension
//   (lambda_1+k+l, lambda_1+k-1+l, ..., lambda_1+l, lambda_2+l, ..., lambda_m+l,
//    l, l-1, ..., 1).
// For the empty diagram this degenerates to the staircase (k+l, ..., 1).
inline Partition staircase_extend(const Partition& lambda, int k, int l) {
    if (k < 0 || l < 0) throw domain_error("staircase_extend: negative extension");
    std::vector<int> p;
    if (lambda.empty()) {
        for (int v = k + l; v >= 1; --v) p.push_back(v);
        return Partition(std::move(p));
    }
    p.reserve(lambda.rows() + static_cast<size_t>(k) + static_cast<size_t>(l));
    for (int i = k; i >= 1; --i) p.push_back(lambda.parts[0] + i + l);
    for (int part : lambda.parts) p.push_back(part + l);
    for (int v = l; v >= 1; --v) p.push_back(v);
    return Partition(std::move(p));
}

// Staircase shape (n-1, n-2, ..., 1); empty for n = 1.
inline Partition staircase(int n) {
    if (n < 1) throw domain_error("staircase: n must be >= 1");
    std::vector<int> p;
    for (int v = n - 1; v >= 1; --v) p.push_back(v);
    return Partition(std::move(p));
}

namespace detail {

// Parses a parenthesized comma list of positive integers, e.g. "(3,3,1)".
inline std::vector<int> parse_int_tuple(const std::string& s, const char* what) {
    auto fail = [&](size_t pos, const std::string& why) {
        throw usage_error(std::string(what) + ": " + why + " at position " +
                          std::to_string(pos) + " in '" + s + "'");
    };
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && s[i] == ' ') ++i; };
    skip_ws();
    if (i >= s.size() || s[i] != '(') fail(i, "expected '('");
    ++i;
    std::vector<int> vals;
    skip_ws();
    if (i < s.size() && s[i] == ')') { ++i; }
    else {
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
    return vals;
}

} // namespace detail

inline Partition parse_partition(const std::string& s) {
    try {
        return Partition(detail::parse_int_tuple(s, "partition"));
    } catch (const domain_error& e) {
        throw usage_error(std::string("partition: ") + e.what());
    }
}

inline Flag parse_flag(const std::string& s) {
    try {
        return Flag(detail::parse_int_tuple(s, "flag"));
    } catch (const domain_error& e) {
        throw usage_error(std::string("flag: ") + e.what());
    }
}

} // namespace schurkit
