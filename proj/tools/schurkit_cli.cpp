// schurkit command-line front end.
//
// Subcommands:
//   schur     render a flagged Schur polynomial
//   schubert  render a Schubert polynomial
//   verify    run an identity check or sweep (exit 1 on any mismatch)
//   search    maximize Schubert evaluations at all-ones over S_n
//   catalan   Catalan numbers, Hankel determinants, q-analogue
//
// Exit codes: 0 success / 1 identity mismatch / 2 usage / 3 budget / 4 internal.
// Text mode keeps stdout deterministic; timings go to stderr. JSON mode embeds
// runtime_ms and carries a top-level "schema": 1.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "schurkit/schurkit.hpp"

namespace {

using namespace schurkit;
using json = nlohmann::ordered_json;

enum class Format { text, js };

json json_int(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return json(static_cast<long long>(v));
    return json(to_string(v));
}

json poly_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back(json{{"coefficient", json_int(c)}, {"monomial", m.text()}});
    return json{{"text", p.text()}, {"terms", std::move(terms)}};
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

long long elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

// Wall-clock cap for verify sweeps, opted into via SCHURKIT_BUDGET_SECS.
struct Budget {
    std::optional<std::chrono::steady_clock::time_point> deadline;
    long long cases = 0;

    static Budget from_env() {
        Budget b;
        if (const char* s = std::getenv("SCHURKIT_BUDGET_SECS")) {
            char* end = nullptr;
            long secs = std::strtol(s, &end, 10);
            if (end && *end == '\0' && secs > 0)
                b.deadline = std::chrono::steady_clock::now() + std::chrono::seconds(secs);
        }
        return b;
    }

    void tick() {
        ++cases;
        if (deadline && std::chrono::steady_clock::now() > *deadline)
            throw budget_error("verification budget exhausted after " + std::to_string(cases) +
                               " cases (SCHURKIT_BUDGET_SECS)");
    }
};

struct VerifyOutcome {
    std::string identity;
    long long cases = 0;
    bool ok = true;
    std::vector<std::pair<std::string, std::string>> counterexample;
    std::vector<std::string> detail; // extra lines, e.g. --show-matrix entries
    json detail_json = json::array();
};

// ---------------------------------------------------------------------------
// verify implementations

struct VerifyParams {
    std::string identity;
    std::optional<std::string> shape, flags, w;
    std::optional<int> h, n;
    std::optional<std::string> max_shape;
    std::optional<int> max_flag, min_h, max_h, max_n;
    bool show_matrix = false;
};

void fail_with(VerifyOutcome& out, std::vector<std::pair<std::string, std::string>> ce) {
    out.ok = false;
    out.counterexample = std::move(ce);
}

// flagged_schur vs. the h-polynomial determinant, one (shape, flag) case.
bool check_jacobi_trudi(const Partition& lambda, const Flag& b, VerifyOutcome& out) {
    LaurentPoly lhs = flagged_schur(lambda, b);
    LaurentPoly rhs = jacobi_trudi(lambda, b);
    if (lhs == rhs) return true;
    fail_with(out, {{"shape", lambda.text()},
                    {"flag", b.text()},
                    {"flagged_schur", lhs.text()},
                    {"jacobi_trudi", rhs.text()}});
    return false;
}

// All weakly increasing flags of the given length with entries in [1, hi].
void for_each_flag(size_t len, int hi, std::vector<int>& prefix,
                   const std::function<bool(const Flag&)>& fn, bool& keep_going) {
    if (!keep_going) return;
    if (prefix.size() == len) {
        keep_going = fn(Flag(prefix));
        return;
    }
    int lo = prefix.empty() ? 1 : prefix.back();
    for (int v = lo; v <= hi && keep_going; ++v) {
        prefix.push_back(v);
        for_each_flag(len, hi, prefix, fn, keep_going);
        prefix.pop_back();
    }
}

VerifyOutcome verify_jacobi_trudi(const VerifyParams& vp, Budget& budget) {
    VerifyOutcome out;
    out.identity = "jacobi-trudi";
    if (vp.shape) {
        Partition lambda = parse_partition(*vp.shape);
        Flag b = vp.flags ? parse_flag(*vp.flags)
                          : (vp.h ? h_flag(lambda.rows(), *vp.h)
                                  : throw usage_error("verify jacobi-trudi: single mode needs "
                                                      "--flags or --h alongside --shape"));
        budget.tick();
        check_jacobi_trudi(lambda, b, out);
        out.cases = budget.cases;
        return out;
    }
    Partition bound = parse_partition(vp.max_shape.value_or("(4,4,4)"));
    int max_flag = vp.max_flag.value_or(6);
    for (const Partition& lambda : subdiagrams(bound)) {
        bool keep_going = true;
        std::vector<int> prefix;
        for_each_flag(lambda.rows(), max_flag, prefix,
                      [&](const Flag& b) {
                          budget.tick();
                          return check_jacobi_trudi(lambda, b, out);
                      },
                      keep_going);
        if (!keep_going) break;
    }
    out.cases = budget.cases;
    return out;
}

// Brute-forced noncrossing sum vs. the endpoint determinant, one (shape, h).
bool check_lgv(const Partition& lambda, int h, VerifyOutcome& out) {
    if (lambda.empty()) return true; // no endpoints; both sides are empty products
    WeightedGrid g(det_grid_diagram(lambda, h, DetVariant::plain));
    auto starts = det_starts(lambda, h, DetVariant::plain);
    auto ends = det_ends(lambda, h, DetVariant::plain);
    LaurentPoly lhs = z_nc(g, starts, ends);
    LaurentPoly rhs = lgv_determinant(g, starts, ends);
    if (lhs == rhs) return true;
    fail_with(out, {{"shape", lambda.text()},
                    {"h", std::to_string(h)},
                    {"z_nc", lhs.text()},
                    {"lgv_determinant", rhs.text()}});
    return false;
}

VerifyOutcome verify_lgv(const VerifyParams& vp, Budget& budget) {
    VerifyOutcome out;
    out.identity = "lgv";
    if (vp.shape) {
        if (!vp.h) throw usage_error("verify lgv: single mode needs --h alongside --shape");
        budget.tick();
        check_lgv(parse_partition(*vp.shape), *vp.h, out);
        out.cases = budget.cases;
        return out;
    }
    Partition bound = parse_partition(vp.max_shape.value_or("(3,2,2)"));
    int min_h = vp.min_h.value_or(2), max_h = vp.max_h.value_or(3);
    for (const Partition& lambda : subdiagrams(bound))
        for (int h = min_h; h <= max_h; ++h) {
            budget.tick();
            if (!check_lgv(lambda, h, out)) {
                out.cases = budget.cases;
                return out;
            }
        }
    out.cases = budget.cases;
    return out;
}

// One (shape, h) case of the determinantal expression for s^{(h)}_lambda.
bool check_flagged_det(const Partition& lambda, int h, DetVariant variant, VerifyOutcome& out) {
    LaurentPoly lhs = h_flagged_via_lgv(lambda, h, variant);
    LaurentPoly rhs = h_flagged_schur(lambda, h);
    if (lhs != rhs) {
        fail_with(out, {{"shape", lambda.text()},
                        {"h", std::to_string(h)},
                        {"variant", variant_name(variant)},
                        {"determinant", lhs.text()},
                        {"h_flagged_schur", rhs.text()}});
        return false;
    }
    if (variant == DetVariant::staircase) {
        int limit = h + static_cast<int>(lambda.rows());
        if (lhs.max_var() > limit) {
            fail_with(out, {{"shape", lambda.text()},
                            {"h", std::to_string(h)},
                            {"variant", variant_name(variant)},
                            {"max_variable", "x" + std::to_string(lhs.max_var())},
                            {"allowed", "x" + std::to_string(limit)}});
            return false;
        }
    }
    return true;
}

// Certifies one printed matrix entry: the closed form (shifted one-flagged
// Schur polynomial over its monomial) must equal the partition function.
bool certify_entry(const Partition& lambda, int h, int i, int j, DetVariant variant,
                   VerifyOutcome& out, bool emit_detail) {
    OneFlaggedEntry e = entry_as_one_flagged(lambda, h, i, j, variant);
    LaurentPoly closed = entry_value(e);
    LaurentPoly direct = entry_partition_function(lambda, h, i, j, variant);
    if (closed != direct) {
        fail_with(out, {{"shape", lambda.text()},
                        {"h", std::to_string(h)},
                        {"variant", variant_name(variant)},
                        {"entry", "(" + std::to_string(i) + "," + std::to_string(j) + ")"},
                        {"closed_form", e.text()},
                        {"closed_value", closed.text()},
                        {"partition_function", direct.text()}});
        return false;
    }
    if (emit_detail) {
        out.detail.push_back("entry (" + std::to_string(i) + "," + std::to_string(j) +
                             "): " + e.text());
        out.detail_json.push_back(json{{"i", i},
                                       {"j", j},
                                       {"closed_form", e.text()},
                                       {"value", closed.text()}});
    }
    return true;
}

VerifyOutcome verify_flagged_det(const VerifyParams& vp, Budget& budget, DetVariant variant) {
    VerifyOutcome out;
    out.identity = variant == DetVariant::plain ? "flagged-det" : "flagged-det-staircase";
    if (vp.shape) {
        if (!vp.h)
            throw usage_error("verify " + out.identity + ": single mode needs --h alongside --shape");
        Partition lambda = parse_partition(*vp.shape);
        budget.tick();
        if (check_flagged_det(lambda, *vp.h, variant, out) && !lambda.empty()) {
            for (int i = 1; i <= *vp.h && out.ok; ++i)
                for (int j = 1; j <= *vp.h && out.ok; ++j)
                    certify_entry(lambda, *vp.h, i, j, variant, out, vp.show_matrix);
        }
        out.cases = budget.cases;
        return out;
    }
    if (vp.show_matrix)
        throw usage_error("verify " + out.identity + ": --show-matrix needs --shape and --h");
    Partition bound = parse_partition(vp.max_shape.value_or("(4,3,2)"));
    int max_h = vp.max_h.value_or(3);
    for (const Partition& lambda : subdiagrams(bound))
        for (int h = 1; h <= max_h; ++h) {
            budget.tick();
            if (!check_flagged_det(lambda, h, variant, out)) {
                out.cases = budget.cases;
                return out;
            }
        }
    out.cases = budget.cases;
    return out;
}

// Vexillary Schubert polynomial vs. its flagged tableau sum, one w.
bool check_wachs(const Permutation& w, VerifyOutcome& out) {
    LaurentPoly lhs = schubert_poly(w);
    LaurentPoly rhs = vexillary_flagged_form(w);
    if (lhs == rhs) return true;
    auto [shape, flag] = vexillary_shape_and_flag(w);
    fail_with(out, {{"w", w.text()},
                    {"shape", shape.text()},
                    {"flag", flag.text()},
                    {"schubert_poly", lhs.text()},
                    {"flagged_schur", rhs.text()}});
    return false;
}

VerifyOutcome verify_wachs(const VerifyParams& vp, Budget& budget) {
    VerifyOutcome out;
    out.identity = "wachs";
    if (vp.w) {
        Permutation w = parse_permutation(*vp.w);
        if (!is_vexillary(w)) throw usage_error("verify wachs: " + w.text() + " is not vexillary");
        budget.tick();
        check_wachs(w, out);
        out.cases = budget.cases;
        return out;
    }
    int n = vp.n.value_or(6);
    if (n < 1) throw usage_error("verify wachs: --n must be >= 1");
    std::vector<int> line(static_cast<size_t>(n));
    std::iota(line.begin(), line.end(), 1);
    do {
        Permutation w(line);
        if (!is_vexillary(w)) continue;
        budget.tick();
        if (!check_wachs(w, out)) break;
    } while (std::next_permutation(line.begin(), line.end()));
    out.cases = budget.cases;
    return out;
}

// Shifted dominant determinant: the staircase-variant determinant of the
// shape of w must reproduce the Schubert polynomial of 1^h x w, with every
// matrix entry certified against an independently computed Schubert
// polynomial of a doubled extension of w.
bool check_mainschubert(const Permutation& w, int h, VerifyOutcome& out) {
    Partition lambda = dominant_shape(w);
    LaurentPoly det = h_flagged_via_lgv(lambda, h, DetVariant::staircase);
    LaurentPoly direct = schubert_poly(shift(w, h));
    if (det != direct) {
        fail_with(out, {{"w", w.text()},
                        {"h", std::to_string(h)},
                        {"shape", lambda.text()},
                        {"determinant", det.text()},
                        {"schubert_poly", direct.text()}});
        return false;
    }
    if (lambda.empty()) return true;
    for (int i = 1; i <= h; ++i) {
        for (int j = 1; j <= h; ++j) {
            if (!certify_entry(lambda, h, i, j, DetVariant::staircase, out, false)) return false;
            // Independent route: the entry's diagram is the code of a doubled
            // extension of w, so its one-flagged value is a shifted Schubert
            // polynomial over the entry's variable window.
            OneFlaggedEntry e = entry_as_one_flagged(lambda, h, i, j, DetVariant::staircase);
            Permutation v = extend_dominant(w, j - 1, i - 1);
            LaurentPoly via_schubert = schubert_poly(shift(v, 1))
                                           .with_shifted_vars(e.var_start - 1)
                                           .monomial_quotient(e.denominator);
            if (via_schubert != entry_value(e)) {
                fail_with(out, {{"w", w.text()},
                                {"h", std::to_string(h)},
                                {"entry", "(" + std::to_string(i) + "," + std::to_string(j) + ")"},
                                {"extension", v.text()},
                                {"via_schubert", via_schubert.text()},
                                {"closed_form", entry_value(e).text()}});
                return false;
            }
        }
    }
    return true;
}

VerifyOutcome verify_mainschubert(const VerifyParams& vp, Budget& budget) {
    VerifyOutcome out;
    out.identity = "mainschubert";
    if (vp.w) {
        if (!vp.h) throw usage_error("verify mainschubert: single mode needs --h alongside --w");
        Permutation w = parse_permutation(*vp.w);
        if (!is_dominant(w)) throw usage_error("verify mainschubert: " + w.text() + " is not dominant");
        budget.tick();
        check_mainschubert(w, *vp.h, out);
        out.cases = budget.cases;
        return out;
    }
    int max_n = vp.max_n.value_or(4), max_h = vp.max_h.value_or(2);
    if (max_n < 1 || max_h < 1) throw usage_error("verify mainschubert: bounds must be >= 1");
    std::vector<int> line(static_cast<size_t>(max_n));
    std::iota(line.begin(), line.end(), 1);
    do {
        Permutation w(line);
        if (!is_dominant(w)) continue;
        for (int h = 1; h <= max_h; ++h) {
            budget.tick();
            if (!check_mainschubert(w, h, out)) {
                out.cases = budget.cases;
                return out;
            }
        }
    } while (std::next_permutation(line.begin(), line.end()));
    out.cases = budget.cases;
    return out;
}

// Principal specialization of the once-shifted longest element vs. the
// q-Catalan polynomial, one n.
bool check_woo(int n, VerifyOutcome& out) {
    LaurentPoly lhs = principal_specialization(schubert_poly(shift(Permutation::longest(n), 1)));
    long long e = static_cast<long long>(n) * (n - 1) * (n - 2) / 6;
    LaurentPoly power = e == 0 ? LaurentPoly::one()
                               : LaurentPoly::monomial(Monomial::var(1, static_cast<int>(e)));
    LaurentPoly rhs = power * q_catalan(n);
    if (lhs == rhs) return true;
    fail_with(out, {{"n", std::to_string(n)},
                    {"specialized", lhs.text()},
                    {"q_catalan_side", rhs.text()}});
    return false;
}

VerifyOutcome verify_woo(const VerifyParams& vp, Budget& budget) {
    VerifyOutcome out;
    out.identity = "woo";
    int lo = 1, hi;
    if (vp.n) {
        lo = hi = *vp.n;
    } else {
        hi = vp.max_n.value_or(6);
    }
    if (lo < 1) throw usage_error("verify woo: n must be >= 1");
    for (int n = lo; n <= hi; ++n) {
        budget.tick();
        if (!check_woo(n, out)) break;
    }
    out.cases = budget.cases;
    return out;
}

// Schubert evaluation of 1^h x w0(n) at all-ones vs. the Hankel determinant
// of Catalan numbers, one (n, h).
bool check_catalan_hankel(int n, int h, VerifyOutcome& out) {
    Int lhs = schubert_poly(shift(Permutation::longest(n), h)).value_at_ones();
    Int rhs = catalan_hankel(n, h);
    if (lhs == rhs) return true;
    fail_with(out, {{"n", std::to_string(n)},
                    {"h", std::to_string(h)},
                    {"schubert_at_ones", to_string(lhs)},
                    {"catalan_hankel", to_string(rhs)}});
    return false;
}

VerifyOutcome verify_catalan_hankel(const VerifyParams& vp, Budget& budget) {
    VerifyOutcome out;
    out.identity = "catalan-hankel";
    if (vp.n) {
        int h = vp.h.value_or(1);
        if (*vp.n < 1 || h < 1) throw usage_error("verify catalan-hankel: n and h must be >= 1");
        budget.tick();
        check_catalan_hankel(*vp.n, h, out);
        out.cases = budget.cases;
        return out;
    }
    int max_n = vp.max_n.value_or(5), max_h = vp.max_h.value_or(3);
    if (max_n < 1 || max_h < 1) throw usage_error("verify catalan-hankel: bounds must be >= 1");
    for (int n = 1; n <= max_n; ++n)
        for (int h = 1; h <= max_h; ++h) {
            budget.tick();
            if (!check_catalan_hankel(n, h, out)) {
                out.cases = budget.cases;
                return out;
            }
        }
    out.cases = budget.cases;
    return out;
}

VerifyOutcome run_verify_identity(const VerifyParams& vp, Budget& budget) {
    if (vp.identity == "jacobi-trudi") return verify_jacobi_trudi(vp, budget);
    if (vp.identity == "lgv") return verify_lgv(vp, budget);
    if (vp.identity == "flagged-det") return verify_flagged_det(vp, budget, DetVariant::plain);
    if (vp.identity == "flagged-det-staircase")
        return verify_flagged_det(vp, budget, DetVariant::staircase);
    if (vp.identity == "wachs") return verify_wachs(vp, budget);
    if (vp.identity == "mainschubert") return verify_mainschubert(vp, budget);
    if (vp.identity == "woo") return verify_woo(vp, budget);
    if (vp.identity == "catalan-hankel") return verify_catalan_hankel(vp, budget);
    throw usage_error("verify: unknown identity '" + vp.identity + "'");
}

int render_verify(const VerifyOutcome& out, Format fmt, long long ms) {
    if (fmt == Format::js) {
        json j{{"schema", 1},
               {"command", "verify"},
               {"identity", out.identity},
               {"cases", out.cases},
               {"result", out.ok ? "pass" : "fail"}};
        if (!out.detail_json.empty()) j["entries"] = out.detail_json;
        if (!out.ok) {
            json ce = json::object();
            for (const auto& [k, v] : out.counterexample) ce[k] = v;
            j["counterexample"] = std::move(ce);
        }
        j["runtime_ms"] = ms;
        emit_json(j);
    } else {
        std::cout << "identity: " << out.identity << "\n";
        for (const auto& line : out.detail) std::cout << line << "\n";
        if (!out.ok) {
            std::cout << "counterexample:\n";
            for (const auto& [k, v] : out.counterexample) std::cout << "  " << k << ": " << v << "\n";
        }
        std::cout << "cases: " << out.cases << "\n";
        std::cout << "result: " << (out.ok ? "pass" : "fail") << "\n";
        std::cerr << "runtime_ms: " << ms << "\n";
    }
    return out.ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// plain computation subcommands

int run_schur(const std::string& shape, const std::optional<std::string>& flags,
              const std::optional<int>& h, Format fmt) {
    Partition lambda = parse_partition(shape);
    if (flags.has_value() == h.has_value())
        throw usage_error("schur: give exactly one of --flags and --h");
    Flag b = flags ? parse_flag(*flags) : h_flag(lambda.rows(), *h);
    if (h && *h < 1) throw usage_error("schur: --h must be >= 1");
    LaurentPoly p = flagged_schur(lambda, b);
    if (fmt == Format::js) {
        json j{{"schema", 1}, {"command", "schur"}, {"shape", lambda.text()}, {"flag", b.text()}};
        if (h) j["h"] = *h;
        j["polynomial"] = poly_json(p);
        j["value_at_ones"] = json_int(p.value_at_ones());
        emit_json(j);
    } else {
        std::cout << p.text() << "\n";
    }
    return 0;
}

int run_schubert(const std::string& wtext, bool at_ones, bool principal, Format fmt) {
    if (at_ones && principal) throw usage_error("schubert: --at-ones and --principal conflict");
    Permutation w = parse_permutation(wtext);
    LaurentPoly p = schubert_poly(w);
    if (fmt == Format::js) {
        json j{{"schema", 1},
               {"command", "schubert"},
               {"w", w.trimmed().text()},
               {"polynomial", poly_json(p)},
               {"value_at_ones", json_int(p.value_at_ones())}};
        if (principal) j["principal_specialization"] = poly_json(principal_specialization(p));
        emit_json(j);
    } else if (at_ones) {
        std::cout << to_string(p.value_at_ones()) << "\n";
    } else if (principal) {
        std::cout << principal_specialization(p).text() << "\n";
    } else {
        std::cout << p.text() << "\n";
    }
    return 0;
}

int run_catalan(int n, const std::optional<int>& h, bool q, Format fmt) {
    if (h && q) throw usage_error("catalan: --h and --q conflict");
    if (n < 1) throw usage_error("catalan: --n must be >= 1");
    if (q) {
        LaurentPoly p = q_catalan(n);
        if (fmt == Format::js)
            emit_json(json{{"schema", 1},
                           {"command", "catalan"},
                           {"n", n},
                           {"q_polynomial", poly_json(p)}});
        else
            std::cout << p.text() << "\n";
        return 0;
    }
    if (h) {
        if (*h < 0) throw usage_error("catalan: --h must be >= 0");
        Int v = catalan_hankel(n, *h);
        if (fmt == Format::js)
            emit_json(json{{"schema", 1},
                           {"command", "catalan"},
                           {"n", n},
                           {"h", *h},
                           {"hankel", json_int(v)}});
        else
            std::cout << to_string(v) << "\n";
        return 0;
    }
    Int v = catalan(n);
    if (fmt == Format::js)
        emit_json(json{{"schema", 1}, {"command", "catalan"}, {"n", n}, {"value", json_int(v)}});
    else
        std::cout << to_string(v) << "\n";
    return 0;
}

int run_search(int n, int threads, bool budget_override, Format fmt) {
    SearchReport r = max_search(n, threads, budget_override);
    if (fmt == Format::js) {
        json argmax = json::array();
        for (const auto& w : r.argmax) argmax.push_back(w.text());
        emit_json(json{{"schema", 1},
                       {"command", "search"},
                       {"n", r.n},
                       {"max_value", json_int(r.max_value)},
                       {"argmax", std::move(argmax)},
                       {"all_argmax_richardson", r.all_argmax_richardson},
                       {"runtime_ms", r.runtime_ms}});
    } else {
        std::cout << "n: " << r.n << "\n";
        std::cout << "max_value: " << to_string(r.max_value) << "\n";
        std::cout << "argmax:";
        for (const auto& w : r.argmax) std::cout << " " << w.text();
        std::cout << "\n";
        std::cout << "all_argmax_richardson: " << (r.all_argmax_richardson ? "true" : "false")
                  << "\n";
        std::cerr << "runtime_ms: " << r.runtime_ms << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact flagged Schur and Schubert polynomial toolkit"};
    app.require_subcommand(1);
    // several subcommands take an --h option, so help is --help only
    app.set_help_flag("--help", "print help and exit");

    std::string format = "text";
    int threads = 1;
    bool budget_override = false;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--threads", threads, "worker threads for search")
        ->check(CLI::PositiveNumber);
    app.add_flag("--budget-override", budget_override, "allow the n = 8 search");

    // schur
    auto* schur_cmd = app.add_subcommand("schur", "flagged Schur polynomial");
    schur_cmd->fallthrough();
    schur_cmd->set_help_flag("--help", "print help and exit");
    std::string schur_shape;
    std::string schur_flags;
    int schur_h = 0;
    schur_cmd->add_option("--shape", schur_shape, "partition, e.g. \"(2,1)\"")->required();
    auto* schur_flags_opt = schur_cmd->add_option("--flags,--flag", schur_flags, "row bounds");
    auto* schur_h_opt = schur_cmd->add_option("--h", schur_h, "h-flag: row i bounded by h+i");

    // schubert
    auto* schubert_cmd = app.add_subcommand("schubert", "Schubert polynomial");
    schubert_cmd->fallthrough();
    schubert_cmd->set_help_flag("--help", "print help and exit");
    std::string schubert_w;
    bool schubert_at_ones = false, schubert_principal = false;
    schubert_cmd->add_option("--w", schubert_w, "permutation, e.g. \"(1,4,3,2)\" or \"(1432)\"")
        ->required();
    schubert_cmd->add_flag("--at-ones", schubert_at_ones, "print the evaluation at all-ones");
    schubert_cmd->add_flag("--principal", schubert_principal,
                           "print the principal specialization (x_i -> q^{i-1}, q = x1)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check an identity (exit 1 on mismatch)");
    verify_cmd->fallthrough();
    verify_cmd->set_help_flag("--help", "print help and exit");
    VerifyParams vp;
    std::string v_shape, v_flags, v_w, v_max_shape;
    int v_h = 0, v_n = 0, v_max_flag = 0, v_min_h = 0, v_max_h = 0, v_max_n = 0;
    verify_cmd
        ->add_option("identity", vp.identity,
                     "jacobi-trudi | lgv | flagged-det | flagged-det-staircase | wachs | "
                     "mainschubert | woo | catalan-hankel")
        ->required()
        ->check(CLI::IsMember({"jacobi-trudi", "lgv", "flagged-det", "flagged-det-staircase",
                               "wachs", "mainschubert", "woo", "catalan-hankel"}));
    auto* v_shape_opt = verify_cmd->add_option("--shape", v_shape, "single-case shape");
    auto* v_flags_opt = verify_cmd->add_option("--flags,--flag", v_flags, "single-case flag");
    auto* v_w_opt = verify_cmd->add_option("--w", v_w, "single-case permutation");
    auto* v_h_opt = verify_cmd->add_option("--h", v_h, "single-case h");
    auto* v_n_opt = verify_cmd->add_option("--n", v_n, "single n (woo, catalan-hankel) or sweep size (wachs)");
    auto* v_max_shape_opt = verify_cmd->add_option("--max-shape", v_max_shape, "sweep shape bound");
    auto* v_max_flag_opt = verify_cmd->add_option("--max-flag", v_max_flag, "sweep flag bound");
    auto* v_min_h_opt = verify_cmd->add_option("--min-h", v_min_h, "sweep h lower bound");
    auto* v_max_h_opt = verify_cmd->add_option("--max-h", v_max_h, "sweep h upper bound");
    auto* v_max_n_opt = verify_cmd->add_option("--max-n", v_max_n, "sweep n upper bound");
    verify_cmd->add_flag("--show-matrix", vp.show_matrix,
                         "print the determinant entries (flagged-det single case)");

    // search
    auto* search_cmd = app.add_subcommand("search", "maximize Schubert values at all-ones");
    search_cmd->fallthrough();
    search_cmd->set_help_flag("--help", "print help and exit");
    int search_n = 0;
    search_cmd->add_option("--n", search_n, "symmetric group size")->required();

    // catalan
    auto* catalan_cmd = app.add_subcommand("catalan", "Catalan numbers and relatives");
    catalan_cmd->fallthrough();
    catalan_cmd->set_help_flag("--help", "print help and exit");
    int catalan_n = 0, catalan_h = 0;
    bool catalan_q = false;
    catalan_cmd->add_option("--n", catalan_n, "index")->required();
    auto* catalan_h_opt = catalan_cmd->add_option("--h", catalan_h, "Hankel determinant size");
    catalan_cmd->add_flag("--q", catalan_q, "q-analogue polynomial (q = x1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    Format fmt = format == "json" ? Format::js : Format::text;
    try {
        if (schur_cmd->parsed()) {
            return run_schur(schur_shape,
                             *schur_flags_opt ? std::optional<std::string>(schur_flags)
                                              : std::nullopt,
                             *schur_h_opt ? std::optional<int>(schur_h) : std::nullopt, fmt);
        }
        if (schubert_cmd->parsed())
            return run_schubert(schubert_w, schubert_at_ones, schubert_principal, fmt);
        if (verify_cmd->parsed()) {
            if (*v_shape_opt) vp.shape = v_shape;
            if (*v_flags_opt) vp.flags = v_flags;
            if (*v_w_opt) vp.w = v_w;
            if (*v_h_opt) vp.h = v_h;
            if (*v_n_opt) vp.n = v_n;
            if (*v_max_shape_opt) vp.max_shape = v_max_shape;
            if (*v_max_flag_opt) vp.max_flag = v_max_flag;
            if (*v_min_h_opt) vp.min_h = v_min_h;
            if (*v_max_h_opt) vp.max_h = v_max_h;
            if (*v_max_n_opt) vp.max_n = v_max_n;
            Budget budget = Budget::from_env();
            auto t0 = std::chrono::steady_clock::now();
            VerifyOutcome out = run_verify_identity(vp, budget);
            return render_verify(out, fmt, elapsed_ms(t0));
        }
        if (search_cmd->parsed()) return run_search(search_n, threads, budget_override, fmt);
        if (catalan_cmd->parsed())
            return run_catalan(catalan_n, *catalan_h_opt ? std::optional<int>(catalan_h) : std::nullopt,
                               catalan_q, fmt);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dimension_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
