/**
 * Verification suites: predicted wedge of spheres against computed homology.
 */
#pragma once

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <functional>
#include <new>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "homology.hpp"
#include "predictor.hpp"

namespace indgrid {

enum class Verdict { Match, Mismatch, Skipped };

inline std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Match: return "match";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::Skipped: return "skipped";
    }
    return "skipped";
}

struct VerificationRecord {
    FamilySpec spec;
    WedgeDescriptor predicted;
    std::optional<HomologyProfile> computed; ///< absent for formula-only and skipped records
    std::string method;
    bool free_certified = false;
    Verdict verdict = Verdict::Skipped;
    std::string reason; ///< empty on match; "budget: ..." / "unsupported: ..." on skip
    double wall_ms = 0;

    bool operator==(const VerificationRecord&) const = default;
};

struct VerifyOptions {
    std::uint64_t budget = kDefaultFaceBudget;
    std::uint64_t direct_limit = kTwoFieldThreshold; ///< at most this many faces: full SNF without reduction
    std::uint64_t two_field_threshold = kTwoFieldThreshold;
    int cofiber_depth = 1;
    std::optional<HomologyMethod> force_method; ///< overrides the automatic choice
    std::optional<bool> force_reduce_first;     ///< with force_method; defaults to true
};

/**
 * Automatic method: full SNF on the unreduced complex when it has at most
 * direct_limit faces, otherwise reduce first and use full SNF or two-field
 * ranks depending on the kernel's size.
 */
inline HomologyResult verify_homology(const Graph& g, const VerifyOptions& opts) {
    HomologyOptions h;
    h.budget = opts.budget;
    h.cofiber_depth = opts.cofiber_depth;
    h.two_field_threshold = opts.two_field_threshold;
    if (opts.force_method) {
        h.reduce_first = opts.force_reduce_first.value_or(true);
        h.method = *opts.force_method;
    } else if (!face_count_exceeds(g, opts.direct_limit)) {
        h.reduce_first = false;
        h.method = HomologyMethod::FullSnf;
    }
    return compute_homology(g, h);
}

inline VerificationRecord verify_instance(const FamilySpec& spec, const VerifyOptions& opts = {}) {
    const auto start = std::chrono::steady_clock::now();
    VerificationRecord r;
    r.spec = spec;
    try {
        r.predicted = predict(spec);
        auto res = verify_homology(build(spec), opts);
        r.method = res.method;
        r.free_certified = res.free_certified;
        const bool two_field = res.method.find("two-field") != std::string::npos;
        const bool same = descriptor_homology(r.predicted).same_groups(res.profile);
        if (!same) {
            r.verdict = Verdict::Mismatch;
            r.reason = "homology differs from prediction";
        } else if (two_field && !res.free_certified) {
            r.verdict = Verdict::Mismatch;
            r.reason = "ranks agree but freeness not certified";
        } else {
            r.verdict = Verdict::Match;
        }
        r.computed = std::move(res.profile);
    } catch (const BudgetExceeded& e) {
        r.verdict = Verdict::Skipped;
        r.reason = std::string("budget: ") + e.what();
    } catch (const UnsupportedSpec& e) {
        r.verdict = Verdict::Skipped;
        r.reason = std::string("unsupported: ") + e.what();
    } catch (const std::bad_alloc&) {
        r.verdict = Verdict::Skipped;
        r.reason = "budget: out of memory";
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

/// Formula-only check that chi(I(Gamma_{n,5})) (unreduced) is even with |chi| <= 4.
inline VerificationRecord verify_euler_bound(int n) {
    const auto start = std::chrono::steady_clock::now();
    VerificationRecord r;
    r.spec = FamilySpec::grid(n, 5);
    r.predicted = predict(r.spec);
    r.method = "formula";
    const std::int64_t chi = descriptor_euler(r.predicted, false);
    if (chi % 2 == 0 && chi >= -4 && chi <= 4) {
        r.verdict = Verdict::Match;
    } else {
        r.verdict = Verdict::Mismatch;
        r.reason = "euler characteristic " + std::to_string(chi) + " violates the bound";
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

struct IntRange {
    int lo = 1;
    int hi = 1;
};

/// Parses "a..b" or a single integer.
inline IntRange parse_range(std::string_view s) {
    auto to_int = [&](std::string_view p) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), v);
        if (ec != std::errc{} || ptr != p.data() + p.size() || p.empty())
            throw ParseError("bad range '" + std::string(s) + "'");
        return v;
    };
    const auto dots = s.find("..");
    IntRange r;
    if (dots == std::string_view::npos) {
        r.lo = r.hi = to_int(s);
    } else {
        r.lo = to_int(s.substr(0, dots));
        r.hi = to_int(s.substr(dots + 2));
    }
    if (r.lo > r.hi) throw ParseError("empty range '" + std::string(s) + "'");
    return r;
}

struct SuiteDefinition {
    std::string id;
    std::string description;
    IntRange default_range;
    bool formula_only = false;
    std::function<std::vector<FamilySpec>(IntRange)> instances;
};

inline const std::vector<SuiteDefinition>& suite_definitions() {
    using S = FamilySpec;
    auto each = [](auto make) {
        return [make](IntRange r) {
            std::vector<FamilySpec> out;
            for (int n = r.lo; n <= r.hi; ++n) make(out, n);
            return out;
        };
    };
    static const std::vector<SuiteDefinition> defs = {
        {"thm-2.4", "paths P_n", {1, 15}, false, each([](auto& o, int n) { o.push_back(S::path(n)); })},
        {"thm-2.5", "grids n x 2", {1, 12}, false, each([](auto& o, int n) { o.push_back(S::grid(n, 2)); })},
        {"thm-2.6", "cycles C_n", {3, 12}, false, each([](auto& o, int n) { o.push_back(S::cycle(n)); })},
        {"thm-2.7", "grids n x 3", {1, 12}, false, each([](auto& o, int n) { o.push_back(S::grid(n, 3)); })},
        {"lem-2.8", "3-row X_n and Y_n", {1, 8}, false, each([](auto& o, int n) {
             o.push_back({FamilyKind::X3, n, 0});
             o.push_back({FamilyKind::Y3, n, 0});
         })},
        {"lem-3.1", "4-row X_n and Y_n", {1, 8}, false, each([](auto& o, int n) {
             o.push_back({FamilyKind::X4, n, 0});
             o.push_back({FamilyKind::Y4, n, 0});
         })},
        {"lem-x5", "5-row X_n and Y_n", {1, 8}, false, each([](auto& o, int n) {
             o.push_back({FamilyKind::X5, n, 0});
             o.push_back({FamilyKind::Y5, n, 0});
         })},
        {"thm-1.1", "grids n x 4", {1, 8}, false, each([](auto& o, int n) { o.push_back(S::grid(n, 4)); })},
        {"thm-1.2", "grids n x 5", {1, 7}, false, each([](auto& o, int n) { o.push_back(S::grid(n, 5)); })},
        {"lem-b", "B'_k (k in range) and B_k (k in range, k <= 2)", {1, 3}, false, [](IntRange r) {
             std::vector<FamilySpec> out;
             for (int k = r.lo; k <= r.hi; ++k) out.push_back(S::b_prime(k));
             for (int k = r.lo; k <= std::min(r.hi, 2); ++k) out.push_back(S::b(k));
             return out;
         }},
        {"prop-a-v", "A_{n,k} - v, k = 0..2", {3, 8}, false, each([](auto& o, int n) {
             for (int k = 0; k <= 2; ++k) o.push_back(S::a_minus_v(n, k));
         })},
        {"prop-a1-5", "A_{n,k}, n <= 5, k = 0..2", {1, 5}, false, each([](auto& o, int n) {
             for (int k = 0; k <= 2; ++k) o.push_back(S::a(n, k));
         })},
        {"prop-eps0", "A_{n,k}, n = 0 mod 4, n >= 8, k = 0..2", {8, 8}, false, each([](auto& o, int n) {
             if (n >= 8 && n % 4 == 0)
                 for (int k = 0; k <= 2; ++k) o.push_back(S::a(n, k));
         })},
        {"prop-eps2", "A_{n,k}, n = 2 mod 4, n >= 6, k = 0..2", {6, 10}, false, each([](auto& o, int n) {
             if (n >= 6 && n % 4 == 2)
                 for (int k = 0; k <= 2; ++k) o.push_back(S::a(n, k));
         })},
        {"cor-1.3", "Euler characteristic bound for n x 5 grids (formula only)", {1, 10000}, true,
         each([](auto& o, int n) { o.push_back(S::grid(n, 5)); })},
    };
    return defs;
}

inline const SuiteDefinition& find_suite(std::string_view id) {
    for (const auto& d : suite_definitions())
        if (d.id == id) return d;
    throw ParseError("unknown suite '" + std::string(id) + "'");
}

/// Runs every instance on `jobs` workers; records come back in instance order.
inline std::vector<VerificationRecord> run_suite(std::string_view id, std::optional<IntRange> range = std::nullopt,
                                                 unsigned jobs = 1, const VerifyOptions& opts = {}) {
    const auto& def = find_suite(id);
    const auto specs = def.instances(range.value_or(def.default_range));
    std::vector<VerificationRecord> out(specs.size());
    auto work = [&](std::size_t i) {
        out[i] = def.formula_only ? verify_euler_bound(specs[i].n) : verify_instance(specs[i], opts);
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(specs.size(), 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < specs.size(); ++i) work(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < specs.size(); i = next++) work(i);
        });
    for (auto& t : pool) t.join();
    return out;
}

inline bool any_verdict(const std::vector<VerificationRecord>& rs, Verdict v) {
    return std::any_of(rs.begin(), rs.end(), [&](const auto& r) { return r.verdict == v; });
}

} // namespace indgrid
