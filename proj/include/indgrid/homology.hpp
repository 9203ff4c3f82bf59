/**
 * Reduced simplicial homology of independence complexes.
 *
 * The chain complex is reduced dimension by dimension from the bottom. Every
 * unit pivot (sigma, tau) of d_{d} removes the pair from the complex: the
 * column of tau and the row of sigma go, d_{d+1} loses row tau and d_{d-1}
 * loses column sigma. What survives is a small complex whose matrices hold
 * no unit entries; it is finished densely (Smith form over Z, fraction-free
 * rank over Q). Over GF(2) every nonzero entry is a unit, so nothing survives.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "reduction.hpp"
#include "smith.hpp"

namespace indgrid {

enum class Coefficients { Integers, Mod2, Rationals };

inline std::string coefficients_name(Coefficients c) {
    switch (c) {
    case Coefficients::Integers: return "integers";
    case Coefficients::Mod2: return "mod2";
    case Coefficients::Rationals: return "rationals";
    }
    return "integers";
}

inline Coefficients parse_coefficients(std::string_view s) {
    if (s == "integers" || s == "z") return Coefficients::Integers;
    if (s == "mod2" || s == "z2") return Coefficients::Mod2;
    if (s == "rationals" || s == "q") return Coefficients::Rationals;
    throw ParseError("unknown coefficients '" + std::string(s) + "'");
}

/// Reduced homology; only nonzero Betti numbers and nonempty torsion lists are stored.
struct HomologyProfile {
    Coefficients coeff = Coefficients::Integers;
    std::map<int, std::uint64_t> betti;
    std::map<int, std::vector<BigInt>> torsion;

    std::uint64_t betti_at(int d) const {
        auto it = betti.find(d);
        return it == betti.end() ? 0 : it->second;
    }
    bool torsion_free() const noexcept { return torsion.empty(); }
    bool is_zero() const noexcept { return betti.empty() && torsion.empty(); }
    /// Same groups, ignoring the coefficient tag.
    bool same_groups(const HomologyProfile& o) const { return betti == o.betti && torsion == o.torsion; }
    bool operator==(const HomologyProfile&) const = default;
};

inline HomologyProfile shift_degrees(const HomologyProfile& p, int shift) {
    HomologyProfile out;
    out.coeff = p.coeff;
    for (const auto& [d, b] : p.betti) out.betti[d + shift] = b;
    for (const auto& [d, t] : p.torsion) out.torsion[d + shift] = t;
    return out;
}

struct ChainReductionResult {
    HomologyProfile profile;
    bool residual_free = true; ///< every pivot was a unit; integer homology is then free
};

/**
 * Homology of a chain complex given by counts (index d+1 for d = -1..top) and
 * a source of boundary matrices d_d, d = 0..top, pulled one at a time.
 */
template <class Source>
ChainReductionResult reduce_chain_complex(const std::vector<std::uint64_t>& counts, Coefficients coeff,
                                          Source&& boundary) {
    const int top = static_cast<int>(counts.size()) - 2;
    auto count = [&](int d) -> std::uint64_t { return counts[static_cast<std::size_t>(d + 1)]; };
    // killed[d+1]: cells of dimension d removed as a pivot column or pivot row
    std::vector<std::vector<char>> killed(counts.size());
    for (int d = -1; d <= top; ++d) killed[static_cast<std::size_t>(d + 1)].assign(count(d), 0);
    std::vector<Residual> residuals(static_cast<std::size_t>(std::max(top + 1, 0)));
    bool residual_free = true;

    for (int d = 0; d <= top; ++d) {
        const SparseIntMatrix full = boundary(d);
        auto& below = killed[static_cast<std::size_t>(d)]; // dimension d-1
        std::vector<char> keep_rows(full.rows());
        std::vector<std::uint32_t> row_orig;
        for (std::size_t i = 0; i < full.rows(); ++i) {
            keep_rows[i] = !below[i];
            if (keep_rows[i]) row_orig.push_back(static_cast<std::uint32_t>(i));
        }
        EliminationResult el;
        {
            const SparseIntMatrix m = full.submatrix(keep_rows, std::vector<char>(full.cols(), 1));
            el = coeff == Coefficients::Mod2 ? eliminate_over<ring::GF2>(m) : eliminate_integer(m);
        }
        for (auto c : el.pivot_cols) killed[static_cast<std::size_t>(d + 1)][c] = 1;
        for (auto r : el.pivot_rows) below[row_orig[r]] = 1;
        Residual res = std::move(el.residual);
        res.rows = full.rows();
        for (auto& col : res.columns)
            for (auto& [row, v] : col) row = row_orig[row];
        if (!res.empty()) residual_free = false;
        residuals[static_cast<std::size_t>(d)] = std::move(res);
    }

    // Finish the surviving complex. Residual columns that later became pivot rows are gone.
    std::vector<std::uint64_t> rank(static_cast<std::size_t>(top + 2), 0); // rank[d] of d_d, rank[top+1] = 0
    std::map<int, std::vector<BigInt>> torsion;
    for (int d = 0; d <= top; ++d) {
        const auto& res = residuals[static_cast<std::size_t>(d)];
        if (res.empty()) continue;
        const auto& dead = killed[static_cast<std::size_t>(d + 1)];
        auto keep = [&](std::uint32_t col) { return !dead[col]; };
        if (coeff == Coefficients::Rationals) {
            rank[static_cast<std::size_t>(d)] = rank_bareiss(detail::densify(res, keep));
        } else {
            auto factors = smith_dense(detail::densify(res, keep));
            rank[static_cast<std::size_t>(d)] = factors.size();
            std::vector<BigInt> t;
            for (auto& f : factors)
                if (f > 1) t.push_back(f);
            if (!t.empty()) torsion[d - 1] = std::move(t);
        }
    }
    ChainReductionResult out;
    out.profile.coeff = coeff;
    out.residual_free = residual_free;
    for (int d = -1; d <= top; ++d) {
        const auto& k = killed[static_cast<std::size_t>(d + 1)];
        const std::uint64_t alive =
            static_cast<std::uint64_t>(std::count(k.begin(), k.end(), char{0}));
        const std::uint64_t out_rank = d >= 0 ? rank[static_cast<std::size_t>(d)] : 0;
        const std::uint64_t in_rank = rank[static_cast<std::size_t>(d + 1)];
        if (alive < out_rank + in_rank) throw InconsistentComplex("negative Betti number");
        if (const auto b = alive - out_rank - in_rank) out.profile.betti[d] = b;
    }
    out.profile.torsion = std::move(torsion);
    return out;
}

/// Homology of an explicit chain complex; rejects complexes with d o d != 0.
inline HomologyProfile homology_profile(const ChainComplexData& c, Coefficients coeff = Coefficients::Integers) {
    if (!boundary_squares_to_zero(c)) throw InconsistentComplex("boundary of boundary is nonzero");
    std::vector<std::uint64_t> counts{c.reduced ? 1u : 0u};
    for (int d = 0; d <= c.top_dim(); ++d) counts.push_back(c.faces.count(d));
    return reduce_chain_complex(counts, coeff, [&](int d) { return c.boundaries[static_cast<std::size_t>(d)]; })
        .profile;
}

/// Reduced homology of I(g) straight from face lists, building one boundary matrix at a time.
inline ChainReductionResult face_set_homology(const FaceSet& faces, Coefficients coeff) {
    std::vector<std::uint64_t> counts{1};
    for (int d = 0; d <= faces.top_dim(); ++d) counts.push_back(faces.count(d));
    return reduce_chain_complex(counts, coeff, [&](int d) { return boundary_matrix(faces, d, true); });
}

enum class HomologyMethod { Auto, FullSnf, TwoField };

inline constexpr std::uint64_t kTwoFieldThreshold = 100'000;

struct HomologyOptions {
    bool reduce_first = true;
    Coefficients coeff = Coefficients::Integers;
    HomologyMethod method = HomologyMethod::Auto;
    std::uint64_t budget = kDefaultFaceBudget;
    int cofiber_depth = 1;
    std::uint64_t two_field_threshold = kTwoFieldThreshold; ///< Auto: total faces above this use two fields
};

struct HomologyResult {
    HomologyProfile profile;
    std::string method;         ///< "full-snf", "two-field-rank", "mod2-rank", "rational-rank", each maybe "reduce-first+"
    bool free_certified = false; ///< integer homology proven torsion-free
    std::optional<ReductionTrace> trace;
    std::uint64_t faces = 0; ///< faces of the complex that was enumerated (kernel when reduced)
};

/**
 * Pipeline: optional reduction, face enumeration of the kernel, elimination,
 * degree shift. Two-field mode computes GF(2) and rational ranks; the integer
 * answer is certified free when every rational pivot was a unit and both
 * fields give the same Betti numbers.
 */
inline HomologyResult compute_homology(const Graph& g, const HomologyOptions& opts = {}) {
    HomologyResult out;
    const std::string prefix = opts.reduce_first ? "reduce-first+" : "";
    Graph work = g;
    int shift = 0;
    if (opts.reduce_first) {
        out.trace = reduce(g, ReduceOptions{opts.cofiber_depth});
        if (out.trace->contractible) {
            out.profile.coeff = opts.coeff;
            out.method = prefix + "contractible";
            out.free_certified = true;
            return out;
        }
        work = out.trace->kernel;
        shift = out.trace->shift;
    }
    FaceSet faces;
    try {
        faces = enumerate_faces(work, EnumerationOptions{std::nullopt, opts.budget});
    } catch (const BudgetExceeded& e) {
        throw BudgetExceeded(std::string(e.what()) + (opts.reduce_first ? " (reduction kernel has " : " (graph has ") +
                                 std::to_string(work.order()) + " vertices)",
                             e.budget(), work.order());
    }
    out.faces = faces.total();

    if (opts.coeff != Coefficients::Integers) {
        auto r = face_set_homology(faces, opts.coeff);
        out.profile = shift_degrees(r.profile, shift);
        out.method = prefix + (opts.coeff == Coefficients::Mod2 ? "mod2-rank" : "rational-rank");
        return out;
    }
    HomologyMethod method = opts.method;
    if (method == HomologyMethod::Auto)
        method = out.faces > opts.two_field_threshold ? HomologyMethod::TwoField : HomologyMethod::FullSnf;
    if (method == HomologyMethod::FullSnf) {
        auto r = face_set_homology(faces, Coefficients::Integers);
        out.profile = shift_degrees(r.profile, shift);
        out.method = prefix + "full-snf";
        out.free_certified = out.profile.torsion_free();
        return out;
    }
    auto q = face_set_homology(faces, Coefficients::Rationals);
    auto m2 = face_set_homology(faces, Coefficients::Mod2);
    out.method = prefix + "two-field-rank";
    out.free_certified = q.residual_free && q.profile.betti == m2.profile.betti;
    out.profile = shift_degrees(q.profile, shift);
    if (out.free_certified) out.profile.coeff = Coefficients::Integers;
    return out;
}

inline HomologyProfile homology_of_graph(const Graph& g, const HomologyOptions& opts = {}) {
    return compute_homology(g, opts).profile;
}

/// Reduced Euler characteristic from Betti numbers (field or free integer profile).
inline std::int64_t euler_from_profile(const HomologyProfile& p) {
    std::int64_t chi = 0;
    for (const auto& [d, b] : p.betti) chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(b);
    return chi;
}

} // namespace indgrid
