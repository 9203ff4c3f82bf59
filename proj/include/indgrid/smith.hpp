/**
 * Smith normal form and ranks of integer matrices.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "elimination.hpp"
#include "errors.hpp"
#include "sparse_matrix.hpp"

namespace indgrid {

/// Largest dense residual (rows x cols) finished by the dense algorithms.
inline constexpr std::uint64_t kResidualCellLimit = 4'000'000;

using DenseBig = std::vector<std::vector<BigInt>>;

namespace detail {

/// Dense copy of the residual columns accepted by `keep`, over the rows they use.
template <class Keep>
DenseBig densify(const Residual& r, Keep&& keep) {
    std::vector<std::uint32_t> remap(r.rows, UINT32_MAX);
    std::size_t cols = 0;
    for (std::size_t j = 0; j < r.cols(); ++j) {
        if (!keep(r.col_ids[j])) continue;
        ++cols;
        for (const auto& [row, v] : r.columns[j]) remap[row] = 0;
    }
    std::uint32_t rows = 0;
    for (auto& x : remap)
        if (x != UINT32_MAX) x = rows++;
    const std::uint64_t cells = static_cast<std::uint64_t>(rows) * cols;
    if (cells > kResidualCellLimit)
        throw BudgetExceeded("dense residual of " + std::to_string(rows) + "x" + std::to_string(cols) +
                                 " exceeds the dense cell limit",
                             kResidualCellLimit, 0);
    DenseBig a(rows, std::vector<BigInt>(cols));
    std::size_t c = 0;
    for (std::size_t j = 0; j < r.cols(); ++j) {
        if (!keep(r.col_ids[j])) continue;
        for (const auto& [row, v] : r.columns[j]) a[remap[row]][c] = v;
        ++c;
    }
    return a;
}

inline DenseBig densify(const Residual& r) {
    return densify(r, [](std::uint32_t) { return true; });
}

inline BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

/// Sorts a diagonal into a divisibility chain (same Smith form).
inline std::vector<BigInt> normalize_diagonal(std::vector<BigInt> d) {
    for (auto& x : d) x = abs_big(x);
    std::erase_if(d, [](const BigInt& x) { return x.is_zero(); });
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            const BigInt g = boost::multiprecision::gcd(d[i], d[j]);
            if (g == d[i]) continue;
            const BigInt l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace detail

/// Nonzero invariant factors of a dense integer matrix, ascending.
inline std::vector<BigInt> smith_dense(DenseBig a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a.front().size() : 0;
    std::vector<BigInt> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            // smallest nonzero magnitude in the trailing block
            std::size_t pi = rows, pj = cols;
            BigInt best;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (!a[i][j].is_zero()) {
                        BigInt m = detail::abs_big(a[i][j]);
                        if (pi == rows || m < best) {
                            best = std::move(m);
                            pi = i;
                            pj = j;
                        }
                    }
            if (pi == rows) return detail::normalize_diagonal(std::move(diag));
            std::swap(a[t], a[pi]);
            for (auto& row : a) std::swap(row[t], row[pj]);
            bool clean = true;
            const BigInt p = a[t][t];
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t].is_zero()) continue;
                const BigInt q = a[i][t] / p;
                if (!q.is_zero())
                    for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (!a[i][t].is_zero()) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j].is_zero()) continue;
                const BigInt q = a[t][j] / p;
                if (!q.is_zero())
                    for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (!a[t][j].is_zero()) clean = false;
            }
            if (clean) break;
        }
        diag.push_back(a[t][t]);
    }
    return detail::normalize_diagonal(std::move(diag));
}

/// Rank over the rationals by fraction-free elimination.
inline std::size_t rank_bareiss(DenseBig a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a.front().size() : 0;
    std::size_t rank = 0;
    BigInt prev = 1;
    for (std::size_t j = 0; j < cols && rank < rows; ++j) {
        std::size_t piv = rows;
        for (std::size_t i = rank; i < rows; ++i)
            if (!a[i][j].is_zero()) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        std::swap(a[rank], a[piv]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t c = j + 1; c < cols; ++c)
                a[i][c] = (a[rank][j] * a[i][c] - a[i][j] * a[rank][c]) / prev;
            a[i][j] = 0;
        }
        prev = a[rank][j];
        ++rank;
    }
    return rank;
}

/// Outcome of unit pivoting.
struct EliminationResult {
    std::vector<std::uint32_t> pivot_rows;
    std::vector<std::uint32_t> pivot_cols;
    Residual residual;

    std::size_t unit_pivots() const noexcept { return pivot_rows.size(); }
};

template <class Ring>
EliminationResult eliminate_over(const SparseIntMatrix& m) {
    UnitPivotEliminator<Ring> e(m);
    e.run();
    return {e.pivot_rows(), e.pivot_cols(), e.residual()};
}

/// Unit-pivot elimination over Z: 32-bit, then 64-bit, then arbitrary precision on overflow.
inline EliminationResult eliminate_integer(const SparseIntMatrix& m) {
    try {
        return eliminate_over<ring::CheckedInt32>(m);
    } catch (const ArithmeticOverflow&) {
    }
    try {
        return eliminate_over<ring::CheckedInt64>(m);
    } catch (const ArithmeticOverflow&) {
    }
    return eliminate_over<ring::Integers>(m);
}

/// Nonzero invariant factors (ascending, each dividing the next).
inline std::vector<BigInt> smith_normal_form(const SparseIntMatrix& m) {
    auto el = eliminate_integer(m);
    std::vector<BigInt> out(el.unit_pivots(), BigInt(1));
    if (!el.residual.empty()) {
        auto rest = smith_dense(detail::densify(el.residual));
        out.insert(out.end(), rest.begin(), rest.end());
    }
    return out;
}

inline std::size_t rank_mod2(const SparseIntMatrix& m) {
    return eliminate_over<ring::GF2>(m).unit_pivots();
}

struct RationalRank {
    std::size_t rank = 0;
    std::size_t unit_pivots = 0;
    bool all_pivots_unit = true; ///< no dense residual was needed
};

inline RationalRank rank_rational(const SparseIntMatrix& m) {
    auto el = eliminate_integer(m);
    RationalRank r;
    r.unit_pivots = el.unit_pivots();
    r.rank = el.unit_pivots();
    if (!el.residual.empty()) {
        r.all_pivots_unit = false;
        r.rank += rank_bareiss(detail::densify(el.residual));
    }
    return r;
}

} // namespace indgrid
