/**
 * Sparse elimination with unit pivots.
 *
 * Columns are pivoted in order of increasing size; inside a column the unit
 * entry whose row is shortest is chosen. Each pivot clears its row from every
 * other column by column operations and then drops the pivot row and column,
 * which leaves the invariant factors of the remaining block unchanged apart
 * from one factor 1. Columns without a unit entry are left for the residual,
 * which the caller finishes densely.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sparse_matrix.hpp"

namespace indgrid {

using BigInt = boost::multiprecision::cpp_int;

struct ArithmeticOverflow : std::overflow_error {
    ArithmeticOverflow() : std::overflow_error("fixed-width integer overflow during elimination") {}
};

namespace ring {

struct GF2 {
    using value_type = std::uint8_t;
    static value_type from(std::int64_t v) { return static_cast<value_type>(v & 1); }
    static bool is_zero(value_type v) { return v == 0; }
    static bool is_unit(value_type v) { return v != 0; }
    static value_type sub_mul(value_type a, value_type f, value_type b) { return a ^ (f & b); }
    static value_type div_unit(value_type a, value_type) { return a; }
    static BigInt to_big(value_type v) { return BigInt(v); }
};

/// Exact integers in a fixed width; throws ArithmeticOverflow instead of wrapping.
template <class T>
struct CheckedInt {
    using value_type = T;
    static value_type from(std::int64_t v) {
        value_type r;
        if (__builtin_add_overflow(v, 0, &r)) throw ArithmeticOverflow();
        return r;
    }
    static bool is_zero(value_type v) { return v == 0; }
    static bool is_unit(value_type v) { return v == 1 || v == -1; }
    static value_type sub_mul(value_type a, value_type f, value_type b) {
        value_type p, r;
        if (__builtin_mul_overflow(f, b, &p) || __builtin_sub_overflow(a, p, &r)) throw ArithmeticOverflow();
        return r;
    }
    static value_type div_unit(value_type a, value_type u) {
        if (u == 1) return a;
        value_type r;
        if (__builtin_sub_overflow(value_type{0}, a, &r)) throw ArithmeticOverflow();
        return r;
    }
    static BigInt to_big(value_type v) { return BigInt(v); }
};

using CheckedInt32 = CheckedInt<std::int32_t>;
using CheckedInt64 = CheckedInt<std::int64_t>;

struct Integers {
    using value_type = BigInt;
    static value_type from(std::int64_t v) { return BigInt(v); }
    static bool is_zero(const value_type& v) { return v.is_zero(); }
    static bool is_unit(const value_type& v) { return v == 1 || v == -1; }
    static value_type sub_mul(const value_type& a, const value_type& f, const value_type& b) { return a - f * b; }
    static value_type div_unit(const value_type& a, const value_type& u) { return u == 1 ? a : value_type(-a); }
    static BigInt to_big(const value_type& v) { return v; }
};

} // namespace ring

/// Columns left without a unit entry, in original row and column numbering.
struct Residual {
    std::size_t rows = 0;
    std::vector<std::uint32_t> col_ids;
    std::vector<std::vector<std::pair<std::uint32_t, BigInt>>> columns;

    std::size_t cols() const noexcept { return columns.size(); }
    bool empty() const noexcept { return columns.empty(); }
};

template <class Ring>
class UnitPivotEliminator {
public:
    using V = typename Ring::value_type;
    struct Entry {
        std::uint32_t row;
        V val;
    };

    explicit UnitPivotEliminator(const SparseIntMatrix& m)
        : rows_(m.rows()), cols_(m.cols()), row_count_(m.rows(), 0), row_cols_(m.rows()),
          col_alive_(m.cols(), 1), row_alive_(m.rows(), 1), stuck_(m.cols(), 0) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            auto& col = cols_[j];
            col.reserve(m.column(j).size());
            for (auto e : m.column(j)) {
                V v = Ring::from(e.value);
                if (Ring::is_zero(v)) continue;
                col.push_back({e.row, std::move(v)});
                ++row_count_[e.row];
                row_cols_[e.row].push_back(static_cast<std::uint32_t>(j));
            }
        }
    }

    /// Performs every available unit pivot.
    void run() {
        using Item = std::pair<std::uint32_t, std::uint32_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        for (std::size_t j = 0; j < cols_.size(); ++j)
            heap.emplace(static_cast<std::uint32_t>(cols_[j].size()), static_cast<std::uint32_t>(j));
        std::vector<Entry> scratch;
        while (!heap.empty()) {
            auto [nz, c] = heap.top();
            heap.pop();
            if (!col_alive_[c] || stuck_[c] || nz != cols_[c].size()) continue;
            if (nz == 0) {
                col_alive_[c] = 0;
                continue;
            }
            std::size_t best = cols_[c].size();
            std::uint32_t best_count = UINT32_MAX;
            for (std::size_t i = 0; i < cols_[c].size(); ++i) {
                const auto& e = cols_[c][i];
                if (Ring::is_unit(e.val) && row_count_[e.row] < best_count) {
                    best = i;
                    best_count = row_count_[e.row];
                }
            }
            if (best == cols_[c].size()) {
                stuck_[c] = 1;
                continue;
            }
            const std::uint32_t r = cols_[c][best].row;
            const V p = cols_[c][best].val;
            std::vector<std::uint32_t> others;
            others.swap(row_cols_[r]);
            for (std::uint32_t k : others) {
                if (k == c || !col_alive_[k]) continue;
                auto& ck = cols_[k];
                auto it = std::lower_bound(ck.begin(), ck.end(), r,
                                           [](const Entry& e, std::uint32_t row) { return e.row < row; });
                if (it == ck.end() || it->row != r) continue;
                const V factor = Ring::div_unit(it->val, p);
                eliminate_into(k, c, r, factor, scratch);
                stuck_[k] = 0;
                heap.emplace(static_cast<std::uint32_t>(cols_[k].size()), k);
            }
            for (const auto& e : cols_[c]) --row_count_[e.row];
            col_alive_[c] = 0;
            row_alive_[r] = 0;
            std::vector<Entry>().swap(cols_[c]);
            pivot_rows_.push_back(r);
            pivot_cols_.push_back(c);
        }
    }

    std::size_t pivots() const noexcept { return pivot_rows_.size(); }
    /// Row and column of each unit pivot, in pivot order.
    const std::vector<std::uint32_t>& pivot_rows() const noexcept { return pivot_rows_; }
    const std::vector<std::uint32_t>& pivot_cols() const noexcept { return pivot_cols_; }

    Residual residual() const {
        Residual out;
        out.rows = rows_;
        for (std::size_t j = 0; j < cols_.size(); ++j) {
            if (!col_alive_[j] || cols_[j].empty()) continue;
            std::vector<std::pair<std::uint32_t, BigInt>> col;
            for (const auto& e : cols_[j]) col.emplace_back(e.row, Ring::to_big(e.val));
            out.col_ids.push_back(static_cast<std::uint32_t>(j));
            out.columns.push_back(std::move(col));
        }
        return out;
    }

private:
    // cols_[k] -= factor * cols_[c]; row r cancels.
    void eliminate_into(std::uint32_t k, std::uint32_t c, std::uint32_t r, const V& factor, std::vector<Entry>& out) {
        const auto& a = cols_[k];
        const auto& b = cols_[c];
        out.clear();
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].row < b[j].row)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].row < a[i].row) {
                const std::uint32_t row = b[j].row;
                V v = Ring::sub_mul(Ring::from(0), factor, b[j].val);
                ++j;
                if (Ring::is_zero(v)) continue;
                out.push_back({row, std::move(v)});
                ++row_count_[row];
                note_row_column(row, k);
            } else {
                const std::uint32_t row = a[i].row;
                V v = Ring::sub_mul(a[i].val, factor, b[j].val);
                ++i;
                ++j;
                if (row == r || Ring::is_zero(v)) {
                    --row_count_[row];
                    continue;
                }
                out.push_back({row, std::move(v)});
            }
        }
        cols_[k].swap(out);
    }

    void note_row_column(std::uint32_t row, std::uint32_t k) {
        auto& rc = row_cols_[row];
        rc.push_back(k);
        if (rc.size() > 2 * static_cast<std::size_t>(row_count_[row]) + 32) {
            std::sort(rc.begin(), rc.end());
            rc.erase(std::unique(rc.begin(), rc.end()), rc.end());
            std::erase_if(rc, [&](std::uint32_t col) {
                if (!col_alive_[col]) return true;
                if (col == k) return false; // being rebuilt
                const auto& ck = cols_[col];
                return !std::binary_search(ck.begin(), ck.end(), Entry{row, V{}},
                                           [](const Entry& x, const Entry& y) { return x.row < y.row; });
            });
        }
    }

    std::size_t rows_;
    std::vector<std::vector<Entry>> cols_;
    std::vector<std::uint32_t> row_count_;
    std::vector<std::vector<std::uint32_t>> row_cols_;
    std::vector<char> col_alive_;
    std::vector<char> row_alive_;
    std::vector<char> stuck_;
    std::vector<std::uint32_t> pivot_rows_;
    std::vector<std::uint32_t> pivot_cols_;
};

} // namespace indgrid
