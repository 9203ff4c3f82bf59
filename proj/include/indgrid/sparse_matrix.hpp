/**
 * Compressed-sparse-column integer matrix.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace indgrid {

struct MatrixEntry {
    std::uint32_t row;
    std::int64_t value;
    bool operator==(const MatrixEntry&) const = default;
};

class SparseIntMatrix {
public:
    SparseIntMatrix() = default;
    SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), col_start_(cols + 1, 0) {}

    /// Builds from dense row-major data (tests and small inputs).
    static SparseIntMatrix from_dense(const std::vector<std::vector<std::int64_t>>& dense) {
        const std::size_t r = dense.size();
        const std::size_t c = r ? dense.front().size() : 0;
        SparseIntMatrix m;
        m.rows_ = r;
        m.cols_ = c;
        m.col_start_.assign(1, 0);
        for (std::size_t j = 0; j < c; ++j) {
            for (std::size_t i = 0; i < r; ++i) {
                if (dense[i].size() != c) throw std::invalid_argument("ragged dense matrix");
                if (dense[i][j] != 0) m.entries_.push_back({static_cast<std::uint32_t>(i), dense[i][j]});
            }
            m.col_start_.push_back(m.entries_.size());
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nonzeros() const noexcept { return entries_.size(); }

    std::span<const MatrixEntry> column(std::size_t j) const {
        return {entries_.data() + col_start_[j], entries_.data() + col_start_[j + 1]};
    }

    /// Appends the next column; entries must be sorted by row with nonzero values.
    void push_column(std::span<const MatrixEntry> col) {
        entries_.insert(entries_.end(), col.begin(), col.end());
        col_start_.push_back(entries_.size());
        ++cols_;
    }

    /// Starts an empty matrix with a fixed row count; fill with push_column.
    static SparseIntMatrix with_rows(std::size_t rows, std::size_t reserve_nnz = 0) {
        SparseIntMatrix m;
        m.rows_ = rows;
        m.col_start_.assign(1, 0);
        m.entries_.reserve(reserve_nnz);
        return m;
    }

    /// Keeps rows/columns whose mask entry is nonzero; kept rows are renumbered in order.
    SparseIntMatrix submatrix(const std::vector<char>& keep_rows, const std::vector<char>& keep_cols) const {
        if (keep_rows.size() != rows_ || keep_cols.size() != cols_) throw std::invalid_argument("mask size mismatch");
        std::vector<std::uint32_t> remap(rows_, 0);
        std::uint32_t next = 0;
        for (std::size_t i = 0; i < rows_; ++i)
            if (keep_rows[i]) remap[i] = next++;
        auto out = with_rows(next);
        std::vector<MatrixEntry> col;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!keep_cols[j]) continue;
            col.clear();
            for (auto e : column(j))
                if (keep_rows[e.row]) col.push_back({remap[e.row], e.value});
            out.push_column(col);
        }
        return out;
    }

    std::vector<std::vector<std::int64_t>> to_dense() const {
        std::vector<std::vector<std::int64_t>> d(rows_, std::vector<std::int64_t>(cols_, 0));
        for (std::size_t j = 0; j < cols_; ++j)
            for (auto e : column(j)) d[e.row][j] = e.value;
        return d;
    }

    bool operator==(const SparseIntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::size_t> col_start_{0};
    std::vector<MatrixEntry> entries_;
};

/// Product a * b; used for boundary-of-boundary checks.
inline SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not compose");
    auto out = SparseIntMatrix::with_rows(a.rows());
    std::vector<std::int64_t> acc(a.rows(), 0);
    std::vector<std::uint32_t> touched;
    for (std::size_t j = 0; j < b.cols(); ++j) {
        touched.clear();
        for (auto eb : b.column(j)) {
            for (auto ea : a.column(eb.row)) {
                if (acc[ea.row] == 0) touched.push_back(ea.row);
                acc[ea.row] += ea.value * eb.value;
            }
        }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        std::vector<MatrixEntry> col;
        for (auto r : touched) {
            if (acc[r] != 0) col.push_back({r, acc[r]});
            acc[r] = 0;
        }
        out.push_column(col);
    }
    return out;
}

} // namespace indgrid
