/**
 * Independence complexes as explicit chain complexes.
 *
 * Faces are enumerated depth-first over increasing vertex indices with a
 * bitset of remaining candidates, which yields every dimension's face list
 * already in lexicographic order. The empty face is implicit at dimension -1.
 */
#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <ostream>
#include <span>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "sparse_matrix.hpp"

namespace indgrid {

inline constexpr std::uint64_t kDefaultFaceBudget = 20'000'000;

/// Faces of one dimension, stored flat: face i occupies [i*(dim+1), (i+1)*(dim+1)).
struct FaceList {
    int dim = 0;
    std::vector<std::uint16_t> vertices;

    std::size_t size() const noexcept { return vertices.size() / static_cast<std::size_t>(dim + 1); }
    std::span<const std::uint16_t> face(std::size_t i) const {
        const auto w = static_cast<std::size_t>(dim + 1);
        return {vertices.data() + i * w, w};
    }

    /// Index of `f` (sorted, size dim+1) or size() when absent.
    std::size_t find(std::span<const std::uint16_t> f) const {
        std::size_t lo = 0, hi = size();
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            auto m = face(mid);
            if (std::lexicographical_compare(m.begin(), m.end(), f.begin(), f.end()))
                lo = mid + 1;
            else
                hi = mid;
        }
        if (lo < size()) {
            auto m = face(lo);
            if (std::equal(m.begin(), m.end(), f.begin(), f.end())) return lo;
        }
        return size();
    }
};

struct FaceSet {
    std::size_t vertex_count = 0;
    std::vector<FaceList> by_dim; ///< by_dim[d] holds the d-faces, d >= 0

    int top_dim() const noexcept { return static_cast<int>(by_dim.size()) - 1; }

    std::size_t count(int d) const {
        if (d == -1) return 1;
        if (d < -1 || d > top_dim()) return 0;
        return by_dim[static_cast<std::size_t>(d)].size();
    }

    /// f-vector including the empty face: (1, f_0, f_1, ...).
    std::vector<std::uint64_t> f_vector() const {
        std::vector<std::uint64_t> f{1};
        for (const auto& l : by_dim) f.push_back(l.size());
        return f;
    }

    std::uint64_t total() const {
        std::uint64_t t = 1;
        for (const auto& l : by_dim) t += l.size();
        return t;
    }

    std::uint64_t largest_dimension_count() const {
        std::uint64_t m = 1;
        for (const auto& l : by_dim) m = std::max<std::uint64_t>(m, l.size());
        return m;
    }
};

namespace detail {

/**
 * Visits every nonempty independent set of size <= max_size in lexicographic
 * order. visit(span of sorted vertex indices) returns false to stop early.
 */
template <class Visit>
void for_each_independent_set(const Graph& g, std::size_t max_size, Visit&& visit) {
    const std::size_t n = g.order();
    if (n == 0 || max_size == 0) return;
    if (n > std::numeric_limits<std::uint16_t>::max()) throw std::length_error("graph too large for face storage");
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> nbr(n * words);
    for (std::size_t v = 0; v < n; ++v) {
        auto w = g.neighbors(v).words();
        std::copy(w.begin(), w.end(), nbr.begin() + static_cast<std::ptrdiff_t>(v * words));
    }
    const std::size_t depth_cap = std::min(max_size, n);
    std::vector<std::uint64_t> cand((depth_cap + 1) * words, 0);
    for (std::size_t v = 0; v < n; ++v) cand[v >> 6] |= std::uint64_t{1} << (v & 63);
    std::vector<std::uint16_t> current;
    current.reserve(depth_cap);

    // Explicit stack: per depth, the next word/bit position to scan.
    std::vector<std::size_t> cursor(depth_cap + 1, 0);
    std::size_t depth = 0;
    while (true) {
        std::uint64_t* c = cand.data() + depth * words;
        std::size_t& cur = cursor[depth];
        // find next candidate at or after cur
        std::size_t found = n;
        for (std::size_t w = cur >> 6; w < words; ++w) {
            std::uint64_t bits = c[w];
            if (w == (cur >> 6)) bits &= ~std::uint64_t{0} << (cur & 63);
            if (bits) {
                found = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                break;
            }
        }
        if (found >= n) {
            if (depth == 0) return;
            --depth;
            current.pop_back();
            continue;
        }
        cur = found + 1;
        current.push_back(static_cast<std::uint16_t>(found));
        if (!visit(std::span<const std::uint16_t>(current))) return;
        if (depth + 1 < depth_cap) {
            std::uint64_t* next = cand.data() + (depth + 1) * words;
            const std::uint64_t* nb = nbr.data() + found * words;
            bool any = false;
            for (std::size_t w = 0; w < words; ++w) {
                next[w] = c[w] & ~nb[w];
                any |= next[w] != 0;
            }
            // only indices greater than `found`
            const std::size_t fw = found >> 6;
            for (std::size_t w = 0; w < fw; ++w) next[w] = 0;
            next[fw] &= (found & 63) == 63 ? 0 : (~std::uint64_t{0} << ((found & 63) + 1));
            if (any) {
                ++depth;
                cursor[depth] = found + 1;
                continue;
            }
        }
        current.pop_back();
    }
}

} // namespace detail

struct EnumerationOptions {
    std::optional<int> max_dim;
    std::uint64_t budget = kDefaultFaceBudget;
};

/// All independent sets grouped by dimension (size - 1), each list lexicographic.
inline FaceSet enumerate_faces(const Graph& g, const EnumerationOptions& opts = {}) {
    FaceSet fs;
    fs.vertex_count = g.order();
    const std::size_t max_size =
        opts.max_dim ? static_cast<std::size_t>(std::max(*opts.max_dim + 1, 0)) : g.order();
    std::uint64_t count = 1;
    detail::for_each_independent_set(g, max_size, [&](std::span<const std::uint16_t> face) {
        if (++count > opts.budget)
            throw BudgetExceeded("face budget of " + std::to_string(opts.budget) + " exceeded while enumerating a " +
                                     std::to_string(g.order()) + "-vertex graph",
                                 opts.budget, g.order());
        const std::size_t d = face.size() - 1;
        if (fs.by_dim.size() <= d) fs.by_dim.push_back(FaceList{static_cast<int>(d), {}});
        auto& v = fs.by_dim[d].vertices;
        v.insert(v.end(), face.begin(), face.end());
        return true;
    });
    return fs;
}

/// f-vector (1, f_0, f_1, ...) by counting only.
inline std::vector<std::uint64_t> count_faces(const Graph& g, std::uint64_t budget = std::numeric_limits<std::uint64_t>::max()) {
    std::vector<std::uint64_t> f{1};
    std::uint64_t count = 1;
    detail::for_each_independent_set(g, g.order(), [&](std::span<const std::uint16_t> face) {
        if (++count > budget)
            throw BudgetExceeded("face budget of " + std::to_string(budget) + " exceeded while counting faces of a " +
                                     std::to_string(g.order()) + "-vertex graph",
                                 budget, g.order());
        if (f.size() <= face.size()) f.push_back(0);
        ++f[face.size()];
        return true;
    });
    return f;
}

/// True when the complex has more than `limit` faces in total (counting stops early).
inline bool face_count_exceeds(const Graph& g, std::uint64_t limit) {
    std::uint64_t count = 1;
    bool over = count > limit;
    if (!over)
        detail::for_each_independent_set(g, g.order(), [&](std::span<const std::uint16_t>) {
            over = ++count > limit;
            return !over;
        });
    return over;
}

/// Upper bound on the independence number from a greedy clique cover.
inline std::size_t independence_upper_bound(const Graph& g) {
    VertexSet uncovered = VertexSet::full(g.order());
    std::size_t cliques = 0;
    for (std::size_t v = 0; v < g.order(); ++v) {
        if (!uncovered.contains(v)) continue;
        ++cliques;
        VertexSet clique(g.order());
        clique.insert(v);
        VertexSet pool = g.neighbors(v) & uncovered;
        while (!pool.empty()) {
            std::size_t w = pool.to_vector().front();
            clique.insert(w);
            pool &= g.neighbors(w);
        }
        uncovered -= clique;
    }
    return cliques;
}

/**
 * Signed boundary matrix d_d : C_d -> C_{d-1}. Column j is face j of
 * dimension d; the entry for the facet omitting the i-th vertex is (-1)^i.
 * For d = 0 the reduced complex uses the augmentation (a 1 x f_0 row of ones);
 * the unreduced complex has zero rows.
 */
inline SparseIntMatrix boundary_matrix(const FaceSet& faces, int d, bool reduced = true) {
    if (d < 0 || d > faces.top_dim()) throw std::out_of_range("no faces in requested dimension");
    const FaceList& cols = faces.by_dim[static_cast<std::size_t>(d)];
    if (d == 0) {
        auto m = SparseIntMatrix::with_rows(reduced ? 1 : 0, reduced ? cols.size() : 0);
        const MatrixEntry one{0, 1};
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (reduced)
                m.push_column(std::span<const MatrixEntry>(&one, 1));
            else
                m.push_column({});
        }
        return m;
    }
    const FaceList& rows = faces.by_dim[static_cast<std::size_t>(d - 1)];
    auto m = SparseIntMatrix::with_rows(rows.size(), cols.size() * static_cast<std::size_t>(d + 1));
    std::vector<std::uint16_t> facet(static_cast<std::size_t>(d));
    std::vector<MatrixEntry> col(static_cast<std::size_t>(d + 1));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto f = cols.face(j);
        for (int i = 0; i <= d; ++i) {
            std::size_t p = 0;
            for (int q = 0; q <= d; ++q)
                if (q != i) facet[p++] = f[static_cast<std::size_t>(q)];
            const std::size_t r = rows.find(facet);
            if (r == rows.size()) throw InconsistentComplex("facet missing from face list (not a simplicial complex)");
            col[static_cast<std::size_t>(i)] = {static_cast<std::uint32_t>(r), (i % 2 == 0) ? 1 : -1};
        }
        // facets omitting later vertices are lexicographically larger
        std::reverse(col.begin(), col.end());
        m.push_column(col);
    }
    return m;
}

struct ChainComplexData {
    FaceSet faces;
    bool reduced = true;
    std::vector<SparseIntMatrix> boundaries; ///< boundaries[d] = d_d, d = 0..top

    int top_dim() const noexcept { return faces.top_dim(); }
};

inline ChainComplexData boundary_matrices(FaceSet faces, bool reduced = true) {
    ChainComplexData c;
    c.reduced = reduced;
    c.faces = std::move(faces);
    for (int d = 0; d <= c.faces.top_dim(); ++d) c.boundaries.push_back(boundary_matrix(c.faces, d, reduced));
    return c;
}

inline ChainComplexData build_chain_complex(const Graph& g, const EnumerationOptions& opts = {}) {
    return boundary_matrices(enumerate_faces(g, opts), true);
}

/// d_{d-1} * d_d == 0 for every d.
inline bool boundary_squares_to_zero(const ChainComplexData& c) {
    for (std::size_t d = 1; d < c.boundaries.size(); ++d)
        if (multiply(c.boundaries[d - 1], c.boundaries[d]).nonzeros() != 0) return false;
    return true;
}

inline std::int64_t euler_from_f_vector(const std::vector<std::uint64_t>& f, bool reduced) {
    // f[0] is the empty face (dimension -1)
    std::int64_t chi = 0;
    for (std::size_t i = 1; i < f.size(); ++i) {
        const auto v = static_cast<std::int64_t>(f[i]);
        chi += (i % 2 == 1) ? v : -v;
    }
    return reduced ? chi - 1 : chi;
}

/// Euler characteristic of I(g) by face counting.
inline std::int64_t euler_characteristic(const Graph& g, bool reduced = false,
                                         std::uint64_t budget = std::numeric_limits<std::uint64_t>::max()) {
    return euler_from_f_vector(count_faces(g, budget), reduced);
}

/// Face dump: `c <graph-hash>` then `f <dim> <v1> ...` (1-based, sorted).
inline void write_face_dump(std::ostream& out, const Graph& g, const FaceSet& faces) {
    out << "c " << graph_hash_hex(g) << '\n';
    for (const auto& list : faces.by_dim) {
        for (std::size_t i = 0; i < list.size(); ++i) {
            out << "f " << list.dim;
            for (auto v : list.face(i)) out << ' ' << v + 1;
            out << '\n';
        }
    }
}

} // namespace indgrid
