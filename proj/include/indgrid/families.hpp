/**
 * Named graph families: grids, thinned-column grids X/Y (3, 4 and 5 rows),
 * the block-extended five-row graphs A_{n,k}, A_{n,k} - v, and their block
 * tails B_k, B'_k.
 *
 * All grid-derived vertices are labelled "(x,y)" with 1-based column x and
 * row y, ordered lexicographically by (x, y).
 */
#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace indgrid {

enum class FamilyKind { Path, Cycle, Grid, X3, Y3, X4, Y4, X5, Y5, A, AMinusV, B, BPrime };

/**
 * Symbolic family descriptor. `n` is the length parameter (unused for B and
 * B'); `k` is the row count for Grid and the block count for A, A-v, B, B'.
 */
struct FamilySpec {
    FamilyKind kind = FamilyKind::Path;
    int n = 1;
    int k = 0;

    auto operator<=>(const FamilySpec&) const = default;

    static FamilySpec path(int n) { return {FamilyKind::Path, n, 0}; }
    static FamilySpec cycle(int n) { return {FamilyKind::Cycle, n, 0}; }
    static FamilySpec grid(int n, int k) { return {FamilyKind::Grid, n, k}; }
    static FamilySpec a(int n, int k) { return {FamilyKind::A, n, k}; }
    static FamilySpec a_minus_v(int n, int k) { return {FamilyKind::AMinusV, n, k}; }
    static FamilySpec b(int k) { return {FamilyKind::B, 0, k}; }
    static FamilySpec b_prime(int k) { return {FamilyKind::BPrime, 0, k}; }

    /// Throws std::invalid_argument when parameters are out of range.
    void validate() const {
        auto need = [](bool ok, const char* what) {
            if (!ok) throw std::invalid_argument(what);
        };
        switch (kind) {
        case FamilyKind::Path:
        case FamilyKind::X3:
        case FamilyKind::Y3:
        case FamilyKind::X4:
        case FamilyKind::Y4:
        case FamilyKind::X5:
        case FamilyKind::Y5: need(n >= 1, "family needs n >= 1"); break;
        case FamilyKind::Cycle: need(n >= 3, "cycle needs n >= 3"); break;
        case FamilyKind::Grid: need(n >= 1 && k >= 1, "grid needs n, k >= 1"); break;
        case FamilyKind::A: need(n >= 1 && k >= 0, "A needs n >= 1, k >= 0"); break;
        case FamilyKind::AMinusV: need(n >= 3 && k >= 0, "A-v needs n >= 3, k >= 0"); break;
        case FamilyKind::B:
        case FamilyKind::BPrime: need(k >= 1, "B and B' need k >= 1"); break;
        }
    }

    std::string to_string() const {
        const auto N = std::to_string(n), K = std::to_string(k);
        switch (kind) {
        case FamilyKind::Path: return "path:" + N;
        case FamilyKind::Cycle: return "cycle:" + N;
        case FamilyKind::Grid: return "grid:" + N + "x" + K;
        case FamilyKind::X3: return "x3:" + N;
        case FamilyKind::Y3: return "y3:" + N;
        case FamilyKind::X4: return "x4:" + N;
        case FamilyKind::Y4: return "y4:" + N;
        case FamilyKind::X5: return "x5:" + N;
        case FamilyKind::Y5: return "y5:" + N;
        case FamilyKind::A: return "a:" + N + "," + K;
        case FamilyKind::AMinusV: return "a-v:" + N + "," + K;
        case FamilyKind::B: return "b:" + K;
        case FamilyKind::BPrime: return "bp:" + K;
        }
        return {};
    }

    /// Parses `grid:NxK`, `path:N`, `cycle:N`, `x3:N` .. `y5:N`, `a:N,K`, `a-v:N,K`, `b:K`, `bp:K`.
    static FamilySpec parse(std::string_view text) {
        const auto colon = text.find(':');
        if (colon == std::string_view::npos) throw ParseError("family spec needs 'kind:params': '" + std::string(text) + "'");
        const auto head = text.substr(0, colon);
        const auto body = text.substr(colon + 1);

        auto parse_ints = [&](char sep, std::size_t count) {
            std::vector<int> out;
            std::size_t pos = 0;
            while (true) {
                const auto next = body.find(sep, pos);
                const auto piece = body.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
                int v = 0;
                auto [p, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
                if (ec != std::errc{} || p != piece.data() + piece.size() || piece.empty())
                    throw ParseError("bad integer in family spec '" + std::string(text) + "'");
                out.push_back(v);
                if (next == std::string_view::npos) break;
                pos = next + 1;
            }
            if (out.size() != count) throw ParseError("wrong parameter count in family spec '" + std::string(text) + "'");
            return out;
        };

        FamilySpec s;
        if (head == "grid") {
            auto v = parse_ints('x', 2);
            s = grid(v[0], v[1]);
        } else if (head == "a" || head == "a-v") {
            auto v = parse_ints(',', 2);
            s = head == "a" ? a(v[0], v[1]) : a_minus_v(v[0], v[1]);
        } else if (head == "b" || head == "bp") {
            auto v = parse_ints(',', 1);
            s = head == "b" ? b(v[0]) : b_prime(v[0]);
        } else {
            static const std::pair<std::string_view, FamilyKind> single[] = {
                {"path", FamilyKind::Path}, {"cycle", FamilyKind::Cycle}, {"x3", FamilyKind::X3},
                {"y3", FamilyKind::Y3},     {"x4", FamilyKind::X4},       {"y4", FamilyKind::Y4},
                {"x5", FamilyKind::X5},     {"y5", FamilyKind::Y5}};
            auto it = std::find_if(std::begin(single), std::end(single), [&](auto& e) { return e.first == head; });
            if (it == std::end(single)) throw ParseError("unknown family kind '" + std::string(head) + "'");
            s = FamilySpec{it->second, parse_ints(',', 1)[0], 0};
        }
        try {
            s.validate();
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
        }
        return s;
    }
};

inline std::string coord_label(int x, int y) { return pair_label(std::to_string(x), std::to_string(y)); }

using Coord = std::pair<int, int>;

/// Induced subgraph of the integer lattice on `cells`, ordered by (x, y).
inline Graph lattice_graph(std::set<Coord> const& cells) {
    std::vector<std::string> labels;
    std::vector<Coord> order(cells.begin(), cells.end());
    labels.reserve(order.size());
    for (auto [x, y] : order) labels.push_back(coord_label(x, y));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto [x, y] = order[i];
        for (Coord nb : {Coord{x + 1, y}, Coord{x, y + 1}}) {
            auto it = std::lower_bound(order.begin(), order.end(), nb);
            if (it != order.end() && *it == nb) edges.emplace_back(i, static_cast<std::size_t>(it - order.begin()));
        }
    }
    return Graph(std::move(labels), edges);
}

inline std::set<Coord> grid_cells(int n, int k) {
    std::set<Coord> cells;
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= k; ++y) cells.emplace(x, y);
    return cells;
}

/// The n x k grid: columns 1..n, rows 1..k, edges between L1-distance-1 cells.
inline Graph make_grid(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("grid dimensions must be positive");
    return lattice_graph(grid_cells(n, k));
}

enum class ThinnedColumn { X, Y };

/**
 * Grid with `rows` rows whose last column is thinned:
 *   rows 3: X drops (n,2);        Y drops (n,1),(n,3)
 *   rows 4: X drops (n,2),(n,3);  Y drops (n,1),(n,4)
 *   rows 5: X drops (n,2),(n,4);  Y drops (n,1),(n,3),(n,5)
 */
inline Graph make_XY(int rows, ThinnedColumn which, int n) {
    if (n < 1) throw std::invalid_argument("X/Y family needs n >= 1");
    std::vector<int> dropped;
    const bool x = which == ThinnedColumn::X;
    switch (rows) {
    case 3: dropped = x ? std::vector<int>{2} : std::vector<int>{1, 3}; break;
    case 4: dropped = x ? std::vector<int>{2, 3} : std::vector<int>{1, 4}; break;
    case 5: dropped = x ? std::vector<int>{2, 4} : std::vector<int>{1, 3, 5}; break;
    default: throw std::invalid_argument("X/Y families exist for 3, 4 or 5 rows");
    }
    auto cells = grid_cells(n, rows);
    for (int y : dropped) cells.erase({n, y});
    return lattice_graph(cells);
}

/// Cells of the 15-vertex block appended after column `offset` (= n + 5j).
inline std::vector<Coord> a_block_cells(int offset) {
    std::vector<Coord> out;
    for (int dx : {1, 2})
        for (int y : {2, 4}) out.emplace_back(offset + dx, y);
    for (int dx = 2; dx <= 5; ++dx)
        for (int y : {1, 5}) out.emplace_back(offset + dx, y);
    for (int y : {2, 3, 4}) out.emplace_back(offset + 5, y);
    return out;
}

inline std::set<Coord> a_cells(int n, int k) {
    auto cells = grid_cells(n, 5);
    for (int j = 0; j < k; ++j)
        for (auto c : a_block_cells(n + 5 * j)) cells.insert(c);
    return cells;
}

/// A_{n,0} is the n x 5 grid; each further block adds 15 vertices. |V| = 5n + 15k.
inline Graph make_A(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("A needs n >= 1 and k >= 0");
    return lattice_graph(a_cells(n, k));
}

/// A_{n,k} with the vertex (n-2, 3) removed.
inline Graph make_A_minus_v(int n, int k) {
    if (n < 3 || k < 0) throw std::invalid_argument("A-v needs n >= 3 and k >= 0");
    auto cells = a_cells(n, k);
    cells.erase({n - 2, 3});
    return lattice_graph(cells);
}

/// A_{1,k} without its first column; labels keep the n = 1 coordinates.
inline Graph make_B(int k) {
    if (k < 1) throw std::invalid_argument("B needs k >= 1");
    auto cells = a_cells(1, k);
    std::erase_if(cells, [](const Coord& c) { return c.first <= 1; });
    return lattice_graph(cells);
}

/// B_k restricted to columns > 6 plus the cells (6,2), (6,3), (6,4).
inline Graph make_B_prime(int k) {
    if (k < 1) throw std::invalid_argument("B' needs k >= 1");
    auto cells = a_cells(1, k);
    std::erase_if(cells, [](const Coord& c) {
        return c.first < 6 || (c.first == 6 && (c.second == 1 || c.second == 5));
    });
    return lattice_graph(cells);
}

inline Graph build(const FamilySpec& spec) {
    spec.validate();
    switch (spec.kind) {
    case FamilyKind::Path: return make_path(spec.n);
    case FamilyKind::Cycle: return make_cycle(spec.n);
    case FamilyKind::Grid: return make_grid(spec.n, spec.k);
    case FamilyKind::X3: return make_XY(3, ThinnedColumn::X, spec.n);
    case FamilyKind::Y3: return make_XY(3, ThinnedColumn::Y, spec.n);
    case FamilyKind::X4: return make_XY(4, ThinnedColumn::X, spec.n);
    case FamilyKind::Y4: return make_XY(4, ThinnedColumn::Y, spec.n);
    case FamilyKind::X5: return make_XY(5, ThinnedColumn::X, spec.n);
    case FamilyKind::Y5: return make_XY(5, ThinnedColumn::Y, spec.n);
    case FamilyKind::A: return make_A(spec.n, spec.k);
    case FamilyKind::AMinusV: return make_A_minus_v(spec.n, spec.k);
    case FamilyKind::B: return make_B(spec.k);
    case FamilyKind::BPrime: return make_B_prime(spec.k);
    }
    throw std::invalid_argument("unknown family kind");
}

} // namespace indgrid
