/**
 * Finite simple graphs with label-ordered vertex indices.
 *
 * A Graph is an immutable value. Vertex identity is the label; the index of
 * a vertex is its position in the label list given at construction, so every
 * constructor below fixes a deterministic index order (grids are ordered
 * lexicographically by coordinate). Adjacency is one VertexSet per vertex.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vertex_set.hpp"

namespace indgrid {

using Edge = std::pair<std::size_t, std::size_t>;

class Graph {
public:
    /// The empty graph (no vertices).
    Graph() = default;

    Graph(std::vector<std::string> labels, std::span<const Edge> edges)
        : labels_(std::move(labels)) {
        const std::size_t n = labels_.size();
        adjacency_.assign(n, VertexSet(n));
        index_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!index_.emplace(labels_[i], i).second)
                throw std::invalid_argument("duplicate vertex label '" + labels_[i] + "'");
        }
        for (auto [a, b] : edges) {
            if (a >= n || b >= n) throw std::invalid_argument("edge endpoint out of range");
            if (a == b) throw std::invalid_argument("self-loop at vertex '" + labels_[a] + "'");
            adjacency_[a].insert(b);
            adjacency_[b].insert(a);
        }
    }

    Graph(std::vector<std::string> labels, std::vector<VertexSet> adjacency)
        : labels_(std::move(labels)), adjacency_(std::move(adjacency)) {
        if (labels_.size() != adjacency_.size())
            throw std::invalid_argument("label and adjacency counts differ");
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (!index_.emplace(labels_[i], i).second)
                throw std::invalid_argument("duplicate vertex label '" + labels_[i] + "'");
        }
        check_invariants();
    }

    std::size_t order() const noexcept { return labels_.size(); }
    bool empty() const noexcept { return labels_.empty(); }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (const auto& nb : adjacency_) twice += nb.count();
        return twice / 2;
    }

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }

    std::optional<std::size_t> index_of(std::string_view label) const {
        auto it = index_.find(std::string(label));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t require_index(std::string_view label) const {
        if (auto i = index_of(label)) return *i;
        throw std::invalid_argument("unknown vertex label '" + std::string(label) + "'");
    }

    const VertexSet& neighbors(std::size_t i) const { return adjacency_.at(i); }
    bool adjacent(std::size_t a, std::size_t b) const { return adjacency_.at(a).contains(b); }
    std::size_t degree(std::size_t i) const { return adjacency_.at(i).count(); }

    /// Edges as index pairs (i < j), sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (std::size_t i = 0; i < order(); ++i)
            adjacency_[i].for_each([&](std::size_t j) {
                if (i < j) out.emplace_back(i, j);
            });
        return out;
    }

    /// Symmetric, irreflexive, in range. Throws std::logic_error on violation.
    void check_invariants() const {
        const std::size_t n = order();
        for (std::size_t i = 0; i < n; ++i) {
            if (adjacency_[i].universe() != n) throw std::logic_error("adjacency row has wrong universe");
            if (adjacency_[i].contains(i)) throw std::logic_error("adjacency is reflexive at " + labels_[i]);
            adjacency_[i].for_each([&](std::size_t j) {
                if (!adjacency_[j].contains(i)) throw std::logic_error("adjacency is not symmetric");
            });
        }
    }

    /// Structural equality: same labels in the same order and same adjacency.
    bool operator==(const Graph& other) const {
        return labels_ == other.labels_ && adjacency_ == other.adjacency_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<VertexSet> adjacency_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Induced subgraph on the vertices in `keep`, preserving relative order.
inline Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    std::vector<std::size_t> old_to_new(g.order(), g.order());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < g.order(); ++i) {
        if (keep.contains(i)) {
            old_to_new[i] = labels.size();
            labels.push_back(g.label(i));
        }
    }
    std::vector<VertexSet> adj(labels.size(), VertexSet(labels.size()));
    for (std::size_t i = 0; i < g.order(); ++i) {
        if (old_to_new[i] == g.order()) continue;
        g.neighbors(i).for_each([&](std::size_t j) {
            if (old_to_new[j] != g.order()) adj[old_to_new[i]].insert(old_to_new[j]);
        });
    }
    return Graph(std::move(labels), std::move(adj));
}

/// G - S for a set of vertex indices.
inline Graph remove_indices(const Graph& g, const VertexSet& removed) {
    return induced_subgraph(g, VertexSet::full(g.order()) - removed);
}

inline Graph delete_vertices(const Graph& g, std::span<const std::string> labels) {
    VertexSet removed(g.order());
    for (const auto& l : labels) removed.insert(g.require_index(l));
    return remove_indices(g, removed);
}

inline Graph delete_vertices(const Graph& g, std::initializer_list<std::string> labels) {
    return delete_vertices(g, std::span<const std::string>(labels.begin(), labels.size()));
}

inline VertexSet closed_neighborhood_indices(const Graph& g, std::size_t v) {
    VertexSet s = g.neighbors(v);
    s.insert(v);
    return s;
}

inline std::vector<std::string> open_neighborhood(const Graph& g, std::string_view v) {
    std::vector<std::string> out;
    g.neighbors(g.require_index(v)).for_each([&](std::size_t j) { out.push_back(g.label(j)); });
    return out;
}

inline std::vector<std::string> closed_neighborhood(const Graph& g, std::string_view v) {
    std::vector<std::string> out;
    closed_neighborhood_indices(g, g.require_index(v)).for_each([&](std::size_t j) {
        out.push_back(g.label(j));
    });
    return out;
}

inline Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least one vertex");
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    for (std::size_t i = 0; i + 1 < labels.size(); ++i) edges.emplace_back(i, i + 1);
    return Graph(std::move(labels), edges);
}

inline Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    for (std::size_t i = 0; i + 1 < labels.size(); ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, labels.size() - 1);
    return Graph(std::move(labels), edges);
}

/// Pair label used by cartesian products and grid constructors: "(a,b)".
inline std::string pair_label(std::string_view a, std::string_view b) {
    std::string s;
    s.reserve(a.size() + b.size() + 3);
    s += '(';
    s += a;
    s += ',';
    s += b;
    s += ')';
    return s;
}

/// G x H; vertices ordered lexicographically by (index in G, index in H).
inline Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.empty() || h.empty()) throw std::invalid_argument("cartesian product of an empty graph");
    const std::size_t m = h.order();
    std::vector<std::string> labels;
    labels.reserve(g.order() * m);
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < m; ++b) labels.push_back(pair_label(g.label(a), h.label(b)));
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < g.order(); ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            const std::size_t self = a * m + b;
            h.neighbors(b).for_each([&](std::size_t d) {
                if (b < d) edges.emplace_back(self, a * m + d);
            });
            g.neighbors(a).for_each([&](std::size_t c) {
                if (a < c) edges.emplace_back(self, c * m + b);
            });
        }
    }
    return Graph(std::move(labels), edges);
}

/// G + H with labels tagged "0:" (left) and "1:" (right).
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<std::string> labels;
    labels.reserve(g.order() + h.order());
    for (const auto& l : g.labels()) labels.push_back("0:" + l);
    for (const auto& l : h.labels()) labels.push_back("1:" + l);
    std::vector<Edge> edges = g.edges();
    for (auto [a, b] : h.edges()) edges.emplace_back(a + g.order(), b + g.order());
    return Graph(std::move(labels), edges);
}

inline std::vector<VertexSet> component_index_sets(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet seen(g.order());
    for (std::size_t s = 0; s < g.order(); ++s) {
        if (seen.contains(s)) continue;
        VertexSet comp(g.order());
        std::vector<std::size_t> stack{s};
        seen.insert(s);
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            comp.insert(v);
            g.neighbors(v).for_each([&](std::size_t w) {
                if (!seen.contains(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
            });
        }
        out.push_back(std::move(comp));
    }
    return out;
}

/// Components ordered by least vertex index.
inline std::vector<Graph> connected_components(const Graph& g) {
    std::vector<Graph> out;
    for (const auto& c : component_index_sets(g)) out.push_back(induced_subgraph(g, c));
    return out;
}

inline constexpr std::size_t kIsomorphismLimit = 12;

/// Backtracking isomorphism test for graphs with at most 12 vertices.
inline bool is_isomorphic_small(const Graph& g, const Graph& h) {
    if (g.order() > kIsomorphismLimit || h.order() > kIsomorphismLimit)
        throw std::length_error("isomorphism test limited to 12 vertices");
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    const std::size_t n = g.order();
    std::vector<std::size_t> gd(n), hd(n);
    for (std::size_t i = 0; i < n; ++i) {
        gd[i] = g.degree(i);
        hd[i] = h.degree(i);
    }
    {
        auto a = gd, b = hd;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    std::vector<std::size_t> map(n, n);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
        if (i == n) return true;
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || gd[i] != hd[j]) continue;
            bool ok = true;
            for (std::size_t p = 0; p < i && ok; ++p)
                ok = g.adjacent(i, p) == h.adjacent(j, map[p]);
            if (!ok) continue;
            map[i] = j;
            used[j] = true;
            if (extend(i + 1)) return true;
            used[j] = false;
        }
        return false;
    };
    return extend(0);
}

} // namespace indgrid
