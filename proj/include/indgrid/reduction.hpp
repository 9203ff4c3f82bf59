/**
 * Homotopy-preserving graph reductions with a replayable trace.
 *
 * Steps, tried in this order until none applies:
 *   - an isolated vertex makes I(G) a cone (contractible), stop;
 *   - fold: N(v) subset of N(w), v != w, delete w;
 *   - every K_2 component is removed and counted as one suspension.
 * When cofiber_depth > 0 and nothing else applies, each vertex v (ascending)
 * is tested with a nested reduction of depth cofiber_depth - 1:
 *   - L: I(G - N[v]) contractible, so I(G) ~ I(G - v);
 *   - D: I(G - v) contractible, so I(G) ~ Sigma I(G - N[v]).
 * Both come from the cofiber sequence I(G - N[v]) -> I(G - v) -> I(G); the
 * nested trace that proves contractibility is stored with the event.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace indgrid {

enum class EventKind { Fold, IsolatedVertex, SuspensionExtract, LinkContractible, DeletionContractible };

struct ReductionTrace;

struct ReductionEvent {
    EventKind kind;
    std::string first;  ///< kept (fold), the vertex (I/L/D), or one edge end (S)
    std::string second; ///< removed (fold) or the other edge end (S)
    std::shared_ptr<const ReductionTrace> certificate; ///< L/D only
};

struct ReductionTrace {
    std::vector<ReductionEvent> events;
    Graph kernel;
    int shift = 0;
    bool contractible = false;
};

struct ReduceOptions {
    int cofiber_depth = 1;
};

/// Least (v, w) by scanning w ascending, then v ascending, with N(v) subset of N(w).
inline std::optional<std::pair<std::size_t, std::size_t>> find_fold_indices(const Graph& g) {
    for (std::size_t w = 0; w < g.order(); ++w)
        for (std::size_t v = 0; v < g.order(); ++v)
            if (v != w && g.neighbors(v).is_subset_of(g.neighbors(w))) return std::make_pair(v, w);
    return std::nullopt;
}

/// Labels (v, w); w is the vertex to delete.
inline std::optional<std::pair<std::string, std::string>> find_fold(const Graph& g) {
    if (auto f = find_fold_indices(g)) return std::make_pair(g.label(f->first), g.label(f->second));
    return std::nullopt;
}

namespace detail {

inline std::optional<std::size_t> isolated_vertex(const Graph& g) {
    for (std::size_t v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) return v;
    return std::nullopt;
}

inline bool is_k2_component(const Graph& g, std::size_t u, std::size_t w) {
    return g.adjacent(u, w) && g.degree(u) == 1 && g.degree(w) == 1;
}

inline Graph without_closed_neighborhood(const Graph& g, std::size_t v) {
    return remove_indices(g, closed_neighborhood_indices(g, v));
}

inline Graph without_vertex(const Graph& g, std::size_t v) {
    VertexSet s(g.order());
    s.insert(v);
    return remove_indices(g, s);
}

inline ReductionTrace reduce_impl(Graph g, int depth) {
    ReductionTrace t;
    while (true) {
        if (auto iso = isolated_vertex(g)) {
            t.events.push_back({EventKind::IsolatedVertex, g.label(*iso), {}, nullptr});
            t.contractible = true;
            t.kernel = Graph();
            t.shift = 0;
            return t;
        }
        if (auto f = find_fold_indices(g)) {
            t.events.push_back({EventKind::Fold, g.label(f->first), g.label(f->second), nullptr});
            g = without_vertex(g, f->second);
            continue;
        }
        VertexSet k2(g.order());
        for (std::size_t u = 0; u < g.order(); ++u) {
            if (g.degree(u) != 1) continue;
            std::size_t w = g.neighbors(u).to_vector().front();
            if (u < w && g.degree(w) == 1) {
                t.events.push_back({EventKind::SuspensionExtract, g.label(u), g.label(w), nullptr});
                k2.insert(u);
                k2.insert(w);
                ++t.shift;
            }
        }
        if (!k2.empty()) {
            g = remove_indices(g, k2);
            continue;
        }
        bool stepped = false;
        for (std::size_t v = 0; v < g.order() && depth > 0 && !stepped; ++v) {
            auto link = reduce_impl(without_closed_neighborhood(g, v), depth - 1);
            if (link.contractible) {
                t.events.push_back({EventKind::LinkContractible, g.label(v), {},
                                    std::make_shared<const ReductionTrace>(std::move(link))});
                g = without_vertex(g, v);
                stepped = true;
                break;
            }
            auto del = reduce_impl(without_vertex(g, v), depth - 1);
            if (del.contractible) {
                t.events.push_back({EventKind::DeletionContractible, g.label(v), {},
                                    std::make_shared<const ReductionTrace>(std::move(del))});
                g = without_closed_neighborhood(g, v);
                ++t.shift;
                stepped = true;
            }
        }
        if (!stepped) break;
    }
    t.kernel = std::move(g);
    return t;
}

} // namespace detail

/// Reduces to a fixpoint. I(g) ~ Sigma^shift I(kernel), or I(g) is contractible.
inline ReductionTrace reduce(const Graph& g, const ReduceOptions& opts = {}) {
    return detail::reduce_impl(g, std::max(opts.cofiber_depth, 0));
}

/// Replays every event against g, checking its precondition and the final state.
inline bool verify_trace(const Graph& g, const ReductionTrace& t) {
    Graph cur = g;
    int shift = 0;
    for (std::size_t i = 0; i < t.events.size(); ++i) {
        const auto& e = t.events[i];
        auto v = cur.index_of(e.first);
        if (!v) return false;
        switch (e.kind) {
        case EventKind::Fold: {
            auto w = cur.index_of(e.second);
            if (!w || *v == *w || !cur.neighbors(*v).is_subset_of(cur.neighbors(*w))) return false;
            cur = detail::without_vertex(cur, *w);
            break;
        }
        case EventKind::IsolatedVertex:
            return cur.degree(*v) == 0 && i + 1 == t.events.size() && t.contractible;
        case EventKind::SuspensionExtract: {
            auto w = cur.index_of(e.second);
            if (!w || !detail::is_k2_component(cur, *v, *w)) return false;
            VertexSet s(cur.order());
            s.insert(*v);
            s.insert(*w);
            cur = remove_indices(cur, s);
            ++shift;
            break;
        }
        case EventKind::LinkContractible:
            if (!e.certificate || !e.certificate->contractible ||
                !verify_trace(detail::without_closed_neighborhood(cur, *v), *e.certificate))
                return false;
            cur = detail::without_vertex(cur, *v);
            break;
        case EventKind::DeletionContractible:
            if (!e.certificate || !e.certificate->contractible ||
                !verify_trace(detail::without_vertex(cur, *v), *e.certificate))
                return false;
            cur = detail::without_closed_neighborhood(cur, *v);
            ++shift;
            break;
        }
    }
    if (t.contractible) return false; // contractible traces end with an IsolatedVertex event
    if (shift != t.shift || !(cur == t.kernel)) return false;
    if (detail::isolated_vertex(cur) || find_fold_indices(cur)) return false;
    for (std::size_t u = 0; u < cur.order(); ++u)
        if (cur.degree(u) == 1 && detail::is_k2_component(cur, u, cur.neighbors(u).to_vector().front()))
            return false;
    return true;
}

inline std::size_t count_events(const ReductionTrace& t, EventKind kind) {
    std::size_t n = 0;
    for (const auto& e : t.events) n += e.kind == kind;
    return n;
}

namespace detail {

inline void write_trace(std::ostream& out, const ReductionTrace& t, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    out << pad << "k " << t.shift << ' ' << (t.contractible ? 1 : 0) << '\n';
    for (const auto& e : t.events) {
        switch (e.kind) {
        case EventKind::Fold: out << pad << "F " << e.first << ' ' << e.second << '\n'; break;
        case EventKind::IsolatedVertex: out << pad << "I " << e.first << '\n'; break;
        case EventKind::SuspensionExtract: out << pad << "S " << e.first << ' ' << e.second << '\n'; break;
        case EventKind::LinkContractible:
        case EventKind::DeletionContractible:
            out << pad << (e.kind == EventKind::LinkContractible ? "L " : "D ") << e.first << " {\n";
            write_trace(out, *e.certificate, indent + 1);
            out << pad << "}\n";
            break;
        }
    }
}

} // namespace detail

/// Header `k <shift> <contractible>`, then `F`/`I`/`S` lines; `L`/`D` lines open a nested certificate block.
inline std::string serialize_trace(const ReductionTrace& t) {
    std::ostringstream out;
    detail::write_trace(out, t, 0);
    return out.str();
}

} // namespace indgrid
