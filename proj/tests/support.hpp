#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "indgrid/indgrid.hpp"

namespace testing {

inline indgrid::Graph random_graph(std::mt19937_64& rng, std::size_t max_order, double p, std::size_t min_order = 0) {
    std::uniform_int_distribution<std::size_t> size(min_order, max_order);
    std::bernoulli_distribution edge(p);
    const std::size_t n = size(rng);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    std::vector<indgrid::Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (edge(rng)) edges.emplace_back(i, j);
    return indgrid::Graph(std::move(labels), edges);
}

/// f-vector (1, f0, f1, ...) by testing every vertex subset.
inline std::vector<std::uint64_t> brute_force_f_vector(const indgrid::Graph& g) {
    std::vector<std::uint64_t> f(g.order() + 1, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
        bool independent = true;
        for (std::size_t i = 0; i < g.order() && independent; ++i)
            if (mask >> i & 1)
                for (std::size_t j = i + 1; j < g.order(); ++j)
                    if ((mask >> j & 1) && g.adjacent(i, j)) {
                        independent = false;
                        break;
                    }
        if (independent) ++f[static_cast<std::size_t>(__builtin_popcountll(mask))];
    }
    while (f.size() > 1 && f.back() == 0) f.pop_back();
    return f;
}

} // namespace testing
