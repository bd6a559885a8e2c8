#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "copoly/graph.hpp"

namespace copoly::testing {

inline SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& perm) {
    SimpleGraph out(g.order());
    for (const Edge& e : g.edges()) out.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    return out;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

inline SimpleGraph random_graph(int n, double density, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(density);
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

/// Disjoint union, h relabeled after g.
inline SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h) {
    SimpleGraph out(g.order() + h.order());
    for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
    for (const Edge& e : h.edges()) out.add_edge(e.u + g.order(), e.v + g.order());
    return out;
}

/// Components by depth-first search over an adjacency list, independent of
/// the bit-row code paths.
inline int dfs_components(const SimpleGraph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    int count = 0;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++count;
        std::vector<int> stack{s};
        seen[static_cast<std::size_t>(s)] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    return count;
}

}  // namespace copoly::testing
