#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace copoly {

inline constexpr int kMaxVertices = 32;

using VertexMask = std::uint32_t;

/// Selects how the two endpoints of a contracted edge pass their neighbours
/// to the merged vertex: nothing (matching), union (chromatic),
/// intersection (adjoint) or symmetric difference (co-adjoint).
enum class FamilyKind { Matching, Chromatic, Adjoint, CoAdjoint };

inline constexpr std::array<FamilyKind, 4> kAllKinds = {
    FamilyKind::Matching, FamilyKind::Chromatic, FamilyKind::Adjoint, FamilyKind::CoAdjoint};

std::string_view kind_name(FamilyKind kind);

struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Labeled simple undirected graph on at most 32 vertices, stored as one
/// neighbour bit-row per vertex.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);

    int order() const noexcept { return n_; }
    VertexMask neighbors(int v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
    VertexMask all_vertices() const noexcept;
    int degree(int v) const noexcept;
    int max_degree() const noexcept;
    int edge_count() const noexcept;
    bool has_edge(int u, int v) const noexcept;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    /// Edges in lexicographic order of (u, v), u < v.
    std::vector<Edge> edges() const;
    /// Lexicographically smallest edge; graph must have at least one edge.
    Edge first_edge() const;

    bool is_connected() const noexcept;
    int component_count() const noexcept;
    bool all_degrees_even() const noexcept;

    /// Induced subgraph on `keep`, vertices renumbered in increasing order.
    SimpleGraph induced(VertexMask keep) const;
    /// Vertex sets of the connected components, ordered by smallest vertex.
    std::vector<VertexMask> components() const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    int n_ = 0;
    std::array<VertexMask, kMaxVertices> adj_{};
};

/// Undirected multigraph with edge multiplicities and loop counts.
class MultiGraph {
public:
    MultiGraph() = default;
    explicit MultiGraph(int n);
    static MultiGraph from_simple(const SimpleGraph& g);

    int order() const noexcept { return n_; }
    unsigned multiplicity(int u, int v) const noexcept {
        return mult_[static_cast<std::size_t>(u * n_ + v)];
    }
    unsigned loops(int v) const noexcept { return loops_[static_cast<std::size_t>(v)]; }
    /// Non-loop edges counted with multiplicity.
    int edge_count() const noexcept;
    int loop_count() const noexcept;

    void add_edge(int u, int v, unsigned count = 1);
    void remove_edge(int u, int v);
    void clear_loops();

    /// Underlying simple graph (multiplicities and loops forgotten).
    SimpleGraph support() const;
    /// Contracts one copy of (u, v); other copies become loops at the merged
    /// vertex. Result has n-1 vertices, merged vertex takes index n-2.
    MultiGraph contract(int u, int v) const;
    MultiGraph without_vertices(VertexMask drop) const;

    friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

private:
    int n_ = 0;
    std::vector<unsigned> mult_;
    std::vector<unsigned> loops_;
};

enum class NamedFamily { Empty, Complete, CompleteBipartite, Path, Cycle };

/// K_n, E_n, P_n, C_n take one size; K_{m,n} takes two with parts
/// {0..m-1} and {m..m+n-1}.
SimpleGraph build_named(NamedFamily family, std::span<const int> sizes);

SimpleGraph empty_graph(int n);
SimpleGraph complete_graph(int n);
SimpleGraph complete_bipartite(int m, int n);
SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);

/// Parses K<n>, K<m>,<n>, P<n>, C<n>, E<n>, case-insensitive.
SimpleGraph parse_graph_name(std::string_view name);

/// Contracts edge e into a new vertex with the highest index; the merged
/// vertex is joined according to `kind`. Throws InvalidEdgeError if e is
/// not an edge.
SimpleGraph merge_edge(const SimpleGraph& g, Edge e, FamilyKind kind);
SimpleGraph delete_edge(const SimpleGraph& g, Edge e);
SimpleGraph delete_vertices(const SimpleGraph& g, VertexMask drop);

/// Components of (V(g), A), isolated vertices included.
int components_of_subset(const SimpleGraph& g, std::span<const Edge> subset);

/// Number of labeled simple graphs on n vertices, 2^(n(n-1)/2).
std::uint64_t labeled_graph_count(int n);
/// The labeled graph whose edge set is bit i of `code` for the i-th pair in
/// lexicographic order.
SimpleGraph labeled_graph(int n, std::uint64_t code);
/// Calls `visit` once for every labeled simple graph on n <= 6 vertices.
void enumerate_labeled_graphs(int n, const std::function<void(const SimpleGraph&)>& visit);

}  // namespace copoly
