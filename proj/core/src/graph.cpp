#include "copoly/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <numeric>
#include <string>

#include "copoly/error.hpp"

namespace copoly {

namespace {

void check_order(int n) {
    if (n < 0 || n > kMaxVertices) {
        throw CapacityError("graph order " + std::to_string(n) + " outside 0.." +
                            std::to_string(kMaxVertices));
    }
}

VertexMask bit(int v) { return VertexMask{1} << v; }

// Packs the bits of `row` selected by `keep` into the low bits, preserving order.
VertexMask compress(VertexMask row, VertexMask keep) {
    VertexMask out = 0;
    int pos = 0;
    for (VertexMask m = keep; m != 0; m &= m - 1) {
        int v = std::countr_zero(m);
        if (row & bit(v)) out |= bit(pos);
        ++pos;
    }
    return out;
}

}  // namespace

std::string_view kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Matching: return "matching";
        case FamilyKind::Chromatic: return "chromatic";
        case FamilyKind::Adjoint: return "adjoint";
        case FamilyKind::CoAdjoint: return "coadjoint";
    }
    return "?";
}

SimpleGraph::SimpleGraph(int n) : n_(n) { check_order(n); }

VertexMask SimpleGraph::all_vertices() const noexcept {
    return n_ == kMaxVertices ? ~VertexMask{0} : bit(n_) - 1;
}

int SimpleGraph::degree(int v) const noexcept { return std::popcount(neighbors(v)); }

int SimpleGraph::max_degree() const noexcept {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

int SimpleGraph::edge_count() const noexcept {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

bool SimpleGraph::has_edge(int u, int v) const noexcept {
    return u >= 0 && v >= 0 && u < n_ && v < n_ && (neighbors(u) & bit(v)) != 0;
}

void SimpleGraph::add_edge(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw InvalidEdgeError("cannot add edge (" + std::to_string(u) + "," +
                               std::to_string(v) + ") to graph of order " + std::to_string(n_));
    }
    adj_[static_cast<std::size_t>(u)] |= bit(v);
    adj_[static_cast<std::size_t>(v)] |= bit(u);
}

void SimpleGraph::remove_edge(int u, int v) {
    if (!has_edge(u, v)) {
        throw InvalidEdgeError("(" + std::to_string(u) + "," + std::to_string(v) +
                               ") is not an edge");
    }
    adj_[static_cast<std::size_t>(u)] &= ~bit(v);
    adj_[static_cast<std::size_t>(v)] &= ~bit(u);
}

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
        for (VertexMask m = neighbors(u) & ~(bit(u + 1) - 1); m != 0; m &= m - 1) {
            out.push_back({u, std::countr_zero(m)});
        }
    }
    return out;
}

Edge SimpleGraph::first_edge() const {
    for (int u = 0; u < n_; ++u) {
        VertexMask later = neighbors(u) & ~(bit(u + 1) - 1);
        if (later != 0) return {u, std::countr_zero(later)};
    }
    throw InvalidEdgeError("graph has no edges");
}

std::vector<VertexMask> SimpleGraph::components() const {
    std::vector<VertexMask> out;
    VertexMask unseen = all_vertices();
    while (unseen != 0) {
        VertexMask comp = unseen & (~unseen + 1);
        VertexMask frontier = comp;
        while (frontier != 0) {
            VertexMask next = 0;
            for (VertexMask m = frontier; m != 0; m &= m - 1) next |= neighbors(std::countr_zero(m));
            frontier = next & ~comp;
            comp |= next;
        }
        out.push_back(comp);
        unseen &= ~comp;
    }
    return out;
}

int SimpleGraph::component_count() const noexcept {
    return static_cast<int>(components().size());
}

bool SimpleGraph::is_connected() const noexcept { return component_count() <= 1; }

bool SimpleGraph::all_degrees_even() const noexcept {
    for (int v = 0; v < n_; ++v) {
        if (degree(v) % 2 != 0) return false;
    }
    return true;
}

SimpleGraph SimpleGraph::induced(VertexMask keep) const {
    keep &= all_vertices();
    SimpleGraph out(std::popcount(keep));
    int pos = 0;
    for (VertexMask m = keep; m != 0; m &= m - 1) {
        out.adj_[static_cast<std::size_t>(pos++)] = compress(neighbors(std::countr_zero(m)), keep);
    }
    return out;
}

MultiGraph::MultiGraph(int n)
    : n_(n), mult_(static_cast<std::size_t>(n * n), 0), loops_(static_cast<std::size_t>(n), 0) {
    check_order(n);
}

MultiGraph MultiGraph::from_simple(const SimpleGraph& g) {
    MultiGraph out(g.order());
    for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
    return out;
}

int MultiGraph::edge_count() const noexcept {
    int total = 0;
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) total += static_cast<int>(multiplicity(u, v));
    }
    return total;
}

int MultiGraph::loop_count() const noexcept {
    return static_cast<int>(std::accumulate(loops_.begin(), loops_.end(), 0u));
}

void MultiGraph::add_edge(int u, int v, unsigned count) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw InvalidEdgeError("vertex out of range in multigraph edge");
    }
    if (u == v) {
        loops_[static_cast<std::size_t>(u)] += count;
        return;
    }
    mult_[static_cast<std::size_t>(u * n_ + v)] += count;
    mult_[static_cast<std::size_t>(v * n_ + u)] += count;
}

void MultiGraph::remove_edge(int u, int v) {
    if (u == v) {
        if (loops(u) == 0) throw InvalidEdgeError("no loop to remove");
        --loops_[static_cast<std::size_t>(u)];
        return;
    }
    if (multiplicity(u, v) == 0) throw InvalidEdgeError("no edge to remove");
    --mult_[static_cast<std::size_t>(u * n_ + v)];
    --mult_[static_cast<std::size_t>(v * n_ + u)];
}

void MultiGraph::clear_loops() { std::fill(loops_.begin(), loops_.end(), 0u); }

SimpleGraph MultiGraph::support() const {
    SimpleGraph out(n_);
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if (multiplicity(u, v) != 0) out.add_edge(u, v);
        }
    }
    return out;
}

MultiGraph MultiGraph::contract(int u, int v) const {
    if (u == v || multiplicity(u, v) == 0) throw InvalidEdgeError("contracted pair is not an edge");
    std::vector<int> rest;
    for (int w = 0; w < n_; ++w) {
        if (w != u && w != v) rest.push_back(w);
    }
    const int m = n_ - 1;
    const int merged = m - 1;
    MultiGraph out(m);
    for (std::size_t i = 0; i < rest.size(); ++i) {
        const int a = rest[i];
        out.loops_[i] = loops(a);
        for (std::size_t j = i + 1; j < rest.size(); ++j) {
            unsigned c = multiplicity(a, rest[j]);
            if (c != 0) out.add_edge(static_cast<int>(i), static_cast<int>(j), c);
        }
        unsigned toward = multiplicity(a, u) + multiplicity(a, v);
        if (toward != 0) out.add_edge(static_cast<int>(i), merged, toward);
    }
    out.loops_[static_cast<std::size_t>(merged)] = loops(u) + loops(v) + multiplicity(u, v) - 1;
    return out;
}

MultiGraph MultiGraph::without_vertices(VertexMask drop) const {
    std::vector<int> keep;
    for (int w = 0; w < n_; ++w) {
        if ((drop & bit(w)) == 0) keep.push_back(w);
    }
    MultiGraph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        out.loops_[i] = loops(keep[i]);
        for (std::size_t j = i + 1; j < keep.size(); ++j) {
            unsigned c = multiplicity(keep[i], keep[j]);
            if (c != 0) out.add_edge(static_cast<int>(i), static_cast<int>(j), c);
        }
    }
    return out;
}

SimpleGraph empty_graph(int n) { return SimpleGraph(n); }

SimpleGraph complete_graph(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

SimpleGraph complete_bipartite(int m, int n) {
    if (m < 0 || n < 0 || m + n > kMaxVertices) {
        throw CapacityError("K_{m,n} needs m+n <= " + std::to_string(kMaxVertices));
    }
    SimpleGraph g(m + n);
    for (int u = 0; u < m; ++u) {
        for (int v = m; v < m + n; ++v) g.add_edge(u, v);
    }
    return g;
}

SimpleGraph path_graph(int n) {
    SimpleGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

SimpleGraph cycle_graph(int n) {
    SimpleGraph g = path_graph(n);
    if (n >= 3) g.add_edge(0, n - 1);
    return g;
}

SimpleGraph build_named(NamedFamily family, std::span<const int> sizes) {
    const std::size_t wanted = family == NamedFamily::CompleteBipartite ? 2 : 1;
    if (sizes.size() != wanted) {
        throw std::invalid_argument("wrong number of size parameters for named graph");
    }
    for (int s : sizes) {
        if (s < 0) throw std::invalid_argument("graph sizes must be non-negative");
        if (s > kMaxVertices) throw CapacityError("graph order exceeds 32");
    }
    switch (family) {
        case NamedFamily::Empty: return empty_graph(sizes[0]);
        case NamedFamily::Complete: return complete_graph(sizes[0]);
        case NamedFamily::CompleteBipartite: return complete_bipartite(sizes[0], sizes[1]);
        case NamedFamily::Path: return path_graph(sizes[0]);
        case NamedFamily::Cycle: return cycle_graph(sizes[0]);
    }
    return {};
}

SimpleGraph parse_graph_name(std::string_view name) {
    auto bad = [&] { return std::invalid_argument("unknown graph name '" + std::string(name) + "'"); };
    if (name.size() < 2) throw bad();
    const char head = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    std::vector<int> sizes;
    std::string_view rest = name.substr(1);
    while (!rest.empty()) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
        if (ec != std::errc{} || ptr == rest.data()) throw bad();
        sizes.push_back(value);
        rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
        if (!rest.empty()) {
            if (rest.front() != ',' || rest.size() == 1) throw bad();
            rest.remove_prefix(1);
        }
    }
    NamedFamily family{};
    switch (head) {
        case 'K': family = sizes.size() == 2 ? NamedFamily::CompleteBipartite : NamedFamily::Complete; break;
        case 'P': family = NamedFamily::Path; break;
        case 'C': family = NamedFamily::Cycle; break;
        case 'E': family = NamedFamily::Empty; break;
        default: throw bad();
    }
    if (sizes.size() > 2 || (sizes.size() == 2 && head != 'K')) throw bad();
    return build_named(family, sizes);
}

SimpleGraph merge_edge(const SimpleGraph& g, Edge e, FamilyKind kind) {
    if (!g.has_edge(e.u, e.v)) {
        throw InvalidEdgeError("(" + std::to_string(e.u) + "," + std::to_string(e.v) +
                               ") is not an edge");
    }
    const VertexMask nu = g.neighbors(e.u) & ~bit(e.v);
    const VertexMask nv = g.neighbors(e.v) & ~bit(e.u);
    VertexMask joined = 0;
    switch (kind) {
        case FamilyKind::Matching: joined = 0; break;
        case FamilyKind::Chromatic: joined = nu | nv; break;
        case FamilyKind::Adjoint: joined = nu & nv; break;
        case FamilyKind::CoAdjoint: joined = nu ^ nv; break;
    }
    const VertexMask keep = g.all_vertices() & ~bit(e.u) & ~bit(e.v);
    SimpleGraph out = g.induced(keep);
    SimpleGraph grown(g.order() - 1);
    const int merged = g.order() - 2;
    for (const Edge& f : out.edges()) grown.add_edge(f.u, f.v);
    const VertexMask packed = compress(joined, keep);
    for (VertexMask m = packed; m != 0; m &= m - 1) grown.add_edge(std::countr_zero(m), merged);
    return grown;
}

SimpleGraph delete_edge(const SimpleGraph& g, Edge e) {
    SimpleGraph out = g;
    out.remove_edge(e.u, e.v);
    return out;
}

SimpleGraph delete_vertices(const SimpleGraph& g, VertexMask drop) {
    return g.induced(g.all_vertices() & ~drop);
}

int components_of_subset(const SimpleGraph& g, std::span<const Edge> subset) {
    std::vector<int> parent(static_cast<std::size_t>(g.order()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            auto& p = parent[static_cast<std::size_t>(v)];
            p = parent[static_cast<std::size_t>(p)];
            v = p;
        }
        return v;
    };
    int count = g.order();
    for (const Edge& e : subset) {
        if (!g.has_edge(e.u, e.v)) throw InvalidEdgeError("subset contains a non-edge");
        int a = find(e.u);
        int b = find(e.v);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --count;
        }
    }
    return count;
}

std::uint64_t labeled_graph_count(int n) {
    if (n < 0 || n > 11) throw CapacityError("labeled graph count only tracked for n <= 11");
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

SimpleGraph labeled_graph(int n, std::uint64_t code) {
    SimpleGraph g(n);
    int index = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++index) {
            if (index < 64 && ((code >> index) & 1u) != 0) g.add_edge(u, v);
        }
    }
    return g;
}

void enumerate_labeled_graphs(int n, const std::function<void(const SimpleGraph&)>& visit) {
    if (n < 0 || n > 6) throw CapacityError("labeled graph enumeration limited to n <= 6");
    const std::uint64_t total = labeled_graph_count(n);
    for (std::uint64_t code = 0; code < total; ++code) visit(labeled_graph(n, code));
}

}  // namespace copoly
