#include "copoly/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "copoly/error.hpp"

namespace copoly {

namespace {

// Union-find with undo. Union by size and no path compression, so each
// union can be reverted in O(1).
class RollbackUnionFind {
public:
    explicit RollbackUnionFind(int n)
        : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1), components_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int v) const {
        while (parent_[static_cast<std::size_t>(v)] != v) v = parent_[static_cast<std::size_t>(v)];
        return v;
    }

    // Returns the absorbed root, or -1 if already joined.
    int unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return -1;
        if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
        --components_;
        return b;
    }

    void undo(int absorbed) {
        if (absorbed < 0) return;
        const int root = parent_[static_cast<std::size_t>(absorbed)];
        size_[static_cast<std::size_t>(root)] -= size_[static_cast<std::size_t>(absorbed)];
        parent_[static_cast<std::size_t>(absorbed)] = absorbed;
        ++components_;
    }

    int components() const { return components_; }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    int components_;
};

struct EdgeList {
    int order = 0;
    std::vector<Edge> edges;  // u == v for loops
};

void check_edge_budget(std::size_t edges) {
    if (edges > static_cast<std::size_t>(kMaxSubsetEdges)) {
        throw CapacityError("edge-subset enumeration limited to " + std::to_string(kMaxSubsetEdges) +
                            " edges, got " + std::to_string(edges));
    }
}

// Visits every subset by include/exclude recursion; adjacent leaves differ in
// one edge, and the union-find is updated incrementally along the way.
template <typename Visit>
void for_each_subset(const EdgeList& list, Visit&& visit) {
    RollbackUnionFind uf(list.order);
    auto walk = [&](auto&& self, std::size_t index, int size) -> void {
        if (index == list.edges.size()) {
            visit(uf.components(), size);
            return;
        }
        self(self, index + 1, size);
        const Edge& e = list.edges[index];
        const int absorbed = uf.unite(e.u, e.v);
        self(self, index + 1, size + 1);
        uf.undo(absorbed);
    };
    walk(walk, 0, 0);
}

SubsetCensus census_of(const EdgeList& list) {
    check_edge_budget(list.edges.size());
    SubsetCensus out;
    out.order = list.order;
    out.edges = static_cast<int>(list.edges.size());
    out.count.assign(static_cast<std::size_t>(list.order) + 1,
                     std::vector<std::uint64_t>(list.edges.size() + 1, 0));
    for_each_subset(list, [&](int k, int j) { ++out.count[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]; });
    RollbackUnionFind full(list.order);
    for (const Edge& e : list.edges) full.unite(e.u, e.v);
    out.full_components = full.components();
    return out;
}

EdgeList edge_list(const SimpleGraph& g) { return {g.order(), g.edges()}; }

}  // namespace

SubsetCensus subset_census(const SimpleGraph& g) { return census_of(edge_list(g)); }

SubsetCensus subset_census(const MultiGraph& g) {
    EdgeList list{g.order(), {}};
    for (int u = 0; u < g.order(); ++u) {
        for (unsigned c = 0; c < g.loops(u); ++c) list.edges.push_back({u, u});
        for (int v = u + 1; v < g.order(); ++v) {
            for (unsigned c = 0; c < g.multiplicity(u, v); ++c) list.edges.push_back({u, v});
        }
    }
    return census_of(list);
}

Rational ZPoly::eval(const Rational& q) const {
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * q + *it;
    return acc;
}

ZPoly partition_function(const SimpleGraph& g, std::span<const Rational> weights) {
    const EdgeList list = edge_list(g);
    check_edge_budget(list.edges.size());
    if (weights.size() != 1 && weights.size() != list.edges.size()) {
        throw std::invalid_argument("partition_function needs one weight per edge or a single weight");
    }
    auto weight = [&](std::size_t i) -> const Rational& { return weights.size() == 1 ? weights[0] : weights[i]; };

    ZPoly z;
    z.coeffs.assign(static_cast<std::size_t>(g.order()) + 1, 0);
    RollbackUnionFind uf(list.order);
    auto walk = [&](auto&& self, std::size_t index, const Rational& product) -> void {
        if (index == list.edges.size()) {
            z.coeffs[static_cast<std::size_t>(uf.components())] += product;
            return;
        }
        self(self, index + 1, product);
        const Rational& w = weight(index);
        if (w == 0) return;
        const Edge& e = list.edges[index];
        const int absorbed = uf.unite(e.u, e.v);
        self(self, index + 1, Rational(product * w));
        uf.undo(absorbed);
    };
    walk(walk, 0, Rational(1));
    while (!z.coeffs.empty() && z.coeffs.back() == 0) z.coeffs.pop_back();
    return z;
}

ZPoly partition_function(const SimpleGraph& g, const Rational& v) {
    return partition_function(g, std::span<const Rational>(&v, 1));
}

BiPoly partition_function_symbolic(const SimpleGraph& g) {
    const SubsetCensus census = subset_census(g);
    std::vector<std::vector<Integer>> c(census.count.size());
    for (std::size_t k = 0; k < census.count.size(); ++k) {
        for (std::uint64_t value : census.count[k]) c[k].emplace_back(static_cast<unsigned long>(value));
    }
    return BiPoly(std::move(c));
}

IntPoly coadjoint_via_Z(const SimpleGraph& g) {
    const SubsetCensus census = subset_census(g);
    const int n = g.order();
    std::vector<Integer> t(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 0; k <= n; ++k) {
        Integer sum = 0;
        Integer power = 1;  // (-2)^j
        for (std::size_t j = 0; j < census.count[static_cast<std::size_t>(k)].size(); ++j) {
            sum += power * static_cast<unsigned long>(census.count[static_cast<std::size_t>(k)][j]);
            power *= -2;
        }
        Integer denom;
        mpz_ui_pow_ui(denom.get_mpz_t(), 2, static_cast<unsigned long>(n - k));
        Rational tk(sum, denom);
        tk.canonicalize();
        if (tk.get_den() != 1) {
            throw ConsistencyError("t_" + std::to_string(k) + " is not an integer: " + tk.get_str());
        }
        t[static_cast<std::size_t>(k)] = tk.get_num();
    }
    return IntPoly(std::move(t));
}

std::uint64_t count_colorings(const SimpleGraph& g, int q) {
    const int n = g.order();
    if (q < 0) throw std::invalid_argument("negative colour count");
    if (n > 0 && std::pow(static_cast<double>(q), n) > 5e7) {
        throw CapacityError("colouring enumeration too large: " + std::to_string(q) + "^" + std::to_string(n));
    }
    if (n == 0) return 1;
    std::vector<int> colour(static_cast<std::size_t>(n), 0);
    const auto edges = g.edges();
    std::uint64_t total = 0;
    auto assign = [&](auto&& self, int v) -> void {
        if (v == n) {
            ++total;
            return;
        }
        for (int c = 0; c < q; ++c) {
            bool clash = false;
            for (int u = 0; u < v && !clash; ++u) {
                clash = g.has_edge(u, v) && colour[static_cast<std::size_t>(u)] == c;
            }
            if (clash) continue;
            colour[static_cast<std::size_t>(v)] = c;
            self(self, v + 1);
        }
    };
    assign(assign, 0);
    return total;
}

std::vector<std::uint64_t> count_matchings(const SimpleGraph& g) {
    const auto edges = g.edges();
    std::vector<std::uint64_t> m(static_cast<std::size_t>(g.order()) / 2 + 1, 0);
    auto extend = [&](auto&& self, std::size_t from, VertexMask covered, std::size_t size) -> void {
        ++m[size];
        for (std::size_t i = from; i < edges.size(); ++i) {
            const VertexMask ends = (VertexMask{1} << edges[i].u) | (VertexMask{1} << edges[i].v);
            if ((covered & ends) == 0) self(self, i + 1, covered | ends, size + 1);
        }
    };
    extend(extend, 0, 0, 0);
    while (m.size() > 1 && m.back() == 0) m.pop_back();
    return m;
}

std::vector<std::uint64_t> count_clique_partitions(const SimpleGraph& g) {
    const int n = g.order();
    if (n > 10) throw CapacityError("clique-partition enumeration limited to n <= 10");
    std::vector<std::uint64_t> a(static_cast<std::size_t>(n) + 1, 0);
    // restricted growth strings; blocks[b] holds the vertices in block b
    std::vector<VertexMask> blocks;
    auto place = [&](auto&& self, int v) -> void {
        if (v == n) {
            ++a[blocks.size()];
            return;
        }
        const VertexMask bit = VertexMask{1} << v;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if ((g.neighbors(v) & blocks[b]) != blocks[b]) continue;
            blocks[b] |= bit;
            self(self, v + 1);
            blocks[b] &= ~bit;
        }
        blocks.push_back(bit);
        self(self, v + 1);
        blocks.pop_back();
    };
    place(place, 0);
    return a;
}

std::uint64_t count_alternating_permutations(int m) {
    if (m < 0 || m > 10) throw CapacityError("permutation scan limited to m <= 10");
    if (m <= 1) return 1;
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 1);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < perm.size() && ok; ++i) {
            ok = (i % 2 == 0) ? perm[i] < perm[i + 1] : perm[i] > perm[i + 1];
        }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

std::vector<Integer> zigzag_numbers(int max_n) {
    if (max_n < 0 || max_n > 12) throw CapacityError("zigzag numbers limited to max_n <= 12");
    // row[k] holds E(m, k); E(m, k) = E(m, k-1) + E(m-1, m-k), E_m = E(m, m)
    std::vector<Integer> out{1};
    std::vector<Integer> row{1};
    for (int m = 1; m <= max_n; ++m) {
        std::vector<Integer> next(static_cast<std::size_t>(m) + 1, 0);
        for (int k = 1; k <= m; ++k) {
            next[static_cast<std::size_t>(k)] = next[static_cast<std::size_t>(k - 1)] + row[static_cast<std::size_t>(m - k)];
        }
        out.push_back(next.back());
        row = std::move(next);
    }
    for (int m = 0; m <= std::min(max_n, 9); ++m) {
        const Integer scanned(static_cast<unsigned long>(count_alternating_permutations(m)));
        if (scanned != out[static_cast<std::size_t>(m)]) {
            throw ConsistencyError("zigzag mismatch at m=" + std::to_string(m) + ": triangle " +
                                   out[static_cast<std::size_t>(m)].get_str() + ", scan " + scanned.get_str());
        }
    }
    return out;
}

}  // namespace copoly
