#include "copoly/tutte.hpp"

#include <bit>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "copoly/canon.hpp"
#include "copoly/error.hpp"
#include "copoly/oracles.hpp"

namespace copoly {

namespace {

IntPoly shifted_power(int exponent) {
    // (t - 1)^exponent
    IntPoly out = IntPoly::constant(1);
    const IntPoly factor{-1, 1};
    for (int i = 0; i < exponent; ++i) out *= factor;
    return out;
}

BiPoly y_power(int e) { return BiPoly::outer(IntPoly::constant(1), IntPoly::monomial(e)); }
BiPoly x_power(int e) { return BiPoly::outer(IntPoly::monomial(e), IntPoly::constant(1)); }

class TutteMemo {
public:
    std::optional<TuttePoly> find(const MultiCanonKey& key) {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end()) return std::nullopt;
        return it->second;
    }

    void store(const MultiCanonKey& key, const TuttePoly& value) {
        std::unique_lock lock(mutex_);
        table_.insert_or_assign(key, value);
    }

    void clear() {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

private:
    std::shared_mutex mutex_;
    std::unordered_map<MultiCanonKey, TuttePoly, MultiCanonKeyHash> table_;
};

TutteMemo& memo() {
    static TutteMemo instance;
    return instance;
}

bool connected_without(const SimpleGraph& support, int u, int v) {
    SimpleGraph cut = support;
    cut.remove_edge(u, v);
    VertexMask seen = VertexMask{1} << u;
    VertexMask frontier = seen;
    while (frontier != 0) {
        VertexMask next = 0;
        for (VertexMask m = frontier; m != 0; m &= m - 1) next |= cut.neighbors(std::countr_zero(m));
        frontier = next & ~seen;
        seen |= next;
    }
    return (seen >> v) & 1u;
}

TuttePoly dc(const MultiGraph& input) {
    const int loops = input.loop_count();
    MultiGraph g = input;
    g.clear_loops();

    const SimpleGraph support = g.support();
    VertexMask isolated = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (support.neighbors(v) == 0) isolated |= VertexMask{1} << v;
    }
    if (isolated != 0) g = g.without_vertices(isolated);
    if (g.edge_count() == 0) return y_power(loops);

    std::optional<MultiCanonKey> key;
    if (g.order() <= 10) {
        key = canonical_key(g);
        if (auto hit = memo().find(*key)) return *hit * y_power(loops);
    }

    const SimpleGraph core = g.support();
    std::optional<Edge> chosen;
    for (const Edge& e : core.edges()) {
        if (g.multiplicity(e.u, e.v) > 1 || connected_without(core, e.u, e.v)) {
            chosen = e;
            break;
        }
    }

    TuttePoly value;
    if (!chosen) {
        value = x_power(g.edge_count());
    } else {
        MultiGraph deleted = g;
        deleted.remove_edge(chosen->u, chosen->v);
        value = dc(deleted) + dc(g.contract(chosen->u, chosen->v));
    }
    if (key) memo().store(*key, value);
    return value * y_power(loops);
}

Rational rational_power(const Rational& base, int e) {
    Rational out = 1;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

IntPoly specialize(const SimpleGraph& g, long y) {
    const int n = g.order();
    const int k = g.component_count();
    IntPoly in_x = tutte_dc(g).at_y(y).compose_linear(-1, 1);
    if ((n - k) % 2 != 0) in_x = -in_x;
    return in_x.shifted(k);
}

}  // namespace

TuttePoly tutte_subset(const MultiGraph& g) {
    const SubsetCensus census = subset_census(g);
    const int n = g.order();
    TuttePoly out;
    for (std::size_t k = 0; k < census.count.size(); ++k) {
        for (std::size_t j = 0; j < census.count[k].size(); ++j) {
            const std::uint64_t c = census.count[k][j];
            if (c == 0) continue;
            const int ex = static_cast<int>(k) - census.full_components;
            const int ey = static_cast<int>(k + j) - n;
            out += BiPoly::outer(shifted_power(ex) * Integer(static_cast<unsigned long>(c)), shifted_power(ey));
        }
    }
    return out;
}

TuttePoly tutte_subset(const SimpleGraph& g) { return tutte_subset(MultiGraph::from_simple(g)); }

TuttePoly tutte_dc(const MultiGraph& g) { return dc(g); }

TuttePoly tutte_dc(const SimpleGraph& g) { return dc(MultiGraph::from_simple(g)); }

void clear_tutte_memo() { memo().clear(); }

IntPoly specialize_coadjoint(const SimpleGraph& g) { return specialize(g, -1); }

IntPoly specialize_chromatic(const SimpleGraph& g) { return specialize(g, 0); }

bool z_t_conversion_check(const SimpleGraph& g, const std::vector<SamplePoint>& points) {
    for (const auto& [x, y] : points) {
        if (x == 1 || y == 1) throw DomainError("Z/T conversion is singular at x = 1 or y = 1");
    }
    const TuttePoly t = tutte_dc(g);
    const int k = g.component_count();
    for (const auto& [x, y] : points) {
        const Rational xm = x - 1;
        const Rational ym = y - 1;
        const ZPoly z = partition_function(g, ym);
        const Rational rhs = z.eval(xm * ym) / (rational_power(xm, k) * rational_power(ym, g.order()));
        if (t.eval(x, y) != rhs) return false;
    }
    return true;
}

std::pair<Integer, Integer> merino_sides(const SimpleGraph& g, Edge e) {
    if (!g.has_edge(e.u, e.v)) throw InvalidEdgeError("merino_check edge is not in the graph");
    const Rational left = tutte_dc(g).eval(1, -1);
    const VertexMask ends = (VertexMask{1} << e.u) | (VertexMask{1} << e.v);
    const Rational right = tutte_dc(delete_vertices(g, ends)).eval(2, -1);
    return {left.get_num(), right.get_num()};
}

bool merino_check(const SimpleGraph& g, Edge e) {
    const auto [left, right] = merino_sides(g, e);
    return left == right;
}

}  // namespace copoly
