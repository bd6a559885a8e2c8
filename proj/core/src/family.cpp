#include "copoly/family.hpp"

#include <atomic>
#include <bit>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "copoly/error.hpp"

namespace copoly {

namespace {

struct MemoKey {
    CanonKey key;
    FamilyKind kind;

    friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

struct MemoKeyHash {
    std::size_t operator()(const MemoKey& k) const noexcept {
        return CanonKeyHash{}(k.key) * 31u + static_cast<std::size_t>(k.kind);
    }
};

// Shared across threads; equal keys always map to equal values, so a lost
// race on insert only wastes work.
class FamilyMemo {
public:
    std::optional<IntPoly> find(const MemoKey& key) {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end()) {
            misses_.fetch_add(1, std::memory_order_relaxed);
            return std::nullopt;
        }
        hits_.fetch_add(1, std::memory_order_relaxed);
        return it->second;
    }

    void store(const MemoKey& key, const IntPoly& value) {
        std::unique_lock lock(mutex_);
        table_.insert_or_assign(key, value);
    }

    MemoStats stats() {
        std::shared_lock lock(mutex_);
        return {table_.size(), hits_.load(), misses_.load()};
    }

    void clear() {
        std::unique_lock lock(mutex_);
        table_.clear();
        hits_ = 0;
        misses_ = 0;
    }

private:
    std::shared_mutex mutex_;
    std::unordered_map<MemoKey, IntPoly, MemoKeyHash> table_;
    std::atomic<std::size_t> hits_{0};
    std::atomic<std::size_t> misses_{0};
};

FamilyMemo& memo() {
    static FamilyMemo instance;
    return instance;
}

IntPoly recurse(const SimpleGraph& g, FamilyKind kind, const RecursionOptions& options) {
    const int n = g.order();
    if (g.edge_count() == 0) return IntPoly::monomial(n);

    if (options.split_components) {
        VertexMask isolated = 0;
        for (int v = 0; v < n; ++v) {
            if (g.neighbors(v) == 0) isolated |= VertexMask{1} << v;
        }
        if (isolated != 0) {
            return recurse(delete_vertices(g, isolated), kind, options).shifted(std::popcount(isolated));
        }
        const auto comps = g.components();
        if (comps.size() > 1) {
            IntPoly product = IntPoly::constant(1);
            for (VertexMask c : comps) product *= recurse(g.induced(c), kind, options);
            return product;
        }
    }

    std::optional<MemoKey> key;
    if (options.memoize && n <= kMaxCanonOrder) {
        key = MemoKey{canonical_key(g), kind};
        if (auto hit = memo().find(*key)) return *hit;
    }

    const Edge e = g.first_edge();
    IntPoly result = recurse(delete_edge(g, e), kind, options) - recurse(merge_edge(g, e, kind), kind, options);
    if (key) memo().store(*key, result);
    return result;
}

IntPoly recurse_random(const SimpleGraph& g, FamilyKind kind, std::mt19937_64& rng) {
    const auto edges = g.edges();
    if (edges.empty()) return IntPoly::monomial(g.order());
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    const Edge e = edges[pick(rng)];
    return recurse_random(delete_edge(g, e), kind, rng) - recurse_random(merge_edge(g, e, kind), kind, rng);
}

}  // namespace

IntPoly family_poly(const SimpleGraph& g, FamilyKind kind, const RecursionOptions& options) {
    return recurse(g, kind, options);
}

IntPoly family_poly_random_order(const SimpleGraph& g, FamilyKind kind, std::mt19937_64& rng) {
    return recurse_random(g, kind, rng);
}

MemoStats family_memo_stats() { return memo().stats(); }

void clear_family_memo() { memo().clear(); }

Integer b_of(FamilyKind kind, const SimpleGraph& g) {
    if (g.order() == 0) throw DomainError("b is undefined on the null graph");
    if (!g.is_connected()) throw DomainError("b_of requires a connected graph");
    return family_poly(g, kind).coefficient(1);
}

BFunction BFunction::from_family(FamilyKind kind) {
    return BFunction([kind](const SimpleGraph& g) { return family_poly(g, kind).coefficient(1); });
}

BFunction BFunction::matching() {
    return BFunction([](const SimpleGraph& g) -> Integer {
        if (g.order() == 1) return 1;
        if (g.order() == 2 && g.edge_count() == 1) return -1;
        return 0;
    });
}

BFunction BFunction::adjoint() {
    return BFunction([](const SimpleGraph& g) -> Integer {
        const int n = g.order();
        if (n == 0 || g.edge_count() != n * (n - 1) / 2) return 0;
        return n % 2 == 1 ? 1 : -1;
    });
}

void BFunction::set(const SimpleGraph& g, const Integer& value) { table_[canonical_key(g)] = value; }

Integer BFunction::operator()(const SimpleGraph& g) const {
    if (!table_.empty() && g.order() <= kMaxCanonOrder) {
        auto it = table_.find(canonical_key(g));
        if (it != table_.end()) return it->second;
    }
    if (fallback_) return fallback_(g);
    return 0;
}

IntPoly f_b_construct(const SimpleGraph& g, const BFunction& b) {
    const int n = g.order();
    if (n > kMaxCanonOrder) {
        throw CapacityError("set-partition construction limited to n <= 10, got " + std::to_string(n));
    }
    const std::size_t subsets = std::size_t{1} << n;
    std::vector<Integer> block(subsets, 0);
    for (std::size_t s = 1; s < subsets; ++s) block[s] = b(g.induced(static_cast<VertexMask>(s)));

    // sums[S][k]: partitions of S into k blocks, the block holding min(S) chosen first
    std::vector<std::vector<Integer>> sums(subsets);
    sums[0] = {1};
    for (std::size_t s = 1; s < subsets; ++s) {
        const std::size_t low = s & (~s + 1);
        const std::size_t rest = s & ~low;
        auto& out = sums[s];
        out.assign(static_cast<std::size_t>(std::popcount(s)) + 1, 0);
        // enumerate T = low | sub for every sub of rest
        for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
            const std::size_t t = low | sub;
            if (block[t] != 0) {
                const auto& tail = sums[s & ~t];
                for (std::size_t k = 0; k < tail.size(); ++k) {
                    if (tail[k] != 0) out[k + 1] += block[t] * tail[k];
                }
            }
            if (sub == 0) break;
        }
    }
    return IntPoly(sums[subsets - 1]);
}

bool exp_type_check(const SimpleGraph& g, FamilyKind kind) {
    const int n = g.order();
    if (n > 7) throw CapacityError("exponential-type check limited to n <= 7");
    const VertexMask all = g.all_vertices();
    BiPoly lhs;
    for (VertexMask s = 0;; s = (s - all) & all) {
        lhs += BiPoly::outer(family_poly(g.induced(s), kind), family_poly(g.induced(all & ~s), kind));
        if (s == all) break;
    }
    return lhs == substitute_sum(family_poly(g, kind));
}

}  // namespace copoly
