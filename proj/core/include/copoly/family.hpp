#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <random>

#include "copoly/canon.hpp"
#include "copoly/graph.hpp"
#include "copoly/poly.hpp"

namespace copoly {

struct RecursionOptions {
    /// Cache results by (canonical key, kind) for graphs with n <= 10.
    bool memoize = true;
    /// Multiply over connected components instead of recursing on the union.
    bool split_components = true;
};

/// f(G) = f(G - e) - f(G o e) with o the merge selected by `kind`, on the
/// lexicographically smallest edge; f(edgeless K_n) = x^n, f(null graph) = 1.
IntPoly family_poly(const SimpleGraph& g, FamilyKind kind, const RecursionOptions& options = {});

/// Plain recursion choosing a uniformly random edge at every step; no
/// memoization and no component splitting.
IntPoly family_poly_random_order(const SimpleGraph& g, FamilyKind kind, std::mt19937_64& rng);

struct MemoStats {
    std::size_t entries = 0;
    std::size_t hits = 0;
    std::size_t misses = 0;
};

MemoStats family_memo_stats();
void clear_family_memo();

/// Coefficient of x^1 of family_poly; g must be connected with n >= 1.
Integer b_of(FamilyKind kind, const SimpleGraph& g);

/// Graph function on isomorphism classes. Values come from the explicit
/// table first, then from the fallback, else 0.
class BFunction {
public:
    using Fallback = std::function<Integer(const SimpleGraph&)>;

    BFunction() = default;
    explicit BFunction(Fallback fallback) : fallback_(std::move(fallback)) {}

    /// b(G) = [x^1] f(G); the x^1 coefficient is also used for
    /// disconnected graphs, where it vanishes for all four kinds.
    static BFunction from_family(FamilyKind kind);
    /// b(K_1) = 1, b(K_2) = -1, zero otherwise.
    static BFunction matching();
    /// b(K_n) = (-1)^(n-1), zero on non-complete graphs.
    static BFunction adjoint();

    void set(const SimpleGraph& g, const Integer& value);
    Integer operator()(const SimpleGraph& g) const;

private:
    std::map<CanonKey, Integer> table_;
    Fallback fallback_;
};

/// Sum over set partitions {S_1..S_k} of V of b(G[S_1])...b(G[S_k]) x^k.
IntPoly f_b_construct(const SimpleGraph& g, const BFunction& b);

/// Compares sum_S f(G[S], x) f(G[V\S], y) with f(G, x + y) exactly; n <= 7.
bool exp_type_check(const SimpleGraph& g, FamilyKind kind);

}  // namespace copoly
