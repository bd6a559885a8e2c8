#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "copoly/graph.hpp"
#include "copoly/poly.hpp"

namespace copoly {

inline constexpr int kMaxSubsetEdges = 24;

/// count[k][j] = number of edge subsets A with k(A) = k components and
/// |A| = j edges (loops and parallel copies counted as separate edges).
struct SubsetCensus {
    int order = 0;
    int edges = 0;
    int full_components = 0;
    std::vector<std::vector<std::uint64_t>> count;
};

SubsetCensus subset_census(const SimpleGraph& g);
SubsetCensus subset_census(const MultiGraph& g);

/// Polynomial in q with exact rational coefficients.
struct ZPoly {
    std::vector<Rational> coeffs;

    Rational eval(const Rational& q) const;
    friend bool operator==(const ZPoly&, const ZPoly&) = default;
};

/// Z_G(q, v) = sum over A of q^k(A) prod_{e in A} v_e. `weights` holds one
/// value per edge in g.edges() order, or a single value used for every edge.
ZPoly partition_function(const SimpleGraph& g, std::span<const Rational> weights);
ZPoly partition_function(const SimpleGraph& g, const Rational& v);

/// Z_G(q, v) with both q and v symbolic: entry (k, j) counts subsets with k
/// components and j edges.
BiPoly partition_function_symbolic(const SimpleGraph& g);

/// sum_k t_k x^k with t_k = 2^(k-n) sum_{k(A)=k} (-2)^|A|.
IntPoly coadjoint_via_Z(const SimpleGraph& g);

/// Proper colourings with q colours by exhaustive assignment.
std::uint64_t count_colorings(const SimpleGraph& g, int q);

/// m_0..m_{floor(n/2)}, trailing zeros dropped.
std::vector<std::uint64_t> count_matchings(const SimpleGraph& g);

/// a_0..a_n where a_k counts covers of V by k disjoint cliques (a_0 = 0
/// unless n = 0).
std::vector<std::uint64_t> count_clique_partitions(const SimpleGraph& g);

/// E_0..E_max_n by the Seidel-Entringer triangle, cross-checked against a
/// permutation scan for m <= 9.
std::vector<Integer> zigzag_numbers(int max_n);
/// Up-down permutations of {1..m} by direct scan.
std::uint64_t count_alternating_permutations(int m);

}  // namespace copoly
