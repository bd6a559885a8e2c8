#pragma once

#include <utility>
#include <vector>

#include "copoly/graph.hpp"
#include "copoly/poly.hpp"

namespace copoly {

/// T(G; x, y) as a bivariate integer polynomial in (x, y).
using TuttePoly = BiPoly;

/// Expands sum over A of (x-1)^(k(A)-k(E)) (y-1)^(k(A)+|A|-|V|).
TuttePoly tutte_subset(const MultiGraph& g);
TuttePoly tutte_subset(const SimpleGraph& g);

/// Deletion-contraction on multigraphs: loops contribute a factor y,
/// forests of bridges x^|E|, otherwise T(G-e) + T(G/e) on a non-bridge e.
/// Memoized by multigraph canonical key for n <= 10.
TuttePoly tutte_dc(const MultiGraph& g);
TuttePoly tutte_dc(const SimpleGraph& g);

void clear_tutte_memo();

/// (-1)^(n-k(G)) x^k(G) T(G; 1-x, -1).
IntPoly specialize_coadjoint(const SimpleGraph& g);
/// (-1)^(n-k(G)) x^k(G) T(G; 1-x, 0).
IntPoly specialize_chromatic(const SimpleGraph& g);

using SamplePoint = std::pair<Rational, Rational>;

/// Checks T(x,y) = (x-1)^(-k(E)) (y-1)^(-|V|) Z_G((x-1)(y-1), y-1) at each
/// point. Throws DomainError when a point has x = 1 or y = 1.
bool z_t_conversion_check(const SimpleGraph& g, const std::vector<SamplePoint>& points);

/// T(G; 1, -1) and T(G - {u, v}; 2, -1).
std::pair<Integer, Integer> merino_sides(const SimpleGraph& g, Edge e);
/// True when both sides of merino_sides agree. Throws InvalidEdgeError.
bool merino_check(const SimpleGraph& g, Edge e);

}  // namespace copoly
