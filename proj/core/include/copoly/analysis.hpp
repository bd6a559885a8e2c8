#pragma once

#include <complex>
#include <vector>

#include "copoly/graph.hpp"
#include "copoly/poly.hpp"

namespace copoly {

struct RootSet {
    std::vector<std::complex<double>> roots;
    /// |p(r)| / (1 + max |coeff|) for each root.
    std::vector<double> residuals;
    int iterations = 0;

    double max_modulus() const;
    double max_residual() const;
};

struct RootOptions {
    double step_tolerance = 1e-12;
    int max_iterations = 500;
    /// Accepted backward error when the step criterion is not met, which
    /// happens at repeated roots.
    double residual_tolerance = 1e-8;
};

/// All complex roots by Durand-Kerner iteration started on a circle of
/// 1.1 times the Cauchy bound. Exact factors of x are split off first.
/// Throws DomainError for degree < 1 and NumericError on non-convergence.
RootSet poly_roots(const IntPoly& p, const RootOptions& options = {});

struct SokalMinimum {
    double minimizer = 0.0;
    double value = 0.0;
};

/// g(a) = (a + e^a) / ln(1 + a e^-a).
double sokal_objective(double a);

/// Minimum of g over (0, 4]: coarse scan at step 0.01, then golden-section
/// refinement to width `tolerance`.
SokalMinimum sokal_constant(double tolerance = 1e-6);

/// Max root modulus of the co-adjoint polynomial against K times the
/// maximum degree (+1e-6). Requires at least one edge.
bool sokal_bound_check(const SimpleGraph& g);

/// |P(G, 1)| is 1 on graphs with all degrees even and 0 otherwise.
bool eulerian_consequence_check(const SimpleGraph& g);

}  // namespace copoly
