#include "copoly/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "copoly/error.hpp"
#include "copoly/family.hpp"

namespace copoly {

namespace {

double residual(const IntPoly& p, std::complex<double> r, double scale) {
    std::complex<long double> acc = 0;
    const std::complex<long double> z(r.real(), r.imag());
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = acc * z + static_cast<long double>(it->get_d());
    }
    return static_cast<double>(std::abs(acc)) / scale;
}

}  // namespace

double RootSet::max_modulus() const {
    double best = 0.0;
    for (const auto& r : roots) best = std::max(best, std::abs(r));
    return best;
}

double RootSet::max_residual() const {
    return residuals.empty() ? 0.0 : *std::max_element(residuals.begin(), residuals.end());
}

RootSet poly_roots(const IntPoly& p, const RootOptions& options) {
    if (p.degree() < 1) throw DomainError("poly_roots needs degree >= 1");

    int zeros = 0;
    while (p.coeffs()[static_cast<std::size_t>(zeros)] == 0) ++zeros;
    std::vector<Integer> reduced_coeffs(p.coeffs().begin() + zeros, p.coeffs().end());
    const IntPoly reduced(reduced_coeffs);
    const int d = reduced.degree();

    double norm = 0.0;
    for (const Integer& c : p.coeffs()) norm = std::max(norm, std::abs(c.get_d()));
    const double scale = 1.0 + norm;

    RootSet out;
    out.roots.assign(static_cast<std::size_t>(zeros), {0.0, 0.0});

    if (d >= 1) {
        std::vector<std::complex<double>> monic(static_cast<std::size_t>(d) + 1);
        const double lead = reduced.coeffs().back().get_d();
        double cauchy = 0.0;
        for (int i = 0; i <= d; ++i) {
            monic[static_cast<std::size_t>(i)] = reduced.coeffs()[static_cast<std::size_t>(i)].get_d() / lead;
            if (i < d) cauchy = std::max(cauchy, std::abs(monic[static_cast<std::size_t>(i)]));
        }
        const double radius = 1.1 * (1.0 + cauchy);

        std::vector<std::complex<double>> z(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k) {
            z[static_cast<std::size_t>(k)] = std::polar(radius, 2.0 * std::numbers::pi * k / d + 0.4);
        }
        auto eval = [&](std::complex<double> x) {
            std::complex<double> acc = 0;
            for (int i = d; i >= 0; --i) acc = acc * x + monic[static_cast<std::size_t>(i)];
            return acc;
        };

        bool converged = false;
        int iter = 0;
        while (iter < options.max_iterations && !converged) {
            ++iter;
            double step = 0.0;
            for (int k = 0; k < d; ++k) {
                const auto zk = z[static_cast<std::size_t>(k)];
                std::complex<double> denom = 1.0;
                for (int j = 0; j < d; ++j) {
                    if (j != k) denom *= zk - z[static_cast<std::size_t>(j)];
                }
                if (denom == std::complex<double>(0.0, 0.0)) denom = 1e-300;
                const auto delta = eval(zk) / denom;
                z[static_cast<std::size_t>(k)] = zk - delta;
                step = std::max(step, std::abs(delta));
            }
            converged = step < options.step_tolerance;
        }
        out.iterations = iter;
        out.roots.insert(out.roots.end(), z.begin(), z.end());
        if (!converged) {
            double worst = 0.0;
            for (const auto& r : z) worst = std::max(worst, residual(p, r, scale));
            if (!(worst < options.residual_tolerance)) {
                std::ostringstream msg;
                msg << "Durand-Kerner did not converge for " << to_string(p) << " after " << iter
                    << " iterations; worst residual " << worst;
                throw NumericError(msg.str());
            }
        }
    }
    for (const auto& r : out.roots) out.residuals.push_back(residual(p, r, scale));
    return out;
}

double sokal_objective(double a) { return (a + std::exp(a)) / std::log1p(a * std::exp(-a)); }

SokalMinimum sokal_constant(double tolerance) {
    if (!(tolerance >= 1e-9)) throw DomainError("sokal_constant tolerance must be >= 1e-9");
    constexpr double kStep = 0.01;
    constexpr int kSamples = 400;
    int best = 1;
    for (int i = 1; i <= kSamples; ++i) {
        if (sokal_objective(i * kStep) < sokal_objective(best * kStep)) best = i;
    }
    double lo = std::max((best - 1) * kStep, 1e-12);
    double hi = std::min((best + 1) * kStep, 4.0);

    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - ratio * (hi - lo);
    double d = lo + ratio * (hi - lo);
    double fc = sokal_objective(c);
    double fd = sokal_objective(d);
    while (hi - lo > tolerance) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - ratio * (hi - lo);
            fc = sokal_objective(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + ratio * (hi - lo);
            fd = sokal_objective(d);
        }
    }
    const double a = (lo + hi) / 2.0;
    return {a, sokal_objective(a)};
}

bool sokal_bound_check(const SimpleGraph& g) {
    if (g.edge_count() == 0) throw DomainError("sokal_bound_check needs at least one edge");
    static const double k_constant = sokal_constant(1e-9).value;
    const RootSet roots = poly_roots(family_poly(g, FamilyKind::CoAdjoint));
    return roots.max_modulus() <= k_constant * g.max_degree() + 1e-6;
}

bool eulerian_consequence_check(const SimpleGraph& g) {
    const Integer value = abs(family_poly(g, FamilyKind::CoAdjoint).eval(Integer(1)));
    return value == (g.all_degrees_even() ? 1 : 0);
}

}  // namespace copoly
