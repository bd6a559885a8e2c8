#include "copoly/suites.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "copoly/analysis.hpp"
#include "copoly/family.hpp"
#include "copoly/graph.hpp"
#include "copoly/graph6.hpp"
#include "copoly/oracles.hpp"
#include "copoly/series.hpp"
#include "copoly/tutte.hpp"

namespace copoly {

namespace {

constexpr std::size_t kKeptFailures = 10;
// Plain recursion with random edge order has no memo; beyond 5 vertices it is too slow to sweep.
constexpr int kMaxOrderIndependence = 5;
constexpr int kRandomOrders = 20;
constexpr int kMaxColoringOrder = 5;

void for_each_graph_upto(int max_n, const std::function<void(const SimpleGraph&)>& visit) {
    for (int n = 0; n <= std::min(max_n, 6); ++n) enumerate_labeled_graphs(n, visit);
}

std::string describe(const SimpleGraph& g, std::string_view what) {
    return std::string(what) + " on graph6 " + emit_graph6(g);
}

IntPoly matching_from_counts(const SimpleGraph& g) {
    const auto m = count_matchings(g);
    std::vector<Integer> c(static_cast<std::size_t>(g.order()) + 1, 0);
    for (std::size_t k = 0; k < m.size(); ++k) {
        Integer v(static_cast<unsigned long>(m[k]));
        c[static_cast<std::size_t>(g.order()) - k] = k % 2 == 0 ? v : Integer(-v);
    }
    return IntPoly(std::move(c));
}

IntPoly adjoint_from_counts(const SimpleGraph& g) {
    const auto a = count_clique_partitions(g);
    std::vector<Integer> c(a.size(), 0);
    for (std::size_t k = 0; k < a.size(); ++k) {
        Integer v(static_cast<unsigned long>(a[k]));
        c[k] = (static_cast<std::size_t>(g.order()) - k) % 2 == 0 ? v : Integer(-v);
    }
    return IntPoly(std::move(c));
}

bool alternating_signs(const IntPoly& p, int n) {
    for (int k = 0; k <= p.degree(); ++k) {
        const Integer signed_coeff = (n - k) % 2 == 0 ? p.coefficient(k) : Integer(-p.coefficient(k));
        if (signed_coeff < 0) return false;
    }
    return true;
}

SuiteReport recursion_suite(int max_n) {
    SuiteReport r{"recursion"};
    std::uint64_t seed = 0;
    for_each_graph_upto(max_n, [&](const SimpleGraph& g) {
        RecursionOptions plain{false, false};
        for (FamilyKind kind : kAllKinds) {
            const IntPoly fast = family_poly(g, kind);
            r.record(fast == family_poly(g, kind, plain),
                     describe(g, std::string(kind_name(kind)) + " memoized vs plain recursion"));
            if (g.order() <= kMaxOrderIndependence) {
                std::mt19937_64 rng(++seed);
                bool same = true;
                for (int t = 0; t < kRandomOrders && same; ++t) same = family_poly_random_order(g, kind, rng) == fast;
                r.record(same, describe(g, std::string(kind_name(kind)) + " edge-order independence"));
            }
        }
        r.record(family_poly(g, FamilyKind::Matching) == matching_from_counts(g), describe(g, "matching vs m_k"));
        r.record(family_poly(g, FamilyKind::Adjoint) == adjoint_from_counts(g), describe(g, "adjoint vs a_k"));
        r.record(alternating_signs(family_poly(g, FamilyKind::CoAdjoint), g.order()),
                 describe(g, "co-adjoint alternating signs"));
    });
    return r;
}

SuiteReport exp_type_suite(int max_n) {
    SuiteReport r{"exp-type"};
    for_each_graph_upto(max_n, [&](const SimpleGraph& g) {
        for (FamilyKind kind : kAllKinds) {
            r.record(exp_type_check(g, kind), describe(g, std::string(kind_name(kind)) + " exponential type"));
            r.record(f_b_construct(g, BFunction::from_family(kind)) == family_poly(g, kind),
                     describe(g, std::string(kind_name(kind)) + " b-function reconstruction"));
        }
    });
    for (int n = 0; n <= 8; ++n) {
        // binomial type of p_n(x) = (-1)^n P(K_n, -x)
        BiPoly lhs;
        for (int k = 0; k <= n; ++k) {
            const IntPoly pk = reflect_negate(family_poly(complete_graph(k), FamilyKind::CoAdjoint));
            const IntPoly pnk = reflect_negate(family_poly(complete_graph(n - k), FamilyKind::CoAdjoint));
            lhs += BiPoly::outer(pk * binomial(n, k), pnk);
        }
        const IntPoly pn = reflect_negate(family_poly(complete_graph(n), FamilyKind::CoAdjoint));
        r.record(lhs == substitute_sum(pn), "binomial type of p_" + std::to_string(n));
    }
    return r;
}

SuiteReport tutte_suite(int max_n) {
    SuiteReport r{"tutte"};
    const std::vector<SamplePoint> points = {{3, 2}, {Rational(1, 2), -3}, {-2, Rational(5, 3)}};
    for_each_graph_upto(max_n, [&](const SimpleGraph& g) {
        const IntPoly rec = family_poly(g, FamilyKind::CoAdjoint);
        r.record(rec == coadjoint_via_Z(g), describe(g, "recursion vs 2^-n Z(2x,-2)"));
        r.record(rec == specialize_coadjoint(g), describe(g, "recursion vs Tutte specialization"));
        if (g.order() <= 5) {
            r.record(tutte_dc(g) == tutte_subset(g), describe(g, "deletion-contraction vs subset expansion"));
            r.record(z_t_conversion_check(g, points), describe(g, "Z/T conversion"));
        }
        if (g.order() <= kMaxColoringOrder) {
            const IntPoly chrom = specialize_chromatic(g);
            r.record(chrom == family_poly(g, FamilyKind::Chromatic), describe(g, "chromatic recursion vs Tutte"));
            const ZPoly z = partition_function(g, Rational(-1));
            for (int t = 0; t <= 4; ++t) {
                const Integer colorings(static_cast<unsigned long>(count_colorings(g, t)));
                r.record(chrom.eval(Integer(t)) == colorings && z.eval(t) == Rational(colorings),
                         describe(g, "chromatic values at t=" + std::to_string(t)));
            }
        }
    });
    for (int n = 1; n <= 6; ++n) {
        const SimpleGraph k = complete_graph(n);
        r.record(tutte_dc(k) == tutte_subset(k), "deletion-contraction vs subset on K_" + std::to_string(n));
    }
    for (int n = 1; n <= 3; ++n) {
        const SimpleGraph k = complete_bipartite(n, n);
        r.record(tutte_dc(k) == tutte_subset(k),
                 "deletion-contraction vs subset on K_" + std::to_string(n) + "," + std::to_string(n));
    }
    return r;
}

SuiteReport merino_suite(int) {
    SuiteReport r{"merino"};
    const auto zigzag = zigzag_numbers(8);
    for (int n = 1; n <= 8; ++n) {
        const Integer t = tutte_dc(complete_graph(n)).eval(1, -1).get_num();
        r.record(t == zigzag[static_cast<std::size_t>(n - 1)], "T(K_" + std::to_string(n) + ",1,-1) = E_" + std::to_string(n - 1));
    }
    for (int n = 0; n <= 6; ++n) {
        const IntPoly pn = family_poly(complete_graph(n), FamilyKind::CoAdjoint);
        Integer value = pn.eval(Integer(-1));
        if (n % 2 != 0) value = -value;
        const Integer t2 = tutte_dc(complete_graph(n)).eval(2, -1).get_num();
        const Integer x_coeff = abs(family_poly(complete_graph(n + 2), FamilyKind::CoAdjoint).coefficient(1));
        r.record(value == t2 && t2 == x_coeff, "(-1)^n P(K_n,-1) sequence at n=" + std::to_string(n));
    }
    for (int n = 1; n <= 4; ++n) {
        const Integer value = family_poly(complete_bipartite(n, n), FamilyKind::CoAdjoint).eval(Integer(-1));
        const Integer x_coeff = abs(family_poly(complete_bipartite(n + 1, n + 1), FamilyKind::CoAdjoint).coefficient(1));
        r.record(value == x_coeff, "P(K_{n,n},-1) sequence at n=" + std::to_string(n));
    }
    for (int n = 2; n <= 6; ++n) {
        const SimpleGraph g = complete_graph(n);
        for (const Edge& e : g.edges()) r.record(merino_check(g, e), "Merino identity on K_" + std::to_string(n));
    }
    for (int n = 1; n <= 4; ++n) {
        const SimpleGraph g = complete_bipartite(n, n);
        for (const Edge& e : g.edges()) r.record(merino_check(g, e), "Merino identity on K_{n,n}, n=" + std::to_string(n));
    }
    return r;
}

SuiteReport eulerian_suite(int max_n) {
    SuiteReport r{"eulerian"};
    for_each_graph_upto(max_n, [&](const SimpleGraph& g) {
        r.record(eulerian_consequence_check(g), describe(g, "|P(G,1)| parity"));
    });
    return r;
}

SuiteReport sokal_suite(int max_n) {
    SuiteReport r{"sokal"};
    const SokalMinimum k = sokal_constant(1e-6);
    r.record(std::abs(k.value - 7.963907) <= 1e-5, "Sokal constant 7.963907");
    for_each_graph_upto(max_n, [&](const SimpleGraph& g) {
        if (g.edge_count() == 0) return;
        r.record(sokal_bound_check(g), describe(g, "root bound K*D"));
    });
    for (int n = 2; n <= 8; ++n) {
        const SimpleGraph g = complete_graph(n);
        r.record(sokal_bound_check(g), "root bound on K_" + std::to_string(n));
        r.record(poly_roots(family_poly(g, FamilyKind::CoAdjoint)).max_residual() < 1e-8,
                 "root residuals on K_" + std::to_string(n));
    }
    for (int n = 1; n <= 5; ++n) {
        const SimpleGraph g = complete_bipartite(n, n);
        r.record(sokal_bound_check(g), "root bound on K_{n,n}, n=" + std::to_string(n));
        r.record(poly_roots(family_poly(g, FamilyKind::CoAdjoint)).max_residual() < 1e-8,
                 "root residuals on K_{n,n}, n=" + std::to_string(n));
    }
    return r;
}

SuiteReport egf_suite(int) {
    SuiteReport r{"egf"};
    const auto p = egf_reconstruct(8);
    for (int n = 0; n <= 8; ++n) {
        r.record(p[static_cast<std::size_t>(n)] == reflect_negate(family_poly(complete_graph(n), FamilyKind::CoAdjoint)),
                 "EGF coefficient p_" + std::to_string(n));
    }
    const RatSeries f = build_F(12);
    const RatSeries z = RatSeries::variable(12);
    const RatSeries sec_plus_tan = (RatSeries::constant(12, 1) + sin(z)) / cos(z);
    r.record(derivative(f) == sec_plus_tan.truncated(11), "F' = (1 + sin z) / cos z");
    const auto e = zigzag_numbers(11);
    for (int n = 1; n <= 12; ++n) {
        r.record(f[n] * factorial(n) == Rational(e[static_cast<std::size_t>(n - 1)]),
                 "n! [z^n] F = E_{n-1} at n=" + std::to_string(n));
    }
    return r;
}

}  // namespace

void SuiteReport::record(bool ok, const std::string& description) {
    ++cases;
    if (ok) return;
    ++failures;
    if (failed_cases.size() < kKeptFailures) failed_cases.push_back(description);
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"recursion", "exp-type", "tutte", "merino",
                                                   "eulerian",  "sokal",    "egf"};
    return names;
}

std::optional<SuiteReport> run_suite(std::string_view name, int max_n) {
    if (name == "recursion") return recursion_suite(max_n);
    if (name == "exp-type") return exp_type_suite(max_n);
    if (name == "tutte") return tutte_suite(max_n);
    if (name == "merino") return merino_suite(max_n);
    if (name == "eulerian") return eulerian_suite(max_n);
    if (name == "sokal") return sokal_suite(max_n);
    if (name == "egf") return egf_suite(max_n);
    return std::nullopt;
}

}  // namespace copoly
