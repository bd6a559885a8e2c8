// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "copoly/analysis.hpp"
#include "copoly/family.hpp"
#include "copoly/oracles.hpp"
#include "copoly/series.hpp"
#include "copoly/tutte.hpp"

using namespace copoly;

namespace {

// printed co-adjoint tables
const std::vector<std::string> kCompleteTable = {
    "x",
    "x^2-x",
    "x^3-3x^2+x",
    "x^4-6x^3+7x^2-2x",
    "x^5-10x^4+25x^3-20x^2+5x",
    "x^6-15x^5+65x^4-105x^3+70x^2-16x",
    "x^7-21x^6+140x^5-385x^4+490x^3-287x^2+61x",
    "x^8-28x^7+266x^6-1120x^5+2345x^4-2548x^3+1356x^2-272x",
};

const std::vector<std::string> kBipartiteTable = {
    "x^2-x",
    "x^4-4x^3+6x^2-2x",
    "x^6-9x^5+36x^4-66x^3+51x^2-13x",
    "x^8-16x^7+120x^6-488x^5+1112x^4-1360x^3+808x^2-176x",
    "x^10-25x^9+300x^8-2100x^7+9150x^6-25030x^5+42020x^4-41020x^3+20785x^2-4081x",
};

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

void all_graphs_up_to(int max_n, const std::function<void(const SimpleGraph&)>& fn) {
    for (int n = 0; n <= max_n; ++n) enumerate_labeled_graphs(n, fn);
}

Outcome complete_table() {
    Outcome o;
    for (int n = 1; n <= 8; ++n) {
        if (family_poly(complete_graph(n), FamilyKind::CoAdjoint) != parse_poly(kCompleteTable[static_cast<std::size_t>(n - 1)])) {
            o.pass = false;
            o.detail += " K_" + std::to_string(n);
        }
    }
    o.detail = o.pass ? "K_1..K_8 exact" : "mismatch at" + o.detail;
    return o;
}

Outcome bipartite_table() {
    Outcome o;
    for (int n = 1; n <= 5; ++n) {
        const IntPoly p = family_poly(complete_bipartite(n, n), FamilyKind::CoAdjoint);
        if (p != parse_poly(kBipartiteTable[static_cast<std::size_t>(n - 1)])) {
            o.pass = false;
            o.detail += " K_{" + std::to_string(n) + "," + std::to_string(n) + "}";
        }
        if (n == 5 && p.coefficient(1) != -4081) o.pass = false;
    }
    o.detail = o.pass ? "K_{1,1}..K_{5,5} exact, K_{5,5} x-coefficient -4081" : "mismatch at" + o.detail;
    return o;
}

Outcome three_way() {
    Outcome o;
    std::uint64_t graphs = 0;
    std::uint64_t bad = 0;
    all_graphs_up_to(6, [&](const SimpleGraph& g) {
        ++graphs;
        const IntPoly rec = family_poly(g, FamilyKind::CoAdjoint);
        if (rec != coadjoint_via_Z(g) || rec != specialize_coadjoint(g)) ++bad;
    });
    o.pass = bad == 0;
    o.detail = std::to_string(graphs) + " labeled graphs, " + std::to_string(bad) + " disagreements";
    return o;
}

Outcome edge_orders() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    std::uint64_t runs = 0;
    std::uint64_t bad = 0;
    all_graphs_up_to(5, [&](const SimpleGraph& g) {
        for (FamilyKind kind : kAllKinds) {
            const IntPoly reference = family_poly(g, kind, {false, false});
            for (int t = 0; t < 20; ++t) {
                ++runs;
                if (family_poly_random_order(g, kind, rng) != reference) ++bad;
            }
        }
    });
    o.pass = bad == 0;
    o.detail = std::to_string(runs) + " random-order evaluations, " + std::to_string(bad) + " differ";
    return o;
}

Outcome exponential_type() {
    Outcome o;
    std::uint64_t checks = 0;
    std::uint64_t bad_identity = 0;
    std::uint64_t bad_reconstruction = 0;
    all_graphs_up_to(5, [&](const SimpleGraph& g) {
        for (FamilyKind kind : kAllKinds) {
            ++checks;
            if (!exp_type_check(g, kind)) ++bad_identity;
            if (f_b_construct(g, BFunction::from_family(kind)) != family_poly(g, kind)) ++bad_reconstruction;
        }
    });
    o.pass = bad_identity == 0 && bad_reconstruction == 0;
    o.detail = std::to_string(checks) + " (graph, kind) pairs, identity failures " + std::to_string(bad_identity) +
               ", reconstruction failures " + std::to_string(bad_reconstruction);
    return o;
}

Outcome sequences() {
    Outcome o;
    std::vector<std::string> bad;
    const auto e = zigzag_numbers(8);
    const std::vector<long> tail = {61, 272};
    if (e[6] != tail[0] || e[7] != tail[1]) bad.push_back("zigzag");
    for (int n = 1; n <= 8; ++n) {
        if (tutte_dc(complete_graph(n)).eval(1, -1) != Rational(e[static_cast<std::size_t>(n - 1)])) {
            bad.push_back("T(K_" + std::to_string(n) + ";1,-1)");
        }
    }
    for (int n = 1; n <= 6; ++n) {
        Integer lhs = family_poly(complete_graph(n), FamilyKind::CoAdjoint).eval(Integer(-1));
        if (n % 2 == 1) lhs = -lhs;
        const Integer rhs = abs(family_poly(complete_graph(n + 2), FamilyKind::CoAdjoint).coefficient(1));
        if (lhs != rhs) bad.push_back("P(K_" + std::to_string(n) + ",-1)");
    }
    const std::vector<long> bipartite = {2, 13, 176, 4081};
    for (int n = 1; n <= 4; ++n) {
        const Integer at = family_poly(complete_bipartite(n, n), FamilyKind::CoAdjoint).eval(Integer(-1));
        const Integer next = abs(family_poly(complete_bipartite(n + 1, n + 1), FamilyKind::CoAdjoint).coefficient(1));
        if (at != bipartite[static_cast<std::size_t>(n - 1)] || next != at) {
            bad.push_back("P(K_{" + std::to_string(n) + "," + std::to_string(n) + "},-1)");
        }
    }
    int edges = 0;
    for (int n = 2; n <= 6; ++n) {
        const SimpleGraph g = complete_graph(n);
        for (const Edge& edge : g.edges()) {
            ++edges;
            if (!merino_check(g, edge)) bad.push_back("merino K_" + std::to_string(n));
        }
    }
    for (int n = 1; n <= 4; ++n) {
        const SimpleGraph g = complete_bipartite(n, n);
        for (const Edge& edge : g.edges()) {
            ++edges;
            if (!merino_check(g, edge)) bad.push_back("merino K_{" + std::to_string(n) + "," + std::to_string(n) + "}");
        }
    }
    o.pass = bad.empty();
    std::ostringstream s;
    s << "zigzag, (-1)^n P(K_n,-1), P(K_{n,n},-1), merino on " << edges << " edges";
    for (const auto& b : bad) s << "; failed " << b;
    o.detail = s.str();
    return o;
}

Outcome egf() {
    Outcome o;
    const int order = 12;
    const RatSeries f = build_F(order);
    const RatSeries z = RatSeries::variable(order);
    const RatSeries integrand = (RatSeries::constant(order, 1) + sin(z)) / cos(z);
    const bool integral_form = f == integrate(integrand.truncated(order - 1));
    const auto p = egf_reconstruct(8);
    int bad = 0;
    for (int n = 0; n <= 8; ++n) {
        if (p[static_cast<std::size_t>(n)] != reflect_negate(family_poly(complete_graph(n), FamilyKind::CoAdjoint))) ++bad;
    }
    o.pass = integral_form && bad == 0;
    o.detail = std::string("F integral form to order 12 ") + (integral_form ? "ok" : "FAILED") + ", p_0..p_8 mismatches " +
               std::to_string(bad);
    return o;
}

Outcome eulerian() {
    Outcome o;
    std::uint64_t graphs = 0;
    std::uint64_t even = 0;
    std::uint64_t bad = 0;
    all_graphs_up_to(6, [&](const SimpleGraph& g) {
        ++graphs;
        const Integer value = abs(family_poly(g, FamilyKind::CoAdjoint).eval(Integer(1)));
        const bool is_even = g.all_degrees_even();
        even += is_even ? 1 : 0;
        if (value != (is_even ? 1 : 0)) ++bad;
    });
    o.pass = bad == 0;
    o.detail = std::to_string(graphs) + " graphs, " + std::to_string(even) + " even-degree, " + std::to_string(bad) + " violations";
    return o;
}

Outcome alternating_signs() {
    Outcome o;
    std::uint64_t coeffs = 0;
    std::uint64_t bad = 0;
    all_graphs_up_to(6, [&](const SimpleGraph& g) {
        const IntPoly p = family_poly(g, FamilyKind::CoAdjoint);
        const int n = g.order();
        for (int k = 0; k <= n; ++k) {
            ++coeffs;
            const Integer t = p.coefficient(k);
            if ((n - k) % 2 == 0 ? t < 0 : t > 0) ++bad;
        }
    });
    o.pass = bad == 0;
    o.detail = std::to_string(coeffs) + " coefficients, " + std::to_string(bad) + " wrong signs";
    return o;
}

Outcome numerics() {
    Outcome o;
    const SokalMinimum k = sokal_constant(1e-6);
    const bool constant_ok = std::abs(k.value - 7.963907) <= 1e-5;
    std::uint64_t graphs = 0;
    std::uint64_t bound_failures = 0;
    all_graphs_up_to(6, [&](const SimpleGraph& g) {
        if (g.edge_count() == 0) return;
        ++graphs;
        if (!sokal_bound_check(g)) ++bound_failures;
    });
    if (!sokal_bound_check(complete_graph(8))) ++bound_failures;
    if (!sokal_bound_check(complete_bipartite(5, 5))) ++bound_failures;
    double worst = 0.0;
    for (const auto* table : {&kCompleteTable, &kBipartiteTable}) {
        for (const std::string& text : *table) worst = std::max(worst, poly_roots(parse_poly(text)).max_residual());
    }
    o.pass = constant_ok && bound_failures == 0 && worst < 1e-8;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "K=%.9f (|K-7.963907|=%.1e), bound on %llu graphs + K_8 + K_{5,5}: %llu failures, max residual %.1e",
                  k.value, std::abs(k.value - 7.963907), static_cast<unsigned long long>(graphs),
                  static_cast<unsigned long long>(bound_failures), worst);
    o.detail = buf;
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // <= 0: no limit
    Outcome (*run)();
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "complete-graph table", 1.0, complete_table},
        {2, "complete bipartite table", 10.0, bipartite_table},
        {3, "three-way equivalence, n <= 6", 300.0, three_way},
        {4, "edge-order independence, n <= 5", 0.0, edge_orders},
        {5, "exponential type and b-reconstruction, n <= 5", 0.0, exponential_type},
        {6, "zigzag, evaluation and Merino sequences", 0.0, sequences},
        {7, "EGF identity", 0.0, egf},
        {8, "Eulerian consequence, n <= 6", 0.0, eulerian},
        {9, "alternating signs, n <= 6", 0.0, alternating_signs},
        {10, "Sokal constant, root bound and residuals", 0.0, numerics},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        clear_family_memo();
        clear_tutte_memo();
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        bool within = true;
        if (c.limit_seconds > 0 && seconds >= c.limit_seconds) within = false;
        const bool pass = o.pass && within;
        failures += pass ? 0 : 1;
        std::printf("criterion %2d %s: %s [%s] (%.3f s", c.id, pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), seconds);
        if (c.limit_seconds > 0) std::printf(", limit %.0f s%s", c.limit_seconds, within ? "" : " EXCEEDED");
        std::printf(")\n");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
