#include <doctest.h>

#include <random>
#include <thread>

#include "copoly/error.hpp"
#include "copoly/family.hpp"
#include "copoly/oracles.hpp"
#include "test_support.hpp"

using namespace copoly;

TEST_CASE("family_poly examples") {
    CHECK(family_poly(complete_graph(4), FamilyKind::CoAdjoint) == parse_poly("x^4-6x^3+7x^2-2x"));
    CHECK(family_poly(complete_bipartite(3, 3), FamilyKind::CoAdjoint) ==
          parse_poly("x^6-9x^5+36x^4-66x^3+51x^2-13x"));
    for (FamilyKind kind : kAllKinds) {
        CHECK(family_poly(empty_graph(5), kind) == IntPoly::monomial(5));
        CHECK(family_poly(empty_graph(0), kind) == IntPoly{1});
    }
    CHECK(family_poly(complete_graph(3), FamilyKind::Chromatic) == parse_poly("x^3-3x^2+2x"));
}

TEST_CASE("matching and adjoint examples against their counting oracles") {
    // m_0 = 1, m_1 = 3 on K_3; M = x^3 - 3x^2
    const auto m = count_matchings(complete_graph(3));
    REQUIRE(m == std::vector<std::uint64_t>{1, 3});
    CHECK(family_poly(complete_graph(3), FamilyKind::Matching) == parse_poly("x^3-3x^2"));

    // a_1 = 1, a_2 = 3, a_3 = 1 on K_3; h = x^3 - 3x^2 + x
    const auto a = count_clique_partitions(complete_graph(3));
    REQUIRE(a == std::vector<std::uint64_t>{0, 1, 3, 1});
    CHECK(family_poly(complete_graph(3), FamilyKind::Adjoint) == parse_poly("x^3-3x^2+x"));
}

TEST_CASE("memoized, split and plain recursion agree") {
    const RecursionOptions plain{false, false};
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        const SimpleGraph g = testing::random_graph(1 + static_cast<int>(rng() % 7), 0.45, rng);
        for (FamilyKind kind : kAllKinds) {
            CHECK(family_poly(g, kind) == family_poly(g, kind, plain));
        }
    }
}

TEST_CASE("multiplicativity over disjoint unions") {
    const RecursionOptions plain{false, false};
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        const SimpleGraph g = testing::random_graph(1 + static_cast<int>(rng() % 4), 0.6, rng);
        const SimpleGraph h = testing::random_graph(1 + static_cast<int>(rng() % 4), 0.6, rng);
        for (FamilyKind kind : kAllKinds) {
            CHECK(family_poly(testing::disjoint_union(g, h), kind, plain) ==
                  family_poly(g, kind, plain) * family_poly(h, kind, plain));
        }
    }
}

TEST_CASE("edge order independence on small graphs") {
    std::mt19937_64 rng(41);
    for (int n = 0; n <= 4; ++n) {
        enumerate_labeled_graphs(n, [&](const SimpleGraph& g) {
            for (FamilyKind kind : kAllKinds) {
                const IntPoly expected = family_poly(g, kind);
                for (int t = 0; t < 20; ++t) REQUIRE(family_poly_random_order(g, kind, rng) == expected);
            }
        });
    }
}

TEST_CASE("structure of the family polynomials") {
    for (int n = 1; n <= 5; ++n) {
        enumerate_labeled_graphs(n, [&](const SimpleGraph& g) {
            for (FamilyKind kind : kAllKinds) {
                const IntPoly p = family_poly(g, kind);
                REQUIRE(p.degree() == n);
                REQUIRE(p.coefficient(n) == 1);
                if (kind != FamilyKind::Matching) REQUIRE(p.coefficient(0) == 0);
            }
            const IntPoly p = family_poly(g, FamilyKind::CoAdjoint);
            for (int k = 0; k <= n; ++k) {
                const Integer signed_coeff = (n - k) % 2 == 0 ? p.coefficient(k) : Integer(-p.coefficient(k));
                REQUIRE(signed_coeff >= 0);
            }
        });
    }
}

TEST_CASE("b_of examples") {
    CHECK(b_of(FamilyKind::Matching, complete_graph(2)) == -1);
    CHECK(b_of(FamilyKind::Matching, complete_graph(1)) == 1);
    CHECK(b_of(FamilyKind::Adjoint, complete_graph(4)) == -1);
    CHECK(b_of(FamilyKind::CoAdjoint, complete_graph(4)) == -2);
    CHECK_THROWS_AS(b_of(FamilyKind::Chromatic, empty_graph(2)), DomainError);
    CHECK_THROWS_AS(b_of(FamilyKind::Chromatic, empty_graph(0)), DomainError);
}

TEST_CASE("co-adjoint b-values on complete graphs follow the zigzag numbers") {
    const auto e = zigzag_numbers(9);
    for (int n = 1; n <= 10; ++n) {
        const Integer b = b_of(FamilyKind::CoAdjoint, complete_graph(n));
        const Integer expected = n % 2 == 1 ? e[static_cast<std::size_t>(n - 1)] : Integer(-e[static_cast<std::size_t>(n - 1)]);
        CHECK(b == expected);
    }
}

TEST_CASE("b vanishes on disconnected graphs") {
    for (int n = 2; n <= 5; ++n) {
        enumerate_labeled_graphs(n, [&](const SimpleGraph& g) {
            if (g.is_connected()) return;
            for (FamilyKind kind : kAllKinds) REQUIRE(family_poly(g, kind).coefficient(1) == 0);
        });
    }
}

TEST_CASE("f_b_construct examples") {
    CHECK(f_b_construct(complete_graph(2), BFunction::matching()) == parse_poly("x^2-x"));
    CHECK(f_b_construct(complete_graph(3), BFunction::adjoint()) == parse_poly("x^3-3x^2+x"));

    BFunction singletons;
    singletons.set(complete_graph(1), 1);
    CHECK(f_b_construct(empty_graph(2), singletons) == parse_poly("x^2"));
    CHECK(f_b_construct(empty_graph(0), singletons) == IntPoly{1});
    CHECK_THROWS_AS(f_b_construct(empty_graph(11), singletons), CapacityError);
}

TEST_CASE("closed-form b-functions reproduce matching and adjoint polynomials") {
    for (int n = 0; n <= 5; ++n) {
        enumerate_labeled_graphs(n, [&](const SimpleGraph& g) {
            REQUIRE(f_b_construct(g, BFunction::matching()) == family_poly(g, FamilyKind::Matching));
            REQUIRE(f_b_construct(g, BFunction::adjoint()) == family_poly(g, FamilyKind::Adjoint));
        });
    }
}

TEST_CASE("f_b with b = x^1 coefficient reconstructs f") {
    for (int n = 0; n <= 4; ++n) {
        enumerate_labeled_graphs(n, [&](const SimpleGraph& g) {
            for (FamilyKind kind : kAllKinds) {
                REQUIRE(f_b_construct(g, BFunction::from_family(kind)) == family_poly(g, kind));
            }
        });
    }
    CHECK(f_b_construct(complete_bipartite(4, 4), BFunction::from_family(FamilyKind::CoAdjoint)) ==
          family_poly(complete_bipartite(4, 4), FamilyKind::CoAdjoint));
}

TEST_CASE("exp_type_check examples") {
    for (FamilyKind kind : kAllKinds) CHECK(exp_type_check(complete_graph(1), kind));
    CHECK(exp_type_check(complete_graph(5), FamilyKind::CoAdjoint));
    for (int n = 0; n <= 4; ++n) {
        enumerate_labeled_graphs(n, [&](const SimpleGraph& g) {
            REQUIRE(exp_type_check(g, FamilyKind::Chromatic));
        });
    }
    CHECK_THROWS_AS(exp_type_check(empty_graph(8), FamilyKind::Chromatic), CapacityError);
}

TEST_CASE("a polynomial that is not of exponential type fails the check") {
    // x^(n + |E|) on P_3
    const SimpleGraph g = path_graph(3);
    const VertexMask all = g.all_vertices();
    BiPoly lhs;
    for (VertexMask s = 0;; s = (s - all) & all) {
        const SimpleGraph a = g.induced(s);
        const SimpleGraph b = g.induced(all & ~s);
        lhs += BiPoly::outer(IntPoly::monomial(a.order() + a.edge_count()), IntPoly::monomial(b.order() + b.edge_count()));
        if (s == all) break;
    }
    CHECK_FALSE(lhs == substitute_sum(IntPoly::monomial(g.order() + g.edge_count())));
}

TEST_CASE("binomial type of p_n on complete graphs") {
    for (int n = 0; n <= 8; ++n) {
        BiPoly lhs;
        for (int k = 0; k <= n; ++k) {
            const IntPoly pk = reflect_negate(family_poly(complete_graph(k), FamilyKind::CoAdjoint));
            const IntPoly pnk = reflect_negate(family_poly(complete_graph(n - k), FamilyKind::CoAdjoint));
            lhs += BiPoly::outer(pk * binomial(n, k), pnk);
        }
        CHECK(lhs == substitute_sum(reflect_negate(family_poly(complete_graph(n), FamilyKind::CoAdjoint))));
    }
}

TEST_CASE("concurrent evaluation matches sequential results") {
    std::vector<SimpleGraph> graphs;
    std::mt19937_64 rng(43);
    for (int i = 0; i < 64; ++i) graphs.push_back(testing::random_graph(4 + static_cast<int>(rng() % 5), 0.5, rng));
    std::vector<IntPoly> sequential;
    for (const auto& g : graphs) sequential.push_back(family_poly(g, FamilyKind::CoAdjoint, {false, true}));

    clear_family_memo();
    std::vector<IntPoly> parallel(graphs.size());
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t) {
        workers.emplace_back([&, t] {
            for (std::size_t i = static_cast<std::size_t>(t); i < graphs.size(); i += 4) {
                parallel[i] = family_poly(graphs[i], FamilyKind::CoAdjoint);
            }
        });
    }
    for (auto& w : workers) w.join();
    CHECK(parallel == sequential);
    CHECK(family_memo_stats().entries > 0);
}
