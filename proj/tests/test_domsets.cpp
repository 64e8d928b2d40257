#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "domipoly/domsets.hpp"
#include "domipoly/equiv.hpp"
#include "domipoly/errors.hpp"
#include "oracles.hpp"

using namespace domipoly;
using oracles::poly_from;

TEST_CASE("is_dominating") {
    CHECK(is_dominating(complete(3), std::vector<int>{0}));
    CHECK(!is_dominating(path(4), std::vector<int>{0, 1}));  // vertex 3 uncovered
    CHECK(is_dominating(path(4), std::vector<int>{0, 1, 2, 3}));
    CHECK(is_dominating(Graph(), std::vector<int>{}));  // null graph, empty set
    CHECK(!is_dominating(path(2), std::vector<int>{}));
    CHECK_THROWS_AS(is_dominating(path(2), std::vector<int>{5}), std::invalid_argument);
}

TEST_CASE("brute force polynomial on known graphs") {
    CHECK(brute_force_polynomial(complete(3)) == poly_from({0, 3, 3, 1}));
    CHECK(brute_force_polynomial(path(3)) == poly_from({0, 1, 3, 1}));
    CHECK(brute_force_polynomial(path(4)) == poly_from({0, 0, 4, 4, 1}));
    CHECK(brute_force_polynomial(path(5)) == poly_from({0, 0, 3, 8, 5, 1}));
    CHECK(brute_force_polynomial(path(6)) == poly_from({0, 0, 1, 10, 13, 6, 1}));
    CHECK(brute_force_polynomial(cycle(4)) == poly_from({0, 0, 6, 4, 1}));
    CHECK(brute_force_polynomial(cycle(5)) == poly_from({0, 0, 5, 10, 5, 1}));
    CHECK(brute_force_polynomial(h_graph(2)) == poly_from({0, 2, 6, 4, 1}));
    CHECK(brute_force_polynomial(k_star(1, 4)) == poly_from({0, 1, 3, 4, 1}));
    CHECK(brute_force_polynomial(Graph()) == Polynomial::one());
    CHECK(brute_force_polynomial(empty_graph(3)) == Polynomial::monomial(3));
}

TEST_CASE("brute force matches the definitional oracle") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n))
            CHECK(brute_force_polynomial(g) == oracles::slow_domination_polynomial(g));
    std::mt19937 rng(555);
    for (int i = 0; i < 20; ++i) {
        Graph g = oracles::random_graph(rng, 6 + i % 3);
        CHECK(brute_force_polynomial(g) == oracles::slow_domination_polynomial(g));
    }
}

TEST_CASE("domination polynomial shape invariants") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            Polynomial d = brute_force_polynomial(g);
            CHECK(d.coeffs().size() == n + 1);
            CHECK(d.coeff(0).is_zero());
            CHECK(d.coeff(n) == BigInt(1));
            for (const BigInt& c : d.coeffs()) CHECK(c.sign() >= 0);
            CHECK(d.lowest_nonzero_degree() == domination_number(g));
        }
}

TEST_CASE("upward closure of dominating-set counts") {
    // (i+1) d(i+1) >= (n-i) d(i): every dominating i-set extends
    for (std::size_t n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            Polynomial d = brute_force_polynomial(g);
            for (std::size_t i = 0; i < n; ++i) {
                BigInt lhs = BigInt(static_cast<long long>(i + 1)) * d.coeff(i + 1);
                BigInt rhs = BigInt(static_cast<long long>(n - i)) * d.coeff(i);
                CHECK(lhs >= rhs);
            }
        }
}

TEST_CASE("union rule") {
    for (std::size_t a = 1; a <= 4; ++a)
        for (std::size_t b = 1; b <= 4; ++b)
            for (const Graph& g : enumerate_graphs(a))
                for (const Graph& h : enumerate_graphs(b))
                    CHECK(brute_force_polynomial(disjoint_union(g, h)) ==
                          brute_force_polynomial(g) * brute_force_polynomial(h));
    std::mt19937 rng(77);
    for (int i = 0; i < 25; ++i) {
        Graph g = oracles::random_graph(rng, 3 + i % 4);
        Graph h = oracles::random_graph(rng, 3 + (i / 4) % 4);
        CHECK(brute_force_polynomial(disjoint_union(g, h)) ==
              brute_force_polynomial(g) * brute_force_polynomial(h));
    }
}

TEST_CASE("parallel sweep is identical to sequential") {
    std::mt19937 rng(31);
    for (int i = 0; i < 10; ++i) {
        Graph g = oracles::random_graph(rng, 9 + i % 4);
        DomsetOptions parallel;
        parallel.jobs = 4;
        CHECK(brute_force_polynomial(g, parallel) == brute_force_polynomial(g));
    }
}

TEST_CASE("order limits refuse loudly") {
    CHECK_THROWS_AS(brute_force_polynomial(path(25)), limit_error);
    DomsetOptions tight;
    tight.order_limit = 10;
    CHECK_THROWS_AS(brute_force_polynomial(path(11), tight), limit_error);
    CHECK_THROWS_AS(domination_number(path(25)), limit_error);
    DomsetOptions loose;
    loose.order_limit = 12;
    CHECK(brute_force_polynomial(path(11), loose).coeff(11) == BigInt(1));
}

TEST_CASE("domination number") {
    for (std::size_t n = 1; n <= 4; ++n) CHECK(domination_number(friendship(n)) == 1);
    for (std::size_t n = 1; n <= 5; ++n) CHECK(domination_number(complete(n)) == 1);
    CHECK(domination_number(path(4)) == 2);
    CHECK(domination_number(cycle(5)) == 2);
    CHECK(domination_number(Graph()) == 0);
    CHECK(domination_number(empty_graph(4)) == 4);
}

TEST_CASE("domination-covered criterion") {
    for (int v = 0; v < 3; ++v) CHECK(is_domination_covered(complete(3), v));
    CHECK(is_domination_covered(path(3), 1));
    for (int v = 0; v < 4; ++v) CHECK(!is_domination_covered(cycle(4), v));
    CHECK(!is_domination_covered(empty_graph(2), 0));  // isolated vertex
    CHECK(!is_domination_covered(complete(1), 0));
    CHECK_THROWS_AS(is_domination_covered(path(3), 9), std::invalid_argument);
}

TEST_CASE("criterion agrees with the quantifier definition") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n))
            for (int v = 0; v < static_cast<int>(n); ++v)
                CHECK(is_domination_covered(g, v) ==
                      is_domination_covered_by_definition(g, v));
    std::mt19937 rng(808);
    for (int i = 0; i < 15; ++i) {
        Graph g = oracles::random_graph(rng, 7 + i % 2);
        for (int v = 0; v < static_cast<int>(g.order()); ++v)
            CHECK(is_domination_covered(g, v) ==
                  is_domination_covered_by_definition(g, v));
    }
}

TEST_CASE("irrelevant edges") {
    CHECK(irrelevant_edges(h_graph(4)) == std::vector<Edge>{{1, 2}});
    CHECK(irrelevant_edges(cycle(4)).empty());
    CHECK(irrelevant_edges(complete(2)).empty());
    CHECK(irrelevant_edges(empty_graph(5)).empty());
}

TEST_CASE("irrelevant edge iff polynomial is preserved") {
    for (std::size_t n = 2; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            auto reported = irrelevant_edges(g);
            Polynomial d = brute_force_polynomial(g);
            for (auto e : g.edges()) {
                bool preserved =
                    brute_force_polynomial(delete_edge(g, e.first, e.second)) == d;
                bool in_report =
                    std::find(reported.begin(), reported.end(), e) != reported.end();
                CHECK(in_report == preserved);
            }
        }
}

TEST_CASE("reduction traces") {
    ReductionTrace none = reduce_irrelevant(empty_graph(6));
    CHECK(none.deleted.empty());
    CHECK(none.final == empty_graph(6));

    ReductionTrace h4 = reduce_irrelevant(h_graph(4));
    CHECK(h4.deleted == std::vector<Edge>{{1, 2}});
    CHECK(canonical_form(h4.final) ==
          canonical_form(disjoint_union(h_graph(2), h_graph(2))));
    CHECK(brute_force_polynomial(h4.final) == brute_force_polynomial(h_graph(4)));

    ReductionTrace h5 = reduce_irrelevant(h_graph(5));
    CHECK(h5.deleted == std::vector<Edge>{{0, 1}, {2, 3}});
    Graph expected = disjoint_union(k_star(1, 3),
                                    disjoint_union(h_graph(2), h_graph(2)));
    CHECK(canonical_form(h5.final, 12) == canonical_form(expected, 12));
    CHECK(brute_force_polynomial(h5.final) == brute_force_polynomial(h_graph(5)));

    // replaying the deletions yields the final graph
    Graph replay = h_graph(5);
    for (auto [u, v] : h5.deleted) replay = delete_edge(replay, u, v);
    CHECK(replay == h5.final);
}
