#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "domipoly/domsets.hpp"
#include "domipoly/equiv.hpp"
#include "domipoly/formulas.hpp"
#include "oracles.hpp"

using namespace domipoly;
using oracles::poly_from;

TEST_CASE("d_complete") {
    CHECK(d_complete(1) == poly_from({0, 1}));
    CHECK(d_complete(3) == poly_from({0, 3, 3, 1}));
    CHECK(d_complete(5) == brute_force_polynomial(complete(5)));
    CHECK_THROWS_AS(d_complete(0), std::invalid_argument);
}

TEST_CASE("d_join instances") {
    Polynomial dk1 = poly_from({0, 1});
    Polynomial dp3 = poly_from({0, 1, 3, 1});
    CHECK(d_join(dk1, dp3, 1, 3) == poly_from({0, 2, 6, 4, 1}));

    // D(F_n) = D(K_1 + nK_2) via the join formula
    for (std::size_t n = 1; n <= 4; ++n) {
        Polynomial dnk2 = poly_from({0, 2, 1}).pow(n);
        CHECK(d_join(dk1, dnk2, 1, 2 * n) == d_friendship(n));
    }

    CHECK_THROWS_AS(d_join(dp3, dk1, 1, 1), std::invalid_argument);  // degree 3 > order 1
    CHECK_THROWS_AS(d_join(dk1, dk1, 1, 0), std::invalid_argument);
}

TEST_CASE("d_join sweep at small order") {
    for (std::size_t a = 1; a <= 3; ++a)
        for (std::size_t b = 1; b <= 3; ++b)
            for (const Graph& g : enumerate_graphs(a))
                for (const Graph& h : enumerate_graphs(b))
                    CHECK(d_join(brute_force_polynomial(g), brute_force_polynomial(h), a, b) ==
                          brute_force_polynomial(join(g, h)));
}

TEST_CASE("join cancellation") {
    // for fixed H the join map is injective on same-order polynomials
    Polynomial dh = brute_force_polynomial(path(3));
    for (std::size_t n1 = 1; n1 <= 4; ++n1) {
        auto graphs = enumerate_graphs(n1);
        for (const Graph& g1 : graphs)
            for (const Graph& g2 : graphs) {
                Polynomial a = brute_force_polynomial(g1);
                Polynomial b = brute_force_polynomial(g2);
                CHECK((d_join(a, dh, n1, 3) == d_join(b, dh, n1, 3)) == (a == b));
            }
    }
}

TEST_CASE("d_corona instances") {
    // H = K_1: (x(1+x) + x)^n = x^n (x+2)^n
    for (std::size_t n = 1; n <= 4; ++n)
        CHECK(d_corona(poly_from({0, 1}), 1, n) ==
              (Polynomial::monomial(2) + Polynomial::monomial(1, 2)).pow(n));
    // H = P_3 gives the H_2n block polynomial
    for (std::size_t n = 1; n <= 3; ++n)
        CHECK(d_corona(poly_from({0, 1, 3, 1}), 3, n) == d_h_even(n));
    // K_1 o K_2 = K_3
    CHECK(d_corona(poly_from({0, 2, 1}), 2, 1) == brute_force_polynomial(complete(3)));
    CHECK_THROWS_AS(d_corona(poly_from({0, 1}), 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(d_corona(poly_from({0, 1}), 1, 0), std::invalid_argument);
}

TEST_CASE("d_corona sweep at small order") {
    for (std::size_t a = 1; a <= 2; ++a)
        for (std::size_t b = 1; b <= 2; ++b)
            for (const Graph& g : enumerate_graphs(a))
                for (const Graph& h : enumerate_graphs(b))
                    CHECK(d_corona(brute_force_polynomial(h), b, a) ==
                          brute_force_polynomial(corona(g, h)));
}

TEST_CASE("d_clique_cover_product") {
    // profile (1), H = nK_2 gives the friendship polynomial
    for (std::size_t n = 1; n <= 3; ++n) {
        Polynomial dnk2 = poly_from({0, 2, 1}).pow(n);
        CHECK(d_clique_cover_product({1}, dnk2, 2 * n) == d_friendship(n));
    }
    // profile (2,...,2), H = 2K_1 gives D(H_2k)
    for (std::size_t k = 1; k <= 3; ++k) {
        std::vector<std::size_t> profile(k, 2);
        CHECK(d_clique_cover_product(profile, Polynomial::monomial(2), 2) == d_h_even(k));
    }
    // profile (k), H empty of order n-k gives the k-star polynomial
    for (std::size_t n = 2; n <= 6; ++n)
        for (std::size_t k = 1; k < n; ++k)
            CHECK(d_clique_cover_product({k}, Polynomial::monomial(n - k), n - k) ==
                  d_kstar(k, n));
    // empty profile is the empty product
    CHECK(d_clique_cover_product({}, Polynomial::monomial(2), 2) == Polynomial::one());
    // factor equivalence with the join formula
    Polynomial dh = brute_force_polynomial(path(3));
    std::vector<std::size_t> profile{2, 1, 3};
    Polynomial via_joins = Polynomial::one();
    for (std::size_t size : profile)
        via_joins = via_joins * d_join(d_complete(size), dh, size, 3);
    CHECK(d_clique_cover_product(profile, dh, 3) == via_joins);

    CHECK_THROWS_AS(d_clique_cover_product({0}, dh, 3), std::invalid_argument);
    CHECK_THROWS_AS(d_clique_cover_product({1}, dh, 0), std::invalid_argument);
}

TEST_CASE("d_kstar") {
    CHECK(d_kstar(1, 4) == poly_from({0, 1, 3, 4, 1}));
    CHECK(d_kstar(1, 4) == brute_force_polynomial(k_star(1, 4)));
    for (std::size_t n = 2; n <= 7; ++n)
        for (std::size_t k = 1; k < n; ++k)
            CHECK(d_kstar(k, n) == brute_force_polynomial(k_star(k, n)));
    CHECK_THROWS_AS(d_kstar(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(d_kstar(3, 3), std::invalid_argument);
}

TEST_CASE("d_friendship") {
    CHECK(d_friendship(1) == poly_from({0, 3, 3, 1}));
    CHECK(d_friendship(1) == brute_force_polynomial(complete(3)));
    CHECK(d_friendship(2) == poly_from({0, 1, 8, 10, 5, 1}));
    CHECK(d_friendship(3) == brute_force_polynomial(friendship(3)));
    CHECK_THROWS_AS(d_friendship(0), std::invalid_argument);
}

TEST_CASE("d_h_even and d_h_odd") {
    CHECK(d_h_even(1) == poly_from({0, 2, 6, 4, 1}));
    CHECK(d_h_even(1) == brute_force_polynomial(h_graph(2)));
    CHECK(d_h_even(2) == brute_force_polynomial(h_graph(4)));
    CHECK(d_h_odd(0) == poly_from({0, 1, 3, 1}));
    CHECK(d_h_odd(0) == brute_force_polynomial(h_graph(1)));
    CHECK(d_h_odd(1) == poly_from({0, 0, 2, 12, 24, 19, 7, 1}));
    CHECK(d_h_odd(1) == brute_force_polynomial(h_graph(3)));
    CHECK_THROWS_AS(d_h_even(0), std::invalid_argument);
}
