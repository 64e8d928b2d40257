#pragma once

#include <cstddef>
#include <vector>

#include "domipoly/poly.hpp"

namespace domipoly {

// Closed-form domination polynomials. Every evaluator here matches
// brute_force_polynomial on the corresponding constructed graph; the tests
// sweep those equalities.

// D(K_n) = (1+x)^n - 1, n >= 1
Polynomial d_complete(std::size_t n);

// D(G1 + G2) = ((1+x)^n1 - 1)((1+x)^n2 - 1) + D(G1) + D(G2) for the join of
// graphs of orders n1, n2 >= 1. Rejects inputs whose degree exceeds the
// stated order (the formula would silently produce garbage).
Polynomial d_join(const Polynomial& dg, const Polynomial& dh, std::size_t n1,
                  std::size_t n2);

// D(G o H) = (x(1+x)^m + D(H))^n for |H| = m >= 1, |G| = n >= 1
Polynomial d_corona(const Polynomial& dh, std::size_t m, std::size_t n);

// D(G^C * H) = prod_i [((1+x)^{n_i} - 1)(1+x)^h + D(H)] over the cover's
// clique sizes; U = V(H) case only. The empty profile yields 1 (G null).
Polynomial d_clique_cover_product(const std::vector<std::size_t>& clique_sizes,
                                  const Polynomial& dh, std::size_t h);

// D(S_{k,n-k}) = (1+x)^{n-k}((1+x)^k - 1) + x^{n-k}, n > k >= 1
Polynomial d_kstar(std::size_t k, std::size_t n);

// D(F_n) = (2x + x^2)^n + x(1+x)^{2n}, n >= 1
Polynomial d_friendship(std::size_t n);

// D(H_{2n}) = (x^4 + 4x^3 + 6x^2 + 2x)^n, n >= 1
Polynomial d_h_even(std::size_t n);

// D(H_{2n+1}) = (x^3 + 3x^2 + x)(x^4 + 4x^3 + 6x^2 + 2x)^n, n >= 0
Polynomial d_h_odd(std::size_t n);

}  // namespace domipoly
