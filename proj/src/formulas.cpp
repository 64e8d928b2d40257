#include "domipoly/formulas.hpp"

#include <stdexcept>

namespace domipoly {

namespace {

void check_order_consistency(const Polynomial& d, std::size_t order, const char* which) {
    if (!d.is_zero() && d.degree() > order)
        throw std::invalid_argument(std::string(which) +
                                    ": polynomial degree exceeds the stated order");
}

Polynomial x_times(const Polynomial& p) { return Polynomial::monomial(1) * p; }

}  // namespace

Polynomial d_complete(std::size_t n) {
    if (n < 1) throw std::invalid_argument("d_complete requires n >= 1");
    return Polynomial::binomial_power(n) - Polynomial::one();
}

Polynomial d_join(const Polynomial& dg, const Polynomial& dh, std::size_t n1,
                  std::size_t n2) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("d_join requires orders >= 1");
    check_order_consistency(dg, n1, "d_join");
    check_order_consistency(dh, n2, "d_join");
    Polynomial a = Polynomial::binomial_power(n1) - Polynomial::one();
    Polynomial b = Polynomial::binomial_power(n2) - Polynomial::one();
    return a * b + dg + dh;
}

Polynomial d_corona(const Polynomial& dh, std::size_t m, std::size_t n) {
    if (m < 1 || n < 1) throw std::invalid_argument("d_corona requires m >= 1 and n >= 1");
    check_order_consistency(dh, m, "d_corona");
    Polynomial factor = x_times(Polynomial::binomial_power(m)) + dh;
    return factor.pow(n);
}

Polynomial d_clique_cover_product(const std::vector<std::size_t>& clique_sizes,
                                  const Polynomial& dh, std::size_t h) {
    if (h < 1) throw std::invalid_argument("d_clique_cover_product requires |V(H)| >= 1");
    check_order_consistency(dh, h, "d_clique_cover_product");
    const Polynomial hn = Polynomial::binomial_power(h);
    Polynomial out = Polynomial::one();
    for (std::size_t size : clique_sizes) {
        if (size < 1)
            throw std::invalid_argument("clique size profile entries must be >= 1");
        out = out * ((Polynomial::binomial_power(size) - Polynomial::one()) * hn + dh);
    }
    return out;
}

Polynomial d_kstar(std::size_t k, std::size_t n) {
    if (k < 1 || n <= k) throw std::invalid_argument("d_kstar requires n > k >= 1");
    return Polynomial::binomial_power(n - k) *
               (Polynomial::binomial_power(k) - Polynomial::one()) +
           Polynomial::monomial(n - k);
}

Polynomial d_friendship(std::size_t n) {
    if (n < 1) throw std::invalid_argument("d_friendship requires n >= 1");
    Polynomial blade = Polynomial::monomial(1, 2) + Polynomial::monomial(2);  // 2x + x^2
    return blade.pow(n) + x_times(Polynomial::binomial_power(2 * n));
}

namespace {

// x^4 + 4x^3 + 6x^2 + 2x, the block polynomial D(K_1 + P_3)
Polynomial h_block() {
    return Polynomial({BigInt(0), BigInt(2), BigInt(6), BigInt(4), BigInt(1)});
}

}  // namespace

Polynomial d_h_even(std::size_t n) {
    if (n < 1) throw std::invalid_argument("d_h_even requires n >= 1");
    return h_block().pow(n);
}

Polynomial d_h_odd(std::size_t n) {
    // n == 0 is H_1, the star on three vertices, with D = x^3 + 3x^2 + x
    Polynomial p3({BigInt(0), BigInt(1), BigInt(3), BigInt(1)});
    return p3 * h_block().pow(n);
}

}  // namespace domipoly
