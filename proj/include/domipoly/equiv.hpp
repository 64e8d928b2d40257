#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "domipoly/domsets.hpp"
#include "domipoly/graph.hpp"
#include "domipoly/poly.hpp"

namespace domipoly {

inline constexpr std::size_t kDefaultCanonicalLimit = 10;
inline constexpr std::size_t kDefaultEnumerationLimit = 8;

struct EquivOptions {
    std::size_t enumeration_limit = kDefaultEnumerationLimit;
    std::size_t canonical_limit = kDefaultCanonicalLimit;
    DomsetOptions domsets;  // brute-force cap and jobs for polynomial sweeps
};

// Isomorphism-class key: the lexicographically minimal upper-triangle
// adjacency bitstring (graph6 column order) over all vertex permutations
// that list vertices by ascending degree, prefixed by the order. Equal keys
// iff isomorphic.
struct CanonicalForm {
    std::vector<std::uint8_t> key;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Graph& g, std::size_t limit = kDefaultCanonicalLimit);

// rebuilds the representative graph a key encodes
Graph graph_from_canonical(const CanonicalForm& form);

// relabels g by perm: vertex perm[i] of g becomes vertex i
Graph permute(const Graph& g, const std::vector<int>& perm);

// Exactly one representative per isomorphism class of order n, sorted by
// canonical key. Built by extending the order n-1 classes one vertex at a
// time and deduplicating by key.
std::vector<Graph> enumerate_graphs(std::size_t n,
                                    std::size_t limit = kDefaultEnumerationLimit);

// equality of brute-force domination polynomials
bool d_equivalent(const Graph& a, const Graph& b, const DomsetOptions& opts = {});

struct EquivalenceReport {
    Polynomial polynomial;
    std::size_t order = 0;
    struct Member {
        CanonicalForm form;
        Graph representative;
    };
    std::vector<Member> members;  // pairwise non-isomorphic, sorted by key
};

// all order-n isomorphism classes whose domination polynomial equals target
EquivalenceReport equivalence_class(const Polynomial& target, std::size_t order,
                                    const EquivOptions& opts = {});

// {"polynomial": ..., "order": ..., "count": ..., "members": [graph6...]}
std::string to_json(const EquivalenceReport& report);

struct FriendshipClassCheck {
    bool matches = false;       // class of D(F_n) equals {(G o K1) + K1 : |G| = n}
    EquivalenceReport report;   // the computed class
};

// Checks the friendship-class description exhaustively over all graphs of
// order 2n+1.
FriendshipClassCheck verify_friendship_class(std::size_t n, const EquivOptions& opts = {});

// Checks, over all graphs of order 2n, that D(G) = x^n (x+2)^n holds exactly
// for the graphs of the form H o K1 with |H| = n.
bool verify_corona_k1(std::size_t n, const EquivOptions& opts = {});

// Checks that deleting any subset of the connector edges of H_2n preserves
// the polynomial, and (for n <= 3) that adding any single edge between two
// degree-4 vertices or a degree-3 and a degree-4 vertex preserves it too.
bool verify_h_variants(std::size_t n, const DomsetOptions& opts = {});

struct GeneralUProbe {
    Polynomial product_polynomial;  // brute force on G^C * H^U
    Polynomial factor_polynomial;   // product of the brute-forced H* factors
    bool equal = false;
};

// Empirical probe of the clique-cover-product factorization for arbitrary
// U: computes both sides by brute force and reports whether they agree.
// Nothing is asserted for proper subsets U.
GeneralUProbe probe_general_u(const Graph& g, const CliqueCover& cover, const Graph& h,
                              const std::vector<int>& u, const DomsetOptions& opts = {});

}  // namespace domipoly
