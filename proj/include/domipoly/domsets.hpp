#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "domipoly/graph.hpp"
#include "domipoly/poly.hpp"

namespace domipoly {

inline constexpr std::size_t kDefaultBruteForceLimit = 24;

struct DomsetOptions {
    std::size_t order_limit = kDefaultBruteForceLimit;
    unsigned jobs = 1;  // worker threads for the subset sweep
};

// true iff every vertex outside s has a neighbor in s; equivalently the
// union of closed neighborhoods over s covers V
bool is_dominating(const Graph& g, const VertexSet& s);
bool is_dominating(const Graph& g, const std::vector<int>& s);  // throws on out-of-range

// Exact domination polynomial by enumeration of all 2^n vertex subsets;
// coeff(i) counts the dominating sets of size i. Refuses orders above
// opts.order_limit with limit_error. With jobs > 1 the mask range is split
// into contiguous chunks and per-chunk tallies are merged in order, so the
// result is identical to the sequential sweep.
Polynomial brute_force_polynomial(const Graph& g, const DomsetOptions& opts = {});

// Smallest dominating-set size, by increasing-cardinality search. The null
// graph returns 0 (gamma is undefined there; 0 is this library's convention).
std::size_t domination_number(const Graph& g, const DomsetOptions& opts = {});

// Neighborhood criterion: some neighbor u of v satisfies N[u] subseteq N[v].
// Isolated vertices are never domination-covered.
bool is_domination_covered(const Graph& g, int v);

// The quantifier form (every dominating set of G-v contains a neighbor of
// v). Exhaustive over subsets of G-v; meant for cross-validation at small
// order only.
bool is_domination_covered_by_definition(const Graph& g, int v);

// All edges {u,v} with both endpoints domination-covered in G-e; deleting
// such an edge keeps the domination polynomial unchanged.
std::vector<Edge> irrelevant_edges(const Graph& g);

struct ReductionTrace {
    std::vector<Edge> deleted;  // in deletion order
    Graph final;
};

// Repeatedly deletes the lexicographically smallest irrelevant edge,
// recomputing the criterion after every deletion, until none remains.
ReductionTrace reduce_irrelevant(const Graph& g);

}  // namespace domipoly
