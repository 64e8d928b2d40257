#include "domipoly/domsets.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <thread>

#include "domipoly/errors.hpp"

namespace domipoly {

namespace {

// closed neighborhoods as single words; callers guarantee n <= 62
std::vector<std::uint64_t> closed_neighborhood_masks(const Graph& g) {
    std::vector<std::uint64_t> nb(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) {
        std::uint64_t mask = 1ull << v;
        g.neighbors(static_cast<int>(v)).for_each([&](int u) { mask |= 1ull << u; });
        nb[v] = mask;
    }
    return nb;
}

void check_brute_force_order(const Graph& g, const DomsetOptions& opts) {
    if (g.order() > opts.order_limit)
        throw limit_error("order " + std::to_string(g.order()) +
                          " exceeds the brute-force limit " +
                          std::to_string(opts.order_limit));
    if (g.order() > 62)
        throw limit_error("subset enumeration is capped at 62 vertices");
}

// dominating-set tallies by size over masks in [begin, end)
void sweep_masks(const std::vector<std::uint64_t>& nb, std::uint64_t full,
                 std::uint64_t begin, std::uint64_t end,
                 std::vector<std::uint64_t>& counts) {
    for (std::uint64_t mask = begin; mask < end; ++mask) {
        std::uint64_t covered = 0;
        std::uint64_t rest = mask;
        while (rest) {
            covered |= nb[static_cast<std::size_t>(std::countr_zero(rest))];
            if (covered == full) break;
            rest &= rest - 1;
        }
        if (covered == full) counts[static_cast<std::size_t>(std::popcount(mask))]++;
    }
}

// G - v: induced subgraph with v removed, higher labels shifted down
Graph delete_vertex(const Graph& g, int v) {
    Graph out(g.order() - 1);
    for (auto [a, b] : g.edges())
        if (a != v && b != v) out.link(a < v ? a : a - 1, b < v ? b : b - 1);
    return out;
}

}  // namespace

bool is_dominating(const Graph& g, const VertexSet& s) {
    VertexSet covered(g.order());
    s.for_each([&](int v) { covered |= g.closed_neighborhood(v); });
    return covered.count() == g.order();
}

bool is_dominating(const Graph& g, const std::vector<int>& s) {
    VertexSet set(g.order());
    for (int v : s) {
        g.check_vertex(v);
        set.set(v);
    }
    return is_dominating(g, set);
}

Polynomial brute_force_polynomial(const Graph& g, const DomsetOptions& opts) {
    check_brute_force_order(g, opts);
    const std::size_t n = g.order();
    const auto nb = closed_neighborhood_masks(g);
    const std::uint64_t full = n == 0 ? 0 : (1ull << n) - 1;
    const std::uint64_t total = 1ull << n;

    std::vector<std::uint64_t> counts(n + 1, 0);
    unsigned jobs = std::max(1u, opts.jobs);
    if (jobs == 1 || total < (1u << 16)) {
        sweep_masks(nb, full, 0, total, counts);
    } else {
        jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, total));
        std::vector<std::vector<std::uint64_t>> partial(jobs,
                                                        std::vector<std::uint64_t>(n + 1, 0));
        std::vector<std::thread> workers;
        const std::uint64_t chunk = total / jobs;
        for (unsigned t = 0; t < jobs; ++t) {
            std::uint64_t lo = t * chunk;
            std::uint64_t hi = t + 1 == jobs ? total : lo + chunk;
            workers.emplace_back(
                [&, lo, hi, t] { sweep_masks(nb, full, lo, hi, partial[t]); });
        }
        for (auto& w : workers) w.join();
        for (unsigned t = 0; t < jobs; ++t)
            for (std::size_t i = 0; i <= n; ++i) counts[i] += partial[t][i];
    }

    std::vector<BigInt> coeffs(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        coeffs[i] = BigInt(static_cast<long long>(counts[i]));
    return Polynomial(std::move(coeffs));
}

std::size_t domination_number(const Graph& g, const DomsetOptions& opts) {
    if (g.order() == 0) return 0;  // documented convention for the null graph
    check_brute_force_order(g, opts);
    const std::size_t n = g.order();
    const auto nb = closed_neighborhood_masks(g);
    const std::uint64_t full = (1ull << n) - 1;
    for (std::size_t k = 1; k < n; ++k) {
        // Gosper's hack over all k-subsets of an n-set
        std::uint64_t mask = (1ull << k) - 1;
        while (mask < (1ull << n)) {
            std::uint64_t covered = 0;
            std::uint64_t rest = mask;
            while (rest) {
                covered |= nb[static_cast<std::size_t>(std::countr_zero(rest))];
                rest &= rest - 1;
            }
            if (covered == full) return k;
            std::uint64_t c = mask & -mask;
            std::uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    return n;  // V(G) always dominates
}

bool is_domination_covered(const Graph& g, int v) {
    const VertexSet closed_v = g.closed_neighborhood(v);
    bool found = false;
    g.neighbors(v).for_each([&](int u) {
        if (!found && g.closed_neighborhood(u).is_subset_of(closed_v)) found = true;
    });
    return found;
}

bool is_domination_covered_by_definition(const Graph& g, int v) {
    g.check_vertex(v);
    const std::size_t n = g.order();
    if (n > 24)
        throw limit_error("definitional domination-covered check capped at 24 vertices");
    const Graph without = delete_vertex(g, v);
    // neighbors of v in G, relabeled into G - v
    VertexSet nv(without.order());
    g.neighbors(v).for_each([&](int u) { nv.set(u < v ? u : u - 1); });

    const std::size_t m = without.order();
    const auto nb = closed_neighborhood_masks(without);
    std::uint64_t nv_mask = 0;
    nv.for_each([&](int u) { nv_mask |= 1ull << u; });
    const std::uint64_t full = m == 0 ? 0 : (1ull << m) - 1;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        std::uint64_t covered = 0;
        std::uint64_t rest = mask;
        while (rest) {
            covered |= nb[static_cast<std::size_t>(std::countr_zero(rest))];
            rest &= rest - 1;
        }
        if (covered == full && (mask & nv_mask) == 0) return false;
    }
    return true;
}

std::vector<Edge> irrelevant_edges(const Graph& g) {
    std::vector<Edge> out;
    for (auto [u, v] : g.edges()) {
        Graph without = delete_edge(g, u, v);
        if (is_domination_covered(without, u) && is_domination_covered(without, v))
            out.emplace_back(u, v);
    }
    return out;
}

ReductionTrace reduce_irrelevant(const Graph& g) {
    ReductionTrace trace{{}, g};
    for (;;) {
        auto edges = irrelevant_edges(trace.final);
        if (edges.empty()) break;
        auto e = *std::min_element(edges.begin(), edges.end());
        trace.deleted.push_back(e);
        trace.final = delete_edge(trace.final, e.first, e.second);
    }
    return trace;
}

}  // namespace domipoly
