#include "domipoly/equiv.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include <json.hpp>

#include "domipoly/errors.hpp"
#include "domipoly/formulas.hpp"

namespace domipoly {

// ---- canonical form --------------------------------------------------------

namespace {

// Branch-and-bound search for the minimal column-major upper-triangle
// bitstring over degree-ascending vertex orders. Position p contributes the
// adjacency bits to positions 0..p-1 packed into one word (earlier position
// = more significant bit). Two pruning rules: a block larger than the
// incumbent's is dead unless an earlier block was already smaller, and twin
// vertices (equal neighborhoods outside the pair) are interchangeable, so
// only one per twin class is tried at any node.
struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<std::size_t> required_degree;  // ascending
    std::vector<std::vector<bool>> twins;
    std::vector<int> cur;
    std::vector<std::uint64_t> cur_block;
    std::vector<int> best_perm;
    std::vector<std::uint64_t> best_block;
    std::uint64_t used = 0;

    explicit CanonSearch(const Graph& graph)
        : g(graph),
          n(static_cast<int>(graph.order())),
          cur(graph.order()),
          cur_block(graph.order(), 0),
          best_perm(graph.order()),
          best_block(graph.order(), ~0ull) {
        required_degree.reserve(n);
        for (int v = 0; v < n; ++v) required_degree.push_back(g.degree(v));
        std::sort(required_degree.begin(), required_degree.end());
        twins.assign(n, std::vector<bool>(n, false));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                VertexSet nu = g.neighbors(u);
                VertexSet nv = g.neighbors(v);
                nu.reset(v);
                nv.reset(u);
                if (nu == nv) twins[u][v] = twins[v][u] = true;
            }
    }

    std::uint64_t block_for(int p, int v) const {
        std::uint64_t block = 0;
        for (int i = 0; i < p; ++i)
            block = (block << 1) | (g.has_edge(cur[i], v) ? 1u : 0u);
        return block;
    }

    // strictly_less: the path's blocks are lexicographically below the
    // incumbent's prefix. Returns whether the incumbent was replaced inside
    // this subtree; when it is, the path prefix equals the new incumbent's
    // prefix, so the caller downgrades its flag to "equal so far".
    bool dfs(int p, bool strictly_less) {
        if (p == n) {
            if (strictly_less) {
                best_perm = cur;
                best_block = cur_block;
                return true;
            }
            return false;
        }
        std::vector<std::pair<std::uint64_t, int>> candidates;
        for (int v = 0; v < n; ++v) {
            if (used & (1ull << v)) continue;
            if (g.degree(v) != required_degree[p]) continue;
            candidates.emplace_back(block_for(p, v), v);
        }
        std::sort(candidates.begin(), candidates.end());
        std::vector<int> tried;
        bool updated = false;
        for (auto [block, v] : candidates) {
            if (!strictly_less && block > best_block[p]) break;  // sorted: rest is worse
            bool twin_seen = false;
            for (int t : tried)
                if (twins[t][v]) {
                    twin_seen = true;
                    break;
                }
            if (twin_seen) continue;
            tried.push_back(v);
            cur[p] = v;
            cur_block[p] = block;
            used |= 1ull << v;
            if (dfs(p + 1, strictly_less || block < best_block[p])) {
                updated = true;
                strictly_less = false;
            }
            used &= ~(1ull << v);
        }
        return updated;
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, std::size_t limit) {
    if (g.order() > limit)
        throw limit_error("order " + std::to_string(g.order()) +
                          " exceeds the canonicalization limit " + std::to_string(limit));
    if (g.order() > 62) throw limit_error("canonicalization is capped at 62 vertices");
    const std::size_t n = g.order();
    CanonicalForm out;
    out.key.push_back(static_cast<std::uint8_t>(n));
    if (n < 2) return out;

    CanonSearch search(g);
    search.dfs(0, false);

    // pack the winning blocks into bytes, MSB first
    std::size_t bits = n * (n - 1) / 2;
    out.key.resize(1 + (bits + 7) / 8, 0);
    std::size_t bit_index = 0;
    for (std::size_t p = 1; p < n; ++p) {
        for (std::size_t i = 0; i < p; ++i, ++bit_index) {
            std::uint64_t bit = (search.best_block[p] >> (p - 1 - i)) & 1u;
            if (bit) out.key[1 + bit_index / 8] |= static_cast<std::uint8_t>(0x80u >> (bit_index % 8));
        }
    }
    return out;
}

Graph graph_from_canonical(const CanonicalForm& form) {
    if (form.key.empty()) throw std::invalid_argument("empty canonical key");
    const std::size_t n = form.key[0];
    Graph g(n);
    std::size_t bit_index = 0;
    for (std::size_t p = 1; p < n; ++p) {
        for (std::size_t i = 0; i < p; ++i, ++bit_index) {
            std::uint8_t byte = form.key.at(1 + bit_index / 8);
            if ((byte >> (7 - bit_index % 8)) & 1u)
                g.link(static_cast<int>(i), static_cast<int>(p));
        }
    }
    return g;
}

Graph permute(const Graph& g, const std::vector<int>& perm) {
    if (perm.size() != g.order())
        throw std::invalid_argument("permutation length differs from graph order");
    std::vector<int> inverse(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        g.check_vertex(perm[i]);
        inverse[perm[i]] = static_cast<int>(i);
    }
    Graph out(g.order());
    for (auto [u, v] : g.edges()) out.link(inverse[u], inverse[v]);
    return out;
}

// ---- enumeration -----------------------------------------------------------

std::vector<Graph> enumerate_graphs(std::size_t n, std::size_t limit) {
    if (n > limit)
        throw limit_error("order " + std::to_string(n) +
                          " exceeds the enumeration limit " + std::to_string(limit));
    if (n == 0) return {Graph()};
    std::vector<Graph> reps{Graph(1)};
    for (std::size_t k = 2; k <= n; ++k) {
        std::set<std::vector<std::uint8_t>> seen;
        for (const Graph& g : reps) {
            for (std::uint64_t mask = 0; mask < (1ull << (k - 1)); ++mask) {
                Graph ext(k);
                for (auto [u, v] : g.edges()) ext.link(u, v);
                for (std::size_t b = 0; b < k - 1; ++b)
                    if ((mask >> b) & 1u) ext.link(static_cast<int>(b), static_cast<int>(k - 1));
                seen.insert(canonical_form(ext, k).key);
            }
        }
        reps.clear();
        for (const auto& key : seen) reps.push_back(graph_from_canonical(CanonicalForm{key}));
    }
    return reps;
}

// ---- polynomial sweeps -----------------------------------------------------

namespace {

// evaluates fn(i) for i in [0, count) across opts.jobs threads; each index
// is computed exactly once and results land in slot order
template <typename F>
void parallel_indexed(std::size_t count, unsigned jobs, F&& fn) {
    jobs = std::max(1u, jobs);
    if (jobs == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    for (unsigned t = 0; t < spawn; ++t)
        workers.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (auto& w : workers) w.join();
}

std::set<std::vector<std::uint8_t>> key_set(const std::vector<Graph>& graphs,
                                            std::size_t canonical_limit) {
    std::set<std::vector<std::uint8_t>> keys;
    for (const Graph& g : graphs) keys.insert(canonical_form(g, canonical_limit).key);
    return keys;
}

}  // namespace

bool d_equivalent(const Graph& a, const Graph& b, const DomsetOptions& opts) {
    return brute_force_polynomial(a, opts) == brute_force_polynomial(b, opts);
}

EquivalenceReport equivalence_class(const Polynomial& target, std::size_t order,
                                    const EquivOptions& opts) {
    std::vector<Graph> graphs = enumerate_graphs(order, opts.enumeration_limit);
    std::vector<Polynomial> polys(graphs.size());
    DomsetOptions sequential = opts.domsets;
    unsigned jobs = sequential.jobs;
    sequential.jobs = 1;  // parallelism lives at the per-graph level here
    parallel_indexed(graphs.size(), jobs, [&](std::size_t i) {
        polys[i] = brute_force_polynomial(graphs[i], sequential);
    });

    EquivalenceReport report;
    report.polynomial = target;
    report.order = order;
    for (std::size_t i = 0; i < graphs.size(); ++i)
        if (polys[i] == target)
            report.members.push_back(
                {canonical_form(graphs[i], opts.canonical_limit), graphs[i]});
    // enumerate_graphs yields key order already; keep it explicit anyway
    std::sort(report.members.begin(), report.members.end(),
              [](const auto& a, const auto& b) { return a.form < b.form; });
    return report;
}

std::string to_json(const EquivalenceReport& report) {
    nlohmann::json doc;
    doc["polynomial"] = report.polynomial.to_string();
    doc["order"] = report.order;
    doc["count"] = report.members.size();
    auto members = nlohmann::json::array();
    for (const auto& member : report.members) members.push_back(to_graph6(member.representative));
    doc["members"] = std::move(members);
    return doc.dump(2);
}

// ---- identity verifiers ----------------------------------------------------

FriendshipClassCheck verify_friendship_class(std::size_t n, const EquivOptions& opts) {
    if (n < 1) throw std::invalid_argument("verify_friendship_class requires n >= 1");
    FriendshipClassCheck out;
    out.report = equivalence_class(d_friendship(n), 2 * n + 1, opts);

    std::vector<Graph> constructed;
    const Graph k1 = complete(1);
    for (const Graph& g : enumerate_graphs(n, opts.enumeration_limit))
        constructed.push_back(join(corona(g, k1), k1));
    auto expected = key_set(constructed, opts.canonical_limit);

    std::set<std::vector<std::uint8_t>> actual;
    for (const auto& member : out.report.members) actual.insert(member.form.key);
    out.matches = actual == expected;
    return out;
}

bool verify_corona_k1(std::size_t n, const EquivOptions& opts) {
    if (n < 1) throw std::invalid_argument("verify_corona_k1 requires n >= 1");
    const Polynomial target =
        (Polynomial::monomial(2) + Polynomial::monomial(1, 2)).pow(n);  // x^n (x+2)^n

    EquivalenceReport actual_class = equivalence_class(target, 2 * n, opts);
    std::set<std::vector<std::uint8_t>> actual;
    for (const auto& member : actual_class.members) actual.insert(member.form.key);

    std::vector<Graph> constructed;
    const Graph k1 = complete(1);
    for (const Graph& h : enumerate_graphs(n, opts.enumeration_limit))
        constructed.push_back(corona(h, k1));
    return actual == key_set(constructed, opts.canonical_limit);
}

bool verify_h_variants(std::size_t n, const DomsetOptions& opts) {
    if (n < 1) throw std::invalid_argument("verify_h_variants requires n >= 1");
    const Graph h = h_graph(2 * n);
    const Polynomial base = d_h_even(n);

    // connector edges between consecutive blocks: (1,2), (3,4), ...
    std::vector<Edge> connectors;
    for (std::size_t i = 1; i + 1 < 2 * n; i += 2)
        connectors.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));

    for (std::uint64_t subset = 0; subset < (1ull << connectors.size()); ++subset) {
        Graph variant = h;
        for (std::size_t i = 0; i < connectors.size(); ++i)
            if ((subset >> i) & 1u)
                variant = delete_edge(variant, connectors[i].first, connectors[i].second);
        if (brute_force_polynomial(variant, opts) != base) return false;
    }

    if (n <= 3) {
        // single-edge additions between degree-4 pairs and degree-3/degree-4 pairs
        const std::size_t order = h.order();
        for (int u = 0; u < static_cast<int>(order); ++u)
            for (int v = u + 1; v < static_cast<int>(order); ++v) {
                if (h.has_edge(u, v)) continue;
                std::size_t du = h.degree(u), dv = h.degree(v);
                bool four_four = du == 4 && dv == 4;
                bool three_four = (du == 3 && dv == 4) || (du == 4 && dv == 3);
                if (!four_four && !three_four) continue;
                if (brute_force_polynomial(add_edge(h, u, v), opts) != base) return false;
            }
    }
    return true;
}

GeneralUProbe probe_general_u(const Graph& g, const CliqueCover& cover, const Graph& h,
                              const std::vector<int>& u, const DomsetOptions& opts) {
    GeneralUProbe out;
    out.product_polynomial =
        brute_force_polynomial(clique_cover_product(g, cover, h, u), opts);
    out.factor_polynomial = Polynomial::one();
    for (const VertexSet& part : cover.parts) {
        // H* for this part: K_{|C_i|} with every vertex joined to U in a
        // fresh copy of H
        const std::size_t size = part.count();
        CliqueCover whole;
        whole.parts.emplace_back(size);
        for (std::size_t i = 0; i < size; ++i) whole.parts.back().set(i);
        Graph factor = clique_cover_product(complete(size), whole, h, u);
        out.factor_polynomial =
            out.factor_polynomial * brute_force_polynomial(factor, opts);
    }
    out.equal = out.product_polynomial == out.factor_polynomial;
    return out;
}

}  // namespace domipoly
