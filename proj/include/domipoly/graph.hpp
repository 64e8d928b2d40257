#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domipoly/errors.hpp"

namespace domipoly {

using Edge = std::pair<int, int>;

// Set of vertices over a fixed universe 0..n-1, packed 64 per word so that
// graphs well past 128 vertices work.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : n_(universe), words_((universe + 63) / 64, 0) {}

    std::size_t universe() const { return n_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= 1ull << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(1ull << (i & 63)); }

    std::size_t count() const;
    bool none() const;
    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);

    // ascending vertex order
    template <typename F>
    void for_each(F&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word) {
                int bit = __builtin_ctzll(word);
                fn(static_cast<int>(w * 64 + bit));
                word &= word - 1;
            }
        }
    }
    std::vector<int> to_vector() const;

    friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

// Simple undirected graph on vertices 0..n-1, adjacency stored as one
// neighbor set per vertex. The null graph (n = 0) is a valid value.
// Constructions below treat graphs as values and return new graphs.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t order) : n_(order), adj_(order, VertexSet(order)) {}

    // Throws std::invalid_argument on out-of-range endpoints or self-loops;
    // duplicate edges collapse.
    static Graph from_edges(std::size_t order, const std::vector<Edge>& edges);

    std::size_t order() const { return n_; }
    std::size_t edge_count() const;

    bool has_edge(int u, int v) const;
    const VertexSet& neighbors(int v) const;
    std::size_t degree(int v) const { return neighbors(v).count(); }
    VertexSet closed_neighborhood(int v) const;  // N[v] = {v} u N(v)

    std::vector<Edge> edges() const;  // sorted, u < v in each pair

    // builder edge insertion; rejects loops and range errors, keeps symmetry
    void link(int u, int v);
    void unlink(int u, int v);

    void check_vertex(int v) const;

    friend bool operator==(const Graph& a, const Graph& b) = default;

private:
    std::size_t n_ = 0;
    std::vector<VertexSet> adj_;
};

// Partition of a graph's vertex set into cliques (Stevanovic's sense: a
// spanning subgraph each component of which is a clique).
struct CliqueCover {
    std::vector<VertexSet> parts;
    std::vector<std::size_t> sizes() const;
};

// Validates that the given parts are nonempty, disjoint, cover every vertex
// and each induce a complete subgraph. Throws std::invalid_argument.
CliqueCover validate_clique_cover(const Graph& g, const std::vector<std::vector<int>>& parts);

// singleton cover {{0},{1},...}; the cover that turns the clique cover
// product into the corona
CliqueCover singleton_cover(const Graph& g);

// ---- constructions -------------------------------------------------------

// G + H: disjoint union plus every cross edge.
Graph join(const Graph& g, const Graph& h);

// labels of h are shifted by |g|
Graph disjoint_union(const Graph& g, const Graph& h);

// G o H: one fresh copy of H per vertex of G, copy i fully joined to vertex
// i. Vertex i's copy occupies labels |G| + i*|H| .. |G| + (i+1)*|H| - 1.
// Requires |G| >= 1.
Graph corona(const Graph& g, const Graph& h);

// G^C * H^U: G kept, one fresh copy of H per cover part, every vertex of
// part C_i joined to every vertex of U inside copy i. Copies are laid out
// in part order after G's vertices. u lists vertices of h.
Graph clique_cover_product(const Graph& g, const CliqueCover& cover, const Graph& h,
                           const std::vector<int>& u);

// C{G}: per cover part, add two new non-adjacent vertices joined to all of
// the part. Exactly clique_cover_product(g, cover, empty_graph(2), {0,1}).
Graph stevanovic(const Graph& g, const CliqueCover& cover);

// G/u: join N(u) into a clique, delete u, shift higher labels down by one.
Graph contract_vertex(const Graph& g, int u);

Graph delete_edge(const Graph& g, int u, int v);  // edge must exist
Graph add_edge(const Graph& g, int u, int v);     // edge must be absent, no loops

// ---- named families ------------------------------------------------------

Graph path(std::size_t n);        // n >= 1
Graph cycle(std::size_t n);       // n >= 3
Graph complete(std::size_t n);
Graph empty_graph(std::size_t n);
Graph n_k2(std::size_t n);        // n disjoint edges
Graph friendship(std::size_t n);  // n >= 1; n triangles sharing vertex 0
Graph book(std::size_t n);        // n >= 1; n 4-cycles sharing the edge {0,1}
Graph k_star(std::size_t k, std::size_t n);  // n > k >= 1; K_k joined to n-k isolated vertices
Graph h_graph(std::size_t m);     // m >= 0; C{P_m} with the Figure-2 cover

// the cover of P_m used by h_graph: {{0,1},{2,3},...} for even m,
// {{0},{1,2},...} for odd m
CliqueCover h_graph_cover(std::size_t m);

// Dispatcher for the families above by name ("path", "cycle", "complete",
// "empty", "nk2", "friendship", "book", "kstar", "h").
Graph family(std::string_view name, const std::vector<long long>& params);

// ---- text formats --------------------------------------------------------

// edge list: first line "n m", then one "u v" line per edge, 0-based, LF
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);  // throws parse_error

// graph6 (McKay), header-less; supports n <= 258047
std::string to_graph6(const Graph& g);
Graph parse_graph6(std::string_view text);  // throws parse_error

// auto-detects: a leading digit means edge list ("n m" header), otherwise
// the text is treated as graph6
Graph parse_graph_text(std::string_view text);
Graph load_graph_file(const std::string& file_path);  // throws parse_error

}  // namespace domipoly
