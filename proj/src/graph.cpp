#include "domipoly/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace domipoly {

// ---- VertexSet -------------------------------------------------------------

std::size_t VertexSet::count() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool VertexSet::none() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    for_each([&](int v) { out.push_back(v); });
    return out;
}

// ---- Graph -----------------------------------------------------------------

void Graph::check_vertex(int v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " out of range for order " + std::to_string(n_));
}

Graph Graph::from_edges(std::size_t order, const std::vector<Edge>& edges) {
    Graph g(order);
    for (auto [u, v] : edges) g.link(u, v);
    return g;
}

void Graph::link(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u].set(v);
    adj_[v].set(u);
}

void Graph::unlink(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u].reset(v);
    adj_[v].reset(u);
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && adj_[u].test(v);
}

const VertexSet& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

VertexSet Graph::closed_neighborhood(int v) const {
    check_vertex(v);
    VertexSet out = adj_[v];
    out.set(v);
    return out;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (std::size_t v = 0; v < n_; ++v) twice += adj_[v].count();
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < static_cast<int>(n_); ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

// ---- clique covers ---------------------------------------------------------

std::vector<std::size_t> CliqueCover::sizes() const {
    std::vector<std::size_t> out;
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back(p.count());
    return out;
}

CliqueCover validate_clique_cover(const Graph& g,
                                  const std::vector<std::vector<int>>& parts) {
    CliqueCover cover;
    VertexSet seen(g.order());
    for (const auto& raw : parts) {
        if (raw.empty()) throw std::invalid_argument("clique cover has an empty part");
        VertexSet part(g.order());
        for (int v : raw) {
            g.check_vertex(v);
            if (seen.test(v))
                throw std::invalid_argument("clique cover parts overlap at vertex " +
                                            std::to_string(v));
            seen.set(v);
            part.set(v);
        }
        for (int u : raw)
            for (int v : raw)
                if (u < v && !g.has_edge(u, v))
                    throw std::invalid_argument(
                        "clique cover part is not a clique: missing edge " +
                        std::to_string(u) + "-" + std::to_string(v));
        cover.parts.push_back(std::move(part));
    }
    if (seen.count() != g.order())
        throw std::invalid_argument("clique cover does not span all vertices");
    return cover;
}

CliqueCover singleton_cover(const Graph& g) {
    CliqueCover cover;
    for (std::size_t v = 0; v < g.order(); ++v) {
        VertexSet part(g.order());
        part.set(v);
        cover.parts.push_back(std::move(part));
    }
    return cover;
}

// ---- constructions ---------------------------------------------------------

namespace {

// copy g's edges into target at a label offset
void blit(Graph& target, const Graph& g, int offset) {
    for (auto [u, v] : g.edges()) target.link(u + offset, v + offset);
}

}  // namespace

Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph out(g.order() + h.order());
    blit(out, g, 0);
    blit(out, h, static_cast<int>(g.order()));
    return out;
}

Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = 0; v < h.order(); ++v)
            out.link(static_cast<int>(u), static_cast<int>(g.order() + v));
    return out;
}

Graph corona(const Graph& g, const Graph& h) {
    if (g.order() == 0) throw std::invalid_argument("corona requires a nonempty left graph");
    const int n = static_cast<int>(g.order());
    const int m = static_cast<int>(h.order());
    Graph out(g.order() + g.order() * h.order());
    blit(out, g, 0);
    for (int i = 0; i < n; ++i) {
        const int base = n + i * m;
        blit(out, h, base);
        for (int v = 0; v < m; ++v) out.link(i, base + v);
    }
    return out;
}

Graph clique_cover_product(const Graph& g, const CliqueCover& cover, const Graph& h,
                           const std::vector<int>& u) {
    for (int v : u) h.check_vertex(v);
    const int n = static_cast<int>(g.order());
    const int m = static_cast<int>(h.order());
    const int k = static_cast<int>(cover.parts.size());
    Graph out(static_cast<std::size_t>(n) + static_cast<std::size_t>(k) * m);
    blit(out, g, 0);
    for (int i = 0; i < k; ++i) {
        const int base = n + i * m;
        blit(out, h, base);
        cover.parts[i].for_each([&](int c) {
            for (int uv : u) out.link(c, base + uv);
        });
    }
    return out;
}

Graph stevanovic(const Graph& g, const CliqueCover& cover) {
    return clique_cover_product(g, cover, empty_graph(2), {0, 1});
}

Graph contract_vertex(const Graph& g, int u) {
    g.check_vertex(u);
    std::vector<int> nbrs = g.neighbors(u).to_vector();
    Graph out(g.order() - 1);
    auto relabel = [u](int v) { return v < u ? v : v - 1; };
    for (auto [a, b] : g.edges())
        if (a != u && b != u) out.link(relabel(a), relabel(b));
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j)
            if (!out.has_edge(relabel(nbrs[i]), relabel(nbrs[j])))
                out.link(relabel(nbrs[i]), relabel(nbrs[j]));
    return out;
}

Graph delete_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw std::invalid_argument("delete_edge: edge " + std::to_string(u) + "-" +
                                    std::to_string(v) + " not present");
    Graph out = g;
    out.unlink(u, v);
    return out;
}

Graph add_edge(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("add_edge: self-loop requested");
    if (g.has_edge(u, v))
        throw std::invalid_argument("add_edge: edge " + std::to_string(u) + "-" +
                                    std::to_string(v) + " already present");
    Graph out = g;
    out.link(u, v);
    return out;
}

// ---- named families --------------------------------------------------------

Graph path(std::size_t n) {
    if (n < 1) throw std::invalid_argument("path requires n >= 1");
    Graph g(n);
    for (std::size_t v = 0; v + 1 < n; ++v) g.link(static_cast<int>(v), static_cast<int>(v + 1));
    return g;
}

Graph cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    Graph g = path(n);
    g.link(0, static_cast<int>(n - 1));
    return g;
}

Graph complete(std::size_t n) {
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            g.link(static_cast<int>(u), static_cast<int>(v));
    return g;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph n_k2(std::size_t n) {
    Graph g(2 * n);
    for (std::size_t i = 0; i < n; ++i)
        g.link(static_cast<int>(2 * i), static_cast<int>(2 * i + 1));
    return g;
}

Graph friendship(std::size_t n) {
    if (n < 1) throw std::invalid_argument("friendship requires n >= 1");
    Graph g(2 * n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        const int a = static_cast<int>(1 + 2 * i);
        const int b = a + 1;
        g.link(a, b);
        g.link(0, a);
        g.link(0, b);
    }
    return g;
}

Graph book(std::size_t n) {
    if (n < 1) throw std::invalid_argument("book requires n >= 1");
    Graph g(2 * n + 2);
    g.link(0, 1);  // the common edge {u, v}
    for (std::size_t i = 0; i < n; ++i) {
        const int a = static_cast<int>(2 + 2 * i);  // adjacent to u = 0
        const int b = a + 1;                        // adjacent to v = 1
        g.link(0, a);
        g.link(a, b);
        g.link(b, 1);
    }
    return g;
}

Graph k_star(std::size_t k, std::size_t n) {
    if (k < 1 || n <= k) throw std::invalid_argument("k_star requires n > k >= 1");
    Graph g = complete(k);
    Graph out(n);
    blit(out, g, 0);
    for (std::size_t v = k; v < n; ++v)
        for (std::size_t c = 0; c < k; ++c)
            out.link(static_cast<int>(c), static_cast<int>(v));
    return out;
}

CliqueCover h_graph_cover(std::size_t m) {
    if (m < 1) throw std::invalid_argument("h_graph_cover requires m >= 1");
    std::vector<std::vector<int>> parts;
    std::size_t v = 0;
    if (m % 2 == 1) {
        parts.push_back({0});
        v = 1;
    }
    for (; v < m; v += 2)
        parts.push_back({static_cast<int>(v), static_cast<int>(v + 1)});
    return validate_clique_cover(path(m), parts);
}

Graph h_graph(std::size_t m) {
    if (m == 0) return Graph();  // H_0 is the null graph
    return stevanovic(path(m), h_graph_cover(m));
}

Graph family(std::string_view name, const std::vector<long long>& params) {
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw std::invalid_argument("family '" + std::string(name) + "' takes " +
                                        std::to_string(count) + " parameter(s)");
        for (long long p : params)
            if (p < 0) throw std::invalid_argument("family parameters must be nonnegative");
    };
    auto p0 = [&] { return static_cast<std::size_t>(params[0]); };
    if (name == "path") return need(1), path(p0());
    if (name == "cycle") return need(1), cycle(p0());
    if (name == "complete") return need(1), complete(p0());
    if (name == "empty") return need(1), empty_graph(p0());
    if (name == "nk2" || name == "n_k2") return need(1), n_k2(p0());
    if (name == "friendship") return need(1), friendship(p0());
    if (name == "book") return need(1), book(p0());
    if (name == "kstar" || name == "k_star")
        return need(2), k_star(p0(), static_cast<std::size_t>(params[1]));
    if (name == "h" || name == "h_graph") return need(1), h_graph(p0());
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

// ---- edge-list format ------------------------------------------------------

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.order() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw parse_error("edge list must start with an \"n m\" header");
    if (n > 1000000 || m > n * (n - 1) / 2)
        throw parse_error("edge list header out of range");
    Graph g(static_cast<std::size_t>(n));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v))
            throw parse_error("edge list ends after " + std::to_string(i) + " of " +
                              std::to_string(m) + " edges");
        try {
            g.link(static_cast<int>(u), static_cast<int>(v));
        } catch (const std::invalid_argument& e) {
            throw parse_error(std::string("bad edge in edge list: ") + e.what());
        }
    }
    std::string trailing;
    if (in >> trailing) throw parse_error("trailing content after edge list");
    return g;
}

// ---- graph6 format ---------------------------------------------------------

namespace {

void append_size(std::string& out, std::size_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph6 encoding supports at most 258047 vertices");
    }
}

std::size_t read_size(std::string_view s, std::size_t& pos) {
    auto next = [&]() -> std::size_t {
        if (pos >= s.size()) throw parse_error("truncated graph6 size");
        char c = s[pos++];
        if (c < 63 || c > 126) throw parse_error("invalid graph6 byte");
        return static_cast<std::size_t>(c - 63);
    };
    std::size_t first = next();
    if (first < 63) return first;
    // 126 prefix: three more 6-bit groups
    std::size_t a = next(), b = next(), c = next();
    if (a == 63 || b == 63 || c == 63) throw parse_error("invalid graph6 size bytes");
    return (a << 12) | (b << 6) | c;
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    append_size(out, n);
    int bits = 0, value = 0;
    for (std::size_t col = 1; col < n; ++col) {
        for (std::size_t row = 0; row < col; ++row) {
            value = (value << 1) | (g.has_edge(static_cast<int>(row), static_cast<int>(col)) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(value + 63));
                bits = 0;
                value = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((value << (6 - bits)) + 63));
    return out;
}

Graph parse_graph6(std::string_view text) {
    // trim trailing newline/space
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty()) throw parse_error("empty graph6 string");
    std::size_t pos = 0;
    const std::size_t n = read_size(text, pos);
    Graph g(n);
    const std::size_t pair_count = n < 2 ? 0 : n * (n - 1) / 2;
    const std::size_t need = (pair_count + 5) / 6;
    if (text.size() - pos != need)
        throw parse_error("graph6 body has wrong length for order " + std::to_string(n));
    std::size_t bit_index = 0;
    for (std::size_t col = 1; col < n; ++col) {
        for (std::size_t row = 0; row < col; ++row, ++bit_index) {
            char c = text[pos + bit_index / 6];
            if (c < 63 || c > 126) throw parse_error("invalid graph6 byte");
            int value = c - 63;
            if ((value >> (5 - bit_index % 6)) & 1)
                g.link(static_cast<int>(row), static_cast<int>(col));
        }
    }
    // padding bits must be zero for a bit-exact round trip
    if (pair_count % 6 != 0) {
        int value = text[pos + need - 1] - 63;
        int pad = static_cast<int>(6 - pair_count % 6);
        if (value & ((1 << pad) - 1)) throw parse_error("nonzero padding bits in graph6");
    }
    return g;
}

Graph parse_graph_text(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) throw parse_error("empty graph text");
    if (std::isdigit(static_cast<unsigned char>(text[pos])))
        return parse_edge_list(text.substr(pos));
    return parse_graph6(text.substr(pos));
}

Graph load_graph_file(const std::string& file_path) {
    std::ifstream in(file_path, std::ios::binary);
    if (!in) throw parse_error("cannot open graph file: " + file_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph_text(buffer.str());
}

}  // namespace domipoly
