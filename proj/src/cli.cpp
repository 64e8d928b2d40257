#include "domipoly/cli.hpp"

#include <cstdlib>
#include <functional>
#include <filesystem>
#include <thread>

#include <CLI11.hpp>

#include "domipoly/domsets.hpp"
#include "domipoly/equiv.hpp"
#include "domipoly/errors.hpp"
#include "domipoly/formulas.hpp"
#include "domipoly/graph.hpp"
#include "domipoly/poly.hpp"

namespace domipoly {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitLimit = 3;
constexpr int kExitVerifyFailed = 4;

// "family:NAME(a,b)" or a file path or an inline graph6 string
Graph resolve_graph_spec(const std::string& spec) {
    if (spec.rfind("family:", 0) == 0) {
        std::string body = spec.substr(7);
        std::string name = body;
        std::vector<long long> params;
        auto open = body.find('(');
        if (open != std::string::npos) {
            if (body.back() != ')') throw parse_error("unbalanced parentheses in " + spec);
            name = body.substr(0, open);
            std::string inner = body.substr(open + 1, body.size() - open - 2);
            std::size_t pos = 0;
            while (pos < inner.size()) {
                auto comma = inner.find(',', pos);
                if (comma == std::string::npos) comma = inner.size();
                try {
                    params.push_back(std::stoll(inner.substr(pos, comma - pos)));
                } catch (const std::exception&) {
                    throw parse_error("bad family parameter in " + spec);
                }
                pos = comma + 1;
            }
        }
        return family(name, params);
    }
    if (std::filesystem::exists(spec)) return load_graph_file(spec);
    try {
        return parse_graph6(spec);
    } catch (const parse_error&) {
        throw parse_error("'" + spec +
                          "' is neither an existing file, a family spec, nor a graph6 string");
    }
}

std::vector<std::vector<int>> parse_cover_spec(const std::string& text) {
    std::vector<std::vector<int>> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto semi = text.find(';', pos);
        if (semi == std::string::npos) semi = text.size();
        std::vector<int> part;
        std::size_t p = pos;
        while (p < semi) {
            auto comma = text.find(',', p);
            if (comma == std::string::npos || comma > semi) comma = semi;
            try {
                part.push_back(std::stoi(text.substr(p, comma - p)));
            } catch (const std::exception&) {
                throw parse_error("bad vertex in cover spec '" + text + "'");
            }
            p = comma + 1;
        }
        parts.push_back(std::move(part));
        if (semi == text.size()) break;
        pos = semi + 1;
    }
    return parts;
}

std::vector<int> parse_vertex_list(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        try {
            out.push_back(std::stoi(text.substr(pos, comma - pos)));
        } catch (const std::exception&) {
            throw parse_error("bad vertex in list '" + text + "'");
        }
        pos = comma + 1;
    }
    return out;
}

void print_graph(std::ostream& out, const Graph& g) {
    out << to_edge_list(g);
    out << to_graph6(g) << '\n';
}

struct Settings {
    std::size_t limit = kDefaultBruteForceLimit;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

    DomsetOptions domsets() const { return DomsetOptions{limit, jobs}; }
    EquivOptions equiv() const {
        EquivOptions opts;
        opts.domsets = domsets();
        return opts;
    }
};

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"domipoly: exact domination polynomials, clique cover products and "
                 "D-equivalence classes of small graphs"};
    app.require_subcommand(1);

    Settings settings;
    if (const char* env = std::getenv("DOMIPOLY_LIMIT")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) settings.limit = v;
    }
    app.add_option("--limit", settings.limit,
                   "brute-force order cap (env DOMIPOLY_LIMIT)");
    app.add_option("--jobs", settings.jobs, "worker thread cap")
        ->check(CLI::PositiveNumber);

    std::string g_spec, h_spec, cover_spec, u_spec;
    std::string family_name;
    std::vector<long long> family_params;
    std::size_t verify_n = 0;

    auto* cmd_poly = app.add_subcommand("poly", "brute-force domination polynomial");
    cmd_poly->add_option("graph", g_spec, "graph file, graph6 string or family:NAME(args)")
        ->required();

    auto* cmd_family = app.add_subcommand("family", "print a named family graph");
    cmd_family->add_option("name", family_name, "family name")->required();
    cmd_family->add_option("params", family_params, "integer parameters");

    auto* cmd_product = app.add_subcommand("product", "graph products");
    cmd_product->require_subcommand(1);
    auto* cmd_ccp = cmd_product->add_subcommand(
        "ccp", "clique cover product G^C * H^U (U defaults to V(H))");
    cmd_ccp->add_option("G", g_spec, "left graph spec")->required();
    cmd_ccp->add_option("H", h_spec, "right graph spec")->required();
    cmd_ccp->add_option("--cover", cover_spec, "clique cover of G, e.g. \"0,1;2;3,4\"")
        ->required();
    cmd_ccp->add_option("--u", u_spec, "vertices of H joined to the cliques");

    auto* cmd_irrelevant = app.add_subcommand("irrelevant", "list irrelevant edges");
    cmd_irrelevant->add_option("graph", g_spec, "graph spec")->required();

    auto* cmd_reduce =
        app.add_subcommand("reduce", "iterated irrelevant-edge deletion trace");
    cmd_reduce->add_option("graph", g_spec, "graph spec")->required();

    auto* cmd_equiv = app.add_subcommand("equiv", "compare domination polynomials");
    cmd_equiv->add_option("G", g_spec, "first graph spec")->required();
    cmd_equiv->add_option("H", h_spec, "second graph spec")->required();

    auto* cmd_class =
        app.add_subcommand("class", "D-equivalence class over all graphs of equal order");
    cmd_class->add_option("graph", g_spec, "graph spec")->required();

    auto* cmd_verify = app.add_subcommand("verify", "exhaustive identity verifiers");
    cmd_verify->require_subcommand(1);
    auto* v_friend = cmd_verify->add_subcommand(
        "friendship", "friendship class [F_n] = {(G o K1) + K1 : |G| = n}");
    v_friend->add_option("n", verify_n, "blade count")->required();
    auto* v_corona = cmd_verify->add_subcommand(
        "corona-k1", "D(G) = x^n (x+2)^n iff G = H o K1 over all order-2n graphs");
    v_corona->add_option("n", verify_n, "half order")->required();
    auto* v_hvar = cmd_verify->add_subcommand(
        "h-variants", "connector deletions/additions of H_2n preserve D");
    v_hvar->add_option("n", verify_n, "block count")->required();
    auto* v_probe = cmd_verify->add_subcommand(
        "dcli-probe", "probe the clique-cover-product factorization for general U");
    v_probe->add_option("G", g_spec, "left graph spec")->required();
    v_probe->add_option("H", h_spec, "right graph spec")->required();
    v_probe->add_option("--cover", cover_spec, "clique cover of G")->required();
    v_probe->add_option("--u", u_spec, "vertices of H joined to the cliques");

    // global flags may appear after the verb too
    std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* cmd) {
        for (CLI::App* sub : cmd->get_subcommands(std::function<bool(CLI::App*)>{})) {
            sub->fallthrough();
            allow_fallthrough(sub);
        }
    };
    allow_fallthrough(&app);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("domipoly");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (cmd_poly->parsed()) {
            Graph g = resolve_graph_spec(g_spec);
            out << brute_force_polynomial(g, settings.domsets()).to_string() << '\n';
            return kExitOk;
        }

        if (cmd_family->parsed()) {
            print_graph(out, family(family_name, family_params));
            return kExitOk;
        }

        if (cmd_ccp->parsed()) {
            Graph g = resolve_graph_spec(g_spec);
            Graph h = resolve_graph_spec(h_spec);
            CliqueCover cover = validate_clique_cover(g, parse_cover_spec(cover_spec));
            std::vector<int> u;
            bool full_u = u_spec.empty();
            if (full_u)
                for (std::size_t v = 0; v < h.order(); ++v) u.push_back(static_cast<int>(v));
            else
                u = parse_vertex_list(u_spec);
            Graph product = clique_cover_product(g, cover, h, u);
            print_graph(out, product);
            out << "brute-force: "
                << brute_force_polynomial(product, settings.domsets()).to_string() << '\n';
            if (full_u) {
                Polynomial dh = brute_force_polynomial(h, settings.domsets());
                out << "closed-form: "
                    << d_clique_cover_product(cover.sizes(), dh, h.order()).to_string()
                    << '\n';
            }
            return kExitOk;
        }

        if (cmd_irrelevant->parsed()) {
            Graph g = resolve_graph_spec(g_spec);
            for (auto [u, v] : irrelevant_edges(g)) out << u << ' ' << v << '\n';
            return kExitOk;
        }

        if (cmd_reduce->parsed()) {
            Graph g = resolve_graph_spec(g_spec);
            ReductionTrace trace = reduce_irrelevant(g);
            for (auto [u, v] : trace.deleted) out << "deleted " << u << ' ' << v << '\n';
            out << "final:\n";
            print_graph(out, trace.final);
            return kExitOk;
        }

        if (cmd_equiv->parsed()) {
            Graph g = resolve_graph_spec(g_spec);
            Graph h = resolve_graph_spec(h_spec);
            Polynomial dg = brute_force_polynomial(g, settings.domsets());
            Polynomial dh = brute_force_polynomial(h, settings.domsets());
            out << "G: " << dg.to_string() << '\n';
            out << "H: " << dh.to_string() << '\n';
            out << (dg == dh ? "equal" : "not-equal") << '\n';
            return kExitOk;
        }

        if (cmd_class->parsed()) {
            Graph g = resolve_graph_spec(g_spec);
            Polynomial target = brute_force_polynomial(g, settings.domsets());
            EquivalenceReport report =
                equivalence_class(target, g.order(), settings.equiv());
            out << to_json(report) << '\n';
            return kExitOk;
        }

        if (v_friend->parsed()) {
            FriendshipClassCheck check =
                verify_friendship_class(verify_n, settings.equiv());
            out << to_json(check.report) << '\n';
            out << (check.matches ? "PASS" : "FAIL") << " friendship-class n="
                << verify_n << '\n';
            return check.matches ? kExitOk : kExitVerifyFailed;
        }

        if (v_corona->parsed()) {
            bool ok = verify_corona_k1(verify_n, settings.equiv());
            out << (ok ? "PASS" : "FAIL") << " corona-k1 n=" << verify_n << '\n';
            return ok ? kExitOk : kExitVerifyFailed;
        }

        if (v_hvar->parsed()) {
            bool ok = verify_h_variants(verify_n, settings.domsets());
            out << (ok ? "PASS" : "FAIL") << " h-variants n=" << verify_n << '\n';
            return ok ? kExitOk : kExitVerifyFailed;
        }

        if (v_probe->parsed()) {
            Graph g = resolve_graph_spec(g_spec);
            Graph h = resolve_graph_spec(h_spec);
            CliqueCover cover = validate_clique_cover(g, parse_cover_spec(cover_spec));
            std::vector<int> u;
            if (u_spec.empty())
                for (std::size_t v = 0; v < h.order(); ++v) u.push_back(static_cast<int>(v));
            else
                u = parse_vertex_list(u_spec);
            GeneralUProbe probe = probe_general_u(g, cover, h, u, settings.domsets());
            out << "product: " << probe.product_polynomial.to_string() << '\n';
            out << "factors: " << probe.factor_polynomial.to_string() << '\n';
            out << (probe.equal ? "equal" : "unequal") << '\n';
            return kExitOk;  // the probe records; it asserts nothing
        }

        err << "error: no command handled\n";
        return kExitUsage;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const limit_error& e) {
        err << "limit error: " << e.what() << '\n';
        return kExitLimit;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    }
}

}  // namespace domipoly
