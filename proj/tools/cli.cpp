#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

#include "copoly/analysis.hpp"
#include "copoly/error.hpp"
#include "copoly/family.hpp"
#include "copoly/graph6.hpp"
#include "copoly/oracles.hpp"
#include "copoly/series.hpp"
#include "copoly/suites.hpp"
#include "copoly/tutte.hpp"

namespace copoly::cli {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// Thrown for bad option values that CLI11 cannot catch by itself.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::optional<FamilyKind> family_kind(const std::string& name) {
    for (FamilyKind k : kAllKinds) {
        if (kind_name(k) == name) return k;
    }
    return std::nullopt;
}

json coeff_array(const IntPoly& p) {
    json arr = json::array();
    for (const Integer& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

json coeff_matrix(const BiPoly& p) {
    json rows = json::array();
    for (int i = 0; i <= p.degree_x(); ++i) {
        json r = json::array();
        for (int j = 0; j <= p.degree_y(); ++j) r.push_back(p.coefficient(i, j).get_str());
        rows.push_back(r);
    }
    return rows;
}

struct PolyOptions {
    std::string kind = "coadjoint";
    std::string graph;
    std::string graph6;
    bool from_stdin = false;
    std::string format = "text";
};

void emit_poly(const SimpleGraph& g, const PolyOptions& opt, std::ostream& out) {
    std::string text;
    json coeffs;
    if (opt.kind == "tutte") {
        const TuttePoly t = tutte_dc(g);
        text = to_string(t, "x", "y");
        coeffs = coeff_matrix(t);
    } else if (opt.kind == "z") {
        const BiPoly z = partition_function_symbolic(g);
        text = to_string(z, "q", "v");
        coeffs = coeff_matrix(z);
    } else {
        const IntPoly p = family_poly(g, *family_kind(opt.kind));
        text = to_string(p);
        coeffs = coeff_array(p);
    }
    if (opt.format == "json") {
        out << json{{"graph", emit_graph6(g)}, {"kind", opt.kind}, {"coeffs", coeffs}}.dump() << '\n';
    } else {
        out << text << '\n';
    }
}

int run_poly(const PolyOptions& opt, std::istream& in, std::ostream& out) {
    const int sources = (!opt.graph.empty()) + (!opt.graph6.empty()) + (opt.from_stdin ? 1 : 0);
    if (sources != 1) throw UsageError("poly needs exactly one of --graph, --graph6, --stdin");
    std::vector<SimpleGraph> graphs;
    if (!opt.graph.empty()) graphs.push_back(parse_graph_name(opt.graph));
    if (!opt.graph6.empty()) graphs.push_back(parse_graph6(opt.graph6));
    if (opt.from_stdin) graphs = read_graph6_lines(in);
    for (const SimpleGraph& g : graphs) emit_poly(g, opt, out);
    return kExitOk;
}

struct TableOptions {
    std::string family;
    int max = 0;
    std::string format = "text";
};

int run_table(const TableOptions& opt, std::ostream& out) {
    const bool bipartite = opt.family == "knn";
    const int limit = bipartite ? 5 : 10;
    if (opt.max < 1 || opt.max > limit) {
        throw CapacityError("table " + opt.family + " supports --max 1.." + std::to_string(limit));
    }
    json rows = json::array();
    if (opt.format == "csv") out << "graph,degree,coefficient\n";
    for (int n = 1; n <= opt.max; ++n) {
        const SimpleGraph g = bipartite ? complete_bipartite(n, n) : complete_graph(n);
        const std::string name = bipartite ? "K_{" + std::to_string(n) + "," + std::to_string(n) + "}"
                                           : "K_" + std::to_string(n);
        const IntPoly p = family_poly(g, FamilyKind::CoAdjoint);
        if (opt.format == "text") {
            out << "P(" << name << ",x)=" << to_string(p) << '\n';
        } else if (opt.format == "csv") {
            for (int d = p.degree(); d >= 0; --d) {
                out << '"' << name << "\"," << d << ',' << p.coefficient(d).get_str() << '\n';
            }
        } else {
            rows.push_back(json{{"graph", emit_graph6(g)}, {"kind", "coadjoint"}, {"coeffs", coeff_array(p)}});
        }
    }
    if (opt.format == "json") out << rows.dump(2) << '\n';
    return kExitOk;
}

int run_check(const std::string& which, int max_n, std::ostream& out, std::ostream& err) {
    std::vector<std::string> names;
    if (which == "all") {
        names = suite_names();
    } else {
        names.push_back(which);
    }
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    for (const std::string& name : names) {
        const auto report = run_suite(name, max_n);
        cases += report->cases;
        failures += report->failures;
        out << name << ": " << report->cases << " cases, " << report->failures << " failures\n";
        for (const std::string& f : report->failed_cases) err << "FAIL " << name << ": " << f << '\n';
    }
    out << "total: " << cases << " cases, " << failures << " failures\n";
    return failures == 0 ? kExitOk : kExitFailed;
}

int run_zigzag(int max, std::ostream& out) {
    const auto e = zigzag_numbers(max);
    for (std::size_t m = 0; m < e.size(); ++m) out << "E_" << m << "=" << e[m].get_str() << '\n';
    return kExitOk;
}

int run_egf(int order, std::ostream& out) {
    const auto p = egf_reconstruct(order);
    for (std::size_t n = 0; n < p.size(); ++n) out << "p_" << n << "(x)=" << to_string(p[n]) << '\n';
    return kExitOk;
}

int run_sokal(double tol, std::ostream& out) {
    const SokalMinimum k = sokal_constant(tol);
    out << std::setprecision(10) << "K=" << k.value << " a*=" << k.minimizer << '\n';
    return kExitOk;
}

int run_roots(const std::string& name, std::ostream& out) {
    const SimpleGraph g = parse_graph_name(name);
    const IntPoly p = family_poly(g, FamilyKind::CoAdjoint);
    const RootSet roots = poly_roots(p);
    out << "P(x)=" << to_string(p) << '\n';
    out << std::setprecision(12);
    for (std::size_t i = 0; i < roots.roots.size(); ++i) {
        const auto r = roots.roots[i];
        out << r.real() << ' ' << r.imag() << ' ' << std::abs(r) << " residual=" << roots.residuals[i] << '\n';
    }
    out << "max_modulus=" << roots.max_modulus();
    if (g.edge_count() > 0) {
        const double bound = sokal_constant(1e-9).value * g.max_degree();
        out << " bound=" << bound << (roots.max_modulus() <= bound + 1e-6 ? " ok" : " VIOLATED");
    }
    out << '\n';
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact co-adjoint, adjoint, chromatic and matching graph polynomials", "copoly"};
    app.require_subcommand(1);

    PolyOptions poly;
    auto* poly_cmd = app.add_subcommand("poly", "Polynomial of one graph, or of each graph6 line on stdin");
    poly_cmd->add_option("--kind", poly.kind, "coadjoint|adjoint|chromatic|matching|tutte|z")
        ->check(CLI::IsMember({"coadjoint", "adjoint", "chromatic", "matching", "tutte", "z"}));
    poly_cmd->add_option("--graph", poly.graph, "Named graph: K<n>, K<m>,<n>, P<n>, C<n>, E<n>");
    poly_cmd->add_option("--graph6", poly.graph6, "graph6 string");
    poly_cmd->add_flag("--stdin", poly.from_stdin, "Read graph6 lines from standard input");
    poly_cmd->add_option("--format", poly.format)->check(CLI::IsMember({"text", "json"}));

    TableOptions table;
    auto* table_cmd = app.add_subcommand("table", "Co-adjoint polynomials of K_n or K_{n,n}");
    table_cmd->add_option("family", table.family)->required()->check(CLI::IsMember({"kn", "knn"}));
    table_cmd->add_option("--max", table.max)->required();
    table_cmd->add_option("--format", table.format)->check(CLI::IsMember({"text", "json", "csv"}));

    std::string check_name;
    int max_n = 5;
    auto* check_cmd = app.add_subcommand("check", "Run identity suites over all small labeled graphs");
    std::vector<std::string> check_choices = suite_names();
    check_choices.push_back("all");
    check_cmd->add_option("suite", check_name)->required()->check(CLI::IsMember(check_choices));
    check_cmd->add_option("--max-n", max_n, "Largest vertex count (6 is exhaustive and slow)")
        ->check(CLI::Range(0, 6));

    int zigzag_max = 12;
    auto* zigzag_cmd = app.add_subcommand("zigzag", "Euler zigzag numbers E_0..E_N");
    zigzag_cmd->add_option("--max", zigzag_max)->check(CLI::Range(0, 12));

    int egf_order = 8;
    auto* egf_cmd = app.add_subcommand("egf", "p_n(x) from exp(x F(z))");
    egf_cmd->add_option("--order", egf_order)->check(CLI::Range(0, 10));

    double tol = 1e-6;
    auto* sokal_cmd = app.add_subcommand("sokal-k", "The root-bound constant K");
    sokal_cmd->add_option("--tol", tol)->check(CLI::Range(1e-9, 1.0));

    std::string roots_graph;
    auto* roots_cmd = app.add_subcommand("roots", "Complex roots of the co-adjoint polynomial");
    roots_cmd->add_option("--graph", roots_graph)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "copoly: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*poly_cmd) return run_poly(poly, in, out);
        if (*table_cmd) return run_table(table, out);
        if (*check_cmd) return run_check(check_name, max_n, out, err);
        if (*zigzag_cmd) return run_zigzag(zigzag_max, out);
        if (*egf_cmd) return run_egf(egf_order, out);
        if (*sokal_cmd) return run_sokal(tol, out);
        if (*roots_cmd) return run_roots(roots_graph, out);
    } catch (const ConsistencyError& e) {
        err << "copoly: internal consistency failure: " << e.what() << '\n';
        return kExitFailed;
    } catch (const NumericError& e) {
        err << "copoly: " << e.what() << '\n';
        return kExitFailed;
    } catch (const std::exception& e) {
        err << "copoly: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace copoly::cli
