#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "estrada/canon.hpp"
#include "estrada/enumerate.hpp"
#include "estrada/io.hpp"
#include "estrada/spectra.hpp"
#include "estrada/verify.hpp"
#include "estrada/walks.hpp"

using namespace estrada;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_refuted = 1;
constexpr int exit_undetermined = 2;
constexpr int exit_usage = 64;
constexpr int exit_data = 65;

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

int exit_for(Outcome o) {
    switch (o) {
        case Outcome::refuted: return exit_refuted;
        case Outcome::undetermined: return exit_undetermined;
        default: return exit_ok;
    }
}

struct Input {
    std::string path;
    std::string format = "auto";

    Graph load() const {
        GraphFormat f = format == "graph6" ? GraphFormat::graph6
                        : format == "edgelist" ? GraphFormat::edgelist
                                               : format_for_path(path);
        if (path == "-") {
            std::ostringstream buf;
            buf << std::cin.rdbuf();
            return parse_graph(buf.str(), f);
        }
        return read_graph_file(path, f);
    }
};

void add_input(CLI::App* cmd, Input& in) {
    cmd->add_option("file", in.path, "graph file, - for stdin")->required();
    cmd->add_option("--format", in.format, "edgelist, graph6 or auto (graph6 for *.g6)")
        ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
}

int cmd_ee(const Input& in) {
    const Graph g = in.load();
    const auto est = estimate_estrada(g);
    const auto spectrum = eigenvalues(g);
    std::cout << "n " << g.order() << " m " << g.size() << "\n";
    std::cout << "ee_eigen " << num(est.eigen.value) << " error_bound " << num(est.eigen.error_bound) << "\n";
    std::cout << "ee_series " << num(est.series.value) << " tail_bound " << num(est.series.tail_bound) << " K "
              << est.series.cutoff << "\n";
    std::cout << "spectrum";
    for (double x : spectrum.values) std::cout << ' ' << num(x);
    std::cout << "\n";
    return exit_ok;
}

int cmd_moments(const Input& in, int K) {
    const auto t = spectral_moments(in.load(), K);
    for (int k = 0; k <= K; ++k) std::cout << k << ' ' << t.counts[k] << "\n";
    return exit_ok;
}

int cmd_walks(const Input& in, int u, int v, std::optional<int> through, int K) {
    const Graph g = in.load();
    for (int x : {u, v})
        if (!g.contains(x)) throw std::invalid_argument("vertex " + std::to_string(x) + " is not in the graph");
    if (through && !g.contains(*through))
        throw std::invalid_argument("vertex " + std::to_string(*through) + " is not in the graph");
    const auto t = through ? walk_table_through(g, u, v, *through, K) : walk_table(g, u, v, K);
    for (int k = 0; k <= K; ++k) std::cout << k << ' ' << t.counts[k] << "\n";
    return exit_ok;
}

int cmd_charpoly(const Input& in) {
    const Graph g = in.load();
    const auto rec = charpoly_recursive(g);
    const auto exact = charpoly_exact(g);
    std::cout << "recursive " << rec.to_string() << "\n";
    std::cout << "exact " << exact.to_string() << "\n";
    std::cout << "coefficients";
    for (int k = rec.degree(); k >= 0; --k) std::cout << ' ' << rec.coefficient(k);
    std::cout << "\n";
    // x^k (rest) with x not dividing rest
    int low = 0;
    while (low < rec.degree() && rec.coefficient(low) == 0) ++low;
    if (low > 0) {
        IntPolynomial rest;
        for (int k = low; k <= rec.degree(); ++k) rest = rest + IntPolynomial::monomial(k - low, rec.coefficient(k));
        std::cout << "factored x^" << low << " (" << rest.to_string() << ")\n";
    }
    if (rec != exact) {
        std::cout << "MISMATCH\n";
        return exit_refuted;
    }
    return exit_ok;
}

std::optional<BicyclicClass> parse_class(const std::string& text) {
    if (text.empty()) return std::nullopt;
    const auto colon = text.find(':');
    const auto comma = text.find(',');
    if (colon == std::string::npos || comma == std::string::npos || comma < colon)
        throw CLI::ValidationError("--class", "expected infinity:p,q or theta:p,q");
    const std::string kind = text.substr(0, colon);
    BicyclicClass c;
    if (kind == "infinity")
        c.kind = KernelKind::infinity;
    else if (kind == "theta")
        c.kind = KernelKind::theta;
    else
        throw CLI::ValidationError("--class", "kind must be infinity or theta");
    try {
        c.p = std::stoi(text.substr(colon + 1, comma - colon - 1));
        c.q = std::stoi(text.substr(comma + 1));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--class", "p and q must be integers");
    }
    return c;
}

int cmd_enumerate(int n, const std::string& cls, bool brute, bool count_only, const std::string& out_path) {
    const auto c = parse_class(cls);
    if (c && brute) throw CLI::ValidationError("--class", "cannot be combined with --bruteforce");
    const ClassList list = c ? enumerate_class(n, *c) : brute ? enumerate_bicyclic_bruteforce(n) : enumerate_bicyclic(n);
    if (count_only) {
        std::cout << list.size() << "\n";
        return exit_ok;
    }
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot write " + out_path);
    }
    std::ostream& out = out_path.empty() ? std::cout : file;
    for (const auto& m : list) out << encode_graph6(m.graph) << "\n";
    if (!out_path.empty()) std::cout << list.size() << " graphs written to " << out_path << "\n";
    return exit_ok;
}

int cmd_verify(const std::string& id, const CampaignSettings& settings, const std::string& json_path,
               bool no_runtime) {
    std::vector<std::string> ids;
    if (id == "all")
        ids = statement_ids();
    else
        ids = {id};
    std::vector<VerificationReport> reports;
    Outcome overall = Outcome::inapplicable;
    for (const auto& s : ids) {
        auto r = run_statement(s, settings);
        if (no_runtime) r.runtime_ms = 0;
        std::cout << r.statement << ": " << to_string(r.outcome()) << " (" << r.count(Outcome::confirmed)
                  << " confirmed, " << r.count(Outcome::refuted) << " refuted, " << r.count(Outcome::undetermined)
                  << " undetermined, " << r.count(Outcome::inapplicable) << " inapplicable)\n";
        for (const auto& i : r.instances)
            if (i.outcome == Outcome::refuted || i.outcome == Outcome::undetermined)
                std::cout << "  " << to_string(i.outcome) << ": " << i.description << " [" << i.witness << "]\n";
        const Outcome o = r.outcome();
        if (o == Outcome::refuted || (o == Outcome::undetermined && overall != Outcome::refuted) ||
            (o == Outcome::confirmed && overall == Outcome::inapplicable))
            overall = o;
        reports.push_back(std::move(r));
    }
    if (!json_path.empty()) {
        const std::string doc = reports_to_json(reports);
        if (json_path == "-") {
            std::cout << doc;
        } else {
            std::ofstream out(json_path);
            if (!out) throw std::runtime_error("cannot write " + json_path);
            out << doc;
        }
    }
    return exit_for(overall);
}

int cmd_compare(int lo, int hi) {
    const auto r = verify_g1_vs_g2(lo, hi);
    for (int n = lo; n <= hi; ++n) {
        const auto q = g12_quartics(n);
        const double e1 = estrada_via_charpoly(q.f).value + (n - 4);
        const double e2 = estrada_via_charpoly(q.g).value + (n - 4);
        std::cout << n << ' ' << num(e1) << ' ' << num(e2) << ' ' << num(e1 - e2) << "\n";
    }
    for (const auto& i : r.instances)
        if (i.outcome != Outcome::confirmed) std::cout << to_string(i.outcome) << ": " << i.description << "\n";
    std::cout << "overall " << to_string(r.outcome()) << "\n";
    return exit_for(r.outcome());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Estrada index toolkit for bicyclic graphs"};
    app.require_subcommand(1);

    Input in;
    int K = 20, u = 0, v = 0, n = 6, lo = 5, hi = 200;
    std::optional<int> through;
    std::string cls, out_path, json_path, id;
    bool brute = false, count_only = false, no_runtime = false;

    auto* ee = app.add_subcommand("ee", "Estrada index by eigenvalues and by the moment series");
    add_input(ee, in);

    auto* moments = app.add_subcommand("moments", "spectral moments M_0..M_K");
    add_input(moments, in);
    moments->add_option("--k", K, "largest k")->check(CLI::Range(0, 400));

    auto* walks = app.add_subcommand("walks", "walk counts between two vertices");
    add_input(walks, in);
    walks->add_option("-u", u)->required();
    walks->add_option("-v", v)->required();
    walks->add_option("--through", through, "count only walks visiting this vertex");
    walks->add_option("--k", K, "largest k")->check(CLI::Range(0, 400));

    auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial by both methods");
    add_input(charpoly, in);

    auto* enumerate = app.add_subcommand("enumerate", "bicyclic graphs of order n up to isomorphism, as graph6");
    enumerate->add_option("--n", n)->required();
    enumerate->add_option("--class", cls, "infinity:p,q or theta:p,q (cycle lengths)");
    enumerate->add_flag("--bruteforce", brute, "use the labelled brute-force generator");
    enumerate->add_flag("--count", count_only, "print only the number of graphs");
    enumerate->add_option("--out", out_path, "write graph6 records to this file");

    CampaignSettings settings;
    auto* verify = app.add_subcommand("verify", "run verification campaigns");
    std::string ids_help = "statement id or all:";
    for (const auto& s : statement_ids()) ids_help += " " + s;
    verify->add_option("statement", id, ids_help)->required();
    verify->add_option("--n", settings.n, "order for the exhaustive campaigns");
    verify->add_option("--K", settings.options.cutoff, "walk cutoff")->check(CLI::Range(2, 400));
    verify->add_option("--n-lo", settings.g12_lo, "first order for the G1/G2 comparison");
    verify->add_option("--n-hi", settings.g12_hi, "last order for the G1/G2 comparison");
    verify->add_option("--json", json_path, "write the JSON report here, - for stdout");
    verify->add_flag("--no-runtime", no_runtime, "report runtime_ms as 0 for byte-stable JSON");

    auto* compare = app.add_subcommand("compare-g1-g2", "EE(G1) against EE(G2) over a range of orders");
    compare->add_option("--n-lo", lo)->required();
    compare->add_option("--n-hi", hi)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*ee) return cmd_ee(in);
        if (*moments) return cmd_moments(in, K);
        if (*walks) return cmd_walks(in, u, v, through, K);
        if (*charpoly) return cmd_charpoly(in);
        if (*enumerate) return cmd_enumerate(n, cls, brute, count_only, out_path);
        if (*verify) {
            if (id != "all" && std::find(statement_ids().begin(), statement_ids().end(), id) == statement_ids().end())
                throw std::invalid_argument("unknown statement \"" + id + "\"");
            return cmd_verify(id, settings, json_path, no_runtime);
        }
        if (*compare) return cmd_compare(lo, hi);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_data;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_data;
    }
    return exit_usage;
}
