// Command-line front end. Exit codes: 0 ok / all pass, 1 counterexample,
// 2 inconclusive (budget), 3 usage or input error.

#include <grundylab/atoms.hpp>
#include <grundylab/campaign.hpp>
#include <grundylab/enumerate.hpp>
#include <grundylab/families.hpp>
#include <grundylab/graph6.hpp>
#include <grundylab/solver.hpp>
#include <grundylab/twins.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace grundylab;

namespace {

constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

std::vector<Graph> graphs_from_argument(const std::string& arg)
{
    if (arg == "-")
        return read_graph6_list(std::cin);
    return {parse_graph6(arg)};
}

std::string join_ints(const std::vector<int>& values)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i)
        out << (i ? "," : "") << values[i];
    return out.str();
}

int cmd_grundy(const std::string& arg, std::uint64_t budget)
{
    int code = 0;
    for (const auto& g : graphs_from_argument(arg)) {
        const auto res = grundy_exact(g, {budget});
        std::cout << write_graph6(g);
        if (!res.solved()) {
            std::cout << " grundy=unknown bounds=" << res.lower_bound << ".." << res.upper_bound << '\n';
            code = kExitInconclusive;
            continue;
        }
        std::cout << " grundy=" << *res.value << " order=" << join_ints(ordering_from_coloring(res.witness).perm)
                  << '\n';
    }
    return code;
}

int cmd_partial(const std::string& arg, std::uint64_t budget)
{
    int code = 0;
    for (const auto& g : graphs_from_argument(arg)) {
        const auto res = partial_grundy_exact(g, {budget});
        std::cout << write_graph6(g);
        if (!res.solved()) {
            std::cout << " partial_grundy=unknown bounds=" << res.lower_bound << ".." << res.upper_bound << '\n';
            code = kExitInconclusive;
            continue;
        }
        std::cout << " partial_grundy=" << *res.value << " coloring=" << join_ints(res.witness.colors) << '\n';
    }
    return code;
}

int cmd_cubic(const std::string& arg)
{
    for (const auto& g : graphs_from_argument(arg)) {
        const CubicGraph cubic(g);
        std::cout << write_graph6(g) << " grundy=" << cubic_grundy_linear(cubic)
                  << " f3=" << (f3_membership(cubic) ? 1 : 0) << '\n';
    }
    return 0;
}

void write_or_print(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw GraphError("cannot write " + path);
    out << text;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Grundy numbers, twin bounds, atoms and graph families"};
    app.require_subcommand(1);

    std::uint64_t budget = SearchBudget{}.node_limit;

    std::string graph_arg;
    auto* grundy = app.add_subcommand("grundy", "Grundy number and a witness ordering");
    grundy->add_option("graph", graph_arg, "graph6 string, or - for one per line on stdin")->required();
    grundy->add_option("--budget", budget, "search node limit");

    auto* partial = app.add_subcommand("partial-grundy", "partial Grundy number and a witness coloring");
    partial->add_option("graph", graph_arg, "graph6 string or -")->required();
    partial->add_option("--budget", budget, "search node limit");

    auto* cubic = app.add_subcommand("cubic", "linear-time Grundy number of a connected cubic graph");
    cubic->add_option("graph", graph_arg, "graph6 string or -")->required();

    int atom_t = 0;
    std::optional<int> atom_degree, atom_order;
    bool atom_minimal = false;
    std::string out_path;
    auto* atoms = app.add_subcommand("atoms", "write a t-atom catalog as a graph6 list");
    atoms->add_option("--t", atom_t, "level")->required();
    atoms->add_option("--max-degree", atom_degree, "keep atoms with this maximum degree at most");
    atoms->add_option("--max-order", atom_order, "keep atoms with at most this many vertices");
    atoms->add_flag("--minimal", atom_minimal, "write only the minimal atoms");
    atoms->add_option("--out", out_path, "output file (- for stdout)")->required();

    std::string family_name, script_path;
    int family_r = 3;
    auto* family = app.add_subcommand("family", "run a construction script");
    family->add_option("family", family_name, "f3 or gstar")->required()->check(CLI::IsMember({"f3", "gstar"}));
    family->add_option("--script", script_path, "script file")->required();
    family->add_option("--r", family_r, "degree for gstar");

    int grki_r = 0, grki_k = 0, grki_i = 2;
    std::vector<int> grki_parts;
    auto* grki = app.add_subcommand("grki", "build G_{r,k,i}");
    grki->add_option("--r", grki_r, "regularity")->required();
    grki->add_option("--k", grki_k, "Grundy number of the result")->required();
    grki->add_option("--parts", grki_parts, "k-1 part sizes summing to r (default: near-equal)")->delimiter(',');
    grki->add_option("--i", grki_i, "half the number of copies (>= 2)");

    int en_r = 0, en_n = 0;
    bool en_connected = false;
    auto* enumerate = app.add_subcommand("enumerate", "r-regular graphs on n vertices, one per isomorphism class");
    enumerate->add_option("--r", en_r, "degree")->required();
    enumerate->add_option("--n", en_n, "order")->required();
    enumerate->add_flag("--connected", en_connected, "connected graphs only");

    CampaignOptions campaign;
    std::optional<int> v_r, v_t;
    std::string v_input;
    bool v_json = false, v_csv = false;
    auto* verify = app.add_subcommand("verify", "run a verification campaign");
    verify->add_option("--claim", campaign.claim, "claim id")->required();
    verify->add_option("--r", v_r, "regularity");
    verify->add_option("--max-n", campaign.max_n, "largest order generated");
    verify->add_option("--input", v_input, "graph6 list file, - for stdin");
    verify->add_option("--budget", budget, "search node limit per graph");
    verify->add_option("--t", v_t, "ATOM-EQ: highest level");
    verify->add_option("--samples", campaign.samples, "GR-SOUND: number of random scripts");
    verify->add_option("--seed", campaign.seed, "GR-SOUND: first seed");
    verify->add_option("--threads", campaign.threads, "worker threads (default GRUNDYLAB_THREADS)");
    verify->add_flag("--timing", campaign.timing, "add wall time to the summary");
    auto* json_flag = verify->add_flag("--json", v_json, "JSON lines (default)");
    verify->add_flag("--csv", v_csv, "CSV table")->excludes(json_flag);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*grundy)
            return cmd_grundy(graph_arg, budget);
        if (*partial)
            return cmd_partial(graph_arg, budget);
        if (*cubic)
            return cmd_cubic(graph_arg);
        if (*atoms) {
            auto catalog = enumerate_atoms(atom_t, AtomLimits{atom_degree, atom_order});
            if (atom_minimal)
                catalog = minimal_atoms(catalog);
            std::ostringstream text;
            write_atom_catalog(text, catalog, atom_minimal);
            write_or_print(out_path, text.str());
            return 0;
        }
        if (*family) {
            const auto fam = family_name == "f3" ? Family::f3star() : Family::gstar(family_r);
            const auto result = run_script(load_script(script_path), fam);
            std::cout << write_graph6(result.graph) << " n=" << result.graph.order()
                      << " regular=" << (result.regular ? 1 : 0) << '\n';
            return 0;
        }
        if (*grki) {
            const auto parts = grki_parts.empty() ? default_parts(grki_r, grki_k) : grki_parts;
            std::cout << write_graph6(build_G_rki(grki_r, grki_k, parts, grki_i)) << '\n';
            return 0;
        }
        if (*enumerate) {
            write_graph6_list(std::cout, enumerate_regular_graphs(en_r, en_n, en_connected));
            return 0;
        }
        if (*verify) {
            campaign.r = v_r;
            campaign.t = v_t;
            if (!v_input.empty())
                campaign.input = v_input;
            campaign.budget.node_limit = budget;
            const auto report = run_campaign(campaign);
            if (v_csv)
                write_csv(std::cout, report);
            else
                write_json_lines(std::cout, report);
            std::cerr << report.claim << ": " << report.summary["verdict"].get<std::string>() << " ("
                      << report.summary["passed"] << " pass, " << report.summary["failed"] << " fail, "
                      << report.summary["skipped"] << " skip, " << report.summary["unknown"] << " unknown)\n";
            return report.exit_code();
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
