// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. The corpus directory is the first argument.

#include "oracles.hpp"

#include <grundylab/atoms.hpp>
#include <grundylab/campaign.hpp>
#include <grundylab/canonical.hpp>
#include <grundylab/enumerate.hpp>
#include <grundylab/families.hpp>
#include <grundylab/graph6.hpp>
#include <grundylab/solver.hpp>
#include <grundylab/structure.hpp>
#include <grundylab/twins.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

using namespace grundylab;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

VerificationReport campaign(const std::string& claim, int max_n, std::optional<int> r = std::nullopt,
                            int threads = 0)
{
    CampaignOptions o;
    o.claim = claim;
    o.max_n = max_n;
    o.r = r;
    o.threads = threads;
    return run_campaign(o);
}

std::string counts(const VerificationReport& rep)
{
    std::ostringstream out;
    out << rep.claim << " " << rep.summary["passed"] << " pass/" << rep.summary["failed"] << " fail/"
        << rep.summary["skipped"] << " skip/" << rep.summary["unknown"] << " unknown";
    return out.str();
}

void require_pass(Outcome& out, const VerificationReport& rep)
{
    out.require(rep.exit_code() == 0, counts(rep) + " verdict " + rep.summary["verdict"].get<std::string>());
}

Outcome oracle_equivalence()
{
    Outcome out;
    const auto start = Clock::now();
    const auto small = enumerate_graphs_up_to(6, true);
    out.require(small.size() == 143, "expected 143 connected graphs on at most 6 vertices");
    int disagreements = 0;
    for (const auto& g : small)
        disagreements += grundy_number(g) != grundy_oracle(g);
    std::mt19937_64 rng(2024);
    const int random_cases = 1002;
    for (int i = 0; i < random_cases; ++i) {
        const int n = 7 + i % 3;
        const Graph g = oracle::random_graph(n, 0.2 + 0.6 * static_cast<double>(rng() % 1000) / 1000.0, rng);
        disagreements += grundy_number(g) != grundy_oracle(g);
    }
    const double secs = seconds_since(start);
    out.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
    out.require(secs < 300.0, "took " + std::to_string(secs) + " s");
    out.detail = out.ok ? std::to_string(small.size()) + " + " + std::to_string(random_cases) + " graphs, "
            + std::to_string(static_cast<int>(secs * 1000)) + " ms"
                        : out.detail;
    return out;
}

Outcome bipartite_two()
{
    Outcome out;
    int checked = 0;
    for (int n = 2; n <= 8; ++n)
        for (const auto& g : enumerate_graphs(n, true)) {
            ++checked;
            if ((grundy_number(g) <= 2) != is_complete_bipartite(g))
                out.require(false, "exception " + write_graph6(g));
        }
    if (out.ok)
        out.detail = std::to_string(checked) + " connected graphs";
    return out;
}

// Ring of K*3,3 copies: the second degree-2 vertex of each copy is joined to
// the first degree-2 vertex of the next. Every vertex is a (1,3)- or
// (0,3)-twin, so the ring is a connected F3 member with Grundy number 3.
CubicGraph star_ring(int copies)
{
    static const std::pair<int, int> base[] = {{0, 1}, {0, 2}, {2, 3}, {2, 4}, {1, 3}, {1, 4}, {3, 5}, {4, 5}};
    std::vector<std::pair<int, int>> edges;
    for (int c = 0; c < copies; ++c) {
        for (auto [u, v] : base)
            edges.emplace_back(6 * c + u, 6 * c + v);
        edges.emplace_back(6 * c + 5, 6 * ((c + 1) % copies));
    }
    return CubicGraph(6 * copies, edges);
}

Outcome cubic_characterization()
{
    Outcome out;
    const int published[] = {1, 2, 5, 19, 85};
    for (int i = 0; i < 5; ++i) {
        const int n = 4 + 2 * i;
        const auto got = enumerate_regular_graphs(3, n, true).size();
        out.require(static_cast<int>(got) == published[i],
                    "enumerator found " + std::to_string(got) + " cubic graphs on " + std::to_string(n));
    }
    const auto rep = campaign("CUBIC-CHAR", 12);
    require_pass(out, rep);

    // Time per vertex, best of several trials, with about the same number
    // of vertices processed at every size.
    std::vector<std::pair<int, double>> per_vertex;
    for (int copies : {17, 167, 1666}) {
        const CubicGraph g = star_ring(copies);
        out.require(cubic_grundy_linear(g) == 3, "ring of " + std::to_string(copies) + " copies is not 3");
        const int reps = std::max(1, 2'000'000 / g.order());
        double best = 1e30;
        for (int trial = 0; trial < 5; ++trial) {
            const auto t0 = Clock::now();
            int sink = 0;
            for (int r = 0; r < reps; ++r)
                sink += cubic_grundy_linear(g);
            const double s = seconds_since(t0);
            out.require(sink == 3 * reps, "classifier changed its answer");
            best = std::min(best, s / (static_cast<double>(reps) * g.order()));
        }
        per_vertex.emplace_back(g.order(), best);
    }
    double lo = 1e30, hi = 0;
    for (auto [n, t] : per_vertex) {
        lo = std::min(lo, t);
        hi = std::max(hi, t);
    }
    std::ostringstream timing;
    for (auto [n, t] : per_vertex)
        timing << " n=" << n << ":" << static_cast<int>(t * 1e9) << "ns";
    out.require(hi <= 2.0 * lo, "time per vertex not flat:" + timing.str());
    if (out.ok)
        out.detail = counts(rep) + ", per vertex" + timing.str();
    return out;
}

Outcome cubic_partial()
{
    Outcome out;
    const auto rep = campaign("CUBIC-PARTIAL", 10);
    require_pass(out, rep);
    out.require(partial_grundy_number(build_named("K3,3")) == 2, "partial Grundy number of K3,3 is not 2");
    int four = 0;
    for (int n = 4; n <= 10; n += 2)
        for (const auto& g : enumerate_regular_graphs(3, n, true)) {
            if (are_isomorphic(g, build_named("K3,3")))
                continue;
            if (partial_grundy_number(g) == 4)
                ++four;
            else
                out.require(false, "partial Grundy number below 4 for " + write_graph6(g));
        }
    if (out.ok)
        out.detail = counts(rep) + ", " + std::to_string(four) + " graphs other than K3,3 reach 4";
    return out;
}

Outcome c4_free()
{
    Outcome out;
    const auto r2 = campaign("C4FREE-R", 12, 2);
    require_pass(out, r2);
    const auto& ex = r2.summary["exceptions"];
    out.require(ex.size() == 1 && are_isomorphic(parse_graph6(ex[0]["graph6"].get<std::string>()), build_named("C4")),
                "r=2 exceptions are not exactly C4");
    const auto r3 = campaign("C4FREE-R", 12, 3);
    require_pass(out, r3);
    const auto r4 = campaign("C4FREE-R", 11, 4);
    require_pass(out, r4);
    if (out.ok)
        out.detail = "r=2 " + counts(r2) + " (C4 only exception); r=3 " + counts(r3) + "; r=4 " + counts(r4);
    return out;
}

Outcome atoms()
{
    Outcome out;
    CampaignOptions o;
    o.claim = "ATOM-EQ";
    o.max_n = 7;
    o.t = 5;
    const auto rep = run_campaign(o);
    require_pass(out, rep);

    // Minimal 3-atoms from scratch: connected graphs reaching 3 whose every
    // vertex deletion drops below 3.
    std::set<CanonicalKey> critical;
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : enumerate_graphs(n, true)) {
            if (grundy_oracle(g) < 3)
                continue;
            bool minimal = true;
            for (int v = 0; v < g.order() && minimal; ++v)
                minimal = grundy_oracle(oracle::delete_vertex(g, v)) < 3;
            if (minimal)
                critical.insert(canonical_form(g));
        }
    const std::set<CanonicalKey> expected{canonical_form(build_named("K3")), canonical_form(build_named("P4"))};
    out.require(critical == expected, "critical graphs for 3 are not {K3, P4}");
    std::set<CanonicalKey> catalog;
    for (const auto& [k, a] : minimal_atoms(enumerate_atoms(3)).minimal)
        catalog.insert(k);
    out.require(catalog == expected, "minimal 3-atom catalog is not {K3, P4}");

    const auto four = enumerate_atoms(4);
    out.require(four.max_order() == 8, "largest 4-atom has " + std::to_string(four.max_order()) + " vertices");

    // Level 5: each layer has at most as many vertices as the atom below it,
    // so no 5-atom exceeds 2 * 8 = 16 vertices, and the binomial tree
    // reaches 16.
    Graph tree(1);
    for (int i = 1; i < 5; ++i) {
        const int n = tree.order();
        tree = tree.disjoint_union(tree).with_edge(0, n);
    }
    out.require(tree.order() == 2 * four.max_order() && is_atom(tree, 5), "16-vertex tree is not a 5-atom");
    if (out.ok)
        out.detail = counts(rep) + ", minimal 3-atoms {K3,P4}, largest 4-atom 8, largest 5-atom 16";
    return out;
}

Outcome gstar_and_grki()
{
    Outcome out;
    CampaignOptions o;
    o.claim = "GR-SOUND";
    o.max_n = 12;
    o.samples = 200;
    const auto sound = run_campaign(o);
    require_pass(out, sound);
    out.require(sound.records.size() == 200, "expected 200 scripts");
    o = {};
    o.claim = "GRKI";
    const auto grki = run_campaign(o);
    require_pass(out, grki);
    out.require(grki.records.size() == 2 + 3 + 4, "expected one graph per (r,k)");
    if (out.ok)
        out.detail = counts(sound) + "; " + counts(grki);
    return out;
}

Outcome square_of_c7()
{
    Outcome out;
    const Graph c72 = power_graph(build_named("C7"), 2);
    out.require(grundy_number(c72) == 4, "Grundy number of C7^2 is not 4");
    const auto members = explore_family(Family::gstar(4), 7);
    int on_seven = 0;
    for (const auto& m : members) {
        on_seven += m.graph.order() == 7;
        out.require(!are_isomorphic(m.graph, c72), "GSTAR(4) produced C7^2");
    }
    if (out.ok)
        out.detail = "Grundy number 4; " + std::to_string(members.size()) + " GSTAR(4) members up to 7 vertices ("
            + std::to_string(on_seven) + " on 7), none isomorphic";
    return out;
}

Outcome twin_bounds()
{
    Outcome out;
    const auto rep = campaign("TWIN-BOUND", 8);
    require_pass(out, rep);
    if (out.ok)
        out.detail = counts(rep);
    return out;
}

std::vector<fs::path> corpus_files(const fs::path& dir)
{
    std::vector<fs::path> files;
    for (const auto& e : fs::recursive_directory_iterator(dir))
        if (e.is_regular_file() && (e.path().extension() == ".g6" || e.path().filename().string().starts_with("atoms_")))
            files.push_back(e.path());
    std::sort(files.begin(), files.end());
    return files;
}

Outcome determinism(const fs::path& data)
{
    Outcome out;
    auto text = [](const VerificationReport& r) {
        std::ostringstream s;
        write_json_lines(s, r);
        return s.str();
    };
    const std::vector<std::tuple<std::string, int, std::optional<int>>> runs{
        {"C4FREE-R", 10, 3}, {"ORACLE-EQ", 6, std::nullopt}, {"TWIN-BOUND", 6, std::nullopt}, {"CUBIC-CHAR", 10, std::nullopt}};
    for (const auto& [claim, max_n, r] : runs) {
        const std::string a = text(campaign(claim, max_n, r, 1));
        out.require(a == text(campaign(claim, max_n, r, 1)), claim + " differs between runs");
        out.require(a == text(campaign(claim, max_n, r, 4)), claim + " differs between 1 and 4 threads");
    }

    int graphs = 0;
    const auto files = corpus_files(data);
    out.require(!files.empty(), "no corpus files under " + data.string());
    for (const auto& f : files) {
        std::ifstream in(f);
        std::vector<std::string> lines;
        for (std::string line; std::getline(in, line);)
            if (!line.empty() && !line.starts_with("t="))
                lines.push_back(line);
        for (const auto& line : lines) {
            const Graph g = parse_graph6(line);
            out.require(write_graph6(g) == line && parse_graph6(write_graph6(g)) == g,
                        f.filename().string() + ": " + line + " does not round-trip");
            ++graphs;
        }
    }
    // The cubic corpus file is the enumerator's output.
    std::ifstream cubic(data / "cubic_connected_4_12.g6");
    const auto stored = read_graph6_list(cubic);
    std::vector<Graph> fresh;
    for (int n = 4; n <= 12; n += 2)
        for (auto& g : enumerate_regular_graphs(3, n, true))
            fresh.push_back(std::move(g));
    out.require(stored == fresh, "cubic corpus differs from the enumerator");
    if (out.ok)
        out.detail = std::to_string(runs.size()) + " campaigns identical at 1 and 4 threads; " + std::to_string(graphs)
            + " corpus graphs in " + std::to_string(files.size()) + " files round-trip";
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: acceptance <data-dir>\n";
        return 2;
    }
    const fs::path data = argv[1];
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"exact solver equals ordering oracle", oracle_equivalence},
        {"Grundy number <= 2 iff complete bipartite", bipartite_two},
        {"linear cubic classifier equals exact solver", cubic_characterization},
        {"partial Grundy number of cubic graphs", cubic_partial},
        {"C4-free r-regular graphs reach r+1", c4_free},
        {"induced minimal atoms decide Grundy number", atoms},
        {"GSTAR soundness and G_rki values", gstar_and_grki},
        {"square of C7 outside GSTAR(4)", square_of_c7},
        {"twin bounds and color limits", twin_bounds},
        {"determinism and graph6 corpus", [&] { return determinism(data); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " -- "
                  << o.detail << " [" << static_cast<int>(seconds_since(t0)) << " s]" << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed ? 1 : 0;
}
