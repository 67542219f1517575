#include "oracles.hpp"

#include <grundylab/atoms.hpp>
#include <grundylab/canonical.hpp>
#include <grundylab/coloring.hpp>
#include <grundylab/enumerate.hpp>
#include <grundylab/families.hpp>
#include <grundylab/graph6.hpp>
#include <grundylab/solver.hpp>

#include <doctest.h>

#include <set>
#include <sstream>

using namespace grundylab;

namespace {

// Binomial tree: two copies of the previous tree with their roots joined.
Graph binomial_tree(int t)
{
    Graph g(1);
    for (int i = 1; i < t; ++i) {
        const int n = g.order();
        g = g.disjoint_union(g).with_edge(0, n);
    }
    return g;
}

// A graph is a minimal t-atom exactly when its Grundy number reaches t and
// deleting any vertex drops it below t.
bool critical(const Graph& g, int t)
{
    if (grundy_number(g) < t)
        return false;
    for (int v = 0; v < g.order(); ++v)
        if (grundy_number(oracle::delete_vertex(g, v)) >= t)
            return false;
    return true;
}

std::set<CanonicalKey> keys_of(const std::map<CanonicalKey, Atom>& atoms)
{
    std::set<CanonicalKey> out;
    for (const auto& [k, a] : atoms)
        out.insert(k);
    return out;
}

bool brute_induced(const Graph& pattern, const Graph& host)
{
    bool found = false;
    oracle::for_each_subset(host.order(), pattern.order(), [&](const std::vector<int>& s) {
        found = found || oracle::isomorphic(pattern, oracle::induced(host, s));
    });
    return found;
}

} // namespace

TEST_CASE("low levels")
{
    const auto one = enumerate_atoms(1);
    REQUIRE(one.atoms.size() == 1);
    CHECK(one.atoms.begin()->second.graph == Graph(1));
    const auto two = enumerate_atoms(2);
    REQUIRE(two.atoms.size() == 1);
    CHECK(are_isomorphic(two.atoms.begin()->second.graph, build_named("K2")));
    const auto min2 = minimal_atoms(two);
    CHECK(min2.minimal.size() == 1);
    CHECK_THROWS_AS(enumerate_atoms(0), GraphError);
}

TEST_CASE("minimal 3-atoms are the triangle and the 4-path")
{
    const auto cat = minimal_atoms(enumerate_atoms(3));
    CHECK(cat.atoms.size() == 4);
    std::set<CanonicalKey> expected{canonical_form(build_named("K3")), canonical_form(build_named("P4"))};
    CHECK(keys_of(cat.minimal) == expected);
}

TEST_CASE("minimal atoms equal the vertex-critical graphs")
{
    for (int t = 3; t <= 4; ++t) {
        CAPTURE(t);
        const auto cat = minimal_atoms(enumerate_atoms(t));
        std::set<CanonicalKey> critical_keys;
        for (int n = 1; n <= 8; ++n)
            for (const auto& g : enumerate_graphs(n, true))
                if (critical(g, t))
                    critical_keys.insert(canonical_form(g));
        CHECK(keys_of(cat.minimal) == critical_keys);
        std::set<CanonicalKey> generated;
        for (const auto& [k, g] : generate_minimal_atoms(t))
            generated.insert(k);
        CHECK(generated == critical_keys);
    }
}

TEST_CASE("atom witnesses, sizes and closure")
{
    const auto three = enumerate_atoms(3);
    const auto four = enumerate_atoms(4);
    CHECK(three.max_order() == 4);
    CHECK(four.max_order() == 8);
    for (const auto& [key, atom] : four.atoms) {
        CHECK(atom.witness.num_colors() == 4);
        CHECK(validate_grundy(atom.graph, atom.witness, false));
        CHECK(oracle::is_grundy_coloring(atom.graph, atom.witness.colors));
        CHECK(is_atom(atom.graph, 4));
        // Peeling the color-1 layer leaves a 3-atom of the catalog.
        VertexSet rest;
        for (int v = 0; v < atom.graph.order(); ++v)
            if (atom.witness.colors[v] != 1)
                rest.insert(v);
        CHECK(three.atoms.count(canonical_form(atom.graph.induced(rest))) == 1);
    }
    for (const auto& [key, atom] : minimal_atoms(four).minimal)
        CHECK(grundy_number(atom.graph) >= 4);
}

TEST_CASE("limits")
{
    const auto capped = enumerate_atoms(4, {3, std::nullopt});
    for (const auto& [k, a] : capped.atoms)
        CHECK(a.graph.max_degree() <= 3);
    const auto small = enumerate_atoms(4, {std::nullopt, 6});
    for (const auto& [k, a] : small.atoms)
        CHECK(a.graph.order() <= 6);
    CHECK(enumerate_atoms(5, {2, std::nullopt}).atoms.empty());
    CHECK(atom_limits_supported(5, {std::nullopt, 9}));
    CHECK_FALSE(atom_limits_supported(5, {4, std::nullopt}));
    CHECK_THROWS_AS(enumerate_atoms(5, {4, std::nullopt}), GraphError);
    const auto five = enumerate_atoms(5, {std::nullopt, 8});
    for (const auto& [k, a] : five.atoms)
        CHECK(validate_grundy(a.graph, a.witness, false));
}

TEST_CASE("is_atom")
{
    const Graph t5 = binomial_tree(5);
    CHECK(t5.order() == 16);
    CHECK(t5.max_degree() == 4);
    CHECK(is_atom(t5, 5));
    CHECK_FALSE(is_atom(t5, 4));
    CHECK(is_atom(build_named("P4"), 3));
    CHECK(is_atom(build_named("K3"), 3));
    CHECK_FALSE(is_atom(build_named("C4"), 3));
    CHECK_FALSE(is_atom(build_named("P3"), 3));
    CHECK(is_atom(Graph(1), 1));
}

TEST_CASE("induced subgraph matcher")
{
    CHECK(is_induced_subgraph(build_named("P4"), build_named("C5")));
    CHECK_FALSE(is_induced_subgraph(build_named("C4"), build_named("K4")));
    CHECK(is_induced_subgraph(Graph(0), build_named("K4")));
    std::mt19937_64 rng(31);
    for (int i = 0; i < 400; ++i) {
        const Graph host = oracle::random_graph(4 + static_cast<int>(rng() % 5), 0.5, rng);
        const Graph pattern = oracle::random_graph(1 + static_cast<int>(rng() % 4), 0.5, rng);
        CHECK(is_induced_subgraph(pattern, host) == brute_induced(pattern, host));
    }
}

TEST_CASE("induced minimal atom test")
{
    CHECK_FALSE(has_induced_minimal_atom(build_named("C4"), 3));
    CHECK(has_induced_minimal_atom(build_named("P4"), 3));
    CHECK_FALSE(has_induced_minimal_atom(build_named("Petersen"), 5));
    CHECK(has_induced_minimal_atom(build_named("Petersen"), 4));
    for (const auto& g : enumerate_graphs_up_to(6, true))
        for (int t = 1; t <= 5; ++t)
            CHECK(has_induced_minimal_atom(g, t) == (grundy_number(g) >= t));
}

TEST_CASE("catalog file round trip")
{
    const auto cat = minimal_atoms(enumerate_atoms(4));
    for (bool minimal : {false, true}) {
        std::stringstream io;
        write_atom_catalog(io, cat, minimal);
        const auto file = read_atom_catalog(io);
        CHECK(file.t == 4);
        CHECK(file.minimal == minimal);
        const auto& src = minimal ? cat.minimal : cat.atoms;
        REQUIRE(file.graphs.size() == src.size());
        std::size_t i = 0;
        for (const auto& [k, a] : src)
            CHECK(file.graphs[i++] == a.graph);
    }
    std::istringstream bad("t=x minimal=0\n");
    CHECK_THROWS(read_atom_catalog(bad));
    std::istringstream bad_body("t=3 minimal=1\nBw\nC\n");
    CHECK_THROWS_AS(read_atom_catalog(bad_body), Graph6Error);
}
