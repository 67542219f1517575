#include "oracles.hpp"

#include <grundylab/canonical.hpp>
#include <grundylab/enumerate.hpp>
#include <grundylab/families.hpp>
#include <grundylab/graph6.hpp>
#include <grundylab/structure.hpp>

#include <doctest.h>

#include <set>
#include <sstream>

using namespace grundylab;

namespace {

std::set<std::pair<int, int>> edge_set(const Graph& g)
{
    auto e = g.edges();
    return {e.begin(), e.end()};
}

Graph cycle_with_leaves()
{
    Graph g = build_named("C6");
    for (int v = 0; v < 6; ++v)
        g = g.with_vertex(VertexSet::singleton(v));
    return g;
}

} // namespace

TEST_CASE("graph construction rejects loops and bad indices")
{
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), GraphError);
    CHECK_THROWS_AS(Graph(65), GraphError);
    const Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}});
    CHECK(g.edge_count() == 1);
}

TEST_CASE("graph6 decoding of hand examples")
{
    const Graph d = parse_graph6("D?{");
    int n = 0;
    const auto expected = oracle::decode_graph6("D?{", n);
    CHECK(d.order() == 5);
    CHECK(n == 5);
    CHECK(edge_set(d) == std::set<std::pair<int, int>>(expected.begin(), expected.end()));
    // '?' is 0, '{' is 60 = 111100: bits 6..11 set 6,7,8,9 -> (0,4),(1,4),(2,4),(3,4)
    CHECK(edge_set(d) == std::set<std::pair<int, int>>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});

    const Graph one = parse_graph6("@");
    CHECK(one.order() == 1);
    CHECK(one.edge_count() == 0);

    const Graph k4 = parse_graph6("C~");
    CHECK(k4 == build_named("K4"));
    CHECK(write_graph6(build_named("K4")) == "C~");
    CHECK(write_graph6(Graph(1)) == "@");
    CHECK(write_graph6(Graph(0)) == "?");
}

TEST_CASE("graph6 errors carry offsets")
{
    CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("C"), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("C~~"), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("C\x20"), Graph6Error);
    // 65 vertices through the long header
    CHECK_THROWS_AS(parse_graph6(std::string("~??A") + std::string(352, '?')), Graph6Error);
    try {
        parse_graph6("C~\x7f");
        FAIL("expected an error");
    } catch (const Graph6Error& e) {
        CHECK(e.offset() == 2);
    }
}

TEST_CASE("graph6 round trip on random graphs and the oracle decoder")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1200; ++i) {
        const int n = static_cast<int>(rng() % 17);
        const Graph g = oracle::random_graph(n, 0.1 + 0.8 * ((rng() % 100) / 100.0), rng);
        const std::string text = write_graph6(g);
        CHECK(parse_graph6(text) == g);
        if (n > 0) {
            int m = 0;
            const auto edges = oracle::decode_graph6(text, m);
            CHECK(m == n);
            CHECK(edge_set(g) == std::set<std::pair<int, int>>(edges.begin(), edges.end()));
        }
    }
}

TEST_CASE("graph6 long header for 63 and 64 vertices")
{
    std::mt19937_64 rng(11);
    for (int n : {62, 63, 64}) {
        const Graph g = oracle::random_graph(n, 0.3, rng);
        const std::string text = write_graph6(g);
        CHECK((text[0] == '~') == (n >= 63));
        CHECK(parse_graph6(text) == g);
    }
}

TEST_CASE("graph6 list reader skips blank lines")
{
    std::istringstream in("C~\n\n@\r\nBw\n");
    const auto gs = read_graph6_list(in);
    REQUIRE(gs.size() == 3);
    CHECK(gs[2] == build_named("K3"));
    std::ostringstream out;
    write_graph6_list(out, gs);
    CHECK(out.str() == "C~\n@\nBw\n");
}

TEST_CASE("girth of named graphs and oracle agreement")
{
    CHECK(girth(build_named("K4")) == Girth::of(3));
    CHECK(girth(build_named("C7")) == Girth::of(7));
    CHECK(girth(build_named("Petersen")) == Girth::of(5));
    CHECK(girth(build_named("P5")) == Girth::infinite());
    CHECK_FALSE(girth(Graph(3)).is_finite());
    std::ostringstream text;
    text << girth(build_named("P3")) << ' ' << girth(build_named("C5"));
    CHECK(text.str() == "inf 5");

    std::mt19937_64 rng(3);
    for (int i = 0; i < 400; ++i) {
        const Graph g = oracle::random_graph(2 + static_cast<int>(rng() % 11), 0.25, rng);
        const auto expected = oracle::girth(g);
        const Girth got = girth(g);
        REQUIRE(got.is_finite() == expected.has_value());
        if (expected)
            CHECK(got.length() == *expected);
    }
}

TEST_CASE("induced cycles")
{
    CHECK(has_induced_cycle(build_named("K2,3"), 4));
    CHECK_FALSE(has_induced_cycle(build_named("K5"), 4));
    CHECK_FALSE(has_induced_cycle(build_named("Petersen"), 4));
    CHECK(induced_cycles(build_named("Petersen"), 5).size() == 12);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        const Graph g = oracle::random_graph(4 + static_cast<int>(rng() % 7), 0.4, rng);
        for (int k = 3; k <= std::min(g.order(), 7); ++k)
            CHECK(has_induced_cycle(g, k) == oracle::has_induced_cycle(g, k));
        int count = 0;
        oracle::for_each_subset(g.order(), 5, [&](const std::vector<int>& s) { count += oracle::induces_cycle(g, s); });
        CHECK(static_cast<int>(induced_cycles(g, 5).size()) == count);
    }
}

TEST_CASE("neighbor-connected induced cycles")
{
    CHECK(neighbor_connected_induced_cycles(build_named("C5"), 5).empty());
    const Graph petersen = build_named("Petersen");
    CHECK(neighbor_connected_induced_cycles(petersen, 5).size() == induced_cycles(petersen, 5).size());
    const Graph leaves = cycle_with_leaves();
    CHECK(induced_cycles(leaves, 6).size() == 1);
    CHECK(neighbor_connected_induced_cycles(leaves, 6).empty());
}

TEST_CASE("independent module partition")
{
    const Graph k4 = build_named("K4");
    const auto blocks = maximal_independent_module_partition(k4, k4.neighbors(0));
    CHECK(blocks.size() == 3);
    for (auto b : blocks)
        CHECK(b.size() == 1);

    const Graph k33 = build_named("K3,3");
    const auto one = maximal_independent_module_partition(k33, k33.neighbors(0));
    REQUIRE(one.size() == 1);
    CHECK(one[0].size() == 3);

    const Graph star = build_named("K*3,3");
    int checked = 0;
    for (int u = 0; u < star.order(); ++u) {
        if (star.degree(u) != 2)
            continue;
        const auto p = maximal_independent_module_partition(star, star.neighbors(u));
        REQUIRE(p.size() == 1);
        CHECK(p[0].size() == 2);
        ++checked;
    }
    CHECK(checked == 2);

    std::mt19937_64 rng(9);
    for (int i = 0; i < 300; ++i) {
        const Graph g = oracle::random_graph(3 + static_cast<int>(rng() % 8), 0.35, rng);
        const VertexSet s = VertexSet(rng() & ((std::uint64_t{1} << g.order()) - 1));
        const auto parts = maximal_independent_module_partition(g, s);
        VertexSet covered;
        for (auto b : parts) {
            CHECK(g.is_independent(b));
            for (int v : b)
                CHECK(g.neighbors(v) == g.neighbors(b.min()));
            CHECK((covered & b).empty());
            covered = covered | b;
        }
        CHECK(covered == s);
        std::vector<int> members(s.begin(), s.end());
        CHECK(static_cast<int>(parts.size()) == oracle::min_module_blocks(g, members));
    }
}

TEST_CASE("power graph")
{
    CHECK(power_graph(build_named("C5"), 2) == build_named("K5"));
    const Graph c72 = power_graph(build_named("C7"), 2);
    CHECK(c72.order() == 7);
    CHECK(c72.regularity() == 4);
    const Graph p = build_named("Petersen");
    CHECK(power_graph(p, 1) == p);
    CHECK(power_graph(p, 2) == build_named("K10"));
}

TEST_CASE("complete bipartite recognition")
{
    CHECK(is_complete_bipartite(build_named("K2,3")));
    CHECK(is_complete_bipartite(build_named("K1,1")));
    CHECK(is_complete_bipartite(build_named("C4")));
    CHECK_FALSE(is_complete_bipartite(build_named("P4")));
    CHECK_FALSE(is_complete_bipartite(build_named("K3")));
    CHECK_FALSE(is_complete_bipartite(Graph(2)));
}

TEST_CASE("canonical form")
{
    const Graph p3a = Graph::from_edges(3, {{0, 1}, {1, 2}});
    const Graph p3b = Graph::from_edges(3, {{0, 2}, {2, 1}});
    CHECK(canonical_form(p3a) == canonical_form(p3b));
    CHECK(canonical_form(build_named("C4")) != canonical_form(build_named("K1,3")));

    std::set<CanonicalKey> keys;
    for (const auto& g : enumerate_graphs(5, true))
        keys.insert(canonical_form(g));
    CHECK(keys.size() == 21);

    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        const int n = 1 + static_cast<int>(rng() % 16);
        const Graph g = oracle::random_graph(n, 0.4, rng);
        const auto perm = oracle::random_permutation(n, rng);
        const Graph h = g.relabelled(perm);
        CHECK(canonical_form(g) == canonical_form(h));
        const auto lab = canonical_labeling(g);
        CHECK(g.relabelled(lab.relabel) == canonical_graph(h));
    }
    for (int i = 0; i < 300; ++i) {
        const int n = 4 + static_cast<int>(rng() % 5);
        const Graph a = oracle::random_graph(n, 0.5, rng);
        const Graph b = oracle::random_graph(n, 0.5, rng);
        CHECK(are_isomorphic(a, b) == oracle::isomorphic(a, b));
    }
    CHECK_THROWS_AS(canonical_form(Graph(17)), GraphError);
}

TEST_CASE("enumerator examples")
{
    const auto k4 = enumerate_regular_graphs(3, 4, true);
    REQUIRE(k4.size() == 1);
    CHECK(are_isomorphic(k4[0], build_named("K4")));
    CHECK(enumerate_regular_graphs(3, 5, false).empty());
    const auto six = enumerate_regular_graphs(3, 6, true);
    REQUIRE(six.size() == 2);
    const bool k33_first = are_isomorphic(six[0], build_named("K3,3"));
    CHECK(are_isomorphic(six[k33_first ? 1 : 0], build_named("prism")));
    CHECK(are_isomorphic(six[k33_first ? 0 : 1], build_named("K3,3")));
}

TEST_CASE("enumerator matches brute force with dedup")
{
    for (int r = 0; r <= 4; ++r) {
        for (int n = r + 1; n <= 8; ++n) {
            for (bool conn : {false, true}) {
                CAPTURE(r);
                CAPTURE(n);
                CAPTURE(conn);
                const auto got = enumerate_regular_graphs(r, n, conn);
                CHECK(static_cast<int>(got.size()) == oracle::count_regular_classes(r, n, conn));
                for (const auto& g : got) {
                    CHECK(g.regularity() == (n > 0 ? std::optional<int>(r) : std::nullopt));
                    CHECK(canonical_graph(g) == g);
                }
            }
        }
    }
}

TEST_CASE("all graphs enumeration counts")
{
    // Connected graphs on 1..7 vertices.
    const int connected[] = {1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n)
        CHECK(static_cast<int>(enumerate_graphs(n, true).size()) == connected[n - 1]);
    CHECK(enumerate_graphs(4, false).size() == 11);
    CHECK(enumerate_graphs_up_to(6, true).size() == 143);
}
