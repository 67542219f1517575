#include <grundylab/coloring.hpp>

#include <algorithm>
#include <numeric>

namespace grundylab {

int Coloring::num_colors() const
{
    int k = 0;
    for (int c : colors)
        k = std::max(k, c);
    return k;
}

bool Coloring::is_total() const
{
    return std::all_of(colors.begin(), colors.end(), [](int c) { return c > 0; });
}

bool Coloring::is_surjective() const
{
    std::vector<char> used(static_cast<std::size_t>(num_colors()) + 1, 0);
    for (int c : colors)
        if (c > 0)
            used[c] = 1;
    return std::all_of(used.begin() + 1, used.end(), [](char u) { return u != 0; });
}

Coloring greedy_color(const Graph& g, const Ordering& order)
{
    const int n = g.order();
    if (static_cast<int>(order.perm.size()) != n)
        throw GraphError("ordering does not cover every vertex");
    VertexSet seen;
    for (int v : order.perm) {
        if (v < 0 || v >= n || seen.contains(v))
            throw GraphError("ordering is not a permutation of the vertices");
        seen.insert(v);
    }
    Coloring c{std::vector<int>(static_cast<std::size_t>(n), 0)};
    std::vector<char> taken(static_cast<std::size_t>(n) + 2, 0);
    for (int v : order.perm) {
        std::fill(taken.begin(), taken.end(), 0);
        for (int u : g.neighbors(v))
            if (c.colors[u] > 0)
                taken[c.colors[u]] = 1;
        int color = 1;
        while (taken[color])
            ++color;
        c.colors[v] = color;
    }
    return c;
}

namespace {

bool sees_all_below(const Graph& g, const Coloring& c, int v)
{
    const int mine = c.colors[v];
    std::vector<char> seen(static_cast<std::size_t>(mine), 0);
    int missing = mine - 1;
    for (int u : g.neighbors(v)) {
        const int cu = c.colors[u];
        if (cu > 0 && cu < mine && !seen[cu]) {
            seen[cu] = 1;
            --missing;
        }
    }
    return missing == 0;
}

bool is_proper_on_colored(const Graph& g, const Coloring& c)
{
    for (auto [u, v] : g.edges())
        if (c.colors[u] > 0 && c.colors[u] == c.colors[v])
            return false;
    return true;
}

} // namespace

bool validate_grundy(const Graph& g, const Coloring& c, bool subset_mode)
{
    if (static_cast<int>(c.colors.size()) != g.order())
        return false;
    if (std::any_of(c.colors.begin(), c.colors.end(), [](int x) { return x < 0; }))
        return false;
    if (!subset_mode && !c.is_total())
        return false;
    if (!is_proper_on_colored(g, c))
        return false;
    for (int v = 0; v < g.order(); ++v)
        if (c.colors[v] > 0 && !sees_all_below(g, c, v))
            return false;
    return true;
}

bool validate_partial_grundy(const Graph& g, const Coloring& c)
{
    if (static_cast<int>(c.colors.size()) != g.order() || !c.is_total() || !c.is_surjective())
        return false;
    if (!is_proper_on_colored(g, c))
        return false;
    std::vector<char> has_grundy_vertex(static_cast<std::size_t>(c.num_colors()) + 1, 0);
    for (int v = 0; v < g.order(); ++v)
        if (sees_all_below(g, c, v))
            has_grundy_vertex[c.colors[v]] = 1;
    return std::all_of(
        has_grundy_vertex.begin() + 1, has_grundy_vertex.end(), [](char x) { return x != 0; });
}

Ordering ordering_from_coloring(const Coloring& c)
{
    Ordering order;
    order.perm.resize(c.colors.size());
    std::iota(order.perm.begin(), order.perm.end(), 0);
    std::stable_sort(order.perm.begin(), order.perm.end(), [&](int a, int b) {
        const int ca = c.colors[a] == 0 ? 1 << 20 : c.colors[a];
        const int cb = c.colors[b] == 0 ? 1 << 20 : c.colors[b];
        return ca < cb;
    });
    return order;
}

Coloring extend_grundy_coloring(const Graph& g, const Coloring& partial)
{
    return greedy_color(g, ordering_from_coloring(partial));
}

} // namespace grundylab
