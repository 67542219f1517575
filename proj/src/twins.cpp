#include <grundylab/twins.hpp>

#include <grundylab/structure.hpp>

#include <algorithm>
#include <string>

namespace grundylab {

namespace {

VertexSet equal_neighborhood_class(const Graph& g, int v)
{
    VertexSet out;
    for (int u = 0; u < g.order(); ++u)
        if (g.neighbors(u) == g.neighbors(v))
            out.insert(u);
    return out;
}

int neighborhood_cap(const Graph& g, int v)
{
    return static_cast<int>(maximal_independent_module_partition(g, g.neighbors(v)).size()) + 1;
}

bool is_independent_module(const Graph& g, VertexSet s)
{
    if (s.empty() || !g.is_independent(s))
        return false;
    const VertexSet shared = g.neighbors(s.min());
    for (int u : s)
        if (g.neighbors(u) != shared)
            return false;
    return true;
}

bool is_module_partition_of(const Graph& g, const std::vector<VertexSet>& blocks, VertexSet target)
{
    VertexSet covered;
    for (auto block : blocks) {
        if (block.intersects(covered) || !is_independent_module(g, block))
            return false;
        covered |= block;
    }
    return covered == target;
}

} // namespace

std::optional<TwinWitness> is_twin_vertex(const Graph& g, int v, TwinKind kind, int level)
{
    if (v < 0 || v >= g.order())
        throw GraphError("vertex " + std::to_string(v) + " out of range");
    TwinWitness w;
    w.kind = kind;
    w.level = level;
    switch (kind) {
    case TwinKind::module: {
        const auto r = g.regularity();
        if (!r)
            throw GraphError("module twin test requires a regular graph");
        const int size = *r + 2 - level;
        const VertexSet cls = equal_neighborhood_class(g, v);
        if (size < 1 || size > cls.size())
            return std::nullopt;
        w.module = VertexSet::singleton(v);
        for (int u : cls - VertexSet::singleton(v)) {
            if (w.module.size() == size)
                break;
            w.module.insert(u);
        }
        return w;
    }
    case TwinKind::neighborhood:
        w.partition = maximal_independent_module_partition(g, g.neighbors(v));
        if (static_cast<int>(w.partition.size()) > level - 1)
            return std::nullopt;
        return w;
    case TwinKind::second_order:
        if (!g.is_independent(g.neighbors(v)))
            return std::nullopt;
        for (int u : g.neighbors(v)) {
            auto blocks = maximal_independent_module_partition(g, g.neighbors(u));
            if (static_cast<int>(blocks.size()) > level - 1)
                return std::nullopt;
            w.neighbor_partitions.emplace_back(u, std::move(blocks));
        }
        return w;
    }
    return std::nullopt;
}

bool witness_is_valid(const Graph& g, int v, const TwinWitness& w)
{
    switch (w.kind) {
    case TwinKind::module: {
        const auto r = g.regularity();
        return r && w.module.contains(v) && w.module.size() == *r + 2 - w.level
            && is_independent_module(g, w.module);
    }
    case TwinKind::neighborhood:
        return static_cast<int>(w.partition.size()) <= w.level - 1
            && is_module_partition_of(g, w.partition, g.neighbors(v));
    case TwinKind::second_order: {
        if (!g.is_independent(g.neighbors(v)))
            return false;
        VertexSet seen;
        for (const auto& [u, blocks] : w.neighbor_partitions) {
            if (!g.adjacent(u, v) || static_cast<int>(blocks.size()) > w.level - 1
                || !is_module_partition_of(g, blocks, g.neighbors(u)))
                return false;
            seen.insert(u);
        }
        return seen == g.neighbors(v);
    }
    }
    return false;
}

int twin_color_cap(const Graph& g, int v)
{
    int cap = neighborhood_cap(g, v);
    if (const auto r = g.regularity()) {
        const int size = equal_neighborhood_class(g, v).size();
        cap = std::min(cap, std::max(1, *r + 2 - size));
    }
    if (g.is_independent(g.neighbors(v))) {
        int second = 1;
        for (int u : g.neighbors(v))
            second = std::max(second, neighborhood_cap(g, u));
        cap = std::min(cap, second);
    }
    return cap;
}

std::vector<int> twin_color_caps(const Graph& g)
{
    std::vector<int> caps(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        caps[v] = twin_color_cap(g, v);
    return caps;
}

int twin_grundy_upper_bound(const Graph& g)
{
    int bound = 0;
    for (int cap : twin_color_caps(g))
        bound = std::max(bound, cap);
    return bound;
}

CubicGraph::CubicGraph(int n, const std::vector<std::pair<int, int>>& edges)
{
    if (n < 0)
        throw GraphError("negative order");
    adj_.assign(static_cast<std::size_t>(n), {-1, -1, -1});
    std::vector<int> fill(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw GraphError("bad edge " + std::to_string(u) + "-" + std::to_string(v));
        if (fill[u] == 3 || fill[v] == 3)
            throw GraphError("degree above 3 at edge " + std::to_string(u) + "-"
                + std::to_string(v));
        adj_[u][fill[u]++] = v;
        adj_[v][fill[v]++] = u;
    }
    for (int v = 0; v < n; ++v) {
        if (fill[v] != 3)
            throw GraphError("vertex " + std::to_string(v) + " has degree "
                + std::to_string(fill[v]) + ", expected 3");
        std::sort(adj_[v].begin(), adj_[v].end());
        if (adj_[v][0] == adj_[v][1] || adj_[v][1] == adj_[v][2])
            throw GraphError("parallel edge at vertex " + std::to_string(v));
    }
}

CubicGraph::CubicGraph(const Graph& g) : CubicGraph(g.order(), g.edges()) {}

bool CubicGraph::adjacent(int u, int v) const
{
    const auto& a = adj_[u];
    return a[0] == v || a[1] == v || a[2] == v;
}

bool CubicGraph::is_connected() const
{
    if (adj_.empty())
        return true;
    std::vector<char> seen(adj_.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : adj_[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
    }
    return reached == adj_.size();
}

bool cubic_is_module_twin(const CubicGraph& g, int v)
{
    // Some u != v lies in all three neighbor lists, so N(u) = N(v).
    const auto& n = g.neighbors(v);
    for (int u : g.neighbors(n[0]))
        if (u != v && g.adjacent(u, n[1]) && g.adjacent(u, n[2]))
            return true;
    return false;
}

bool cubic_is_neighborhood_twin(const CubicGraph& g, int v)
{
    const auto& n = g.neighbors(v);
    return g.neighbors(n[0]) == g.neighbors(n[1]) || g.neighbors(n[0]) == g.neighbors(n[2])
        || g.neighbors(n[1]) == g.neighbors(n[2]);
}

bool cubic_is_second_order_twin(const CubicGraph& g, int v)
{
    const auto& n = g.neighbors(v);
    if (g.adjacent(n[0], n[1]) || g.adjacent(n[0], n[2]) || g.adjacent(n[1], n[2]))
        return false;
    return cubic_is_neighborhood_twin(g, n[0]) && cubic_is_neighborhood_twin(g, n[1])
        && cubic_is_neighborhood_twin(g, n[2]);
}

namespace {

bool is_k33(const CubicGraph& g)
{
    if (g.order() != 6)
        return false;
    const auto& side = g.neighbors(g.neighbors(0)[0]);
    for (int u : g.neighbors(0))
        if (g.neighbors(u) != side)
            return false;
    for (int w : side)
        if (g.neighbors(w) != g.neighbors(0))
            return false;
    return true;
}

bool every_vertex_is_3_twin(const CubicGraph& g)
{
    for (int v = 0; v < g.order(); ++v)
        if (!cubic_is_module_twin(g, v) && !cubic_is_neighborhood_twin(g, v)
            && !cubic_is_second_order_twin(g, v))
            return false;
    return true;
}

} // namespace

int cubic_grundy_linear(const CubicGraph& g)
{
    if (g.order() == 0 || !g.is_connected())
        throw GraphError("cubic classifier requires a connected cubic graph");
    if (is_k33(g))
        return 2;
    return every_vertex_is_3_twin(g) ? 3 : 4;
}

int cubic_grundy_linear(const Graph& g)
{
    return cubic_grundy_linear(CubicGraph(g));
}

bool f3_membership(const CubicGraph& g)
{
    return every_vertex_is_3_twin(g);
}

bool f3_membership(const Graph& g)
{
    return f3_membership(CubicGraph(g));
}

} // namespace grundylab
