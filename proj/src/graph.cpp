#include <grundylab/graph.hpp>

#include <algorithm>
#include <string>

namespace grundylab {

Graph::Graph(int n)
{
    if (n < 0 || n > kMaxVertices)
        throw GraphError("graph order " + std::to_string(n) + " outside [0, 64]");
    rows_.assign(static_cast<std::size_t>(n), VertexSet{});
}

Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v)
            throw GraphError("self-loop at vertex " + std::to_string(u));
        g.rows_[u].insert(v);
        g.rows_[v].insert(u);
    }
    return g;
}

Graph Graph::from_rows(std::vector<VertexSet> rows)
{
    if (rows.size() > kMaxVertices)
        throw GraphError("graph order exceeds 64");
    const auto all = VertexSet::range(static_cast<int>(rows.size()));
    for (int v = 0; v < static_cast<int>(rows.size()); ++v) {
        if (!rows[v].is_subset_of(all))
            throw GraphError("neighbor index out of range at vertex " + std::to_string(v));
        if (rows[v].contains(v))
            throw GraphError("self-loop at vertex " + std::to_string(v));
        for (int u : rows[v])
            if (!rows[u].contains(v))
                throw GraphError("asymmetric adjacency between " + std::to_string(u) + " and "
                    + std::to_string(v));
    }
    return Graph(std::move(rows));
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= order())
        throw GraphError("vertex " + std::to_string(v) + " out of range for order "
            + std::to_string(order()));
}

int Graph::edge_count() const
{
    int twice = 0;
    for (auto row : rows_)
        twice += row.size();
    return twice / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u)
        for (int v : rows_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

int Graph::max_degree() const
{
    int best = 0;
    for (auto row : rows_)
        best = std::max(best, row.size());
    return best;
}

int Graph::min_degree() const
{
    if (rows_.empty())
        return 0;
    int best = kMaxVertices;
    for (auto row : rows_)
        best = std::min(best, row.size());
    return best;
}

std::optional<int> Graph::regularity() const
{
    if (rows_.empty())
        return 0;
    const int d = rows_.front().size();
    for (auto row : rows_)
        if (row.size() != d)
            return std::nullopt;
    return d;
}

bool Graph::is_independent(VertexSet s) const
{
    for (int v : s)
        if (rows_[v].intersects(s))
            return false;
    return true;
}

Graph Graph::with_edge(int u, int v) const
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw GraphError("self-loop at vertex " + std::to_string(u));
    Graph g = *this;
    g.rows_[u].insert(v);
    g.rows_[v].insert(u);
    return g;
}

Graph Graph::with_vertex(VertexSet neighbors) const
{
    if (order() == kMaxVertices)
        throw GraphError("graph order would exceed 64");
    if (!neighbors.is_subset_of(vertices()))
        throw GraphError("new vertex attached to a nonexistent vertex");
    Graph g = *this;
    const int x = order();
    for (int u : neighbors)
        g.rows_[u].insert(x);
    g.rows_.push_back(neighbors);
    return g;
}

Graph Graph::disjoint_union(const Graph& other) const
{
    if (order() + other.order() > kMaxVertices)
        throw GraphError("disjoint union would exceed 64 vertices");
    Graph g = *this;
    const int shift = order();
    for (auto row : other.rows_)
        g.rows_.push_back(VertexSet(row.bits() << shift));
    return g;
}

Graph Graph::induced(VertexSet s) const
{
    std::vector<int> index(rows_.size(), -1);
    int next = 0;
    for (int v : s) {
        check_vertex(v);
        index[v] = next++;
    }
    Graph g(next);
    for (int v : s)
        for (int u : rows_[v] & s)
            g.rows_[index[v]].insert(index[u]);
    return g;
}

Graph Graph::relabelled(std::span<const int> relabel) const
{
    if (static_cast<int>(relabel.size()) != order())
        throw GraphError("relabelling has wrong length");
    VertexSet seen;
    for (int x : relabel) {
        if (x < 0 || x >= order() || seen.contains(x))
            throw GraphError("relabelling is not a permutation");
        seen.insert(x);
    }
    Graph g(order());
    for (int v = 0; v < order(); ++v)
        for (int u : rows_[v])
            g.rows_[relabel[v]].insert(relabel[u]);
    return g;
}

} // namespace grundylab
