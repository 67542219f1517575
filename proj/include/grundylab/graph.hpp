#pragma once

#include <grundylab/vertex_set.hpp>

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace grundylab {

using Edge = std::pair<int, int>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on at most 64 vertices. Row v of the adjacency
/// is the neighbor set N(v). Values are immutable once built; the
/// `with_*` members return modified copies.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges)
    {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }
    /// Rows must already be symmetric and irreflexive; validated.
    static Graph from_rows(std::vector<VertexSet> rows);

    int order() const { return static_cast<int>(rows_.size()); }
    VertexSet vertices() const { return VertexSet::range(order()); }
    VertexSet neighbors(int v) const { return rows_[v]; }
    std::span<const VertexSet> rows() const { return rows_; }
    int degree(int v) const { return rows_[v].size(); }
    bool adjacent(int u, int v) const { return rows_[u].contains(v); }

    int edge_count() const;
    std::vector<Edge> edges() const;
    int max_degree() const;
    int min_degree() const;
    /// The common degree when every vertex has the same degree.
    std::optional<int> regularity() const;
    bool is_regular() const { return regularity().has_value(); }
    bool is_independent(VertexSet s) const;

    Graph with_edge(int u, int v) const;
    Graph with_vertex(VertexSet neighbors) const;
    /// Vertices of `other` are appended with labels shifted by order().
    Graph disjoint_union(const Graph& other) const;
    /// Subgraph induced by `s`, relabelled 0..|s|-1 in increasing order.
    Graph induced(VertexSet s) const;
    /// Vertex v of this graph becomes vertex relabel[v] of the result.
    Graph relabelled(std::span<const int> relabel) const;

    bool operator==(const Graph&) const = default;

private:
    explicit Graph(std::vector<VertexSet> rows) : rows_(std::move(rows)) {}
    void check_vertex(int v) const;

    std::vector<VertexSet> rows_;
};

} // namespace grundylab
