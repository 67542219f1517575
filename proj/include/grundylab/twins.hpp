#pragma once

#include <grundylab/graph.hpp>

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace grundylab {

/// The three structural conditions that bound the color a vertex can
/// receive in any Grundy coloring:
///  - module:       v lies in an independent module of size r+2-l (r-regular g);
///  - neighborhood: N(v) splits into at most l-1 independent modules;
///  - second_order: N(v) is independent and each neighbor is a
///                  neighborhood-twin at level l.
enum class TwinKind { module = 0, neighborhood = 1, second_order = 2 };

struct TwinWitness {
    TwinKind kind = TwinKind::neighborhood;
    int level = 0;
    /// module: the independent module containing v.
    VertexSet module;
    /// neighborhood: the partition of N(v).
    std::vector<VertexSet> partition;
    /// second_order: each neighbor with the partition of its neighborhood.
    std::vector<std::pair<int, std::vector<VertexSet>>> neighbor_partitions;
};

/// Throws GraphError for TwinKind::module on a non-regular graph.
std::optional<TwinWitness> is_twin_vertex(const Graph& g, int v, TwinKind kind, int level);

/// Re-checks a witness against the definitions, independently of how it
/// was produced.
bool witness_is_valid(const Graph& g, int v, const TwinWitness& witness);

/// Least l such that v is an (i, l)-twin-vertex for an admissible kind i
/// (module only when g is regular). Never exceeds deg(v) + 1.
int twin_color_cap(const Graph& g, int v);
std::vector<int> twin_color_caps(const Graph& g);

/// Least l such that every vertex is an (i, l)-twin-vertex; an upper bound
/// on the Grundy number. Returns 0 for the empty graph.
int twin_grundy_upper_bound(const Graph& g);

/// Simple 3-regular graph of any order as sorted adjacency triples.
class CubicGraph {
public:
    /// Throws GraphError unless the edges form a simple cubic graph.
    CubicGraph(int n, const std::vector<std::pair<int, int>>& edges);
    /// Throws GraphError unless g is cubic.
    explicit CubicGraph(const Graph& g);

    int order() const { return static_cast<int>(adj_.size()); }
    const std::array<int, 3>& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const;
    bool is_connected() const;

private:
    std::vector<std::array<int, 3>> adj_;
};

/// Constant-work twin tests for one vertex of a cubic graph.
bool cubic_is_module_twin(const CubicGraph& g, int v);
bool cubic_is_neighborhood_twin(const CubicGraph& g, int v);
bool cubic_is_second_order_twin(const CubicGraph& g, int v);

/// Grundy number of a connected cubic graph in linear time: 2 for K_{3,3},
/// 3 when every vertex is an (i,3)-twin-vertex, 4 otherwise. Throws
/// GraphError on disconnected or non-cubic input.
int cubic_grundy_linear(const CubicGraph& g);
int cubic_grundy_linear(const Graph& g);

/// Every vertex of the (possibly disconnected) cubic graph is an
/// (i,3)-twin-vertex, which characterizes the recursive family F_3.
bool f3_membership(const CubicGraph& g);
bool f3_membership(const Graph& g);

} // namespace grundylab
