#pragma once

#include <grundylab/graph.hpp>

#include <iosfwd>
#include <optional>
#include <vector>

namespace grundylab {

/// Length of a shortest cycle. Forests have infinite girth, which is a
/// separate state rather than a large integer.
class Girth {
public:
    static constexpr Girth infinite() { return Girth(); }
    static constexpr Girth of(int length) { return Girth(length); }

    constexpr bool is_finite() const { return length_.has_value(); }
    /// Precondition: is_finite().
    constexpr int length() const { return *length_; }

    constexpr bool operator==(const Girth&) const = default;

private:
    constexpr Girth() = default;
    constexpr explicit Girth(int length) : length_(length) {}

    std::optional<int> length_;
};

std::ostream& operator<<(std::ostream& out, Girth girth);

Girth girth(const Graph& g);

/// BFS distances from `source`; unreachable vertices get -1.
std::vector<int> distances_from(const Graph& g, int source);

bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);

/// Every vertex set of size `length` inducing exactly a cycle.
std::vector<VertexSet> induced_cycles(const Graph& g, int length);
bool has_induced_cycle(const Graph& g, int length);

/// Vertices at distance exactly 1 from `s`.
VertexSet open_neighborhood(const Graph& g, VertexSet s);

/// Induced cycles of the given length whose distance-1 vertex set is not
/// independent.
std::vector<VertexSet> neighbor_connected_induced_cycles(const Graph& g, int length);

/// Partition of `s` into classes of equal open neighborhood (each class is
/// an independent module). Blocks are ordered by smallest member.
std::vector<VertexSet> maximal_independent_module_partition(const Graph& g, VertexSet s);

/// Same vertex set; u ~ v iff 1 <= dist(u, v) <= k.
Graph power_graph(const Graph& g, int k);

/// True iff g is K_{a,b} with a, b >= 1.
bool is_complete_bipartite(const Graph& g);

} // namespace grundylab
