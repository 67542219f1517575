#pragma once

#include <grundylab/graph.hpp>

#include <vector>

namespace grundylab {

inline constexpr int kMaxRegularEnumerationOrder = 14;
inline constexpr int kMaxGraphEnumerationOrder = 9;

/// One representative per isomorphism class of r-regular graphs on n
/// vertices, in canonical form, sorted by canonical key. Requires
/// 0 <= r < n <= 14; odd r*n yields an empty list.
std::vector<Graph> enumerate_regular_graphs(int r, int n, bool connected_only);

/// One representative per isomorphism class of graphs on exactly n
/// vertices (n <= 9), in canonical form, sorted by canonical key.
std::vector<Graph> enumerate_graphs(int n, bool connected_only);

/// Concatenation of enumerate_graphs(m, connected_only) for m = 1..max_n.
std::vector<Graph> enumerate_graphs_up_to(int max_n, bool connected_only);

} // namespace grundylab
