#pragma once

#include <grundylab/graph.hpp>

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace grundylab {

inline constexpr int kCanonicalMaxOrder = 16;

/// Serialization of a fixed representative of an isomorphism class.
/// Two graphs have equal keys iff they are isomorphic.
struct CanonicalKey {
    std::string bytes;

    auto operator<=>(const CanonicalKey&) const = default;
};

struct CanonicalLabeling {
    /// Vertex v of the input becomes vertex relabel[v] of the representative.
    std::vector<int> relabel;
    CanonicalKey key;
};

/// Throws GraphError when g.order() > kCanonicalMaxOrder.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalKey canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

} // namespace grundylab

template <>
struct std::hash<grundylab::CanonicalKey> {
    std::size_t operator()(const grundylab::CanonicalKey& key) const noexcept
    {
        return std::hash<std::string>{}(key.bytes);
    }
};
