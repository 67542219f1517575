#pragma once

#include <grundylab/graph.hpp>

#include <vector>

namespace grundylab {

/// Per-vertex colors in {0, 1, ..., k}; 0 marks an uncolored vertex.
struct Coloring {
    std::vector<int> colors;

    /// Largest color in use.
    int num_colors() const;
    bool is_total() const;
    /// Every color in {1..num_colors()} occurs.
    bool is_surjective() const;

    bool operator==(const Coloring&) const = default;
};

/// A vertex ordering v_1, ..., v_n for the first-fit algorithm.
struct Ordering {
    std::vector<int> perm;
};

/// First-fit coloring along `order`: each vertex takes the least color not
/// used by its earlier neighbors. Throws GraphError unless `order` is a
/// permutation of V(g).
Coloring greedy_color(const Graph& g, const Ordering& order);

/// Proper on colored vertices and every colored vertex of color i sees,
/// among colored vertices, each color j < i. Without `subset_mode` the
/// coloring must also be total.
bool validate_grundy(const Graph& g, const Coloring& c, bool subset_mode);

/// Total, surjective, proper, and each color class holds a vertex adjacent
/// to all smaller colors. Returns false when the coloring is not total or
/// not surjective.
bool validate_partial_grundy(const Graph& g, const Coloring& c);

/// Orders colored vertices by color, then the rest. Running greedy_color on
/// it reproduces a valid Grundy partial coloring on its colored vertices.
Ordering ordering_from_coloring(const Coloring& c);

/// Extends a Grundy coloring of a subset to a Grundy coloring of g with
/// the same colors on the subset.
Coloring extend_grundy_coloring(const Graph& g, const Coloring& partial);

} // namespace grundylab
