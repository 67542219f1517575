#pragma once

#include <grundylab/canonical.hpp>
#include <grundylab/coloring.hpp>
#include <grundylab/graph.hpp>

#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

namespace grundylab {

/// Restricts a catalog to atoms with bounded maximum degree and/or order.
/// Both bounds are inherited by the previous level with one less, because
/// each added layer raises every earlier degree and adds a vertex.
struct AtomLimits {
    std::optional<int> max_degree;
    std::optional<int> max_order;

    auto operator<=>(const AtomLimits&) const = default;
};

struct Atom {
    /// Canonical labeling.
    Graph graph;
    /// Grundy coloring read off the layers: the last layer has color 1,
    /// the root has color t.
    Coloring witness;
};

struct AtomCatalog {
    int t = 0;
    AtomLimits limits;
    std::map<CanonicalKey, Atom> atoms;
    /// Filled by minimal_atoms(); empty otherwise.
    std::map<CanonicalKey, Atom> minimal;

    int max_order() const;
};

/// Whether enumerate_atoms(t, limits) is inside the supported size range.
/// Unbounded catalogs are supported up to t = 4; deeper levels need an
/// order cap of at most 9. A degree cap alone does not make level 5
/// tractable (millions of layer choices over the 8-vertex 4-atoms). Levels
/// that the caps force to be empty (max_degree < t-1, max_order < t) are
/// always supported.
bool atom_limits_supported(int t, const AtomLimits& limits);

/// One canonical representative per isomorphism class of t-atoms within
/// `limits`. Throws GraphError for t < 1 or unsupported limits.
AtomCatalog enumerate_atoms(int t, const AtomLimits& limits = {});

/// Copy of `catalog` with `minimal` holding the atoms that contain no other
/// atom of the same level as an induced subgraph.
AtomCatalog minimal_atoms(const AtomCatalog& catalog);

/// Minimal t-atoms built directly: a minimal t-atom is a minimal
/// (t-1)-atom plus a dominating independent layer in which every vertex
/// has a private neighbor. Candidates are then filtered for minimality.
/// Same support range as enumerate_atoms.
std::map<CanonicalKey, Graph> generate_minimal_atoms(int t, const AtomLimits& limits = {});

/// True iff g is a t-atom: some independent set I with |I| <= |V - I|
/// dominates V - I and g - I is a (t-1)-atom. Exhaustive over independent
/// sets, so meant for the small graphs atoms are (n <= 2^(t-1)).
bool is_atom(const Graph& g, int t);

/// True iff `pattern` is isomorphic to an induced subgraph of `host`.
bool is_induced_subgraph(const Graph& pattern, const Graph& host);

/// True iff g contains an induced minimal t-atom, which holds exactly when
/// the Grundy number of g is at least t. Uses a catalog limited by the
/// order and maximum degree of g, cached across calls (thread safe).
bool has_induced_minimal_atom(const Graph& g, int t);

/// Catalog file: header line "t=<level> minimal=<0|1>", then one graph6
/// line per atom.
void write_atom_catalog(std::ostream& out, const AtomCatalog& catalog, bool minimal_only);

struct AtomCatalogFile {
    int t = 0;
    bool minimal = false;
    std::vector<Graph> graphs;
};

/// Throws Graph6Error / GraphError on a bad header or body line.
AtomCatalogFile read_atom_catalog(std::istream& in);

} // namespace grundylab
