#pragma once

#include <grundylab/graph.hpp>

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace grundylab {

/// Named graphs with fixed labelings:
///   P<n>, C<n>, K<n>          path / cycle / complete graph on 0..n-1 in order
///   K<a>,<b>[,<c>...]         complete multipartite, parts are consecutive
///                             label ranges in the order given
///   K*3,3                     a=0, b=1, c=2, d=3, e=4, f=5 with edges
///                             ab ac cd ce bd be df ef (K_{3,3} minus af)
///   Petersen                  outer cycle 0..4, spokes i~i+5, inner
///                             pentagram 5+i ~ 5+(i+2)%5
///   prism                     triangles 012 and 345, rungs i~i+3
/// Throws GraphError on an unknown name or bad parameters.
Graph build_named(std::string_view name);

struct BuildScript;

struct BaseStep {
    std::string name;
};
struct UnionStep {
    std::shared_ptr<const BuildScript> other;
};
struct EdgeStep {
    int u = 0;
    int v = 0;
};
struct VertexStep {
    std::vector<int> neighbors;
};
using ScriptStep = std::variant<BaseStep, UnionStep, EdgeStep, VertexStep>;

/// Starts from the empty graph. A base step adds a disjoint copy of a base
/// graph, a union step a disjoint copy of another script's result; new
/// vertices get the next free labels.
struct BuildScript {
    std::vector<ScriptStep> steps;
};

/// The two recursive families: F3STAR has bases K2,3 and K*3,3 with
/// degree limit 2; GSTAR(r) has bases K_{r-k,k+2} (0 <= k <= (r-2)/2) with
/// degree limit r-1. Edge steps join two vertices of degree at most the
/// limit; vertex steps add a vertex adjacent to exactly 3 (F3STAR) or r
/// (GSTAR) vertices of degree at most the limit.
struct Family {
    enum class Kind { f3star, gstar };
    Kind kind = Kind::f3star;
    int r = 3;

    static Family f3star() { return {Kind::f3star, 3}; }
    static Family gstar(int r);

    int degree_limit() const { return r - 1; }
    bool allows_base(std::string_view name) const;
    std::vector<std::string> bases() const;
    std::string label() const;
};

/// A step broke a family rule. `step` is the path of 0-based step indices
/// from the outer script into nested unions.
class ScriptError : public GraphError {
public:
    ScriptError(std::vector<int> step, const std::string& what);
    const std::vector<int>& step() const { return step_; }

private:
    std::vector<int> step_;
};

struct ScriptResult {
    Graph graph;
    /// The result is r-regular, so it lies in F_3 / G_r and not only in the
    /// starred family.
    bool regular = false;
};

ScriptResult run_script(const BuildScript& script, const Family& family);

/// Line format: `base NAME`, `union NAME`, `union @PATH`, `union {` ...
/// `}`, `edge U V`, `vertex U V W ...`; `#` starts a comment. Relative
/// @PATHs resolve against `base_dir`. Throws GraphError with the line
/// number on malformed input.
BuildScript parse_script(std::string_view text, const std::filesystem::path& base_dir = {});
BuildScript load_script(const std::filesystem::path& file);
/// Inverse of parse_script; nested unions are written inline.
std::string serialize_script(const BuildScript& script);

/// Reproducible random script: a random base, then random family moves
/// (unions with small members, edges, vertices) while the order stays at
/// most max_n, finishing with edges and vertices that lower the degree
/// deficit when possible.
BuildScript random_script(const Family& family, int max_n, std::uint64_t seed);

struct FamilyMember {
    Graph graph;
    BuildScript script;
};

/// Closure of the family's bases under its rules, restricted to graphs on
/// at most max_n vertices, one member per isomorphism class (canonical
/// form, so max_n <= 16). Members are listed in discovery order.
std::vector<FamilyMember> explore_family(const Family& family, int max_n);

/// Connected cubic members of F3STAR on at most max_n <= 16 vertices,
/// sorted by order then canonical key.
std::vector<Graph> catalog_f3_cubic(int max_n);

/// The r-regular graph built from 2i copies of K_{parts} joined in the
/// alternating pattern. Vertex label = (copy, part, index) flattened.
/// Requires i >= 2, 3 <= k <= r+1, parts.size() == k-1, parts positive
/// and summing to r.
Graph build_G_rki(int r, int k, const std::vector<int>& parts, int i);

/// The parts vector used when only (r, k) is given: k-1 near-equal parts,
/// smaller parts first.
std::vector<int> default_parts(int r, int k);

} // namespace grundylab
