#include <grundylab/atoms.hpp>

#include <grundylab/graph6.hpp>

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdio>
#include <istream>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>
#include <utility>

namespace grundylab {

int AtomCatalog::max_order() const
{
    int best = 0;
    for (const auto& [key, atom] : atoms)
        best = std::max(best, atom.graph.order());
    return best;
}

namespace {

constexpr int kUnbounded = INT_MAX / 4;

int degree_cap(const AtomLimits& l) { return l.max_degree.value_or(kUnbounded); }
int order_cap(const AtomLimits& l) { return std::min(l.max_order.value_or(kMaxVertices), kMaxVertices); }

AtomLimits previous_level(const AtomLimits& l)
{
    AtomLimits out;
    if (l.max_degree)
        out.max_degree = *l.max_degree - 1;
    if (l.max_order)
        out.max_order = *l.max_order - 1;
    return out;
}

bool forced_empty(int t, const AtomLimits& l)
{
    // A t-atom has Grundy number t, so at least t vertices and a vertex of
    // degree t-1.
    return (l.max_degree && *l.max_degree < t - 1) || (l.max_order && *l.max_order < t);
}

// Calls emit(layer) for every multiset of neighborhoods of new vertices
// that dominates `base` and respects the caps. `layer` lists the
// neighborhoods in nondecreasing mask order.
template <typename Emit>
class LayerEnumerator {
public:
    LayerEnumerator(const Graph& base, const AtomLimits& limits, bool private_neighbors, Emit emit)
        : base_(base)
        , private_(private_neighbors)
        , emit_(std::move(emit))
    {
        const int p = base.order();
        slots_ = std::min(p, order_cap(limits) - p);
        const int dcap = degree_cap(limits);
        room_.resize(static_cast<std::size_t>(p));
        for (int v = 0; v < p; ++v)
            room_[v] = dcap - base.degree(v);
        widest_ = std::min(p, dcap);
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << p); ++mask)
            if (std::popcount(mask) <= widest_)
                subsets_.push_back(VertexSet(mask));
        all_ = base.vertices();
    }

    void run()
    {
        if (slots_ < 1 || std::any_of(room_.begin(), room_.end(), [](int r) { return r < 1; }))
            return;
        extend(0, VertexSet{});
    }

private:
    void extend(std::size_t from, VertexSet covered)
    {
        if (covered == all_ && !layer_.empty() && (!private_ || every_member_private()))
            emit_(layer_);
        if (static_cast<int>(layer_.size()) == slots_)
            return;
        const int missing = (all_ - covered).size();
        const int left = slots_ - static_cast<int>(layer_.size());
        if (missing > left * widest_)
            return;
        for (std::size_t i = from; i < subsets_.size(); ++i) {
            const VertexSet s = subsets_[i];
            if (private_ && s.is_subset_of(covered))
                continue; // would own no private neighbor
            bool fits = true;
            for (int v : s)
                fits = fits && room_[v] > 0;
            if (!fits)
                continue;
            for (int v : s)
                --room_[v];
            layer_.push_back(s);
            extend(private_ ? i + 1 : i, covered | s);
            layer_.pop_back();
            for (int v : s)
                ++room_[v];
        }
    }

    bool every_member_private() const
    {
        for (std::size_t i = 0; i < layer_.size(); ++i) {
            VertexSet others;
            for (std::size_t j = 0; j < layer_.size(); ++j)
                if (j != i)
                    others |= layer_[j];
            if ((layer_[i] - others).empty())
                return false;
        }
        return true;
    }

    const Graph& base_;
    bool private_;
    Emit emit_;
    int slots_ = 0;
    int widest_ = 0;
    std::vector<int> room_;
    std::vector<VertexSet> subsets_;
    std::vector<VertexSet> layer_;
    VertexSet all_;
};

template <typename Emit>
void for_each_layer(const Graph& base, const AtomLimits& limits, bool private_neighbors, Emit emit)
{
    LayerEnumerator<Emit>(base, limits, private_neighbors, std::move(emit)).run();
}

Graph with_layer(const Graph& base, const std::vector<VertexSet>& layer)
{
    Graph g = base;
    for (VertexSet s : layer)
        g = g.with_vertex(s);
    return g;
}

Atom canonical_atom(const Graph& g, const Coloring& witness)
{
    const auto labeling = canonical_labeling(g);
    Atom atom{g.relabelled(labeling.relabel), Coloring{std::vector<int>(witness.colors.size())}};
    for (std::size_t v = 0; v < witness.colors.size(); ++v)
        atom.witness.colors[labeling.relabel[v]] = witness.colors[v];
    return atom;
}

std::vector<const Atom*> by_order(const std::map<CanonicalKey, Atom>& atoms)
{
    std::vector<const Atom*> out;
    for (const auto& [key, atom] : atoms)
        out.push_back(&atom);
    std::stable_sort(out.begin(), out.end(),
        [](const Atom* a, const Atom* b) { return a->graph.order() < b->graph.order(); });
    return out;
}

using CatalogCacheKey = std::pair<int, AtomLimits>;

std::mutex& cache_mutex()
{
    static std::mutex m;
    return m;
}

std::map<CatalogCacheKey, std::shared_ptr<const AtomCatalog>>& catalog_cache()
{
    static std::map<CatalogCacheKey, std::shared_ptr<const AtomCatalog>> cache;
    return cache;
}

std::map<CatalogCacheKey, std::shared_ptr<const std::vector<Graph>>>& minimal_cache()
{
    static std::map<CatalogCacheKey, std::shared_ptr<const std::vector<Graph>>> cache;
    return cache;
}

AtomCatalog build_level(int t, const AtomLimits& limits);

std::shared_ptr<const AtomCatalog> cached_level(int t, const AtomLimits& limits)
{
    const CatalogCacheKey key{t, limits};
    {
        std::lock_guard lock(cache_mutex());
        if (auto it = catalog_cache().find(key); it != catalog_cache().end())
            return it->second;
    }
    auto built = std::make_shared<const AtomCatalog>(build_level(t, limits));
    std::lock_guard lock(cache_mutex());
    return catalog_cache().emplace(key, std::move(built)).first->second;
}

AtomCatalog build_level(int t, const AtomLimits& limits)
{
    AtomCatalog out;
    out.t = t;
    out.limits = limits;
    if (forced_empty(t, limits))
        return out;
    if (t == 1) {
        out.atoms.emplace(canonical_form(Graph(1)), Atom{Graph(1), Coloring{{1}}});
        return out;
    }
    const auto below = cached_level(t - 1, previous_level(limits));
    for (const auto& [key, parent] : below->atoms) {
        for_each_layer(parent.graph, limits, false, [&](const std::vector<VertexSet>& layer) {
            Graph g = with_layer(parent.graph, layer);
            Coloring witness{parent.witness.colors};
            for (int& c : witness.colors)
                ++c;
            witness.colors.resize(static_cast<std::size_t>(g.order()), 1);
            const CanonicalKey k = canonical_form(g);
            if (!out.atoms.contains(k))
                out.atoms.emplace(k, canonical_atom(g, witness));
        });
    }
    return out;
}

void require_supported(int t, const AtomLimits& limits)
{
    if (!atom_limits_supported(t, limits))
        throw GraphError("atom level " + std::to_string(t)
            + " is outside the supported range for the given degree/order caps");
}

// Maps pattern vertices to host vertices in a fixed order, keeping
// adjacency and non-adjacency to everything mapped so far.
class InducedMatcher {
public:
    InducedMatcher(const Graph& pattern, const Graph& host) : pattern_(pattern), host_(host)
    {
        const int p = pattern.order();
        VertexSet placed;
        while (placed.size() < p) {
            int pick = -1;
            std::pair<int, int> best{-1, -1};
            for (int v : pattern.vertices() - placed) {
                const std::pair<int, int> score{
                    (pattern.neighbors(v) & placed).size(), pattern.degree(v)};
                if (score > best) {
                    best = score;
                    pick = v;
                }
            }
            order_.push_back(pick);
            placed.insert(pick);
        }
        image_.assign(static_cast<std::size_t>(p), -1);
    }

    bool run() { return place(0, VertexSet{}); }

private:
    bool place(std::size_t i, VertexSet used)
    {
        if (i == order_.size())
            return true;
        const int v = order_[i];
        VertexSet candidates = host_.vertices() - used;
        for (std::size_t j = 0; j < i; ++j) {
            const int w = order_[j];
            if (pattern_.adjacent(v, w))
                candidates &= host_.neighbors(image_[w]);
            else
                candidates -= host_.neighbors(image_[w]);
        }
        for (int h : candidates) {
            if (host_.degree(h) < pattern_.degree(v))
                continue;
            image_[v] = h;
            if (place(i + 1, used | VertexSet::singleton(h)))
                return true;
        }
        image_[v] = -1;
        return false;
    }

    const Graph& pattern_;
    const Graph& host_;
    std::vector<int> order_;
    std::vector<int> image_;
};

} // namespace

bool atom_limits_supported(int t, const AtomLimits& limits)
{
    if (t < 1)
        return false;
    if (forced_empty(t, limits) || t <= 4)
        return true;
    return limits.max_order && *limits.max_order <= 9;
}

AtomCatalog enumerate_atoms(int t, const AtomLimits& limits)
{
    require_supported(t, limits);
    return *cached_level(t, limits);
}

AtomCatalog minimal_atoms(const AtomCatalog& catalog)
{
    AtomCatalog out = catalog;
    out.minimal.clear();
    std::vector<const Atom*> accepted;
    for (const Atom* a : by_order(catalog.atoms)) {
        const bool contains_smaller = std::any_of(accepted.begin(), accepted.end(), [&](const Atom* b) {
            return b->graph.order() < a->graph.order() && is_induced_subgraph(b->graph, a->graph);
        });
        if (!contains_smaller) {
            accepted.push_back(a);
            out.minimal.emplace(canonical_form(a->graph), *a);
        }
    }
    return out;
}

std::map<CanonicalKey, Graph> generate_minimal_atoms(int t, const AtomLimits& limits)
{
    require_supported(t, limits);
    std::map<CanonicalKey, Graph> out;
    if (forced_empty(t, limits))
        return out;
    if (t == 1) {
        out.emplace(canonical_form(Graph(1)), Graph(1));
        return out;
    }
    std::map<CanonicalKey, Graph> candidates;
    for (const auto& [key, parent] : generate_minimal_atoms(t - 1, previous_level(limits)))
        for_each_layer(parent, limits, true, [&](const std::vector<VertexSet>& layer) {
            Graph g = with_layer(parent, layer);
            auto k = canonical_form(g);
            if (!candidates.contains(k))
                candidates.emplace(std::move(k), canonical_graph(g));
        });
    std::vector<const Graph*> sorted;
    for (const auto& [key, g] : candidates)
        sorted.push_back(&g);
    std::stable_sort(sorted.begin(), sorted.end(),
        [](const Graph* a, const Graph* b) { return a->order() < b->order(); });
    std::vector<const Graph*> accepted;
    for (const Graph* g : sorted) {
        const bool contains_smaller = std::any_of(accepted.begin(), accepted.end(), [&](const Graph* b) {
            return b->order() < g->order() && is_induced_subgraph(*b, *g);
        });
        if (!contains_smaller) {
            accepted.push_back(g);
            out.emplace(canonical_form(*g), *g);
        }
    }
    return out;
}

namespace {

bool peel_layer(const Graph& g, int t, VertexSet layer, VertexSet candidates)
{
    // `layer` grows as an independent set; every completion is tried.
    const VertexSet rest = g.vertices() - layer;
    if (!layer.empty() && layer.size() <= rest.size()) {
        bool dominated = true;
        for (int v : rest)
            dominated = dominated && g.neighbors(v).intersects(layer);
        if (dominated && is_atom(g.induced(rest), t - 1))
            return true;
    }
    for (int v : candidates) {
        candidates.erase(v);
        if (peel_layer(g, t, layer | VertexSet::singleton(v), candidates - g.neighbors(v)))
            return true;
    }
    return false;
}

} // namespace

bool is_atom(const Graph& g, int t)
{
    if (t < 1)
        return false;
    if (t == 1)
        return g.order() == 1;
    if (g.order() < t || g.order() > (1 << std::min(t - 1, 20)) || g.max_degree() < t - 1)
        return false;
    return peel_layer(g, t, VertexSet{}, g.vertices());
}

bool is_induced_subgraph(const Graph& pattern, const Graph& host)
{
    if (pattern.order() > host.order() || pattern.edge_count() > host.edge_count())
        return false;
    return InducedMatcher(pattern, host).run();
}

bool has_induced_minimal_atom(const Graph& g, int t)
{
    if (t <= 0)
        return true;
    if (g.order() == 0)
        return false;
    if (t > g.max_degree() + 1)
        return false;
    const AtomLimits limits{g.max_degree(), g.order()};
    require_supported(t, limits);
    const CatalogCacheKey key{t, limits};
    std::shared_ptr<const std::vector<Graph>> patterns;
    {
        std::lock_guard lock(cache_mutex());
        if (auto it = minimal_cache().find(key); it != minimal_cache().end())
            patterns = it->second;
    }
    if (!patterns) {
        auto list = std::make_shared<std::vector<Graph>>();
        for (const auto& [k, atom] : minimal_atoms(*cached_level(t, limits)).minimal)
            list->push_back(atom.graph);
        std::lock_guard lock(cache_mutex());
        patterns = minimal_cache().emplace(key, std::move(list)).first->second;
    }
    return std::any_of(patterns->begin(), patterns->end(),
        [&](const Graph& a) { return is_induced_subgraph(a, g); });
}

void write_atom_catalog(std::ostream& out, const AtomCatalog& catalog, bool minimal_only)
{
    out << "t=" << catalog.t << " minimal=" << (minimal_only ? 1 : 0) << '\n';
    for (const auto& [key, atom] : minimal_only ? catalog.minimal : catalog.atoms)
        out << write_graph6(atom.graph) << '\n';
}

AtomCatalogFile read_atom_catalog(std::istream& in)
{
    std::string header;
    if (!std::getline(in, header))
        throw GraphError("atom catalog: missing header");
    AtomCatalogFile file;
    int minimal = -1;
    char tail = 0;
    if (std::sscanf(header.c_str(), "t=%d minimal=%d%c", &file.t, &minimal, &tail) != 2
        || (minimal != 0 && minimal != 1) || file.t < 1)
        throw GraphError("atom catalog: bad header '" + header + "'");
    file.minimal = minimal == 1;
    file.graphs = read_graph6_list(in);
    return file;
}

} // namespace grundylab
