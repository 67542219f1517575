#include <grundylab/solver.hpp>

#include <grundylab/twins.hpp>

#include <algorithm>
#include <climits>
#include <numeric>
#include <random>
#include <string>

namespace grundylab {

BudgetExhausted::BudgetExhausted(const SolveResult& partial)
    : std::runtime_error("search budget exhausted after " + std::to_string(partial.nodes)
          + " nodes (bounds " + std::to_string(partial.lower_bound) + ".."
          + std::to_string(partial.upper_bound) + ")")
    , result_(partial)
{
}

int grundy_oracle(const Graph& g)
{
    const int n = g.order();
    if (n > kOracleMaxOrder)
        throw GraphError("factorial oracle supports at most " + std::to_string(kOracleMaxOrder)
            + " vertices");
    Ordering order;
    order.perm.resize(static_cast<std::size_t>(n));
    std::iota(order.perm.begin(), order.perm.end(), 0);
    const int ceiling = g.max_degree() + 1;
    int best = 0;
    do {
        best = std::max(best, greedy_color(g, order).num_colors());
        if (best == ceiling)
            break;
    } while (std::next_permutation(order.perm.begin(), order.perm.end()));
    return best;
}

std::vector<int> grundy_color_caps(const Graph& g)
{
    auto caps = twin_color_caps(g);
    std::vector<int> around;
    for (bool changed = true; changed;) {
        changed = false;
        for (int v = 0; v < g.order(); ++v) {
            around.clear();
            for (int u : g.neighbors(v))
                around.push_back(caps[u]);
            std::sort(around.begin(), around.end(), std::greater<>());
            // Largest m with around[i] >= m - i for all i < m.
            int m = static_cast<int>(around.size());
            for (; m > 0; --m) {
                bool fits = true;
                for (int i = 0; i < m && fits; ++i)
                    fits = around[i] >= m - i;
                if (fits)
                    break;
            }
            if (m + 1 < caps[v]) {
                caps[v] = m + 1;
                changed = true;
            }
        }
    }
    return caps;
}

namespace {

struct OutOfBudget {};

// Vertices interchangeable with v by a transposition automorphism.
std::vector<VertexSet> twin_masks(const Graph& g)
{
    std::vector<VertexSet> masks(static_cast<std::size_t>(g.order()));
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v) {
            if (u == v)
                continue;
            const bool open = g.neighbors(u) == g.neighbors(v);
            const bool closed = g.adjacent(u, v)
                && (g.neighbors(u) | VertexSet::singleton(u)) == (g.neighbors(v) | VertexSet::singleton(v));
            if (open || closed)
                masks[u].insert(v);
        }
    return masks;
}

class ColorState {
public:
    ColorState(const Graph& g, std::uint64_t limit)
        : g_(g)
        , twins_(twin_masks(g))
        , color_(static_cast<std::size_t>(g.order()), 0)
        , class_(static_cast<std::size_t>(g.max_degree()) + 3)
        , uncolored_(g.vertices())
        , limit_(limit)
    {
    }

    std::uint64_t nodes() const { return nodes_; }
    Coloring coloring() const { return Coloring{color_}; }

protected:
    void tick()
    {
        if (++nodes_ > limit_)
            throw OutOfBudget{};
    }
    void assign(int v, int c)
    {
        color_[v] = c;
        class_[c].insert(v);
        uncolored_.erase(v);
        colored_.insert(v);
    }
    void unassign(int v)
    {
        class_[color_[v]].erase(v);
        color_[v] = 0;
        uncolored_.insert(v);
        colored_.erase(v);
    }
    VertexSet blocked(int c) const
    {
        VertexSet out;
        for (int z : class_[c])
            out |= g_.neighbors(z);
        return out;
    }
    bool sees(int v, int c) const { return g_.neighbors(v).intersects(class_[c]); }
    bool twin_already_tried(int v, VertexSet tried) const { return tried.intersects(twins_[v]); }

    const Graph& g_;
    std::vector<VertexSet> twins_;
    std::vector<int> color_;
    std::vector<VertexSet> class_;
    VertexSet uncolored_;
    VertexSet colored_;

private:
    std::uint64_t limit_;
    std::uint64_t nodes_ = 0;
};

// Decides whether some vertex can take color k in a Grundy coloring by
// growing a Grundy partial coloring: every colored vertex of color c is
// owed neighbors of colors 1..c-1, and each owed color is supplied by
// coloring an uncolored neighbor. The most constrained debt is settled
// first.
class GrundySearch : public ColorState {
public:
    GrundySearch(const Graph& g, std::vector<int> caps, std::uint64_t limit)
        : ColorState(g, limit)
        , caps_(std::move(caps))
        , able_(class_.size())
    {
        for (int v = 0; v < g.order(); ++v)
            for (int c = 1; c <= caps_[v] && c < static_cast<int>(able_.size()); ++c)
                able_[c].insert(v);
        top_order_.resize(static_cast<std::size_t>(g.order()));
        std::iota(top_order_.begin(), top_order_.end(), 0);
        std::stable_sort(top_order_.begin(), top_order_.end(), [&](int a, int b) {
            return std::pair(caps_[a], g.degree(a)) > std::pair(caps_[b], g.degree(b));
        });
    }

    bool decide(int k)
    {
        if (k >= static_cast<int>(able_.size()))
            return false;
        VertexSet tried;
        for (int v : top_order_) {
            if (caps_[v] < k || twin_already_tried(v, tried))
                continue;
            tried.insert(v);
            assign(v, k);
            if (settle())
                return true;
            unassign(v);
        }
        return false;
    }

private:
    bool settle()
    {
        tick();
        int best_color = 0;
        int best_size = INT_MAX;
        VertexSet best_candidates;
        for (int x : colored_) {
            const int c = color_[x];
            const VertexSet open = g_.neighbors(x) & uncolored_;
            VertexSet supply;
            int owed = 0;
            for (int j = c - 1; j >= 1; --j) {
                if (sees(x, j))
                    continue;
                ++owed;
                const VertexSet candidates = (open & able_[j]) - blocked(j);
                const int size = candidates.size();
                if (size == 0)
                    return false;
                supply |= candidates;
                if (size < best_size) {
                    best_size = size;
                    best_color = j;
                    best_candidates = candidates;
                }
            }
            if (owed > supply.size())
                return false;
        }
        if (best_color == 0)
            return true;
        VertexSet tried;
        for (int y : best_candidates) {
            if (twin_already_tried(y, tried))
                continue;
            tried.insert(y);
            assign(y, best_color);
            if (settle())
                return true;
            unassign(y);
        }
        return false;
    }

    std::vector<int> caps_;
    std::vector<VertexSet> able_;
    std::vector<int> top_order_;
};

// Searches a proper k-coloring in which each class has a Grundy vertex:
// witnesses are fixed from the top class down together with the neighbors
// they need, then the remaining vertices are colored properly.
class PartialGrundySearch : public ColorState {
public:
    using ColorState::ColorState;

    bool decide(int k)
    {
        k_ = k;
        if (k >= static_cast<int>(class_.size()))
            return false;
        return choose_witness(k);
    }

private:
    bool choose_witness(int i)
    {
        if (i == 0)
            return complete();
        for (int w : class_[i])
            if (settle_witness(w, i))
                return true;
        VertexSet tried;
        for (int w : uncolored_ - blocked(i)) {
            if (g_.degree(w) < i - 1 || twin_already_tried(w, tried))
                continue;
            tried.insert(w);
            assign(w, i);
            if (settle_witness(w, i))
                return true;
            unassign(w);
        }
        return false;
    }

    bool some_vertex_stuck() const
    {
        for (int v : uncolored_) {
            int free = 0;
            for (int c = 1; c <= k_ && free == 0; ++c)
                if (!sees(v, c))
                    ++free;
            if (free == 0)
                return true;
        }
        return false;
    }

    bool settle_witness(int w, int i)
    {
        tick();
        if (some_vertex_stuck())
            return false;
        int best_color = 0;
        int best_size = INT_MAX;
        VertexSet best_candidates;
        const VertexSet open = g_.neighbors(w) & uncolored_;
        for (int j = i - 1; j >= 1; --j) {
            if (sees(w, j))
                continue;
            const VertexSet candidates = open - blocked(j);
            if (candidates.empty())
                return false;
            if (candidates.size() < best_size) {
                best_size = candidates.size();
                best_color = j;
                best_candidates = candidates;
            }
        }
        if (best_color == 0)
            return choose_witness(i - 1);
        VertexSet tried;
        for (int y : best_candidates) {
            if (twin_already_tried(y, tried))
                continue;
            tried.insert(y);
            assign(y, best_color);
            if (settle_witness(w, i))
                return true;
            unassign(y);
        }
        return false;
    }

    bool complete()
    {
        tick();
        int pick = -1;
        int fewest = INT_MAX;
        for (int v : uncolored_) {
            int free = 0;
            for (int c = 1; c <= k_; ++c)
                if (!sees(v, c))
                    ++free;
            if (free < fewest) {
                fewest = free;
                pick = v;
            }
        }
        if (pick < 0)
            return true;
        for (int c = 1; c <= k_; ++c) {
            if (sees(pick, c))
                continue;
            assign(pick, c);
            if (complete())
                return true;
            unassign(pick);
        }
        return false;
    }

    int k_ = 0;
};

// Best first-fit result over a fixed family of orderings.
Coloring heuristic_grundy_coloring(const Graph& g)
{
    const int n = g.order();
    Ordering order;
    order.perm.resize(static_cast<std::size_t>(n));
    std::iota(order.perm.begin(), order.perm.end(), 0);
    Coloring best = greedy_color(g, order);
    auto consider = [&](const Ordering& o) {
        auto c = greedy_color(g, o);
        if (c.num_colors() > best.num_colors())
            best = std::move(c);
    };
    std::reverse(order.perm.begin(), order.perm.end());
    consider(order);
    std::stable_sort(order.perm.begin(), order.perm.end(),
        [&](int a, int b) { return g.degree(a) < g.degree(b); });
    consider(order);
    std::mt19937 rng(0x5eed);
    for (int round = 0; round < 32 && best.num_colors() <= g.max_degree(); ++round) {
        std::shuffle(order.perm.begin(), order.perm.end(), rng);
        consider(order);
    }
    return best;
}

} // namespace

SolveResult grundy_exact(const Graph& g, const SearchBudget& budget)
{
    SolveResult result;
    if (g.order() == 0) {
        result.value = 0;
        result.witness = Coloring{};
        return result;
    }
    auto caps = grundy_color_caps(g);
    result.upper_bound = *std::max_element(caps.begin(), caps.end());
    result.witness = heuristic_grundy_coloring(g);
    result.lower_bound = result.witness.num_colors();

    std::uint64_t used = 0;
    try {
        while (result.lower_bound < result.upper_bound) {
            const int k = result.lower_bound + 1;
            GrundySearch search(g, caps, budget.node_limit - used);
            const bool found = search.decide(k);
            used += search.nodes();
            if (found) {
                result.lower_bound = k;
                result.witness = extend_grundy_coloring(g, search.coloring());
            } else {
                result.upper_bound = k - 1;
            }
        }
    } catch (const OutOfBudget&) {
        result.status = SolveStatus::budget_exhausted;
        result.nodes = budget.node_limit;
        return result;
    }
    result.nodes = used;
    result.value = result.lower_bound;
    return result;
}

int grundy_number(const Graph& g, const SearchBudget& budget)
{
    auto result = grundy_exact(g, budget);
    if (!result.solved())
        throw BudgetExhausted(result);
    return *result.value;
}

SolveResult partial_grundy_exact(const Graph& g, const SearchBudget& budget)
{
    if (g.order() > kPartialGrundyMaxOrder)
        throw GraphError("partial Grundy search supports at most "
            + std::to_string(kPartialGrundyMaxOrder) + " vertices");
    SolveResult result;
    if (g.order() == 0) {
        result.value = 0;
        return result;
    }
    result.witness = heuristic_grundy_coloring(g);
    result.lower_bound = result.witness.num_colors();
    result.upper_bound = g.max_degree() + 1;
    std::uint64_t used = 0;
    try {
        for (int k = result.upper_bound; k > result.lower_bound; --k) {
            PartialGrundySearch search(g, budget.node_limit - used);
            if (search.decide(k)) {
                result.witness = search.coloring();
                result.lower_bound = k;
                used += search.nodes();
                break;
            }
            used += search.nodes();
            result.upper_bound = k - 1;
        }
    } catch (const OutOfBudget&) {
        result.status = SolveStatus::budget_exhausted;
        result.nodes = budget.node_limit;
        return result;
    }
    result.upper_bound = result.lower_bound;
    result.value = result.lower_bound;
    result.nodes = used;
    return result;
}

int partial_grundy_number(const Graph& g, const SearchBudget& budget)
{
    auto result = partial_grundy_exact(g, budget);
    if (!result.solved())
        throw BudgetExhausted(result);
    return *result.value;
}

} // namespace grundylab
