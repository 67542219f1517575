#include <grundylab/enumerate.hpp>

#include <grundylab/canonical.hpp>
#include <grundylab/structure.hpp>

#include <algorithm>
#include <map>
#include <string>

namespace grundylab {

namespace {

// Row-by-row backtracking: vertex i picks its missing neighbors among
// higher vertices. Higher vertices whose rows are identical so far are
// interchangeable, so only lowest-index prefixes of each class are tried.
// Remaining duplicates are removed by canonical form.
class RegularFiller {
public:
    RegularFiller(int r, int n, bool connected_only)
        : r_(r)
        , n_(n)
        , connected_only_(connected_only)
        , rows_(static_cast<std::size_t>(n))
    {
    }

    std::map<CanonicalKey, Graph> run()
    {
        fill(0);
        return std::move(found_);
    }

private:
    int deficit(int v) const { return r_ - rows_[v].size(); }

    bool closes_early(int i) const
    {
        // The component of vertex 0 is complete and misses some vertex.
        VertexSet comp = VertexSet::singleton(0);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier)
                next |= rows_[v];
            frontier = next - comp;
            comp |= frontier;
        }
        if (comp.size() == n_)
            return false;
        for (int v : comp)
            if (v > i || deficit(v) > 0)
                return false;
        return true;
    }

    bool feasible(int i) const
    {
        // Every later vertex must still be able to reach degree r.
        VertexSet open;
        int total = 0;
        for (int j = i + 1; j < n_; ++j)
            if (deficit(j) > 0) {
                open.insert(j);
                total += deficit(j);
            }
        if (total % 2 != 0)
            return false;
        for (int j : open)
            if (deficit(j) > (open - rows_[j] - VertexSet::singleton(j)).size())
                return false;
        return true;
    }

    void fill(int i)
    {
        if (i == n_) {
            Graph g = Graph::from_rows(rows_);
            if (connected_only_ && !is_connected(g))
                return;
            auto labeling = canonical_labeling(g);
            found_.try_emplace(labeling.key, g.relabelled(labeling.relabel));
            return;
        }
        const int need = deficit(i);
        if (need < 0)
            return;
        // Classes of candidates with identical rows, in index order.
        std::vector<std::vector<int>> classes;
        std::vector<VertexSet> class_rows;
        for (int j = i + 1; j < n_; ++j) {
            if (deficit(j) <= 0)
                continue;
            auto it = std::find(class_rows.begin(), class_rows.end(), rows_[j]);
            if (it == class_rows.end()) {
                class_rows.push_back(rows_[j]);
                classes.push_back({j});
            } else {
                classes[static_cast<std::size_t>(it - class_rows.begin())].push_back(j);
            }
        }
        choose(i, need, classes, 0);
    }

    void choose(int i, int need, const std::vector<std::vector<int>>& classes, std::size_t c)
    {
        if (need == 0) {
            if (!feasible(i))
                return;
            if (connected_only_ && closes_early(i))
                return;
            fill(i + 1);
            return;
        }
        if (c == classes.size())
            return;
        int remaining = 0;
        for (std::size_t d = c; d < classes.size(); ++d)
            remaining += static_cast<int>(classes[d].size());
        if (remaining < need)
            return;
        const auto& members = classes[c];
        const int take_max = std::min<int>(need, static_cast<int>(members.size()));
        for (int take = take_max; take >= 0; --take) {
            for (int t = 0; t < take; ++t) {
                rows_[i].insert(members[t]);
                rows_[members[t]].insert(i);
            }
            choose(i, need - take, classes, c + 1);
            for (int t = 0; t < take; ++t) {
                rows_[i].erase(members[t]);
                rows_[members[t]].erase(i);
            }
        }
    }

    int r_;
    int n_;
    bool connected_only_;
    std::vector<VertexSet> rows_;
    std::map<CanonicalKey, Graph> found_;
};

std::vector<Graph> values(std::map<CanonicalKey, Graph>&& by_key)
{
    std::vector<Graph> out;
    out.reserve(by_key.size());
    for (auto& [key, g] : by_key)
        out.push_back(std::move(g));
    return out;
}

} // namespace

std::vector<Graph> enumerate_regular_graphs(int r, int n, bool connected_only)
{
    if (n < 1 || n > kMaxRegularEnumerationOrder || r < 0 || r >= n)
        throw GraphError("regular enumeration needs 0 <= r < n <= "
            + std::to_string(kMaxRegularEnumerationOrder) + ", got r=" + std::to_string(r)
            + " n=" + std::to_string(n));
    if ((r * n) % 2 != 0)
        return {};
    return values(RegularFiller(r, n, connected_only).run());
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only)
{
    if (n < 0 || n > kMaxGraphEnumerationOrder)
        throw GraphError("graph enumeration supports 0 <= n <= "
            + std::to_string(kMaxGraphEnumerationOrder) + ", got " + std::to_string(n));
    std::vector<Graph> level{Graph(0)};
    for (int m = 1; m <= n; ++m) {
        std::map<CanonicalKey, Graph> next;
        const std::uint64_t subsets = std::uint64_t{1} << (m - 1);
        for (const auto& g : level) {
            for (std::uint64_t s = 0; s < subsets; ++s) {
                Graph h = g.with_vertex(VertexSet(s));
                auto labeling = canonical_labeling(h);
                next.try_emplace(labeling.key, h.relabelled(labeling.relabel));
            }
        }
        level = values(std::move(next));
    }
    if (connected_only)
        std::erase_if(level, [](const Graph& g) { return !is_connected(g); });
    return level;
}

std::vector<Graph> enumerate_graphs_up_to(int max_n, bool connected_only)
{
    std::vector<Graph> out;
    for (int m = 1; m <= max_n; ++m) {
        auto level = enumerate_graphs(m, connected_only);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

} // namespace grundylab
