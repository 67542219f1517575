#include <grundylab/structure.hpp>

#include <algorithm>
#include <ostream>

namespace grundylab {

std::ostream& operator<<(std::ostream& out, Girth girth)
{
    if (girth.is_finite())
        return out << girth.length();
    return out << "inf";
}

std::vector<int> distances_from(const Graph& g, int source)
{
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    dist[source] = 0;
    VertexSet frontier = VertexSet::singleton(source);
    VertexSet seen = frontier;
    for (int d = 1; !frontier.empty(); ++d) {
        VertexSet next;
        for (int v : frontier)
            next |= g.neighbors(v);
        next -= seen;
        for (int v : next)
            dist[v] = d;
        seen |= next;
        frontier = next;
    }
    return dist;
}

Girth girth(const Graph& g)
{
    const int n = g.order();
    int best = n + 1;
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n));
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        dist[root] = 0;
        parent[root] = -1;
        queue.push_back(root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            if (2 * dist[u] + 1 >= best)
                break;
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (parent[u] != w) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best <= n ? Girth::of(best) : Girth::infinite();
}

std::vector<VertexSet> connected_components(const Graph& g)
{
    std::vector<VertexSet> out;
    VertexSet left = g.vertices();
    while (!left.empty()) {
        VertexSet comp = VertexSet::singleton(left.min());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier)
                next |= g.neighbors(v);
            frontier = next - comp;
            comp |= frontier;
        }
        out.push_back(comp);
        left -= comp;
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return g.order() <= 1 || connected_components(g).size() == 1;
}

VertexSet open_neighborhood(const Graph& g, VertexSet s)
{
    VertexSet out;
    for (int v : s)
        out |= g.neighbors(v);
    return out - s;
}

namespace {

// Induced cycles with minimum vertex path[0], second vertex below the last
// one so that each cycle is produced once. `interior` collects N(p_1..p_{m-2}).
class CycleSearch {
public:
    CycleSearch(const Graph& g, int length, bool stop_at_first)
        : g_(g)
        , length_(length)
        , stop_(stop_at_first)
    {
    }

    std::vector<VertexSet> run()
    {
        if (length_ < 3)
            return {};
        path_.resize(static_cast<std::size_t>(length_));
        for (int s = 0; s < g_.order() && !(stop_ && !found_.empty()); ++s) {
            path_[0] = s;
            const VertexSet low = VertexSet::range(s + 1);
            for (int p1 : g_.neighbors(s) - low) {
                path_[1] = p1;
                extend(2, VertexSet::singleton(s) | VertexSet::singleton(p1), VertexSet{}, low);
                if (stop_ && !found_.empty())
                    break;
            }
        }
        return found_;
    }

private:
    void extend(int pos, VertexSet on_path, VertexSet interior, VertexSet low)
    {
        const int s = path_[0];
        const int last = path_[pos - 1];
        VertexSet cand = g_.neighbors(last) - interior - on_path - low;
        if (pos == length_ - 1) {
            cand &= g_.neighbors(s);
            for (int x : cand) {
                if (x < path_[1])
                    continue;
                found_.push_back(on_path | VertexSet::singleton(x));
                if (stop_)
                    return;
            }
            return;
        }
        cand -= g_.neighbors(s);
        const VertexSet next_interior = interior | g_.neighbors(last);
        for (int x : cand) {
            path_[pos] = x;
            extend(pos + 1, on_path | VertexSet::singleton(x), next_interior, low);
            if (stop_ && !found_.empty())
                return;
        }
    }

    const Graph& g_;
    int length_;
    bool stop_;
    std::vector<int> path_;
    std::vector<VertexSet> found_;
};

} // namespace

std::vector<VertexSet> induced_cycles(const Graph& g, int length)
{
    return CycleSearch(g, length, false).run();
}

bool has_induced_cycle(const Graph& g, int length)
{
    return !CycleSearch(g, length, true).run().empty();
}

std::vector<VertexSet> neighbor_connected_induced_cycles(const Graph& g, int length)
{
    std::vector<VertexSet> out;
    for (VertexSet c : induced_cycles(g, length))
        if (!g.is_independent(open_neighborhood(g, c)))
            out.push_back(c);
    return out;
}

std::vector<VertexSet> maximal_independent_module_partition(const Graph& g, VertexSet s)
{
    std::vector<VertexSet> blocks;
    VertexSet left = s;
    while (!left.empty()) {
        const int v = left.min();
        VertexSet block;
        for (int u : left)
            if (g.neighbors(u) == g.neighbors(v))
                block.insert(u);
        blocks.push_back(block);
        left -= block;
    }
    return blocks;
}

Graph power_graph(const Graph& g, int k)
{
    if (k < 1)
        throw GraphError("power_graph requires k >= 1");
    std::vector<VertexSet> rows(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        const auto dist = distances_from(g, v);
        for (int u = 0; u < g.order(); ++u)
            if (dist[u] >= 1 && dist[u] <= k)
                rows[v].insert(u);
    }
    return Graph::from_rows(std::move(rows));
}

bool is_complete_bipartite(const Graph& g)
{
    if (g.order() < 2)
        return false;
    const VertexSet side_b = g.neighbors(0);
    const VertexSet side_a = g.vertices() - side_b;
    if (side_b.empty())
        return false;
    for (int v : side_a)
        if (g.neighbors(v) != side_b)
            return false;
    for (int v : side_b)
        if (g.neighbors(v) != side_a)
            return false;
    return true;
}

} // namespace grundylab
