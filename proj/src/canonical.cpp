#include <grundylab/canonical.hpp>

#include <grundylab/graph6.hpp>

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace grundylab {

namespace {

using Partition = std::vector<VertexSet>;
using Permutation = std::vector<int>;

// Splits cells by neighbor counts into splitter cells until the partition
// is equitable. Sub-cells are ordered by increasing count, which keeps the
// procedure label-independent.
void refine(const Graph& g, Partition& cells, std::vector<VertexSet> queue)
{
    std::array<int, kMaxVertices> count{};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        if (static_cast<int>(cells.size()) == g.order())
            return;
        const VertexSet splitter = queue[head];
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const VertexSet cell = cells[i];
            if (cell.size() == 1)
                continue;
            int lo = kMaxVertices;
            int hi = -1;
            for (int v : cell) {
                count[v] = (g.neighbors(v) & splitter).size();
                lo = std::min(lo, count[v]);
                hi = std::max(hi, count[v]);
            }
            if (lo == hi)
                continue;
            Partition parts;
            for (int c = lo; c <= hi; ++c) {
                VertexSet part;
                for (int v : cell)
                    if (count[v] == c)
                        part.insert(v);
                if (!part.empty())
                    parts.push_back(part);
            }
            cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(i));
            cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(i), parts.begin(), parts.end());
            queue.insert(queue.end(), parts.begin(), parts.end());
            i += parts.size() - 1;
        }
    }
}

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n))
    {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x)
    {
        while (parent_[x] != x)
            x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::vector<int> parent_;
};

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) { seed_twin_automorphisms(); }

    CanonicalLabeling run()
    {
        Partition cells;
        if (n_ > 0) {
            // Initial split by degree comes out of refining against V.
            cells.push_back(g_.vertices());
            refine(g_, cells, {g_.vertices()});
            search(cells);
        }
        CanonicalLabeling out;
        out.relabel = best_relabel_;
        out.key.bytes = write_graph6(g_.relabelled(best_relabel_));
        return out;
    }

private:
    void seed_twin_automorphisms()
    {
        for (int u = 0; u < n_; ++u) {
            for (int v = u + 1; v < n_; ++v) {
                const bool false_twins = g_.neighbors(u) == g_.neighbors(v);
                const bool true_twins = g_.adjacent(u, v)
                    && (g_.neighbors(u) - VertexSet::singleton(v))
                        == (g_.neighbors(v) - VertexSet::singleton(u));
                if (false_twins || true_twins) {
                    Permutation swap(static_cast<std::size_t>(n_));
                    std::iota(swap.begin(), swap.end(), 0);
                    std::swap(swap[u], swap[v]);
                    generators_.push_back(std::move(swap));
                    break;
                }
            }
        }
    }

    std::vector<std::uint64_t> certificate(const Permutation& relabel) const
    {
        std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) {
            std::uint64_t row = 0;
            for (int w : g_.neighbors(v))
                row |= std::uint64_t{1} << relabel[w];
            rows[relabel[v]] = row;
        }
        return rows;
    }

    void record_automorphism(const Permutation& a, const Permutation& b)
    {
        Permutation inverse_b(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v)
            inverse_b[b[v]] = v;
        Permutation gamma(static_cast<std::size_t>(n_));
        bool identity = true;
        for (int v = 0; v < n_; ++v) {
            gamma[v] = inverse_b[a[v]];
            identity = identity && gamma[v] == v;
        }
        if (!identity)
            generators_.push_back(std::move(gamma));
    }

    void leaf(const Partition& cells)
    {
        Permutation relabel(static_cast<std::size_t>(n_));
        for (int pos = 0; pos < n_; ++pos)
            relabel[cells[pos].min()] = pos;
        auto cert = certificate(relabel);
        if (first_relabel_.empty()) {
            first_relabel_ = relabel;
            first_cert_ = cert;
        } else if (cert == first_cert_) {
            record_automorphism(first_relabel_, relabel);
        }
        if (best_relabel_.empty() || cert > best_cert_) {
            best_cert_ = std::move(cert);
            best_relabel_ = std::move(relabel);
        } else if (cert == best_cert_) {
            record_automorphism(best_relabel_, relabel);
        }
    }

    bool same_orbit_as_explored(int v, const std::vector<int>& explored)
    {
        UnionFind orbits(n_);
        for (const auto& gamma : generators_) {
            bool fixes_prefix = true;
            for (int p : prefix_)
                if (gamma[p] != p) {
                    fixes_prefix = false;
                    break;
                }
            if (!fixes_prefix)
                continue;
            for (int x = 0; x < n_; ++x)
                orbits.unite(x, gamma[x]);
        }
        return std::any_of(explored.begin(), explored.end(),
            [&](int u) { return orbits.find(u) == orbits.find(v); });
    }

    void search(const Partition& cells)
    {
        if (static_cast<int>(cells.size()) == n_) {
            leaf(cells);
            return;
        }
        std::size_t target = 0;
        while (cells[target].size() == 1)
            ++target;
        std::vector<int> explored;
        for (int v : cells[target]) {
            if (same_orbit_as_explored(v, explored))
                continue;
            explored.push_back(v);
            Partition child = cells;
            const auto single = VertexSet::singleton(v);
            child[target] = cells[target] - single;
            child.insert(child.begin() + static_cast<std::ptrdiff_t>(target), single);
            refine(g_, child, {single});
            prefix_.push_back(v);
            search(child);
            prefix_.pop_back();
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> prefix_;
    std::vector<Permutation> generators_;
    Permutation first_relabel_;
    std::vector<std::uint64_t> first_cert_;
    Permutation best_relabel_;
    std::vector<std::uint64_t> best_cert_;
};

} // namespace

CanonicalLabeling canonical_labeling(const Graph& g)
{
    if (g.order() > kCanonicalMaxOrder)
        throw GraphError("canonical labeling supports at most "
            + std::to_string(kCanonicalMaxOrder) + " vertices, got "
            + std::to_string(g.order()));
    return Canonizer(g).run();
}

CanonicalKey canonical_form(const Graph& g)
{
    return canonical_labeling(g).key;
}

Graph canonical_graph(const Graph& g)
{
    return g.relabelled(canonical_labeling(g).relabel);
}

bool are_isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace grundylab
