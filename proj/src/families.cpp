#include <grundylab/families.hpp>

#include <grundylab/canonical.hpp>
#include <grundylab/structure.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace grundylab {

namespace {

int parse_int(std::string_view s, std::string_view context)
{
    int value = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (s.empty() || ec != std::errc{} || ptr != end)
        throw GraphError("bad number '" + std::string(s) + "' in " + std::string(context));
    return value;
}

std::vector<int> parse_int_list(std::string_view s, std::string_view context)
{
    std::vector<int> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        out.push_back(parse_int(s.substr(start, comma - start), context));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

Graph complete_multipartite(const std::vector<int>& parts)
{
    int n = 0;
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p] < 1)
            throw GraphError("complete multipartite graph needs positive part sizes");
        n += parts[p];
        part_of.insert(part_of.end(), static_cast<std::size_t>(parts[p]), static_cast<int>(p));
    }
    if (n > kMaxVertices)
        throw GraphError("graph too large");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v])
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph cycle(int n)
{
    if (n < 3 || n > kMaxVertices)
        throw GraphError("cycle length must be in 3.." + std::to_string(kMaxVertices));
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph path(int n)
{
    if (n < 1 || n > kMaxVertices)
        throw GraphError("path order must be in 1.." + std::to_string(kMaxVertices));
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

std::vector<int> degree_list(const Graph& g, const std::vector<int>& vertices)
{
    std::vector<int> out;
    for (int v : vertices)
        out.push_back(g.degree(v));
    return out;
}

std::string join(const std::vector<int>& values, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

std::string path_label(const std::vector<int>& path)
{
    std::vector<int> shown;
    for (int i : path)
        shown.push_back(i + 1);
    return "step " + join(shown, ".");
}

Graph run_steps(const BuildScript& script, const Family& family, std::vector<int>& path)
{
    const int limit = family.degree_limit();
    const int attach = family.kind == Family::Kind::f3star ? 3 : family.r;
    Graph g(0);
    auto fail = [&](const std::string& what) -> void { throw ScriptError(path, path_label(path) + ": " + what); };
    auto append = [&](const Graph& part) {
        if (g.order() + part.order() > kMaxVertices)
            fail("graph would exceed " + std::to_string(kMaxVertices) + " vertices");
        g = g.disjoint_union(part);
    };
    for (std::size_t i = 0; i < script.steps.size(); ++i) {
        path.push_back(static_cast<int>(i));
        std::visit(
            [&](const auto& step) {
                using T = std::decay_t<decltype(step)>;
                if constexpr (std::is_same_v<T, BaseStep>) {
                    if (!family.allows_base(step.name))
                        fail("'" + step.name + "' is not a base of " + family.label());
                    append(build_named(step.name));
                } else if constexpr (std::is_same_v<T, UnionStep>) {
                    if (!step.other)
                        fail("union with an empty script reference");
                    append(run_steps(*step.other, family, path));
                } else if constexpr (std::is_same_v<T, EdgeStep>) {
                    const int n = g.order();
                    if (step.u < 0 || step.v < 0 || step.u >= n || step.v >= n || step.u == step.v)
                        fail("edge " + std::to_string(step.u) + " " + std::to_string(step.v)
                            + " needs two distinct existing vertices (order " + std::to_string(n) + ")");
                    if (g.adjacent(step.u, step.v))
                        fail("edge " + std::to_string(step.u) + " " + std::to_string(step.v)
                            + " already present");
                    if (g.degree(step.u) > limit || g.degree(step.v) > limit)
                        fail("edge " + std::to_string(step.u) + " " + std::to_string(step.v)
                            + " needs degrees <= " + std::to_string(limit) + ", found "
                            + join(degree_list(g, {step.u, step.v}), ", "));
                    g = g.with_edge(step.u, step.v);
                } else {
                    const auto& nb = step.neighbors;
                    if (static_cast<int>(nb.size()) != attach)
                        fail("vertex step needs exactly " + std::to_string(attach) + " neighbors, got "
                            + std::to_string(nb.size()));
                    VertexSet set;
                    for (int v : nb) {
                        if (v < 0 || v >= g.order() || set.contains(v))
                            fail("vertex step neighbor list '" + join(nb, " ")
                                + "' must name distinct existing vertices");
                        set.insert(v);
                    }
                    for (int v : nb)
                        if (g.degree(v) > limit)
                            fail("vertex step needs neighbor degrees <= " + std::to_string(limit)
                                + ", found " + join(degree_list(g, nb), ", "));
                    if (g.order() + 1 > kMaxVertices)
                        fail("graph would exceed " + std::to_string(kMaxVertices) + " vertices");
                    g = g.with_vertex(set);
                }
            },
            script.steps[i]);
        path.pop_back();
    }
    return g;
}

void serialize_into(const BuildScript& script, std::string& out, int depth)
{
    const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
    for (const auto& step : script.steps) {
        std::visit(
            [&](const auto& s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, BaseStep>) {
                    out += indent + "base " + s.name + "\n";
                } else if constexpr (std::is_same_v<T, UnionStep>) {
                    const auto& inner = s.other->steps;
                    if (inner.size() == 1 && std::holds_alternative<BaseStep>(inner[0])) {
                        out += indent + "union " + std::get<BaseStep>(inner[0]).name + "\n";
                    } else {
                        out += indent + "union {\n";
                        serialize_into(*s.other, out, depth + 1);
                        out += indent + "}\n";
                    }
                } else if constexpr (std::is_same_v<T, EdgeStep>) {
                    out += indent + "edge " + std::to_string(s.u) + " " + std::to_string(s.v) + "\n";
                } else {
                    out += indent + "vertex " + join(s.neighbors, " ") + "\n";
                }
            },
            step);
    }
}

std::vector<std::string> split_words(std::string_view line)
{
    std::vector<std::string> words;
    std::istringstream in{std::string(line)};
    for (std::string w; in >> w;)
        words.push_back(w);
    return words;
}

} // namespace

Graph build_named(std::string_view name)
{
    const std::string context = "graph name '" + std::string(name) + "'";
    if (name == "Petersen") {
        std::vector<Edge> edges;
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);
            edges.emplace_back(i, i + 5);
            edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        }
        return Graph::from_edges(10, edges);
    }
    if (name == "prism")
        return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    if (name == "K*3,3")
        return Graph::from_edges(6, {{0, 1}, {0, 2}, {2, 3}, {2, 4}, {1, 3}, {1, 4}, {3, 5}, {4, 5}});
    if (name.size() >= 2 && name[0] == 'P')
        return path(parse_int(name.substr(1), context));
    if (name.size() >= 2 && name[0] == 'C')
        return cycle(parse_int(name.substr(1), context));
    if (name.size() >= 2 && name[0] == 'K') {
        const auto parts = parse_int_list(name.substr(1), context);
        if (parts.size() == 1) {
            if (parts[0] < 1 || parts[0] > kMaxVertices)
                throw GraphError("bad order in " + context);
            return complete_multipartite(std::vector<int>(static_cast<std::size_t>(parts[0]), 1));
        }
        return complete_multipartite(parts);
    }
    throw GraphError("unknown " + context);
}

Family Family::gstar(int r)
{
    if (r < 2)
        throw GraphError("GSTAR needs r >= 2");
    return {Kind::gstar, r};
}

std::vector<std::string> Family::bases() const
{
    if (kind == Kind::f3star)
        return {"K2,3", "K*3,3"};
    std::vector<std::string> out;
    for (int k = 0; 2 * k <= r - 2; ++k)
        out.push_back("K" + std::to_string(r - k) + "," + std::to_string(k + 2));
    return out;
}

bool Family::allows_base(std::string_view name) const
{
    if (kind == Kind::f3star)
        return name == "K2,3" || name == "K3,2" || name == "K*3,3";
    if (name.size() < 2 || name[0] != 'K')
        return false;
    std::vector<int> parts;
    try {
        parts = parse_int_list(name.substr(1), "base");
    } catch (const GraphError&) {
        return false;
    }
    if (parts.size() != 2)
        return false;
    std::sort(parts.begin(), parts.end());
    for (int k = 0; 2 * k <= r - 2; ++k) {
        std::vector<int> want{r - k, k + 2};
        std::sort(want.begin(), want.end());
        if (parts == want)
            return true;
    }
    return false;
}

std::string Family::label() const
{
    return kind == Kind::f3star ? "F3STAR" : "GSTAR(" + std::to_string(r) + ")";
}

ScriptError::ScriptError(std::vector<int> step, const std::string& what)
    : GraphError(what)
    , step_(std::move(step))
{
}

ScriptResult run_script(const BuildScript& script, const Family& family)
{
    std::vector<int> path;
    ScriptResult out{run_steps(script, family, path), false};
    out.regular = out.graph.order() > 0 && out.graph.regularity() == family.r;
    return out;
}

BuildScript parse_script(std::string_view text, const std::filesystem::path& base_dir)
{
    std::vector<BuildScript> stack(1);
    std::istringstream in{std::string(text)};
    int line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        auto where = [&] { return "script line " + std::to_string(line_no) + ": "; };
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const auto words = split_words(line);
        if (words.empty())
            continue;
        const std::string& op = words[0];
        try {
            if (op == "base" && words.size() == 2) {
                stack.back().steps.push_back(BaseStep{words[1]});
            } else if (op == "union" && words.size() == 2 && words[1] == "{") {
                stack.emplace_back();
            } else if (op == "union" && words.size() == 2 && words[1].starts_with("@")) {
                auto sub = load_script(base_dir / words[1].substr(1));
                stack.back().steps.push_back(UnionStep{std::make_shared<const BuildScript>(std::move(sub))});
            } else if (op == "union" && words.size() == 2) {
                BuildScript sub;
                sub.steps.push_back(BaseStep{words[1]});
                stack.back().steps.push_back(UnionStep{std::make_shared<const BuildScript>(std::move(sub))});
            } else if (op == "}" && words.size() == 1) {
                if (stack.size() == 1)
                    throw GraphError("unmatched '}'");
                auto sub = std::make_shared<const BuildScript>(std::move(stack.back()));
                stack.pop_back();
                stack.back().steps.push_back(UnionStep{std::move(sub)});
            } else if (op == "edge" && words.size() == 3) {
                stack.back().steps.push_back(EdgeStep{parse_int(words[1], "edge"), parse_int(words[2], "edge")});
            } else if (op == "vertex" && words.size() >= 2) {
                VertexStep step;
                for (std::size_t i = 1; i < words.size(); ++i)
                    step.neighbors.push_back(parse_int(words[i], "vertex"));
                stack.back().steps.push_back(std::move(step));
            } else {
                throw GraphError("cannot parse '" + line + "'");
            }
        } catch (const ScriptError&) {
            throw;
        } catch (const GraphError& e) {
            throw GraphError(where() + e.what());
        }
    }
    if (stack.size() != 1)
        throw GraphError("script ends inside a 'union {' block");
    return std::move(stack.front());
}

BuildScript load_script(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in)
        throw GraphError("cannot open script file " + file.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_script(buffer.str(), file.parent_path());
}

std::string serialize_script(const BuildScript& script)
{
    std::string out;
    serialize_into(script, out, 0);
    return out;
}

namespace {

class ScriptWalker {
public:
    ScriptWalker(const Family& family, int max_n, std::uint64_t seed)
        : family_(family)
        , max_n_(max_n)
        , rng_(seed)
    {
    }

    BuildScript walk(int depth)
    {
        BuildScript script;
        std::vector<std::string> fitting;
        for (const auto& b : family_.bases())
            if (build_named(b).order() <= max_n_)
                fitting.push_back(b);
        if (fitting.empty())
            throw GraphError("no base of " + family_.label() + " fits in " + std::to_string(max_n_) + " vertices");
        const auto& first = fitting[pick(fitting.size())];
        script.steps.push_back(BaseStep{first});
        Graph g = build_named(first);

        const int growth = static_cast<int>(pick(6));
        for (int round = 0; round < growth; ++round)
            if (!random_move(script, g, depth))
                break;
        while (lower_deficit(script, g)) {
        }
        return script;
    }

private:
    std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

    std::vector<int> open_vertices(const Graph& g) const
    {
        std::vector<int> out;
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) <= family_.degree_limit())
                out.push_back(v);
        return out;
    }

    int attach() const { return family_.kind == Family::Kind::f3star ? 3 : family_.r; }

    bool try_edge(BuildScript& script, Graph& g)
    {
        const auto open = open_vertices(g);
        std::vector<Edge> options;
        for (std::size_t a = 0; a < open.size(); ++a)
            for (std::size_t b = a + 1; b < open.size(); ++b)
                if (!g.adjacent(open[a], open[b]))
                    options.emplace_back(open[a], open[b]);
        if (options.empty())
            return false;
        const auto [u, v] = options[pick(options.size())];
        script.steps.push_back(EdgeStep{u, v});
        g = g.with_edge(u, v);
        return true;
    }

    bool try_vertex(BuildScript& script, Graph& g)
    {
        auto open = open_vertices(g);
        if (g.order() + 1 > max_n_ || static_cast<int>(open.size()) < attach())
            return false;
        std::shuffle(open.begin(), open.end(), rng_);
        open.resize(static_cast<std::size_t>(attach()));
        std::sort(open.begin(), open.end());
        VertexSet set;
        for (int v : open)
            set.insert(v);
        script.steps.push_back(VertexStep{open});
        g = g.with_vertex(set);
        return true;
    }

    bool try_union(BuildScript& script, Graph& g, int depth)
    {
        const int room = max_n_ - g.order();
        int smallest = kMaxVertices;
        for (const auto& b : family_.bases())
            smallest = std::min(smallest, build_named(b).order());
        if (room < smallest || depth >= 2)
            return false;
        ScriptWalker inner(family_, room, rng_());
        auto sub = std::make_shared<const BuildScript>(inner.walk(depth + 1));
        g = g.disjoint_union(run_script(*sub, family_).graph);
        script.steps.push_back(UnionStep{std::move(sub)});
        return true;
    }

    bool random_move(BuildScript& script, Graph& g, int depth)
    {
        std::array<int, 3> kinds{0, 1, 2};
        std::shuffle(kinds.begin(), kinds.end(), rng_);
        for (int kind : kinds) {
            if (kind == 0 && try_edge(script, g))
                return true;
            if (kind == 1 && try_vertex(script, g))
                return true;
            if (kind == 2 && try_union(script, g, depth))
                return true;
        }
        return false;
    }

    // Prefers edges; adds a vertex only when no edge fits.
    bool lower_deficit(BuildScript& script, Graph& g)
    {
        return try_edge(script, g) || try_vertex(script, g);
    }

    const Family& family_;
    int max_n_;
    std::mt19937_64 rng_;
};

} // namespace

BuildScript random_script(const Family& family, int max_n, std::uint64_t seed)
{
    return ScriptWalker(family, max_n, seed).walk(0);
}

std::vector<FamilyMember> explore_family(const Family& family, int max_n)
{
    if (max_n > kCanonicalMaxOrder)
        throw GraphError("family exploration supports at most " + std::to_string(kCanonicalMaxOrder)
            + " vertices");
    std::vector<FamilyMember> members;
    std::map<CanonicalKey, std::size_t> seen;
    auto add = [&](Graph g, BuildScript script) {
        auto key = canonical_form(g);
        if (seen.contains(key))
            return;
        seen.emplace(std::move(key), members.size());
        members.push_back({std::move(g), std::move(script)});
    };
    for (const auto& b : family.bases()) {
        Graph g = build_named(b);
        if (g.order() <= max_n)
            add(std::move(g), BuildScript{{BaseStep{b}}});
    }
    const int limit = family.degree_limit();
    const int attach = family.kind == Family::Kind::f3star ? 3 : family.r;
    for (std::size_t i = 0; i < members.size(); ++i) {
        const Graph g = members[i].graph;
        const BuildScript script = members[i].script;
        std::vector<int> open;
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) <= limit)
                open.push_back(v);
        for (std::size_t a = 0; a < open.size(); ++a)
            for (std::size_t b = a + 1; b < open.size(); ++b)
                if (!g.adjacent(open[a], open[b])) {
                    BuildScript next = script;
                    next.steps.push_back(EdgeStep{open[a], open[b]});
                    add(g.with_edge(open[a], open[b]), std::move(next));
                }
        if (g.order() < max_n && static_cast<int>(open.size()) >= attach) {
            // Subsets of `open` of size `attach`, lexicographic.
            std::vector<int> idx(static_cast<std::size_t>(attach));
            std::iota(idx.begin(), idx.end(), 0);
            const int m = static_cast<int>(open.size());
            while (true) {
                VertexStep step;
                VertexSet set;
                for (int x : idx) {
                    step.neighbors.push_back(open[x]);
                    set.insert(open[x]);
                }
                BuildScript next = script;
                next.steps.push_back(std::move(step));
                add(g.with_vertex(set), std::move(next));
                int p = attach - 1;
                while (p >= 0 && idx[p] == m - attach + p)
                    --p;
                if (p < 0)
                    break;
                ++idx[p];
                for (int q = p + 1; q < attach; ++q)
                    idx[q] = idx[q - 1] + 1;
            }
        }
        for (std::size_t j = 0; j <= i; ++j) {
            if (g.order() + members[j].graph.order() > max_n)
                continue;
            BuildScript next = script;
            next.steps.push_back(UnionStep{std::make_shared<const BuildScript>(members[j].script)});
            add(g.disjoint_union(members[j].graph), std::move(next));
        }
    }
    return members;
}

std::vector<Graph> catalog_f3_cubic(int max_n)
{
    std::vector<std::pair<CanonicalKey, Graph>> found;
    for (auto& m : explore_family(Family::f3star(), max_n))
        if (m.graph.regularity() == 3 && is_connected(m.graph))
            found.emplace_back(canonical_form(m.graph), canonical_graph(m.graph));
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        return std::pair(a.second.order(), a.first) < std::pair(b.second.order(), b.first);
    });
    std::vector<Graph> out;
    for (auto& [key, g] : found)
        out.push_back(std::move(g));
    return out;
}

std::vector<int> default_parts(int r, int k)
{
    if (k < 2 || k - 1 > r)
        throw GraphError("need 2 <= k <= r+1");
    const int count = k - 1;
    std::vector<int> parts(static_cast<std::size_t>(count), r / count);
    for (int extra = r % count, p = count - 1; extra > 0; --extra, --p)
        ++parts[p];
    return parts;
}

Graph build_G_rki(int r, int k, const std::vector<int>& parts, int i)
{
    if (i < 2)
        throw GraphError("G_{r,k,i} needs i >= 2");
    if (k < 3 || k > r + 1)
        throw GraphError("G_{r,k,i} needs 3 <= k <= r+1");
    if (static_cast<int>(parts.size()) != k - 1)
        throw GraphError("G_{r,k,i} needs exactly k-1 parts");
    int sum = 0;
    for (int p : parts) {
        if (p < 1)
            throw GraphError("G_{r,k,i} parts must be positive");
        sum += p;
    }
    if (sum != r)
        throw GraphError("G_{r,k,i} parts must sum to r, got " + std::to_string(sum));
    const int copies = 2 * i;
    if (copies * r > kMaxVertices)
        throw GraphError("G_{r,k,i} would exceed " + std::to_string(kMaxVertices) + " vertices");

    std::vector<int> offset(parts.size() + 1, 0);
    for (std::size_t l = 0; l < parts.size(); ++l)
        offset[l + 1] = offset[l] + parts[l];
    auto block = [&](int copy, int l) {
        VertexSet s;
        for (int x = 0; x < parts[l]; ++x)
            s.insert(copy * r + offset[l] + x);
        return s;
    };
    std::vector<Edge> edges;
    auto join_sets = [&](VertexSet a, VertexSet b) {
        for (int u : a)
            for (int v : b)
                edges.emplace_back(u, v);
    };
    const int blocks = k - 1;
    for (int c = 0; c < copies; ++c)
        for (int a = 0; a < blocks; ++a)
            for (int b = a + 1; b < blocks; ++b)
                join_sets(block(c, a), block(c, b));
    for (int j = 1; j < copies; j += 2) {
        join_sets(block(j, 0), block((j - 1) % copies, 0));
        for (int l = 1; l < blocks; ++l)
            join_sets(block(j, l), block((j + 1) % copies, l));
    }
    return Graph::from_edges(copies * r, edges);
}

} // namespace grundylab
