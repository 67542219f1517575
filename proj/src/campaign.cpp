#include <grundylab/campaign.hpp>

#include <grundylab/atoms.hpp>
#include <grundylab/enumerate.hpp>
#include <grundylab/families.hpp>
#include <grundylab/graph6.hpp>
#include <grundylab/structure.hpp>
#include <grundylab/twins.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <thread>

namespace grundylab {

using json = nlohmann::ordered_json;

const char* to_string(RecordStatus s)
{
    switch (s) {
    case RecordStatus::pass:
        return "pass";
    case RecordStatus::fail:
        return "fail";
    case RecordStatus::skip:
        return "skip";
    case RecordStatus::unknown:
        return "unknown";
    }
    return "?";
}

std::vector<std::string> known_claims()
{
    return {"CUBIC-CHAR", "CUBIC-PARTIAL", "C4FREE-R", "ATOM-EQ", "GRKI", "GR-SOUND", "ORACLE-EQ",
        "BIPARTITE-2", "TWIN-BOUND"};
}

int VerificationReport::exit_code() const
{
    bool unknown = false;
    for (const auto& r : records) {
        if (r.status == RecordStatus::fail)
            return 1;
        unknown = unknown || r.status == RecordStatus::unknown;
    }
    return unknown ? 2 : 0;
}

long long partial_grundy_order_bound(int r)
{
    const long long x = r;
    return 2 * x * x * x - x * x + x;
}

int default_thread_count()
{
    if (const char* env = std::getenv("GRUNDYLAB_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<int>(std::min<long>(v, 256));
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::optional<std::string> stratum_4_regular(const Graph& g)
{
    if (g.order() == 0 || g.regularity() != 4)
        return std::nullopt;
    if (has_induced_cycle(g, 4))
        return "c4";
    const Girth gi = girth(g);
    const int len = gi.length(); // 4-regular graphs have cycles
    if (len == 3)
        return "g3";
    if (len == 5 || len == 6) {
        const std::string base = "g" + std::to_string(len);
        return base + (neighbor_connected_induced_cycles(g, len).empty() ? "-plain" : "-nc");
    }
    return "g7+";
}

namespace {

struct Subject {
    Graph graph;
    json origin; // null unless generated with parameters
};

json girth_json(const Graph& g)
{
    const Girth gi = girth(g);
    return gi.is_finite() ? json(gi.length()) : json(nullptr);
}

class Evaluator {
public:
    explicit Evaluator(const CampaignOptions& options) : options_(options) {}

    Record operator()(std::size_t index, const Subject& s) const
    {
        const Graph& g = s.graph;
        Record rec;
        auto& j = rec.json;
        j["index"] = index;
        j["graph6"] = write_graph6(g);
        j["n"] = g.order();
        const auto reg = g.regularity();
        j["r"] = reg ? json(*reg) : json(nullptr);
        j["girth"] = girth_json(g);
        j["c4_free"] = !has_induced_cycle(g, 4);
        if (!s.origin.is_null())
            j["origin"] = s.origin;
        const std::string& c = options_.claim;
        if (c == "CUBIC-CHAR")
            cubic_char(g, rec);
        else if (c == "CUBIC-PARTIAL")
            cubic_partial(g, rec);
        else if (c == "C4FREE-R")
            c4free(g, rec);
        else if (c == "ATOM-EQ")
            atom_eq(g, rec);
        else if (c == "GRKI")
            grki(g, s.origin, rec);
        else if (c == "GR-SOUND")
            gr_sound(g, rec);
        else if (c == "ORACLE-EQ")
            oracle_eq(g, rec);
        else if (c == "BIPARTITE-2")
            bipartite(g, rec);
        else
            twin_bound(g, rec);
        j["status"] = to_string(rec.status);
        if (!j.contains("detail"))
            j["detail"] = "";
        return rec;
    }

private:
    static void finish(Record& rec, RecordStatus status, const std::string& detail)
    {
        rec.status = status;
        rec.json["detail"] = detail;
    }

    // Exact Grundy number into rec.json["grundy"]; false (and status
    // unknown) when the budget runs out or the witness does not validate.
    bool grundy(const Graph& g, Record& rec, SolveResult* out = nullptr) const
    {
        auto res = grundy_exact(g, options_.budget);
        if (!res.solved()) {
            rec.json["grundy"] = nullptr;
            rec.json["grundy_bounds"] = {res.lower_bound, res.upper_bound};
            finish(rec, RecordStatus::unknown, "search budget exhausted");
            return false;
        }
        rec.json["grundy"] = *res.value;
        if (!validate_grundy(g, res.witness, false) || res.witness.num_colors() != *res.value) {
            finish(rec, RecordStatus::fail, "solver witness is not a Grundy coloring of the claimed size");
            return false;
        }
        if (out)
            *out = std::move(res);
        return true;
    }

    static bool connected_regular(const Graph& g, int r)
    {
        return g.order() > 0 && g.regularity() == r && is_connected(g);
    }

    void cubic_char(const Graph& g, Record& rec) const
    {
        if (!connected_regular(g, 3))
            return finish(rec, RecordStatus::skip, "not a connected cubic graph");
        const int linear = cubic_grundy_linear(g);
        rec.json["linear"] = linear;
        rec.json["f3"] = f3_membership(g);
        if (!grundy(g, rec))
            return;
        const int exact = rec.json["grundy"];
        if (exact == linear)
            finish(rec, RecordStatus::pass, "");
        else
            finish(rec, RecordStatus::fail, "linear classifier says " + std::to_string(linear));
    }

    void cubic_partial(const Graph& g, Record& rec) const
    {
        if (!connected_regular(g, 3))
            return finish(rec, RecordStatus::skip, "not a connected cubic graph");
        if (g.order() > kPartialGrundyMaxOrder)
            return finish(rec, RecordStatus::skip, "order above partial Grundy search limit");
        if (!grundy(g, rec))
            return;
        auto res = partial_grundy_exact(g, options_.budget);
        if (!res.solved()) {
            rec.json["partial_grundy"] = nullptr;
            return finish(rec, RecordStatus::unknown, "search budget exhausted");
        }
        rec.json["partial_grundy"] = *res.value;
        if (!validate_partial_grundy(g, res.witness))
            return finish(rec, RecordStatus::fail, "partial Grundy witness does not validate");
        const int expected = is_complete_bipartite(g) ? 2 : 4;
        const int grundy_value = rec.json["grundy"];
        if (*res.value != expected)
            return finish(rec, RecordStatus::fail, "expected " + std::to_string(expected));
        if (grundy_value > *res.value)
            return finish(rec, RecordStatus::fail, "Grundy number exceeds partial Grundy number");
        finish(rec, RecordStatus::pass, "");
    }

    void c4free(const Graph& g, Record& rec) const
    {
        const int r = *options_.r;
        if (r == 4)
            rec.json["stratum"] = stratum_4_regular(g).value_or("");
        if (!connected_regular(g, r))
            return finish(rec, RecordStatus::skip, "not a connected r-regular graph");
        if (!grundy(g, rec))
            return;
        const int value = rec.json["grundy"];
        if (!rec.json["c4_free"].get<bool>()) {
            rec.json["exception"] = value != r + 1;
            return finish(rec, RecordStatus::skip, "contains an induced C4");
        }
        if (value == r + 1)
            finish(rec, RecordStatus::pass, "");
        else
            finish(rec, RecordStatus::fail, "Grundy number " + std::to_string(value) + " != r+1");
    }

    void atom_eq(const Graph& g, Record& rec) const
    {
        const int top = options_.t.value_or(5);
        const AtomLimits caps{g.max_degree(), g.order()};
        for (int t = 1; t <= top; ++t)
            if (t <= g.max_degree() + 1 && !atom_limits_supported(t, caps))
                return finish(rec, RecordStatus::skip, "atom level " + std::to_string(t) + " outside supported caps");
        if (!grundy(g, rec))
            return;
        const int value = rec.json["grundy"];
        json levels = json::array();
        std::string mismatch;
        for (int t = 1; t <= top; ++t) {
            const bool found = has_induced_minimal_atom(g, t);
            levels.push_back(found);
            if (found != (value >= t) && mismatch.empty())
                mismatch = "level " + std::to_string(t) + ": atom " + (found ? "found" : "missing");
        }
        rec.json["atom_levels"] = levels;
        finish(rec, mismatch.empty() ? RecordStatus::pass : RecordStatus::fail, mismatch);
    }

    void grki(const Graph& g, const json& origin, Record& rec) const
    {
        const int r = origin.at("r");
        const int k = origin.at("k");
        const int i = origin.at("i");
        if (!grundy(g, rec))
            return;
        const int value = rec.json["grundy"];
        rec.json["twin_bound"] = twin_grundy_upper_bound(g);
        if (!connected_regular(g, r) || g.order() != 2 * i * r)
            return finish(rec, RecordStatus::fail, "construction is not a connected r-regular graph on 2ir vertices");
        if (value != k)
            return finish(rec, RecordStatus::fail, "expected Grundy number " + std::to_string(k));
        finish(rec, RecordStatus::pass, "");
    }

    void gr_sound(const Graph& g, Record& rec) const
    {
        const int r = rec.json.at("origin").at("r");
        if (g.order() == 0 || g.regularity() != r)
            return finish(rec, RecordStatus::skip, "script result is not regular");
        if (!grundy(g, rec))
            return;
        const int value = rec.json["grundy"];
        if (value < r + 1)
            finish(rec, RecordStatus::pass, "");
        else
            finish(rec, RecordStatus::fail, "Grundy number reaches r+1");
    }

    void oracle_eq(const Graph& g, Record& rec) const
    {
        if (g.order() > kOracleMaxOrder)
            return finish(rec, RecordStatus::skip, "order above oracle limit");
        if (!grundy(g, rec))
            return;
        const int oracle = grundy_oracle(g);
        rec.json["oracle"] = oracle;
        const int value = rec.json["grundy"];
        if (oracle == value)
            finish(rec, RecordStatus::pass, "");
        else
            finish(rec, RecordStatus::fail, "oracle says " + std::to_string(oracle));
    }

    void bipartite(const Graph& g, Record& rec) const
    {
        if (g.edge_count() == 0 || !is_connected(g))
            return finish(rec, RecordStatus::skip, "not connected with an edge");
        if (!grundy(g, rec))
            return;
        const int value = rec.json["grundy"];
        const bool kab = is_complete_bipartite(g);
        rec.json["complete_bipartite"] = kab;
        if ((value <= 2) == kab)
            finish(rec, RecordStatus::pass, "");
        else
            finish(rec, RecordStatus::fail, kab ? "complete bipartite with Grundy number > 2" : "Grundy number <= 2 but not complete bipartite");
    }

    void twin_bound(const Graph& g, Record& rec) const
    {
        const int bound = twin_grundy_upper_bound(g);
        rec.json["twin_bound"] = bound;
        SolveResult res;
        if (!grundy(g, rec, &res))
            return;
        if (*res.value > bound)
            return finish(rec, RecordStatus::fail, "Grundy number exceeds twin bound");
        const auto& color = res.witness.colors;
        for (const auto& block : maximal_independent_module_partition(g, g.vertices()))
            for (int v : block)
                if (color[v] != color[block.min()])
                    return finish(rec, RecordStatus::fail, "module members with different colors");
        if (const auto r = g.regularity()) {
            for (int v = 0; v < g.order(); ++v)
                for (int level = 1; level <= *r + 1; ++level)
                    if (color[v] > level && is_twin_vertex(g, v, TwinKind::module, level))
                        return finish(rec, RecordStatus::fail,
                            "vertex " + std::to_string(v) + " is a (0," + std::to_string(level)
                                + ")-twin with color " + std::to_string(color[v]));
        }
        finish(rec, RecordStatus::pass, "");
    }

    const CampaignOptions& options_;
};

int default_max_n(const CampaignOptions& o)
{
    const std::string& c = o.claim;
    if (c == "CUBIC-CHAR" || c == "GR-SOUND")
        return 12;
    if (c == "CUBIC-PARTIAL")
        return 10;
    if (c == "C4FREE-R")
        return o.r == 4 ? 11 : o.r == 3 ? 12 : o.r == 2 ? 12 : 10;
    if (c == "ATOM-EQ" || c == "ORACLE-EQ")
        return 7;
    if (c == "BIPARTITE-2" || c == "TWIN-BOUND")
        return 8;
    return 0;
}

void append(std::vector<Subject>& out, std::vector<Graph> graphs)
{
    for (auto& g : graphs)
        out.push_back({std::move(g), nullptr});
}

std::vector<Subject> generate(const CampaignOptions& o, int max_n)
{
    const std::string& c = o.claim;
    std::vector<Subject> out;
    auto need_at_most = [&](int limit, const char* what) {
        if (max_n > limit)
            throw CampaignUsageError(std::string(what) + " supports --max-n up to " + std::to_string(limit));
    };
    if (c == "CUBIC-CHAR" || c == "CUBIC-PARTIAL") {
        need_at_most(kMaxRegularEnumerationOrder, "cubic enumeration");
        for (int n = 4; n <= max_n; n += 2)
            append(out, enumerate_regular_graphs(3, n, true));
    } else if (c == "C4FREE-R") {
        need_at_most(kMaxRegularEnumerationOrder, "regular enumeration");
        for (int n = *o.r + 1; n <= max_n; ++n)
            append(out, enumerate_regular_graphs(*o.r, n, true));
    } else if (c == "ATOM-EQ" || c == "ORACLE-EQ" || c == "BIPARTITE-2") {
        need_at_most(kMaxGraphEnumerationOrder, "graph enumeration");
        append(out, enumerate_graphs_up_to(max_n, true));
    } else if (c == "TWIN-BOUND") {
        need_at_most(kMaxGraphEnumerationOrder, "graph enumeration");
        append(out, enumerate_graphs_up_to(max_n, false));
    } else if (c == "GRKI") {
        const std::vector<int> rs = o.r ? std::vector<int>{*o.r} : std::vector<int>{3, 4, 5};
        for (int r : rs) {
            if (r < 2)
                throw CampaignUsageError("GRKI needs r >= 2");
            const int top_i = std::max(2, max_n / (2 * r));
            for (int k = 3; k <= r + 1; ++k)
                for (int i = 2; i <= top_i; ++i) {
                    const auto parts = default_parts(r, k);
                    json origin{{"r", r}, {"k", k}, {"parts", parts}, {"i", i}};
                    out.push_back({build_G_rki(r, k, parts, i), std::move(origin)});
                }
        }
    } else if (c == "GR-SOUND") {
        const std::vector<int> rs = o.r ? std::vector<int>{*o.r} : std::vector<int>{3, 4};
        for (int s = 0; s < o.samples; ++s) {
            const int r = rs[static_cast<std::size_t>(s) % rs.size()];
            const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(s);
            const auto family = Family::gstar(r);
            const auto script = random_script(family, max_n, seed);
            json origin{{"r", r}, {"seed", seed}, {"script", serialize_script(script)}};
            out.push_back({run_script(script, family).graph, std::move(origin)});
        }
    }
    return out;
}

std::vector<Subject> read_input(const std::filesystem::path& path)
{
    std::vector<Graph> graphs;
    if (path == "-") {
        graphs = read_graph6_list(std::cin);
    } else {
        std::ifstream in(path);
        if (!in)
            throw GraphError("cannot open input file " + path.string());
        graphs = read_graph6_list(in);
    }
    std::vector<Subject> out;
    append(out, std::move(graphs));
    return out;
}

void validate(const CampaignOptions& o)
{
    const auto claims = known_claims();
    if (std::find(claims.begin(), claims.end(), o.claim) == claims.end())
        throw CampaignUsageError("unknown claim '" + o.claim + "'");
    if (o.claim == "C4FREE-R" && !o.r)
        throw CampaignUsageError("C4FREE-R needs --r");
    if (o.r && *o.r < 1)
        throw CampaignUsageError("--r must be positive");
    if ((o.claim == "CUBIC-CHAR" || o.claim == "CUBIC-PARTIAL") && o.r && *o.r != 3)
        throw CampaignUsageError(o.claim + " is about cubic graphs; --r must be 3 if given");
    if ((o.claim == "GRKI" || o.claim == "GR-SOUND") && o.input)
        throw CampaignUsageError(o.claim + " generates its own graphs; --input is not accepted");
    if (o.claim == "GR-SOUND" && o.r && *o.r < 2)
        throw CampaignUsageError("GR-SOUND needs r >= 2");
    if (o.t && (*o.t < 1 || *o.t > 6))
        throw CampaignUsageError("--t must be in 1..6");
    if (o.samples < 0)
        throw CampaignUsageError("--samples must be non-negative");
}

std::vector<Record> evaluate_all(const std::vector<Subject>& subjects, const Evaluator& eval, int threads)
{
    std::vector<Record> records(subjects.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < subjects.size();)
            records[i] = eval(i, subjects[i]);
    };
    const int count = std::max(1, std::min<int>(threads, static_cast<int>(subjects.size())));
    std::vector<std::thread> pool;
    for (int w = 1; w < count; ++w)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    return records;
}

json summarize(const CampaignOptions& o, int max_n, const std::vector<Record>& records, int exit_code)
{
    json s;
    s["summary"] = true;
    s["claim"] = o.claim;
    json params;
    params["r"] = o.r ? json(*o.r) : json(nullptr);
    params["max_n"] = o.input ? json(nullptr) : json(max_n);
    params["input"] = o.input ? json(o.input->string()) : json(nullptr);
    params["budget"] = o.budget.node_limit;
    if (o.claim == "ATOM-EQ")
        params["t"] = o.t.value_or(5);
    if (o.claim == "GR-SOUND") {
        params["samples"] = o.samples;
        params["seed"] = o.seed;
    }
    s["params"] = params;

    std::map<std::string, int> counts{{"pass", 0}, {"fail", 0}, {"skip", 0}, {"unknown", 0}};
    json counterexamples = json::array();
    json unknown = json::array();
    json exceptions = json::array();
    std::map<std::string, int> strata;
    int largest_partial_exception = 0;
    for (const auto& rec : records) {
        ++counts[to_string(rec.status)];
        const auto& j = rec.json;
        if (rec.status == RecordStatus::fail)
            counterexamples.push_back({{"index", j["index"]}, {"graph6", j["graph6"]}, {"detail", j["detail"]}});
        if (rec.status == RecordStatus::unknown)
            unknown.push_back({{"index", j["index"]}, {"graph6", j["graph6"]}});
        if (j.contains("exception") && j["exception"].get<bool>())
            exceptions.push_back({{"index", j["index"]}, {"graph6", j["graph6"]}, {"grundy", j["grundy"]}});
        if (j.contains("stratum") && !j["stratum"].get<std::string>().empty())
            ++strata[j["stratum"].get<std::string>()];
        if (j.contains("partial_grundy") && j["partial_grundy"].is_number()
            && j["partial_grundy"].get<int>() < 4)
            largest_partial_exception = std::max(largest_partial_exception, j["n"].get<int>());
    }
    s["records"] = records.size();
    for (const auto& [k, v] : counts)
        s[k == "pass" ? "passed" : k == "fail" ? "failed" : k == "skip" ? "skipped" : "unknown"] = v;
    s["counterexamples"] = counterexamples;
    s["unknown_graphs"] = unknown;
    if (o.claim == "C4FREE-R")
        s["exceptions"] = exceptions;
    if (o.claim == "C4FREE-R" && o.r == 4)
        s["strata"] = strata;
    if (o.claim == "CUBIC-PARTIAL") {
        s["largest_exception_order"] = largest_partial_exception;
        s["N_r_upper_bound"] = partial_grundy_order_bound(3);
    }
    s["verdict"] = exit_code == 0 ? "pass" : exit_code == 1 ? "fail" : "inconclusive";
    s["exit_code"] = exit_code;
    return s;
}

} // namespace

VerificationReport run_campaign(const CampaignOptions& options)
{
    validate(options);
    const auto start = std::chrono::steady_clock::now();
    const int max_n = options.max_n > 0 ? options.max_n : default_max_n(options);
    const auto subjects = options.input ? read_input(*options.input) : generate(options, max_n);
    const Evaluator eval(options);
    VerificationReport report;
    report.claim = options.claim;
    report.records = evaluate_all(subjects, eval, options.threads > 0 ? options.threads : default_thread_count());
    report.summary = summarize(options, max_n, report.records, report.exit_code());
    if (options.timing)
        report.summary["wall_time_s"]
            = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

void write_json_lines(std::ostream& out, const VerificationReport& report)
{
    for (const auto& rec : report.records)
        out << rec.json.dump() << '\n';
    out << report.summary.dump() << '\n';
}

namespace {

std::string csv_field(const json& j)
{
    if (j.is_null())
        return "";
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string quoted = "\"";
        for (char ch : s) {
            if (ch == '"')
                quoted += '"';
            quoted += ch;
        }
        return quoted + "\"";
    }
    return j.dump();
}

} // namespace

void write_csv(std::ostream& out, const VerificationReport& report)
{
    static const char* columns[] = {"index", "graph6", "n", "r", "girth", "c4_free", "grundy",
        "partial_grundy", "twin_bound", "stratum", "status", "detail"};
    for (std::size_t i = 0; i < std::size(columns); ++i)
        out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const auto& rec : report.records) {
        for (std::size_t i = 0; i < std::size(columns); ++i) {
            const auto it = rec.json.find(columns[i]);
            out << (i ? "," : "") << (it == rec.json.end() ? std::string() : csv_field(*it));
        }
        out << '\n';
    }
}

} // namespace grundylab
