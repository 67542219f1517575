#pragma once

#include <grundylab/graph.hpp>
#include <grundylab/solver.hpp>

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace grundylab {

/// Bad claim id or parameters; the CLI maps it to exit code 3.
class CampaignUsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Claims:
///   CUBIC-CHAR    linear cubic classifier == exact Grundy number
///   CUBIC-PARTIAL partial Grundy number is 4, or 2 for K_{3,3}
///   C4FREE-R      r-regular without induced C_4 => Grundy number r+1
///   ATOM-EQ       induced minimal t-atom <=> Grundy number >= t
///   GRKI          G_{r,k,i} has Grundy number k
///   GR-SOUND      regular outputs of random GSTAR(r) scripts stay below r+1
///   ORACLE-EQ     exact solver == factorial oracle
///   BIPARTITE-2   Grundy number <= 2 <=> complete bipartite
///   TWIN-BOUND    Grundy number <= twin bound; solver colorings respect
///                 module and (0,l)-twin color limits
std::vector<std::string> known_claims();

struct CampaignOptions {
    std::string claim;
    std::optional<int> r;
    int max_n = 0;
    /// graph6 list file, "-" for standard input. Overrides the generator.
    std::optional<std::filesystem::path> input;
    SearchBudget budget;
    /// ATOM-EQ: highest level checked (default 5).
    std::optional<int> t;
    /// GR-SOUND: number of random scripts and the first seed.
    int samples = 200;
    std::uint64_t seed = 1;
    /// Adds wall time to the summary, which makes reports differ by run.
    bool timing = false;
    /// 0 = GRUNDYLAB_THREADS or the hardware concurrency.
    int threads = 0;
};

enum class RecordStatus { pass, fail, skip, unknown };
const char* to_string(RecordStatus s);

struct Record {
    RecordStatus status = RecordStatus::skip;
    /// index, graph6, n, r, girth, c4_free, invariants, facts, status, detail.
    nlohmann::ordered_json json;
};

struct VerificationReport {
    std::string claim;
    std::vector<Record> records;
    nlohmann::ordered_json summary;

    /// 0 all pass, 1 some record failed, 2 no failure but some unknown.
    int exit_code() const;
};

/// Throws CampaignUsageError on bad options, GraphError / Graph6Error on
/// unreadable input.
VerificationReport run_campaign(const CampaignOptions& options);

/// One JSON object per record, then the summary object.
void write_json_lines(std::ostream& out, const VerificationReport& report);
/// Flat table of the common record fields.
void write_csv(std::ostream& out, const VerificationReport& report);

/// Case label of a 4-regular graph: "c4" (has an induced C_4), "g3",
/// "g5-nc" / "g5-plain", "g6-nc" / "g6-plain" (with / without a
/// neighbor-connected induced cycle of the girth length), "g7+". Empty for
/// graphs that are not 4-regular.
std::optional<std::string> stratum_4_regular(const Graph& g);

/// Every r-regular graph on more than N_r vertices has partial Grundy
/// number r+1. Returns the known upper bound 2r^3 - r^2 + r on N_r, which
/// partial Grundy campaigns report next to their largest exception.
long long partial_grundy_order_bound(int r);

/// GRUNDYLAB_THREADS when set to a positive integer, else the hardware
/// concurrency (at least 1).
int default_thread_count();

} // namespace grundylab
