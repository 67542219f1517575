#pragma once

#include <grundylab/coloring.hpp>
#include <grundylab/graph.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace grundylab {

inline constexpr int kOracleMaxOrder = 9;
inline constexpr int kPartialGrundyMaxOrder = 12;

struct SearchBudget {
    /// Search nodes allowed per call before giving up.
    std::uint64_t node_limit = 200'000'000;
};

enum class SolveStatus { solved, budget_exhausted };

/// Outcome of an exact search. When the budget runs out the bounds are
/// still valid but `value` stays empty; callers must not read a bound as
/// the answer.
struct SolveResult {
    SolveStatus status = SolveStatus::solved;
    std::optional<int> value;
    int lower_bound = 0;
    int upper_bound = 0;
    /// Coloring certifying `lower_bound`: a Grundy coloring (Grundy
    /// search) or a partial Grundy coloring (partial search).
    Coloring witness;
    std::uint64_t nodes = 0;

    bool solved() const { return status == SolveStatus::solved; }
};

class BudgetExhausted : public std::runtime_error {
public:
    explicit BudgetExhausted(const SolveResult& partial);
    const SolveResult& result() const { return result_; }

private:
    SolveResult result_;
};

/// Max over all n! orderings of the first-fit color count. n <= 9.
int grundy_oracle(const Graph& g);

/// Exact Grundy number by branch and bound over Grundy partial colorings.
SolveResult grundy_exact(const Graph& g, const SearchBudget& budget = {});

/// grundy_exact(g).value, throwing BudgetExhausted instead of returning
/// an unsolved result.
int grundy_number(const Graph& g, const SearchBudget& budget = {});

/// Exact partial Grundy number. n <= 12.
SolveResult partial_grundy_exact(const Graph& g, const SearchBudget& budget = {});
int partial_grundy_number(const Graph& g, const SearchBudget& budget = {});

/// Per-vertex color caps valid in every Grundy coloring: the twin caps
/// tightened by iterating "a vertex of color c needs c-1 neighbors able to
/// carry colors 1..c-1" to a fixed point.
std::vector<int> grundy_color_caps(const Graph& g);

} // namespace grundylab
