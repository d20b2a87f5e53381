#ifndef MHL_LEARNER_HPP
#define MHL_LEARNER_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "mhl/core.hpp"
#include "mhl/solver.hpp"

namespace mhl {

enum class DifficultyMode {
    WALK_LENGTH,         // random-walk length grows by walk_increment per problem
    HEURISTIC_THRESHOLD, // walk until h >= threshold; threshold grows instead
};

struct LearnerConfig {
    int quiescence = 50; // Q: consecutive no-acquisition problems before quitting
    long long initial_walk_length = 100;
    long long walk_increment = 100;
    EscapeConfig escape;
    std::uint64_t seed = 0;
    DifficultyMode difficulty_mode = DifficultyMode::WALK_LENGTH;
    bool record_traces = false; // keep per-problem solution traces (offline filters)
};

struct TrainingTrace {
    std::vector<State> states; // |states| = |ops| + 1; states.back() is the goal
    std::vector<OperatorId> ops;
    std::vector<HValue> h_values;
};

struct LearnReport {
    MacroSet macro_set;
    long long problems_solved = 0;
    long long total_operator_applications = 0; // search + generation
    long long generation_operator_applications = 0;
    long long escapes = 0;
    double wall_ms = 0.0;
    std::vector<TrainingTrace> traces; // only when record_traces
    // parametric runs: macros acquired at each parameter value
    std::vector<std::pair<int, int>> per_parameter_counts;
};

// Random walk backwards from a freshly generated goal state; inapplicable
// draws are re-drawn (still counted).  Walk applications are also recorded
// under stats.generation_applications.
Problem generate_training_problem(const DomainSpec& domain, long long walk_length,
                                  Rng& rng, SearchStats& stats);

// As above but walks until heuristic(state, goal) >= threshold.
Problem generate_training_problem_threshold(const DomainSpec& domain,
                                            HValue threshold, Rng& rng,
                                            SearchStats& stats);

// Off-line macro learning: solve training problems of increasing difficulty in
// learning mode until Q consecutive problems acquire no macro.
LearnReport micro_hillary(const DomainSpec& domain, const LearnerConfig& cfg);

// Warm-start variant used by the parametric learner; continues an existing
// macro set and RNG stream.
LearnReport micro_hillary(const DomainSpec& domain, const LearnerConfig& cfg,
                          MacroSet macros, Rng& rng);

// Runs micro_hillary at increasing domain parameters, carrying the macro set
// forward; stops when a full pass adds no macro.
LearnReport parametric_micro_hillary(const std::function<DomainSpec(int)>& family,
                                     int initial_param, const LearnerConfig& cfg);

enum class FilterStrategy { MIN_TO_BETTER, MIN_TO_MIN, ANY_TO_BETTER };

// Off-line attention filters over a solution trace.  The live learner
// acquires minimum-to-better macros directly via the escape procedure; these
// are for trace analysis and filter comparisons.
std::vector<Macro> extract_macros(const TrainingTrace& trace, FilterStrategy strategy,
                                  const DomainSpec& domain);

// Replays a solution and records states and heuristic values along it.
TrainingTrace trace_from_solution(const DomainSpec& domain, const State& initial,
                                  const State& goal,
                                  const std::vector<OperatorId>& ops);

} // namespace mhl

#endif
