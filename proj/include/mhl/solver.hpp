#ifndef MHL_SOLVER_HPP
#define MHL_SOLVER_HPP

#include <optional>
#include <vector>

#include "mhl/core.hpp"

namespace mhl {

enum class EscapeMethod { ILB, ID };

struct EscapeConfig {
    EscapeMethod method = EscapeMethod::ILB;
    int depth_limit = 100;      // D
    int breadth_constant = 0;   // k; 0 means |basic operators|
    bool use_macros_in_escape = false;
};

struct SolveOutcome {
    std::vector<OperatorId> solution; // basic operators only, macros flattened
    SearchStats stats;
    std::vector<Macro> new_macros;    // nonempty only in learning mode
};

// A hill-climbing move candidate: either a basic operator or a macro.
struct SearchOp {
    bool is_macro = false;
    OperatorId op = 0;     // valid when !is_macro
    const Macro* macro = nullptr;
};

std::optional<State> apply_search_op(const DomainSpec& domain, const SearchOp& so,
                                     const State& s, SearchStats& stats);

// Basic operators in domain order; optionally followed by macros in
// acquisition order.
std::vector<SearchOp> make_op_list(const DomainSpec& domain,
                                   const MacroSet* macros);

struct LbfsResult {
    // flattened route to the first generated state with h < h(start), or
    // nullopt when none was found within the limits
    std::optional<std::vector<OperatorId>> route;
    std::size_t max_frontier = 0;
};

// Breadth-limited BFS: level-by-level expansion to depth <= depth_limit,
// truncating each level's frontier to breadth_limit nodes by evicting
// maximum-h nodes (most recently inserted among ties).
LbfsResult lbfs(const DomainSpec& domain, const State& s, const State& goal,
                std::size_t breadth_limit, int depth_limit,
                const std::vector<SearchOp>& ops, SearchStats& stats);

// Iterative limited BFS: breadth_limit = k + b^exp for exp = 1..D; the last
// iteration degenerates to full BFS to depth D.  Throws EscapeExhausted.
std::vector<OperatorId> ilb(const DomainSpec& domain, const State& s,
                            const State& goal, const EscapeConfig& cfg,
                            const std::vector<SearchOp>& ops, SearchStats& stats);

// Iterative-deepening DFS with root-path loop checking; routes found are
// shortest.  Throws EscapeExhausted.
std::vector<OperatorId> id_escape(const DomainSpec& domain, const State& s,
                                  const State& goal, const EscapeConfig& cfg,
                                  const std::vector<SearchOp>& ops,
                                  SearchStats& stats);

// Simple hill-climbing: take the first improving operator (basic operators in
// domain order, then macros in acquisition order); on a local minimum invoke
// the escape procedure and, in learning mode, record the route as a macro
// (genuinely new routes only).  Macros acquired mid-solve are used for the
// remainder of the same solve.
SolveOutcome solve_problem(const DomainSpec& domain, const State& initial,
                           const State& goal, MacroSet& macros,
                           const EscapeConfig& escape, bool learning_mode);

} // namespace mhl

#endif
