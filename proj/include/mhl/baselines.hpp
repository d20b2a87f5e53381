#ifndef MHL_BASELINES_HPP
#define MHL_BASELINES_HPP

#include <vector>

#include "mhl/core.hpp"
#include "mhl/solver.hpp"

namespace mhl {

struct BaselineResult {
    bool budget_exceeded = false;
    SolveOutcome outcome; // valid only when !budget_exceeded
};

// Best-first search on h alone: expands the minimum-h frontier node,
// tie-breaking on smaller g then insertion order.  Duplicate states keep the
// better-g copy.  node_budget caps expansions (<=0 means unlimited).
BaselineResult best_first(const DomainSpec& domain, const Problem& problem,
                          long long node_budget = 0);

// Best-first on f = (1-w)*g + w*h, 0 <= w <= 1; w = 0 yields shortest
// solutions, w = 1 reduces to best_first ordering.
BaselineResult weighted_astar(const DomainSpec& domain, const Problem& problem,
                              double w, long long node_budget = 0);

} // namespace mhl

#endif
