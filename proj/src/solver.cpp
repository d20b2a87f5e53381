#include "mhl/solver.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <unordered_set>

namespace mhl {

std::optional<State> apply_search_op(const DomainSpec& domain, const SearchOp& so,
                                     const State& s, SearchStats& stats) {
    if (so.is_macro) return apply_macro(domain, *so.macro, s, stats);
    return apply_operator(domain, so.op, s, stats);
}

std::vector<SearchOp> make_op_list(const DomainSpec& domain, const MacroSet* macros) {
    std::vector<SearchOp> ops;
    for (int i = 0; i < domain.num_ops(); ++i)
        ops.push_back(SearchOp{false, i, nullptr});
    if (macros)
        for (const Macro& m : *macros)
            ops.push_back(SearchOp{true, 0, &m});
    return ops;
}

namespace {

struct BeamNode {
    State state;
    HValue h;
    std::vector<int> op_indices; // search-op route from the start state
};

std::vector<OperatorId> flatten_route(const std::vector<int>& chain,
                                      const std::vector<SearchOp>& ops) {
    std::vector<OperatorId> route;
    for (int oi : chain) {
        const SearchOp& so = ops[oi];
        if (so.is_macro)
            route.insert(route.end(), so.macro->ops.begin(), so.macro->ops.end());
        else
            route.push_back(so.op);
    }
    return route;
}

} // namespace

LbfsResult lbfs(const DomainSpec& domain, const State& s, const State& goal,
                std::size_t breadth_limit, int depth_limit,
                const std::vector<SearchOp>& ops, SearchStats& stats) {
    LbfsResult result;
    HValue init_h = domain.heuristic(s, goal);
    std::vector<BeamNode> frontier{BeamNode{s, init_h, {}}};

    for (int depth = 1; depth <= depth_limit; ++depth) {
        std::vector<BeamNode> open = std::move(frontier);
        frontier.clear();
        // frontier holds each state once per level; revisits across levels
        // are allowed (the basin around the minimum keeps re-entering, so
        // narrow beams stagnate there and the caller escalates the breadth)
        std::unordered_set<State, StateHash> level_seen;
        for (const BeamNode& node : open) {
            ++stats.expanded_nodes;
            for (int oi = 0; oi < static_cast<int>(ops.size()); ++oi) {
                auto succ = apply_search_op(domain, ops[oi], node.state, stats);
                if (!succ) continue;
                ++stats.generated_nodes;
                HValue h = domain.heuristic(*succ, goal);
                if (h < init_h) {
                    std::vector<int> chain = node.op_indices;
                    chain.push_back(oi);
                    result.route = flatten_route(chain, ops);
                    return result;
                }
                if (!level_seen.insert(*succ).second) continue;
                std::vector<int> chain = node.op_indices;
                chain.push_back(oi);
                frontier.push_back(BeamNode{std::move(*succ), h, std::move(chain)});
                if (frontier.size() > breadth_limit) {
                    // evict a maximum-h node; ties go to the most recent insert
                    std::size_t worst = 0;
                    for (std::size_t i = 1; i < frontier.size(); ++i)
                        if (frontier[i].h >= frontier[worst].h) worst = i;
                    level_seen.erase(frontier[worst].state);
                    frontier.erase(frontier.begin() + static_cast<long>(worst));
                }
            }
        }
        result.max_frontier = std::max(result.max_frontier, frontier.size());
        if (frontier.empty()) break;
    }
    return result;
}

std::vector<OperatorId> ilb(const DomainSpec& domain, const State& s,
                            const State& goal, const EscapeConfig& cfg,
                            const std::vector<SearchOp>& ops, SearchStats& stats) {
    std::size_t b = ops.size();
    std::size_t k = cfg.breadth_constant > 0
                        ? static_cast<std::size_t>(cfg.breadth_constant)
                        : static_cast<std::size_t>(domain.num_ops());
    std::size_t breadth = k;
    constexpr std::size_t cap = std::numeric_limits<std::size_t>::max() / 2;
    std::size_t pow_b = 1;
    for (int exp = 1; exp <= cfg.depth_limit; ++exp) {
        pow_b = (pow_b > cap / b) ? cap : pow_b * b;
        breadth = (k > cap - pow_b) ? cap : k + pow_b;
        auto res = lbfs(domain, s, goal, breadth, cfg.depth_limit, ops, stats);
        if (res.route) return *res.route;
        if (breadth >= cap) break; // already a full BFS to depth D
    }
    throw EscapeExhausted(s, cfg.depth_limit);
}

namespace {

bool id_dfs(const DomainSpec& domain, const State& cur, const State& goal,
            HValue init_h, int depth_left, const std::vector<SearchOp>& ops,
            std::vector<State>& path, std::vector<int>& route, SearchStats& stats) {
    ++stats.expanded_nodes;
    for (int oi = 0; oi < static_cast<int>(ops.size()); ++oi) {
        auto succ = apply_search_op(domain, ops[oi], cur, stats);
        if (!succ) continue;
        ++stats.generated_nodes;
        if (domain.heuristic(*succ, goal) < init_h) {
            route.push_back(oi);
            return true;
        }
        if (depth_left > 1) {
            // loop check against the states along the path to the root
            if (std::find(path.begin(), path.end(), *succ) != path.end()) continue;
            path.push_back(*succ);
            route.push_back(oi);
            if (id_dfs(domain, *succ, goal, init_h, depth_left - 1, ops, path, route, stats))
                return true;
            route.pop_back();
            path.pop_back();
        }
    }
    return false;
}

} // namespace

std::vector<OperatorId> id_escape(const DomainSpec& domain, const State& s,
                                  const State& goal, const EscapeConfig& cfg,
                                  const std::vector<SearchOp>& ops,
                                  SearchStats& stats) {
    HValue init_h = domain.heuristic(s, goal);
    for (int bound = 1; bound <= cfg.depth_limit; ++bound) {
        std::vector<State> path{s};
        std::vector<int> route;
        if (id_dfs(domain, s, goal, init_h, bound, ops, path, route, stats)) {
            std::vector<OperatorId> flat;
            for (int oi : route) {
                const SearchOp& so = ops[oi];
                if (so.is_macro)
                    flat.insert(flat.end(), so.macro->ops.begin(), so.macro->ops.end());
                else
                    flat.push_back(so.op);
            }
            return flat;
        }
    }
    throw EscapeExhausted(s, cfg.depth_limit);
}

SolveOutcome solve_problem(const DomainSpec& domain, const State& initial,
                           const State& goal, MacroSet& macros,
                           const EscapeConfig& escape, bool learning_mode) {
    auto t0 = std::chrono::steady_clock::now();
    SolveOutcome out;
    SearchStats& stats = out.stats;
    State s = initial;
    HValue h = domain.heuristic(s, goal);

    while (h > 0) {
        ++stats.expanded_nodes;
        bool improved = false;
        for (int op = 0; op < domain.num_ops() && !improved; ++op) {
            auto t = apply_operator(domain, op, s, stats);
            if (!t) continue;
            ++stats.generated_nodes;
            HValue ht = domain.heuristic(*t, goal);
            if (ht < h) {
                out.solution.push_back(op);
                s = std::move(*t);
                h = ht;
                improved = true;
            }
        }
        for (std::size_t mi = 0; mi < macros.size() && !improved; ++mi) {
            const Macro& m = macros.macros()[mi];
            auto t = apply_macro(domain, m, s, stats);
            if (!t) continue;
            ++stats.generated_nodes;
            HValue ht = domain.heuristic(*t, goal);
            if (ht < h) {
                out.solution.insert(out.solution.end(), m.ops.begin(), m.ops.end());
                s = std::move(*t);
                h = ht;
                improved = true;
            }
        }
        if (improved) continue;

        // local minimum: no operator in the active set improves h
        ++stats.escapes;
        auto ops = make_op_list(domain, escape.use_macros_in_escape ? &macros : nullptr);
        std::vector<OperatorId> route = escape.method == EscapeMethod::ILB
                                            ? ilb(domain, s, goal, escape, ops, stats)
                                            : id_escape(domain, s, goal, escape, ops, stats);
        HValue h_before = h;
        for (OperatorId op : route) {
            auto t = apply_operator(domain, op, s, stats);
            s = std::move(*t); // escape routes replay by construction
            out.solution.push_back(op);
        }
        h = domain.heuristic(s, goal);
        if (learning_mode) {
            Macro m;
            m.ops = route;
            m.h_before = h_before;
            m.h_after = h;
            if (macros.add(m)) out.new_macros.push_back(m);
        }
    }

    stats.solution_length = static_cast<long long>(out.solution.size());
    stats.wall_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0).count();
    return out;
}

} // namespace mhl
