#include "mhl/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <unordered_map>

namespace mhl {

namespace {

struct Entry {
    double f;
    long long g;
    long long seq;
    int node; // index into node arena
};

struct EntryWorse {
    bool operator()(const Entry& a, const Entry& b) const {
        if (a.f != b.f) return a.f > b.f;
        if (a.g != b.g) return a.g > b.g;
        return a.seq > b.seq;
    }
};

struct Node {
    State state;
    int parent;
    OperatorId op;
    long long g;
};

BaselineResult frontier_search(const DomainSpec& domain, const Problem& problem,
                               double w_g, double w_h, long long node_budget) {
    auto t0 = std::chrono::steady_clock::now();
    BaselineResult result;
    SolveOutcome& out = result.outcome;
    SearchStats& stats = out.stats;

    std::vector<Node> arena;
    std::priority_queue<Entry, std::vector<Entry>, EntryWorse> open;
    std::unordered_map<State, long long, StateHash> best_g;
    long long seq = 0;

    HValue h0 = domain.heuristic(problem.initial, problem.goal);
    arena.push_back(Node{problem.initial, -1, -1, 0});
    best_g[problem.initial] = 0;
    open.push(Entry{w_h * static_cast<double>(h0), 0, seq++, 0});
    ++stats.generated_nodes;

    while (!open.empty()) {
        Entry e = open.top();
        open.pop();
        const Node& node = arena[e.node];
        auto it = best_g.find(node.state);
        if (it != best_g.end() && it->second < node.g) continue; // stale copy

        if (node.state == problem.goal) {
            std::vector<OperatorId> solution;
            for (int i = e.node; arena[i].parent >= 0; i = arena[i].parent)
                solution.push_back(arena[i].op);
            std::reverse(solution.begin(), solution.end());
            out.solution = std::move(solution);
            stats.solution_length = static_cast<long long>(out.solution.size());
            stats.wall_ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - t0).count();
            return result;
        }

        if (node_budget > 0 && stats.expanded_nodes >= node_budget) {
            result.budget_exceeded = true;
            stats.wall_ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - t0).count();
            return result;
        }
        ++stats.expanded_nodes;

        State cur = node.state; // arena may reallocate below
        long long g = node.g;
        int cur_idx = e.node;
        for (int op = 0; op < domain.num_ops(); ++op) {
            auto succ = apply_operator(domain, op, cur, stats);
            if (!succ) continue;
            ++stats.generated_nodes;
            long long ng = g + 1;
            auto found = best_g.find(*succ);
            if (found != best_g.end() && found->second <= ng) continue;
            best_g[*succ] = ng;
            HValue h = domain.heuristic(*succ, problem.goal);
            arena.push_back(Node{std::move(*succ), cur_idx, op, ng});
            open.push(Entry{w_g * static_cast<double>(ng) + w_h * static_cast<double>(h),
                            ng, seq++, static_cast<int>(arena.size()) - 1});
        }
    }
    throw Error("search space exhausted without reaching the goal");
}

} // namespace

BaselineResult best_first(const DomainSpec& domain, const Problem& problem,
                          long long node_budget) {
    return frontier_search(domain, problem, 0.0, 1.0, node_budget);
}

BaselineResult weighted_astar(const DomainSpec& domain, const Problem& problem,
                              double w, long long node_budget) {
    if (w < 0.0 || w > 1.0) throw InvalidParameter("weight must be in [0, 1]");
    return frontier_search(domain, problem, 1.0 - w, w, node_budget);
}

} // namespace mhl
