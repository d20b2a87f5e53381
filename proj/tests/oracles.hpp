#ifndef MHL_TESTS_ORACLES_HPP
#define MHL_TESTS_ORACLES_HPP

// Brute-force reference implementations the real code is checked against.
// Deliberately simple and independent of the library's search code.

#include <deque>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "mhl/core.hpp"

namespace oracle {

using mhl::DomainSpec;
using mhl::HValue;
using mhl::OperatorId;
using mhl::State;
using mhl::StateHash;

// plain BFS shortest path; nullopt when unreachable within max_depth
inline std::optional<std::vector<OperatorId>>
bfs_solve(const DomainSpec& d, const State& from, const State& to,
          int max_depth = 1 << 20) {
    if (from == to) return std::vector<OperatorId>{};
    mhl::SearchStats scratch;
    std::unordered_map<State, std::pair<State, OperatorId>, StateHash> parent;
    std::deque<State> frontier{from};
    parent.emplace(from, std::make_pair(from, -1));
    for (int depth = 1; depth <= max_depth && !frontier.empty(); ++depth) {
        std::deque<State> next;
        for (const State& cur : frontier) {
            for (int op = 0; op < d.num_ops(); ++op) {
                auto t = mhl::apply_operator(d, op, cur, scratch);
                if (!t || parent.count(*t)) continue;
                parent.emplace(*t, std::make_pair(cur, op));
                if (*t == to) {
                    std::vector<OperatorId> route;
                    State s = to;
                    while (parent.at(s).second >= 0) {
                        route.push_back(parent.at(s).second);
                        s = parent.at(s).first;
                    }
                    return std::vector<OperatorId>(route.rbegin(), route.rend());
                }
                next.push_back(std::move(*t));
            }
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

// BFS distance to the nearest strictly-better state; nullopt past max_depth
// or when the reachable component has no better state
inline std::optional<int> bfs_radius(const DomainSpec& d, const State& s,
                                     const State& goal, int max_depth) {
    if (d.heuristic(s, goal) == 0) return 0;
    HValue h0 = d.heuristic(s, goal);
    mhl::SearchStats scratch;
    std::unordered_set<State, StateHash> seen{s};
    std::deque<State> frontier{s};
    for (int depth = 1; depth <= max_depth; ++depth) {
        std::deque<State> next;
        for (const State& cur : frontier) {
            for (int op = 0; op < d.num_ops(); ++op) {
                auto t = mhl::apply_operator(d, op, cur, scratch);
                if (!t || !seen.insert(*t).second) continue;
                if (d.heuristic(*t, goal) < h0) return depth;
                next.push_back(std::move(*t));
            }
        }
        if (next.empty()) return std::nullopt;
        frontier = std::move(next);
    }
    return std::nullopt;
}

// all states reachable from `from` (for small spaces)
inline std::unordered_set<State, StateHash>
reachable_set(const DomainSpec& d, const State& from) {
    mhl::SearchStats scratch;
    std::unordered_set<State, StateHash> seen{from};
    std::deque<State> frontier{from};
    while (!frontier.empty()) {
        State cur = std::move(frontier.front());
        frontier.pop_front();
        for (int op = 0; op < d.num_ops(); ++op) {
            auto t = mhl::apply_operator(d, op, cur, scratch);
            if (t && seen.insert(*t).second) frontier.push_back(std::move(*t));
        }
    }
    return seen;
}

// replays a basic-operator sequence; nullopt when a step is undefined
inline std::optional<State> replay(const DomainSpec& d, const State& from,
                                   const std::vector<OperatorId>& ops) {
    mhl::SearchStats scratch;
    State s = from;
    for (OperatorId op : ops) {
        auto t = mhl::apply_operator(d, op, s, scratch);
        if (!t) return std::nullopt;
        s = std::move(*t);
    }
    return s;
}

// true when no single basic operator strictly lowers h
inline bool is_local_minimum(const DomainSpec& d, const State& s,
                             const State& goal) {
    mhl::SearchStats scratch;
    HValue h0 = d.heuristic(s, goal);
    if (h0 == 0) return false;
    for (int op = 0; op < d.num_ops(); ++op) {
        auto t = mhl::apply_operator(d, op, s, scratch);
        if (t && d.heuristic(*t, goal) < h0) return false;
    }
    return true;
}

} // namespace oracle

#endif
