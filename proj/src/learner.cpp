#include "mhl/learner.hpp"

#include <algorithm>
#include <chrono>

namespace mhl {

Problem generate_training_problem(const DomainSpec& domain, long long walk_length,
                                  Rng& rng, SearchStats& stats) {
    long long before = stats.operator_applications;
    State goal = domain.generate_goal(rng);
    State s = goal;
    for (long long i = 0; i < walk_length; ++i) {
        for (;;) {
            OperatorId op = rng.below_int(domain.num_ops());
            auto t = apply_operator(domain, op, s, stats);
            if (t) {
                s = std::move(*t);
                break;
            }
        }
    }
    stats.generation_applications += stats.operator_applications - before;
    return Problem{std::move(s), std::move(goal)};
}

Problem generate_training_problem_threshold(const DomainSpec& domain,
                                            HValue threshold, Rng& rng,
                                            SearchStats& stats) {
    long long before = stats.operator_applications;
    State goal = domain.generate_goal(rng);
    State s = goal;
    constexpr long long max_draws = 50'000'000;
    long long draws = 0;
    while (domain.heuristic(s, goal) < threshold && draws < max_draws) {
        OperatorId op = rng.below_int(domain.num_ops());
        ++draws;
        auto t = apply_operator(domain, op, s, stats);
        if (t) s = std::move(*t);
    }
    stats.generation_applications += stats.operator_applications - before;
    return Problem{std::move(s), std::move(goal)};
}

LearnReport micro_hillary(const DomainSpec& domain, const LearnerConfig& cfg) {
    Rng rng(cfg.seed);
    return micro_hillary(domain, cfg, MacroSet{}, rng);
}

LearnReport micro_hillary(const DomainSpec& domain, const LearnerConfig& cfg,
                          MacroSet macros, Rng& rng) {
    auto t0 = std::chrono::steady_clock::now();
    LearnReport rep;
    rep.macro_set = std::move(macros);
    SearchStats gen_stats;
    long long difficulty = cfg.initial_walk_length;
    int q = 0;

    while (q <= cfg.quiescence) {
        Problem p = cfg.difficulty_mode == DifficultyMode::WALK_LENGTH
                        ? generate_training_problem(domain, difficulty, rng, gen_stats)
                        : generate_training_problem_threshold(domain, difficulty, rng, gen_stats);
        ++q;
        std::size_t before = rep.macro_set.size();
        SolveOutcome out =
            solve_problem(domain, p.initial, p.goal, rep.macro_set, cfg.escape, true);
        ++rep.problems_solved;
        rep.total_operator_applications += out.stats.operator_applications;
        rep.escapes += out.stats.escapes;
        if (rep.macro_set.size() > before) q = 0; // new macros were learned
        if (cfg.record_traces)
            rep.traces.push_back(trace_from_solution(domain, p.initial, p.goal, out.solution));
        difficulty += cfg.walk_increment;
    }

    // provenance: stamp the acquiring problem index onto each macro
    {
        MacroSet stamped;
        long long idx = 0;
        for (Macro m : rep.macro_set) {
            if (m.acquired_problem < 0) m.acquired_problem = idx;
            stamped.add(std::move(m));
            ++idx;
        }
        rep.macro_set = std::move(stamped);
    }

    rep.generation_operator_applications = gen_stats.generation_applications;
    rep.total_operator_applications += gen_stats.operator_applications;
    rep.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0).count();
    return rep;
}

LearnReport parametric_micro_hillary(const std::function<DomainSpec(int)>& family,
                                     int initial_param, const LearnerConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(cfg.seed);
    LearnReport agg;
    MacroSet macros;
    int param = initial_param;
    for (;;) {
        DomainSpec domain = family(param);
        std::size_t before = macros.size();
        LearnReport pass = micro_hillary(domain, cfg, std::move(macros), rng);
        macros = std::move(pass.macro_set);
        agg.problems_solved += pass.problems_solved;
        agg.total_operator_applications += pass.total_operator_applications;
        agg.generation_operator_applications += pass.generation_operator_applications;
        agg.escapes += pass.escapes;
        agg.per_parameter_counts.push_back(
            {param, static_cast<int>(macros.size() - before)});
        if (macros.size() == before) break; // a full pass added nothing
        ++param;
    }
    agg.macro_set = std::move(macros);
    agg.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0).count();
    return agg;
}

TrainingTrace trace_from_solution(const DomainSpec& domain, const State& initial,
                                  const State& goal,
                                  const std::vector<OperatorId>& ops) {
    TrainingTrace trace;
    SearchStats scratch;
    State s = initial;
    trace.states.push_back(s);
    trace.h_values.push_back(domain.heuristic(s, goal));
    for (OperatorId op : ops) {
        auto t = apply_operator(domain, op, s, scratch);
        if (!t) throw Error("solution does not replay");
        s = std::move(*t);
        trace.states.push_back(s);
        trace.h_values.push_back(domain.heuristic(s, goal));
        trace.ops.push_back(op);
    }
    return trace;
}

namespace {

bool is_local_minimum(const DomainSpec& domain, const State& s, const State& goal,
                      HValue h, SearchStats& stats) {
    for (int op = 0; op < domain.num_ops(); ++op) {
        auto t = apply_operator(domain, op, s, stats);
        if (t && domain.heuristic(*t, goal) < h) return false;
    }
    return true;
}

} // namespace

std::vector<Macro> extract_macros(const TrainingTrace& trace, FilterStrategy strategy,
                                  const DomainSpec& domain) {
    std::vector<Macro> result;
    if (trace.ops.empty()) return result;
    const State& goal = trace.states.back();
    const auto& h = trace.h_values;
    std::size_t n = trace.ops.size();
    SearchStats scratch;

    auto push_unique = [&result](Macro m) {
        for (const Macro& r : result)
            if (r.ops == m.ops) return;
        result.push_back(std::move(m));
    };

    auto subpath = [&trace](std::size_t j, std::size_t k) {
        Macro m;
        m.ops.assign(trace.ops.begin() + static_cast<long>(j),
                     trace.ops.begin() + static_cast<long>(j + k));
        return m;
    };

    // index of the first later state with strictly lower h, relative offset
    auto first_better = [&h, n](std::size_t j) -> std::size_t {
        for (std::size_t k = 1; j + k <= n; ++k)
            if (h[j + k] < h[j]) return k;
        return 0;
    };

    switch (strategy) {
        case FilterStrategy::MIN_TO_BETTER:
            for (std::size_t j = 0; j < n; ++j) {
                if (h[j] == 0) continue;
                if (h[j + 1] < h[j]) continue; // a single step improves; not a minimum
                if (!is_local_minimum(domain, trace.states[j], goal, h[j], scratch))
                    continue;
                std::size_t k = first_better(j);
                if (k > 0) push_unique(subpath(j, k));
            }
            break;
        case FilterStrategy::MIN_TO_MIN: {
            // stuck points: the states where the hill-climber itself had to
            // escape.  These are minima at a new running-best h; minima passed
            // through while replaying an escape route sit above the running
            // best and do not count.  Macros span from each stuck point to
            // the next one, or to the end of the search.
            std::vector<std::size_t> stuck;
            HValue best = h[0] + 1;
            for (std::size_t j = 0; j < n; ++j) {
                if (h[j] >= best) continue;
                best = h[j];
                if (h[j] == 0 || h[j + 1] < h[j]) continue;
                if (is_local_minimum(domain, trace.states[j], goal, h[j], scratch))
                    stuck.push_back(j);
            }
            for (std::size_t i = 0; i < stuck.size(); ++i) {
                std::size_t end = i + 1 < stuck.size() ? stuck[i + 1] : n;
                push_unique(subpath(stuck[i], end - stuck[i]));
            }
            break;
        }
        case FilterStrategy::ANY_TO_BETTER:
            for (std::size_t j = 0; j < n; ++j) {
                if (h[j] == 0) continue;
                if (h[j + 1] < h[j]) continue; // reached by a single improving step
                std::size_t k = first_better(j);
                if (k > 0) push_unique(subpath(j, k));
            }
            break;
    }
    return result;
}

} // namespace mhl
