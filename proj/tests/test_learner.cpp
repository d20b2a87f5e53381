#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mhl/domains.hpp"
#include "mhl/learner.hpp"
#include "oracles.hpp"

using namespace mhl;

TEST_CASE("training problems are generated by counted reverse random walks") {
    DomainSpec d = npuzzle_domain(3);
    Rng rng(1);
    SearchStats st;
    Problem p = generate_training_problem(d, 50, rng, st);
    CHECK(npuzzle_solvable(p.initial, p.goal));
    CHECK(st.operator_applications >= 50); // failed draws are counted too
    CHECK(st.generation_applications == st.operator_applications);
}

TEST_CASE("threshold-mode generation walks until the heuristic bar is met") {
    DomainSpec d = npuzzle_domain(3);
    Rng rng(2);
    SearchStats st;
    Problem p = generate_training_problem_threshold(d, 100, rng, st);
    CHECK(d.heuristic(p.initial, p.goal) >= 100);
}

TEST_CASE("learning quiesces and the macro set solves without escapes") {
    DomainSpec d = npuzzle_domain(3);
    LearnerConfig cfg;
    cfg.seed = 17;
    LearnReport rep = micro_hillary(d, cfg);
    CHECK(rep.problems_solved >= cfg.quiescence + 1);
    CHECK(rep.macro_set.size() > 0);
    CHECK(rep.escapes >= static_cast<long long>(rep.macro_set.size()));

    // provenance got stamped
    for (const Macro& m : rep.macro_set) {
        CHECK(m.acquired_problem >= 0);
        CHECK(m.h_before > m.h_after);
    }

    State g = npuzzle_canonical_goal(3);
    EscapeConfig esc;
    Rng rng(99);
    MacroSet ms = rep.macro_set;
    for (int i = 0; i < 100; ++i) {
        State init = npuzzle_random_solvable(3, rng);
        auto out = solve_problem(d, init, g, ms, esc, false);
        CHECK(out.stats.escapes == 0);
        auto end = oracle::replay(d, init, out.solution);
        REQUIRE(end);
        CHECK(*end == g);
    }
    CHECK(ms.size() == rep.macro_set.size()); // non-learning mode adds nothing
}

TEST_CASE("a domain without local minima learns nothing in Q+1 problems") {
    GridSpec spec{8, 8, {}};
    DomainSpec d = grid_domain(spec);
    LearnerConfig cfg;
    cfg.seed = 5;
    cfg.quiescence = 10;
    LearnReport rep = micro_hillary(d, cfg);
    CHECK(rep.macro_set.empty());
    CHECK(rep.problems_solved == cfg.quiescence + 1);
    CHECK(rep.escapes == 0);
}

TEST_CASE("learning runs are deterministic given the seed") {
    DomainSpec d = npuzzle_domain(3);
    LearnerConfig cfg;
    cfg.seed = 23;
    LearnReport a = micro_hillary(d, cfg);
    LearnReport b = micro_hillary(d, cfg);
    CHECK(a.problems_solved == b.problems_solved);
    CHECK(a.total_operator_applications == b.total_operator_applications);
    REQUIRE(a.macro_set.size() == b.macro_set.size());
    for (std::size_t i = 0; i < a.macro_set.size(); ++i)
        CHECK(a.macro_set.macros()[i].ops == b.macro_set.macros()[i].ops);
}

TEST_CASE("traces record states, operators and heuristic values") {
    DomainSpec d = npuzzle_domain(3);
    State g = npuzzle_canonical_goal(3);
    Rng rng(3);
    State init = npuzzle_random_solvable(3, rng);
    MacroSet ms;
    EscapeConfig esc;
    auto out = solve_problem(d, init, g, ms, esc, true);
    TrainingTrace trace = trace_from_solution(d, init, g, out.solution);
    CHECK(trace.states.size() == trace.ops.size() + 1);
    CHECK(trace.states.front() == init);
    CHECK(trace.states.back() == g);
    CHECK(trace.h_values.back() == 0);
    for (std::size_t i = 0; i < trace.states.size(); ++i)
        CHECK(trace.h_values[i] == d.heuristic(trace.states[i], g));
}

TEST_CASE("offline filters: minimum-to-better equals the escape routes") {
    DomainSpec d = npuzzle_domain(3);
    State g = npuzzle_canonical_goal(3);
    Rng rng(8);
    EscapeConfig esc;
    int with_minima = 0;
    while (with_minima < 10) {
        State init = npuzzle_random_solvable(3, rng);
        MacroSet ms;
        auto out = solve_problem(d, init, g, ms, esc, true);
        if (out.new_macros.empty()) continue;
        ++with_minima;
        TrainingTrace trace = trace_from_solution(d, init, g, out.solution);
        auto mtb = extract_macros(trace, FilterStrategy::MIN_TO_BETTER, d);
        // every live-learned escape route appears among the filtered macros
        for (const Macro& learned : out.new_macros) {
            bool found = false;
            for (const Macro& m : mtb) found = found || m.ops == learned.ops;
            CHECK(found);
        }
    }
}

TEST_CASE("offline filter orderings: min-to-min longer, any-to-better more") {
    DomainSpec d = npuzzle_domain(3);
    State g = npuzzle_canonical_goal(3);
    Rng rng(12);
    EscapeConfig esc;
    std::size_t n_mtb = 0, n_atb = 0, len_mtb = 0, len_mtm = 0, c_mtb = 0,
                c_mtm = 0;
    int considered = 0;
    while (considered < 20) {
        State init = npuzzle_random_solvable(3, rng);
        MacroSet ms;
        auto out = solve_problem(d, init, g, ms, esc, true);
        if (out.new_macros.empty()) continue;
        ++considered;
        TrainingTrace trace = trace_from_solution(d, init, g, out.solution);
        for (auto& m : extract_macros(trace, FilterStrategy::MIN_TO_BETTER, d)) {
            ++n_mtb;
            ++c_mtb;
            len_mtb += m.ops.size();
        }
        for (auto& m : extract_macros(trace, FilterStrategy::MIN_TO_MIN, d)) {
            ++c_mtm;
            len_mtm += m.ops.size();
        }
        n_atb += extract_macros(trace, FilterStrategy::ANY_TO_BETTER, d).size();
    }
    // min-to-min spans minimum to minimum, so its macros are longer on average
    CHECK(len_mtm * c_mtb > len_mtb * c_mtm);
    // any-to-better has a weaker start condition, so it emits at least as many
    CHECK(n_atb >= n_mtb);
}

TEST_CASE("parametric learning carries macros across the parameter family") {
    LearnerConfig cfg;
    cfg.seed = 4;
    cfg.quiescence = 20;
    auto family = [](int n) { return npuzzle_domain(n); };
    LearnReport rep = parametric_micro_hillary(family, 3, cfg);
    CHECK(rep.per_parameter_counts.size() >= 2);
    CHECK(rep.per_parameter_counts.front().first == 3);
    CHECK(rep.per_parameter_counts.back().second == 0); // quiescent final pass
    CHECK(rep.macro_set.size() > 0);
}
