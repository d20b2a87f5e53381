#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mhl/baselines.hpp"
#include "mhl/domains.hpp"
#include "mhl/io.hpp"
#include "mhl/learner.hpp"
#include "mhl/solver.hpp"
#include "mhl/verify.hpp"

using namespace mhl;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kConfigError = 2;
constexpr int kEscapeExhausted = 3;

struct Options {
    std::string domain = "npuzzle";
    int param = 4;
    std::string heuristic;
    std::uint64_t seed = 0;
    int quiescence = 50;
    long long walk_initial = 100;
    long long walk_increment = 100;
    std::string difficulty = "walk"; // walk | threshold
    std::string escape = "ilb";      // ilb | id
    int depth_limit = 100;
    int breadth_constant = 0;
    std::string out;
    std::string format = "csv"; // csv | jsonl
    std::string macro_file;
    std::string problem_file;
    std::string solver = "mh"; // mh | best-first | wastar
    double weight = 0.75;
    long long budget = 0;
    int count = 100;
    long long walk_length = 1'000'000;
    std::string method = "even-permutation"; // even-permutation | random-walk
    std::vector<std::string> checks;
    bool exhaustive = false;
    bool validate = false;
    int jobs = 1;
};

EscapeConfig escape_config(const Options& o) {
    EscapeConfig esc;
    if (o.escape == "ilb")
        esc.method = EscapeMethod::ILB;
    else if (o.escape == "id")
        esc.method = EscapeMethod::ID;
    else
        throw InvalidParameter("unknown escape method: " + o.escape);
    esc.depth_limit = o.depth_limit;
    esc.breadth_constant = o.breadth_constant;
    return esc;
}

LearnerConfig learner_config(const Options& o) {
    LearnerConfig cfg;
    cfg.quiescence = o.quiescence;
    cfg.initial_walk_length = o.walk_initial;
    cfg.walk_increment = o.walk_increment;
    cfg.escape = escape_config(o);
    cfg.seed = o.seed;
    if (o.difficulty == "walk")
        cfg.difficulty_mode = DifficultyMode::WALK_LENGTH;
    else if (o.difficulty == "threshold")
        cfg.difficulty_mode = DifficultyMode::HEURISTIC_THRESHOLD;
    else
        throw InvalidParameter("unknown difficulty mode: " + o.difficulty);
    return cfg;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty())
        std::cout << text;
    else
        save_file(path, text);
}

MacroSet load_macro_file(const std::string& path, DomainSpec* dom = nullptr) {
    if (path.empty()) return MacroSet{};
    return macros_from_string(load_file(path), dom);
}

// ------------------------------------------------------------------- learn

int cmd_learn(const Options& o) {
    DomainSpec d = make_domain(o.domain, o.param, o.heuristic);
    LearnReport rep = micro_hillary(d, learner_config(o));
    emit(macros_to_string(d, rep.macro_set), o.out);
    std::ostringstream report;
    write_learn_report(report, d, rep);
    if (o.out.empty())
        std::cout << report.str();
    else
        save_file(o.out + ".report", report.str());
    return kOk;
}

int cmd_parametric_learn(const Options& o) {
    std::string heuristic = o.heuristic;
    std::string name = o.domain;
    auto family = [&name, &heuristic](int p) {
        return make_domain(name, p, heuristic);
    };
    LearnReport rep = parametric_micro_hillary(family, o.param, learner_config(o));
    int final_param = rep.per_parameter_counts.empty()
                          ? o.param
                          : rep.per_parameter_counts.back().first;
    DomainSpec d = make_domain(o.domain, final_param, o.heuristic);
    emit(macros_to_string(d, rep.macro_set), o.out);
    std::ostringstream report;
    write_learn_report(report, d, rep);
    if (o.out.empty())
        std::cout << report.str();
    else
        save_file(o.out + ".report", report.str());
    return kOk;
}

// ------------------------------------------------------------------- solve

int cmd_solve(const Options& o) {
    std::istringstream in(load_file(o.problem_file));
    DomainSpec d;
    Problem p = read_problem(in, &d);
    if (!o.heuristic.empty()) d = make_domain(d.name, d.parameter, o.heuristic);
    MacroSet macros = load_macro_file(o.macro_file);
    SolveOutcome out = solve_problem(d, p.initial, p.goal, macros,
                                     escape_config(o), false);
    Macro as_macro;
    as_macro.ops = out.solution;
    std::cout << macro_to_names(d, as_macro) << "\n";
    std::cout << "length " << out.solution.size()
              << " operator_applications " << out.stats.operator_applications
              << " escapes " << out.stats.escapes << "\n";
    if (o.validate) {
        SearchStats scratch;
        State s = p.initial;
        for (OperatorId op : out.solution) {
            auto t = apply_operator(d, op, s, scratch);
            if (!t) {
                std::cerr << "validation failed: solution does not replay\n";
                return kCheckFailed;
            }
            s = std::move(*t);
        }
        if (s != p.goal) {
            std::cerr << "validation failed: replay does not reach the goal\n";
            return kCheckFailed;
        }
        std::cout << "validated\n";
    }
    return kOk;
}

// -------------------------------------------------------------------- bench

struct BenchRow {
    int problem_id = 0;
    SearchStats stats;
    std::size_t solution_length = 0;
    bool budget_exceeded = false;
};

std::vector<Problem> bench_problems(const DomainSpec& d, const Options& o,
                                    Rng& rng) {
    std::vector<Problem> ps;
    for (int i = 0; i < o.count; ++i) {
        if (d.name == "npuzzle") {
            ps.push_back(Problem{npuzzle_random_solvable(d.parameter, rng),
                                 npuzzle_canonical_goal(d.parameter)});
        } else {
            SearchStats scratch;
            ps.push_back(generate_training_problem(d, o.walk_length, rng, scratch));
        }
    }
    return ps;
}

BenchRow bench_one(const DomainSpec& d, const Problem& p, const Options& o,
                   const MacroSet& macros, int id) {
    BenchRow row;
    row.problem_id = id;
    auto t0 = std::chrono::steady_clock::now();
    if (o.solver == "mh") {
        MacroSet local = macros; // learning off; copied for thread safety
        SolveOutcome out = solve_problem(d, p.initial, p.goal, local,
                                         escape_config(o), false);
        row.stats = out.stats;
        row.solution_length = out.solution.size();
    } else {
        BaselineResult res = o.solver == "best-first"
                                 ? best_first(d, p, o.budget)
                                 : weighted_astar(d, p, o.weight, o.budget);
        row.budget_exceeded = res.budget_exceeded;
        row.stats = res.outcome.stats;
        if (!res.budget_exceeded)
            row.solution_length = res.outcome.solution.size();
    }
    row.stats.wall_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0).count();
    return row;
}

int cmd_bench(const Options& o) {
    if (o.solver != "mh" && o.solver != "best-first" && o.solver != "wastar")
        throw InvalidParameter("unknown solver: " + o.solver);
    DomainSpec d = make_domain(o.domain, o.param, o.heuristic);
    MacroSet macros = load_macro_file(o.macro_file);
    Rng rng(o.seed);
    std::vector<Problem> problems = bench_problems(d, o, rng);
    std::vector<BenchRow> rows(problems.size());

    int jobs = std::max(1, o.jobs);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= problems.size()) break;
            rows[i] = bench_one(d, problems[i], o, macros,
                                static_cast<int>(i));
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::ostringstream out;
    auto field = [&](const BenchRow& r, int k) -> double {
        switch (k) {
            case 0: return static_cast<double>(r.stats.operator_applications);
            case 1: return static_cast<double>(r.stats.generated_nodes);
            case 2: return static_cast<double>(r.stats.expanded_nodes);
            case 3: return static_cast<double>(r.stats.escapes);
            case 4: return static_cast<double>(r.solution_length);
            default: return r.stats.wall_ms;
        }
    };
    if (o.format == "csv") {
        out << "seed,domain,param,problem_id,solver,operator_applications,"
               "generated,expanded,escapes,solution_length,wall_ms,status\n";
        for (const BenchRow& r : rows) {
            out << o.seed << ',' << d.name << ',' << d.parameter << ','
                << r.problem_id << ',' << o.solver << ','
                << r.stats.operator_applications << ',' << r.stats.generated_nodes
                << ',' << r.stats.expanded_nodes << ',' << r.stats.escapes << ','
                << r.solution_length << ',' << r.stats.wall_ms << ','
                << (r.budget_exceeded ? "budget_exceeded" : "ok") << "\n";
        }
        // aggregate rows: mean then standard deviation of the numeric columns
        for (int agg = 0; agg < 2; ++agg) {
            out << o.seed << ',' << d.name << ',' << d.parameter << ','
                << (agg == 0 ? "mean" : "std") << ',' << o.solver;
            for (int k = 0; k < 6; ++k) {
                double mean = 0;
                for (const BenchRow& r : rows) mean += field(r, k);
                mean /= static_cast<double>(rows.size());
                double v = mean;
                if (agg == 1) {
                    double var = 0;
                    for (const BenchRow& r : rows) {
                        double dv = field(r, k) - mean;
                        var += dv * dv;
                    }
                    v = std::sqrt(var / static_cast<double>(rows.size()));
                }
                out << ',' << v;
            }
            out << ",aggregate\n";
        }
    } else if (o.format == "jsonl") {
        for (const BenchRow& r : rows) {
            nlohmann::json j{{"seed", o.seed},
                             {"domain", d.name},
                             {"param", d.parameter},
                             {"problem_id", r.problem_id},
                             {"solver", o.solver},
                             {"operator_applications", r.stats.operator_applications},
                             {"generated", r.stats.generated_nodes},
                             {"expanded", r.stats.expanded_nodes},
                             {"escapes", r.stats.escapes},
                             {"solution_length", r.solution_length},
                             {"wall_ms", r.stats.wall_ms},
                             {"status", r.budget_exceeded ? "budget_exceeded" : "ok"}};
            out << j.dump() << "\n";
        }
    } else {
        throw InvalidParameter("unknown output format: " + o.format);
    }
    emit(out.str(), o.out);
    return kOk;
}

// ------------------------------------------------------------------- verify

int cmd_verify(const Options& o) {
    std::vector<std::string> checks = o.checks;
    if (checks.empty())
        checks = {"table-vectors", "lemma1", "radius", "completeness", "theorem1"};
    bool all_ok = true;
    Rng rng(o.seed);

    auto report = [&all_ok](const std::string& name, bool ok,
                            const std::string& detail = "") {
        std::cout << name << ' ' << (ok ? "PASS" : "FAIL");
        if (!detail.empty()) std::cout << ' ' << detail;
        std::cout << "\n";
        if (!ok) all_ok = false;
    };

    auto sample_states = [&](int n, int count) {
        std::vector<State> states;
        if (o.exhaustive && n == 3) return enumerate_solvable_states(n);
        for (int i = 0; i < count; ++i)
            states.push_back(npuzzle_random_solvable(n, rng));
        return states;
    };

    for (const std::string& check : checks) {
        if (check == "table-vectors") {
            TableVectorReport rep = run_table_vectors();
            for (const auto& row : rep.rows)
                std::cout << "table-vectors " << row.id << ' '
                          << (row.pass ? "PASS" : "FAIL") << "\n";
            report("table-vectors", rep.all_hard_pass);
        } else if (check == "lemma1") {
            DomainSpec d = make_domain("npuzzle", o.param, o.heuristic);
            State g = npuzzle_canonical_goal(o.param);
            SearchStats scratch;
            long long checked = 0, violations = 0;
            for (const State& s : sample_states(o.param, o.count)) {
                OperatorId op;
                try {
                    op = lemma1_oracle(s, g, o.param);
                } catch (const PreconditionViolated&) {
                    continue;
                }
                ++checked;
                auto t = apply_operator(d, op, s, scratch);
                if (!t || d.heuristic(*t, g) >= d.heuristic(s, g)) ++violations;
            }
            report("lemma1", violations == 0,
                   "checked=" + std::to_string(checked) +
                       " violations=" + std::to_string(violations));
        } else if (check == "radius") {
            DomainSpec d = make_domain("npuzzle", o.param, o.heuristic);
            State g = npuzzle_canonical_goal(o.param);
            int max_r = 0;
            bool capped = false;
            for (const State& s : sample_states(o.param, o.count)) {
                auto r = radius(d, s, g, 18);
                if (!r) {
                    capped = true;
                    break;
                }
                max_r = std::max(max_r, *r);
            }
            report("radius", !capped, "max=" + std::to_string(max_r) + " cap=18");
        } else if (check == "completeness") {
            DomainSpec d = make_domain("npuzzle", o.param, o.heuristic);
            State g = npuzzle_canonical_goal(o.param);
            MacroSet macros = o.macro_file.empty() ? corrected_appendix_m(d)
                                                   : load_macro_file(o.macro_file);
            auto rep = check_completeness(d, g, macros, sample_states(o.param, o.count));
            report("completeness", rep.complete(),
                   "checked=" + std::to_string(rep.states_checked) +
                       " counterexamples=" +
                       std::to_string(rep.counterexamples.size()));
        } else if (check == "theorem1") {
            DomainSpec d = make_domain("npuzzle", o.param, o.heuristic);
            State g = npuzzle_canonical_goal(o.param);
            MacroSet macros = o.macro_file.empty() ? corrected_appendix_m(d)
                                                   : load_macro_file(o.macro_file);
            bool ok = true;
            for (int i = 0; i < o.count; ++i) {
                State init = npuzzle_random_solvable(o.param, rng);
                MacroSet local = macros;
                SolveOutcome out =
                    solve_problem(d, init, g, local, escape_config(o), false);
                out.stats.solution_length =
                    static_cast<long long>(out.solution.size());
                auto rep = theorem1_check(out.stats, o.param);
                if (!rep.ops_ok || !rep.len_ok) ok = false;
            }
            report("theorem1", ok, "instances=" + std::to_string(o.count));
        } else {
            throw InvalidParameter("unknown check: " + check);
        }
    }
    return all_ok ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------- gen

int cmd_gen(const Options& o) {
    DomainSpec d = make_domain(o.domain, o.param, o.heuristic);
    Rng rng(o.seed);
    SearchStats scratch;
    std::ostringstream out;
    for (int i = 0; i < o.count; ++i) {
        Problem p;
        if (o.method == "even-permutation") {
            if (d.name != "npuzzle")
                throw InvalidParameter("even-permutation generation is puzzle-only");
            p = Problem{npuzzle_random_solvable(d.parameter, rng),
                        npuzzle_canonical_goal(d.parameter)};
        } else if (o.method == "random-walk") {
            p = generate_training_problem(d, o.walk_length, rng, scratch);
        } else {
            throw InvalidParameter("unknown generation method: " + o.method);
        }
        if (o.out.empty()) {
            write_problem(out, d, p);
        } else {
            std::ostringstream one;
            write_problem(one, d, p);
            save_file(o.out + "_" + std::to_string(i) + ".txt", one.str());
        }
    }
    if (o.out.empty()) std::cout << out.str();
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"macro-operator speedup learning for satisficing search"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key-value config file; flags override it");

    Options o;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--domain", o.domain, "npuzzle | cannibals | stones | hanoi");
        sub->add_option("--param", o.param, "domain size parameter");
        sub->add_option("--heuristic", o.heuristic, "puzzle heuristic: rr | md | reduction | spiral | rr2");
        sub->add_option("--seed", o.seed, "root random seed");
        sub->add_option("--escape", o.escape, "escape method: ilb | id");
        sub->add_option("--depth-limit", o.depth_limit, "escape depth limit D");
        sub->add_option("--breadth-constant", o.breadth_constant, "ILB breadth constant k (0 = |basic ops|)");
        sub->add_option("--out", o.out, "output path (default stdout)");
    };

    CLI::App* learn = app.add_subcommand("learn", "learn a macro set");
    add_common(learn);
    learn->add_option("--quiescence", o.quiescence, "consecutive quiet problems before quitting");
    learn->add_option("--walk-initial", o.walk_initial, "first training walk length");
    learn->add_option("--walk-increment", o.walk_increment, "walk length growth per problem");
    learn->add_option("--difficulty", o.difficulty, "walk | threshold");

    CLI::App* plearn = app.add_subcommand("parametric-learn",
                                          "learn across growing domain parameters");
    add_common(plearn);
    plearn->add_option("--quiescence", o.quiescence);
    plearn->add_option("--walk-initial", o.walk_initial);
    plearn->add_option("--walk-increment", o.walk_increment);
    plearn->add_option("--difficulty", o.difficulty);

    CLI::App* solve = app.add_subcommand("solve", "solve one problem file");
    add_common(solve);
    solve->add_option("--problem", o.problem_file, "problem file")->required();
    solve->add_option("--macros", o.macro_file, "macro file");
    solve->add_flag("--validate", o.validate, "replay the solution");

    CLI::App* bench = app.add_subcommand("bench", "solve a generated test suite");
    add_common(bench);
    bench->add_option("--macros", o.macro_file, "macro file for the mh solver");
    bench->add_option("--solver", o.solver, "mh | best-first | wastar");
    bench->add_option("--weight", o.weight, "wastar heuristic weight in [0,1]");
    bench->add_option("--budget", o.budget, "baseline expansion budget (0 = unlimited)");
    bench->add_option("--count", o.count, "number of test problems");
    bench->add_option("--walk-length", o.walk_length, "test walk length off-puzzle");
    bench->add_option("--format", o.format, "csv | jsonl");
    bench->add_option("--jobs", o.jobs, "worker threads");

    CLI::App* verify = app.add_subcommand("verify", "run built-in checks");
    add_common(verify);
    verify->add_option("--check", o.checks,
                       "table-vectors | lemma1 | radius | completeness | theorem1");
    verify->add_option("--macros", o.macro_file, "macro file for completeness/theorem1");
    verify->add_option("--count", o.count, "sample size for non-exhaustive checks");
    verify->add_flag("--exhaustive", o.exhaustive, "enumerate all solvable 3x3 states");

    CLI::App* gen = app.add_subcommand("gen", "generate problem files");
    add_common(gen);
    gen->add_option("--method", o.method, "even-permutation | random-walk");
    gen->add_option("--count", o.count, "number of problems");
    gen->add_option("--length", o.walk_length, "random-walk length");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        if (*learn) return cmd_learn(o);
        if (*plearn) return cmd_parametric_learn(o);
        if (*solve) return cmd_solve(o);
        if (*bench) return cmd_bench(o);
        if (*verify) return cmd_verify(o);
        if (*gen) return cmd_gen(o);
    } catch (const EscapeExhausted& e) {
        std::cerr << "ESCAPE_EXHAUSTED: " << e.what()
                  << " (re-run with a larger --depth-limit)\n";
        return kEscapeExhausted;
    } catch (const InvalidParameter& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kConfigError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kConfigError;
}
