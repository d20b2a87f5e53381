#ifndef MHL_CORE_HPP
#define MHL_CORE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mhl/rng.hpp"

namespace mhl {

// States are flat integer vectors; each domain documents its own encoding.
using State = std::vector<int>;
using OperatorId = int;
using HValue = long long;

struct StateHash {
    std::size_t operator()(const State& s) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (int v : s) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b9;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownOperatorName : Error {
    explicit UnknownOperatorName(const std::string& tok)
        : Error("unknown operator name: '" + tok + "'"), token(tok) {}
    std::string token;
};

struct InvalidParameter : Error {
    using Error::Error;
};

struct DisconnectedGrid : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct EscapeExhausted : Error {
    EscapeExhausted(State s, int depth)
        : Error("escape search exhausted at depth limit " + std::to_string(depth)),
          stuck_state(std::move(s)), depth_limit(depth) {}
    State stuck_state;
    int depth_limit;
};

// Counters over which all reported measurements are defined.  Every attempted
// basic-operator application is counted, including failed ones and those
// performed inside macros and during problem generation.
struct SearchStats {
    long long operator_applications = 0; // global total, search + generation
    long long generation_applications = 0;
    long long generated_nodes = 0;
    long long expanded_nodes = 0;
    long long escapes = 0;
    long long solution_length = 0;
    double wall_ms = 0.0;
};

struct DomainSpec {
    std::string name;
    int parameter = 0; // 0 when the domain has no size parameter

    std::vector<std::string> op_names;
    // returns successor or nullopt when the operator is undefined in s
    std::function<std::optional<State>(OperatorId, const State&)> apply;
    std::function<HValue(const State& s, const State& goal)> heuristic;
    std::function<State(Rng&)> generate_goal;
    // reverse_of[i] = id of the operator undoing op i; empty if unavailable
    std::vector<OperatorId> reverse_of;

    int num_ops() const { return static_cast<int>(op_names.size()); }

    bool single_char_names() const {
        for (const auto& n : op_names)
            if (n.size() != 1) return false;
        return true;
    }
};

struct Macro {
    std::vector<OperatorId> ops;
    // acquisition provenance (negative / -1 when not applicable)
    long long acquired_problem = -1;
    HValue h_before = -1;
    HValue h_after = -1;

    std::size_t length() const { return ops.size(); }
};

// Ordered, duplicate-free by operator sequence; iteration order is
// acquisition order.
class MacroSet {
public:
    bool add(Macro m) {
        if (contains(m.ops)) return false;
        macros_.push_back(std::move(m));
        return true;
    }

    bool contains(const std::vector<OperatorId>& ops) const {
        for (const auto& m : macros_)
            if (m.ops == ops) return true;
        return false;
    }

    const std::vector<Macro>& macros() const { return macros_; }
    std::size_t size() const { return macros_.size(); }
    bool empty() const { return macros_.empty(); }

    std::size_t total_length() const {
        std::size_t n = 0;
        for (const auto& m : macros_) n += m.ops.size();
        return n;
    }

    auto begin() const { return macros_.begin(); }
    auto end() const { return macros_.end(); }

private:
    std::vector<Macro> macros_;
};

struct Problem {
    State initial;
    State goal;
};

// One counted application; nullopt when the operator is undefined in s.
std::optional<State> apply_operator(const DomainSpec& domain, OperatorId op,
                                    const State& s, SearchStats& stats);

// Left-to-right composition; undefined at the first undefined step, counting
// one application per step attempted (including the failing one).
std::optional<State> apply_macro(const DomainSpec& domain, const Macro& m,
                                 const State& s, SearchStats& stats);

// Parses whitespace-separated operator names; for domains whose names are all
// single characters an unseparated string like "dllur" is also accepted.
Macro macro_from_names(const DomainSpec& domain, const std::string& text);

std::string macro_to_names(const DomainSpec& domain, const Macro& m);

// Sequence of basic operators reversing m, or nullopt when the domain has no
// reverse table.  Reverse of <o1,...,ok> is <rev(ok),...,rev(o1)>.
std::optional<Macro> reverse_macro(const DomainSpec& domain, const Macro& m);

} // namespace mhl

#endif
