#include "mhl/core.hpp"

#include <sstream>

namespace mhl {

std::optional<State> apply_operator(const DomainSpec& domain, OperatorId op,
                                    const State& s, SearchStats& stats) {
    ++stats.operator_applications;
    return domain.apply(op, s);
}

std::optional<State> apply_macro(const DomainSpec& domain, const Macro& m,
                                 const State& s, SearchStats& stats) {
    State cur = s;
    for (OperatorId op : m.ops) {
        auto next = apply_operator(domain, op, cur, stats);
        if (!next) return std::nullopt;
        cur = std::move(*next);
    }
    return cur;
}

static OperatorId resolve_name(const DomainSpec& domain, const std::string& tok) {
    for (int i = 0; i < domain.num_ops(); ++i)
        if (domain.op_names[i] == tok) return i;
    throw UnknownOperatorName(tok);
}

Macro macro_from_names(const DomainSpec& domain, const std::string& text) {
    Macro m;
    std::istringstream in(text);
    std::string tok;
    bool has_space = text.find_first_of(" \t") != std::string::npos;
    if (!has_space && domain.single_char_names() && text.size() > 1) {
        for (char c : text)
            m.ops.push_back(resolve_name(domain, std::string(1, c)));
        return m;
    }
    while (in >> tok)
        m.ops.push_back(resolve_name(domain, tok));
    if (m.ops.empty()) throw ParseError("empty macro text");
    return m;
}

std::string macro_to_names(const DomainSpec& domain, const Macro& m) {
    std::string out;
    bool single = domain.single_char_names();
    for (std::size_t i = 0; i < m.ops.size(); ++i) {
        if (!single && i > 0) out += ' ';
        out += domain.op_names[m.ops[i]];
    }
    return out;
}

std::optional<Macro> reverse_macro(const DomainSpec& domain, const Macro& m) {
    if (domain.reverse_of.empty()) return std::nullopt;
    Macro r;
    for (auto it = m.ops.rbegin(); it != m.ops.rend(); ++it)
        r.ops.push_back(domain.reverse_of[*it]);
    return r;
}

} // namespace mhl
