#include "mhl/io.hpp"

#include <fstream>
#include <sstream>

namespace mhl {

namespace {

PuzzleHeuristic puzzle_heuristic_from_name(const std::string& name) {
    if (name.empty() || name == "rr") return PuzzleHeuristic::RR;
    if (name == "md") return PuzzleHeuristic::MD;
    if (name == "reduction") return PuzzleHeuristic::REDUCTION;
    if (name == "spiral") return PuzzleHeuristic::SPIRAL;
    if (name == "rr2") return PuzzleHeuristic::ROW_BY_ROW_2;
    throw InvalidParameter("unknown puzzle heuristic: " + name);
}

// state <-> single text line, in the domain's documented token format
std::string state_to_line(const DomainSpec& domain, const State& s) {
    std::ostringstream out;
    if (domain.name == "stones") {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out << ' ';
            out << (s[i] == 0 ? "_" : s[i] == 1 ? "W" : "B");
        }
    } else if (domain.name == "hanoi") {
        // per-peg ring lists, bottom to top, '-' for an empty peg
        for (int peg = 0; peg < 3; ++peg) {
            if (peg) out << ' ';
            bool any = false;
            for (int ring = static_cast<int>(s.size()) - 1; ring >= 0; --ring) {
                if (s[static_cast<std::size_t>(ring)] != peg) continue;
                if (any) out << ',';
                out << ring + 1;
                any = true;
            }
            if (!any) out << '-';
        }
    } else { // npuzzle, cannibals, grid: plain integers
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out << ' ';
            out << s[i];
        }
    }
    return out.str();
}

State state_from_line(const DomainSpec& domain, const std::string& line) {
    std::istringstream in(line);
    State s;
    if (domain.name == "stones") {
        std::string tok;
        while (in >> tok) {
            if (tok == "_") s.push_back(0);
            else if (tok == "W") s.push_back(1);
            else if (tok == "B") s.push_back(2);
            else throw ParseError("bad stones token: " + tok);
        }
    } else if (domain.name == "hanoi") {
        s.assign(static_cast<std::size_t>(domain.parameter), -1);
        std::string tok;
        for (int peg = 0; peg < 3; ++peg) {
            if (!(in >> tok)) throw ParseError("hanoi state needs 3 peg lists");
            if (tok == "-") continue;
            std::istringstream pegs(tok);
            std::string ring;
            while (std::getline(pegs, ring, ',')) {
                int r = std::stoi(ring) - 1;
                if (r < 0 || r >= domain.parameter)
                    throw ParseError("ring out of range: " + ring);
                s[static_cast<std::size_t>(r)] = peg;
            }
        }
        for (int v : s)
            if (v < 0) throw ParseError("hanoi state misses a ring");
    } else {
        int v;
        while (in >> v) s.push_back(v);
    }
    if (s.empty()) throw ParseError("empty state line");
    return s;
}

} // namespace

DomainSpec make_domain(const std::string& name, int param,
                       const std::string& heuristic) {
    if (name == "npuzzle")
        return npuzzle_domain(param, puzzle_heuristic_from_name(heuristic));
    if (name == "cannibals") return cannibals_domain(param);
    if (name == "stones") return stones_domain(param);
    if (name == "hanoi") return hanoi_domain(param);
    throw InvalidParameter("unknown domain: " + name);
}

void write_macros(std::ostream& out, const DomainSpec& domain,
                  const MacroSet& macros) {
    out << "# domain " << domain.name << " param " << domain.parameter << "\n";
    for (const Macro& m : macros) out << macro_to_names(domain, m) << "\n";
}

MacroSet read_macros(std::istream& in, DomainSpec* domain_out) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty macro file");
    std::istringstream header(line);
    std::string hash, kw_domain, name, kw_param;
    int param = 0;
    if (!(header >> hash >> kw_domain >> name >> kw_param >> param) ||
        hash != "#" || kw_domain != "domain" || kw_param != "param")
        throw ParseError("bad macro file header: " + line);
    DomainSpec domain = make_domain(name, param);

    MacroSet ms;
    while (std::getline(in, line)) {
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        ms.add(macro_from_names(domain, line));
    }
    if (domain_out) *domain_out = std::move(domain);
    return ms;
}

std::string macros_to_string(const DomainSpec& domain, const MacroSet& macros) {
    std::ostringstream out;
    write_macros(out, domain, macros);
    return out.str();
}

MacroSet macros_from_string(const std::string& text, DomainSpec* domain_out) {
    std::istringstream in(text);
    return read_macros(in, domain_out);
}

void write_problem(std::ostream& out, const DomainSpec& domain,
                   const Problem& problem) {
    out << "domain " << domain.name << " param " << domain.parameter << "\n"
        << state_to_line(domain, problem.initial) << "\n"
        << state_to_line(domain, problem.goal) << "\n";
}

Problem read_problem(std::istream& in, DomainSpec* domain_out) {
    std::string header, initial, goal;
    if (!std::getline(in, header) || !std::getline(in, initial) ||
        !std::getline(in, goal))
        throw ParseError("problem file needs 3 lines");
    std::istringstream hdr(header);
    std::string kw_domain, name, kw_param;
    int param = 0;
    if (!(hdr >> kw_domain >> name >> kw_param >> param) ||
        kw_domain != "domain" || kw_param != "param")
        throw ParseError("bad problem file header: " + header);
    DomainSpec domain = make_domain(name, param);
    Problem p{state_from_line(domain, initial), state_from_line(domain, goal)};
    if (domain_out) *domain_out = std::move(domain);
    return p;
}

void write_learn_report(std::ostream& out, const DomainSpec& domain,
                        const LearnReport& rep) {
    out << "domain " << domain.name << "\n"
        << "param " << domain.parameter << "\n"
        << "problems_solved " << rep.problems_solved << "\n"
        << "macros " << rep.macro_set.size() << "\n"
        << "macro_total_length " << rep.macro_set.total_length() << "\n"
        << "total_operator_applications " << rep.total_operator_applications << "\n"
        << "generation_operator_applications "
        << rep.generation_operator_applications << "\n"
        << "escapes " << rep.escapes << "\n"
        << "wall_ms " << rep.wall_ms << "\n";
    for (const auto& [param, count] : rep.per_parameter_counts)
        out << "macros_at_param " << param << " " << count << "\n";
    out << "macro_file_begin\n";
    write_macros(out, domain, rep.macro_set);
    out << "macro_file_end\n";
}

void save_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path);
    out << content;
}

std::string load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace mhl
