#ifndef MHL_IO_HPP
#define MHL_IO_HPP

#include <iosfwd>
#include <string>

#include "mhl/core.hpp"
#include "mhl/domains.hpp"
#include "mhl/learner.hpp"

namespace mhl {

// Builds the named domain ("npuzzle", "cannibals", "stones", "hanoi") at a
// given parameter; throws InvalidParameter for unknown names.  The puzzle
// gets the standard heuristic unless `heuristic` overrides it.
DomainSpec make_domain(const std::string& name, int param,
                       const std::string& heuristic = "");

// Macro files:
//   # domain <name> param <k>
//   <one macro per line>
// Macros use unseparated single-character names where the domain permits,
// whitespace-separated names otherwise.  Round-trips byte-identically.
void write_macros(std::ostream& out, const DomainSpec& domain,
                  const MacroSet& macros);
MacroSet read_macros(std::istream& in, DomainSpec* domain_out = nullptr);

std::string macros_to_string(const DomainSpec& domain, const MacroSet& macros);
MacroSet macros_from_string(const std::string& text,
                            DomainSpec* domain_out = nullptr);

// Problem files:
//   domain <name> param <k>
//   <initial state>
//   <goal state>
// States are whitespace-separated integers in the domain's encoding.
void write_problem(std::ostream& out, const DomainSpec& domain,
                   const Problem& problem);
Problem read_problem(std::istream& in, DomainSpec* domain_out = nullptr);

// Key-value learning summary (macro bodies included), one `key value` per line.
void write_learn_report(std::ostream& out, const DomainSpec& domain,
                        const LearnReport& rep);

void save_file(const std::string& path, const std::string& content);
std::string load_file(const std::string& path);

} // namespace mhl

#endif
