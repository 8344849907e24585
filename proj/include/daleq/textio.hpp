#pragma once

#include "daleq/closure.hpp"
#include "daleq/dalograph.hpp"
#include "daleq/order.hpp"
#include "daleq/preference.hpp"
#include "daleq/routing.hpp"

#include <set>
#include <string>

namespace daleq {

struct ParseError : Error {
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what) {}
};

/// Words are whitespace-separated label tokens with a ";" token between
/// prefix and period: "0 1 ; 1" is 01·1^ω, "; a b" is (ab)^ω.
UPWord parse_upword(const std::string& text);
Word parse_finite_word(const std::string& text);
std::string to_string(const Word& w);

/// Line format: `node <id>` (optional), `arc <from> <to> <label>`,
/// comments start with '#'.
Dalograph parse_dalograph(const std::string& text);
RawDigraph parse_raw_digraph(const std::string& text);
std::string print_graph(const Dalograph& g);

LabelOrder parse_label_order(const std::string& text);

struct ParsedPreference {
    Preference pref;
    std::set<Label> alphabet; // ranked labels, or labels of table words
    bool is_table = false;
    std::set<WordPair> pairs; // table entries
    std::string kind;         // builtin name when not a table
    LabelOrder order;
};

/// Either a builtin name (lex, pareto, maxmin-ls, maxminlight-ls,
/// maxmin-set) followed by `rank <label> <int>` lines, or a list of
/// `pair <upword> < <upword>` lines.
ParsedPreference parse_preference(const std::string& text);
std::string print_preference(const ParsedPreference& p);

Strategy parse_strategy(const std::string& text, const Dalograph& g);
std::string print_strategy(const Strategy& s);

/// Graph lines plus one `target <id>` line.
RoutingProblem parse_routing_problem(const std::string& text);
std::string print_routing_problem(const RoutingProblem& rp);

struct ParsedPolicy {
    RoutingPolicy policy;
    std::vector<Word> sample; // table words, for checkers
    std::string kind;         // minhop or widest when not a table
    LabelOrder order;
    std::set<std::pair<Word, Word>> pairs;
};

/// `minhop`, or `widest` with rank lines, or `pair <word> < <word>` lines.
ParsedPolicy parse_policy(const std::string& text);
std::string print_policy(const ParsedPolicy& p);

/// `word <upword>` lines and optional `prefix <labels>` lines; when no
/// prefix line is present the pool is derived from the words.
Universe parse_universe(const std::string& text, std::size_t prefix_bound = 3);
std::string print_universe(const Universe& u);

std::string read_file(const std::string& path);

} // namespace daleq
