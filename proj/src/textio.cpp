#include "daleq/textio.hpp"

#include <fstream>
#include <sstream>

namespace daleq {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream is(line);
    std::string t;
    while (is >> t) {
        if (t[0] == '#') break;
        toks.push_back(t);
    }
    return toks;
}

// Calls fn(line_number, tokens) for every non-empty, non-comment line.
template <class Fn>
void for_each_line(const std::string& text, Fn fn) {
    std::istringstream is(text);
    std::string line;
    std::size_t no = 0;
    while (std::getline(is, line)) {
        ++no;
        auto toks = tokenize(line);
        if (!toks.empty()) fn(no, toks);
    }
}

UPWord upword_from_tokens(std::size_t line, const std::vector<std::string>& toks,
                          std::size_t begin, std::size_t end) {
    Word prefix, period;
    bool seen_sep = false;
    for (std::size_t i = begin; i < end; ++i) {
        if (toks[i] == ";") {
            if (seen_sep) throw ParseError(line, "more than one ';' in a word");
            seen_sep = true;
        } else {
            (seen_sep ? period : prefix).push_back(toks[i]);
        }
    }
    if (!seen_sep) throw ParseError(line, "a word needs a ';' before its period");
    if (period.empty()) throw ParseError(line, "empty period");
    return UPWord(std::move(prefix), std::move(period));
}

} // namespace

UPWord parse_upword(const std::string& text) {
    auto toks = tokenize(text);
    return upword_from_tokens(1, toks, 0, toks.size());
}

Word parse_finite_word(const std::string& text) {
    auto toks = tokenize(text);
    for (const auto& t : toks)
        if (t == ";" || t == "<") throw ParseError(1, "bad label token: " + t);
    return toks;
}

std::string to_string(const Word& w) {
    std::string s;
    for (const auto& l : w) {
        if (!s.empty()) s += ' ';
        s += l;
    }
    return s;
}

RawDigraph parse_raw_digraph(const std::string& text) {
    RawDigraph raw;
    for_each_line(text, [&](std::size_t no, const std::vector<std::string>& toks) {
        if (toks[0] == "node") {
            if (toks.size() != 2) throw ParseError(no, "node <id>");
            raw.add_node(toks[1]);
        } else if (toks[0] == "arc") {
            if (toks.size() != 4) throw ParseError(no, "arc <from> <to> <label>");
            try {
                raw.add_arc(toks[1], toks[2], toks[3]);
            } catch (const DuplicateArcError& e) {
                throw ParseError(no, e.what());
            }
        } else if (toks[0] == "target") {
            // handled by parse_routing_problem
        } else {
            throw ParseError(no, "unknown directive: " + toks[0]);
        }
    });
    return raw;
}

Dalograph parse_dalograph(const std::string& text) {
    return Dalograph::validate(parse_raw_digraph(text));
}

std::string print_graph(const Dalograph& g) {
    std::ostringstream os;
    for (const auto& n : g.nodes()) os << "node " << n << '\n';
    for (const auto& [n, succ] : g.adjacency())
        for (const auto& [m, l] : succ) os << "arc " << n << ' ' << m << ' ' << l << '\n';
    return os.str();
}

LabelOrder parse_label_order(const std::string& text) {
    LabelOrder order;
    for_each_line(text, [&](std::size_t no, const std::vector<std::string>& toks) {
        if (toks[0] != "rank" || toks.size() != 3) throw ParseError(no, "rank <label> <int>");
        try {
            order.set_rank(toks[1], std::stoi(toks[2]));
        } catch (const std::exception&) {
            throw ParseError(no, "bad rank integer: " + toks[2]);
        }
    });
    return order;
}

namespace {

WordPair pair_from_tokens(std::size_t no, const std::vector<std::string>& toks) {
    std::size_t sep = 0;
    for (std::size_t i = 1; i < toks.size(); ++i)
        if (toks[i] == "<") {
            sep = i;
            break;
        }
    if (sep == 0) throw ParseError(no, "pair <word> < <word>");
    return {upword_from_tokens(no, toks, 1, sep), upword_from_tokens(no, toks, sep + 1, toks.size())};
}

} // namespace

ParsedPreference parse_preference(const std::string& text) {
    ParsedPreference out;
    for_each_line(text, [&](std::size_t no, const std::vector<std::string>& toks) {
        if (toks[0] == "pair") {
            auto [a, b] = pair_from_tokens(no, toks);
            for (const auto& w : {a, b}) {
                auto es = element_set(w);
                out.alphabet.insert(es.begin(), es.end());
            }
            out.pairs.insert({std::move(a), std::move(b)});
            out.is_table = true;
        } else if (toks[0] == "rank") {
            if (toks.size() != 3) throw ParseError(no, "rank <label> <int>");
            out.order.set_rank(toks[1], std::stoi(toks[2]));
            out.alphabet.insert(toks[1]);
        } else if (out.kind.empty() && !out.is_table) {
            out.kind = toks[0];
        } else {
            throw ParseError(no, "unexpected directive: " + toks[0]);
        }
    });

    if (out.is_table) {
        if (!out.kind.empty()) throw ParseError(1, "tables take no kind line");
        out.pref = table(out.pairs);
        return out;
    }
    if (out.kind == "lex")
        out.pref = lex(out.order);
    else if (out.kind == "pareto")
        out.pref = pareto(out.order);
    else if (out.kind == "maxmin-ls")
        out.pref = maxmin_limit_set(out.order);
    else if (out.kind == "maxminlight-ls")
        out.pref = maxminlight_limit_set(out.order);
    else if (out.kind == "maxmin-set")
        out.pref = maxmin_set(out.order);
    else
        throw ParseError(1, "unknown preference kind: " + (out.kind.empty() ? "<none>" : out.kind));
    return out;
}

std::string print_preference(const ParsedPreference& p) {
    std::ostringstream os;
    if (p.is_table) {
        for (const auto& [a, b] : p.pairs)
            os << "pair " << to_string(a) << " < " << to_string(b) << '\n';
        return os.str();
    }
    os << p.kind << '\n';
    for (const auto& [l, r] : p.order.ranks()) os << "rank " << l << ' ' << r << '\n';
    return os.str();
}

Strategy parse_strategy(const std::string& text, const Dalograph& g) {
    std::map<NodeId, NodeId> choice;
    for_each_line(text, [&](std::size_t no, const std::vector<std::string>& toks) {
        if (toks[0] != "choose" || toks.size() != 3) throw ParseError(no, "choose <node> <node>");
        choice[toks[1]] = toks[2];
    });
    return Strategy::validate(g, std::move(choice));
}

std::string print_strategy(const Strategy& s) {
    std::ostringstream os;
    for (const auto& [n, m] : s.choice) os << "choose " << n << ' ' << m << '\n';
    return os.str();
}

RoutingProblem parse_routing_problem(const std::string& text) {
    std::string target;
    for_each_line(text, [&](std::size_t no, const std::vector<std::string>& toks) {
        if (toks[0] == "target") {
            if (toks.size() != 2) throw ParseError(no, "target <node>");
            if (!target.empty()) throw ParseError(no, "duplicate target line");
            target = toks[1];
        }
    });
    if (target.empty()) throw ParseError(1, "routing problem needs a target line");
    return RoutingProblem::validate(parse_raw_digraph(text), target);
}

std::string print_routing_problem(const RoutingProblem& rp) {
    std::ostringstream os;
    for (const auto& n : rp.graph.nodes) os << "node " << n << '\n';
    for (const auto& [ends, l] : rp.graph.arcs)
        os << "arc " << ends.first << ' ' << ends.second << ' ' << l << '\n';
    os << "target " << rp.target << '\n';
    return os.str();
}

ParsedPolicy parse_policy(const std::string& text) {
    ParsedPolicy out;
    std::set<Word> sample;
    for_each_line(text, [&](std::size_t no, const std::vector<std::string>& toks) {
        if (toks[0] == "pair") {
            std::size_t sep = 0;
            for (std::size_t i = 1; i < toks.size(); ++i)
                if (toks[i] == "<") sep = i;
            if (sep == 0) throw ParseError(no, "pair <word> < <word>");
            Word a(toks.begin() + 1, toks.begin() + static_cast<std::ptrdiff_t>(sep));
            Word b(toks.begin() + static_cast<std::ptrdiff_t>(sep) + 1, toks.end());
            if (a.empty() || b.empty()) throw ParseError(no, "empty route word");
            sample.insert(a);
            sample.insert(b);
            out.pairs.insert({std::move(a), std::move(b)});
        } else if (toks[0] == "rank") {
            if (toks.size() != 3) throw ParseError(no, "rank <label> <int>");
            out.order.set_rank(toks[1], std::stoi(toks[2]));
        } else if (out.kind.empty()) {
            out.kind = toks[0];
        } else {
            throw ParseError(no, "unexpected directive: " + toks[0]);
        }
    });

    if (!out.pairs.empty()) {
        if (!out.kind.empty()) throw ParseError(1, "pair tables take no kind line");
        out.policy = table_policy(out.pairs);
    } else if (out.kind == "minhop") {
        out.policy = minhop_policy();
    } else if (out.kind == "widest") {
        out.policy = widest_policy(out.order);
    } else {
        throw ParseError(1, "unknown policy kind: " + (out.kind.empty() ? "<none>" : out.kind));
    }
    out.sample.assign(sample.begin(), sample.end());
    return out;
}

std::string print_policy(const ParsedPolicy& p) {
    std::ostringstream os;
    if (!p.pairs.empty()) {
        for (const auto& [a, b] : p.pairs)
            os << "pair " << to_string(a) << " < " << to_string(b) << '\n';
        return os.str();
    }
    os << p.kind << '\n';
    for (const auto& [l, r] : p.order.ranks()) os << "rank " << l << ' ' << r << '\n';
    return os.str();
}

Universe parse_universe(const std::string& text, std::size_t prefix_bound) {
    std::vector<UPWord> words;
    std::set<Word> prefixes;
    for_each_line(text, [&](std::size_t no, const std::vector<std::string>& toks) {
        if (toks[0] == "word") {
            words.push_back(upword_from_tokens(no, toks, 1, toks.size()));
        } else if (toks[0] == "prefix") {
            if (toks.size() < 2) throw ParseError(no, "prefix <labels>");
            prefixes.insert(Word(toks.begin() + 1, toks.end()));
        } else {
            throw ParseError(no, "unknown directive: " + toks[0]);
        }
    });
    Universe u = Universe::from_words(std::move(words), prefix_bound);
    if (!prefixes.empty()) u.prefixes.assign(prefixes.begin(), prefixes.end());
    return u;
}

std::string print_universe(const Universe& u) {
    std::ostringstream os;
    for (const auto& w : u.words) os << "word " << to_string(w) << '\n';
    for (const auto& p : u.prefixes) os << "prefix " << to_string(p) << '\n';
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace daleq
