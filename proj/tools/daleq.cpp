#include "CLI11.hpp"

#include "daleq/equilibrium.hpp"
#include "daleq/gallery.hpp"
#include "daleq/textio.hpp"

#include <fstream>
#include <iostream>
#include <random>

using namespace daleq;

namespace {

// Exit codes: 0 affirmative/expected, 1 negative verdict, 2 error.
constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct Options {
    std::size_t budget = 100000;
    std::size_t prefix_bound = 6;
    unsigned seed = 1;
    bool tsv = false;
};

struct Report {
    std::vector<std::pair<std::string, std::string>> rows;

    void add(std::string key, std::string value) {
        rows.emplace_back(std::move(key), std::move(value));
    }
    void print(bool tsv) const {
        for (const auto& [k, v] : rows) {
            if (tsv)
                std::cout << k << '\t' << v << '\n';
            else
                std::cout << k << ": " << v << '\n';
        }
    }
};

// Rank-based preferences must cover every label in the graph up front.
Preference load_graph_preference(const Dalograph& g, const std::string& pref_file) {
    auto parsed = parse_preference(read_file(pref_file));
    if (!parsed.is_table)
        for (const auto& [n, succ] : g.adjacency())
            for (const auto& [m, l] : succ)
                if (!parsed.alphabet.count(l)) throw UnrankedLabelError(l);
    return parsed.pref;
}

std::vector<UPWord> graph_universe_words(const Dalograph& g, std::size_t budget) {
    std::set<UPWord> words;
    for (const auto& n : g.nodes())
        for (const auto& w : eligible_sequences(g, n, budget)) words.insert(w);
    return {words.begin(), words.end()};
}

std::string describe_strategy(const Strategy& s) {
    std::string out;
    for (const auto& [n, m] : s.choice) out += n + "->" + m + " ";
    return out;
}

int cmd_paths(const Options& opt, const std::string& graph_file, const NodeId& node) {
    auto g = parse_dalograph(read_file(graph_file));
    Report rep;
    for (const auto& p : continuations(Walk(g, node), opt.budget))
        rep.add(to_string(p), to_string(induced_sequence(g, p)));
    rep.print(opt.tsv);
    return kYes;
}

int cmd_solve(const Options& opt, const std::string& graph_file, const std::string& pref_file,
              const std::string& dot_file) {
    auto g = parse_dalograph(read_file(graph_file));
    auto pref = load_graph_preference(g, pref_file);
    Context ctx{g, pref, opt.budget};
    auto eq = construct_equilibrium(ctx);
    Report rep;
    rep.add("verified", eq.verified ? "true" : "false");
    if (eq.strategy) {
        for (const auto& [n, m] : eq.strategy->choice) rep.add("choose " + n, m);
        if (!dot_file.empty()) {
            std::ofstream out(dot_file);
            out << to_dot(g, &*eq.strategy);
            rep.add("dot", dot_file);
        }
    }
    for (const auto& [node, better] : eq.failures)
        rep.add("beaten at " + node, to_string(better));
    for (const auto& note : eq.notes) rep.add("note", note);
    rep.print(opt.tsv);
    return eq.verified ? kYes : kNo;
}

int cmd_verify(const Options& opt, const std::string& graph_file, const std::string& pref_file,
               const std::string& strategy_file) {
    auto g = parse_dalograph(read_file(graph_file));
    auto pref = load_graph_preference(g, pref_file);
    auto s = parse_strategy(read_file(strategy_file), g);
    Context ctx{g, pref, opt.budget};
    auto verdict = verify_global(ctx, s);
    Report rep;
    rep.add("verified", verdict.verified ? "true" : "false");
    for (const auto& [node, better] : verdict.failures)
        rep.add("beaten at " + node, to_string(better));
    rep.print(opt.tsv);
    return verdict.verified ? kYes : kNo;
}

int cmd_oracle(const Options& opt, const std::string& graph_file, const std::string& pref_file) {
    auto g = parse_dalograph(read_file(graph_file));
    auto pref = load_graph_preference(g, pref_file);
    Context ctx{g, pref, opt.budget};
    auto all = brute_force_equilibria(ctx);
    Report rep;
    rep.add("strategy space", std::to_string(strategy_space_size(g)));
    rep.add("equilibria", std::to_string(all.size()));
    for (const auto& s : all) rep.add("equilibrium", describe_strategy(s));
    rep.print(opt.tsv);
    return all.empty() ? kNo : kYes;
}

int cmd_check_sufficient(const Options& opt, const std::string& graph_file,
                         const std::string& pref_file) {
    auto g = parse_dalograph(read_file(graph_file));
    auto pref = load_graph_preference(g, pref_file);
    auto words = graph_universe_words(g, opt.budget);
    CheckerBounds bounds{opt.prefix_bound, 3, 4096};
    auto rep = check_sufficient_condition(pref, words, bounds);
    Report out;
    out.add("universe", std::to_string(words.size()) + " eligible sequences");
    out.add("strict weak order", rep.strict_weak_order.ok ? "pass" : rep.strict_weak_order.reason);
    out.add("e-prefix", rep.e_prefix.pass ? "pass" : rep.e_prefix.witness);
    out.add("subcontinuous", rep.subcontinuous.pass ? "pass" : rep.subcontinuous.witness);
    out.add("verdict", rep.pass ? "pass-on-universe" : "fail");
    out.print(opt.tsv);
    return rep.pass ? kYes : kNo;
}

int cmd_check_necessary(const Options& opt, const std::string& graph_file,
                        const std::string& pref_file) {
    auto g = parse_dalograph(read_file(graph_file));
    auto pref = load_graph_preference(g, pref_file);
    auto universe = Universe::from_dalograph(g, 3, opt.budget);
    auto rep = check_necessary_condition(pref, universe);
    Report out;
    out.add("universe", std::to_string(universe.words.size()) + " words, " +
                            std::to_string(universe.prefixes.size()) + " prefixes");
    out.add("derived pairs", std::to_string(rep.derived_pairs));
    out.add("verdict", rep.violated ? "VIOLATED" : "UNDETERMINED-ON-UNIVERSE");
    out.print(opt.tsv);
    if (rep.violated) std::cout << rep.derivation;
    return rep.violated ? kNo : kYes;
}

int cmd_closure(const Options& opt, const std::string& pref_file, const std::string& universe_file,
                const std::string& rules) {
    auto pref = parse_preference(read_file(pref_file)).pref;
    auto universe = parse_universe(read_file(universe_file), 3);
    auto base = restrict_preference(pref, universe);

    if (rules == "experimental") {
        auto exp = close_experimental(base, universe);
        Report out;
        out.add("base pairs", std::to_string(base.size()));
        out.add("derived set pairs", std::to_string(exp.derived.size()));
        out.add("note", "experimental rule set; no verdict is drawn from it");
        out.print(opt.tsv);
        for (const auto& line : exp.traces) std::cout << line << '\n';
        return kYes;
    }

    DerivedRelation derived = [&] {
        if (rules == "e-prefix") return close_E_prefix(base, universe);
        if (rules == "transitive") return close_transitive(base, universe);
        if (rules == "a-transitive") return close_A_transitive(base, universe);
        if (rules == "gen-e-prefix") return close_gen_E_prefix(base, universe);
        if (rules == "combination") return close_combination(base, universe);
        throw Error("unknown rule set: " + rules);
    }();

    Report out;
    out.add("base pairs", std::to_string(base.size()));
    out.add("derived pairs", std::to_string(derived.size()));
    out.print(opt.tsv);
    for (std::size_t i = 0; i < derived.size(); ++i) std::cout << derived.derivation_text(i);
    return kYes;
}

int cmd_routing_solve(const Options& opt, const std::string& problem_file,
                      const std::string& policy_file) {
    auto rp = parse_routing_problem(read_file(problem_file));
    auto policy = parse_policy(read_file(policy_file)).policy;
    auto rep = solve_routing(rp, policy);
    Report out;
    out.add("verified", rep.verified ? "true" : "false");
    if (rep.no_equilibrium) out.add("verdict", "NO_EQUILIBRIUM");
    if (rep.choices)
        for (const auto& [n, m] : *rep.choices) out.add("choose " + n, m);
    for (const auto& f : rep.failures) out.add("failure", f);
    out.print(opt.tsv);
    return rep.verified ? kYes : kNo;
}

int cmd_routing_check(const Options& opt, const std::string& problem_file,
                      const std::string& policy_file) {
    auto rp = parse_routing_problem(read_file(problem_file));
    auto parsed = parse_policy(read_file(policy_file));

    std::set<Word> words(parsed.sample.begin(), parsed.sample.end());
    for (const auto& n : rp.graph.nodes)
        if (n != rp.target)
            for (const auto& w : route_words(rp, n)) words.insert(w);
    std::vector<Word> sample(words.begin(), words.end());

    auto rep = check_policy_sufficient(parsed.policy, sample, opt.prefix_bound);
    Report out;
    out.add("sample", std::to_string(sample.size()) + " route words");
    out.add("e-prefix", rep.e_prefix.pass ? "pass" : rep.e_prefix.witness);
    out.add("strict weak order", rep.strict_weak_order.ok ? "pass" : rep.strict_weak_order.reason);
    out.add("no gain by prefix",
            rep.no_gain_by_prefix.pass ? "pass" : rep.no_gain_by_prefix.witness);
    out.add("verdict", rep.pass ? "pass-on-sample" : "fail");
    out.print(opt.tsv);
    return rep.pass ? kYes : kNo;
}

int cmd_gallery_list(const Options& opt) {
    Report out;
    for (const auto& e : gallery()) out.add(e.name, to_string(e.expected) + "  " + e.description);
    out.print(opt.tsv);
    return kYes;
}

int cmd_gallery_run(const Options& opt, const std::string& name) {
    const auto* entry = find_gallery_entry(name);
    if (!entry) throw Error("no gallery entry named " + name);
    auto outcome = entry->run();
    Report out;
    out.add("entry", entry->name);
    out.add("expected", to_string(entry->expected));
    out.add("actual", to_string(outcome.verdict));
    out.print(opt.tsv);
    std::cout << outcome.report;
    return outcome.verdict == entry->expected ? kYes : kNo;
}

int cmd_search(const Options& opt, const std::string& pref_file, std::size_t nodes,
               std::size_t seeds) {
    auto parsed = parse_preference(read_file(pref_file));
    std::vector<Label> labels(parsed.alphabet.begin(), parsed.alphabet.end());
    if (labels.empty()) throw Error("preference has an empty label alphabet");

    std::mt19937 rng(opt.seed);
    auto pick = [&](std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    };

    std::size_t hits = 0;
    for (std::size_t s = 0; s < seeds; ++s) {
        RawDigraph raw;
        std::vector<NodeId> ids;
        for (std::size_t i = 0; i < nodes; ++i) ids.push_back("n" + std::to_string(i));
        for (const auto& id : ids) raw.arcs[{id, ids[pick(nodes)]}] = labels[pick(labels.size())];
        for (std::size_t i = 0; i < 2 * nodes; ++i) {
            NodeId a = ids[pick(nodes)];
            NodeId b = ids[pick(nodes)];
            if (!raw.arcs.count({a, b})) raw.arcs[{a, b}] = labels[pick(labels.size())];
        }
        for (const auto& id : ids) raw.add_node(id);

        auto g = Dalograph::validate(raw);
        Context ctx{g, parsed.pref, opt.budget};
        auto all = brute_force_equilibria(ctx);
        if (all.empty()) {
            ++hits;
            std::cout << "# no equilibrium, seed graph " << s << "\n" << print_graph(g);
        }
    }
    std::cout << "searched " << seeds << " graphs over " << labels.size() << " labels, " << hits
              << " without equilibria\n";
    return kYes;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"path equilibria in arc-labelled digraphs"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    Options opt;
    app.add_option("--budget", opt.budget, "path enumeration cap per start node");
    app.add_option("--prefix-bound", opt.prefix_bound, "checker prefix length bound");
    app.add_option("--seed", opt.seed, "random seed");
    std::string format = "plain";
    app.add_option("--format", format, "report format: plain or tsv");

    std::string graph_file, pref_file, strategy_file, node, dot_file, universe_file;
    std::string problem_file, policy_file, entry_name, rules = "combination";
    std::size_t nodes = 4, seeds = 100;

    auto* paths = app.add_subcommand("paths", "list the paths from a node with their words");
    paths->add_option("graph", graph_file)->required();
    paths->add_option("node", node)->required();

    auto* solve = app.add_subcommand("solve", "construct and verify an equilibrium");
    solve->add_option("graph", graph_file)->required();
    solve->add_option("pref", pref_file)->required();
    solve->add_option("--dot", dot_file, "write the strategy as graphviz");

    auto* verify = app.add_subcommand("verify", "verify a given strategy");
    verify->add_option("graph", graph_file)->required();
    verify->add_option("pref", pref_file)->required();
    verify->add_option("strategy", strategy_file)->required();

    auto* oracle = app.add_subcommand("oracle", "enumerate all equilibria exhaustively");
    oracle->add_option("graph", graph_file)->required();
    oracle->add_option("pref", pref_file)->required();

    auto* suff = app.add_subcommand("check-sufficient", "check the sufficient condition");
    suff->add_option("graph", graph_file)->required();
    suff->add_option("pref", pref_file)->required();

    auto* nec = app.add_subcommand("check-necessary", "check the necessary condition");
    nec->add_option("graph", graph_file)->required();
    nec->add_option("pref", pref_file)->required();

    auto* clo = app.add_subcommand("closure", "run a closure over a universe");
    clo->add_option("pref", pref_file)->required();
    clo->add_option("universe", universe_file)->required();
    clo->add_option("--rules", rules,
                    "e-prefix | transitive | a-transitive | gen-e-prefix | combination | "
                    "experimental");

    auto* routing = app.add_subcommand("routing", "routing problems");
    routing->require_subcommand(1);
    auto* rsolve = routing->add_subcommand("solve", "solve a routing problem");
    rsolve->add_option("problem", problem_file)->required();
    rsolve->add_option("policy", policy_file)->required();
    auto* rcheck = routing->add_subcommand("check", "check policy conditions on a problem");
    rcheck->add_option("problem", problem_file)->required();
    rcheck->add_option("policy", policy_file)->required();

    auto* gal = app.add_subcommand("gallery", "worked instances with pinned verdicts");
    gal->require_subcommand(1);
    gal->add_subcommand("list", "list entries");
    auto* grun = gal->add_subcommand("run", "run one entry");
    grun->add_option("name", entry_name)->required();

    auto* search = app.add_subcommand("search", "hunt for zero-equilibrium graphs");
    search->add_option("pref", pref_file)->required();
    search->add_option("--nodes", nodes, "nodes per random graph");
    search->add_option("--seeds", seeds, "number of random graphs");

    CLI11_PARSE(app, argc, argv);
    if (format == "tsv")
        opt.tsv = true;
    else if (format != "plain") {
        std::cerr << "error: --format must be plain or tsv\n";
        return kError;
    }

    try {
        if (*paths) return cmd_paths(opt, graph_file, node);
        if (*solve) return cmd_solve(opt, graph_file, pref_file, dot_file);
        if (*verify) return cmd_verify(opt, graph_file, pref_file, strategy_file);
        if (*oracle) return cmd_oracle(opt, graph_file, pref_file);
        if (*suff) return cmd_check_sufficient(opt, graph_file, pref_file);
        if (*nec) return cmd_check_necessary(opt, graph_file, pref_file);
        if (*clo) return cmd_closure(opt, pref_file, universe_file, rules);
        if (*routing) {
            if (*rsolve) return cmd_routing_solve(opt, problem_file, policy_file);
            return cmd_routing_check(opt, problem_file, policy_file);
        }
        if (*gal) {
            if (*grun) return cmd_gallery_run(opt, entry_name);
            return cmd_gallery_list(opt);
        }
        if (*search) return cmd_search(opt, pref_file, nodes, seeds);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}
