#include "daleq/gallery.hpp"

#include "daleq/equilibrium.hpp"

#include <sstream>

namespace daleq {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::HasEquilibrium: return "HAS_EQUILIBRIUM";
        case Verdict::NoEquilibrium: return "NO_EQUILIBRIUM";
        case Verdict::NecessaryViolated: return "NECESSARY_VIOLATED";
        case Verdict::Open: return "OPEN";
    }
    return "?";
}

namespace {

UPWord w(std::initializer_list<Label> prefix, std::initializer_list<Label> period) {
    return UPWord(Word(prefix), Word(period));
}

LabelOrder numeric_ranks(std::initializer_list<std::pair<Label, int>> rs) {
    LabelOrder o;
    for (const auto& [l, r] : rs) o.set_rank(l, r);
    return o;
}

Dalograph graph_of(std::initializer_list<std::tuple<NodeId, NodeId, Label>> arcs) {
    RawDigraph raw;
    for (const auto& [a, b, l] : arcs) raw.add_arc(a, b, l);
    return Dalograph::validate(raw);
}

// Terminal exit: node -> sink carrying `label`, sink self-looping on it,
// so taking the exit induces label^ω after the entry arc.
void add_exit(RawDigraph& raw, const NodeId& from, const NodeId& sink, const Label& label) {
    raw.add_arc(from, sink, label);
    raw.add_arc(sink, sink, label);
}

GalleryOutcome run_dalograph_case(const DaloFixture& fx, Verdict expected_when_empty) {
    Context ctx{fx.graph, fx.pref};
    auto all = brute_force_equilibria(ctx);
    std::ostringstream os;
    os << "strategies with a global equilibrium: " << all.size() << " of "
       << strategy_space_size(fx.graph) << '\n';
    if (all.empty()) return {expected_when_empty, os.str()};
    auto built = construct_equilibrium(ctx);
    os << "constructed strategy " << (built.verified ? "verified" : "NOT verified") << '\n';
    return {built.verified ? Verdict::HasEquilibrium : Verdict::NoEquilibrium, os.str()};
}

GalleryOutcome run_routing_case(const RoutingProblem& rp, const RoutingPolicy& policy) {
    auto all = routing_brute_force(rp, policy);
    std::ostringstream os;
    os << "routing equilibria: " << all.size() << '\n';
    return {all.empty() ? Verdict::NoEquilibrium : Verdict::HasEquilibrium, os.str()};
}

} // namespace

DaloFixture five_label_fixture() {
    auto g = graph_of({{"n1", "n2", "a1"},
                       {"n2", "n2", "a2"},
                       {"n3", "n1", "a3"},
                       {"n3", "n4", "a4"},
                       {"n4", "n3", "a5"}});
    auto order =
        numeric_ranks({{"a1", 1}, {"a2", 2}, {"a3", 3}, {"a4", 4}, {"a5", 5}});
    return {std::move(g), lex(std::move(order))};
}

std::pair<RawDigraph, std::map<NodeId, Label>> node_labelled_fixture() {
    RawDigraph raw;
    raw.add_arc("n1", "n2", "");
    raw.add_arc("n2", "n1", "");
    raw.add_arc("n2", "n3", "");
    raw.add_arc("n3", "n3", "");
    raw.add_arc("n4", "n5", "");
    raw.add_arc("n5", "n6", "");
    raw.add_arc("n6", "n5", "");
    raw.add_arc("n6", "n4", "");
    std::map<NodeId, Label> labels{{"n1", "a1"}, {"n2", "a2"}, {"n3", "a3"},
                                   {"n4", "a4"}, {"n5", "a5"}, {"n6", "a6"}};
    return {std::move(raw), std::move(labels)};
}

Dalograph node_labelled_expected() {
    return graph_of({{"n1", "n2", "a1"},
                     {"n2", "n1", "a2"},
                     {"n2", "n3", "a2"},
                     {"n3", "n3", "a3"},
                     {"n4", "n5", "a4"},
                     {"n5", "n6", "a5"},
                     {"n6", "n5", "a6"},
                     {"n6", "n4", "a6"}});
}

RawDigraph dead_end_fixture() {
    RawDigraph raw;
    raw.add_arc("n1", "n3", "a1");
    raw.add_arc("n3", "n1", "a2");
    raw.add_arc("n3", "n2", "a3");
    raw.add_arc("n3", "n4", "a4");
    return raw;
}

RawDigraph finite_path_fixture() {
    RawDigraph raw;
    raw.add_arc("n1", "n2", "a1");
    raw.add_arc("n2", "n1", "a2");
    raw.add_arc("n2", "n3", "a3");
    raw.add_arc("n3", "n2", "a4");
    return raw;
}

DaloFixture local_eq_fixture() {
    auto g = graph_of({{"o", "n2", "2"},
                       {"o", "n4", "1"},
                       {"n2", "n3", "3"},
                       {"n3", "n3", "0"},
                       {"n4", "o", "1"},
                       {"op", "n4", "0"},
                       {"op", "n2", "0"},
                       {"op", "n3", "1"}});
    auto order = numeric_ranks({{"0", 0}, {"1", 1}, {"2", 2}, {"3", 3}});
    return {std::move(g), lex(std::move(order))};
}

Strategy local_eq_pictured_strategy() {
    return Strategy{{{"o", "n4"}, {"n2", "n3"}, {"n3", "n3"}, {"n4", "o"}, {"op", "n3"}}};
}

DaloFixture removal_schematic_fixture() {
    auto g = graph_of({{"o", "m", "1"},
                       {"m", "c", "2"},
                       {"c", "m", "3"},
                       {"o", "d1", "0"},
                       {"d1", "d1", "0"},
                       {"c", "d2", "0"},
                       {"d2", "d2", "0"}});
    auto order = numeric_ranks({{"0", 0}, {"1", 1}, {"2", 2}, {"3", 3}});
    return {std::move(g), lex(std::move(order))};
}

DaloFixture ring_fixture() {
    RawDigraph raw;
    raw.add_arc("n1", "n2", "c");
    raw.add_arc("n2", "n1", "c");
    add_exit(raw, "n1", "e1", "a");
    add_exit(raw, "n2", "e2", "a");
    // Total order on the three eligible words: c^w < a^w < c a^w.
    auto pref = table({{w({}, {"c"}), w({}, {"a"})},
                       {w({}, {"a"}), w({"c"}, {"a"})},
                       {w({}, {"c"}), w({"c"}, {"a"})}});
    return {Dalograph::validate(raw), std::move(pref)};
}

DaloFixture coordination_fixture() {
    RawDigraph raw;
    raw.add_arc("o1", "m3", "v1");
    raw.add_arc("o1", "m4", "u1");
    raw.add_arc("o2", "m3", "v2");
    raw.add_arc("o2", "m5", "u2");
    raw.add_arc("m3", "m4", "x1");
    raw.add_arc("m3", "m5", "x2");
    raw.add_arc("m4", "m6", "y1");
    raw.add_arc("m5", "m6", "y2");
    add_exit(raw, "m4", "ea1", "a1");
    add_exit(raw, "m5", "ea2", "a2");
    add_exit(raw, "m6", "eb1", "b1");
    add_exit(raw, "m6", "eb2", "b2");

    // o1 only tolerates the 1-side exits, o2 the 2-side ones, and the
    // direct escapes at m4/m5 are themselves dominated, so m6's single
    // choice starves one of the two sources.
    auto pref = table({
        {w({"u1", "y1"}, {"b2"}), w({"v1", "x1"}, {"a1"})},
        {w({"u2", "y2"}, {"b1"}), w({"v2", "x2"}, {"a2"})},
        {w({"v1", "x2"}, {"a2"}), w({"u1"}, {"a1"})},
        {w({"v2", "x1"}, {"a1"}), w({"u2"}, {"a2"})},
        {w({"v1", "x1", "y1"}, {"b2"}), w({"u1", "y1"}, {"b1"})},
        {w({"v2", "x2", "y2"}, {"b1"}), w({"u2", "y2"}, {"b2"})},
        {w({"v1", "x2", "y2"}, {"b2"}), w({"u1"}, {"a1"})},
        {w({"v2", "x1", "y1"}, {"b1"}), w({"u2"}, {"a2"})},
        {w({}, {"a1"}), w({"y1"}, {"b1"})},
        {w({}, {"a2"}), w({"y2"}, {"b2"})},
    });
    return {Dalograph::validate(raw), std::move(pref)};
}

DaloFixture triskele_fixture() {
    RawDigraph raw;
    for (int i = 1; i <= 3; ++i) {
        std::string m = "m" + std::to_string(i);
        raw.add_arc("h", m, "x" + std::to_string(i));
        raw.add_arc(m, "h", "y" + std::to_string(i));
        add_exit(raw, m, "e" + std::to_string(i), "a" + std::to_string(i));
    }
    auto pref = table({
        {w({}, {"a1"}), w({"y1", "x2"}, {"a2"})},
        {w({}, {"a2"}), w({"y2", "x3"}, {"a3"})},
        {w({}, {"a3"}), w({"y3", "x1"}, {"a1"})},
        {w({}, {"x1", "y1"}), w({"x3"}, {"a3"})},
        {w({}, {"x2", "y2"}), w({"x1"}, {"a1"})},
        {w({}, {"x3", "y3"}), w({"x2"}, {"a2"})},
    });
    return {Dalograph::validate(raw), std::move(pref)};
}

std::pair<Preference, Universe> mms_refutation_fixture() {
    auto order = numeric_ranks({{"0", 0}, {"1", 1}, {"2", 2}});
    auto universe = Universe::from_words({w({"2"}, {"0", "2"}), w({"2"}, {"1"})}, 2);
    return {maxmin_set(std::move(order)), std::move(universe)};
}

std::pair<RoutingProblem, RoutingPolicy> routing_non_eprefix_fixture() {
    auto rp = non_eprefix_counterexample({"u"}, {"v1", "v2"}, {"w1", "w2"});
    auto policy = table_policy({
        {{"u", "v1", "v2"}, {"u", "w1", "w2"}}, // uv worse than uw
        {{"w1", "w2"}, {"v1", "v2"}},           // yet w worse than v bare
    });
    return {std::move(rp), std::move(policy)};
}

std::pair<RoutingProblem, RoutingPolicy> routing_prefix_gain_fixture() {
    auto rp = prefix_gain_counterexample({"u"}, {"v"});
    auto policy = table_policy({
        {{"v"}, {"u", "v"}}, // the bare exit is worse than handing off first
    });
    return {std::move(rp), std::move(policy)};
}

std::pair<Preference, Universe> open_conclusion_fixture() {
    auto pref = table({
        {w({}, {"a"}), w({"c"}, {"b"})},
        {w({"c"}, {"b"}), w({"d"}, {"a"})},
        {w({}, {"a"}), w({"d"}, {"a"})},
        {w({"d"}, {"b"}), w({"c"}, {"a"})},
        {w({"c"}, {"a"}), w({}, {"b"})},
        {w({"d"}, {"b"}), w({}, {"b"})},
    });
    auto universe = Universe::from_words(
        {w({}, {"a"}), w({"c"}, {"b"}), w({"d"}, {"a"}), w({"d"}, {"b"}), w({"c"}, {"a"}),
         w({}, {"b"})},
        2);
    return {std::move(pref), std::move(universe)};
}

namespace {

std::vector<GalleryEntry> build_gallery() {
    std::vector<GalleryEntry> entries;

    entries.push_back({"five-label", "five-arc dalograph, lexicographic preference",
                       Verdict::HasEquilibrium, [] {
                           return run_dalograph_case(five_label_fixture(), Verdict::NoEquilibrium);
                       }});

    entries.push_back(
        {"node-label-embedding", "node labels moved onto outgoing arcs, then solved",
         Verdict::HasEquilibrium, [] {
             auto [raw, labels] = node_labelled_fixture();
             auto g = embed_node_labelled(raw, labels);
             if (!(g.adjacency() == node_labelled_expected().adjacency()))
                 return GalleryOutcome{Verdict::Open, "embedding differs from the expected graph"};
             auto order = numeric_ranks(
                 {{"a1", 1}, {"a2", 2}, {"a3", 3}, {"a4", 4}, {"a5", 5}, {"a6", 6}});
             return run_dalograph_case({std::move(g), lex(std::move(order))},
                                       Verdict::NoEquilibrium);
         }});

    entries.push_back({"sink-embedding", "dead ends repaired through a dummy sink",
                       Verdict::HasEquilibrium, [] {
                           auto g = embed_with_sink(dead_end_fixture(), "dl");
                           auto order = numeric_ranks(
                               {{"a1", 1}, {"a2", 2}, {"a3", 3}, {"a4", 4}, {"dl", 0}});
                           return run_dalograph_case({std::move(g), lex(std::move(order))},
                                                     Verdict::NoEquilibrium);
                       }});

    entries.push_back({"finite-path-embedding", "every node gets an arc into the dummy sink",
                       Verdict::HasEquilibrium, [] {
                           auto g = embed_with_sink(finite_path_fixture(), "dl", true);
                           auto order = numeric_ranks(
                               {{"a1", 1}, {"a2", 2}, {"a3", 3}, {"a4", 4}, {"dl", 0}});
                           return run_dalograph_case({std::move(g), lex(std::move(order))},
                                                     Verdict::NoEquilibrium);
                       }});

    entries.push_back({"local-eq-lex", "numeric lexicographic example with a non-equilibrium node",
                       Verdict::HasEquilibrium, [] {
                           return run_dalograph_case(local_eq_fixture(), Verdict::NoEquilibrium);
                       }});

    entries.push_back({"removal-schematic", "branching node feeding a preferred two-node cycle",
                       Verdict::HasEquilibrium, [] {
                           return run_dalograph_case(removal_schematic_fixture(),
                                                     Verdict::NoEquilibrium);
                       }});

    entries.push_back({"ring", "total order on three words, E-prefix but not subcontinuous",
                       Verdict::NoEquilibrium, [] {
                           return run_dalograph_case(ring_fixture(), Verdict::NoEquilibrium);
                       }});

    entries.push_back({"coordination-1", "two sources fight over one shared exit chooser",
                       Verdict::NoEquilibrium, [] {
                           return run_dalograph_case(coordination_fixture(),
                                                     Verdict::NoEquilibrium);
                       }});

    entries.push_back({"triskele", "three branches in a cyclic standoff around a hub",
                       Verdict::NoEquilibrium, [] {
                           return run_dalograph_case(triskele_fixture(), Verdict::NoEquilibrium);
                       }});

    entries.push_back(
        {"mms-refutation", "max-min set order refuted by a derived reflexive pair",
         Verdict::NecessaryViolated, [] {
             auto [pref, universe] = mms_refutation_fixture();
             auto rep = check_necessary_condition(pref, universe);
             std::ostringstream os;
             if (rep.violated)
                 os << "reflexive pair derived:\n" << rep.derivation;
             else
                 os << "no violation found on this universe\n";
             return GalleryOutcome{rep.violated ? Verdict::NecessaryViolated : Verdict::Open,
                                   os.str()};
         }});

    entries.push_back({"routing-non-eprefix", "two routes below a shared prefix, swapped bare",
                       Verdict::NoEquilibrium, [] {
                           auto [rp, policy] = routing_non_eprefix_fixture();
                           return run_routing_case(rp, policy);
                       }});

    entries.push_back({"routing-prefix-gain", "handing off first strictly improves a route",
                       Verdict::NoEquilibrium, [] {
                           auto [rp, policy] = routing_prefix_gain_fixture();
                           return run_routing_case(rp, policy);
                       }});

    entries.push_back(
        {"open-conclusion", "six-pair table with no E-prefix transitive total extension",
         Verdict::Open, [] {
             auto [pref, universe] = open_conclusion_fixture();
             auto rep = check_necessary_condition(pref, universe);
             std::ostringstream os;
             os << "necessary condition on this universe: "
                << (rep.violated ? "VIOLATED" : "undetermined") << " (" << rep.derived_pairs
                << " derived pairs)\n"
                << "equilibrium existence for every dalograph is unresolved; use `search`\n";
             return GalleryOutcome{rep.violated ? Verdict::NecessaryViolated : Verdict::Open,
                                   os.str()};
         }});

    return entries;
}

} // namespace

const std::vector<GalleryEntry>& gallery() {
    static const std::vector<GalleryEntry> entries = build_gallery();
    return entries;
}

const GalleryEntry* find_gallery_entry(const std::string& name) {
    for (const auto& e : gallery())
        if (e.name == name) return &e;
    return nullptr;
}

} // namespace daleq
