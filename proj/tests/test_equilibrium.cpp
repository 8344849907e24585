#include "doctest.h"

#include "daleq/equilibrium.hpp"
#include "daleq/gallery.hpp"
#include "support.hpp"

#include <algorithm>

using namespace daleq;
using daleq::testing::Rng;

namespace {

UPWord w(Word prefix, Word period) { return UPWord(std::move(prefix), std::move(period)); }

LabelOrder digits() {
    LabelOrder o;
    for (int i = 0; i <= 5; ++i) o.set_rank(std::to_string(i), i);
    return o;
}

Dalograph graph_of(std::initializer_list<std::tuple<NodeId, NodeId, Label>> arcs) {
    RawDigraph raw;
    for (const auto& [a, b, l] : arcs) raw.add_arc(a, b, l);
    return Dalograph::validate(raw);
}

Dalograph chain_loop() {
    // outdegree 1 everywhere: unique strategy
    return graph_of({{"a", "b", "0"}, {"b", "c", "1"}, {"c", "a", "2"}});
}

// A random-but-valid continuation of the single-node walk at o.
Path random_continuation(Rng& rng, const Dalograph& g, const NodeId& o) {
    auto paths = continuations(Walk(g, o));
    return paths[daleq::testing::pick(rng, paths.size())];
}

} // namespace

TEST_CASE("single-choice graphs are maximal everywhere") {
    auto g = chain_loop();
    Context ctx{g, lex(digits())};
    for (const auto& n : g.nodes()) {
        auto paths = continuations(Walk(g, n));
        REQUIRE(paths.size() == 1);
        CHECK(is_maximal_continuation(ctx, Walk(g, n), paths[0]).maximal);
    }
}

TEST_CASE("the pictured strategy is a local equilibrium at op but not at o") {
    auto fx = local_eq_fixture();
    Context ctx{fx.graph, fx.pref};
    Strategy s = local_eq_pictured_strategy();

    CHECK(verify_local(ctx, s, "op").maximal);

    auto at_o = verify_local(ctx, s, "o");
    CHECK(!at_o.maximal);
    // The better path's word starts 2 3.
    UPWord better = induced_sequence(fx.graph, *at_o.better);
    CHECK(better.letter_at(0) == "2");
    CHECK(better.letter_at(1) == "3");
}

TEST_CASE("seek_forward returns the continuation unchanged on looping walks") {
    auto g = chain_loop();
    Context ctx{g, lex(digits())};
    Walk loop(g, {"a", "b", "c", "a"});
    Path p = Path::from_looping_walk(loop);
    CHECK(seek_forward(ctx, loop, p) == p);
}

TEST_CASE("seek_forward is involutive on random lex instances") {
    Rng rng(89);
    auto labels = testing::numeric_alphabet(3);
    for (int t = 0; t < 100; ++t) {
        auto g = testing::random_dalograph(rng, 5, 8, labels);
        Context ctx{g, lex(testing::random_ranks(rng, labels))};
        auto nodes = g.nodes();
        NodeId o = nodes[testing::pick(rng, nodes.size())];
        Path seed = random_continuation(rng, g, o);
        Path once = seek_forward(ctx, Walk(g, o), seed);
        CHECK(seek_forward(ctx, Walk(g, o), once) == once);
    }
}

TEST_CASE("seek_forward fixpoints are semi-hereditary maximal") {
    Rng rng(97);
    auto labels = testing::numeric_alphabet(3);
    for (int t = 0; t < 100; ++t) {
        auto g = testing::random_dalograph(rng, 5, 8, labels);
        Context ctx{g, lex(testing::random_ranks(rng, labels))};
        auto nodes = g.nodes();
        NodeId o = nodes[testing::pick(rng, nodes.size())];
        Path fixed = seek_forward(ctx, Walk(g, o), random_continuation(rng, g, o));
        CHECK(is_semi_hereditary_maximal(ctx, Walk(g, o), fixed).ok);
    }
}

TEST_CASE("suffixes of seek_forward fixpoints are fixpoints") {
    Rng rng(101);
    auto labels = testing::numeric_alphabet(3);
    for (int t = 0; t < 100; ++t) {
        auto g = testing::random_dalograph(rng, 5, 8, labels);
        Context ctx{g, lex(testing::random_ranks(rng, labels))};
        auto nodes = g.nodes();
        NodeId o = nodes[testing::pick(rng, nodes.size())];
        Path fixed = seek_forward(ctx, Walk(g, o), random_continuation(rng, g, o));
        Walk longer = Walk(g, o).extended(fixed.node_at(1));
        CHECK(seek_forward(ctx, longer, fixed) == fixed);
    }
}

TEST_CASE("semi-hereditary maximality implies plain maximality") {
    Rng rng(103);
    auto labels = testing::numeric_alphabet(3);
    for (int t = 0; t < 60; ++t) {
        auto g = testing::random_dalograph(rng, 4, 7, labels);
        Context ctx{g, lex(testing::random_ranks(rng, labels))};
        auto nodes = g.nodes();
        NodeId o = nodes[testing::pick(rng, nodes.size())];
        Path p = random_continuation(rng, g, o);
        if (is_semi_hereditary_maximal(ctx, Walk(g, o), p).ok)
            CHECK(is_maximal_continuation(ctx, Walk(g, o), p).maximal);
    }
}

TEST_CASE("maximality plus a semi-hereditary tail is semi-hereditary") {
    Rng rng(211);
    auto labels = testing::numeric_alphabet(3);
    for (int t = 0; t < 80; ++t) {
        auto g = testing::random_dalograph(rng, 4, 7, labels);
        Context ctx{g, lex(testing::random_ranks(rng, labels))};
        auto nodes = g.nodes();
        NodeId o = nodes[testing::pick(rng, nodes.size())];
        Path p = random_continuation(rng, g, o);
        Walk x(g, o);
        if (x.looping()) continue;
        Walk xo = x.extended(p.node_at(1));
        if (is_maximal_continuation(ctx, x, p).maximal &&
            is_semi_hereditary_maximal(ctx, xo, p).ok)
            CHECK(is_semi_hereditary_maximal(ctx, x, p).ok);
    }
}

TEST_CASE("find_hereditary_maximal_path is hereditary under lex") {
    Rng rng(107);
    auto labels = testing::numeric_alphabet(3);
    for (int t = 0; t < 100; ++t) {
        auto g = testing::random_dalograph(rng, 5, 8, labels);
        Context ctx{g, lex(testing::random_ranks(rng, labels))};
        for (const auto& n : g.nodes()) {
            auto hm = find_hereditary_maximal_path(ctx, n);
            CHECK(hm.hereditary);
        }
    }
}

TEST_CASE("outdegree-1 graphs have exactly their unique strategy as equilibrium") {
    auto g = chain_loop();
    Context ctx{g, lex(digits())};
    auto eq = construct_equilibrium(ctx);
    CHECK(eq.verified);
    auto all = brute_force_equilibria(ctx);
    REQUIRE(all.size() == 1);
    CHECK(all[0] == *eq.strategy);
}

TEST_CASE("the numeric example equilibrium routes o through label 2") {
    auto fx = local_eq_fixture();
    Context ctx{fx.graph, fx.pref};
    auto eq = construct_equilibrium(ctx);
    REQUIRE(eq.verified);
    UPWord at_o = induced_sequence(fx.graph, induced_path(fx.graph, *eq.strategy, "o"));
    CHECK(at_o.letter_at(0) == "2");
    CHECK(at_o.letter_at(1) == "3");

    auto all = brute_force_equilibria(ctx);
    CHECK(!all.empty());
    for (const auto& s : all) {
        UPWord word = induced_sequence(fx.graph, induced_path(fx.graph, s, "o"));
        CHECK(word.letter_at(0) == "2");
    }
}

TEST_CASE("construction agrees with the oracle on random lex instances") {
    Rng rng(109);
    auto labels = testing::numeric_alphabet(3);
    for (int t = 0; t < 60; ++t) {
        auto g = testing::random_dalograph(rng, 4, 7, labels);
        Context ctx{g, lex(testing::random_ranks(rng, labels))};
        auto eq = construct_equilibrium(ctx);
        CHECK(eq.verified);
        CHECK(!brute_force_equilibria(ctx).empty());
    }
}

TEST_CASE("verification failures carry witnesses") {
    auto fx = ring_fixture();
    Context ctx{fx.graph, fx.pref};
    CHECK(brute_force_equilibria(ctx).empty());

    auto eq = construct_equilibrium(ctx);
    CHECK(!eq.verified);
    CHECK(!eq.failures.empty());
}

TEST_CASE("verification is monotone in the preference") {
    Rng rng(113);
    auto labels = testing::numeric_alphabet(3);
    for (int t = 0; t < 100; ++t) {
        auto g = testing::random_dalograph(rng, 4, 6, labels);
        auto order = testing::random_ranks(rng, labels);
        auto big = lex(order);

        // A random subrelation of lex over the eligible words.
        std::set<UPWord> words;
        for (const auto& n : g.nodes())
            for (const auto& word : eligible_sequences(g, n)) words.insert(word);
        std::set<WordPair> kept;
        for (const auto& a : words)
            for (const auto& b : words)
                if (big(a, b) && testing::pick(rng, 2) == 0) kept.insert({a, b});
        auto small = table(std::move(kept));

        Context big_ctx{g, big};
        Context small_ctx{g, small};
        for (const auto& s : brute_force_equilibria(big_ctx))
            CHECK(verify_global(small_ctx, s).verified);
    }
}

TEST_CASE("preferences that coincide on the eligible words verify alike") {
    Rng rng(127);
    auto labels = testing::numeric_alphabet(3);
    for (int t = 0; t < 60; ++t) {
        auto g = testing::random_dalograph(rng, 4, 6, labels);
        auto order = testing::random_ranks(rng, labels);
        auto p = lex(order);

        std::set<UPWord> words;
        for (const auto& n : g.nodes())
            for (const auto& word : eligible_sequences(g, n)) words.insert(word);
        std::set<WordPair> exact;
        for (const auto& a : words)
            for (const auto& b : words)
                if (p(a, b)) exact.insert({a, b});
        auto q = table(std::move(exact));

        Context pc{g, p};
        Context qc{g, q};
        auto under_p = brute_force_equilibria(pc);
        auto under_q = brute_force_equilibria(qc);
        CHECK(under_p == under_q);
    }
}

TEST_CASE("strategy space cap errors instead of hanging") {
    auto g = graph_of({{"a", "a", "0"}, {"a", "b", "1"}, {"b", "b", "0"}, {"b", "a", "1"}});
    Context ctx{g, lex(digits()), 100000, 2};
    CHECK_THROWS_AS(brute_force_equilibria(ctx), StrategySpaceTooLargeError);
}

TEST_CASE("cyclic table preferences are reported") {
    // Two words strictly above each other: no maximal continuation exists.
    auto g = graph_of({{"o", "a", "0"}, {"o", "b", "1"}, {"a", "a", "0"}, {"b", "b", "1"}});
    auto p = table({{w({}, {"0"}), w({"1"}, {"1"})}, {w({"1"}, {"1"}), w({}, {"0"})}});
    Context ctx{g, p};
    CHECK_THROWS_AS(find_hereditary_maximal_path(ctx, "o"), CyclicPreferenceError);
}
