#include "doctest.h"

#include "daleq/textio.hpp"
#include "support.hpp"

using namespace daleq;
using daleq::testing::Rng;

TEST_CASE("upword text round-trips") {
    CHECK(parse_upword("0 1 ; 1") == canonicalize({"0", "1"}, {"1"}));
    CHECK(parse_upword("; a b") == canonicalize({}, {"a", "b"}));
    CHECK(to_string(parse_upword("; a b")) == "; a b");
    CHECK(to_string(parse_upword("0 1 ; 1")) == "0 ; 1");

    Rng rng(179);
    auto labels = testing::numeric_alphabet(3);
    for (int t = 0; t < 200; ++t) {
        UPWord word = testing::random_upword(rng, labels);
        CHECK(parse_upword(to_string(word)) == word);
    }
}

TEST_CASE("bad upwords report errors") {
    CHECK_THROWS_AS(parse_upword("a b"), ParseError);
    CHECK_THROWS_AS(parse_upword("a ;"), ParseError);
    CHECK_THROWS_AS(parse_upword("a ; b ; c"), ParseError);
}

TEST_CASE("graph files round-trip") {
    std::string text = "# demo\n"
                       "arc a b 1\n"
                       "arc b a 2\n"
                       "arc b b 0\n";
    auto g = parse_dalograph(text);
    CHECK(g.arc_count() == 3);
    CHECK(parse_dalograph(print_graph(g)).adjacency() == g.adjacency());

    Rng rng(181);
    auto labels = testing::numeric_alphabet(3);
    for (int t = 0; t < 100; ++t) {
        auto random = testing::random_dalograph(rng, 5, 9, labels);
        CHECK(parse_dalograph(print_graph(random)).adjacency() == random.adjacency());
    }
}

TEST_CASE("graph parse errors carry line numbers") {
    try {
        parse_dalograph("arc a b 1\nfoo\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_dalograph("arc a b\n"), ParseError);
    CHECK_THROWS_AS(parse_dalograph("arc a b 1\narc a b 2\n"), ParseError);
}

TEST_CASE("label order files") {
    auto order = parse_label_order("rank a 0\nrank b 2\n");
    CHECK(order.less("a", "b"));
    CHECK_THROWS_AS(parse_label_order("rank a x\n"), ParseError);
}

TEST_CASE("builtin preference files") {
    auto parsed = parse_preference("lex\nrank 0 0\nrank 1 1\n");
    CHECK(parsed.pref.name == "lex");
    CHECK(parsed.alphabet == std::set<Label>({"0", "1"}));
    CHECK(parsed.pref(parse_upword("; 0"), parse_upword("; 1")));

    CHECK_THROWS_AS(parse_preference("nonsense\n"), ParseError);
    CHECK_THROWS_AS(parse_preference(""), ParseError);
}

TEST_CASE("table preference files") {
    auto parsed = parse_preference("pair ; a < c ; b\npair c ; b < d ; a\n");
    CHECK(parsed.is_table);
    CHECK(parsed.pairs.size() == 2);
    CHECK(parsed.pref(parse_upword("; a"), parse_upword("c ; b")));
    CHECK(!parsed.pref(parse_upword("c ; b"), parse_upword("; a")));
    CHECK(parsed.alphabet == std::set<Label>({"a", "b", "c", "d"}));

    CHECK_THROWS_AS(parse_preference("lex\npair ; a < ; b\n"), ParseError);
}

TEST_CASE("strategy files") {
    auto g = parse_dalograph("arc a b 1\narc b a 2\narc a a 0\n");
    auto s = parse_strategy("choose a b\nchoose b a\n", g);
    CHECK(s.choice.at("a") == "b");
    CHECK(parse_strategy(print_strategy(s), g) == s);

    CHECK_THROWS(parse_strategy("choose a b\n", g));          // b unchosen
    CHECK_THROWS(parse_strategy("choose a b\nchoose b b\n", g)); // missing arc
}

TEST_CASE("routing problem files") {
    std::string text = "arc a b x\narc b t y\ntarget t\n";
    auto rp = parse_routing_problem(text);
    CHECK(rp.target == "t");
    auto reparsed = parse_routing_problem(print_routing_problem(rp));
    CHECK(reparsed.graph.arcs == rp.graph.arcs);
    CHECK(reparsed.target == rp.target);

    CHECK_THROWS_AS(parse_routing_problem("arc a b x\n"), ParseError);
}

TEST_CASE("policy files") {
    auto minhop = parse_policy("minhop\n");
    CHECK(minhop.policy(Word{"a", "b"}, Word{"a"}));

    auto widest = parse_policy("widest\nrank lo 0\nrank hi 1\n");
    CHECK(widest.policy(Word{"lo", "hi"}, Word{"hi"}));

    auto tbl = parse_policy("pair a b < b\n");
    CHECK(tbl.policy(Word{"a", "b"}, Word{"b"}));
    CHECK(tbl.sample.size() == 2);

    CHECK_THROWS_AS(parse_policy("widest\npair a < b\n"), ParseError);
}

TEST_CASE("universe files") {
    auto u = parse_universe("word 2 ; 1\nword ; 2 0\n");
    CHECK(u.words.size() >= 3); // drop-closure adds 1^w
    CHECK(u.index_of(parse_upword("; 1")).has_value());

    auto pinned = parse_universe("word ; a\nprefix a a\n");
    CHECK(pinned.prefixes == std::vector<Word>{{"a", "a"}});
}

TEST_CASE("preference, policy, and universe files round-trip") {
    for (const auto* text : {"lex\nrank 0 0\nrank 1 1\n", "maxmin-set\nrank a 3\n",
                             "pair ; a < c ; b\npair c ; b < d ; a\n"}) {
        auto once = parse_preference(text);
        auto twice = parse_preference(print_preference(once));
        CHECK(once.is_table == twice.is_table);
        CHECK(once.kind == twice.kind);
        CHECK(once.order.ranks() == twice.order.ranks());
        CHECK(once.pairs == twice.pairs);
    }

    for (const auto* text : {"minhop\n", "widest\nrank lo 0\nrank hi 9\n", "pair a b < b\n"}) {
        auto once = parse_policy(text);
        auto twice = parse_policy(print_policy(once));
        CHECK(once.kind == twice.kind);
        CHECK(once.order.ranks() == twice.order.ranks());
        CHECK(once.pairs == twice.pairs);
    }

    auto u = parse_universe("word 2 ; 1\nword ; 2 0\nprefix 2\nprefix 2 0\n");
    auto u2 = parse_universe(print_universe(u));
    CHECK(u.words == u2.words);
    CHECK(u.prefixes == u2.prefixes);
}
