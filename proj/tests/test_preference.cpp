#include "doctest.h"

#include "daleq/gallery.hpp"
#include "daleq/preference.hpp"
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

} // namespace

TEST_CASE("lexicographic extension on digit words") {
    auto p = lex(digits());
    CHECK(p(w({"0"}, {"1"}), w({"1"}, {"0"})));
    CHECK(!p(w({"1"}, {"0"}), w({"0"}, {"1"})));
    CHECK(p(w({}, {"0", "3"}), w({}, {"1"})));
    CHECK(p(w({}, {"1"}), w({}, {"3", "0"})));
    UPWord a = w({"2"}, {"0", "1"});
    CHECK(!p(a, a));
}

TEST_CASE("lexicographic extension sees through rank ties") {
    LabelOrder o({{"a", 0}, {"b", 0}, {"c", 1}});
    auto p = lex(o);
    // a # b at position 0, then a < c decides.
    CHECK(p(w({"a", "a"}, {"b"}), w({"b", "c"}, {"a"})));
    CHECK(!p(w({"b", "c"}, {"a"}), w({"a", "a"}, {"b"})));
    // Tied everywhere: incomparable.
    CHECK(!p(w({}, {"a"}), w({}, {"b"})));
    CHECK(!p(w({}, {"b"}), w({}, {"a"})));
}

TEST_CASE("pareto extension on digit words") {
    auto p = pareto(digits());
    CHECK(!p(w({"0"}, {"1"}), w({"1"}, {"0"})));
    CHECK(p(w({}, {"0", "1"}), w({}, {"1"})));
    CHECK(p(w({}, {"1"}), w({}, {"1", "3"})));
    UPWord a = w({}, {"0", "1"});
    CHECK(!p(a, a));
}

TEST_CASE("max-min limit-set order") {
    auto p = maxmin_limit_set(digits());
    CHECK(p(w({}, {"1", "2", "3"}), w({}, {"0", "4"})));
    CHECK(p(w({}, {"0", "2", "3"}), w({}, {"1", "3"})));
    CHECK(p(w({"3", "3"}, {"4"}), w({"0"}, {"5", "0"})));
    UPWord a = w({}, {"2"});
    CHECK(!p(a, a));
}

TEST_CASE("max-min-light limit-set order") {
    auto p = maxminlight_limit_set(digits());
    CHECK(!p(w({}, {"1", "2"}), w({}, {"0", "3"})));
    CHECK(p(w({}, {"0", "1"}), w({}, {"1"})));
    CHECK(p(w({}, {"1"}), w({}, {"1", "2"})));
}

TEST_CASE("max-min set order sees prefixes") {
    auto p = maxmin_set(digits());
    CHECK(p(canonicalize({"2"}, {"0", "2"}), w({"2"}, {"1"})));
    CHECK(p(w({}, {"1"}), w({}, {"0", "2"})));
    UPWord a = w({"2"}, {"1"});
    CHECK(!p(a, a));
}

TEST_CASE("table preferences are literal pair sets") {
    auto [pref, universe] = open_conclusion_fixture();
    CHECK(pref(w({}, {"a"}), w({"c"}, {"b"})));
    CHECK(!pref(w({"c"}, {"b"}), w({}, {"a"})));

    auto empty = table({});
    CHECK(!empty(w({}, {"a"}), w({}, {"b"})));
}

TEST_CASE("E-prefix checker accepts lex and refutes the max-min set order") {
    Rng rng(47);
    auto labels = testing::numeric_alphabet(3);
    for (int t = 0; t < 40; ++t) {
        auto universe = testing::random_universe(rng, labels, 8);
        CHECK(check_E_prefix(lex(digits()), universe).pass);
    }

    auto [pref, universe] = mms_refutation_fixture();
    auto verdict = check_E_prefix(pref, universe.words);
    CHECK(!verdict.pass);
    CHECK(verdict.witness.find("u = 2") != std::string::npos);

    CHECK(check_E_prefix(lex(digits()), {}).pass);
}

TEST_CASE("subcontinuity checker accepts lex and catches the ring order") {
    Rng rng(53);
    auto labels = testing::numeric_alphabet(3);
    for (int t = 0; t < 40; ++t) {
        auto universe = testing::random_universe(rng, labels, 8);
        CHECK(check_subcontinuous(lex(digits()), universe).pass);
    }

    // c^w < a^w < c a^w has an ascending prefix chain topped the wrong way.
    auto ring = table({{w({}, {"c"}), w({}, {"a"})},
                       {w({}, {"a"}), w({"c"}, {"a"})},
                       {w({}, {"c"}), w({"c"}, {"a"})}});
    std::vector<UPWord> universe{w({}, {"a"}), w({"c"}, {"a"}), w({}, {"c"})};
    auto verdict = check_subcontinuous(ring, universe);
    CHECK(!verdict.pass);
    CHECK(verdict.witness.find("u = c") != std::string::npos);

    CHECK(check_subcontinuous(table({}), universe).pass);
}

TEST_CASE("A-transitivity checker accepts lex") {
    Rng rng(59);
    auto labels = testing::numeric_alphabet(3);
    for (int t = 0; t < 25; ++t) {
        auto universe = testing::random_universe(rng, labels, 6);
        CHECK(check_A_transitive(lex(digits()), universe).pass);
    }
    CHECK(check_A_transitive(table({}), {}).pass);
}

TEST_CASE("A-transitivity checker catches a missing lifted pair") {
    // a^w < b^w and x·b^w < c^w but x·a^w is incomparable to c^w.
    auto p = table({{w({}, {"a"}), w({}, {"b"})}, {w({"x"}, {"b"}), w({}, {"c"})}});
    std::vector<UPWord> universe{w({}, {"a"}), w({}, {"b"}), w({}, {"c"}), w({"x"}, {"b"}),
                                 w({"x"}, {"a"})};
    CHECK(!check_A_transitive(p, universe).pass);
}

TEST_CASE("gen-E-prefix checker generalizes the E-prefix checker") {
    // u·a^w < u·b^w with nothing else: W = {u} forces a^w < b^w.
    auto p = table({{w({"u"}, {"a"}), w({"u"}, {"b"})}});
    std::vector<UPWord> universe{w({"u"}, {"a"}), w({"u"}, {"b"}), w({}, {"a"}), w({}, {"b"})};
    CHECK(!check_gen_E_prefix(p, universe).pass);

    // A two-element W: u·a < v·b and v·a < u·b.
    auto q = table({{w({"u"}, {"a"}), w({"v", "v"}, {"b"})},
                    {w({"v", "v"}, {"a"}), w({"u"}, {"b"})}});
    std::vector<UPWord> universe2{w({"u"}, {"a"}), w({"u"}, {"b"}), w({"v", "v"}, {"a"}),
                                  w({"v", "v"}, {"b"}), w({}, {"a"}), w({}, {"b"})};
    auto verdict = check_gen_E_prefix(q, universe2);
    CHECK(!verdict.pass);
    CHECK(verdict.witness.find("W = {") != std::string::npos);

    CHECK(check_gen_E_prefix(lex(digits()), {}).pass);
}

TEST_CASE("W-sets may not contain two length-1 prefixes") {
    // c·b^w < d·a^w and d·b^w < c·a^w would need W = {c, d}.
    auto p = table({{w({"c"}, {"b"}), w({"d"}, {"a"})}, {w({"d"}, {"b"}), w({"c"}, {"a"})}});
    std::vector<UPWord> universe{w({"c"}, {"b"}), w({"d"}, {"a"}), w({"d"}, {"b"}),
                                 w({"c"}, {"a"}), w({}, {"a"}), w({}, {"b"})};
    CHECK(check_gen_E_prefix(p, universe).pass);
}

TEST_CASE("alt-subcontinuity checker") {
    Rng rng(61);
    auto labels = testing::numeric_alphabet(3);
    for (int t = 0; t < 15; ++t) {
        auto universe = testing::random_universe(rng, labels, 5);
        CHECK(check_alt_subcontinuous(lex(digits()), universe).pass);
    }

    // a^w < t·b^w but neither v·a^w < b^w nor a^w < (tv)^w.
    auto p = table({{w({}, {"a"}), w({"t"}, {"b"})}});
    std::vector<UPWord> universe{w({}, {"a"}), w({"t"}, {"b"}), w({}, {"b"})};
    CHECK(!check_alt_subcontinuous(p, universe).pass);
}

TEST_CASE("sufficient-condition report bundles the three checks") {
    auto fx = five_label_fixture();
    std::vector<UPWord> eligible;
    for (const auto& n : fx.graph.nodes())
        for (const auto& word : eligible_sequences(fx.graph, n)) eligible.push_back(word);
    std::sort(eligible.begin(), eligible.end());
    eligible.erase(std::unique(eligible.begin(), eligible.end()), eligible.end());
    CHECK(check_sufficient_condition(fx.pref, eligible).pass);

    auto [mms, universe] = mms_refutation_fixture();
    auto rep = check_sufficient_condition(mms, universe.words);
    CHECK(!rep.pass);
    CHECK(!rep.e_prefix.pass);

    std::vector<UPWord> singleton{w({}, {"0"})};
    CHECK(check_sufficient_condition(lex(digits()), singleton).pass);
}

TEST_CASE("lex restrictions are strict weak orders and transitive") {
    Rng rng(67);
    auto labels = testing::numeric_alphabet(4);
    for (int t = 0; t < 60; ++t) {
        auto order = testing::random_ranks(rng, labels);
        auto universe = testing::random_universe(rng, labels, 8);
        auto restricted = restrict_to_universe(lex(order), universe);
        CHECK(check_strict_weak_order(restricted).ok);
        CHECK(check_transitive(restricted).ok);
    }
}

TEST_CASE("pareto is included in lex") {
    Rng rng(71);
    auto labels = testing::numeric_alphabet(4);
    for (int t = 0; t < 1000; ++t) {
        auto order = testing::random_ranks(rng, labels);
        UPWord a = testing::random_upword(rng, labels);
        UPWord b = testing::random_upword(rng, labels);
        if (pareto(order)(a, b)) CHECK(lex(order)(a, b));
    }
}

TEST_CASE("max-min limit-set order meets the sufficient condition on samples") {
    Rng rng(73);
    auto labels = testing::numeric_alphabet(4);
    for (int t = 0; t < 30; ++t) {
        auto order = testing::random_ranks(rng, labels);
        auto universe = testing::random_universe(rng, labels, 6);
        auto p = maxmin_limit_set(order);
        CHECK(check_strict_weak_order(restrict_to_universe(p, universe)).ok);
        CHECK(check_E_prefix(p, universe).pass);
        CHECK(check_subcontinuous(p, universe).pass);
    }
}

TEST_CASE("max-min-light is included in max-min on limit sets") {
    Rng rng(79);
    auto labels = testing::numeric_alphabet(4);
    for (int t = 0; t < 1000; ++t) {
        auto order = testing::random_ranks(rng, labels);
        UPWord a = testing::random_upword(rng, labels);
        UPWord b = testing::random_upword(rng, labels);
        if (maxminlight_limit_set(order)(a, b)) CHECK(maxmin_limit_set(order)(a, b));
    }
}

TEST_CASE("preferences are deterministic") {
    Rng rng(83);
    auto labels = testing::numeric_alphabet(3);
    auto order = testing::random_ranks(rng, labels);
    for (const auto& p : {lex(order), pareto(order), maxmin_set(order)})
        for (int t = 0; t < 50; ++t) {
            UPWord a = testing::random_upword(rng, labels);
            UPWord b = testing::random_upword(rng, labels);
            CHECK(p(a, b) == p(a, b));
        }
}
