#include "doctest.h"

#include "daleq/upword.hpp"
#include "support.hpp"

using namespace daleq;
using daleq::testing::Rng;

namespace {

UPWord w(Word prefix, Word period) { return UPWord(std::move(prefix), std::move(period)); }

// Independent oracle: unfold a (prefix, period) description letter by
// letter without canonicalizing.
Label unfold(const Word& prefix, const Word& period, std::size_t n) {
    if (n < prefix.size()) return prefix[n];
    return period[(n - prefix.size()) % period.size()];
}

} // namespace

TEST_CASE("canonicalize reduces non-primitive periods") {
    CHECK(canonicalize({}, {"a", "b", "a", "b"}) == w({}, {"a", "b"}));
    CHECK(canonicalize({}, {"a", "a", "a"}) == w({}, {"a"}));
}

TEST_CASE("canonicalize rolls prefix letters into the period") {
    // a(ba)^w denotes the same word as (ab)^w; confirmed by unfolding.
    UPWord canon = canonicalize({"a"}, {"b", "a"});
    for (std::size_t n = 0; n < 8; ++n)
        CHECK(canon.letter_at(n) == unfold({"a"}, {"b", "a"}, n));
    CHECK(canon == w({}, {"a", "b"}));
}

TEST_CASE("canonicalize keeps already-canonical words") {
    CHECK(canonicalize({"x"}, {"y"}) == w({"x"}, {"y"}));
}

TEST_CASE("empty period is rejected") {
    CHECK_THROWS_AS(canonicalize({"a"}, {}), EmptyPeriodError);
}

TEST_CASE("canonicalize is idempotent and denotationally sound") {
    Rng rng(7);
    auto labels = testing::numeric_alphabet(3);
    for (int t = 0; t < 300; ++t) {
        Word prefix, period;
        std::size_t np = testing::pick(rng, 4);
        std::size_t nq = 1 + testing::pick(rng, 4);
        for (std::size_t i = 0; i < np; ++i) prefix.push_back(labels[testing::pick(rng, 3)]);
        for (std::size_t i = 0; i < nq; ++i) period.push_back(labels[testing::pick(rng, 3)]);

        UPWord canon = canonicalize(prefix, period);
        CHECK(canonicalize(canon.prefix(), canon.period()) == canon);
        for (std::size_t n = 0; n <= 4 * (np + nq); ++n)
            CHECK(canon.letter_at(n) == unfold(prefix, period, n));
    }
}

TEST_CASE("letter_at unrolls the period") {
    UPWord a = w({"0"}, {"1"});
    CHECK(a.letter_at(0) == "0");
    CHECK(a.letter_at(1) == "1");
    CHECK(w({}, {"a", "b"}).letter_at(3) == "b");
    CHECK(w({"x"}, {"y"}).letter_at(100) == "y");
}

TEST_CASE("prepend examples") {
    UPWord ab = w({}, {"a", "b"});
    CHECK(prepend(Word{}, ab) == ab);
    CHECK(prepend(Word{"a"}, ab) == canonicalize({"a"}, {"a", "b"}));
    // 2(02)^w rolls into (20)^w; same denotation either way.
    UPWord two = prepend(Word{"2"}, w({}, {"0", "2"}));
    CHECK(two == canonicalize({"2"}, {"0", "2"}));
    for (std::size_t n = 0; n < 8; ++n)
        CHECK(two.letter_at(n) == unfold({"2"}, {"0", "2"}, n));
}

TEST_CASE("strip_prefix examples") {
    UPWord two02 = canonicalize({"2"}, {"0", "2"});
    CHECK(strip_prefix(Word{}, two02) == two02);
    CHECK(strip_prefix(Word{"2"}, two02) == w({}, {"0", "2"}));
    CHECK(!strip_prefix(Word{"9"}, two02).has_value());
}

TEST_CASE("prepend/strip_prefix round trip") {
    Rng rng(11);
    auto labels = testing::numeric_alphabet(3);
    for (int t = 0; t < 200; ++t) {
        UPWord word = testing::random_upword(rng, labels);
        Word u;
        for (std::size_t i = testing::pick(rng, 4); i > 0; --i)
            u.push_back(labels[testing::pick(rng, 3)]);
        CHECK(strip_prefix(u, prepend(u, word)) == word);
    }
}

TEST_CASE("limit and element sets") {
    CHECK(limit_set(canonicalize({"3", "3"}, {"4"})) == std::set<Label>{"4"});
    CHECK(limit_set(canonicalize({"0"}, {"5", "0"})) == std::set<Label>({"5", "0"}));
    CHECK(limit_set(w({}, {"a"})) == std::set<Label>{"a"});

    CHECK(element_set(canonicalize({"2"}, {"0", "2"})) == std::set<Label>({"0", "2"}));
    CHECK(element_set(w({}, {"1"})) == std::set<Label>{"1"});
    CHECK(element_set(canonicalize({"a", "b"}, {"c"})) == std::set<Label>({"a", "b", "c"}));
}

TEST_CASE("limit sets ignore prefixes") {
    Rng rng(13);
    auto labels = testing::numeric_alphabet(4);
    for (int t = 0; t < 200; ++t) {
        UPWord word = testing::random_upword(rng, labels);
        Word u;
        for (std::size_t i = testing::pick(rng, 4); i > 0; --i)
            u.push_back(labels[testing::pick(rng, 4)]);
        CHECK(limit_set(prepend(u, word)) == limit_set(word));
    }
}

TEST_CASE("drop agrees with letter_at") {
    Rng rng(17);
    auto labels = testing::numeric_alphabet(3);
    for (int t = 0; t < 200; ++t) {
        UPWord word = testing::random_upword(rng, labels);
        std::size_t k = testing::pick(rng, 7);
        UPWord dropped = word.drop(k);
        for (std::size_t n = 0; n < 10; ++n) CHECK(dropped.letter_at(n) == word.letter_at(n + k));
    }
}
