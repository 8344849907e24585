#pragma once

#include "daleq/dalograph.hpp"
#include "daleq/preference.hpp"
#include "daleq/upword.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace daleq {

struct WSetExplosionError : Error {
    WSetExplosionError() : Error("gen-E-prefix prefix pool exceeds the cap") {}
};

/// The finite word set and prefix pool a closure runs over. Rule firings
/// that mention words outside `words` are skipped, so every engine below
/// is a sound under-approximation of the true (infinite-domain) closure:
/// derived pairs are trustworthy, absences are not.
struct Universe {
    std::vector<UPWord> words;    // sorted, unique
    std::vector<Word> prefixes;   // nonempty, sorted, unique

    static Universe from_words(std::vector<UPWord> words, std::size_t prefix_bound = 3);
    /// Eligible sequences of g everywhere, closed under single-letter
    /// drops (which covers stripped suffixes and loop rotations).
    static Universe from_dalograph(const Dalograph& g, std::size_t prefix_bound = 3,
                                   std::size_t path_budget = 100000);

    std::optional<std::size_t> index_of(const UPWord& w) const;
};

enum class RuleKind { Base, EPrefix, Transitive, ATransitive, GenEPrefix };

/// One derivation step; premises index earlier pairs of the relation.
struct RuleStep {
    RuleKind kind = RuleKind::Base;
    std::vector<std::size_t> premises;
    Word context; // the u of an (A-)prefix rule
    std::vector<Word> wset;
};

/// Base pairs plus everything the selected rules derive, each derived
/// pair carrying a replayable derivation.
class DerivedRelation {
public:
    explicit DerivedRelation(const Universe& u) : universe_(&u) {}

    const Universe& universe() const { return *universe_; }
    std::size_t size() const { return pairs_.size(); }
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const { return pairs_; }
    const RuleStep& step(std::size_t pair_index) const { return steps_[pair_index]; }
    bool has(std::size_t a, std::size_t b) const { return index_.count({a, b}) != 0; }
    bool has_words(const UPWord& a, const UPWord& b) const;
    std::optional<std::size_t> find(std::size_t a, std::size_t b) const;

    /// Word-level view of pair i.
    std::pair<const UPWord&, const UPWord&> words_of(std::size_t i) const;

    bool add(std::size_t a, std::size_t b, RuleStep step);

    std::optional<std::size_t> reflexive_pair() const;

    std::string derivation_text(std::size_t pair_index) const;

private:
    const Universe* universe_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
    std::vector<RuleStep> steps_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index_;
};

struct RuleSet {
    bool e_prefix = false;
    bool transitive = false;
    bool a_transitive = false;
    bool gen_e_prefix = false;
};

struct ClosureBounds {
    std::size_t wset_pool_cap = 4096;
};

using BasePairs = std::set<std::pair<UPWord, UPWord>>;

DerivedRelation close_with_rules(const BasePairs& base, const Universe& u, const RuleSet& rules,
                                 const ClosureBounds& bounds = {});

DerivedRelation close_E_prefix(const BasePairs& base, const Universe& u);
DerivedRelation close_transitive(const BasePairs& base, const Universe& u);
DerivedRelation close_A_transitive(const BasePairs& base, const Universe& u);
DerivedRelation close_gen_E_prefix(const BasePairs& base, const Universe& u,
                                   const ClosureBounds& bounds = {});
/// Rule union of the A-transitive and gen-E-prefix closures.
DerivedRelation close_combination(const BasePairs& base, const Universe& u,
                                  const ClosureBounds& bounds = {});

BasePairs restrict_preference(const Preference& p, const Universe& u);

/// VIOLATED when the combination closure of p|universe derives some
/// α ≺ α (then no irreflexive gen-E-prefix A-transitive superrelation of
/// p exists, so equilibria cannot exist for every dalograph); otherwise
/// undetermined on this universe.
struct NecessaryConditionReport {
    bool violated = false;
    std::string derivation;
    std::size_t derived_pairs = 0;
};

NecessaryConditionReport check_necessary_condition(const Preference& p, const Universe& u,
                                                   const ClosureBounds& bounds = {});

/// Checks that every derivation step recorded in r reproduces its pair
/// from its premises.
bool replay_provenance(const DerivedRelation& r);

/// Experimental mutual-induction rule set over pairs of word SETS,
/// aimed at branching standoffs that the combination closure misses.
/// Transcribed literally from its sketch; carries no soundness claim
/// beyond rule replay, and no verdict is derived from it.
struct SetPair {
    bool strong = false; // the ll-tagged relation
    std::vector<std::size_t> left;  // sorted word indices
    std::vector<std::size_t> right;

    auto operator<=>(const SetPair&) const = default;
};

struct ExperimentalClosure {
    std::vector<SetPair> derived;
    std::vector<std::string> traces; // one human-readable line per pair
};

ExperimentalClosure close_experimental(const BasePairs& base, const Universe& u,
                                       std::size_t set_cap = 2, std::size_t pair_cap = 2000);

} // namespace daleq
