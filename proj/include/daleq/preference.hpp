#pragma once

#include "daleq/order.hpp"
#include "daleq/upword.hpp"

#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace daleq {

/// A decidable strict relation over UPWords; less(a, b) reads
/// "a is less preferred than b".
struct Preference {
    std::string name;
    std::function<bool(const UPWord&, const UPWord&)> less;

    bool operator()(const UPWord& a, const UPWord& b) const { return less(a, b); }
};

using WordPair = std::pair<UPWord, UPWord>;

Preference lex(LabelOrder order);
Preference pareto(LabelOrder order);
Preference maxmin_limit_set(LabelOrder order);
Preference maxminlight_limit_set(LabelOrder order);
Preference maxmin_set(LabelOrder order);
/// Exactly the listed pairs; everything else incomparable.
Preference table(std::set<WordPair> pairs);

/// Checker configuration: prefix words u are drawn from the prefixes of
/// universe words up to max_prefix_len letters; W-sets contain at most
/// max_wset_size prefixes.
struct CheckerBounds {
    std::size_t max_prefix_len = 6;
    std::size_t max_wset_size = 3;
    std::size_t wset_pool_cap = 4096;
};

/// Pass/fail over the given universe only; a pass never certifies the
/// property in general. On failure `witness` shows the offending instance.
struct ConditionVerdict {
    bool pass = true;
    std::string witness;

    explicit operator bool() const { return pass; }
};

/// Nonempty prefixes of universe words, up to the length bound, sorted.
std::vector<Word> prefix_pool(const std::vector<UPWord>& universe, std::size_t max_len);

// uα ≺ uβ ⇒ α ≺ β for shared nonempty prefixes within the universe.
ConditionVerdict check_E_prefix(const Preference& p, const std::vector<UPWord>& universe,
                                const CheckerBounds& bounds = {});

// α ≺ uα ⇒ u^ω ⊀ α for α, uα, u^ω all in the universe.
ConditionVerdict check_subcontinuous(const Preference& p, const std::vector<UPWord>& universe,
                                     const CheckerBounds& bounds = {});

// α ≺ β ⇒ uβ ≺ γ ⇒ uα ≺ γ (u ranges over the pool plus the empty word).
ConditionVerdict check_A_transitive(const Preference& p, const std::vector<UPWord>& universe,
                                    const CheckerBounds& bounds = {});

// α ≺ tβ ⇒ (vα ≺ β ∨ α ≺ (tv)^ω) for nonempty pool words t, v.
ConditionVerdict check_alt_subcontinuous(const Preference& p, const std::vector<UPWord>& universe,
                                         const CheckerBounds& bounds = {});

// Wα ≺ Wβ ⇒ α ≺ β, W over pool subsets without the empty word and with
// at most one length-1 word.
ConditionVerdict check_gen_E_prefix(const Preference& p, const std::vector<UPWord>& universe,
                                    const CheckerBounds& bounds = {});

/// The sufficient condition for equilibrium existence on every graph, checked
/// on a finite universe: strict weak order + E-prefix + subcontinuous.
struct SufficientConditionReport {
    RelationCheck strict_weak_order;
    ConditionVerdict e_prefix;
    ConditionVerdict subcontinuous;
    bool pass = false;
};

SufficientConditionReport check_sufficient_condition(const Preference& p,
                                                     const std::vector<UPWord>& universe,
                                                     const CheckerBounds& bounds = {});

/// The preference restricted to the universe, as an explicit relation
/// over word indices.
FiniteRelation restrict_to_universe(const Preference& p, const std::vector<UPWord>& universe);

} // namespace daleq
