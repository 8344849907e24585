#pragma once

#include "daleq/upword.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

namespace daleq {

struct UnrankedLabelError : Error {
    explicit UnrankedLabelError(const Label& l) : Error("label has no rank: " + l) {}
};

/// A strict weak order on labels, given by integer rank levels:
/// a ≺ b iff rank(a) < rank(b); equal ranks are incomparable (a ♯ b).
/// Every finite strict weak order arises this way.
class LabelOrder {
public:
    LabelOrder() = default;
    explicit LabelOrder(std::map<Label, int> ranks) : ranks_(std::move(ranks)) {}

    void set_rank(const Label& l, int r) { ranks_[l] = r; }
    int rank_of(const Label& l) const;
    bool has(const Label& l) const { return ranks_.count(l) != 0; }

    bool less(const Label& a, const Label& b) const { return rank_of(a) < rank_of(b); }
    bool tied(const Label& a, const Label& b) const { return rank_of(a) == rank_of(b); }

    const std::map<Label, int>& ranks() const { return ranks_; }

private:
    std::map<Label, int> ranks_;
};

/// An explicit binary relation on a finite domain {0, .., size-1}.
class FiniteRelation {
public:
    explicit FiniteRelation(std::size_t size) : size_(size) {}

    std::size_t size() const { return size_; }
    void add(std::size_t a, std::size_t b);
    bool has(std::size_t a, std::size_t b) const { return pairs_.count({a, b}) != 0; }
    bool incomparable(std::size_t a, std::size_t b) const { return !has(a, b) && !has(b, a); }
    const std::set<std::pair<std::size_t, std::size_t>>& pairs() const { return pairs_; }

private:
    std::size_t size_ = 0;
    std::set<std::pair<std::size_t, std::size_t>> pairs_;
};

/// Verdict of a predicate check; on failure, witness holds the offending
/// elements and `reason` says which formula broke.
struct RelationCheck {
    bool ok = true;
    std::vector<std::size_t> witness;
    std::string reason;

    explicit operator bool() const { return ok; }
};

RelationCheck check_transitive(const FiniteRelation& r);
RelationCheck check_asymmetric(const FiniteRelation& r);
RelationCheck check_irreflexive(const FiniteRelation& r);
// Asymmetric with transitive negation.
RelationCheck check_strict_weak_order(const FiniteRelation& r);
// Lower- and upper-imitating: incomparable elements share predecessors
// and successors.
RelationCheck check_imitating(const FiniteRelation& r);
RelationCheck check_no_short_cycle(const FiniteRelation& r);
// ♯ reflexive, symmetric, transitive.
RelationCheck check_incomparability_equivalence(const FiniteRelation& r);

/// The three equivalent characterizations of a strict weak order, each
/// evaluated independently; agree is true when all three verdicts match.
struct SwoEquivalenceReport {
    bool strict_weak_order;
    bool transitive_and_sharp_equivalence;
    bool imitating_and_no_short_cycle;
    bool agree;
};

SwoEquivalenceReport check_swo_equivalences(const FiniteRelation& r);

FiniteRelation induced_relation(const LabelOrder& order, const std::vector<Label>& domain);

} // namespace daleq
