#include "daleq/order.hpp"

namespace daleq {

int LabelOrder::rank_of(const Label& l) const {
    auto it = ranks_.find(l);
    if (it == ranks_.end()) throw UnrankedLabelError(l);
    return it->second;
}

void FiniteRelation::add(std::size_t a, std::size_t b) {
    if (a >= size_ || b >= size_) throw Error("relation pair out of domain");
    pairs_.insert({a, b});
}

RelationCheck check_transitive(const FiniteRelation& r) {
    for (auto [a, b] : r.pairs())
        for (std::size_t c = 0; c < r.size(); ++c)
            if (r.has(b, c) && !r.has(a, c))
                return {false, {a, b, c}, "a<b and b<c but not a<c"};
    return {};
}

RelationCheck check_asymmetric(const FiniteRelation& r) {
    for (auto [a, b] : r.pairs())
        if (r.has(b, a))
            return {false, {a, b}, "a<b and b<a"};
    return {};
}

RelationCheck check_irreflexive(const FiniteRelation& r) {
    for (std::size_t a = 0; a < r.size(); ++a)
        if (r.has(a, a))
            return {false, {a}, "a<a"};
    return {};
}

RelationCheck check_strict_weak_order(const FiniteRelation& r) {
    if (auto asym = check_asymmetric(r); !asym) return asym;
    for (std::size_t a = 0; a < r.size(); ++a)
        for (std::size_t b = 0; b < r.size(); ++b)
            for (std::size_t c = 0; c < r.size(); ++c)
                if (!r.has(a, b) && !r.has(b, c) && r.has(a, c))
                    return {false, {a, b, c}, "negation not transitive"};
    return {};
}

RelationCheck check_imitating(const FiniteRelation& r) {
    for (std::size_t a = 0; a < r.size(); ++a)
        for (std::size_t b = 0; b < r.size(); ++b) {
            if (a == b || !r.incomparable(a, b)) continue;
            for (std::size_t c = 0; c < r.size(); ++c) {
                if (r.has(c, a) && !r.has(c, b))
                    return {false, {a, b, c}, "not lower-imitating"};
                if (r.has(a, c) && !r.has(b, c))
                    return {false, {a, b, c}, "not upper-imitating"};
            }
        }
    return {};
}

RelationCheck check_no_short_cycle(const FiniteRelation& r) {
    for (auto [a, b] : r.pairs()) {
        if (r.has(b, a)) return {false, {a, b}, "cycle of length 2"};
        for (std::size_t c = 0; c < r.size(); ++c)
            if (r.has(b, c) && r.has(c, a))
                return {false, {a, b, c}, "cycle of length 3"};
    }
    return {};
}

RelationCheck check_incomparability_equivalence(const FiniteRelation& r) {
    if (auto irr = check_irreflexive(r); !irr)
        return {false, irr.witness, "sharp not reflexive"};
    for (std::size_t a = 0; a < r.size(); ++a)
        for (std::size_t b = 0; b < r.size(); ++b)
            for (std::size_t c = 0; c < r.size(); ++c)
                if (r.incomparable(a, b) && r.incomparable(b, c) && !r.incomparable(a, c))
                    return {false, {a, b, c}, "sharp not transitive"};
    return {};
}

SwoEquivalenceReport check_swo_equivalences(const FiniteRelation& r) {
    SwoEquivalenceReport rep{};
    rep.strict_weak_order = static_cast<bool>(check_strict_weak_order(r));
    rep.transitive_and_sharp_equivalence =
        static_cast<bool>(check_transitive(r)) &&
        static_cast<bool>(check_incomparability_equivalence(r));
    rep.imitating_and_no_short_cycle =
        static_cast<bool>(check_imitating(r)) &&
        static_cast<bool>(check_no_short_cycle(r));
    rep.agree = rep.strict_weak_order == rep.transitive_and_sharp_equivalence &&
                rep.strict_weak_order == rep.imitating_and_no_short_cycle;
    return rep;
}

FiniteRelation induced_relation(const LabelOrder& order, const std::vector<Label>& domain) {
    FiniteRelation r(domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i)
        for (std::size_t j = 0; j < domain.size(); ++j)
            if (order.less(domain[i], domain[j])) r.add(i, j);
    return r;
}

} // namespace daleq
