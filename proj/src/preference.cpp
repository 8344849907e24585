#include "daleq/preference.hpp"

#include <algorithm>
#include <sstream>

namespace daleq {

namespace {

std::string fmt_word(const Word& u) {
    std::string s;
    for (const auto& l : u) {
        if (!s.empty()) s += ' ';
        s += l;
    }
    return s;
}

// Class-level max/min of a label set under a rank order.
std::pair<int, int> rank_extrema(const LabelOrder& order, const std::set<Label>& s) {
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto& l : s) {
        int r = order.rank_of(l);
        if (first || r < lo) lo = r;
        if (first || r > hi) hi = r;
        first = false;
    }
    return {lo, hi};
}

bool maxmin_less(const LabelOrder& order, const std::set<Label>& a, const std::set<Label>& b) {
    auto [mina, maxa] = rank_extrema(order, a);
    auto [minb, maxb] = rank_extrema(order, b);
    return maxa < maxb || (maxa == maxb && mina < minb);
}

bool maxminlight_less(const LabelOrder& order, const std::set<Label>& a, const std::set<Label>& b) {
    auto [mina, maxa] = rank_extrema(order, a);
    auto [minb, maxb] = rank_extrema(order, b);
    // ∀x∈A ∀y∈B: y ⊀ x, and ∃x∈A ∃y∈B: x ≺ y.
    return minb >= maxa && mina < maxb;
}

UPWord power(const Word& u) { return UPWord({}, u); }

} // namespace

Preference lex(LabelOrder order) {
    return {"lex", [order = std::move(order)](const UPWord& a, const UPWord& b) {
                std::size_t n = comparison_horizon(a, b);
                for (std::size_t i = 0; i < n; ++i) {
                    const Label& x = a.letter_at(i);
                    const Label& y = b.letter_at(i);
                    if (order.tied(x, y)) continue;
                    return order.less(x, y);
                }
                return false;
            }};
}

Preference pareto(LabelOrder order) {
    return {"pareto", [order = std::move(order)](const UPWord& a, const UPWord& b) {
                std::size_t n = comparison_horizon(a, b);
                bool strict = false;
                for (std::size_t i = 0; i < n; ++i) {
                    const Label& x = a.letter_at(i);
                    const Label& y = b.letter_at(i);
                    if (order.less(y, x)) return false;
                    if (order.less(x, y)) strict = true;
                }
                return strict;
            }};
}

Preference maxmin_limit_set(LabelOrder order) {
    return {"maxmin-ls", [order = std::move(order)](const UPWord& a, const UPWord& b) {
                return maxmin_less(order, limit_set(a), limit_set(b));
            }};
}

Preference maxminlight_limit_set(LabelOrder order) {
    return {"maxminlight-ls", [order = std::move(order)](const UPWord& a, const UPWord& b) {
                return maxminlight_less(order, limit_set(a), limit_set(b));
            }};
}

Preference maxmin_set(LabelOrder order) {
    return {"maxmin-set", [order = std::move(order)](const UPWord& a, const UPWord& b) {
                return maxmin_less(order, element_set(a), element_set(b));
            }};
}

Preference table(std::set<WordPair> pairs) {
    return {"table", [pairs = std::move(pairs)](const UPWord& a, const UPWord& b) {
                return pairs.count({a, b}) != 0;
            }};
}

std::vector<Word> prefix_pool(const std::vector<UPWord>& universe, std::size_t max_len) {
    std::set<Word> pool;
    for (const auto& w : universe) {
        std::size_t limit = std::min(max_len, w.prefix_size() + w.period_size());
        Word u;
        for (std::size_t i = 0; i < limit; ++i) {
            u.push_back(w.letter_at(i));
            pool.insert(u);
        }
    }
    return {pool.begin(), pool.end()};
}

ConditionVerdict check_E_prefix(const Preference& p, const std::vector<UPWord>& universe,
                                const CheckerBounds& bounds) {
    std::set<UPWord> in_universe(universe.begin(), universe.end());
    auto pool = prefix_pool(universe, bounds.max_prefix_len);
    for (const auto& u : pool)
        for (const auto& x : universe) {
            auto alpha = strip_prefix(u, x);
            if (!alpha || !in_universe.count(*alpha)) continue;
            for (const auto& y : universe) {
                auto beta = strip_prefix(u, y);
                if (!beta || !in_universe.count(*beta)) continue;
                if (p(x, y) && !p(*alpha, *beta)) {
                    std::ostringstream os;
                    os << "u = " << fmt_word(u) << ", " << to_string(x) << " < " << to_string(y)
                       << " but not " << to_string(*alpha) << " < " << to_string(*beta);
                    return {false, os.str()};
                }
            }
        }
    return {};
}

ConditionVerdict check_subcontinuous(const Preference& p, const std::vector<UPWord>& universe,
                                     const CheckerBounds& bounds) {
    std::set<UPWord> in_universe(universe.begin(), universe.end());
    auto pool = prefix_pool(universe, bounds.max_prefix_len);
    for (const auto& u : pool) {
        UPWord uw = power(u);
        if (!in_universe.count(uw)) continue;
        for (const auto& alpha : universe) {
            UPWord ua = prepend(u, alpha);
            if (!in_universe.count(ua)) continue;
            if (p(alpha, ua) && p(uw, alpha)) {
                std::ostringstream os;
                os << "u = " << fmt_word(u) << ", alpha = " << to_string(alpha)
                   << ": alpha < u alpha yet u^w < alpha";
                return {false, os.str()};
            }
        }
    }
    return {};
}

ConditionVerdict check_A_transitive(const Preference& p, const std::vector<UPWord>& universe,
                                    const CheckerBounds& bounds) {
    auto pool = prefix_pool(universe, bounds.max_prefix_len);
    pool.insert(pool.begin(), Word{});
    for (const auto& alpha : universe)
        for (const auto& beta : universe) {
            if (!p(alpha, beta)) continue;
            for (const auto& u : pool) {
                UPWord ub = prepend(u, beta);
                UPWord ua = prepend(u, alpha);
                for (const auto& gamma : universe)
                    if (p(ub, gamma) && !p(ua, gamma)) {
                        std::ostringstream os;
                        os << "alpha = " << to_string(alpha) << ", beta = " << to_string(beta)
                           << ", u = " << fmt_word(u) << ", gamma = " << to_string(gamma);
                        return {false, os.str()};
                    }
            }
        }
    return {};
}

ConditionVerdict check_alt_subcontinuous(const Preference& p, const std::vector<UPWord>& universe,
                                         const CheckerBounds& bounds) {
    auto pool = prefix_pool(universe, bounds.max_prefix_len);
    for (const auto& alpha : universe)
        for (const auto& beta : universe)
            for (const auto& t : pool) {
                if (!p(alpha, prepend(t, beta))) continue;
                for (const auto& v : pool) {
                    Word tv = t;
                    tv.insert(tv.end(), v.begin(), v.end());
                    if (!p(prepend(v, alpha), beta) && !p(alpha, power(tv))) {
                        std::ostringstream os;
                        os << "alpha = " << to_string(alpha) << ", beta = " << to_string(beta)
                           << ", t = " << fmt_word(t) << ", v = " << fmt_word(v);
                        return {false, os.str()};
                    }
                }
            }
    return {};
}

namespace {

// Is there a valid W-set (no empty word, at most one length-1 word)
// within `pool` such that for every u in W some v in W has
// p(uα, vβ)? Works on the support graph: greatest fixpoint of
// "u is kept iff some kept v supports it", tried once per admissible
// choice of the single length-1 element. Any valid W survives inside
// one of these fixpoints, so the search is complete.
bool exists_wset(const std::vector<Word>& pool,
                 const std::function<bool(const Word&, const Word&)>& supports,
                 std::vector<Word>* found) {
    std::vector<Word> multi, singles;
    for (const auto& u : pool)
        (u.size() == 1 ? singles : multi).push_back(u);

    auto prune = [&](std::vector<Word> cand) {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<Word> kept;
            for (const auto& u : cand) {
                bool supported = false;
                for (const auto& v : cand)
                    if (supports(u, v)) {
                        supported = true;
                        break;
                    }
                if (supported)
                    kept.push_back(u);
                else
                    changed = true;
            }
            cand = std::move(kept);
        }
        return cand;
    };

    std::vector<std::vector<Word>> candidates;
    candidates.push_back(multi);
    for (const auto& s : singles) {
        auto c = multi;
        c.push_back(s);
        candidates.push_back(std::move(c));
    }
    for (auto& c : candidates) {
        auto w = prune(std::move(c));
        if (!w.empty()) {
            if (found) *found = std::move(w);
            return true;
        }
    }
    return false;
}

} // namespace

ConditionVerdict check_gen_E_prefix(const Preference& p, const std::vector<UPWord>& universe,
                                    const CheckerBounds& bounds) {
    auto pool = prefix_pool(universe, bounds.max_prefix_len);
    if (pool.size() > bounds.wset_pool_cap)
        throw Error("gen-E-prefix W pool too large (WSetExplosion)");
    for (const auto& alpha : universe)
        for (const auto& beta : universe) {
            if (p(alpha, beta)) continue;
            // Restrict the pool to prefixes that can be supported at all.
            std::vector<Word> active;
            for (const auto& u : pool) {
                UPWord ua = prepend(u, alpha);
                for (const auto& v : pool)
                    if (p(ua, prepend(v, beta))) {
                        active.push_back(u);
                        break;
                    }
            }
            std::vector<Word> wset;
            auto supports = [&](const Word& u, const Word& v) {
                return p(prepend(u, alpha), prepend(v, beta));
            };
            if (exists_wset(active, supports, &wset)) {
                std::ostringstream os;
                os << "W = {";
                for (std::size_t i = 0; i < wset.size(); ++i)
                    os << (i ? ", " : "") << fmt_word(wset[i]);
                os << "}, alpha = " << to_string(alpha) << ", beta = " << to_string(beta)
                   << ": W alpha < W beta but not alpha < beta";
                return {false, os.str()};
            }
        }
    return {};
}

SufficientConditionReport check_sufficient_condition(const Preference& p,
                                                     const std::vector<UPWord>& universe,
                                                     const CheckerBounds& bounds) {
    SufficientConditionReport rep;
    rep.strict_weak_order = check_strict_weak_order(restrict_to_universe(p, universe));
    rep.e_prefix = check_E_prefix(p, universe, bounds);
    rep.subcontinuous = check_subcontinuous(p, universe, bounds);
    rep.pass = rep.strict_weak_order.ok && rep.e_prefix.pass && rep.subcontinuous.pass;
    return rep;
}

FiniteRelation restrict_to_universe(const Preference& p, const std::vector<UPWord>& universe) {
    FiniteRelation r(universe.size());
    for (std::size_t i = 0; i < universe.size(); ++i)
        for (std::size_t j = 0; j < universe.size(); ++j)
            if (p(universe[i], universe[j])) r.add(i, j);
    return r;
}

} // namespace daleq
