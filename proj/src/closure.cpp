#include "daleq/closure.hpp"

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

} // namespace

Universe Universe::from_words(std::vector<UPWord> words, std::size_t prefix_bound) {
    std::set<UPWord> closed(words.begin(), words.end());
    // Close under single-letter drops; each word has finitely many
    // distinct suffixes (prefix drops plus period rotations).
    std::vector<UPWord> todo(closed.begin(), closed.end());
    while (!todo.empty()) {
        UPWord w = todo.back();
        todo.pop_back();
        UPWord d = w.drop(1);
        if (closed.insert(d).second) todo.push_back(d);
    }
    Universe u;
    u.words.assign(closed.begin(), closed.end());
    u.prefixes = prefix_pool(u.words, prefix_bound);
    return u;
}

Universe Universe::from_dalograph(const Dalograph& g, std::size_t prefix_bound,
                                  std::size_t path_budget) {
    std::vector<UPWord> words;
    for (const auto& n : g.nodes()) {
        auto ws = eligible_sequences(g, n, path_budget);
        words.insert(words.end(), ws.begin(), ws.end());
    }
    return from_words(std::move(words), prefix_bound);
}

std::optional<std::size_t> Universe::index_of(const UPWord& w) const {
    auto it = std::lower_bound(words.begin(), words.end(), w);
    if (it == words.end() || !(*it == w)) return std::nullopt;
    return static_cast<std::size_t>(it - words.begin());
}

bool DerivedRelation::has_words(const UPWord& a, const UPWord& b) const {
    auto i = universe_->index_of(a);
    auto j = universe_->index_of(b);
    return i && j && has(*i, *j);
}

std::optional<std::size_t> DerivedRelation::find(std::size_t a, std::size_t b) const {
    auto it = index_.find({a, b});
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::pair<const UPWord&, const UPWord&> DerivedRelation::words_of(std::size_t i) const {
    return {universe_->words[pairs_[i].first], universe_->words[pairs_[i].second]};
}

bool DerivedRelation::add(std::size_t a, std::size_t b, RuleStep step) {
    if (index_.count({a, b})) return false;
    index_[{a, b}] = pairs_.size();
    pairs_.emplace_back(a, b);
    steps_.push_back(std::move(step));
    return true;
}

std::optional<std::size_t> DerivedRelation::reflexive_pair() const {
    for (std::size_t i = 0; i < pairs_.size(); ++i)
        if (pairs_[i].first == pairs_[i].second) return i;
    return std::nullopt;
}

namespace {

const char* rule_name(RuleKind k) {
    switch (k) {
        case RuleKind::Base: return "base";
        case RuleKind::EPrefix: return "e-prefix";
        case RuleKind::Transitive: return "transitive";
        case RuleKind::ATransitive: return "a-transitive";
        case RuleKind::GenEPrefix: return "gen-e-prefix";
    }
    return "?";
}

void print_derivation(const DerivedRelation& r, std::size_t i, std::ostream& os, int depth) {
    auto [a, b] = r.words_of(i);
    const RuleStep& s = r.step(i);
    for (int d = 0; d < depth; ++d) os << "  ";
    os << to_string(a) << " < " << to_string(b) << "   [" << rule_name(s.kind);
    if (!s.context.empty()) os << " u=" << fmt_word(s.context);
    if (!s.wset.empty()) {
        os << " W={";
        for (std::size_t k = 0; k < s.wset.size(); ++k)
            os << (k ? ", " : "") << fmt_word(s.wset[k]);
        os << '}';
    }
    os << "]\n";
    for (std::size_t prem : s.premises) print_derivation(r, prem, os, depth + 1);
}

} // namespace

std::string DerivedRelation::derivation_text(std::size_t pair_index) const {
    std::ostringstream os;
    print_derivation(*this, pair_index, os, 0);
    return os.str();
}

namespace {

// Greatest-fixpoint search for a valid W-set deriving (alpha, beta):
// keep prefixes u for which some kept v has (uα, vβ) already derived;
// tried once per admissible choice of the single length-1 element.
struct WsetHit {
    std::vector<Word> wset;
    std::vector<std::size_t> premises; // one supporting pair per W element
};

std::optional<WsetHit> find_wset(const DerivedRelation& r, const Universe& u,
                                 std::size_t alpha, std::size_t beta) {
    struct Cand {
        const Word* prefix;
        std::size_t lifted; // universe index of prefix·alpha
        std::vector<std::pair<std::size_t, std::size_t>> supports; // (v-candidate, pair id)
    };

    // Prefixes whose lift of alpha is in the universe and is the left
    // side of at least one derived pair with a lifted beta.
    std::vector<Cand> cands;
    std::vector<std::optional<std::size_t>> lifted_beta;
    const UPWord& wa = u.words[alpha];
    const UPWord& wb = u.words[beta];
    for (const auto& pre : u.prefixes) {
        auto ib = u.index_of(prepend(pre, wb));
        lifted_beta.push_back(ib);
    }
    for (std::size_t pi = 0; pi < u.prefixes.size(); ++pi) {
        auto ia = u.index_of(prepend(u.prefixes[pi], wa));
        if (!ia) continue;
        Cand c{&u.prefixes[pi], *ia, {}};
        for (std::size_t vj = 0; vj < u.prefixes.size(); ++vj) {
            if (!lifted_beta[vj]) continue;
            if (auto pid = r.find(*ia, *lifted_beta[vj])) c.supports.emplace_back(vj, *pid);
        }
        if (!c.supports.empty()) cands.push_back(std::move(c));
    }
    if (cands.empty()) return std::nullopt;

    auto try_fixpoint = [&](std::vector<std::size_t> live) -> std::optional<WsetHit> {
        std::set<std::size_t> live_prefixes;
        for (std::size_t ci : live)
            live_prefixes.insert(static_cast<std::size_t>(cands[ci].prefix - u.prefixes.data()));
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<std::size_t> kept;
            std::set<std::size_t> kept_prefixes;
            for (std::size_t ci : live) {
                bool ok = false;
                for (auto [vj, _] : cands[ci].supports)
                    if (live_prefixes.count(vj)) {
                        ok = true;
                        break;
                    }
                if (ok) {
                    kept.push_back(ci);
                    kept_prefixes.insert(
                        static_cast<std::size_t>(cands[ci].prefix - u.prefixes.data()));
                } else {
                    changed = true;
                }
            }
            live = std::move(kept);
            live_prefixes = std::move(kept_prefixes);
        }
        if (live.empty()) return std::nullopt;
        WsetHit hit;
        for (std::size_t ci : live) {
            hit.wset.push_back(*cands[ci].prefix);
            for (auto [vj, pid] : cands[ci].supports)
                if (live_prefixes.count(vj)) {
                    hit.premises.push_back(pid);
                    break;
                }
        }
        return hit;
    };

    std::vector<std::size_t> multi, singles;
    for (std::size_t ci = 0; ci < cands.size(); ++ci)
        (cands[ci].prefix->size() == 1 ? singles : multi).push_back(ci);

    if (auto hit = try_fixpoint(multi)) return hit;
    for (std::size_t s : singles) {
        auto live = multi;
        live.push_back(s);
        if (auto hit = try_fixpoint(live)) return hit;
    }
    return std::nullopt;
}

} // namespace

DerivedRelation close_with_rules(const BasePairs& base, const Universe& u, const RuleSet& rules,
                                 const ClosureBounds& bounds) {
    if (rules.gen_e_prefix && u.prefixes.size() > bounds.wset_pool_cap)
        throw WSetExplosionError();

    DerivedRelation r(u);
    for (const auto& [a, b] : base) {
        auto i = u.index_of(a);
        auto j = u.index_of(b);
        if (i && j) r.add(*i, *j, {RuleKind::Base, {}, {}, {}});
    }

    bool changed = true;
    while (changed) {
        changed = false;

        // Pairs may be appended while we scan; indices stay valid.
        for (std::size_t pi = 0; pi < r.size(); ++pi) {
            auto [a, b] = r.pairs()[pi];
            const UPWord& wa = u.words[a];
            const UPWord& wb = u.words[b];

            if (rules.e_prefix) {
                // uα < uβ ⇒ α < β
                for (const auto& pre : u.prefixes) {
                    auto sa = strip_prefix(pre, wa);
                    auto sb = strip_prefix(pre, wb);
                    if (!sa || !sb) continue;
                    auto ia = u.index_of(*sa);
                    auto ib = u.index_of(*sb);
                    if (ia && ib)
                        changed |= r.add(*ia, *ib, {RuleKind::EPrefix, {pi}, pre, {}});
                }
            }

            if (rules.transitive) {
                for (std::size_t qi = 0; qi < r.size(); ++qi) {
                    auto [c, d] = r.pairs()[qi];
                    if (b == c) changed |= r.add(a, d, {RuleKind::Transitive, {pi, qi}, {}, {}});
                    if (d == a) changed |= r.add(c, b, {RuleKind::Transitive, {qi, pi}, {}, {}});
                }
            }

            if (rules.a_transitive) {
                // (α<β, uβ<γ) ⇒ uα<γ; u the empty word recovers
                // transitivity.
                auto fire = [&](std::size_t alpha, std::size_t beta, std::size_t first_prem,
                                const Word& pre) {
                    UPWord ub = prepend(pre, u.words[beta]);
                    auto iub = u.index_of(ub);
                    if (!iub) return;
                    UPWord ua = prepend(pre, u.words[alpha]);
                    auto iua = u.index_of(ua);
                    if (!iua) return;
                    for (std::size_t qi = 0; qi < r.size(); ++qi) {
                        auto [c, d] = r.pairs()[qi];
                        if (c != *iub) continue;
                        changed |=
                            r.add(*iua, d, {RuleKind::ATransitive, {first_prem, qi}, pre, {}});
                    }
                };
                fire(a, b, pi, Word{});
                for (const auto& pre : u.prefixes) fire(a, b, pi, pre);
            }
        }

        if (rules.gen_e_prefix) {
            for (std::size_t alpha = 0; alpha < u.words.size(); ++alpha)
                for (std::size_t beta = 0; beta < u.words.size(); ++beta) {
                    if (r.has(alpha, beta)) continue;
                    if (auto hit = find_wset(r, u, alpha, beta))
                        changed |= r.add(
                            alpha, beta,
                            {RuleKind::GenEPrefix, std::move(hit->premises), {}, std::move(hit->wset)});
                }
        }
    }
    return r;
}

DerivedRelation close_E_prefix(const BasePairs& base, const Universe& u) {
    return close_with_rules(base, u, {.e_prefix = true});
}

DerivedRelation close_transitive(const BasePairs& base, const Universe& u) {
    return close_with_rules(base, u, {.transitive = true});
}

DerivedRelation close_A_transitive(const BasePairs& base, const Universe& u) {
    return close_with_rules(base, u, {.a_transitive = true});
}

DerivedRelation close_gen_E_prefix(const BasePairs& base, const Universe& u,
                                   const ClosureBounds& bounds) {
    return close_with_rules(base, u, {.gen_e_prefix = true}, bounds);
}

DerivedRelation close_combination(const BasePairs& base, const Universe& u,
                                  const ClosureBounds& bounds) {
    return close_with_rules(base, u, {.a_transitive = true, .gen_e_prefix = true}, bounds);
}

BasePairs restrict_preference(const Preference& p, const Universe& u) {
    BasePairs base;
    for (const auto& a : u.words)
        for (const auto& b : u.words)
            if (p(a, b)) base.insert({a, b});
    return base;
}

NecessaryConditionReport check_necessary_condition(const Preference& p, const Universe& u,
                                                   const ClosureBounds& bounds) {
    auto derived = close_combination(restrict_preference(p, u), u, bounds);
    NecessaryConditionReport rep;
    rep.derived_pairs = derived.size();
    if (auto refl = derived.reflexive_pair()) {
        rep.violated = true;
        rep.derivation = derived.derivation_text(*refl);
    }
    return rep;
}

ExperimentalClosure close_experimental(const BasePairs& base, const Universe& u,
                                       std::size_t set_cap, std::size_t pair_cap) {
    ExperimentalClosure out;
    std::set<SetPair> seen;

    auto fmt_set = [&](const std::vector<std::size_t>& s) {
        std::string t = "{";
        for (std::size_t i = 0; i < s.size(); ++i)
            t += (i ? ", " : "") + to_string(u.words[s[i]]);
        return t + "}";
    };
    auto add = [&](SetPair p, const std::string& why) {
        if (p.left.empty() || p.right.empty()) return false;
        if (p.left.size() > set_cap || p.right.size() > set_cap) return false;
        if (out.derived.size() >= pair_cap) return false;
        if (!seen.insert(p).second) return false;
        out.traces.push_back(fmt_set(p.left) + (p.strong ? " <<ll " : " <l ") + fmt_set(p.right) +
                             "   [" + why + "]");
        out.derived.push_back(std::move(p));
        return true;
    };
    auto sorted_set = [](std::vector<std::size_t> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    };

    // inject the base as weak singleton pairs
    for (const auto& [a, b] : base) {
        auto i = u.index_of(a);
        auto j = u.index_of(b);
        if (i && j) add({false, {*i}, {*j}}, "base");
    }

    // pre-resolve (uv)^w for every ordered prefix pair
    std::map<std::pair<std::size_t, std::size_t>, std::optional<std::size_t>> uv_power;
    for (std::size_t ui = 0; ui < u.prefixes.size(); ++ui)
        for (std::size_t vi = 0; vi < u.prefixes.size(); ++vi) {
            Word uv = u.prefixes[ui];
            uv.insert(uv.end(), u.prefixes[vi].begin(), u.prefixes[vi].end());
            uv_power[{ui, vi}] = u.index_of(UPWord({}, uv));
        }

    bool changed = true;
    while (changed) {
        changed = false;
        // Snapshot to iterate while appending.
        for (std::size_t pi = 0; pi < out.derived.size(); ++pi) {
            SetPair p = out.derived[pi];

            // weak-to-strong step: a <l v b  with  (uv)^w <l g  gives
            // {ua} <<ll {b, g}
            if (!p.strong && p.left.size() == 1 && p.right.size() == 1) {
                std::size_t alpha = p.left[0];
                const UPWord& rhs = u.words[p.right[0]];
                for (std::size_t vi = 0; vi < u.prefixes.size(); ++vi) {
                    auto beta = strip_prefix(u.prefixes[vi], rhs);
                    if (!beta) continue;
                    auto ib = u.index_of(*beta);
                    if (!ib) continue;
                    for (std::size_t ui = 0; ui < u.prefixes.size(); ++ui) {
                        auto pow = uv_power.at({ui, vi});
                        if (!pow) continue;
                        auto iua = u.index_of(prepend(u.prefixes[ui], u.words[alpha]));
                        if (!iua) continue;
                        for (std::size_t qi = 0; qi < out.derived.size(); ++qi) {
                            const SetPair& q = out.derived[qi];
                            if (q.strong || q.left != std::vector<std::size_t>{*pow}) continue;
                            if (q.right.size() != 1) continue;
                            changed |= add({true, {*iua}, sorted_set({*ib, q.right[0]})},
                                           "pull-forward");
                        }
                    }
                }
            }

            // strong singleton collapses back to weak
            if (p.strong && p.left.size() == 1 && p.right.size() == 1)
                changed |= add({false, p.left, p.right}, "strong-to-weak");

            // strong transitivity
            if (p.strong)
                for (std::size_t qi = 0; qi < out.derived.size(); ++qi) {
                    const SetPair& q = out.derived[qi];
                    if (!q.strong) continue;
                    if (p.right == q.left) changed |= add({true, p.left, q.right}, "ll-chain");
                    if (q.right == p.left) changed |= add({true, q.left, p.right}, "ll-chain");
                }

            // weak pairs lift by a shared extra word
            if (!p.strong && p.left.size() < set_cap && p.right.size() < set_cap)
                for (std::size_t w = 0; w < u.words.size(); ++w) {
                    auto left = sorted_set([&] {
                        auto v = p.left;
                        v.push_back(w);
                        return v;
                    }());
                    auto right = sorted_set([&] {
                        auto v = p.right;
                        v.push_back(w);
                        return v;
                    }());
                    if (left != p.left || right != p.right)
                        changed |= add({false, left, right}, "shared-lift");
                }

            // strong pairs drop a shared word back to a weak pair
            if (p.strong)
                for (std::size_t w : p.left)
                    if (std::find(p.right.begin(), p.right.end(), w) != p.right.end()) {
                        std::vector<std::size_t> left, right;
                        for (std::size_t x : p.left)
                            if (x != w) left.push_back(x);
                        for (std::size_t x : p.right)
                            if (x != w) right.push_back(x);
                        changed |= add({false, left, right}, "shared-drop");
                    }
        }
    }
    return out;
}

bool replay_provenance(const DerivedRelation& r) {
    const Universe& u = r.universe();
    for (std::size_t i = 0; i < r.size(); ++i) {
        auto [a, b] = r.pairs()[i];
        const RuleStep& s = r.step(i);
        for (std::size_t prem : s.premises)
            if (prem >= i) return false; // premises must be earlier
        switch (s.kind) {
            case RuleKind::Base:
                if (!s.premises.empty()) return false;
                break;
            case RuleKind::EPrefix: {
                if (s.premises.size() != 1) return false;
                auto [pa, pb] = r.pairs()[s.premises[0]];
                if (!(prepend(s.context, u.words[a]) == u.words[pa])) return false;
                if (!(prepend(s.context, u.words[b]) == u.words[pb])) return false;
                break;
            }
            case RuleKind::Transitive: {
                if (s.premises.size() != 2) return false;
                auto [pa, pb] = r.pairs()[s.premises[0]];
                auto [qa, qb] = r.pairs()[s.premises[1]];
                if (pa != a || pb != qa || qb != b) return false;
                break;
            }
            case RuleKind::ATransitive: {
                if (s.premises.size() != 2) return false;
                auto [alpha, beta] = r.pairs()[s.premises[0]];
                auto [ubeta, gamma] = r.pairs()[s.premises[1]];
                if (!(prepend(s.context, u.words[beta]) == u.words[ubeta])) return false;
                if (!(prepend(s.context, u.words[alpha]) == u.words[a])) return false;
                if (gamma != b) return false;
                break;
            }
            case RuleKind::GenEPrefix: {
                if (s.wset.empty() || s.premises.size() != s.wset.size()) return false;
                std::size_t singles = 0;
                for (const auto& w : s.wset) {
                    if (w.empty()) return false;
                    if (w.size() == 1) ++singles;
                }
                if (singles > 1) return false;
                std::set<Word> in_wset(s.wset.begin(), s.wset.end());
                for (std::size_t k = 0; k < s.wset.size(); ++k) {
                    auto [pa, pb] = r.pairs()[s.premises[k]];
                    // pa must be wset[k]·a and pb must be v·b for some v in W.
                    if (!(prepend(s.wset[k], u.words[a]) == u.words[pa])) return false;
                    bool v_ok = false;
                    for (const auto& v : in_wset)
                        if (prepend(v, u.words[b]) == u.words[pb]) {
                            v_ok = true;
                            break;
                        }
                    if (!v_ok) return false;
                }
                break;
            }
        }
    }
    return true;
}

} // namespace daleq
