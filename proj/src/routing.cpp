#include "daleq/routing.hpp"

#include <algorithm>
#include <limits>
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

std::vector<Word> finite_prefix_pool(const std::vector<Word>& sample, std::size_t max_len) {
    std::set<Word> pool;
    for (const auto& w : sample) {
        Word u;
        for (std::size_t i = 0; i < w.size() && i < max_len; ++i) {
            u.push_back(w[i]);
            pool.insert(u);
        }
    }
    return {pool.begin(), pool.end()};
}

Word concat(const Word& u, const Word& v) {
    Word w = u;
    w.insert(w.end(), v.begin(), v.end());
    return w;
}

bool is_word_prefix(const Word& u, const Word& w) {
    return u.size() <= w.size() && std::equal(u.begin(), u.end(), w.begin());
}

} // namespace

RoutingProblem RoutingProblem::validate(RawDigraph graph, NodeId target) {
    if (!graph.nodes.count(target)) throw InvalidTargetError("not a node: " + target);
    std::map<NodeId, std::vector<NodeId>> rev;
    for (const auto& [ends, _] : graph.arcs) {
        if (ends.first == target) throw InvalidTargetError("target has an outgoing arc");
        rev[ends.second].push_back(ends.first);
    }
    // Reverse search from the target must reach every node.
    std::set<NodeId> seen{target};
    std::vector<NodeId> todo{target};
    while (!todo.empty()) {
        NodeId n = todo.back();
        todo.pop_back();
        for (const auto& m : rev[n])
            if (seen.insert(m).second) todo.push_back(m);
    }
    for (const auto& n : graph.nodes)
        if (!seen.count(n)) throw InvalidTargetError("target unreachable from " + n);
    return {std::move(graph), std::move(target)};
}

RoutingPolicy minhop_policy() {
    return {"minhop", [](const Word& a, const Word& b) { return a.size() > b.size(); }};
}

RoutingPolicy widest_policy(LabelOrder order) {
    // The empty route constrains nothing, so its bottleneck is unbounded.
    auto bottleneck = [](const LabelOrder& o, const Word& w) {
        int bn = std::numeric_limits<int>::max();
        for (const auto& l : w) bn = std::min(bn, o.rank_of(l));
        return bn;
    };
    return {"widest", [order = std::move(order), bottleneck](const Word& a, const Word& b) {
                return bottleneck(order, a) < bottleneck(order, b);
            }};
}

RoutingPolicy table_policy(std::set<std::pair<Word, Word>> pairs) {
    return {"table", [pairs = std::move(pairs)](const Word& a, const Word& b) {
                return pairs.count({a, b}) != 0;
            }};
}

EmbeddedRouting embed(const RoutingProblem& rp, const RoutingPolicy& policy, const Label& dl,
                      const NodeId& dummy) {
    for (const auto& [_, label] : rp.graph.arcs)
        if (label == dl) throw DummyLabelClashError(dl);
    if (rp.graph.nodes.count(dummy)) throw Error("dummy node id already used: " + dummy);

    RawDigraph raw = rp.graph;
    raw.add_arc(rp.target, dummy, dl);
    raw.add_arc(dummy, dummy, dl);
    Dalograph g = Dalograph::validate(raw);

    // A word is dl-terminated iff its period is exactly dl^ω and dl never
    // occurs earlier; in the embedded graph every eligible word is either
    // that or dl-free.
    auto dl_route = [dl](const UPWord& w) -> std::optional<Word> {
        if (w.period() != Word{dl}) return std::nullopt;
        for (const auto& l : w.prefix())
            if (l == dl) return std::nullopt;
        return w.prefix();
    };
    auto pure = [dl](const UPWord& w) {
        for (const auto& l : w.prefix())
            if (l == dl) return false;
        for (const auto& l : w.period())
            if (l == dl) return false;
        return true;
    };
    Preference pref{"routing[" + policy.name + "]",
                    [policy, dl_route, pure](const UPWord& a, const UPWord& b) {
                        auto rb = dl_route(b);
                        if (!rb) return false;
                        if (auto ra = dl_route(a)) return policy(*ra, *rb);
                        return pure(a);
                    }};
    return {std::move(g), std::move(pref), dummy, dl};
}

std::vector<Word> route_words(const RoutingProblem& rp, const NodeId& o) {
    std::map<NodeId, std::map<NodeId, Label>> out;
    for (const auto& [ends, label] : rp.graph.arcs) out[ends.first][ends.second] = label;

    std::set<Word> words;
    std::vector<NodeId> stack{o};
    Word labels;
    std::set<NodeId> visited{o};

    std::function<void(const NodeId&)> dfs = [&](const NodeId& n) {
        if (n == rp.target) {
            words.insert(labels);
            return;
        }
        for (const auto& [m, l] : out[n]) {
            if (visited.count(m)) continue;
            visited.insert(m);
            labels.push_back(l);
            dfs(m);
            labels.pop_back();
            visited.erase(m);
        }
    };
    dfs(o);
    return {words.begin(), words.end()};
}

namespace {

// Follow a routing strategy from o; empty when it never reaches the
// target.
std::optional<Word> induced_route(const RoutingProblem& rp,
                                  const std::map<NodeId, NodeId>& choices, const NodeId& o) {
    Word w;
    NodeId n = o;
    std::set<NodeId> seen;
    while (n != rp.target) {
        if (!seen.insert(n).second) return std::nullopt;
        auto it = choices.find(n);
        if (it == choices.end()) return std::nullopt;
        w.push_back(rp.graph.arcs.at({n, it->second}));
        n = it->second;
    }
    return w;
}

bool routing_verified(const RoutingProblem& rp, const RoutingPolicy& policy,
                      const std::map<NodeId, NodeId>& choices,
                      std::vector<std::string>* failures) {
    bool ok = true;
    for (const auto& n : rp.graph.nodes) {
        if (n == rp.target) continue;
        auto route = induced_route(rp, choices, n);
        if (!route) {
            ok = false;
            if (failures) failures->push_back("route from " + n + " misses the target");
            continue;
        }
        for (const auto& alt : route_words(rp, n))
            if (policy(*route, alt)) {
                ok = false;
                if (failures)
                    failures->push_back("route " + fmt_word(*route) + " from " + n +
                                        " beaten by " + fmt_word(alt));
                break;
            }
    }
    return ok;
}

} // namespace

std::vector<std::map<NodeId, NodeId>> routing_brute_force(const RoutingProblem& rp,
                                                          const RoutingPolicy& policy,
                                                          std::size_t cap) {
    std::vector<NodeId> nodes;
    std::vector<std::vector<NodeId>> succs;
    std::map<NodeId, std::vector<NodeId>> out;
    for (const auto& [ends, _] : rp.graph.arcs) out[ends.first].push_back(ends.second);
    std::size_t total = 1;
    for (const auto& n : rp.graph.nodes) {
        if (n == rp.target) continue;
        nodes.push_back(n);
        auto& ss = out[n];
        std::sort(ss.begin(), ss.end());
        succs.push_back(ss);
        if (total > cap / std::max<std::size_t>(ss.size(), 1)) throw StrategySpaceTooLargeError();
        total *= ss.size();
    }

    std::vector<std::map<NodeId, NodeId>> found;
    std::vector<std::size_t> pick(nodes.size(), 0);
    if (nodes.empty()) return found;
    for (;;) {
        std::map<NodeId, NodeId> choices;
        for (std::size_t i = 0; i < nodes.size(); ++i) choices[nodes[i]] = succs[i][pick[i]];
        if (routing_verified(rp, policy, choices, nullptr)) found.push_back(std::move(choices));

        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == succs[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    return found;
}

RoutingReport solve_routing(const RoutingProblem& rp, const RoutingPolicy& policy,
                            const Label& dl) {
    auto emb = embed(rp, policy, dl);

    RoutingReport rep;
    try {
        Context ctx{emb.dalograph, emb.preference};
        auto eq = construct_equilibrium(ctx);
        if (eq.strategy) {
            std::map<NodeId, NodeId> choices = eq.strategy->choice;
            choices.erase(emb.dummy);
            choices.erase(rp.target);
            rep.verified = routing_verified(rp, policy, choices, &rep.failures);
            rep.choices = std::move(choices);
        }
    } catch (const CyclicPreferenceError& e) {
        rep.failures.push_back(e.what());
    }

    if (!rep.verified) {
        auto all = routing_brute_force(rp, policy);
        if (!all.empty()) {
            rep.choices = all.front();
            rep.verified = true;
            rep.failures.push_back("construction failed; exhaustive search found one");
        } else {
            rep.no_equilibrium = true;
        }
    }
    return rep;
}

PolicyReport check_policy_sufficient(const RoutingPolicy& policy, const std::vector<Word>& sample,
                                     std::size_t max_prefix_len) {
    PolicyReport rep;
    auto pool = finite_prefix_pool(sample, max_prefix_len);

    rep.e_prefix = {};
    for (const auto& u : pool) {
        for (const auto& x : sample) {
            if (!is_word_prefix(u, x)) continue;
            Word xs(x.begin() + static_cast<std::ptrdiff_t>(u.size()), x.end());
            for (const auto& y : sample) {
                if (!is_word_prefix(u, y)) continue;
                Word ys(y.begin() + static_cast<std::ptrdiff_t>(u.size()), y.end());
                if (policy(x, y) && !policy(xs, ys)) {
                    rep.e_prefix = {false, "u = " + fmt_word(u) + ", " + fmt_word(x) + " < " +
                                               fmt_word(y) + " but not " + fmt_word(xs) + " < " +
                                               fmt_word(ys)};
                    break;
                }
            }
            if (!rep.e_prefix.pass) break;
        }
        if (!rep.e_prefix.pass) break;
    }

    FiniteRelation rel(sample.size());
    for (std::size_t i = 0; i < sample.size(); ++i)
        for (std::size_t j = 0; j < sample.size(); ++j)
            if (policy(sample[i], sample[j])) rel.add(i, j);
    rep.strict_weak_order = check_strict_weak_order(rel);

    rep.no_gain_by_prefix = {};
    for (const auto& v : sample)
        for (const auto& u : pool)
            if (policy(v, concat(u, v))) {
                rep.no_gain_by_prefix = {false,
                                         "v = " + fmt_word(v) + " < uv with u = " + fmt_word(u)};
                break;
            }

    rep.pass = rep.e_prefix.pass && rep.strict_weak_order.ok && rep.no_gain_by_prefix.pass;
    return rep;
}

namespace {

void add_chain(RawDigraph& raw, const NodeId& from, const NodeId& to, const Word& word,
               const std::string& fresh) {
    if (word.empty()) throw Error("cannot expand an empty route word");
    NodeId cur = from;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        NodeId next = fresh + std::to_string(i);
        raw.add_arc(cur, next, word[i]);
        cur = next;
    }
    raw.add_arc(cur, to, word.back());
}

} // namespace

RoutingProblem non_eprefix_counterexample(const Word& u, const Word& v, const Word& w) {
    if (v.size() <= 1 && w.size() <= 1)
        throw Error("parallel single-letter routes are not representable without parallel arcs");
    RawDigraph raw;
    raw.add_node("t");
    add_chain(raw, "s", "m", u, "u");
    add_chain(raw, "m", "t", v, "v");
    add_chain(raw, "m", "t", w, "w");
    return RoutingProblem::validate(std::move(raw), "t");
}

RoutingProblem prefix_gain_counterexample(const Word& u, const Word& v) {
    RawDigraph raw;
    raw.add_node("t");
    add_chain(raw, "a", "b", u, "u1_");
    add_chain(raw, "b", "a", u, "u2_");
    add_chain(raw, "a", "t", v, "v1_");
    add_chain(raw, "b", "t", v, "v2_");
    return RoutingProblem::validate(std::move(raw), "t");
}

TotalOrderReport check_policy_total_order_iff(const RoutingPolicy& policy,
                                              const std::vector<Word>& sample,
                                              std::size_t max_prefix_len) {
    for (const auto& a : sample)
        for (const auto& b : sample)
            if (!(a == b) && !policy(a, b) && !policy(b, a)) throw NotTotalOnSampleError();

    TotalOrderReport rep;
    rep.total = true;
    auto pool = finite_prefix_pool(sample, max_prefix_len);

    rep.e_prefix = {};
    Word bad_u, bad_v, bad_w;
    for (const auto& u : pool) {
        for (const auto& x : sample) {
            if (!is_word_prefix(u, x)) continue;
            Word v(x.begin() + static_cast<std::ptrdiff_t>(u.size()), x.end());
            if (v.empty()) continue;
            for (const auto& y : sample) {
                if (!is_word_prefix(u, y)) continue;
                Word w(y.begin() + static_cast<std::ptrdiff_t>(u.size()), y.end());
                if (w.empty()) continue;
                if (policy(x, y) && !policy(v, w)) {
                    if (bad_u.empty() || v.size() > 1 || w.size() > 1) {
                        bad_u = u;
                        bad_v = v;
                        bad_w = w;
                    }
                    rep.e_prefix = {false, "u = " + fmt_word(u) + ", v = " + fmt_word(v) +
                                               ", w = " + fmt_word(w)};
                }
            }
        }
    }

    rep.prefix_strictly_worsens = {};
    Word gain_u, gain_v;
    for (const auto& v : sample)
        for (const auto& u : pool)
            if (!policy(concat(u, v), v)) {
                if (gain_u.empty()) {
                    gain_u = u;
                    gain_v = v;
                }
                rep.prefix_strictly_worsens = {
                    false, "uv not worse than v for u = " + fmt_word(u) + ", v = " + fmt_word(v)};
            }

    rep.pass = rep.e_prefix.pass && rep.prefix_strictly_worsens.pass;

    if (!rep.e_prefix.pass && (bad_v.size() > 1 || bad_w.size() > 1)) {
        rep.counterexample = non_eprefix_counterexample(bad_u, bad_v, bad_w);
    } else if (!rep.prefix_strictly_worsens.pass) {
        rep.counterexample = prefix_gain_counterexample(gain_u, gain_v);
    }
    if (rep.counterexample)
        rep.counterexample_equilibria = routing_brute_force(*rep.counterexample, policy).size();
    return rep;
}

} // namespace daleq
