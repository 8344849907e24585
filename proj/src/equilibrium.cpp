#include "daleq/equilibrium.hpp"

#include <algorithm>
#include <sstream>

namespace daleq {

namespace {

// Word of the path as seen from position i of its node sequence.
UPWord word_from(const Context& ctx, const Path& p, std::size_t i) {
    return induced_sequence(ctx.graph, p.suffix(i));
}

} // namespace

Maximality is_maximal_continuation(const Context& ctx, const Walk& x, const Path& p) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (p.node_at(i) != x.nodes()[i]) throw Error("path does not extend the walk");
    std::size_t at = x.size() - 1;
    UPWord mine = word_from(ctx, p, at);
    for (const auto& q : continuations(x, ctx.path_budget)) {
        if (ctx.pref(mine, word_from(ctx, q, at)))
            return {false, q};
    }
    return {};
}

HereditaryCheck is_semi_hereditary_maximal(const Context& ctx, const Walk& x, const Path& p) {
    Walk w = x;
    for (std::size_t k = 0;; ++k) {
        auto m = is_maximal_continuation(ctx, w, p);
        if (!m) {
            std::ostringstream os;
            os << "not maximal after " << k << " steps; better: " << to_string(*m.better);
            return {false, os.str()};
        }
        if (w.looping()) break;
        w = w.extended(p.node_at(x.size() + k));
    }
    return {};
}

HereditaryCheck is_hereditary_maximal(const Context& ctx, const Path& p) {
    for (std::size_t i = 0; i < p.distinct_size(); ++i) {
        Walk fresh(ctx.graph, p.node_at(i));
        auto m = is_maximal_continuation(ctx, fresh, p.suffix(i));
        if (!m) {
            std::ostringstream os;
            os << "suffix at " << p.node_at(i) << " beaten by " << to_string(*m.better);
            return {false, os.str()};
        }
    }
    return {};
}

Path seek_forward(const Context& ctx, const Walk& x, const Path& p) {
    if (x.looping()) return p;

    std::size_t at = x.size() - 1;
    auto conts = continuations(x, ctx.path_budget);
    std::vector<UPWord> words;
    words.reserve(conts.size());
    for (const auto& q : conts) words.push_back(word_from(ctx, q, at));

    UPWord mine = word_from(ctx, p, at);
    Path next = p;

    bool maximal = std::none_of(words.begin(), words.end(),
                                [&](const UPWord& w) { return ctx.pref(mine, w); });
    if (!maximal) {
        // Switch to a maximal continuation strictly above the current
        // one; continuations come in lexicographic node order, so the
        // first hit is the deterministic choice.
        bool found = false;
        for (std::size_t i = 0; i < conts.size() && !found; ++i) {
            if (!ctx.pref(mine, words[i])) continue;
            bool imax = std::none_of(words.begin(), words.end(), [&](const UPWord& w) {
                return ctx.pref(words[i], w);
            });
            if (imax) {
                next = conts[i];
                found = true;
            }
        }
        if (!found) throw CyclicPreferenceError();
    }
    return seek_forward(ctx, x.extended(next.node_at(x.size())), next);
}

HereditaryMaximalResult find_hereditary_maximal_path(const Context& ctx, const NodeId& o) {
    Walk start(ctx.graph, o);
    // Seed: always follow the least outgoing arc until the walk loops.
    Walk w = start;
    while (!w.looping()) w = w.extended(w.graph().out(w.last()).begin()->first);
    Path seed = Path::from_looping_walk(w);

    Path path = seek_forward(ctx, start, seed);
    auto h = is_hereditary_maximal(ctx, path);
    return {path, h.ok, h.witness};
}

Maximality verify_local(const Context& ctx, const Strategy& s, const NodeId& o) {
    return is_maximal_continuation(ctx, Walk(ctx.graph, o), induced_path(ctx.graph, s, o));
}

EquilibriumReport verify_global(const Context& ctx, const Strategy& s) {
    EquilibriumReport rep;
    rep.strategy = s;
    rep.verified = true;
    for (const auto& o : ctx.graph.nodes()) {
        auto m = verify_local(ctx, s, o);
        if (!m) {
            rep.verified = false;
            rep.failures.emplace_back(o, induced_sequence(ctx.graph, *m.better));
        }
    }
    return rep;
}

EquilibriumReport construct_equilibrium(const Context& ctx) {
    RawDigraph remaining = ctx.graph.to_raw();
    EquilibriumReport rep;

    for (;;) {
        Dalograph g = Dalograph::validate(remaining);
        std::optional<NodeId> branching;
        for (const auto& n : g.nodes())
            if (g.out(n).size() >= 2) {
                branching = n;
                break;
            }
        if (!branching) break;

        Context sub{g, ctx.pref, ctx.path_budget, ctx.strategy_cap};
        auto hm = find_hereditary_maximal_path(sub, *branching);
        if (!hm.hereditary)
            rep.notes.push_back("path from " + *branching + " not hereditary maximal: " +
                                hm.witness);

        // Drop every arc dismissed by the path's choices.
        for (std::size_t i = 0; i < hm.path.distinct_size(); ++i) {
            const NodeId& n = hm.path.node_at(i);
            const NodeId& succ = hm.path.node_at(i + 1);
            for (auto it = remaining.arcs.begin(); it != remaining.arcs.end();)
                if (it->first.first == n && it->first.second != succ)
                    it = remaining.arcs.erase(it);
                else
                    ++it;
        }
    }

    std::map<NodeId, NodeId> choice;
    Dalograph reduced = Dalograph::validate(remaining);
    for (const auto& n : reduced.nodes()) choice[n] = reduced.out(n).begin()->first;

    auto verdict = verify_global(ctx, Strategy::validate(ctx.graph, std::move(choice)));
    verdict.notes = std::move(rep.notes);
    return verdict;
}

std::size_t strategy_space_size(const Dalograph& g) {
    std::size_t total = 1;
    for (const auto& n : g.nodes()) {
        std::size_t d = g.out(n).size();
        if (total > (static_cast<std::size_t>(-1) / d)) return static_cast<std::size_t>(-1);
        total *= d;
    }
    return total;
}

std::vector<Strategy> brute_force_equilibria(const Context& ctx) {
    const auto nodes = ctx.graph.nodes();
    if (strategy_space_size(ctx.graph) > ctx.strategy_cap) throw StrategySpaceTooLargeError();

    // Precompute each node's eligible sequences once; a strategy is a
    // global equilibrium iff no node's induced word is below one of them.
    std::map<NodeId, std::vector<UPWord>> eligible;
    for (const auto& n : nodes) eligible[n] = eligible_sequences(ctx.graph, n, ctx.path_budget);

    std::vector<std::vector<NodeId>> succs;
    for (const auto& n : nodes) {
        std::vector<NodeId> ss;
        for (const auto& [m, _] : ctx.graph.out(n)) ss.push_back(m);
        succs.push_back(std::move(ss));
    }

    std::vector<Strategy> found;
    std::vector<std::size_t> pick(nodes.size(), 0);
    for (;;) {
        Strategy s;
        for (std::size_t i = 0; i < nodes.size(); ++i) s.choice[nodes[i]] = succs[i][pick[i]];

        bool good = true;
        for (const auto& n : nodes) {
            UPWord w = induced_sequence(ctx.graph, induced_path(ctx.graph, s, n));
            for (const auto& alt : eligible.at(n))
                if (ctx.pref(w, alt)) {
                    good = false;
                    break;
                }
            if (!good) break;
        }
        if (good) found.push_back(std::move(s));

        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == succs[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    return found;
}

} // namespace daleq
