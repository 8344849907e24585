#include "daleq/dalograph.hpp"

#include <algorithm>
#include <sstream>

namespace daleq {

void RawDigraph::add_arc(const NodeId& from, const NodeId& to, const Label& label) {
    if (arcs.count({from, to})) throw DuplicateArcError(from, to);
    nodes.insert(from);
    nodes.insert(to);
    arcs[{from, to}] = label;
}

Dalograph Dalograph::validate(const RawDigraph& raw) {
    Dalograph g;
    for (const auto& n : raw.nodes) g.out_[n];
    for (const auto& [ends, label] : raw.arcs) {
        g.out_[ends.first][ends.second] = label;
        g.out_[ends.second]; // arcs may mention nodes not listed explicitly
    }
    for (const auto& [n, succ] : g.out_)
        if (succ.empty()) throw ZeroOutdegreeError(n);
    return g;
}

const std::map<NodeId, Label>& Dalograph::out(const NodeId& n) const {
    auto it = out_.find(n);
    if (it == out_.end()) throw Error("no such node: " + n);
    return it->second;
}

std::optional<Label> Dalograph::arc_label(const NodeId& from, const NodeId& to) const {
    auto it = out_.find(from);
    if (it == out_.end()) return std::nullopt;
    auto jt = it->second.find(to);
    if (jt == it->second.end()) return std::nullopt;
    return jt->second;
}

std::vector<NodeId> Dalograph::nodes() const {
    std::vector<NodeId> ns;
    ns.reserve(out_.size());
    for (const auto& [n, _] : out_) ns.push_back(n);
    return ns;
}

std::size_t Dalograph::arc_count() const {
    std::size_t c = 0;
    for (const auto& [_, succ] : out_) c += succ.size();
    return c;
}

RawDigraph Dalograph::to_raw() const {
    RawDigraph raw;
    for (const auto& [n, succ] : out_) {
        raw.add_node(n);
        for (const auto& [m, l] : succ) raw.arcs[{n, m}] = l;
    }
    return raw;
}

Walk::Walk(const Dalograph& g, NodeId start) : g_(&g), nodes_{std::move(start)} {
    if (!g.has_node(nodes_.front())) throw Error("walk start not in graph: " + nodes_.front());
}

Walk::Walk(const Dalograph& g, std::vector<NodeId> nodes) : g_(&g), nodes_(std::move(nodes)) {
    if (nodes_.empty()) throw Error("walk must be nonempty");
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
        if (!g.arc_label(nodes_[i], nodes_[i + 1]))
            throw Error("walk uses missing arc " + nodes_[i] + " -> " + nodes_[i + 1]);
        for (std::size_t j = 0; j < i; ++j)
            if (nodes_[j] == nodes_[i])
                throw Error("walk revisits " + nodes_[i] + " before its end");
    }
}

bool Walk::looping() const {
    const NodeId& back = nodes_.back();
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i)
        if (nodes_[i] == back) return true;
    return false;
}

std::size_t Walk::loop_start() const {
    const NodeId& back = nodes_.back();
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i)
        if (nodes_[i] == back) return i;
    throw Error("walk is not looping");
}

bool Walk::can_extend(const NodeId& next) const {
    return !looping() && g_->arc_label(nodes_.back(), next).has_value();
}

Walk Walk::extended(const NodeId& next) const {
    if (!can_extend(next)) throw Error("cannot extend walk with " + next);
    Walk w = *this;
    w.nodes_.push_back(next);
    return w;
}

Path Path::from_looping_walk(const Walk& w) {
    if (!w.looping()) throw Error("path requires a looping walk");
    std::size_t j = w.loop_start();
    const auto& ns = w.nodes();
    Path p;
    p.entry.assign(ns.begin(), ns.begin() + static_cast<std::ptrdiff_t>(j));
    p.cycle.assign(ns.begin() + static_cast<std::ptrdiff_t>(j), ns.end() - 1);
    return p;
}

const NodeId& Path::node_at(std::size_t i) const {
    if (i < entry.size()) return entry[i];
    return cycle[(i - entry.size()) % cycle.size()];
}

Path Path::suffix(std::size_t i) const {
    Path p;
    if (i <= entry.size()) {
        p.entry.assign(entry.begin() + static_cast<std::ptrdiff_t>(i), entry.end());
        p.cycle = cycle;
    } else {
        std::size_t shift = (i - entry.size()) % cycle.size();
        p.cycle.assign(cycle.begin() + static_cast<std::ptrdiff_t>(shift), cycle.end());
        p.cycle.insert(p.cycle.end(), cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(shift));
    }
    return p;
}

std::string to_string(const Path& p) {
    std::ostringstream os;
    for (const auto& n : p.entry) os << n << ' ';
    os << '(';
    for (std::size_t i = 0; i < p.cycle.size(); ++i) os << (i ? " " : "") << p.cycle[i];
    os << ")^w";
    return os.str();
}

Strategy Strategy::validate(const Dalograph& g, std::map<NodeId, NodeId> choice) {
    for (const auto& n : g.nodes()) {
        auto it = choice.find(n);
        if (it == choice.end()) throw Error("strategy misses a choice at " + n);
        if (!g.arc_label(n, it->second))
            throw Error("strategy chooses missing arc " + n + " -> " + it->second);
    }
    return Strategy{std::move(choice)};
}

UPWord induced_sequence(const Dalograph& g, const Path& p) {
    auto label = [&](const NodeId& a, const NodeId& b) {
        auto l = g.arc_label(a, b);
        if (!l) throw Error("path uses missing arc " + a + " -> " + b);
        return *l;
    };
    Word prefix, period;
    for (std::size_t i = 0; i + 1 < p.entry.size(); ++i)
        prefix.push_back(label(p.entry[i], p.entry[i + 1]));
    if (!p.entry.empty()) prefix.push_back(label(p.entry.back(), p.cycle.front()));
    for (std::size_t i = 0; i + 1 < p.cycle.size(); ++i)
        period.push_back(label(p.cycle[i], p.cycle[i + 1]));
    period.push_back(label(p.cycle.back(), p.cycle.front()));
    return UPWord(std::move(prefix), std::move(period));
}

namespace {

void extend_all(const Walk& w, std::vector<Path>& out, std::size_t budget) {
    if (w.looping()) {
        if (out.size() >= budget) throw PathBudgetExceededError();
        out.push_back(Path::from_looping_walk(w));
        return;
    }
    // Successors come out of the sorted adjacency, so the recursion emits
    // paths in lexicographic node-sequence order.
    for (const auto& [next, _] : w.graph().out(w.last()))
        extend_all(w.extended(next), out, budget);
}

} // namespace

std::vector<Path> continuations(const Walk& x, std::size_t budget) {
    std::vector<Path> out;
    extend_all(x, out, budget);
    return out;
}

std::vector<UPWord> eligible_sequences(const Dalograph& g, const NodeId& o, std::size_t budget) {
    std::set<UPWord> words;
    for (const auto& p : continuations(Walk(g, o), budget))
        words.insert(induced_sequence(g, p));
    return {words.begin(), words.end()};
}

Path induced_path(const Dalograph& g, const Strategy& s, const NodeId& o) {
    Walk w(g, o);
    while (!w.looping()) w = w.extended(s.choice.at(w.last()));
    return Path::from_looping_walk(w);
}

Dalograph embed_node_labelled(const RawDigraph& g, const std::map<NodeId, Label>& labels) {
    RawDigraph out;
    out.nodes = g.nodes;
    for (const auto& [ends, _] : g.arcs) {
        auto it = labels.find(ends.first);
        if (it == labels.end() || it->second.empty()) throw MissingLabelError(ends.first);
        out.arcs[ends] = it->second;
    }
    for (const auto& n : g.nodes)
        if (!labels.count(n) || labels.at(n).empty()) throw MissingLabelError(n);
    return Dalograph::validate(out);
}

Dalograph embed_with_sink(const RawDigraph& g, const Label& dl, bool all_nodes,
                          const NodeId& dummy) {
    for (const auto& [_, label] : g.arcs)
        if (label == dl) throw DummyLabelClashError(dl);
    if (g.nodes.count(dummy)) throw Error("dummy node id already used: " + dummy);

    std::set<NodeId> dead;
    for (const auto& n : g.nodes) dead.insert(n);
    for (const auto& [ends, _] : g.arcs) dead.erase(ends.first);

    if (dead.empty() && !all_nodes) return Dalograph::validate(g);

    RawDigraph out = g;
    const auto& entries = all_nodes ? g.nodes : dead;
    for (const auto& n : entries) out.add_arc(n, dummy, dl);
    out.add_arc(dummy, dummy, dl);
    return Dalograph::validate(out);
}

std::string to_dot(const Dalograph& g, const Strategy* s) {
    std::ostringstream os;
    os << "digraph dalograph {\n  node [shape=box];\n";
    for (const auto& [n, succ] : g.adjacency())
        for (const auto& [m, l] : succ) {
            os << "  \"" << n << "\" -> \"" << m << "\" [label=\"" << l << '"';
            if (s && s->choice.count(n) && s->choice.at(n) == m)
                os << ", color=\"black:invis:black\"";
            os << "];\n";
        }
    os << "}\n";
    return os.str();
}

} // namespace daleq
