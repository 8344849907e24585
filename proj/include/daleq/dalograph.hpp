#pragma once

#include "daleq/upword.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace daleq {

using NodeId = std::string;

struct ZeroOutdegreeError : Error {
    explicit ZeroOutdegreeError(const NodeId& n) : Error("node has outdegree zero: " + n) {}
};

struct DuplicateArcError : Error {
    DuplicateArcError(const NodeId& a, const NodeId& b)
        : Error("duplicate arc " + a + " -> " + b) {}
};

struct MissingLabelError : Error {
    explicit MissingLabelError(const NodeId& n) : Error("node has no label: " + n) {}
};

struct DummyLabelClashError : Error {
    explicit DummyLabelClashError(const Label& l) : Error("dummy label already used: " + l) {}
};

struct PathBudgetExceededError : Error {
    PathBudgetExceededError() : Error("path enumeration budget exceeded") {}
};

/// An arbitrary arc-labelled digraph; nodes may have outdegree zero and
/// the embeddings below repair that. At most one arc per ordered pair.
struct RawDigraph {
    std::set<NodeId> nodes;
    std::map<std::pair<NodeId, NodeId>, Label> arcs;

    void add_node(const NodeId& n) { nodes.insert(n); }
    void add_arc(const NodeId& from, const NodeId& to, const Label& label);
};

/// Finite arc-labelled digraph in which every node has outdegree >= 1.
/// Node iteration order is sorted, so every enumeration downstream is
/// deterministic.
class Dalograph {
public:
    static Dalograph validate(const RawDigraph& raw);

    const std::map<NodeId, std::map<NodeId, Label>>& adjacency() const { return out_; }
    const std::map<NodeId, Label>& out(const NodeId& n) const;
    bool has_node(const NodeId& n) const { return out_.count(n) != 0; }
    std::optional<Label> arc_label(const NodeId& from, const NodeId& to) const;
    std::vector<NodeId> nodes() const;
    std::size_t arc_count() const;

    RawDigraph to_raw() const;

private:
    std::map<NodeId, std::map<NodeId, Label>> out_;
};

/// A finite node sequence along arcs that stops at its first
/// self-intersection: all nodes are distinct except possibly the last,
/// and a walk whose last node repeats an earlier one is looping.
class Walk {
public:
    Walk(const Dalograph& g, NodeId start);
    Walk(const Dalograph& g, std::vector<NodeId> nodes);

    const std::vector<NodeId>& nodes() const { return nodes_; }
    const NodeId& last() const { return nodes_.back(); }
    std::size_t size() const { return nodes_.size(); }
    bool looping() const;
    /// Index of the first occurrence of the last node (loop entry), only
    /// meaningful for looping walks.
    std::size_t loop_start() const;

    bool can_extend(const NodeId& next) const;
    Walk extended(const NodeId& next) const;

    const Dalograph& graph() const { return *g_; }

private:
    const Dalograph* g_;
    std::vector<NodeId> nodes_;
};

/// The infinite continuation entry·(cycle)^ω determined by a looping walk.
struct Path {
    std::vector<NodeId> entry;
    std::vector<NodeId> cycle; // nonempty; cycle.front() is the loop node

    static Path from_looping_walk(const Walk& w);

    const NodeId& node_at(std::size_t i) const;
    /// Number of distinct nodes along the path (entry plus one lap).
    std::size_t distinct_size() const { return entry.size() + cycle.size(); }
    /// The path as seen from its i-th node.
    Path suffix(std::size_t i) const;

    bool operator==(const Path&) const = default;
    auto operator<=>(const Path&) const = default;
};

std::string to_string(const Path& p);

/// One chosen outgoing arc per node; induces one path from every node.
struct Strategy {
    std::map<NodeId, NodeId> choice;

    static Strategy validate(const Dalograph& g, std::map<NodeId, NodeId> choice);

    bool operator==(const Strategy&) const = default;
};

/// The label word read along a path.
UPWord induced_sequence(const Dalograph& g, const Path& p);

/// All paths xΓ extending the walk x, in lexicographic node-sequence
/// order. The returned paths start at x.front(); the continuation proper
/// is the suffix from position x.size()-1. Throws PathBudgetExceededError
/// when more than `budget` paths would be produced.
std::vector<Path> continuations(const Walk& x, std::size_t budget = 100000);

/// Sorted set of sequences induced by the paths starting at o.
std::vector<UPWord> eligible_sequences(const Dalograph& g, const NodeId& o,
                                       std::size_t budget = 100000);

Path induced_path(const Dalograph& g, const Strategy& s, const NodeId& o);

/// Node-labelled digraphs embed by moving each node's label onto all of
/// its outgoing arcs.
Dalograph embed_node_labelled(const RawDigraph& g, const std::map<NodeId, Label>& labels);

/// Repairs zero-outdegree nodes with a dl-labelled dummy sink; with
/// all_nodes set, every original node gets a dl-arc to the dummy (the
/// finite-path embedding). A graph that is already a dalograph is
/// returned unchanged unless all_nodes is set.
Dalograph embed_with_sink(const RawDigraph& g, const Label& dl, bool all_nodes = false,
                          const NodeId& dummy = "__sink");

/// Graphviz output; strategy choices are drawn with doubled lines.
std::string to_dot(const Dalograph& g, const Strategy* s = nullptr);

} // namespace daleq
