#pragma once

#include "daleq/dalograph.hpp"
#include "daleq/preference.hpp"

#include <optional>
#include <string>
#include <vector>

namespace daleq {

struct CyclicPreferenceError : Error {
    CyclicPreferenceError() : Error("no maximal continuation above the current one") {}
};

struct StrategySpaceTooLargeError : Error {
    StrategySpaceTooLargeError() : Error("strategy space exceeds the enumeration cap") {}
};

/// Graph, preference and enumeration budgets, shared by every operation.
struct Context {
    const Dalograph& graph;
    Preference pref;
    std::size_t path_budget = 100000;
    std::size_t strategy_cap = 1u << 20;
};

/// Failed maximality comes with the strictly better alternative.
struct Maximality {
    bool maximal = true;
    std::optional<Path> better; // full path from the walk's start

    explicit operator bool() const { return maximal; }
};

/// Is the path P (a full path extending walk x) maximal among the
/// continuations of x? Sequences are compared from x's last node on.
Maximality is_maximal_continuation(const Context& ctx, const Walk& x, const Path& p);

/// Maximal at every decomposition of the continuation along the growing
/// walk (semi-hereditary maximality).
struct HereditaryCheck {
    bool ok = true;
    std::string witness;

    explicit operator bool() const { return ok; }
};

HereditaryCheck is_semi_hereditary_maximal(const Context& ctx, const Walk& x, const Path& p);

/// Every suffix of the path is maximal among all paths from its node.
HereditaryCheck is_hereditary_maximal(const Context& ctx, const Path& p);

/// The seeking-forward function: follow the continuation while it stays
/// maximal, otherwise switch to a maximal continuation strictly above the
/// current one and keep going; stop when the walk loops. Returns the full
/// path extending x. Ties break to the lexicographically least node
/// sequence.
Path seek_forward(const Context& ctx, const Walk& x, const Path& p);

/// seek_forward from the deterministic seed (always the least successor),
/// then check hereditary maximality — which can fail when the preference
/// does not meet the sufficient condition.
struct HereditaryMaximalResult {
    Path path;
    bool hereditary;
    std::string witness;
};

HereditaryMaximalResult find_hereditary_maximal_path(const Context& ctx, const NodeId& o);

/// Per-node verification outcome of a strategy.
struct EquilibriumReport {
    std::optional<Strategy> strategy;
    bool verified = false;
    // (node, strictly better eligible sequence) for each failing node
    std::vector<std::pair<NodeId, UPWord>> failures;
    std::vector<std::string> notes;
};

Maximality verify_local(const Context& ctx, const Strategy& s, const NodeId& o);
EquilibriumReport verify_global(const Context& ctx, const Strategy& s);

/// Arc-removal construction: repeatedly take the least node with several
/// outgoing arcs, compute a hereditary maximal path from it, and delete
/// every arc dismissed by the path's choices; the remaining outdegree-1
/// graph forces the strategy. Runs even when the preference misses the
/// sufficient condition; the report then carries the verification
/// failures instead of a verdict by fiat.
EquilibriumReport construct_equilibrium(const Context& ctx);

/// All global equilibria, by exhaustive strategy enumeration in
/// deterministic order. Throws StrategySpaceTooLargeError if
/// the product of outdegrees exceeds the cap.
std::vector<Strategy> brute_force_equilibria(const Context& ctx);

std::size_t strategy_space_size(const Dalograph& g);

} // namespace daleq
