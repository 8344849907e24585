#pragma once

#include "daleq/dalograph.hpp"
#include "daleq/equilibrium.hpp"
#include "daleq/order.hpp"
#include "daleq/preference.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace daleq {

struct InvalidTargetError : Error {
    explicit InvalidTargetError(const std::string& why) : Error("invalid target: " + why) {}
};

struct NotTotalOnSampleError : Error {
    NotTotalOnSampleError() : Error("policy is not total on the given sample") {}
};

/// A digraph with a target node of outdegree zero, reachable from every
/// node.
struct RoutingProblem {
    RawDigraph graph;
    NodeId target;

    static RoutingProblem validate(RawDigraph graph, NodeId target);
};

/// A strict relation over finite label words, read "worse route than".
struct RoutingPolicy {
    std::string name;
    std::function<bool(const Word&, const Word&)> less;

    bool operator()(const Word& a, const Word& b) const { return less(a, b); }
};

/// Fewer hops preferred: u worse than v iff |u| > |v|.
RoutingPolicy minhop_policy();
/// Widest path: u worse than v iff u's bottleneck rank is below v's.
RoutingPolicy widest_policy(LabelOrder order);
RoutingPolicy table_policy(std::set<std::pair<Word, Word>> pairs);

/// The reduction of a routing problem to a dalograph: the target gains a
/// dl-arc into a dl-self-looping dummy, and the policy lifts to a
/// preference with exactly two rules — u·dl^ω < v·dl^ω iff u worse than
/// v, and every word with no dl below every dl-terminated word.
struct EmbeddedRouting {
    Dalograph dalograph;
    Preference preference;
    NodeId dummy;
    Label dl;
};

EmbeddedRouting embed(const RoutingProblem& rp, const RoutingPolicy& policy, const Label& dl,
                      const NodeId& dummy = "__dl");

/// Label words of all simple paths from o to the target.
std::vector<Word> route_words(const RoutingProblem& rp, const NodeId& o);

struct RoutingReport {
    std::optional<std::map<NodeId, NodeId>> choices; // per non-target node
    bool verified = false;
    std::vector<std::string> failures;
    bool no_equilibrium = false; // brute force over routing strategies found none
};

/// Embed, construct an equilibrium, map the strategy back, and verify per
/// node: the induced route reaches the target and its word is maximal
/// among all simple-path route words from that node. When that fails,
/// fall back to exhaustive routing-strategy search.
RoutingReport solve_routing(const RoutingProblem& rp, const RoutingPolicy& policy,
                            const Label& dl = "__dl");

/// All routing equilibria by exhaustive enumeration.
std::vector<std::map<NodeId, NodeId>> routing_brute_force(const RoutingProblem& rp,
                                                          const RoutingPolicy& policy,
                                                          std::size_t cap = 1u << 20);

/// Sufficient condition for every routing problem to have an equilibrium:
/// E-prefix + strict weak
/// order + v not worse than uv, over a finite word sample.
struct PolicyReport {
    ConditionVerdict e_prefix;
    RelationCheck strict_weak_order;
    ConditionVerdict no_gain_by_prefix; // v ⊀ uv
    bool pass = false;
};

PolicyReport check_policy_sufficient(const RoutingPolicy& policy, const std::vector<Word>& sample,
                                     std::size_t max_prefix_len = 4);

/// The total-order characterization: equilibria for every problem iff the
/// policy is E-prefix and uv worse than v for nonempty u. On failure the
/// corresponding counterexample problem is emitted and brute-forced.
struct TotalOrderReport {
    bool total = false;
    ConditionVerdict e_prefix;
    ConditionVerdict prefix_strictly_worsens; // uv ≺ v
    bool pass = false;
    std::optional<RoutingProblem> counterexample;
    std::size_t counterexample_equilibria = 0;
};

TotalOrderReport check_policy_total_order_iff(const RoutingPolicy& policy,
                                              const std::vector<Word>& sample,
                                              std::size_t max_prefix_len = 4);

/// The two counterexample topologies for total-order policies.
RoutingProblem non_eprefix_counterexample(const Word& u, const Word& v, const Word& w);
RoutingProblem prefix_gain_counterexample(const Word& u, const Word& v);

} // namespace daleq
