#pragma once

#include "daleq/closure.hpp"
#include "daleq/dalograph.hpp"
#include "daleq/preference.hpp"
#include "daleq/routing.hpp"

#include <functional>
#include <string>
#include <vector>

namespace daleq {

enum class Verdict { HasEquilibrium, NoEquilibrium, NecessaryViolated, Open };

std::string to_string(Verdict v);

struct GalleryOutcome {
    Verdict verdict;
    std::string report;
};

/// A worked instance with a pinned expected verdict, reproduced in CI.
struct GalleryEntry {
    std::string name;
    std::string description;
    Verdict expected;
    std::function<GalleryOutcome()> run;
};

const std::vector<GalleryEntry>& gallery();
const GalleryEntry* find_gallery_entry(const std::string& name);

// Fixture builders, shared with the tests.

struct DaloFixture {
    Dalograph graph;
    Preference pref;
};

/// Five-arc dalograph with one self-loop and a two-node cycle.
DaloFixture five_label_fixture();

/// The node-labelled digraph whose embedding moves each node label onto
/// the node's outgoing arcs, plus the expected result.
std::pair<RawDigraph, std::map<NodeId, Label>> node_labelled_fixture();
Dalograph node_labelled_expected();

/// An arc-labelled digraph with two dead ends, repaired by a sink.
RawDigraph dead_end_fixture();

/// A two-way chain whose finite paths are modeled with dl-arcs from all
/// nodes into the sink.
RawDigraph finite_path_fixture();

/// The numeric lexicographic example: one node has a locally optimal
/// strategy choice while another does not.
DaloFixture local_eq_fixture();
Strategy local_eq_pictured_strategy();

/// A branching node feeding a two-node cycle, with low-ranked escape
/// loops; the equilibrium follows the cycle.
DaloFixture removal_schematic_fixture();

/// Two nodes on a c-labelled cycle, each with an a-labelled exit; the
/// three eligible words are totally ordered so that no strategy is
/// stable (the order is E-prefix but not subcontinuous).
DaloFixture ring_fixture();

/// Two source nodes route through a shared relay and a shared exit pair;
/// each source only accepts its own side's exits, and the exit nodes are
/// pushed away from their direct escapes, so the shared chooser can
/// satisfy at most one source.
DaloFixture coordination_fixture();

/// Three branches around one hub; exits are dominated by the next branch
/// around, loops by another branch's exit, cyclically.
DaloFixture triskele_fixture();

/// Max-min set order on words over 0/1/2 whose restriction derives a
/// reflexive pair after one prefix strip and one transitivity step.
std::pair<Preference, Universe> mms_refutation_fixture();

/// A route pair whose policy prefers the longer route after a shared
/// prefix but the shorter one bare.
std::pair<RoutingProblem, RoutingPolicy> routing_non_eprefix_fixture();

/// Two nodes that can hand off to each other or exit; the policy rewards
/// adding the handoff prefix.
std::pair<RoutingProblem, RoutingPolicy> routing_prefix_gain_fixture();

/// The six-pair table over a..d that no E-prefix transitive total order
/// extends; whether it forces equilibria everywhere is unresolved.
std::pair<Preference, Universe> open_conclusion_fixture();

} // namespace daleq
