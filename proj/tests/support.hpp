#pragma once

#include "daleq/dalograph.hpp"
#include "daleq/order.hpp"
#include "daleq/upword.hpp"

#include <random>
#include <string>
#include <vector>

namespace daleq::testing {

using Rng = std::mt19937;

inline std::size_t pick(Rng& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline std::vector<Label> numeric_alphabet(std::size_t n) {
    std::vector<Label> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

inline LabelOrder random_ranks(Rng& rng, const std::vector<Label>& labels, int levels = 3) {
    LabelOrder order;
    for (const auto& l : labels)
        order.set_rank(l, static_cast<int>(pick(rng, static_cast<std::size_t>(levels))));
    return order;
}

inline UPWord random_upword(Rng& rng, const std::vector<Label>& labels,
                            std::size_t max_prefix = 3, std::size_t max_period = 3) {
    Word prefix, period;
    std::size_t np = pick(rng, max_prefix + 1);
    std::size_t nq = 1 + pick(rng, max_period);
    for (std::size_t i = 0; i < np; ++i) prefix.push_back(labels[pick(rng, labels.size())]);
    for (std::size_t i = 0; i < nq; ++i) period.push_back(labels[pick(rng, labels.size())]);
    return UPWord(std::move(prefix), std::move(period));
}

inline std::vector<UPWord> random_universe(Rng& rng, const std::vector<Label>& labels,
                                           std::size_t max_words) {
    std::set<UPWord> words;
    std::size_t n = 1 + pick(rng, max_words);
    while (words.size() < n) words.insert(random_upword(rng, labels));
    return {words.begin(), words.end()};
}

/// Connected-by-construction random dalograph: every node gets one
/// outgoing arc first, then extra arcs up to the budget.
inline Dalograph random_dalograph(Rng& rng, std::size_t max_nodes, std::size_t max_arcs,
                                  const std::vector<Label>& labels) {
    std::size_t n = 1 + pick(rng, max_nodes);
    std::vector<NodeId> ids;
    for (std::size_t i = 0; i < n; ++i) ids.push_back("n" + std::to_string(i));

    RawDigraph raw;
    for (const auto& id : ids) raw.add_node(id);
    for (const auto& id : ids)
        raw.arcs[{id, ids[pick(rng, n)]}] = labels[pick(rng, labels.size())];

    std::size_t extra = max_arcs > raw.arcs.size() ? pick(rng, max_arcs - raw.arcs.size() + 1) : 0;
    for (std::size_t i = 0; i < extra; ++i) {
        NodeId a = ids[pick(rng, n)];
        NodeId b = ids[pick(rng, n)];
        if (!raw.arcs.count({a, b})) raw.arcs[{a, b}] = labels[pick(rng, labels.size())];
    }
    return Dalograph::validate(raw);
}

inline FiniteRelation random_relation(Rng& rng, std::size_t domain, double density = 0.3) {
    FiniteRelation r(domain);
    std::bernoulli_distribution flip(density);
    for (std::size_t i = 0; i < domain; ++i)
        for (std::size_t j = 0; j < domain; ++j)
            if (flip(rng)) r.add(i, j);
    return r;
}

} // namespace daleq::testing
