#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace daleq {

// Labels are opaque symbols. Any ordering between labels is supplied
// separately by a LabelOrder; the word machinery only ever tests equality.
using Label = std::string;
using Word = std::vector<Label>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyPeriodError : Error {
    EmptyPeriodError() : Error("UPWord period must be nonempty") {}
};

/// An ultimately periodic infinite word prefix·period^ω, kept canonical:
/// the period is primitive and no letter of the prefix can be rolled into
/// the period without changing the denoted word. Canonical words compare
/// for denotational equality with operator==.
class UPWord {
public:
    UPWord(Word prefix, Word period);

    const Word& prefix() const { return prefix_; }
    const Word& period() const { return period_; }

    const Label& letter_at(std::size_t n) const;

    /// The word with its first n letters removed (still canonical).
    UPWord drop(std::size_t n) const;

    std::size_t prefix_size() const { return prefix_.size(); }
    std::size_t period_size() const { return period_.size(); }

    bool operator==(const UPWord& o) const = default;
    auto operator<=>(const UPWord& o) const = default;

private:
    Word prefix_;
    Word period_;
};

UPWord canonicalize(Word prefix, Word period);

UPWord prepend(std::span<const Label> u, const UPWord& w);

/// Inverse of prepend; empty when u is not a prefix of w.
std::optional<UPWord> strip_prefix(std::span<const Label> u, const UPWord& w);

/// Letters occurring infinitely often (the period letters).
std::set<Label> limit_set(const UPWord& w);

/// All letters occurring in the word.
std::set<Label> element_set(const UPWord& w);

/// Number of positions after which a positionwise scan of a and b cycles:
/// max of the prefix lengths plus lcm of the period lengths. Any ∀n/∃n
/// over positions of the pair is decided within this bound.
std::size_t comparison_horizon(const UPWord& a, const UPWord& b);

std::string to_string(const UPWord& w);

} // namespace daleq
