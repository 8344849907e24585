#include "daleq/upword.hpp"

#include <algorithm>
#include <numeric>

namespace daleq {

namespace {

// Shortest w such that period = w^k.
Word primitive_root(const Word& period) {
    std::size_t n = period.size();
    for (std::size_t d = 1; d <= n / 2; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i)
            ok = (period[i] == period[i - d]);
        if (ok) return Word(period.begin(), period.begin() + d);
    }
    return period;
}

} // namespace

UPWord::UPWord(Word prefix, Word period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
    if (period_.empty()) throw EmptyPeriodError();
    period_ = primitive_root(period_);
    // Roll letters from the prefix into the period while the denoted word
    // is unchanged: prefix·(p)^ω = shorter-prefix·(rot(p))^ω whenever the
    // last prefix letter equals the last period letter.
    while (!prefix_.empty() && prefix_.back() == period_.back()) {
        prefix_.pop_back();
        std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
    }
}

UPWord canonicalize(Word prefix, Word period) {
    return UPWord(std::move(prefix), std::move(period));
}

const Label& UPWord::letter_at(std::size_t n) const {
    if (n < prefix_.size()) return prefix_[n];
    return period_[(n - prefix_.size()) % period_.size()];
}

UPWord UPWord::drop(std::size_t n) const {
    if (n <= prefix_.size())
        return UPWord(Word(prefix_.begin() + static_cast<std::ptrdiff_t>(n), prefix_.end()), period_);
    std::size_t shift = (n - prefix_.size()) % period_.size();
    Word rotated(period_.begin() + static_cast<std::ptrdiff_t>(shift), period_.end());
    rotated.insert(rotated.end(), period_.begin(), period_.begin() + static_cast<std::ptrdiff_t>(shift));
    return UPWord({}, std::move(rotated));
}

UPWord prepend(std::span<const Label> u, const UPWord& w) {
    Word prefix(u.begin(), u.end());
    prefix.insert(prefix.end(), w.prefix().begin(), w.prefix().end());
    return UPWord(std::move(prefix), w.period());
}

std::optional<UPWord> strip_prefix(std::span<const Label> u, const UPWord& w) {
    for (std::size_t i = 0; i < u.size(); ++i)
        if (w.letter_at(i) != u[i]) return std::nullopt;
    return w.drop(u.size());
}

std::set<Label> limit_set(const UPWord& w) {
    return {w.period().begin(), w.period().end()};
}

std::set<Label> element_set(const UPWord& w) {
    std::set<Label> s(w.prefix().begin(), w.prefix().end());
    s.insert(w.period().begin(), w.period().end());
    return s;
}

std::size_t comparison_horizon(const UPWord& a, const UPWord& b) {
    return std::max(a.prefix_size(), b.prefix_size()) +
           std::lcm(a.period_size(), b.period_size());
}

std::string to_string(const UPWord& w) {
    std::string out;
    for (const auto& l : w.prefix()) {
        if (!out.empty()) out += ' ';
        out += l;
    }
    out += out.empty() ? ";" : " ;";
    for (const auto& l : w.period()) out += ' ' + l;
    return out;
}

} // namespace daleq
