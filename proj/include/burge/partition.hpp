#pragma once

// Partitions and their frequency representation, with the statistics used by
// the Burge operators and the Oblak process.

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "burge/errors.hpp"

namespace burge {

inline constexpr int kDefaultMaxPart = 1'000'000;

/// Weakly decreasing sequence of positive parts. Empty means the empty partition.
class Partition {
public:
    Partition() = default;

    /// Parts may be given in any order; they are sorted decreasingly.
    /// Throws std::invalid_argument on a non-positive part or a part above max_part.
    explicit Partition(std::vector<int> parts, int max_part = kDefaultMaxPart);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }
    std::int64_t size() const noexcept;
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    int operator[](std::size_t i) const { return parts_.at(i); }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Maximal interval [lo, hi] of the support of a frequency sequence.
struct Spread {
    int lo;
    int hi;

    bool trivial() const noexcept { return lo == hi; }
    int width() const noexcept { return hi - lo + 1; }
    bool operator==(const Spread&) const = default;
};

/// Multiplicities f_1, f_2, ... of a partition. Index 0 and indices past the
/// stored range read as 0; trailing zeros are never stored.
class FrequencySeq {
public:
    FrequencySeq() = default;
    /// `freq[0]` is f_1. Throws on negative entries.
    explicit FrequencySeq(std::vector<int> freq);
    FrequencySeq(std::initializer_list<int> freq) : FrequencySeq(std::vector<int>(freq)) {}

    /// f_i for any i >= 0.
    int operator[](int i) const noexcept {
        return (i >= 1 && i <= max_index()) ? freq_[static_cast<std::size_t>(i - 1)] : 0;
    }
    /// Largest i with f_i != 0, or 0 for the empty sequence.
    int max_index() const noexcept { return static_cast<int>(freq_.size()); }
    bool empty() const noexcept { return freq_.empty(); }
    const std::vector<int>& entries() const noexcept { return freq_; }

    std::int64_t size() const noexcept;
    std::int64_t length() const noexcept;

    bool operator==(const FrequencySeq&) const = default;
    auto operator<=>(const FrequencySeq&) const = default;

private:
    std::vector<int> freq_;
};

FrequencySeq to_frequency(const Partition& p);
Partition to_partition(const FrequencySeq& f);

std::vector<Spread> spreads(const FrequencySeq& f);
/// Ascending index sets {lo, lo+2, ...} and {hi, hi-2, ...} over all spreads.
std::vector<int> left_set(const FrequencySeq& f);
std::vector<int> right_set(const FrequencySeq& f);
int two_measure(const FrequencySeq& f);
inline int two_measure(const Partition& p) { return two_measure(to_frequency(p)); }

bool is_super_distinct(const Partition& p);
/// P - 1: every part decremented, zeros dropped.
Partition reduce(const Partition& p);

/// Prefix-sum dominance. Throws std::invalid_argument when sizes differ.
bool dominates(const Partition& p, const Partition& r);

/// Accepts "10,7,3", "[10,7,3]", "[4^2,3,2^2]", "e", "[]", "" and "f:(0,2,1,2)".
Partition parse_partition(std::string_view text, int max_part = kDefaultMaxPart);
/// Accepts "f:(...)", "(...)" or a bare comma list of multiplicities.
FrequencySeq parse_frequency(std::string_view text);

/// Multiset form with carets, e.g. "[9,5,1^6]"; "[]" for the empty partition.
std::string format_multiset(const Partition& p);
/// Plain comma list, e.g. "9,3,1"; "e" for the empty partition.
std::string format_plain(const Partition& p);
/// "(1,2,1,0,1)"; "()" when empty.
std::string format_frequency(const FrequencySeq& f);

std::ostream& operator<<(std::ostream& os, const Partition& p);
std::ostream& operator<<(std::ostream& os, const FrequencySeq& f);

/// All partitions of n in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);
/// Calls `visit` for every partition of n, same order as partitions_of.
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);

}  // namespace burge
