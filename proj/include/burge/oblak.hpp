#pragma once

// Oblak's greedy recursion expressed on frequency sequences: evaluation,
// annihilation, maximal indices, and Oblak chains with their interaction with
// the demotion operator.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "burge/partition.hpp"

namespace burge {

/// i f_i + (i+1) f_{i+1} + 2 sum_{j>i+1} f_j, with index 0 read as 1.
std::int64_t evaluate(const FrequencySeq& f, int i);
/// Splices out entries i and i+1 (index 0 read as 1).
FrequencySeq annihilate(const FrequencySeq& f, int i);

/// Indices in [0, max_index] attaining the largest nonzero evaluation. Empty for f = ().
std::vector<int> maximal_indices(const FrequencySeq& f);

std::vector<int> right_admissible(const FrequencySeq& f);
std::vector<int> left_admissible(const FrequencySeq& f);

/// One class of indices sharing the same annihilation. When `unbounded` is set
/// the class also contains every index above members.back().
struct IndexClass {
    std::vector<int> members;
    bool unbounded = false;

    bool contains(int i) const noexcept;
    bool operator==(const IndexClass&) const = default;
};

/// Classes ordered by smallest member; the last class is the unbounded tail.
std::vector<IndexClass> equivalent_indices(const FrequencySeq& f);

/// Deterministic Oblak process (always the smallest maximal index).
Partition oblak(const FrequencySeq& f);
inline Partition oblak(const Partition& p) { return oblak(to_frequency(p)); }

struct OblakChain {
    std::vector<FrequencySeq> states;  // f, ..., empty
    std::vector<int> indices;          // annihilation index per step
    std::vector<std::int64_t> steps;   // evaluation per step, in process order

    /// Valuation as a partition.
    Partition valuation() const;
};

/// Builds the chain for a prescribed index sequence. Throws std::invalid_argument
/// if some index is not maximal for its state or the sequence does not reach ().
OblakChain chain_from_indices(const FrequencySeq& f, const std::vector<int>& indices);
/// True iff chain_from_indices would succeed.
bool is_maximal_index_sequence(const FrequencySeq& f, const std::vector<int>& indices);

/// Independent validation of every chain invariant; steps are recomputed
/// from size differences.
bool is_valid_chain(const OblakChain& c);

inline constexpr std::size_t kDefaultChainLimit = 100'000;

/// Every chain over one representative (the smallest) per class of maximal
/// indices at each step, sorted by index sequence. Throws BudgetExceeded when
/// more than `limit` chains would be produced.
std::vector<OblakChain> oblak_all_chains(const FrequencySeq& f,
                                         std::size_t limit = kDefaultChainLimit);

/// Applies the demotion operator statewise, dropping the last step when the
/// penultimate state is (1). Indices are re-chosen as the smallest maximal
/// index reproducing each step; throws std::logic_error if none exists.
OblakChain del_chain(const OblakChain& c);

/// val_i(del f) = val_i(f) - 1 and ann_i(del f) = del(ann_i f).
bool check_commuting_square(const FrequencySeq& f, int i);

}  // namespace burge
