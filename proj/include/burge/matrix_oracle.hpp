#pragma once

// Finite-field oracle: Jordan matrices, the Toeplitz parameterization of
// their commutant, witness and random elements of the maximal nilpotent
// subalgebra U_B, restriction types, and an exhaustive dominance scan.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "burge/gf_matrix.hpp"
#include "burge/partition.hpp"

namespace burge {

inline constexpr std::uint32_t kDefaultSampleField = 10007;
inline constexpr std::uint32_t kDefaultScanField = 2;
inline constexpr std::uint64_t kDefaultScanBudget = std::uint64_t{1} << 24;

/// One Jordan block of B: `size` x `size`, the `copy`-th (1-based) of that size.
struct JordanBlock {
    int size;
    int copy;
    std::size_t offset;
};

/// Free Toeplitz parameter a_h in the block between row block `row` and
/// column block `col` (indices into CommutatorShape::blocks).
struct ToeplitzSlot {
    std::size_t row;
    std::size_t col;
    int h;
    /// a_1 of an equal-size block with copy(row) <= copy(col); zero in U_B.
    bool forced_zero;
    /// a_1 of an equal-size block, i.e. an entry of A_i^D.
    bool diagonal;
};

/// Parameterization of the commutant C_B of the Jordan matrix of P.
struct CommutatorShape {
    Partition type;
    std::size_t dim = 0;
    std::vector<JordanBlock> blocks;  // sizes descending, copies ascending
    std::vector<ToeplitzSlot> slots;

    explicit CommutatorShape(const Partition& p);

    std::size_t block_index(int size, int copy) const;
    std::size_t slot_index(std::size_t row, std::size_t col, int h) const;
    /// Matrix with slot s set to params[s].
    MatrixGFp build(const PrimeField& field, const std::vector<std::uint32_t>& params) const;
    /// Adds `value` along the a_h diagonal of one block.
    void place(MatrixGFp& m, const ToeplitzSlot& slot, std::uint32_t value) const;
};

/// Upper-triangular nilpotent Jordan form of type P, blocks by size descending.
MatrixGFp jordan_matrix(const Partition& p, const PrimeField& field);

/// Jordan type from ranks of powers. Throws std::invalid_argument unless M is
/// square and nilpotent.
Partition jordan_type(const MatrixGFp& m);

enum class PivotKind : char { a = 'a', b = 'b', c = 'c', d = 'd' };

/// Block A_{ij}^{kl}: rows of the k-th block of size i, columns of the l-th block of size j.
struct PivotBlock {
    int i, j, k, l;
    PivotKind kind;
    bool operator==(const PivotBlock&) const = default;
};

/// Pivot blocks of a generic element of U_B, kinds (a)-(d).
std::vector<PivotBlock> pivots(const Partition& p);

/// Element of U_B whose image restricts B to type del P. Pivots of kinds (a)
/// and (d) carry a_1 = 1. At every level t of the top-down reduction (t = z,
/// then the largest support index <= t-2, ...) the first row block of size t
/// gets a_1 = 1 towards each block of size t-1 when f_{t-1} != 0, and
/// otherwise a_2 = 1 in its block against the last block of size t.
MatrixGFp witness_matrix(const Partition& p, const PrimeField& field);

/// All free parameters of U_B uniform in GF(p).
MatrixGFp random_U_element(const Partition& p, const PrimeField& field, std::uint64_t seed);
/// Uniform element of C_B (A_i^D unrestricted).
MatrixGFp random_commutant_element(const Partition& p, const PrimeField& field,
                                   std::uint64_t seed);

/// Jordan type of B restricted to the column space of A. Throws
/// std::invalid_argument if AB != BA or B is not nilpotent.
Partition restriction_type(const MatrixGFp& b, const MatrixGFp& a);

struct RestrictionReport {
    Partition partition;
    std::uint32_t field;
    Partition expected;                // del P
    Partition witness_observed;
    std::vector<Partition> random_observed;
    int random_misses = 0;
    bool witness_ok = false;
    bool passed = false;
};

/// Witness must match exactly; random trials may miss at most `tolerance` times.
RestrictionReport verify_restriction(const Partition& p, const PrimeField& field, int trials,
                                     std::uint64_t seed, bool witness_only = false,
                                     int tolerance = 0);

struct DominanceScanReport {
    Partition partition;
    std::uint32_t field;
    std::uint64_t scanned = 0;          // elements of N_B visited
    std::uint64_t non_nilpotent = 0;    // candidates failing A^n = 0 (expected 0)
    std::map<Partition, std::uint64_t> types;
    std::optional<Partition> maximum;   // dominates every occurring type
    Partition expected;                 // descent_map(P)
    bool passed = false;
};

/// Number of N_B elements the exhaustive scan visits:
/// prod_i p^{f_i(f_i-1)} * p^{(free parameters outside the A_i^D)}. Saturates at UINT64_MAX.
std::uint64_t scan_size(const Partition& p, const PrimeField& field);

/// Visits every element of N_B and reports the dominance-maximum Jordan type.
/// The A_i^D blocks run over nilpotent matrices (pre-filtered from all
/// f_i x f_i matrices); every candidate is re-checked for A^n = 0.
/// Throws BudgetExceeded when scan_size exceeds `budget` or a pre-filter would.
DominanceScanReport exhaustive_max_type(const Partition& p, const PrimeField& field,
                                        std::uint64_t budget = kDefaultScanBudget);

}  // namespace burge
