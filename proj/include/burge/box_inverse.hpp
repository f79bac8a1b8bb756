#pragma once

// Fibers of the descent map over super-distinct partitions, indexed by box
// coordinates read off the block shape of the Burge code.

#include <vector>

#include "burge/burge_code.hpp"
#include "burge/partition.hpp"

namespace burge {

/// (d_1, ..., d_k): d_1 = q_k and d_i = q_{k-i+1} - q_{k-i+2} - 1.
struct DeltaVector {
    std::vector<int> deltas;

    std::size_t dim() const noexcept { return deltas.size(); }
    long long volume() const noexcept;
    bool operator==(const DeltaVector&) const = default;
};

/// Coordinates (i_1, ..., i_k) with 1 <= i_j <= d_j.
struct BoxCoordinates {
    std::vector<int> coords;

    int sum() const noexcept;
    bool operator==(const BoxCoordinates&) const = default;
    auto operator<=>(const BoxCoordinates&) const = default;
};

/// Throws std::invalid_argument unless q is super-distinct.
DeltaVector delta(const Partition& q);
/// Inverse of delta: the super-distinct partition with the given deltas (all >= 1).
Partition from_delta(const DeltaVector& d);

/// a^{d1-i1} b^{i1} a^{d2-i2+1} b^{i2} ... a^{dk-ik+1} b^{ik} a.
BurgeWord fiber_code(const Partition& q, const BoxCoordinates& c);

struct FiberEntry {
    BoxCoordinates coords;
    BurgeWord code;
    Partition partition;
};

/// All of descent_map^{-1}(q), sorted lexicographically by coordinates.
std::vector<FiberEntry> fiber(const Partition& q);

struct CoordinateLookup {
    Partition target;  // descent_map(p)
    BoxCoordinates coords;
};

/// Recovers (descent_map(p), c) from the b-run lengths of the Burge code of p.
CoordinateLookup coordinates_of(const Partition& p);

/// [q_2+2, ..., q_r+2, 1^{q_1-2r+2}]; the fiber element at coordinates delta(q).
Partition max_parts_partition(const Partition& q);

/// Reflects i_j to d_j - i_j + 1 for each 1-based position j in `positions`.
BoxCoordinates symmetry_map(const Partition& q, const BoxCoordinates& c,
                            const std::vector<int>& positions);

struct FiberPair {
    BoxCoordinates from_coords;
    Partition from;
    BoxCoordinates to_coords;
    Partition to;
};

/// Pairs the element of fiber(q) at (i_j) with the element of fiber(r) at
/// (i_{sigma(j)}). `sigma` is a 1-based permutation with delta(r)_j =
/// delta(q)_{sigma(j)}; throws std::invalid_argument otherwise.
std::vector<FiberPair> fiber_bijection(const Partition& q, const Partition& r,
                                       const std::vector<int>& sigma);

}  // namespace burge
