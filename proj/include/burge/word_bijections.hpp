#pragma once

// Fiber codes to partitions with prescribed diagonal hooks: the closed-form
// Foata image of a fiber code, read as a lattice path.

#include <cstdint>
#include <vector>

#include "burge/box_inverse.hpp"
#include "burge/burge_code.hpp"

namespace burge {

/// Number of pairs i < j with w_i = b and w_j = a.
std::int64_t inv(const Word& w);

/// b a^{d_k-i_k} ... b a^{d_1-i_1} b^{i_1-1} a b^{i_2-1} a ... b^{i_k-1} a.
Word foata_fiber(const Partition& q, const BoxCoordinates& c);

/// Reads w right to left as east (a) / north (b) steps from the origin; each
/// north step contributes a row whose length is the number of east steps
/// taken before it. Zero-length rows are dropped.
Partition path_to_partition(const Word& w);

/// Conjugate (transpose) partition.
Partition conjugate(const Partition& p);
/// Side of the largest square fitting in the Young diagram.
int durfee(const Partition& p);
/// Hook lengths along the main diagonal, largest first.
Partition diagonal_hooks(const Partition& p);

/// path_to_partition(foata_fiber(q, c)).
Partition hook_partner(const Partition& q, const BoxCoordinates& c);

}  // namespace burge
