#include "burge/matrix_oracle.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

#include "burge/burge_code.hpp"
#include "burge/errors.hpp"

namespace burge {

CommutatorShape::CommutatorShape(const Partition& p) : type(p) {
    const FrequencySeq f = to_frequency(p);
    for (int i = f.max_index(); i >= 1; --i) {
        for (int k = 1; k <= f[i]; ++k) {
            blocks.push_back(JordanBlock{i, k, dim});
            dim += static_cast<std::size_t>(i);
        }
    }
    for (std::size_t r = 0; r < blocks.size(); ++r) {
        for (std::size_t c = 0; c < blocks.size(); ++c) {
            const JordanBlock& rb = blocks[r];
            const JordanBlock& cb = blocks[c];
            const int m = std::min(rb.size, cb.size);
            const bool same_size = rb.size == cb.size;
            for (int h = 1; h <= m; ++h) {
                const bool diagonal = same_size && h == 1;
                slots.push_back(ToeplitzSlot{r, c, h, diagonal && rb.copy <= cb.copy, diagonal});
            }
        }
    }
}

std::size_t CommutatorShape::block_index(int size, int copy) const {
    for (std::size_t b = 0; b < blocks.size(); ++b)
        if (blocks[b].size == size && blocks[b].copy == copy) return b;
    throw std::out_of_range("no Jordan block of size " + std::to_string(size) + " copy " +
                            std::to_string(copy));
}

std::size_t CommutatorShape::slot_index(std::size_t row, std::size_t col, int h) const {
    for (std::size_t s = 0; s < slots.size(); ++s)
        if (slots[s].row == row && slots[s].col == col && slots[s].h == h) return s;
    throw std::out_of_range("no Toeplitz slot for the requested block");
}

void CommutatorShape::place(MatrixGFp& m, const ToeplitzSlot& slot, std::uint32_t value) const {
    if (value == 0) return;
    const JordanBlock& rb = blocks[slot.row];
    const JordanBlock& cb = blocks[slot.col];
    const int width = std::min(rb.size, cb.size);
    // The Toeplitz square sits in the top rows and rightmost columns of the block.
    const std::size_t col0 = cb.offset + static_cast<std::size_t>(cb.size - width);
    for (int r = 0; r + slot.h - 1 < width; ++r) {
        const std::size_t row = rb.offset + static_cast<std::size_t>(r);
        const std::size_t col = col0 + static_cast<std::size_t>(r + slot.h - 1);
        m.set(row, col, std::int64_t{m(row, col)} + value);
    }
}

MatrixGFp CommutatorShape::build(const PrimeField& field,
                                 const std::vector<std::uint32_t>& params) const {
    if (params.size() != slots.size()) throw std::invalid_argument("parameter count mismatch");
    MatrixGFp m(field, dim, dim);
    for (std::size_t s = 0; s < slots.size(); ++s) place(m, slots[s], params[s]);
    return m;
}

MatrixGFp jordan_matrix(const Partition& p, const PrimeField& field) {
    const CommutatorShape shape(p);
    MatrixGFp b(field, shape.dim, shape.dim);
    for (const JordanBlock& blk : shape.blocks)
        for (int c = 1; c < blk.size; ++c)
            b.set(blk.offset + static_cast<std::size_t>(c - 1), blk.offset + static_cast<std::size_t>(c), 1);
    return b;
}

namespace {

// Jordan type from the rank sequence r_0 = n, r_1, ..., r_m = 0.
Partition type_from_ranks(const std::vector<std::size_t>& r) {
    std::vector<int> parts;
    for (std::size_t k = 1; k < r.size(); ++k) {
        const std::size_t at_least_k = r[k - 1] - r[k];
        const std::size_t at_least_next = k + 1 < r.size() ? r[k] - r[k + 1] : 0;
        parts.insert(parts.end(), at_least_k - at_least_next, static_cast<int>(k));
    }
    return Partition(std::move(parts));
}

}  // namespace

Partition jordan_type(const MatrixGFp& m) {
    if (!m.square()) throw std::invalid_argument("Jordan type of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<std::size_t> ranks{n};
    MatrixGFp power = MatrixGFp::identity(m.field(), n);
    for (std::size_t k = 1; k <= n; ++k) {
        power = power * m;
        if (power.is_zero()) {
            ranks.push_back(0);
            return type_from_ranks(ranks);
        }
        ranks.push_back(power.rank());
    }
    if (n == 0) return {};
    throw std::invalid_argument("matrix is not nilpotent");
}

std::vector<PivotBlock> pivots(const Partition& p) {
    const FrequencySeq f = to_frequency(p);
    std::vector<PivotBlock> out;
    const int z = f.max_index();
    if (z == 0) return out;
    for (int i = 1; i <= z; ++i)
        for (int k = 2; k <= f[i]; ++k) out.push_back({i, i, k, k - 1, PivotKind::a});
    for (int l = 1; l <= f[z - 1]; ++l) out.push_back({z, z - 1, 1, l, PivotKind::b});
    out.push_back({z, z, 1, f[z], PivotKind::c});
    for (int i = 1; i <= z; ++i)
        for (int k = 1; k <= f[i]; ++k)
            for (int j = i + 1; j <= z; ++j)
                for (int l = 1; l <= f[j]; ++l) out.push_back({i, j, k, l, PivotKind::d});
    return out;
}

MatrixGFp witness_matrix(const Partition& p, const PrimeField& field) {
    const CommutatorShape shape(p);
    const FrequencySeq f = to_frequency(p);
    MatrixGFp a(field, shape.dim, shape.dim);
    auto put = [&](int i, int k, int j, int l, int h) {
        const std::size_t row = shape.block_index(i, k);
        const std::size_t col = shape.block_index(j, l);
        shape.place(a, shape.slots[shape.slot_index(row, col, h)], 1);
    };

    for (const PivotBlock& pv : pivots(p))
        if (pv.kind == PivotKind::a || pv.kind == PivotKind::d) put(pv.i, pv.k, pv.j, pv.l, 1);

    for (int t = f.max_index(); t >= 2;) {
        if (f[t] == 0) {
            --t;
            continue;
        }
        if (f[t - 1] != 0) {
            for (int l = 1; l <= f[t - 1]; ++l) put(t, 1, t - 1, l, 1);
        } else {
            put(t, 1, t, f[t], 2);
        }
        t -= 2;
    }
    return a;
}

namespace {

MatrixGFp random_element(const Partition& p, const PrimeField& field, std::uint64_t seed,
                         bool nilpotent_subalgebra) {
    const CommutatorShape shape(p);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> draw(0, field.modulus() - 1);
    std::vector<std::uint32_t> params(shape.slots.size());
    for (std::size_t s = 0; s < params.size(); ++s) {
        const std::uint32_t v = draw(rng);
        params[s] = (nilpotent_subalgebra && shape.slots[s].forced_zero) ? 0 : v;
    }
    return shape.build(field, params);
}

}  // namespace

MatrixGFp random_U_element(const Partition& p, const PrimeField& field, std::uint64_t seed) {
    return random_element(p, field, seed, true);
}

MatrixGFp random_commutant_element(const Partition& p, const PrimeField& field,
                                   std::uint64_t seed) {
    return random_element(p, field, seed, false);
}

Partition restriction_type(const MatrixGFp& b, const MatrixGFp& a) {
    if (!b.square() || !a.square() || a.rows() != b.rows())
        throw std::invalid_argument("restriction needs square matrices of equal size");
    if (!(a * b == b * a)) throw std::invalid_argument("A does not commute with B");
    if (!b.is_nilpotent()) throw std::invalid_argument("B is not nilpotent");
    // d_k = dim B^k W with W = im A.
    std::vector<std::size_t> dims;
    MatrixGFp image = a;
    while (true) {
        dims.push_back(image.rank());
        if (dims.back() == 0) break;
        image = b * image;
    }
    return type_from_ranks(dims);
}

RestrictionReport verify_restriction(const Partition& p, const PrimeField& field, int trials,
                                     std::uint64_t seed, bool witness_only, int tolerance) {
    RestrictionReport rep;
    rep.partition = p;
    rep.field = field.modulus();
    rep.expected = apply_del(p);
    const MatrixGFp b = jordan_matrix(p, field);
    rep.witness_observed = restriction_type(b, witness_matrix(p, field));
    rep.witness_ok = rep.witness_observed == rep.expected;
    if (!witness_only) {
        for (int t = 0; t < trials; ++t) {
            const MatrixGFp a = random_U_element(p, field, seed + static_cast<std::uint64_t>(t));
            rep.random_observed.push_back(restriction_type(b, a));
            if (rep.random_observed.back() != rep.expected) ++rep.random_misses;
        }
    }
    rep.passed = rep.witness_ok && rep.random_misses <= tolerance;
    return rep;
}

namespace {

std::uint64_t saturating_mul(std::uint64_t x, std::uint64_t y) {
    if (x != 0 && y > std::numeric_limits<std::uint64_t>::max() / x)
        return std::numeric_limits<std::uint64_t>::max();
    return x * y;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = saturating_mul(r, base);
    return r;
}

// Cap on the number of small blocks tried when listing nilpotent A_i^D.
constexpr std::uint64_t kPrefilterLimit = std::uint64_t{1} << 26;

// All nilpotent m x m matrices over the field, row-major entry vectors.

std::vector<std::vector<std::uint32_t>> nilpotent_blocks(int m, const PrimeField& field) {
    const std::uint64_t p = field.modulus();
    const auto cells = static_cast<std::size_t>(m) * static_cast<std::size_t>(m);
    if (saturating_pow(p, cells) > kPrefilterLimit)
        throw BudgetExceeded("pre-filtering " + std::to_string(m) + "x" + std::to_string(m) +
                             " blocks over GF(" + std::to_string(p) + ") exceeds the pre-filter limit");
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> digits(cells, 0);
    const auto um = static_cast<std::size_t>(m);
    std::vector<std::uint64_t> power(cells), next(cells);
    while (true) {
        std::uint64_t trace = 0;
        for (std::size_t i = 0; i < um; ++i) trace += digits[i * um + i];
        if (trace % p == 0) {
            // A^m = 0 iff A^(2^e) = 0 for the first 2^e >= m.
            for (std::size_t i = 0; i < cells; ++i) power[i] = digits[i];
            bool zero = std::all_of(power.begin(), power.end(), [](std::uint64_t x) { return x == 0; });
            for (int e = 1; e < m && !zero; e *= 2) {
                zero = true;
                for (std::size_t r = 0; r < um; ++r)
                    for (std::size_t c = 0; c < um; ++c) {
                        std::uint64_t s = 0;
                        for (std::size_t t = 0; t < um; ++t) s += power[r * um + t] * power[t * um + c];
                        next[r * um + c] = s % p;
                        if (next[r * um + c]) zero = false;
                    }
                power.swap(next);
            }
            if (zero) out.push_back(digits);
        }
        std::size_t pos = 0;
        while (pos < cells && ++digits[pos] == p) digits[pos++] = 0;
        if (pos == cells) break;
    }
    return out;
}

}  // namespace

std::uint64_t scan_size(const Partition& p, const PrimeField& field) {
    const CommutatorShape shape(p);
    const FrequencySeq f = to_frequency(p);
    std::uint64_t free = 0;
    for (const ToeplitzSlot& s : shape.slots)
        if (!s.diagonal) ++free;
    std::uint64_t exponent = free;
    for (int i = 1; i <= f.max_index(); ++i)
        exponent += static_cast<std::uint64_t>(f[i]) * static_cast<std::uint64_t>(std::max(f[i] - 1, 0));
    return saturating_pow(field.modulus(), exponent);
}

DominanceScanReport exhaustive_max_type(const Partition& p, const PrimeField& field,
                                        std::uint64_t budget) {
    DominanceScanReport rep;
    rep.partition = p;
    rep.field = field.modulus();
    rep.expected = descent_map(p);
    const std::uint64_t expected_count = scan_size(p, field);
    if (expected_count > budget)
        throw BudgetExceeded("scan of " + format_multiset(p) + " over GF(" +
                             std::to_string(field.modulus()) + ") needs " +
                             std::to_string(expected_count) + " matrices, budget " +
                             std::to_string(budget));

    const CommutatorShape shape(p);
    const FrequencySeq f = to_frequency(p);

    // Group the A_i^D slots by block size; the rest are free digits.
    struct DiagGroup {
        int size;
        std::vector<std::size_t> slot_of;  // (k-1)*f_i + (l-1) -> slot
        std::vector<std::vector<std::uint32_t>> choices;
    };
    std::vector<DiagGroup> groups;
    std::vector<std::size_t> free_slots;
    for (int i = f.max_index(); i >= 1; --i) {
        if (f[i] == 0) continue;
        DiagGroup g{i, std::vector<std::size_t>(static_cast<std::size_t>(f[i] * f[i])), {}};
        g.choices = nilpotent_blocks(f[i], field);
        groups.push_back(std::move(g));
    }
    for (std::size_t s = 0; s < shape.slots.size(); ++s) {
        const ToeplitzSlot& slot = shape.slots[s];
        if (!slot.diagonal) {
            free_slots.push_back(s);
            continue;
        }
        const JordanBlock& rb = shape.blocks[slot.row];
        const JordanBlock& cb = shape.blocks[slot.col];
        for (DiagGroup& g : groups)
            if (g.size == rb.size)
                g.slot_of[static_cast<std::size_t>((rb.copy - 1) * f[rb.size] + (cb.copy - 1))] = s;
    }

    std::vector<std::size_t> group_pos(groups.size(), 0);
    std::vector<std::uint32_t> free_digits(free_slots.size(), 0);
    std::vector<std::uint32_t> params(shape.slots.size(), 0);
    const std::uint32_t p_mod = field.modulus();
    while (true) {
        for (std::size_t g = 0; g < groups.size(); ++g) {
            const auto& choice = groups[g].choices[group_pos[g]];
            for (std::size_t e = 0; e < choice.size(); ++e) params[groups[g].slot_of[e]] = choice[e];
        }
        for (std::size_t d = 0; d < free_slots.size(); ++d) params[free_slots[d]] = free_digits[d];

        const MatrixGFp a = shape.build(field, params);
        ++rep.scanned;
        try {
            ++rep.types[jordan_type(a)];
        } catch (const std::invalid_argument&) {
            ++rep.non_nilpotent;
        }

        std::size_t d = 0;
        while (d < free_digits.size() && ++free_digits[d] == p_mod) free_digits[d++] = 0;
        if (d < free_digits.size()) continue;
        std::size_t g = 0;
        while (g < groups.size() && ++group_pos[g] == groups[g].choices.size()) group_pos[g++] = 0;
        if (g == groups.size()) break;
    }

    for (const auto& [candidate, count] : rep.types) {
        bool top = true;
        for (const auto& [other, c2] : rep.types)
            if (!dominates(candidate, other)) {
                top = false;
                break;
            }
        if (top) {
            rep.maximum = candidate;
            break;
        }
    }
    rep.passed = rep.non_nilpotent == 0 && rep.scanned == expected_count && rep.maximum &&
                 *rep.maximum == rep.expected;
    return rep;
}

}  // namespace burge
