#include "burge/box_inverse.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace burge {

long long DeltaVector::volume() const noexcept {
    long long v = 1;
    for (int d : deltas) v *= d;
    return v;
}

int BoxCoordinates::sum() const noexcept { return std::accumulate(coords.begin(), coords.end(), 0); }

DeltaVector delta(const Partition& q) {
    if (!is_super_distinct(q))
        throw std::invalid_argument(format_multiset(q) + " is not super-distinct");
    const auto& v = q.parts();
    const std::size_t k = v.size();
    DeltaVector d;
    if (k == 0) return d;
    d.deltas.push_back(v[k - 1]);
    for (std::size_t i = 2; i <= k; ++i) d.deltas.push_back(v[k - i] - v[k - i + 1] - 1);
    return d;
}

Partition from_delta(const DeltaVector& d) {
    std::vector<int> parts;
    int q = 0;
    for (std::size_t i = 0; i < d.deltas.size(); ++i) {
        if (d.deltas[i] < 1) throw std::invalid_argument("deltas must be positive");
        q += d.deltas[i] + (i == 0 ? 0 : 1);
        parts.push_back(q);
    }
    return Partition(std::move(parts));
}

namespace {

void check_coords(const DeltaVector& d, const BoxCoordinates& c) {
    if (c.coords.size() != d.dim())
        throw std::invalid_argument("expected " + std::to_string(d.dim()) + " coordinates, got " +
                                    std::to_string(c.coords.size()));
    for (std::size_t j = 0; j < d.dim(); ++j)
        if (c.coords[j] < 1 || c.coords[j] > d.deltas[j])
            throw std::invalid_argument("coordinate " + std::to_string(j + 1) + " = " +
                                        std::to_string(c.coords[j]) + " outside [1," +
                                        std::to_string(d.deltas[j]) + "]");
}

}  // namespace

BurgeWord fiber_code(const Partition& q, const BoxCoordinates& c) {
    const DeltaVector d = delta(q);
    check_coords(d, c);
    Word w;
    for (std::size_t j = 0; j < d.dim(); ++j) {
        const int gap = d.deltas[j] - c.coords[j] + (j == 0 ? 0 : 1);
        w.append(Letter::a, static_cast<std::size_t>(gap));
        w.append(Letter::b, static_cast<std::size_t>(c.coords[j]));
    }
    w.push_back(Letter::a);
    return BurgeWord(std::move(w));
}

std::vector<FiberEntry> fiber(const Partition& q) {
    const DeltaVector d = delta(q);
    std::vector<FiberEntry> out;
    out.reserve(static_cast<std::size_t>(d.volume()));
    BoxCoordinates c{std::vector<int>(d.dim(), 1)};
    // Odometer with the last coordinate fastest gives lexicographic order.
    while (true) {
        BurgeWord code = fiber_code(q, c);
        out.push_back(FiberEntry{c, code, to_partition(decode(code))});
        std::size_t j = d.dim();
        while (j > 0 && c.coords[j - 1] == d.deltas[j - 1]) c.coords[--j] = 1;
        if (j == 0) break;
        ++c.coords[j - 1];
    }
    return out;
}

CoordinateLookup coordinates_of(const Partition& p) {
    const BurgeWord code = encode(p);
    const Word& w = code.word();
    CoordinateLookup out{Partition(descent_set(w)), {}};
    for (std::size_t i = 1; i <= w.length();) {
        if (w.at(i) == Letter::a) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j <= w.length() && w.at(j) == Letter::b) ++j;
        out.coords.coords.push_back(static_cast<int>(j - i));
        i = j;
    }
    if (fiber_code(out.target, out.coords) != code)
        throw std::logic_error("code of " + format_multiset(p) + " does not match its box shape");
    return out;
}

Partition max_parts_partition(const Partition& q) {
    delta(q);  // validates
    const auto& v = q.parts();
    if (v.empty()) return {};
    const int r = q.length();
    std::vector<int> parts;
    for (int i = 1; i < r; ++i) parts.push_back(v[static_cast<std::size_t>(i)] + 2);
    parts.insert(parts.end(), static_cast<std::size_t>(v[0] - 2 * r + 2), 1);
    return Partition(std::move(parts));
}

BoxCoordinates symmetry_map(const Partition& q, const BoxCoordinates& c,
                            const std::vector<int>& positions) {
    const DeltaVector d = delta(q);
    check_coords(d, c);
    BoxCoordinates out = c;
    std::vector<bool> flip(d.dim(), false);
    for (int j : positions) {
        if (j < 1 || static_cast<std::size_t>(j) > d.dim())
            throw std::invalid_argument("position " + std::to_string(j) + " out of range");
        flip[static_cast<std::size_t>(j - 1)] = true;
    }
    for (std::size_t j = 0; j < d.dim(); ++j)
        if (flip[j]) out.coords[j] = d.deltas[j] - c.coords[j] + 1;
    return out;
}

std::vector<FiberPair> fiber_bijection(const Partition& q, const Partition& r,
                                       const std::vector<int>& sigma) {
    const DeltaVector dq = delta(q);
    const DeltaVector dr = delta(r);
    const std::size_t k = dq.dim();
    if (dr.dim() != k || sigma.size() != k)
        throw std::invalid_argument("delta vectors and permutation must have equal length");
    std::vector<int> sorted(sigma);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t j = 0; j < k; ++j)
        if (sorted[j] != static_cast<int>(j + 1))
            throw std::invalid_argument("sigma is not a permutation of 1..k");
    for (std::size_t j = 0; j < k; ++j)
        if (dr.deltas[j] != dq.deltas[static_cast<std::size_t>(sigma[j] - 1)])
            throw std::invalid_argument("delta(r) is not the sigma-permutation of delta(q)");

    std::vector<FiberPair> out;
    for (const FiberEntry& e : fiber(q)) {
        BoxCoordinates target{std::vector<int>(k)};
        for (std::size_t j = 0; j < k; ++j)
            target.coords[j] = e.coords.coords[static_cast<std::size_t>(sigma[j] - 1)];
        out.push_back(
            FiberPair{e.coords, e.partition, target, to_partition(decode(fiber_code(r, target)))});
    }
    return out;
}

}  // namespace burge
