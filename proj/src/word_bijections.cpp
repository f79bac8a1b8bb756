#include "burge/word_bijections.hpp"

namespace burge {

std::int64_t inv(const Word& w) {
    std::int64_t bs = 0, total = 0;
    for (Letter x : w.letters()) {
        if (x == Letter::b)
            ++bs;
        else
            total += bs;
    }
    return total;
}

Word foata_fiber(const Partition& q, const BoxCoordinates& c) {
    const DeltaVector d = delta(q);
    fiber_code(q, c);  // validates the coordinates
    const std::size_t k = d.dim();
    Word w;
    for (std::size_t j = k; j-- > 0;) {
        w.push_back(Letter::b);
        w.append(Letter::a, static_cast<std::size_t>(d.deltas[j] - c.coords[j]));
    }
    for (std::size_t j = 0; j < k; ++j) {
        w.append(Letter::b, static_cast<std::size_t>(c.coords[j] - 1));
        w.push_back(Letter::a);
    }
    // k = 0 leaves the single trailing a of the empty fiber code.
    if (k == 0) w.push_back(Letter::a);
    return w;
}

Partition path_to_partition(const Word& w) {
    std::vector<int> rows;
    int east = 0;
    const auto& letters = w.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        if (*it == Letter::a)
            ++east;
        else if (east > 0)
            rows.push_back(east);
    }
    return Partition(std::move(rows));
}

Partition conjugate(const Partition& p) {
    std::vector<int> out(static_cast<std::size_t>(p.largest()), 0);
    for (int x : p.parts())
        for (int c = 0; c < x; ++c) ++out[static_cast<std::size_t>(c)];
    return Partition(std::move(out));
}

int durfee(const Partition& p) {
    int d = 0;
    while (d < p.length() && p[static_cast<std::size_t>(d)] >= d + 1) ++d;
    return d;
}

Partition diagonal_hooks(const Partition& p) {
    const Partition t = conjugate(p);
    std::vector<int> hooks;
    for (int i = 1; i <= durfee(p); ++i) {
        const auto u = static_cast<std::size_t>(i - 1);
        hooks.push_back(p[u] - i + t[u] - i + 1);
    }
    return Partition(std::move(hooks));
}

Partition hook_partner(const Partition& q, const BoxCoordinates& c) {
    return path_to_partition(foata_fiber(q, c));
}

}  // namespace burge
