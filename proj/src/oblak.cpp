#include "burge/oblak.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "burge/burge_code.hpp"

namespace burge {

std::int64_t evaluate(const FrequencySeq& f, int i) {
    if (i < 0) throw std::invalid_argument("index must be nonnegative");
    if (i == 0) i = 1;
    std::int64_t tail = 0;
    for (int j = i + 2; j <= f.max_index(); ++j) tail += f[j];
    return std::int64_t{i} * f[i] + std::int64_t{i + 1} * f[i + 1] + 2 * tail;
}

FrequencySeq annihilate(const FrequencySeq& f, int i) {
    if (i < 0) throw std::invalid_argument("index must be nonnegative");
    if (i == 0) i = 1;
    std::vector<int> v;
    for (int j = 1; j <= f.max_index(); ++j)
        if (j != i && j != i + 1) v.push_back(f[j]);
    return FrequencySeq(std::move(v));
}

std::vector<int> maximal_indices(const FrequencySeq& f) {
    std::vector<int> out;
    std::int64_t best = 0;
    for (int i = 0; i <= f.max_index(); ++i) {
        const std::int64_t v = evaluate(f, i);
        if (v == 0 || v < best) continue;
        if (v > best) {
            best = v;
            out.clear();
        }
        out.push_back(i);
    }
    return out;
}

std::vector<int> right_admissible(const FrequencySeq& f) {
    std::vector<int> out;
    for (int i = 1; i <= f.max_index(); ++i)
        if (f[i] > 0 && (f[i + 1] > 0 || (f[i - 1] == 0 && f[i + 1] == 0))) out.push_back(i);
    return out;
}

std::vector<int> left_admissible(const FrequencySeq& f) {
    std::vector<int> out;
    for (int i = 0; i < f.max_index(); ++i)
        if (f[i + 1] > 0 && (f[i] > 0 || (f[i] == 0 && f[i + 2] == 0))) out.push_back(i);
    return out;
}

bool IndexClass::contains(int i) const noexcept {
    if (std::find(members.begin(), members.end(), i) != members.end()) return true;
    return unbounded && !members.empty() && i > members.back();
}

std::vector<IndexClass> equivalent_indices(const FrequencySeq& f) {
    // Every index above max_index leaves f unchanged, and no index at or
    // below it does, so those form the tail class.
    const int z = f.max_index();
    std::map<FrequencySeq, std::size_t> slot;
    std::vector<IndexClass> classes;
    for (int i = 0; i <= z; ++i) {
        const auto key = annihilate(f, i);
        auto [it, fresh] = slot.try_emplace(key, classes.size());
        if (fresh) classes.emplace_back();
        classes[it->second].members.push_back(i);
    }
    if (z == 0) {
        classes.assign(1, IndexClass{{0}, true});
    } else {
        classes.push_back(IndexClass{{z + 1}, true});
    }
    return classes;
}

Partition OblakChain::valuation() const {
    std::vector<int> parts;
    for (auto q : steps) parts.push_back(static_cast<int>(q));
    return Partition(std::move(parts), std::max<int>(kDefaultMaxPart, int(states.front().size())));
}

Partition oblak(const FrequencySeq& f) {
    std::vector<int> parts;
    FrequencySeq cur = f;
    while (!cur.empty()) {
        const int i = maximal_indices(cur).front();
        parts.push_back(static_cast<int>(evaluate(cur, i)));
        cur = annihilate(cur, i);
    }
    return Partition(std::move(parts), std::max<int>(kDefaultMaxPart, int(f.size())));
}

namespace {

bool is_maximal(const FrequencySeq& f, int i) {
    const auto m = maximal_indices(f);
    return std::find(m.begin(), m.end(), i) != m.end();
}

}  // namespace

OblakChain chain_from_indices(const FrequencySeq& f, const std::vector<int>& indices) {
    OblakChain c{{f}, {}, {}};
    for (int i : indices) {
        const FrequencySeq& cur = c.states.back();
        if (cur.empty()) throw std::invalid_argument("index sequence continues past ()");
        if (i < 0 || !is_maximal(cur, i))
            throw std::invalid_argument("index " + std::to_string(i) + " is not maximal for " +
                                        format_frequency(cur));
        c.indices.push_back(i);
        c.steps.push_back(evaluate(cur, i));
        c.states.push_back(annihilate(cur, i));
    }
    if (!c.states.back().empty())
        throw std::invalid_argument("index sequence stops before reaching ()");
    return c;
}

bool is_maximal_index_sequence(const FrequencySeq& f, const std::vector<int>& indices) {
    try {
        chain_from_indices(f, indices);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

bool is_valid_chain(const OblakChain& c) {
    const std::size_t k = c.indices.size();
    if (c.states.size() != k + 1 || c.steps.size() != k) return false;
    if (!c.states.back().empty()) return false;
    for (std::size_t r = 1; r <= k; ++r) {
        const FrequencySeq& prev = c.states[r - 1];
        if (prev.empty()) return false;
        const int i = c.indices[r - 1];
        if (!is_maximal(prev, i)) return false;
        if (annihilate(prev, i) != c.states[r]) return false;
        if (prev.size() - c.states[r].size() != c.steps[r - 1]) return false;
    }
    return true;
}

std::vector<OblakChain> oblak_all_chains(const FrequencySeq& f, std::size_t limit) {
    std::vector<OblakChain> out;
    OblakChain partial{{f}, {}, {}};

    auto recurse = [&](auto&& self) -> void {
        const FrequencySeq cur = partial.states.back();
        if (cur.empty()) {
            if (out.size() >= limit)
                throw BudgetExceeded("more than " + std::to_string(limit) + " Oblak chains");
            out.push_back(partial);
            return;
        }
        // One representative per equivalence class of maximal indices.
        std::vector<FrequencySeq> seen;
        for (int i : maximal_indices(cur)) {
            FrequencySeq next = annihilate(cur, i);
            if (std::find(seen.begin(), seen.end(), next) != seen.end()) continue;
            seen.push_back(next);
            partial.indices.push_back(i);
            partial.steps.push_back(evaluate(cur, i));
            partial.states.push_back(std::move(next));
            self(self);
            partial.states.pop_back();
            partial.steps.pop_back();
            partial.indices.pop_back();
        }
    };
    recurse(recurse);
    std::sort(out.begin(), out.end(),
              [](const OblakChain& x, const OblakChain& y) { return x.indices < y.indices; });
    return out;
}

OblakChain del_chain(const OblakChain& c) {
    std::size_t keep = c.states.size();
    if (keep >= 2 && c.states[keep - 2] == FrequencySeq{1}) --keep;

    OblakChain out;
    for (std::size_t r = 0; r < keep; ++r) out.states.push_back(apply_del(c.states[r]));
    for (std::size_t r = 1; r < out.states.size(); ++r) {
        const FrequencySeq& prev = out.states[r - 1];
        int chosen = -1;
        for (int i : maximal_indices(prev)) {
            if (annihilate(prev, i) == out.states[r]) {
                chosen = i;
                break;
            }
        }
        if (chosen < 0)
            throw std::logic_error("demoted chain has no maximal index from " +
                                   format_frequency(prev) + " to " +
                                   format_frequency(out.states[r]));
        out.indices.push_back(chosen);
        out.steps.push_back(evaluate(prev, chosen));
    }
    return out;
}

bool check_commuting_square(const FrequencySeq& f, int i) {
    const FrequencySeq del = apply_del(f);
    return evaluate(del, i) == evaluate(f, i) - 1 &&
           annihilate(del, i) == apply_del(annihilate(f, i));
}

}  // namespace burge
