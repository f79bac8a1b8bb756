#include "burge/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include "burge/box_inverse.hpp"
#include "burge/burge_code.hpp"
#include "burge/oblak.hpp"
#include "burge/word_bijections.hpp"

namespace burge {

namespace {

using Check = CheckOutcome (*)(const Partition&, const SweepConfig&);

CheckOutcome fail(std::string detail) { return {CheckStatus::fail, std::move(detail)}; }

CheckOutcome check_lem_stats(const Partition& p, const SweepConfig&) {
    const FrequencySeq f = to_frequency(p);
    const FrequencySeq d = apply_del(f);
    const bool in_b = in_class_B(f);
    if (d.length() != f.length() - (in_b ? 1 : 0)) return fail("length of del f");
    if (d.size() != f.size() - two_measure(f)) return fail("size of del f");
    if (two_measure(d) != two_measure(f) - ((in_b && !in_class_B(d)) ? 1 : 0))
        return fail("2-measure of del f");
    const FrequencySeq a = apply_a(f);
    const FrequencySeq b = apply_b(f);
    if (in_class_B(a)) return fail("a(f) not in class A");
    if (!in_class_B(b)) return fail("b(f) not in class B");
    if (apply_del(a) != f) return fail("del a(f) != f");
    if (apply_del(b) != f) return fail("del b(f) != f");
    return {};
}

CheckOutcome check_prop_stats(const Partition& p, const SweepConfig&) {
    const FrequencySeq f = to_frequency(p);
    const BurgeWord code = encode(f);
    const Word& w = code.word();
    if (static_cast<std::int64_t>(w.count(Letter::b)) != f.length())
        return fail("number of b's in " + code.str() + " differs from the length");
    if (maj(w) != f.size()) return fail("maj of " + code.str() + " differs from the size");
    if (des(w) != two_measure(f)) return fail("des of " + code.str() + " differs from the 2-measure");
    if (decode(code) != f) return fail("decode(encode(f)) != f");
    if (!f.empty()) {
        const std::vector<Letter> rest(w.letters().begin() + 1, w.letters().end());
        if (encode(apply_del(f)).word() != Word(rest)) return fail("code of del f is not the shifted code");
        if (descent_map(apply_del(p)) != reduce(descent_map(p))) return fail("descent map of del P");
    }
    return {};
}

CheckOutcome check_characterization(const Partition& p, const SweepConfig&) {
    const SuperDistinctReport r = characterize_superdistinct(p);
    if (!r.consistent()) return fail("the seven conditions disagree");
    if (!is_super_distinct(descent_map(p))) return fail("descent map is not super-distinct");
    if (descent_map(p).size() != p.size()) return fail("descent map changes the size");
    return {};
}

CheckOutcome check_main_vs_oblak(const Partition& p, const SweepConfig&) {
    const Partition d = descent_map(p);
    const Partition o = oblak(p);
    if (d != o) return fail("descent map " + format_multiset(d) + " but Oblak " + format_multiset(o));
    return {};
}

CheckOutcome check_cor_box(const Partition& q, const SweepConfig&) {
    const auto fib = fiber(q);
    const DeltaVector d = delta(q);
    if (static_cast<long long>(fib.size()) != d.volume()) return fail("fiber size differs from the box volume");
    std::set<Partition> from_box;
    for (const FiberEntry& e : fib) {
        if (descent_map(e.partition) != q) return fail(format_multiset(e.partition) + " has another descent map");
        if (e.partition.length() != e.coords.sum())
            return fail(format_multiset(e.partition) + " has the wrong number of parts");
        if (encode(e.partition) != e.code) return fail("code mismatch for " + format_multiset(e.partition));
        if (coordinates_of(e.partition).coords != e.coords)
            return fail("coordinates do not round-trip for " + format_multiset(e.partition));
        from_box.insert(e.partition);
    }
    if (from_box.size() != fib.size()) return fail("repeated fiber element");
    std::set<Partition> grouped;
    for_each_partition(static_cast<int>(q.size()), [&](const Partition& p) {
        if (descent_map(p) == q) grouped.insert(p);
    });
    if (grouped != from_box) return fail("grouped preimage differs from the enumerated box");
    if (!fib.empty()) {
        const auto longest = std::max_element(fib.begin(), fib.end(), [](const auto& x, const auto& y) {
            return x.partition.length() < y.partition.length();
        });
        if (longest->partition != max_parts_partition(q)) return fail("max-parts formula");
    }
    return {};
}

CheckOutcome check_khatami(const Partition& p, const SweepConfig&) {
    const FrequencySeq f = to_frequency(p);
    const Partition expected = oblak(f);
    std::vector<OblakChain> chains;
    try {
        chains = oblak_all_chains(f);
    } catch (const BudgetExceeded& e) {
        return {CheckStatus::skip, e.what()};
    }
    for (const OblakChain& c : chains) {
        if (!is_valid_chain(c)) return fail("invalid chain");
        if (c.valuation() != expected)
            return fail("valuation " + format_multiset(c.valuation()) + " differs from " +
                        format_multiset(expected));
    }
    const auto right = right_admissible(f);
    const auto left = left_admissible(f);
    for (int i : maximal_indices(f)) {
        const FrequencySeq target = annihilate(f, i);
        const auto equivalent = [&](const std::vector<int>& set) {
            return std::any_of(set.begin(), set.end(), [&](int j) { return annihilate(f, j) == target; });
        };
        if (!equivalent(right)) return fail("maximal index " + std::to_string(i) + " has no right admissible twin");
        if (!equivalent(left)) return fail("maximal index " + std::to_string(i) + " has no left admissible twin");
    }
    return {};
}

CheckOutcome check_oblakburge(const Partition& p, const SweepConfig&) {
    const FrequencySeq f = to_frequency(p);
    const FrequencySeq df = apply_del(f);
    std::vector<OblakChain> chains;
    try {
        chains = oblak_all_chains(f);
    } catch (const BudgetExceeded& e) {
        return {CheckStatus::skip, e.what()};
    }
    for (const OblakChain& c : chains) {
        const OblakChain d = del_chain(c);
        if (!is_valid_chain(d)) return fail("del chain is not an Oblak chain");
        if (d.states.front() != df) return fail("del chain does not start at del f");
        if (d.valuation() != reduce(c.valuation())) return fail("valuation not decremented");
    }
    const std::vector<int> maximal = maximal_indices(f);
    const std::vector<int> maximal_del = maximal_indices(df);
    for (int i : left_admissible(f)) {
        if (!check_commuting_square(f, i)) return fail("square fails at left admissible " + std::to_string(i));
        const bool is_max = std::find(maximal.begin(), maximal.end(), i) != maximal.end();
        if (is_max && f != FrequencySeq{1}) {
            if (std::find(maximal_del.begin(), maximal_del.end(), i) == maximal_del.end())
                return fail("maximal left admissible " + std::to_string(i) + " not maximal for del f");
            if (evaluate(df, i) != evaluate(f, i) - 1) return fail("evaluation not decremented");
        }
    }
    for (int i : right_admissible(df))
        if (!check_commuting_square(f, i)) return fail("square fails at right admissible " + std::to_string(i));
    return {};
}

CheckOutcome check_foata_hooks(const Partition& q, const SweepConfig&) {
    std::set<Partition> brute;
    for_each_partition(static_cast<int>(q.size()), [&](const Partition& p) {
        if (diagonal_hooks(p) == q) brute.insert(p);
    });
    std::set<Partition> image;
    for (const FiberEntry& e : fiber(q)) {
        const Word w = foata_fiber(q, e.coords);
        if (inv(w) != maj(e.code.word())) return fail("inv of the Foata image differs from maj");
        const Partition h = path_to_partition(w);
        if (h.size() != q.size()) return fail(format_multiset(h) + " has the wrong size");
        if (h.length() != e.coords.sum()) return fail(format_multiset(h) + " has the wrong length");
        if (diagonal_hooks(h) != q) return fail(format_multiset(h) + " has other diagonal hooks");
        image.insert(h);
    }
    if (image.size() != brute.size() || image != brute)
        return fail("image has " + std::to_string(image.size()) + " partitions, expected " +
                    std::to_string(brute.size()));
    return {};
}

CheckOutcome check_restriction(const Partition& p, const SweepConfig& config) {
    const RestrictionReport r = verify_restriction(p, PrimeField(config.field), config.trials, config.seed);
    if (r.passed) return {};
    if (!r.witness_ok)
        return fail("witness gives " + format_multiset(r.witness_observed) + ", expected " +
                    format_multiset(r.expected));
    return fail(std::to_string(r.random_misses) + " random trials missed " + format_multiset(r.expected));
}

CheckOutcome check_dominance(const Partition& p, const SweepConfig& config) {
    DominanceScanReport r;
    try {
        r = exhaustive_max_type(p, PrimeField(config.field));
    } catch (const BudgetExceeded& e) {
        return {CheckStatus::skip, e.what()};
    }
    if (r.passed) return {};
    if (r.non_nilpotent) return fail(std::to_string(r.non_nilpotent) + " scanned matrices are not nilpotent");
    if (!r.maximum) return fail("no dominance maximum");
    return fail("maximum " + format_multiset(*r.maximum) + ", expected " + format_multiset(r.expected));
}

struct Suite {
    const char* name;
    Check check;
    bool super_distinct_only;
};

const std::vector<Suite>& registry() {
    static const std::vector<Suite> suites = {
        {"lem-stats", check_lem_stats, false},
        {"prop-stats", check_prop_stats, false},
        {"prop-characterization", check_characterization, false},
        {"thm-main-vs-oblak", check_main_vs_oblak, false},
        {"cor-box", check_cor_box, true},
        {"thm-oblakburge", check_oblakburge, false},
        {"prop-khatami", check_khatami, false},
        {"foata-hooks", check_foata_hooks, true},
        {"matrix-restriction", check_restriction, false},
        {"matrix-dominance", check_dominance, false},
    };
    return suites;
}

const Suite& find_suite(std::string_view name) {
    for (const Suite& s : registry())
        if (name == s.name) return s;
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const Suite& s : registry()) out.emplace_back(s.name);
        return out;
    }();
    return names;
}

bool is_suite(std::string_view name) {
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<Partition> suite_instances(std::string_view suite, int n) {
    const Suite& s = find_suite(suite);
    std::vector<Partition> out = partitions_of(n);
    if (s.super_distinct_only) std::erase_if(out, [](const Partition& p) { return !is_super_distinct(p); });
    return out;
}

CheckOutcome check_instance(std::string_view suite, const Partition& p, const SweepConfig& config) {
    const Suite& s = find_suite(suite);
    if (s.super_distinct_only && !is_super_distinct(p))
        return {CheckStatus::skip, format_multiset(p) + " is not super-distinct"};
    try {
        return s.check(p, config);
    } catch (const std::exception& e) {
        return fail(std::string("exception: ") + e.what());
    }
}

std::string reproducer(std::string_view suite, const Partition& p, const SweepConfig& config) {
    std::string cmd = "burge check --suite " + std::string(suite);
    if (suite == "matrix-restriction" || suite == "matrix-dominance")
        cmd += " --field " + std::to_string(config.field);
    if (suite == "matrix-restriction")
        cmd += " --trials " + std::to_string(config.trials) + " --seed " + std::to_string(config.seed);
    return cmd + " '" + format_multiset(p) + "'";
}

bool SweepReport::ok() const noexcept {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.failed == 0; });
}

SweepReport run_sweep(const SweepConfig& config) {
    if (config.max_n < 0) throw std::invalid_argument("max_n must be non-negative");
    std::vector<std::string> selected;
    for (const std::string& name : suite_names())
        if (config.checks.empty() ||
            std::find(config.checks.begin(), config.checks.end(), name) != config.checks.end())
            selected.push_back(name);
    for (const std::string& name : config.checks) find_suite(name);

    struct Task {
        std::size_t suite;
        Partition instance;
    };
    std::vector<Task> tasks;
    for (std::size_t s = 0; s < selected.size(); ++s)
        for (int n = 1; n <= config.max_n; ++n)
            for (Partition& p : suite_instances(selected[s], n)) tasks.push_back({s, std::move(p)});

    std::vector<CheckOutcome> outcomes(tasks.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();)
            outcomes[t] = check_instance(selected[tasks[t].suite], tasks[t].instance, config);
    };
    unsigned threads = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                          : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(tasks.size(), 1)));
    {
        std::vector<std::jthread> pool;
        for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
        worker();
    }

    SweepReport report;
    for (const std::string& name : selected) {
        SuiteResult r;
        r.name = name;
        report.suites.push_back(std::move(r));
    }
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        SuiteResult& r = report.suites[tasks[t].suite];
        switch (outcomes[t].status) {
            case CheckStatus::pass: ++r.passed; break;
            case CheckStatus::skip: ++r.skipped; break;
            case CheckStatus::fail:
                if (r.failed++ == 0) {
                    r.first_failure = tasks[t].instance;
                    r.failure_detail = outcomes[t].detail;
                    r.failure_command = reproducer(r.name, tasks[t].instance, config);
                }
                break;
        }
    }
    return report;
}

}  // namespace burge
