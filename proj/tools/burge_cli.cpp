#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "burge/box_inverse.hpp"
#include "burge/burge_code.hpp"
#include "burge/matrix_oracle.hpp"
#include "burge/oblak.hpp"
#include "burge/sweep.hpp"
#include "burge/word_bijections.hpp"

using json = nlohmann::ordered_json;
using namespace burge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

bool g_json = false;

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string join(const std::vector<int>& xs, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
    return out;
}

std::string tuple(const std::vector<int>& xs) { return "(" + join(xs) + ")"; }

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    std::string body = text;
    if (!body.empty() && (body.front() == '(' || body.front() == '[')) body = body.substr(1);
    if (!body.empty() && (body.back() == ')' || body.back() == ']')) body.pop_back();
    std::stringstream ss(body);
    std::string item;
    const bool bracketed = !text.empty() && (text.front() == '(' || text.front() == '[');
    std::size_t column = bracketed ? 2 : 1;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size())
            throw ParseError("expected an integer", text, column);
        out.push_back(v);
        column += item.size() + 1;
    }
    return out;
}

json frequency_json(const FrequencySeq& f) { return json(f.entries()); }

json partition_json(const Partition& p) { return format_multiset(p); }

void print_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    const auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t c = 0; c < r.size(); ++c)
            std::cout << (c ? "  " : "") << std::left << std::setw(static_cast<int>(width[c])) << r[c];
        std::cout << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
}

int cmd_encode(const std::string& arg) {
    const Partition p = parse_partition(arg);
    const BurgeWord w = encode(p);
    if (g_json)
        emit({{"partition", partition_json(p)}, {"frequency", frequency_json(to_frequency(p))}, {"code", w.str()}});
    else
        std::cout << w.str() << '\n';
    return kExitOk;
}

int cmd_decode(const std::string& arg) {
    const FrequencySeq f = decode(arg);
    const Partition p = to_partition(f);
    if (g_json)
        emit({{"code", BurgeWord::parse(arg).str()}, {"partition", partition_json(p)}, {"frequency", frequency_json(f)}});
    else
        std::cout << format_multiset(p) << '\n';
    return kExitOk;
}

int cmd_dmap(const std::string& arg) {
    const Partition p = parse_partition(arg);
    const Partition d = descent_map(p);
    if (g_json)
        emit({{"partition", partition_json(p)}, {"code", encode(p).str()}, {"descent_map", partition_json(d)}});
    else
        std::cout << format_plain(d) << '\n';
    return kExitOk;
}

int cmd_chain(const std::string& arg) {
    const Partition p = parse_partition(arg);
    const BurgeChain c = chain(to_frequency(p));
    if (g_json) {
        json states = json::array();
        for (std::size_t i = 0; i < c.states.size(); ++i)
            states.push_back({{"i", i},
                              {"frequency", frequency_json(c.states[i])},
                              {"partition", partition_json(to_partition(c.states[i]))},
                              {"letter", std::string(1, c.word.str()[i])}});
        emit({{"code", c.word.str()}, {"states", states}});
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < c.states.size(); ++i)
        rows.push_back({std::to_string(i), format_frequency(c.states[i]),
                        format_multiset(to_partition(c.states[i])), std::string(1, c.word.str()[i])});
    print_table({"i", "f", "partition", "letter"}, rows);
    std::cout << "code " << c.word.str() << '\n';
    return kExitOk;
}

json chain_json(const OblakChain& c) {
    json states = json::array();
    for (const FrequencySeq& s : c.states) states.push_back(frequency_json(s));
    return {{"indices", c.indices}, {"steps", c.steps}, {"states", states},
            {"valuation", partition_json(c.valuation())}};
}

int cmd_oblak(const std::string& arg) {
    const FrequencySeq f = to_frequency(parse_partition(arg));
    std::vector<int> indices;
    for (FrequencySeq s = f; !s.empty();) {
        indices.push_back(maximal_indices(s).front());
        s = annihilate(s, indices.back());
    }
    const OblakChain c = chain_from_indices(f, indices);
    if (g_json) {
        emit(chain_json(c));
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k < c.indices.size(); ++k)
        rows.push_back({std::to_string(k + 1), format_frequency(c.states[k]), std::to_string(c.indices[k]),
                        std::to_string(c.steps[k])});
    print_table({"k", "state", "index", "value"}, rows);
    std::cout << "valuation " << format_multiset(c.valuation()) << '\n';
    return kExitOk;
}

int cmd_oblak_chains(const std::string& arg, std::size_t limit) {
    const FrequencySeq f = to_frequency(parse_partition(arg));
    const auto chains = oblak_all_chains(f, limit);
    if (g_json) {
        json out = json::array();
        for (const auto& c : chains) out.push_back(chain_json(c));
        emit(out);
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : chains) rows.push_back({tuple(c.indices), format_multiset(c.valuation())});
    print_table({"indices", "valuation"}, rows);
    return kExitOk;
}

int cmd_check_square(const std::string& arg, int index) {
    const FrequencySeq f = to_frequency(parse_partition(arg));
    const FrequencySeq df = apply_del(f);
    const bool ok = check_commuting_square(f, index);
    if (g_json) {
        emit({{"frequency", frequency_json(f)},
              {"index", index},
              {"val", evaluate(f, index)},
              {"val_del", evaluate(df, index)},
              {"ann_del", frequency_json(annihilate(df, index))},
              {"del_ann", frequency_json(apply_del(annihilate(f, index)))},
              {"commutes", ok}});
        return kExitOk;
    }
    std::cout << "val " << evaluate(f, index) << " -> " << evaluate(df, index) << '\n'
              << "ann(del f) " << format_frequency(annihilate(df, index)) << '\n'
              << "del(ann f) " << format_frequency(apply_del(annihilate(f, index))) << '\n'
              << (ok ? "commutes" : "does not commute") << '\n';
    return kExitOk;
}

int cmd_fiber(const std::string& arg) {
    const Partition q = parse_partition(arg);
    const auto fib = fiber(q);
    if (g_json) {
        json out = json::array();
        for (const auto& e : fib)
            out.push_back({{"coords", e.coords.coords},
                           {"code", e.code.str()},
                           {"partition", partition_json(e.partition)},
                           {"parts", e.partition.length()}});
        emit(out);
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : fib)
        rows.push_back({tuple(e.coords.coords), e.code.str(), format_multiset(e.partition),
                        std::to_string(e.partition.length())});
    print_table({"coords", "code", "partition", "parts"}, rows);
    return kExitOk;
}

int cmd_coords(const std::string& arg) {
    const Partition p = parse_partition(arg);
    const CoordinateLookup c = coordinates_of(p);
    if (g_json)
        emit({{"partition", partition_json(p)}, {"descent_map", partition_json(c.target)}, {"coords", c.coords.coords}});
    else
        std::cout << format_multiset(c.target) << ' ' << tuple(c.coords.coords) << '\n';
    return kExitOk;
}

int cmd_maxparts(const std::string& arg) {
    const Partition q = parse_partition(arg);
    const Partition m = max_parts_partition(q);
    if (g_json)
        emit({{"partition", partition_json(q)}, {"max_parts", partition_json(m)}, {"parts", m.length()}});
    else
        std::cout << format_multiset(m) << '\n';
    return kExitOk;
}

int cmd_symmetry(const std::string& arg, const std::string& coords, const std::string& positions) {
    const Partition q = parse_partition(arg);
    const BoxCoordinates c{parse_ints(coords)};
    const BoxCoordinates r = symmetry_map(q, c, parse_ints(positions));
    const auto at = [&](const BoxCoordinates& x) { return to_partition(decode(fiber_code(q, x))); };
    if (g_json)
        emit({{"from_coords", c.coords}, {"from", partition_json(at(c))}, {"to_coords", r.coords}, {"to", partition_json(at(r))}});
    else
        std::cout << tuple(c.coords) << ' ' << format_multiset(at(c)) << " -> " << tuple(r.coords) << ' '
                  << format_multiset(at(r)) << '\n';
    return kExitOk;
}

int cmd_fiber_bijection(const std::string& q_arg, const std::string& r_arg, const std::string& sigma) {
    const auto pairs = fiber_bijection(parse_partition(q_arg), parse_partition(r_arg), parse_ints(sigma));
    if (g_json) {
        json out = json::array();
        for (const auto& p : pairs)
            out.push_back({{"from_coords", p.from_coords.coords}, {"from", partition_json(p.from)},
                           {"to_coords", p.to_coords.coords}, {"to", partition_json(p.to)}});
        emit(out);
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : pairs)
        rows.push_back({tuple(p.from_coords.coords), format_multiset(p.from), tuple(p.to_coords.coords),
                        format_multiset(p.to)});
    print_table({"coords", "partition", "image coords", "image"}, rows);
    return kExitOk;
}

int cmd_foata(const std::string& arg, const std::string& coords) {
    const Partition q = parse_partition(arg);
    std::vector<BoxCoordinates> targets;
    if (coords.empty())
        for (const auto& e : fiber(q)) targets.push_back(e.coords);
    else
        targets.push_back(BoxCoordinates{parse_ints(coords)});
    json out = json::array();
    std::vector<std::vector<std::string>> rows;
    for (const BoxCoordinates& c : targets) {
        const BurgeWord code = fiber_code(q, c);
        const Word w = foata_fiber(q, c);
        const Partition h = path_to_partition(w);
        out.push_back({{"coords", c.coords}, {"code", code.str()}, {"foata", w.str()},
                       {"hook_partition", partition_json(h)}, {"parts", h.length()}});
        rows.push_back({tuple(c.coords), code.str(), w.str(), format_multiset(h)});
    }
    if (g_json)
        emit(coords.empty() ? out : out.front());
    else
        print_table({"coords", "code", "foata", "partition"}, rows);
    return kExitOk;
}

int cmd_hooks(const std::string& arg) {
    const Partition p = parse_partition(arg);
    const Partition h = diagonal_hooks(p);
    if (g_json)
        emit({{"partition", partition_json(p)}, {"durfee", durfee(p)}, {"diagonal_hooks", partition_json(h)}});
    else
        std::cout << format_multiset(h) << '\n';
    return kExitOk;
}

int cmd_durfee(const std::string& arg) {
    const Partition p = parse_partition(arg);
    if (g_json)
        emit({{"partition", partition_json(p)}, {"durfee", durfee(p)}});
    else
        std::cout << durfee(p) << '\n';
    return kExitOk;
}

int cmd_verify(const std::string& arg, std::uint32_t field, int trials, bool witness_only, std::uint64_t seed) {
    const Partition p = parse_partition(arg);
    const RestrictionReport r = verify_restriction(p, PrimeField(field), trials, seed, witness_only);
    const std::string status = r.passed ? "pass" : "fail";
    if (g_json) {
        json random = json::array();
        for (const Partition& x : r.random_observed) random.push_back(partition_json(x));
        emit({{"partition", partition_json(p)},
              {"field", field},
              {"expected", partition_json(r.expected)},
              {"observed", partition_json(r.witness_observed)},
              {"random_observed", random},
              {"status", status}});
    } else {
        std::cout << "partition " << format_multiset(p) << " over GF(" << field << ")\n"
                  << "expected  " << format_multiset(r.expected) << '\n'
                  << "witness   " << format_multiset(r.witness_observed) << '\n';
        for (std::size_t t = 0; t < r.random_observed.size(); ++t)
            std::cout << "random " << t + 1 << "  " << format_multiset(r.random_observed[t]) << '\n';
        std::cout << status << '\n';
    }
    return r.passed ? kExitOk : kExitFailed;
}

int cmd_scan_max(const std::string& arg, std::uint32_t field, std::uint64_t budget) {
    const Partition p = parse_partition(arg);
    const DominanceScanReport r = exhaustive_max_type(p, PrimeField(field), budget);
    const std::string status = r.passed ? "pass" : "fail";
    const std::string maximum = r.maximum ? format_multiset(*r.maximum) : "none";
    if (g_json) {
        json types = json::object();
        for (const auto& [t, n] : r.types) types[format_multiset(t)] = n;
        emit({{"partition", partition_json(p)},
              {"field", field},
              {"scanned", r.scanned},
              {"non_nilpotent", r.non_nilpotent},
              {"types", types},
              {"maximum", maximum},
              {"expected", partition_json(r.expected)},
              {"status", status}});
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& [t, n] : r.types) rows.push_back({format_multiset(t), std::to_string(n)});
        print_table({"type", "count"}, rows);
        std::cout << "scanned " << r.scanned << ", maximum " << maximum << ", expected "
                  << format_multiset(r.expected) << '\n'
                  << status << '\n';
    }
    return r.passed ? kExitOk : kExitFailed;
}

int print_sweep(const SweepReport& report) {
    if (g_json) {
        json out = json::array();
        for (const SuiteResult& s : report.suites) {
            json j = {{"suite", s.name}, {"passed", s.passed}, {"failed", s.failed}, {"skipped", s.skipped}};
            if (s.first_failure) {
                j["counterexample"] = partition_json(*s.first_failure);
                j["detail"] = s.failure_detail;
                j["reproduce"] = s.failure_command;
            }
            out.push_back(j);
        }
        emit(out);
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const SuiteResult& s : report.suites)
            rows.push_back({s.name, std::to_string(s.passed), std::to_string(s.failed), std::to_string(s.skipped)});
        print_table({"suite", "passed", "failed", "skipped"}, rows);
        for (const SuiteResult& s : report.suites)
            if (s.first_failure)
                std::cout << s.name << " counterexample " << format_multiset(*s.first_failure) << ": "
                          << s.failure_detail << "\n  reproduce: " << s.failure_command << '\n';
    }
    return report.ok() ? kExitOk : kExitFailed;
}

int cmd_check(const std::string& suite, const std::string& arg, const SweepConfig& config) {
    const Partition p = parse_partition(arg);
    const CheckOutcome r = check_instance(suite, p, config);
    const char* status = r.status == CheckStatus::pass ? "pass" : r.status == CheckStatus::fail ? "fail" : "skip";
    if (g_json)
        emit({{"suite", suite}, {"partition", partition_json(p)}, {"status", status}, {"detail", r.detail}});
    else
        std::cout << suite << ' ' << format_multiset(p) << ": " << status
                  << (r.detail.empty() ? "" : " (" + r.detail + ")") << '\n';
    return r.status == CheckStatus::fail ? kExitFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Burge codes, descent-map fibers, Oblak chains and a finite-field oracle"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", g_json, "Emit JSON");

    std::uint32_t field = kDefaultSampleField;
    std::string arg, arg2, coords, positions, sigma, suite, checks;
    int index = 0, trials = 5, threads = 0, max_n = 10;
    std::size_t limit = kDefaultChainLimit;
    std::uint64_t seed = 1, budget = kDefaultScanBudget;
    bool witness_only = false;
    std::uint32_t scan_field = kDefaultScanField;

    const auto partition_arg = [&](CLI::App* sub) {
        sub->add_option("partition", arg, "Partition, e.g. 5,3,2,2,1 or [4^2,3] or f:(1,2,1)")->required();
    };
    const auto field_opt = [&](CLI::App* sub, std::uint32_t& target) {
        sub->add_option("--field", target, "Prime modulus")->envname("BURGE_FIELD");
    };

    auto* encode_cmd = app.add_subcommand("encode", "Burge code of a partition");
    partition_arg(encode_cmd);
    auto* decode_cmd = app.add_subcommand("decode", "Partition with a given Burge code");
    decode_cmd->add_option("word", arg, "Word in (a*b)*a")->required();
    auto* dmap_cmd = app.add_subcommand("dmap", "Descent map of a partition");
    partition_arg(dmap_cmd);
    auto* chain_cmd = app.add_subcommand("chain", "Burge chain of a partition");
    partition_arg(chain_cmd);
    auto* oblak_cmd = app.add_subcommand("oblak", "Oblak process with smallest maximal indices");
    partition_arg(oblak_cmd);
    auto* chains_cmd = app.add_subcommand("oblak-chains", "All Oblak chains up to index equivalence");
    partition_arg(chains_cmd);
    chains_cmd->add_option("--limit", limit, "Maximum number of chains");
    auto* square_cmd = app.add_subcommand("check-square", "Does val/ann commute with demotion at an index");
    partition_arg(square_cmd);
    square_cmd->add_option("--index", index, "Index i >= 0")->required()->check(CLI::NonNegativeNumber);
    auto* fiber_cmd = app.add_subcommand("fiber", "Preimage of a super-distinct partition under the descent map");
    partition_arg(fiber_cmd);
    auto* coords_cmd = app.add_subcommand("coords", "Box coordinates of a partition in its fiber");
    partition_arg(coords_cmd);
    auto* maxparts_cmd = app.add_subcommand("maxparts", "Fiber element with the most parts");
    partition_arg(maxparts_cmd);
    auto* symmetry_cmd = app.add_subcommand("symmetry", "Reflect box coordinates at chosen positions");
    partition_arg(symmetry_cmd);
    symmetry_cmd->add_option("--coords", coords, "Coordinates, e.g. 1,2,3")->required();
    symmetry_cmd->add_option("--positions", positions, "1-based positions to reflect")->required();
    auto* bijection_cmd = app.add_subcommand("fiber-bijection", "Pair two fibers with permuted box sides");
    partition_arg(bijection_cmd);
    bijection_cmd->add_option("other", arg2, "Second super-distinct partition")->required();
    bijection_cmd->add_option("--sigma", sigma, "1-based permutation")->required();
    auto* foata_cmd = app.add_subcommand("foata", "Foata image of fiber codes and the resulting partitions");
    partition_arg(foata_cmd);
    foata_cmd->add_option("--coords", coords, "Single coordinate tuple; default is the whole fiber");
    auto* hooks_cmd = app.add_subcommand("hooks", "Diagonal hook lengths");
    partition_arg(hooks_cmd);
    auto* durfee_cmd = app.add_subcommand("durfee", "Durfee square side");
    partition_arg(durfee_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Restriction type of the witness and random U_B elements");
    verify_cmd->add_option("--partition,partition", arg, "Jordan type of B")->required();
    field_opt(verify_cmd, field);
    verify_cmd->add_option("--trials", trials, "Random trials")->check(CLI::NonNegativeNumber);
    verify_cmd->add_flag("--witness-only", witness_only, "Skip random trials");
    verify_cmd->add_option("--seed", seed, "Random seed");
    auto* scan_cmd = app.add_subcommand("scan-max", "Exhaustive dominance scan of the nilpotent commutator");
    scan_cmd->add_option("--partition,partition", arg, "Jordan type of B")->required();
    scan_cmd->add_option("--field", scan_field, "Prime modulus");
    scan_cmd->add_option("--budget", budget, "Maximum number of matrices");

    auto* sweep_cmd = app.add_subcommand("sweep", "Run property suites over all partitions up to a size");
    sweep_cmd->add_option("--max-n", max_n, "Largest size")->check(CLI::NonNegativeNumber);
    sweep_cmd->add_option("--checks", checks, "Comma-separated suites (default all)");
    field_opt(sweep_cmd, field);
    sweep_cmd->add_option("--trials", trials, "Random trials for matrix-restriction")->check(CLI::NonNegativeNumber);
    sweep_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    sweep_cmd->add_option("--seed", seed, "Random seed");
    sweep_cmd->add_flag("--list", "List suite names");
    auto* check_cmd = app.add_subcommand("check", "Run one suite on one partition");
    check_cmd->add_option("--suite", suite, "Suite name")->required();
    partition_arg(check_cmd);
    field_opt(check_cmd, field);
    check_cmd->add_option("--trials", trials, "Random trials")->check(CLI::NonNegativeNumber);
    check_cmd->add_option("--seed", seed, "Random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*encode_cmd) return cmd_encode(arg);
        if (*decode_cmd) return cmd_decode(arg);
        if (*dmap_cmd) return cmd_dmap(arg);
        if (*chain_cmd) return cmd_chain(arg);
        if (*oblak_cmd) return cmd_oblak(arg);
        if (*chains_cmd) return cmd_oblak_chains(arg, limit);
        if (*square_cmd) return cmd_check_square(arg, index);
        if (*fiber_cmd) return cmd_fiber(arg);
        if (*coords_cmd) return cmd_coords(arg);
        if (*maxparts_cmd) return cmd_maxparts(arg);
        if (*symmetry_cmd) return cmd_symmetry(arg, coords, positions);
        if (*bijection_cmd) return cmd_fiber_bijection(arg, arg2, sigma);
        if (*foata_cmd) return cmd_foata(arg, coords);
        if (*hooks_cmd) return cmd_hooks(arg);
        if (*durfee_cmd) return cmd_durfee(arg);
        if (*verify_cmd) return cmd_verify(arg, field, trials, witness_only, seed);
        if (*scan_cmd) return cmd_scan_max(arg, scan_field, budget);
        if (*check_cmd) {
            SweepConfig config;
            config.field = field;
            config.trials = trials;
            config.seed = seed;
            return cmd_check(suite, arg, config);
        }
        if (*sweep_cmd) {
            if (sweep_cmd->count("--list")) {
                for (const std::string& name : suite_names()) std::cout << name << '\n';
                return kExitOk;
            }
            SweepConfig config;
            config.max_n = max_n;
            config.field = field;
            config.trials = trials;
            config.threads = threads;
            config.seed = seed;
            std::stringstream ss(checks);
            for (std::string name; std::getline(ss, name, ',');)
                if (!name.empty()) config.checks.push_back(name);
            return print_sweep(run_sweep(config));
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.pretty() << '\n';
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
