#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

#include "burge/box_inverse.hpp"
#include "burge/burge_code.hpp"
#include "burge/errors.hpp"
#include "burge/matrix_oracle.hpp"
#include "burge/oblak.hpp"
#include "burge/sweep.hpp"
#include "burge/word_bijections.hpp"

namespace py = pybind11;
using namespace burge;

namespace {

// Partitions arrive either as text ("5,3,2^2,1", "[4^2,3]", "e") or as a list of parts.
using PartitionArg = std::variant<std::string, std::vector<int>>;

Partition to_part(const PartitionArg& arg) {
    if (const auto* text = std::get_if<std::string>(&arg)) return parse_partition(*text);
    return Partition(std::get<std::vector<int>>(arg));
}

std::vector<int> parts(const Partition& p) { return p.parts(); }

std::vector<int> freq_list(const FrequencySeq& f) {
    std::vector<int> out;
    for (int i = 1; i <= f.max_index(); ++i) out.push_back(f[i]);
    return out;
}

std::string text(const Partition& p) { return format_multiset(p); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Burge codes, descent maps and their finite-field oracle";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("parse_partition", [](const std::string& s) { return parts(parse_partition(s)); }, py::arg("text"));
    m.def("format_partition", [](const PartitionArg& p) { return text(to_part(p)); }, py::arg("partition"));
    m.def("to_frequency", [](const PartitionArg& p) { return freq_list(to_frequency(to_part(p))); },
          py::arg("partition"));
    m.def("from_frequency", [](const std::vector<int>& f) { return parts(to_partition(FrequencySeq(f))); },
          py::arg("frequency"));
    m.def("two_measure", [](const PartitionArg& p) { return two_measure(to_frequency(to_part(p))); },
          py::arg("partition"));
    m.def("is_super_distinct", [](const PartitionArg& p) { return is_super_distinct(to_part(p)); },
          py::arg("partition"));
    m.def("partitions", [](int n) {
        std::vector<std::vector<int>> out;
        for_each_partition(n, [&](const Partition& p) { out.push_back(p.parts()); });
        return out;
    }, py::arg("n"));

    m.def("encode", [](const PartitionArg& p) { return encode(to_part(p)).str(); }, py::arg("partition"));
    m.def("decode", [](const std::string& w) { return parts(to_partition(decode(w))); }, py::arg("word"));
    m.def("descent_map", [](const PartitionArg& p) { return parts(descent_map(to_part(p))); },
          py::arg("partition"));
    m.def("apply_del", [](const PartitionArg& p) { return parts(apply_del(to_part(p))); }, py::arg("partition"));
    m.def("chain", [](const PartitionArg& p) {
        const BurgeChain c = chain(to_frequency(to_part(p)));
        std::vector<std::pair<std::vector<int>, std::string>> out;
        const std::string word = c.word.str();
        for (std::size_t i = 0; i < c.states.size(); ++i)
            out.emplace_back(freq_list(c.states[i]), std::string(1, word[i]));
        return out;
    }, py::arg("partition"));
    m.def("descent_set", [](const std::string& w) { return descent_set(Word::parse(w)); }, py::arg("word"));
    m.def("des", [](const std::string& w) { return des(Word::parse(w)); }, py::arg("word"));
    m.def("maj", [](const std::string& w) { return maj(Word::parse(w)); }, py::arg("word"));
    m.def("inv", [](const std::string& w) { return inv(Word::parse(w)); }, py::arg("word"));

    m.def("oblak", [](const PartitionArg& p) { return parts(oblak(to_part(p))); }, py::arg("partition"));
    m.def("evaluate", [](const std::vector<int>& f, int i) { return evaluate(FrequencySeq(f), i); },
          py::arg("frequency"), py::arg("index"));
    m.def("annihilate", [](const std::vector<int>& f, int i) { return freq_list(annihilate(FrequencySeq(f), i)); },
          py::arg("frequency"), py::arg("index"));
    m.def("maximal_indices", [](const std::vector<int>& f) { return maximal_indices(FrequencySeq(f)); },
          py::arg("frequency"));

    m.def("delta", [](const PartitionArg& q) { return delta(to_part(q)).deltas; }, py::arg("partition"));
    m.def("fiber", [](const PartitionArg& q) {
        py::list out;
        for (const FiberEntry& e : fiber(to_part(q))) {
            py::dict row;
            row["coords"] = e.coords.coords;
            row["code"] = e.code.str();
            row["partition"] = parts(e.partition);
            row["parts"] = e.partition.length();
            out.append(row);
        }
        return out;
    }, py::arg("partition"));
    m.def("coordinates_of", [](const PartitionArg& p) {
        const CoordinateLookup c = coordinates_of(to_part(p));
        return std::make_pair(parts(c.target), c.coords.coords);
    }, py::arg("partition"));
    m.def("foata_fiber", [](const PartitionArg& q, const std::vector<int>& coords) {
        return foata_fiber(to_part(q), BoxCoordinates{coords}).str();
    }, py::arg("partition"), py::arg("coords"));
    m.def("path_to_partition", [](const std::string& w) { return parts(path_to_partition(Word::parse(w))); },
          py::arg("word"));
    m.def("diagonal_hooks", [](const PartitionArg& p) { return parts(diagonal_hooks(to_part(p))); },
          py::arg("partition"));
    m.def("durfee", [](const PartitionArg& p) { return durfee(to_part(p)); }, py::arg("partition"));

    m.def("verify_restriction", [](const PartitionArg& p, std::uint32_t field, int trials, std::uint64_t seed) {
        const RestrictionReport r = verify_restriction(to_part(p), PrimeField(field), trials, seed);
        py::dict out;
        out["partition"] = parts(r.partition);
        out["field"] = r.field;
        out["expected"] = parts(r.expected);
        out["observed"] = parts(r.witness_observed);
        std::vector<std::vector<int>> random;
        for (const Partition& x : r.random_observed) random.push_back(parts(x));
        out["random_observed"] = random;
        out["passed"] = r.passed;
        return out;
    }, py::arg("partition"), py::arg("field") = kDefaultSampleField, py::arg("trials") = 5, py::arg("seed") = 1);
    m.def("exhaustive_max_type", [](const PartitionArg& p, std::uint32_t field, std::uint64_t budget) {
        DominanceScanReport r;
        {
            py::gil_scoped_release release;
            r = exhaustive_max_type(to_part(p), PrimeField(field), budget);
        }
        py::dict out;
        out["partition"] = parts(r.partition);
        out["field"] = r.field;
        out["scanned"] = r.scanned;
        out["expected"] = parts(r.expected);
        out["maximum"] = r.maximum ? py::cast(parts(*r.maximum)) : py::none();
        py::dict types;
        for (const auto& [t, count] : r.types) types[py::str(text(t))] = count;
        out["types"] = types;
        out["passed"] = r.passed;
        return out;
    }, py::arg("partition"), py::arg("field") = kDefaultScanField, py::arg("budget") = kDefaultScanBudget);

    m.def("suite_names", &suite_names);
    m.def("run_sweep", [](int max_n, std::vector<std::string> checks, std::uint32_t field, int trials,
                          int threads, std::uint64_t seed) {
        SweepConfig config;
        config.max_n = max_n;
        config.checks = std::move(checks);
        config.field = field;
        config.trials = trials;
        config.threads = threads;
        config.seed = seed;
        SweepReport report;
        {
            py::gil_scoped_release release;
            report = run_sweep(config);
        }
        py::list out;
        for (const SuiteResult& s : report.suites) {
            py::dict row;
            row["name"] = s.name;
            row["passed"] = s.passed;
            row["failed"] = s.failed;
            row["skipped"] = s.skipped;
            row["first_failure"] = s.first_failure ? py::cast(text(*s.first_failure)) : py::none();
            row["command"] = s.failure_command;
            out.append(row);
        }
        return out;
    }, py::arg("max_n") = 10, py::arg("checks") = std::vector<std::string>{},
       py::arg("field") = kDefaultSampleField, py::arg("trials") = 5, py::arg("threads") = 0,
       py::arg("seed") = 1);
}
