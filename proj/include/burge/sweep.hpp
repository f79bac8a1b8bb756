#pragma once

// Batch property sweeps over all partitions up to a size bound.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burge/matrix_oracle.hpp"
#include "burge/partition.hpp"

namespace burge {

struct SweepConfig {
    int max_n = 10;
    std::vector<std::string> checks;  // empty selects every suite
    std::uint32_t field = kDefaultSampleField;
    int trials = 5;
    int threads = 0;                  // 0 = hardware concurrency
    std::uint64_t seed = 1;
};

/// Fixed registry of suite names, in run order.
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

/// Partitions the suite runs on for size n (super-distinct ones for the
/// fiber suites, every partition otherwise).
std::vector<Partition> suite_instances(std::string_view suite, int n);

enum class CheckStatus { pass, fail, skip };

struct CheckOutcome {
    CheckStatus status = CheckStatus::pass;
    std::string detail;  // empty on pass
};

/// Runs one suite on one instance. Throws std::invalid_argument for an unknown suite.
CheckOutcome check_instance(std::string_view suite, const Partition& p, const SweepConfig& config);

/// Shell command that re-runs a single instance.
std::string reproducer(std::string_view suite, const Partition& p, const SweepConfig& config);

struct SuiteResult {
    std::string name;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::uint64_t skipped = 0;
    std::optional<Partition> first_failure;
    std::string failure_detail;
    std::string failure_command;
};

struct SweepReport {
    std::vector<SuiteResult> suites;
    bool ok() const noexcept;
};

/// Throws std::invalid_argument for unknown suite names or a negative max_n.
SweepReport run_sweep(const SweepConfig& config);

}  // namespace burge
