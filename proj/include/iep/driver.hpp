#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "iep/bounds.hpp"
#include "iep/equivalence.hpp"

namespace iep {

struct RunConfig {
    FieldSpec field;  // validated by parse/run
    std::optional<std::vector<Int>> primes;  // nullopt = auto (budget)
    bool strict_equivalence = false;
    bool include_two = true;
    bool allow_zero_disc_profiles = false;
    int jobs = 1;
    std::string output;      // empty = stdout
    std::string format = "json";
    std::string stage_dump;  // empty = off
};

struct StageCounters {
    size_t septuples = 0;
    size_t septuples_after_lift = 0;
    size_t profiles = 0;
    size_t triples = 0;
    size_t solutions = 0;
    size_t classes = 0;
};

struct PrimeResult {
    Int p;
    StageCounters counters;
    std::vector<SolutionClass> classes;
    std::string error;  // empty when the prime ran clean
    bool internal_failure = false;
};

struct SolutionReport {
    PrimeBudget budget;
    std::vector<Int> primes_run;
    std::vector<PrimeResult> per_prime;
    std::map<Int, size_t> totals;  // primes with at least one class
};

RunConfig parse_config_json(const std::string& text);
RunConfig load_config_file(const std::string& path);

SolutionReport run(const RunConfig& config);

// json round-trips losslessly; csv flattens one row per class
std::string serialize_report(const SolutionReport& report, const RunConfig& config,
                             const std::string& format);

}  // namespace iep
