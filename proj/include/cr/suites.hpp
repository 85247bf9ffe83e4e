#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace cr {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<Check> checks;
    bool pass() const;
};

struct SuiteOptions {
    std::array<std::uint64_t, 2> seeds{7919, 104729};
};

int criterion_count();
std::string criterion_title(int id);
CriterionResult run_criterion(int id, const SuiteOptions& opt);

// Suite names accepted by `verify`: all, aut, bound, classify, cross-check, flows, diagnostics, properties.
const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for unknown suites.
std::vector<int> suite_criteria(const std::string& suite);

// Randomized property checks; each returns the number of failing cases out of `cases`.
struct PropertyOutcome {
    int cases = 0;
    int failures = 0;
    std::string first_failure;
};
PropertyOutcome property_ring_axioms(std::uint64_t seed, int cases);
PropertyOutcome property_involution(std::uint64_t seed, int cases);
PropertyOutcome property_grading_partition(std::uint64_t seed, int cases);
PropertyOutcome property_rank_nullity(std::uint64_t seed, int cases);
PropertyOutcome property_basis_order(std::uint64_t seed, int cases);

}  // namespace cr
