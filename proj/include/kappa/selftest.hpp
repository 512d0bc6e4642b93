#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kappa/represent.hpp"

namespace kappa {

struct SuiteResult {
    std::string name;
    int checks = 0;
    int failures = 0;
    std::vector<std::string> messages;

    bool ok() const { return failures == 0; }
    void check(bool cond, const std::string& msg);
    void merge(const SuiteResult& o);
};

struct SelftestOptions {
    std::uint64_t seed = 12345;
    int algebra_triples = 500;  // associativity / Jacobi triples per table
    int hopf_products = 200;    // random degree-<=3 products per basis
    int roundtrip_samples = 200;
    int termination_words = 150; // random words of length <= 12 per table
    bool run_numeric = true;
    int residual_grid_n = 128;
    int sweep_grid_n = 96;
    int uncertainty_states = 100;
    std::vector<double> uncertainty_kappas = {0.5, 1.0, 10.0};
    int classical_probe_states = 100;
};

// Symbolic suites.
SuiteResult scalar_ring_suite(const SelftestOptions& o);
SuiteResult termination_suite(const SelftestOptions& o);
SuiteResult normalize_idempotence_suite(const SelftestOptions& o);
SuiteResult associativity_suite(const SelftestOptions& o);
SuiteResult jacobi_suite(const SelftestOptions& o);
SuiteResult hopf_axiom_suite(const SelftestOptions& o);
SuiteResult action_table_suite();
SuiteResult pairing_compatibility_suite();
SuiteResult module_algebra_suite();
SuiteResult series_oracle_suite();
SuiteResult golden_table_suite();
SuiteResult variant_suite();
SuiteResult classical_limit_suite();
SuiteResult isomorphism_suite();
SuiteResult sector_invariance_suite();
SuiteResult roundtrip_suite(const SelftestOptions& o);

// Numeric suites.
SuiteResult residual_suite(RepresentCase c, const SelftestOptions& o);
SuiteResult uncertainty_suite(RepresentCase c, const SelftestOptions& o);
SuiteResult classical_probe_suite(RepresentCase c, const SelftestOptions& o);

std::vector<SuiteResult> run_selftest(const SelftestOptions& o);

} // namespace kappa
