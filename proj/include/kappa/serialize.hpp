#pragma once

#include <string>

#include "kappa/represent.hpp"
#include "kappa/smash.hpp"

namespace kappa {

/// Stable JSON renderings (fixed key order, deterministic for identical
/// inputs); schemas are documented in the README.
std::string table_to_json(const DerivedTable& t, bool include_provenance = true);
std::string diff_to_json(const DiffReport& r);
std::string limit_report_to_json(const ClassicalLimitReport& r);
std::string uncertainty_to_json(const UncertaintyReport& r);
std::string residuals_to_json(const std::string& case_name, double hbar, double kappa,
                              const std::vector<ResidualRow>& rows);

std::string uncertainty_to_csv(const UncertaintyReport& r);

std::string table_to_text(const DerivedTable& t);
std::string diff_to_text(const DiffReport& r);
std::string limit_report_to_text(const ClassicalLimitReport& r);
std::string uncertainty_to_text(const UncertaintyReport& r);

} // namespace kappa
