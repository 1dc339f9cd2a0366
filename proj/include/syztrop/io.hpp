#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "syztrop/crystal.hpp"
#include "syztrop/degeneration.hpp"
#include "syztrop/metric.hpp"
#include "syztrop/tropical.hpp"

namespace syztrop {

using Json = nlohmann::ordered_json;

// Germ text format: [[exponent, "a/b+c/d i"], ...]; round-trips exactly.
LaurentGerm germ_from_json(const Json& j);
Json germ_to_json(const LaurentGerm& f);

// Config: { "g": int, "polarization": [e_1..e_g], "q": [[germ,...],...],
//           "sample_radius": real? }
ValidationReport degeneration_from_json(const Json& j);
Json degeneration_to_json(const DegenerationData& D);

ValidationReport load_degeneration(const std::string& path);

// Descriptor: { "M": [[...]], "tau": [germ, ...] }
AutomorphismDescriptor descriptor_from_json(const Json& j);
Json descriptor_to_json(const AutomorphismDescriptor& a);

Json imat_to_json(const IMat& m);
IMat imat_from_json(const Json& j);
Json bigvec_to_json(const std::vector<BigInt>& v);

Json crystal_element_to_json(const CrystalElement& e);

Json validation_report_to_json(const ValidationReport& r);
Json convergence_report_to_json(const ConvergenceReport& r, const std::vector<double>& schedule);
Json limit_consistency_report_to_json(const LimitConsistencyReport& r);
Json metric_limit_report_to_json(const MetricLimitReport& r);

/// CSV for plotting, dispatched on the report's "kind" field.
std::string report_to_csv(const Json& report);

}  // namespace syztrop
