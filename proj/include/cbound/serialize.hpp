#pragma once

#include "json.hpp"

#include "cbound/bounds.hpp"
#include "cbound/campaign.hpp"
#include "cbound/form.hpp"
#include "cbound/hilbert.hpp"
#include "cbound/verifier.hpp"

namespace cbound {

using Json = nlohmann::ordered_json;

/// Keys: degrees, D, sigma, tau_minus, tau_plus, bounds[{tag, value, applicable}],
/// egh_conjectural, best_bound, threshold, selected_tag, warnings.
Json to_json(const BoundReport& report);
BoundReport bound_report_from_json(const Json& j);

/// {degree, terms: [["x1^2*x2", coeff], ...]}
Json to_json(const Form& form);
Form form_from_json(const Json& j, std::size_t num_vars, std::uint32_t p);

/// {p, n, degrees, D, forms: [...]} with the complete intersection first
/// and G last.
Json to_json(const AciInstance& inst);
AciInstance instance_from_json(const Json& j);

/// Instance fields plus failing_check and degree_of_failure.
Json to_json(const FailureRecord& failure);

Json to_json(const CampaignReport& report);
Json to_json(const HilbertTable& table);
Json to_json(const ExhaustiveResult& result);

}  // namespace cbound
