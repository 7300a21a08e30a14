#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cbound/lpp.hpp"
#include "cbound/verifier.hpp"

namespace cbound {

enum class Check { hf_dominance, multiplicity, aci_definition };

inline constexpr Check kAllChecks[] = {Check::aci_definition, Check::hf_dominance, Check::multiplicity};

std::string_view to_string(Check check);
Check parse_check(std::string_view text);

struct CampaignConfig {
  DegreeSequence degrees;
  int D;
  std::size_t num_vars;
  std::uint32_t p = 101;
  long trials = 0;
  std::uint64_t seed = 0;
  std::vector<Check> checks{std::begin(kAllChecks), std::end(kAllChecks)};
  unsigned threads = 0;  // 0: hardware concurrency
  int max_retries = kDefaultMaxRetries;
};

/// Throws InvalidArgument on a bad configuration.
void validate(const CampaignConfig& config);

/// Seed of trial `index` for a campaign seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

struct CheckCounter {
  long passed = 0;
  long failed = 0;
  long skipped = 0;
  friend bool operator==(const CheckCounter&, const CheckCounter&) = default;
};

struct FailureRecord {
  long trial;
  std::string failing_check;
  std::optional<int> degree_of_failure;
  AciInstance instance;
};

struct CampaignReport {
  std::uint64_t seed = 0;
  long attempted = 0;
  long certified = 0;
  long passed = 0;
  long failed = 0;
  long certification_failures = 0;
  std::map<std::string, CheckCounter> per_check;
  std::vector<FailureRecord> failures;
};

/// Runs `config.trials` independent trials. Trial i draws its instance from
/// trial_seed(seed, i); results are merged in index order, so the report
/// does not depend on the thread count.
CampaignReport run_campaign(const CampaignConfig& config);

}  // namespace cbound
