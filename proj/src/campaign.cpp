#include "cbound/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "cbound/prime_field.hpp"

namespace cbound {

std::string_view to_string(Check check) {
  switch (check) {
    case Check::hf_dominance:
      return "hf_dominance";
    case Check::multiplicity:
      return "multiplicity";
    case Check::aci_definition:
      return "aci_definition";
  }
  return "?";
}

Check parse_check(std::string_view text) {
  for (Check c : kAllChecks) {
    if (to_string(c) == text) return c;
  }
  throw ParseError("unknown check '" + std::string(text) + "'");
}

void validate(const CampaignConfig& config) {
  if (config.trials < 0) throw InvalidArgument("trials must be >= 0");
  if (config.D < 1 || config.D > config.degrees.sigma()) {
    throw InvalidArgument("campaigns need 1 <= D <= sigma = " + std::to_string(config.degrees.sigma()));
  }
  if (config.num_vars < config.degrees.size()) throw InvalidArgument("need n >= h");
  if (config.degrees.size() != 3 && config.num_vars != config.degrees.size()) {
    throw InvalidArgument("for h != 3 only Artinian campaigns (n == h) are supported");
  }
  if (!is_prime(config.p) || config.p >= (1u << 31)) throw InvalidArgument(std::to_string(config.p) + " is not a usable prime");
  if (config.max_retries < 1) throw InvalidArgument("max_retries must be >= 1");
  if (config.checks.empty()) throw InvalidArgument("select at least one check");
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (std::uint64_t{words[0]} << 32) | words[1];
}

namespace {

enum class Outcome { pass, fail, skip };

struct TrialResult {
  bool certified = false;
  std::vector<std::pair<Check, Outcome>> outcomes;
  std::vector<FailureRecord> failures;
};

TrialResult run_trial(const CampaignConfig& config, long index) {
  TrialResult result;
  const AciParams params(config.degrees, config.D);
  std::optional<AciInstance> inst;
  try {
    inst = random_aci(params, config.num_vars, config.p, trial_seed(config.seed, static_cast<std::uint64_t>(index)),
                      config.max_retries);
  } catch (const CertificationFailed&) {
    return result;
  }
  result.certified = true;

  std::optional<DominanceResult> dominance;
  for (Check check : config.checks) {
    Outcome outcome = Outcome::pass;
    std::optional<int> degree;
    switch (check) {
      case Check::aci_definition: {
        const auto r = check_aci_definition(*inst);
        outcome = r.passed ? Outcome::pass : Outcome::fail;
        degree = r.failing_degree;
        break;
      }
      case Check::hf_dominance: {
        if (!dominance) dominance = check_hf_dominance(*inst);
        outcome = dominance->degrees_pass() ? Outcome::pass : Outcome::fail;
        degree = dominance->first_failing_degree();
        break;
      }
      case Check::multiplicity: {
        if (!dominance) dominance = check_hf_dominance(*inst);
        if (!dominance->artinian) {
          outcome = Outcome::skip;
        } else {
          outcome = dominance->multiplicity_pass() ? Outcome::pass : Outcome::fail;
        }
        break;
      }
    }
    result.outcomes.emplace_back(check, outcome);
    if (outcome == Outcome::fail) {
      result.failures.push_back({index, std::string(to_string(check)), degree, *inst});
    }
  }
  return result;
}

}  // namespace

CampaignReport run_campaign(const CampaignConfig& config) {
  validate(config);
  const auto trials = static_cast<std::size_t>(config.trials);
  std::vector<TrialResult> results(trials);

  unsigned workers = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(trials, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed_hard{false};
  auto work = [&] {
    for (std::size_t i = next++; i < trials && !failed_hard; i = next++) {
      try {
        results[i] = run_trial(config, static_cast<long>(i));
      } catch (...) {
        if (!failed_hard.exchange(true)) error = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  if (error) std::rethrow_exception(error);

  CampaignReport report;
  report.seed = config.seed;
  for (Check c : config.checks) report.per_check[std::string(to_string(c))];
  for (auto& r : results) {
    ++report.attempted;
    if (!r.certified) {
      ++report.certification_failures;
      continue;
    }
    ++report.certified;
    bool trial_ok = true;
    for (const auto& [check, outcome] : r.outcomes) {
      auto& counter = report.per_check[std::string(to_string(check))];
      if (outcome == Outcome::pass) ++counter.passed;
      if (outcome == Outcome::fail) {
        ++counter.failed;
        trial_ok = false;
      }
      if (outcome == Outcome::skip) ++counter.skipped;
    }
    if (trial_ok) {
      ++report.passed;
    } else {
      ++report.failed;
    }
    for (auto& f : r.failures) report.failures.push_back(std::move(f));
  }
  return report;
}

}  // namespace cbound
