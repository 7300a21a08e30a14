#include "cbound/serialize.hpp"

namespace cbound {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad value for '") + key + "': " + e.what());
  }
}

}  // namespace

Json to_json(const BoundReport& report) {
  Json bounds = Json::array();
  for (const auto& b : report.bounds) {
    Json entry;
    entry["tag"] = std::string(to_string(b.tag));
    entry["value"] = b.value ? Json(*b.value) : Json(nullptr);
    entry["applicable"] = b.applicable();
    bounds.push_back(std::move(entry));
  }
  Json j;
  j["degrees"] = std::vector<int>(report.params.degrees.values().begin(), report.params.degrees.values().end());
  j["D"] = report.params.D;
  j["sigma"] = report.params.sigma();
  j["tau_minus"] = report.params.tau_minus();
  j["tau_plus"] = report.params.tau_plus();
  j["bounds"] = std::move(bounds);
  j["egh_conjectural"] = report.egh_conjectural;
  j["best_bound"] = report.best_bound;
  j["threshold"] = report.threshold;
  j["selected_tag"] = std::string(to_string(report.selected_tag));
  j["warnings"] = report.warnings;
  return j;
}

BoundReport bound_report_from_json(const Json& j) {
  AciParams params(DegreeSequence(field<std::vector<int>>(j, "degrees")), field<int>(j, "D"));
  if (field<int>(j, "sigma") != params.sigma() || field<int>(j, "tau_minus") != params.tau_minus() ||
      field<int>(j, "tau_plus") != params.tau_plus()) {
    throw ParseError("derived fields disagree with degrees and D");
  }
  BoundReport report{params, {}, field<Int>(j, "egh_conjectural"), field<Int>(j, "best_bound"),
                     field<Int>(j, "threshold"), parse_bound_tag(field<std::string>(j, "selected_tag")),
                     field<std::vector<std::string>>(j, "warnings")};
  for (const auto& b : field<Json>(j, "bounds")) {
    BoundEntry entry{parse_bound_tag(field<std::string>(b, "tag")), std::nullopt};
    if (field<bool>(b, "applicable")) entry.value = field<Int>(b, "value");
    report.bounds.push_back(entry);
  }
  return report;
}

Json to_json(const Form& form) {
  Json terms = Json::array();
  for (const auto& t : form.terms()) terms.push_back(Json::array({to_string(t.monomial), t.coeff}));
  Json j;
  j["degree"] = form.degree();
  j["terms"] = std::move(terms);
  return j;
}

Form form_from_json(const Json& j, std::size_t num_vars, std::uint32_t p) {
  const int degree = field<int>(j, "degree");
  std::vector<Term> terms;
  for (const auto& t : field<Json>(j, "terms")) {
    if (!t.is_array() || t.size() != 2) throw ParseError("a term must be [monomial, coefficient]");
    terms.push_back({parse_monomial(t[0].get<std::string>(), num_vars), t[1].get<std::uint32_t>()});
  }
  return Form(num_vars, degree, p, std::move(terms));
}

Json to_json(const AciInstance& inst) {
  Json forms = Json::array();
  for (const auto& f : inst.generators()) forms.push_back(to_json(f));
  Json j;
  j["p"] = inst.p;
  j["n"] = inst.num_vars;
  j["degrees"] = std::vector<int>(inst.params.degrees.values().begin(), inst.params.degrees.values().end());
  j["D"] = inst.params.D;
  j["forms"] = std::move(forms);
  return j;
}

AciInstance instance_from_json(const Json& j) {
  const auto p = field<std::uint32_t>(j, "p");
  const auto n = field<std::size_t>(j, "n");
  const auto forms_json = field<Json>(j, "forms");
  if (!forms_json.is_array() || forms_json.size() < 2) throw ParseError("need the CI forms and G");
  std::vector<Form> forms;
  for (const auto& f : forms_json) forms.push_back(form_from_json(f, n, p));
  Form extra = forms.back();
  forms.pop_back();
  AciInstance inst = make_instance(n, p, std::move(forms), std::move(extra));
  if (inst.params != AciParams(DegreeSequence(field<std::vector<int>>(j, "degrees")), field<int>(j, "D"))) {
    throw ParseError("declared degrees disagree with the forms");
  }
  return inst;
}

Json to_json(const FailureRecord& failure) {
  Json j = to_json(failure.instance);
  j["failing_check"] = failure.failing_check;
  j["degree_of_failure"] = failure.degree_of_failure ? Json(*failure.degree_of_failure) : Json(nullptr);
  j["trial"] = failure.trial;
  return j;
}

Json to_json(const CampaignReport& report) {
  Json checks = Json::object();
  for (const auto& [name, c] : report.per_check) {
    checks[name] = {{"passed", c.passed}, {"failed", c.failed}, {"skipped", c.skipped}};
  }
  Json failures = Json::array();
  for (const auto& f : report.failures) failures.push_back(to_json(f));
  Json j;
  j["seed"] = report.seed;
  j["attempted"] = report.attempted;
  j["certified"] = report.certified;
  j["passed"] = report.passed;
  j["failed"] = report.failed;
  j["certification_failures"] = report.certification_failures;
  j["checks"] = std::move(checks);
  j["failures"] = std::move(failures);
  return j;
}

Json to_json(const HilbertTable& table) {
  Json j;
  j["values"] = table.values;
  j["bound"] = table.bound;
  j["artinian_certified"] = table.artinian_certified;
  return j;
}

Json to_json(const ExhaustiveResult& result) {
  Json maximizers = Json::array();
  for (const auto& m : result.maximizers) maximizers.push_back(to_string(m));
  Json j;
  j["max_multiplicity"] = result.max_multiplicity;
  j["maximizers"] = std::move(maximizers);
  j["candidates"] = result.candidates;
  j["lpp_prediction"] = result.lpp_prediction;
  j["matches_lpp"] = result.matches_lpp;
  j["lpp_is_maximizer"] = result.lpp_is_maximizer;
  return j;
}

}  // namespace cbound
