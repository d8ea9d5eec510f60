#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ringforge/annihilator.hpp"
#include "ringforge/properties.hpp"
#include "ringforge/specgrammar.hpp"
#include "ringforge/witness.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using nlohmann::json;
using namespace ringforge;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

void emit(const json& report, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw RfError(Err::InvalidSpec, "cannot open output file " + out_path);
    out << report.dump(2) << "\n";
  }
}

json base_report(const std::string& command, const json& config) {
  json j;
  j["schema"] = 1;
  j["version"] = kVersion;
  j["command"] = command;
  j["config"] = config;
  return j;
}

int run_check(const std::string& property, const std::string& ring_spec,
              const std::string& endo_spec, const std::string& module_spec, long long degree,
              std::optional<long long> power, std::optional<long long> element_bound,
              int generators, const SearchLimits& limits, const std::string& out_path) {
  Timer timer;
  auto prop = property_from_name(property);
  if (!prop) throw RfError(Err::InvalidSpec, "unknown property '" + property + "'");
  RingPtr ring = parse_ring_spec(ring_spec);
  EndoPtr endo = endo_spec.empty() ? nullptr : parse_endo_spec(endo_spec, ring);
  if (property_needs_endo(*prop) && !endo)
    throw RfError(Err::MissingEndo, "--endo is required for " + property);

  Verdict v;
  switch (*prop) {
    case Property::ConditionC1:
    case Property::ConditionC2: {
      ModulePtr module =
          module_spec.empty() ? Module::ring_as_module(ring) : parse_module_spec(module_spec, ring);
      v = check_condition_C(module, endo, *prop == Property::ConditionC1 ? 1 : 2, element_bound,
                            limits);
      break;
    }
    case Property::ArmendarizRing: v = check_armendariz_ring(ring, degree, limits); break;
    case Property::ArmendarizModule: {
      ModulePtr module =
          module_spec.empty() ? Module::ring_as_module(ring) : parse_module_spec(module_spec, ring);
      v = check_armendariz_module(module, degree, limits);
      break;
    }
    case Property::MccoyRight: v = check_mccoy(ring, endo, MccoyVariant::Right, degree, limits); break;
    case Property::MccoyLeft: v = check_mccoy(ring, endo, MccoyVariant::Left, degree, limits); break;
    case Property::SigmaSkewMccoy:
      v = check_mccoy(ring, endo, MccoyVariant::SigmaSkew, degree, limits);
      break;
    case Property::SkewRingSemicommutative:
      v = check_skewring_semicommutative(ring, endo, degree, limits);
      break;
    case Property::QuasiBaer: v = check_quasi_baer(ring, generators, limits); break;
    default: v = check_element_property(ring, endo, *prop, element_bound, limits); break;
  }
  (void)power;

  json config{{"property", property}, {"ring", ring_spec}};
  if (!endo_spec.empty()) config["endo"] = endo_spec;
  if (!module_spec.empty()) config["module"] = module_spec;
  config["degree"] = degree;
  if (element_bound) config["element_bound"] = *element_bound;
  config["threads"] = limits.threads;
  json report = base_report("check", config);
  report["rows"] = json::array({v.to_json()});
  report["total_elapsed_ms"] = timer.ms();
  emit(report, out_path);
  std::cerr << property << " on " << v.ring << ": " << holds_name(v.holds) << "\n";
  return 0;
}

int run_witness(const std::string& ring_spec, const std::string& endo_spec,
                const std::vector<std::string>& ideal_polys, const std::string& g_text,
                const std::string& mode_text, long long degree, std::optional<long long> power,
                const SearchLimits& limits, const std::string& out_path) {
  Timer timer;
  RingPtr ring = parse_ring_spec(ring_spec);
  EndoPtr endo = parse_endo_spec(endo_spec, ring);
  std::vector<SkewPoly> gens;
  for (const auto& text : ideal_polys) gens.push_back(parse_skew_poly(ring, endo, text));
  std::optional<unsigned> J;
  if (power) J = static_cast<unsigned>(*power);
  auto ideal = RightIdealSpec::in_skew(ring, endo, gens, degree, J);
  SkewPoly g = parse_skew_poly(ring, endo, g_text);
  DescentMode mode;
  if (mode_text == "stable") mode = DescentMode::SigmaStable;
  else if (mode_text == "compatible") mode = DescentMode::SigmaCompatible;
  else throw RfError(Err::InvalidSpec, "--mode must be 'stable' or 'compatible'");

  auto membership = verify_annihilator_membership(ideal, g);
  auto trace = extract_witness(ideal, g, mode, limits);

  json config{{"ring", ring_spec}, {"endo", endo_spec},      {"ideal", ideal_polys},
              {"g", g_text},       {"mode", mode_text},      {"degree", degree},
              {"power", ideal.effective_power_bound()},      {"threads", limits.threads}};
  json report = base_report("witness", config);
  report["rows"] = json::array({json{{"membership", membership.to_json()},
                                     {"trace", trace.to_json()}}});
  report["total_elapsed_ms"] = timer.ms();
  emit(report, out_path);
  std::cerr << "witness: " << trace.result << " after " << trace.steps.size() << " step(s)\n";
  return 0;
}

int run_suite(const std::string& id, const SearchLimits& limits, const std::string& out_path) {
  Timer timer;
  SuiteReport rep = run_implication_suite(id, limits);
  json report = base_report("suite", json{{"id", id}, {"threads", limits.threads}});
  report["rows"] = rep.to_json()["rows"];
  report["all_clear"] = rep.all_clear;
  report["total_elapsed_ms"] = timer.ms();
  emit(report, out_path);
  std::size_t bad = 0;
  for (const auto& r : rep.rows)
    if (r.status != "PASS" && r.status != "SKIPPED") ++bad;
  std::cerr << "suite " << id << ": " << rep.rows.size() << " rows, " << bad << " violation(s)\n";
  return 0;
}

struct CorpusCheck {
  std::string name, expected, actual;
  bool ok() const { return expected == actual; }
  json to_json() const {
    return json{{"name", name}, {"expected", expected}, {"actual", actual}, {"ok", ok()}};
  }
};

void corpus_congruence_pairs(std::vector<json>& rows) {
  auto ring = Ring::congruence_pairs(2);
  auto sigma = Endo::swap(ring);
  const Elem a = ring->parse("(2,0)"), b = ring->parse("(0,2)");
  auto r = refute_sigma_semicommutative_pointwise(ring, sigma, a, b);
  std::vector<CorpusCheck> checks = {
      {"a*b", "(0,0)", r.ab},
      {"a*sigma(b)", "(4,0)", r.a_sigma_b},
      {"pointwise refutation", "refuted", r.refuted ? "refuted" : "not-refuted"},
  };
  json row{{"example", "congruence-pairs(2) with swap"}, {"checks", json::array()}};
  for (const auto& c : checks) row["checks"].push_back(c.to_json());
  rows.push_back(row);
}

void corpus_poly_c1(std::vector<json>& rows, const SearchLimits& limits) {
  auto ring = Ring::poly_ring(Ring::zmod(2));
  auto sigma = Endo::eval_at_zero(ring);
  auto v = check_condition_C(Module::ring_as_module(ring), sigma, 1, 3, limits);
  std::vector<CorpusCheck> checks = {
      {"condition-C1 at bound 3", "true-up-to-bound", holds_name(v.holds)}};
  json row{{"example", "poly(zmod(2)) with eval-at-zero"}, {"checks", json::array()}};
  for (const auto& c : checks) row["checks"].push_back(c.to_json());
  rows.push_back(row);
}

void corpus_z2z2_swap(std::vector<json>& rows, const SearchLimits& limits) {
  auto ring = Ring::product({Ring::zmod(2), Ring::zmod(2)});
  auto sigma = Endo::swap(ring);
  SkewPoly p = parse_skew_poly(ring, sigma, "(1,0) + (1,0)*x");
  SkewPoly q = parse_skew_poly(ring, sigma, "(0,1) + (1,0)*x");
  std::vector<CorpusCheck> checks;
  checks.push_back({"p*q", "0", to_string(skew_mul(p, q))});
  bool killed = false;
  for (const auto& c : ring->enumerate())
    if (!ring->is_zero(c) && right_scalar_mul(p, c).is_zero()) killed = true;
  checks.push_back({"exists nonzero c with p*c=0", "no", killed ? "yes" : "no"});
  checks.push_back({"p*(1,0)*q", "(1,0)*x",
                    to_string(skew_mul(right_scalar_mul(p, ring->parse("(1,0)")), q))});
  auto v = check_mccoy(ring, sigma, MccoyVariant::SigmaSkew, 1, limits);
  checks.push_back({"sigma-skew-mccoy at d=1", "false", holds_name(v.holds)});
  json row{{"example", "product(zmod(2),zmod(2)) with swap"}, {"checks", json::array()}};
  for (const auto& c : checks) row["checks"].push_back(c.to_json());
  rows.push_back(row);
}

void corpus_mat2z3(std::vector<json>& rows) {
  auto ring = Ring::matrix_ring(2, Ring::zmod(3));
  auto sigma = Endo::negate_offdiagonal(ring);
  SkewPoly p = parse_skew_poly(ring, sigma, "[[1,0],[0,0]] + [[1,1],[0,0]]*x");
  SkewPoly q = parse_skew_poly(ring, sigma, "[[0,0],[0,2]] + [[0,1],[0,1]]*x");
  std::vector<CorpusCheck> checks;
  checks.push_back({"p*q", "0", to_string(skew_mul(p, q))});
  bool killed = false;
  for (const auto& c : ring->enumerate())
    if (!ring->is_zero(c) && right_scalar_mul(p, c).is_zero()) killed = true;
  checks.push_back({"exists nonzero c with p*c=0", "no", killed ? "yes" : "no"});
  const Elem h = ring->parse("[[1,1],[0,0]]");
  checks.push_back({"p*h*q is zero", "no",
                    skew_mul(right_scalar_mul(p, h), q).is_zero() ? "yes" : "no"});
  json row{{"example", "matrix(2,zmod(3)) with negate-offdiagonal"}, {"checks", json::array()}};
  for (const auto& c : checks) row["checks"].push_back(c.to_json());
  rows.push_back(row);
}

void corpus_nagata_poly(std::vector<json>& rows, const SearchLimits& limits) {
  auto base = Ring::poly_ring(Ring::zmod(2));
  auto sigma = Endo::eval_at_zero(base);
  auto ring = Ring::nagata(base, Module::ring_as_module(base), sigma);
  const Elem A = ring->parse("(x | 1)"), B = ring->parse("(0 | 1)");
  std::vector<CorpusCheck> checks;
  checks.push_back({"(x|1)*(0|1)", "(0 | 0)", ring->serialize(ring->mul(A, B))});
  checks.push_back({"(0|1)*(x|1)", "(0 | x)", ring->serialize(ring->mul(B, A))});
  auto v = check_element_property(ring, nullptr, Property::Reversible, 2, limits);
  checks.push_back({"reversible at bound 2", "false", holds_name(v.holds)});
  json row{{"example", "nagata(poly(zmod(2)), self, eval-at-zero)"}, {"checks", json::array()}};
  for (const auto& c : checks) row["checks"].push_back(c.to_json());
  rows.push_back(row);
}

void corpus_nagata_z2z2(std::vector<json>& rows, const SearchLimits& limits) {
  auto base = Ring::product({Ring::zmod(2), Ring::zmod(2)});
  auto sigma = Endo::swap(base);
  auto ring = Ring::nagata(base, Module::ring_as_module(base), sigma);
  const Elem A = ring->parse("((0,1) | (0,1))");
  const Elem B = ring->parse("((1,0) | (0,1))");
  const Elem C = ring->parse("((1,0) | (1,0))");
  std::vector<CorpusCheck> checks;
  checks.push_back({"A*B", "((0,0) | (0,0))", ring->serialize(ring->mul(A, B))});
  checks.push_back({"A*C*B", "((0,0) | (1,0))", ring->serialize(ring->mul(ring->mul(A, C), B))});
  auto v = check_condition_C(Module::ring_as_module(base), sigma, 1, std::nullopt, limits);
  checks.push_back({"condition-C1 on the base", "false", holds_name(v.holds)});
  checks.push_back({"C1 witness m", "(1,0)", v.witness.size() == 2 ? v.witness[0] : "?"});
  checks.push_back({"C1 witness a", "(0,1)", v.witness.size() == 2 ? v.witness[1] : "?"});
  json row{{"example", "nagata(product(zmod(2),zmod(2)), self, swap)"}, {"checks", json::array()}};
  for (const auto& c : checks) row["checks"].push_back(c.to_json());
  rows.push_back(row);
}

int run_corpus(const SearchLimits& limits, const std::string& out_path) {
  Timer timer;
  std::vector<json> rows;
  corpus_congruence_pairs(rows);
  corpus_poly_c1(rows, limits);
  corpus_z2z2_swap(rows, limits);
  corpus_mat2z3(rows);
  corpus_nagata_poly(rows, limits);
  corpus_nagata_z2z2(rows, limits);

  json report = base_report("corpus", json{{"threads", limits.threads}});
  report["rows"] = rows;
  std::size_t failures = 0;
  for (const auto& row : rows)
    for (const auto& check : row.at("checks"))
      if (!check.at("ok").get<bool>()) ++failures;
  report["failures"] = failures;
  report["total_elapsed_ms"] = timer.ms();
  emit(report, out_path);
  std::cerr << "corpus: " << rows.size() << " examples, " << failures << " mismatch(es)\n";
  if (failures) throw RfError(Err::NoProgress, "corpus expectations not met");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ringforge: exhaustive property checking for finite rings, skew polynomials and "
               "Nagata extensions"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  SearchLimits limits = SearchLimits::defaults();
  std::string out_path;
  app.add_option("--threads", limits.threads, "worker threads for the scans")->capture_default_str();
  app.add_option("--ceiling", limits.ceiling, "search ceiling in candidate pairs")
      ->capture_default_str();
  app.add_option("--out", out_path, "write the JSON report to a file instead of stdout");

  // check
  auto* check = app.add_subcommand("check", "run one property check");
  std::string property, ring_spec, endo_spec, module_spec;
  long long degree = 2;
  std::optional<long long> power, element_bound;
  int generators = 1;
  check->add_option("--property", property, "property tag")->required();
  check->add_option("--ring", ring_spec, "ring spec")->required();
  check->add_option("--endo", endo_spec, "endomorphism spec");
  check->add_option("--module", module_spec, "module spec (self | ring-power(k))");
  check->add_option("--degree", degree, "polynomial degree bound")->capture_default_str();
  check->add_option("--power", power, "monomial exponent bound J");
  check->add_option("--element-bound", element_bound, "element bound for non-enumerable carriers");
  check->add_option("--generators", generators, "generator bound for quasi-baer")
      ->capture_default_str();

  // witness
  auto* witness = app.add_subcommand("witness", "run the annihilator descent");
  std::string w_ring, w_endo, w_g, w_mode = "compatible";
  std::vector<std::string> w_ideal;
  long long w_degree = 2;
  std::optional<long long> w_power;
  witness->add_option("--ring", w_ring, "ring spec")->required();
  witness->add_option("--endo", w_endo, "endomorphism spec")->required();
  witness->add_option("--ideal", w_ideal, "ideal generators (skew polynomials)")->required();
  witness->add_option("--g", w_g, "nonzero annihilator polynomial")->required();
  witness->add_option("--mode", w_mode, "stable | compatible")->capture_default_str();
  witness->add_option("--degree", w_degree, "ideal degree bound")->capture_default_str();
  witness->add_option("--power", w_power, "monomial exponent bound J");

  // suite
  auto* suite = app.add_subcommand("suite", "run an implication suite");
  std::string suite_id;
  suite->add_option("--id", suite_id, "suite id")->required();

  // corpus
  app.add_subcommand("corpus", "replay the built-in worked examples");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("check"))
      return run_check(property, ring_spec, endo_spec, module_spec, degree, power, element_bound,
                       generators, limits, out_path);
    if (app.got_subcommand("witness"))
      return run_witness(w_ring, w_endo, w_ideal, w_g, w_mode, w_degree, w_power, limits, out_path);
    if (app.got_subcommand("suite")) return run_suite(suite_id, limits, out_path);
    return run_corpus(limits, out_path);
  } catch (const RfError& e) {
    std::cerr << "error [" << err_name(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
