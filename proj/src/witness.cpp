#include "ringforge/witness.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace ringforge {

namespace {

// Products f_i * (c x^j) in the fixed search order: generators in input
// order, constants canonical, exponent ascending. Zero products kept out.
struct IdealProduct {
  SkewPoly poly;
  std::string origin;  // "f#<i> * (<c>*x^<j>)"
};

std::vector<IdealProduct> ordered_products(const RightIdealSpec& ideal) {
  const unsigned J = ideal.effective_power_bound();
  const auto consts = ideal.ring->enumerate();
  std::vector<IdealProduct> out;
  for (std::size_t gi = 0; gi < ideal.skew_generators.size(); ++gi)
    for (const auto& c : consts) {
      if (ideal.ring->is_zero(c)) continue;
      for (unsigned j = 0; j <= J; ++j) {
        SkewPoly h =
            skew_mul(ideal.skew_generators[gi], SkewPoly::monomial(ideal.ring, ideal.endo, c, j));
        if (h.is_zero()) continue;
        std::ostringstream os;
        os << "f" << gi << "*(" << ideal.ring->serialize(c) << "*x^" << j << ")";
        out.push_back({std::move(h), os.str()});
      }
    }
  return out;
}

SkewPoly sigma_pow_map(const SkewPoly& g, unsigned p) {
  SkewPoly out = g;
  for (unsigned i = 0; i < p; ++i) out = sigma_map(out);
  return out;
}

}  // namespace

const char* descent_mode_name(DescentMode m) {
  return m == DescentMode::SigmaStable ? "sigma-stable" : "sigma-compatible";
}

nlohmann::json MembershipCertificate::to_json() const {
  return nlohmann::json{{"member", member},
                        {"exact", exact},
                        {"degree_bound", degree_bound},
                        {"power_bound", power_bound},
                        {"failure", failure}};
}

nlohmann::json StabilityCertificate::to_json() const {
  return nlohmann::json{{"stable", stable},
                        {"exact", exact},
                        {"checked", checked},
                        {"annihilator", annihilator},
                        {"failure", failure}};
}

nlohmann::json WitnessStep::to_json() const {
  return nlohmann::json{{"g_before", g_before}, {"f", f},     {"f_origin", f_origin},
                        {"p", p},               {"rule", rule}, {"a_p", a_p},
                        {"g_after", g_after}};
}

nlohmann::json WitnessTrace::to_json() const {
  nlohmann::json steps_json = nlohmann::json::array();
  for (const auto& s : steps) steps_json.push_back(s.to_json());
  return nlohmann::json{{"mode", descent_mode_name(mode)},
                        {"steps", steps_json},
                        {"result", result},
                        {"verified", verified}};
}

MembershipCertificate verify_annihilator_membership(const RightIdealSpec& ideal,
                                                    const SkewPoly& g) {
  if (ideal.ambient != RightIdealSpec::Ambient::SkewPoly)
    throw RfError(Err::ContextMismatch, "expected a skew ideal");
  if (!ideal.ring->enumerable()) throw RfError(Err::NotEnumerable, "ring is not enumerable");
  MembershipCertificate cert;
  cert.degree_bound = ideal.degree_bound;
  cert.power_bound = ideal.effective_power_bound();
  auto ord = ideal.endo->detected_order();
  cert.exact = ord.has_value() && cert.power_bound >= *ord;
  for (const auto& prod : ordered_products(ideal))
    if (!skew_mul(prod.poly, g).is_zero()) {
      cert.member = false;
      cert.failure = prod.origin;
      return cert;
    }
  cert.member = true;
  return cert;
}

StabilityCertificate verify_stability(const RightIdealSpec& ideal, const SearchLimits& limits) {
  StabilityCertificate cert;
  const auto ann = bounded_skew_annihilator(ideal, limits);
  auto ord = ideal.endo->detected_order();
  const unsigned J = ideal.effective_power_bound();
  cert.exact = ord.has_value() && J >= *ord;
  cert.checked = ann.size();
  cert.stable = true;
  for (const auto& h : ann) {
    cert.annihilator.push_back(to_string(h));
    if (!verify_annihilator_membership(ideal, sigma_map(h)).member) {
      cert.stable = false;
      cert.failure = to_string(h);
      break;
    }
  }
  return cert;
}

WitnessTrace extract_witness(const RightIdealSpec& ideal, const SkewPoly& g, DescentMode mode,
                             const SearchLimits& limits) {
  if (ideal.ambient != RightIdealSpec::Ambient::SkewPoly)
    throw RfError(Err::ContextMismatch, "expected a skew ideal");
  const RingPtr& ring = ideal.ring;
  const EndoPtr& endo = ideal.endo;
  if (!ring->enumerable()) throw RfError(Err::NotEnumerable, "ring is not enumerable");
  if (g.is_zero()) throw RfError(Err::ZeroG, "g must be nonzero");

  WitnessTrace trace;
  trace.mode = mode;

  if (ideal.zero_ideal()) {
    // trivial case: any nonzero constant works; take the canonically least
    trace.result_elem = ring->enumerate()[1];
    trace.result = ring->serialize(trace.result_elem);
    trace.verified = true;
    return trace;
  }

  if (!verify_annihilator_membership(ideal, g).member)
    throw RfError(Err::MembershipFailed, "g is not in the bounded right annihilator of I");

  if (mode == DescentMode::SigmaCompatible) {
    auto verdict = check_element_property(ring, endo, Property::SigmaCompatible, std::nullopt,
                                          limits);
    if (verdict.holds == Holds::False)
      throw RfError(Err::InvalidSpec, "sigma-compatible mode requires a sigma-compatible ring");
  } else {
    auto cert = verify_stability(ideal, limits);
    if (!cert.stable)
      throw RfError(Err::StabilityFailed, "bounded annihilator is not sigma-stable");
  }

  const auto products = ordered_products(ideal);
  SkewPoly current = g;

  while (true) {
    if (current.degree() == 0) {
      trace.result_elem = current.coeff(0);
      break;
    }
    const Elem bm = current.leading_coeff();
    // does the whole ideal kill the leading coefficient?
    bool ideal_kills_bm = true;
    for (const auto& prod : products)
      if (!right_scalar_mul(prod.poly, bm).is_zero()) {
        ideal_kills_bm = false;
        break;
      }
    if (ideal_kills_bm) {
      trace.result_elem = bm;
      break;
    }
    // first f in search order with f * b_m != 0
    const IdealProduct* chosen = nullptr;
    for (const auto& prod : products)
      if (!right_scalar_mul(prod.poly, bm).is_zero()) {
        chosen = &prod;
        break;
      }
    if (!chosen)
      throw RfError(Err::SearchExhausted, "no ideal element separates the leading coefficient");

    const auto& f = chosen->poly;
    // descent index
    std::optional<unsigned> p;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
      const Elem& ai = f.coeffs()[i];
      if (ring->is_zero(ai)) continue;
      const SkewPoly probe =
          mode == DescentMode::SigmaStable
              ? skew_mul(SkewPoly::monomial(ring, endo, ai, i), current)
              : left_scalar_mul(ai, current);
      if (!probe.is_zero()) p = static_cast<unsigned>(i);
    }
    if (!p)
      throw RfError(Err::NoProgress, "no descent index although f*b_m != 0");

    const Elem ap = f.coeffs()[*p];
    SkewPoly next = mode == DescentMode::SigmaStable
                        ? left_scalar_mul(ap, sigma_pow_map(current, *p))
                        : left_scalar_mul(ap, current);
    if (next.is_zero() || next.degree() >= current.degree())
      throw RfError(Err::NoProgress, "degree did not strictly decrease");

    if (!verify_annihilator_membership(ideal, next).member) {
      if (mode == DescentMode::SigmaStable)
        throw RfError(Err::StabilityFailed, "descent left the certified annihilator");
      throw RfError(Err::MembershipFailed, "descent left the certified annihilator");
    }

    WitnessStep step;
    step.g_before = to_string(current);
    step.f = to_string(f);
    step.f_origin = chosen->origin;
    step.p = *p;
    step.rule = mode == DescentMode::SigmaStable ? "a_p*sigma^p(g)" : "a_p*g";
    step.a_p = ring->serialize(ap);
    step.g_after = to_string(next);
    trace.steps.push_back(std::move(step));
    if (trace.steps.size() > static_cast<std::size_t>(g.degree()))
      throw RfError(Err::NoProgress, "more steps than the initial degree");
    current = std::move(next);
  }

  if (ring->is_zero(trace.result_elem))
    throw RfError(Err::NoProgress, "descent produced the zero constant");
  trace.result = ring->serialize(trace.result_elem);

  // certify the constant and replay the trace from the original g
  bool certified = true;
  for (const auto& prod : products)
    if (!right_scalar_mul(prod.poly, trace.result_elem).is_zero()) {
      certified = false;
      break;
    }
  SkewPoly replay = g;
  for (const auto& step : trace.steps) {
    const Elem ap = ring->parse(step.a_p);
    replay = mode == DescentMode::SigmaStable
                 ? left_scalar_mul(ap, sigma_pow_map(replay, step.p))
                 : left_scalar_mul(ap, replay);
    if (to_string(replay) != step.g_after) {
      certified = false;
      break;
    }
  }
  trace.verified = certified;
  if (!certified) throw RfError(Err::NoProgress, "trace replay self-check failed");
  return trace;
}

SuiteReport theorem21_random_suite(const std::vector<std::pair<RingPtr, EndoPtr>>& roster,
                                   int trials, std::uint64_t seed, const SearchLimits& limits) {
  SuiteReport report;
  report.id = "thm2.1-random";
  for (std::size_t ri = 0; ri < roster.size(); ++ri) {
    const auto& [ring, endo] = roster[ri];
    const std::string base_name = ring->describe() + " / " + endo->describe();
    // compatible mode when the ring certifies; otherwise fall back to the
    // stability certificate per ideal
    const bool compatible =
        check_element_property(ring, endo, Property::SigmaCompatible, std::nullopt, limits)
            .holds != Holds::False;
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ull * (ri + 1)));
    for (int t = 0; t < trials; ++t) {
      std::ostringstream name;
      name << base_name << " trial " << t;
      SuiteRow row;
      row.instance = name.str();
      try {
        const long long d = 2;
        std::uniform_int_distribution<int> ngen(1, 2);
        std::uniform_int_distribution<long long> degree_pick(0, d);
        std::vector<SkewPoly> gens;
        const int count = ngen(rng);
        for (int k = 0; k < count; ++k) {
          const long long deg = degree_pick(rng);
          std::vector<Elem> coeffs;
          for (long long i = 0; i <= deg; ++i) coeffs.push_back(ring->sample(rng));
          gens.emplace_back(ring, endo, std::move(coeffs));
        }
        auto ideal = RightIdealSpec::in_skew(ring, endo, gens, d);
        const auto ann = bounded_skew_annihilator(ideal, limits);
        if (ann.empty()) {
          row.status = "SKIPPED";
          row.detail = "no nonzero bounded g in r_S(I)";
        } else {
          const SkewPoly& g = ann.front();
          DescentMode mode = DescentMode::SigmaCompatible;
          if (!compatible) {
            if (verify_stability(ideal, limits).stable) {
              mode = DescentMode::SigmaStable;
            } else {
              row.status = "SKIPPED";
              row.detail = "neither mode prerequisite certified";
              report.rows.push_back(std::move(row));
              continue;
            }
          }
          auto trace = extract_witness(ideal, g, mode, limits);
          const auto constants = right_annihilator_constants_of_skew_ideal(ideal);
          const bool ok = std::find(constants.elements.begin(), constants.elements.end(),
                                    trace.result_elem) != constants.elements.end();
          row.status = ok ? "PASS" : "FAIL";
          row.detail = "g=" + to_string(g) + " result=" + trace.result + " steps=" +
                       std::to_string(trace.steps.size());
          if (!ok) report.all_clear = false;
        }
      } catch (const RfError& e) {
        row.status = "FAIL";
        row.detail = e.what();
        report.all_clear = false;
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace ringforge
