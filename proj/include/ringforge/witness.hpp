#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "ringforge/annihilator.hpp"

namespace ringforge {

enum class DescentMode { SigmaStable, SigmaCompatible };

const char* descent_mode_name(DescentMode m);

struct MembershipCertificate {
  bool member = false;
  bool exact = false;  // power bound covered sigma's detected order
  long long degree_bound = 0;
  unsigned power_bound = 0;
  std::string failure;  // first violating product, when not a member
  nlohmann::json to_json() const;
};

struct StabilityCertificate {
  bool stable = false;
  bool exact = false;
  std::size_t checked = 0;                    // bounded annihilator elements examined
  std::vector<std::string> annihilator;       // their serializations
  std::string failure;                        // element whose sigma-image escapes
  nlohmann::json to_json() const;
};

struct WitnessStep {
  std::string g_before;
  std::string f;         // chosen ideal element
  std::string f_origin;  // which generator product produced it
  unsigned p = 0;        // descent index
  std::string rule;     // "a_p*sigma^p(g)" or "a_p*g"
  std::string a_p;
  std::string g_after;
  nlohmann::json to_json() const;
};

struct WitnessTrace {
  DescentMode mode = DescentMode::SigmaCompatible;
  std::vector<WitnessStep> steps;
  std::string result;
  Elem result_elem;
  bool verified = false;  // result certified in r_R(I) and trace replays
  nlohmann::json to_json() const;
};

// Checks f_i * (c x^j) * g = 0 for every generator, every c in R, every
// j <= J; exact when J covers sigma's detected order.
MembershipCertificate verify_annihilator_membership(const RightIdealSpec& ideal,
                                                    const SkewPoly& g);

// Enumerates the bounded right annihilator of the ideal in S and checks that
// coefficientwise sigma keeps every element inside it.
StabilityCertificate verify_stability(const RightIdealSpec& ideal,
                                      const SearchLimits& limits = SearchLimits::defaults());

// Degree descent from a nonzero g in r_S(I) down to a nonzero constant of
// r_R(I), recording every step.
WitnessTrace extract_witness(const RightIdealSpec& ideal, const SkewPoly& g, DescentMode mode,
                             const SearchLimits& limits = SearchLimits::defaults());

// Randomized end-to-end exercise: sample skew ideals, search the bounded
// annihilator for a nonzero g, extract a witness, and re-certify it against
// the annihilator constants. Rows are PASS, FAIL or SKIPPED.
SuiteReport theorem21_random_suite(const std::vector<std::pair<RingPtr, EndoPtr>>& roster,
                                   int trials, std::uint64_t seed,
                                   const SearchLimits& limits = SearchLimits::defaults());

}  // namespace ringforge
