#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ringforge/algebra.hpp"
#include "ringforge/skewpoly.hpp"

namespace ringforge {

enum class Property {
  Reduced,
  Reversible,
  Semicommutative,
  Commutative,
  Domain,
  SigmaCompatible,
  SigmaSemicommutative,
  SigmaReversibleRight,
  SigmaReversibleLeft,
  ArmendarizRing,
  ArmendarizModule,
  MccoyRight,
  MccoyLeft,
  SigmaSkewMccoy,
  ConditionC1,
  ConditionC2,
  SkewRingSemicommutative,
  QuasiBaer,
};

const char* property_name(Property p);
std::optional<Property> property_from_name(std::string_view name);
bool property_needs_endo(Property p);

enum class Holds { TrueExhaustive, TrueUpToBound, TrueUpToGenerators, False };

const char* holds_name(Holds h);

// Global knobs for the bounded searches. The ceiling caps the number of
// candidate pairs a polynomial scan may face (counted up front from the
// carrier sizes, before any pruning).
struct SearchLimits {
  std::uint64_t ceiling = 100000000ull;
  unsigned threads = 1;
  static SearchLimits defaults();  // honors RINGFORGE_CEILING
};

struct Verdict {
  Property property = Property::Reduced;
  Holds holds = Holds::TrueExhaustive;
  std::string ring;                          // description of the carrier
  std::string endo;                          // empty when not applicable
  std::string module;                        // empty when not applicable
  std::optional<long long> degree_bound;
  std::optional<long long> element_bound;
  std::optional<int> generator_bound;
  std::vector<std::string> witness;          // empty iff holds != False
  double elapsed_ms = 0.0;

  nlohmann::json to_json() const;
};

// Element-quantified properties (reduced, reversible, semicommutative,
// commutative, domain, and the sigma variants). endo may be null except for
// sigma properties. Non-enumerable rings require element_bound.
Verdict check_element_property(const RingPtr& ring, const EndoPtr& endo, Property p,
                               std::optional<long long> element_bound = std::nullopt,
                               const SearchLimits& limits = SearchLimits::defaults());

// Conditions C1 (ma=0 implies m sigma(a)=0) and C2 (m sigma(a) a=0 implies
// m sigma(a)=0) for a module over the endomorphism's ring. Scalars run in the
// outer loop so the reported witness is least under (a, m) order.
Verdict check_condition_C(const ModulePtr& module, const EndoPtr& endo, int which,
                          std::optional<long long> element_bound = std::nullopt,
                          const SearchLimits& limits = SearchLimits::defaults());

// Armendariz at degree bound d: every pair with zero (untwisted) product has
// all coefficientwise products zero.
Verdict check_armendariz_ring(const RingPtr& ring, long long degree,
                              const SearchLimits& limits = SearchLimits::defaults());
Verdict check_armendariz_module(const ModulePtr& module, long long degree,
                                const SearchLimits& limits = SearchLimits::defaults());

enum class MccoyVariant { Right, Left, SigmaSkew };

// McCoy at degree bound d: every nonzero pair p, q with pq = 0 (twisted
// product for the sigma-skew variant) admits a nonzero constant annihilator.
Verdict check_mccoy(const RingPtr& ring, const EndoPtr& endo, MccoyVariant variant,
                    long long degree, const SearchLimits& limits = SearchLimits::defaults());

// Bounded semicommutativity of R[x;sigma]: p q = 0 implies p h q = 0 for all
// h of degree <= d.
Verdict check_skewring_semicommutative(const RingPtr& ring, const EndoPtr& endo,
                                       long long degree,
                                       const SearchLimits& limits = SearchLimits::defaults());

// Single-point refutation of sigma-semicommutativity: checks ab = 0 together
// with a*1*sigma(b) != 0 for one concrete pair; usable on non-enumerable rings.
struct PointwiseRefutation {
  bool applicable = false;  // ab = 0 held
  bool refuted = false;     // and a sigma(b) != 0
  std::string ab, a_sigma_b;
};
PointwiseRefutation refute_sigma_semicommutative_pointwise(const RingPtr& ring,
                                                           const EndoPtr& endo, const Elem& a,
                                                           const Elem& b);

// Implication suites over built-in instance rosters.
struct SuiteRow {
  std::string instance;
  std::string status;  // PASS | VIOLATION | SKIPPED
  std::string detail;
  nlohmann::json to_json() const;
};

struct SuiteReport {
  std::string id;
  std::vector<SuiteRow> rows;
  bool all_clear = true;  // no VIOLATION row
  nlohmann::json to_json() const;
};

SuiteReport run_implication_suite(const std::string& suite_id,
                                  const SearchLimits& limits = SearchLimits::defaults());

// Text form "c0 + c1*x + ..." for module polynomials, mirroring the ring
// polynomial format but with module-serialized coefficients.
std::string module_poly_text(const ModulePtr& module, const std::vector<Elem>& coeffs);

}  // namespace ringforge
