#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringforge/properties.hpp"
#include "ringforge/skewpoly.hpp"

namespace ringforge {

// A right ideal given by generators, either in the base ring R or in the skew
// polynomial ring S = R[x;sigma]. An empty generator list is the zero ideal.
struct RightIdealSpec {
  enum class Ambient { BaseRing, SkewPoly };

  Ambient ambient = Ambient::BaseRing;
  RingPtr ring;
  EndoPtr endo;  // required for the skew ambient
  std::vector<Elem> ring_generators;
  std::vector<SkewPoly> skew_generators;
  long long degree_bound = 2;                 // skew ambient: degree cap for searches
  std::optional<unsigned> power_bound;        // skew ambient: monomial exponent cap J;
                                              // defaults to detected_order of sigma

  static RightIdealSpec in_ring(RingPtr ring, std::vector<Elem> generators);
  static RightIdealSpec in_skew(RingPtr ring, EndoPtr endo, std::vector<SkewPoly> generators,
                                long long degree_bound,
                                std::optional<unsigned> power_bound = std::nullopt);

  bool zero_ideal() const;
  // Effective J: power_bound if given, else sigma's detected order (throws
  // BoundTooLarge when neither is available).
  unsigned effective_power_bound() const;
  std::string describe() const;
};

struct AnnihilatorResult {
  enum class Kind { ElementSet, BoundedCertificate };
  Kind kind = Kind::ElementSet;
  std::vector<Elem> elements;  // canonical order, always contains zero
  long long degree_bound = 0;  // skew ambient only
  unsigned power_bound = 0;    // skew ambient only
  bool exact = true;           // false when J did not cover sigma's detected order
};

// Element closure of the right ideal in an enumerable ring: the additive
// closure of {g_i * r : r in R}, canonical order.
std::vector<Elem> right_ideal_elements(const RingPtr& ring, const std::vector<Elem>& generators);

// Exact right annihilator of a finitely generated right ideal of the base ring.
AnnihilatorResult right_annihilator_in_ring(const RightIdealSpec& ideal);

// Constants of R killed by every element of a skew right ideal, tested through
// the generator-monomial reduction: c qualifies iff f_i * (d x^j) * c = 0 for
// every generator f_i, every d in R and every j <= J. Exact when J covers the
// detected order of sigma, otherwise a superset certificate.
AnnihilatorResult right_annihilator_constants_of_skew_ideal(const RightIdealSpec& ideal);

// All idempotents of an enumerable ring, canonical order.
std::vector<Elem> idempotents(const RingPtr& ring);

// For every right ideal on <= G generators, checks that its right annihilator
// equals eR for some idempotent e.
Verdict check_quasi_baer(const RingPtr& ring, int generator_bound,
                         const SearchLimits& limits = SearchLimits::defaults());

// Distinct nonzero elements of the skew ideal of degree <= degree_bound:
// the generator products f_i * (c x^j) and their additive combinations,
// canonical order.
std::vector<SkewPoly> elements_of_skew_ideal(const RightIdealSpec& ideal,
                                             const SearchLimits& limits = SearchLimits::defaults());

// True iff f_i * (c x^j) * g = 0 for all generators, all c in R, all j <= J.
bool skew_ideal_kills(const RightIdealSpec& ideal, const SkewPoly& g);

// All polynomials g of degree <= the ideal's degree bound with
// skew_ideal_kills(ideal, g), canonical order, zero polynomial excluded.
std::vector<SkewPoly> bounded_skew_annihilator(const RightIdealSpec& ideal,
                                               const SearchLimits& limits = SearchLimits::defaults());

}  // namespace ringforge
