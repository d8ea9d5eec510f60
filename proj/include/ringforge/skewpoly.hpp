#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ringforge/algebra.hpp"

namespace ringforge {

// Element of S = R[x;sigma]: left-written coefficients, twist x*a = sigma(a)*x.
// Always normalized: trailing zero coefficients stripped; the zero polynomial
// has an empty coefficient list and degree "minus infinity" (is_zero()).
class SkewPoly {
 public:
  SkewPoly(RingPtr ring, EndoPtr endo, std::vector<Elem> coeffs);

  static SkewPoly zero(RingPtr ring, EndoPtr endo) { return SkewPoly(std::move(ring), std::move(endo), {}); }
  static SkewPoly constant(RingPtr ring, EndoPtr endo, const Elem& c) {
    return SkewPoly(std::move(ring), std::move(endo), {c});
  }
  static SkewPoly monomial(RingPtr ring, EndoPtr endo, const Elem& c, std::size_t k);

  const RingPtr& ring() const { return ring_; }
  const EndoPtr& endo() const { return endo_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the normalized form; -1 stands in for the zero polynomial's
  // "minus infinity" sentinel (callers must branch on is_zero()).
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ring_->zero(); }
  Elem leading_coeff() const;

  friend bool operator==(const SkewPoly& a, const SkewPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const SkewPoly& a, const SkewPoly& b) { return !(a == b); }
  // Canonical polynomial order: degree first, then coefficients from the
  // constant term up.
  friend bool operator<(const SkewPoly& a, const SkewPoly& b) {
    return Elem::cmp(Elem::poly(a.coeffs_), Elem::poly(b.coeffs_)) < 0;
  }

 private:
  RingPtr ring_;
  EndoPtr endo_;
  std::vector<Elem> coeffs_;
};

SkewPoly skew_add(const SkewPoly& f, const SkewPoly& g);
SkewPoly skew_neg(const SkewPoly& f);
SkewPoly skew_sub(const SkewPoly& f, const SkewPoly& g);
// Coefficient of x^k in fg is sum over i+j=k of a_i * sigma^i(b_j).
SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g);
// f * c under the twist: sum a_i sigma^i(c) x^i.
SkewPoly right_scalar_mul(const SkewPoly& f, const Elem& c);
// c * f: constants multiply untwisted from the left.
SkewPoly left_scalar_mul(const Elem& c, const SkewPoly& f);
// Coefficientwise sigma.
SkewPoly sigma_map(const SkewPoly& f);

std::string to_string(const SkewPoly& f);
SkewPoly parse_skew_poly(const RingPtr& ring, const EndoPtr& endo, std::string_view text);

}  // namespace ringforge
