#include "ringforge/skewpoly.hpp"

namespace ringforge {

namespace {

void require_context(const SkewPoly& f, const SkewPoly& g) {
  if (f.ring().get() != g.ring().get() || f.endo().get() != g.endo().get())
    throw RfError(Err::ContextMismatch, "skew polynomials over different contexts");
}

}  // namespace

SkewPoly::SkewPoly(RingPtr ring, EndoPtr endo, std::vector<Elem> coeffs)
    : ring_(std::move(ring)), endo_(std::move(endo)), coeffs_(std::move(coeffs)) {
  if (endo_ && endo_->ring().get() != ring_.get())
    throw RfError(Err::ContextMismatch, "endomorphism is not on the coefficient ring");
  while (!coeffs_.empty() && ring_->is_zero(coeffs_.back())) coeffs_.pop_back();
}

SkewPoly SkewPoly::monomial(RingPtr ring, EndoPtr endo, const Elem& c, std::size_t k) {
  std::vector<Elem> coeffs(k + 1, ring->zero());
  coeffs[k] = c;
  return SkewPoly(std::move(ring), std::move(endo), std::move(coeffs));
}

Elem SkewPoly::leading_coeff() const {
  if (is_zero()) throw RfError(Err::ZeroPolynomial, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

SkewPoly skew_add(const SkewPoly& f, const SkewPoly& g) {
  require_context(f, g);
  const auto& r = f.ring();
  std::vector<Elem> out;
  std::size_t n = std::max(f.coeffs().size(), g.coeffs().size());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(r->add(f.coeff(i), g.coeff(i)));
  return SkewPoly(f.ring(), f.endo(), std::move(out));
}

SkewPoly skew_neg(const SkewPoly& f) {
  const auto& r = f.ring();
  std::vector<Elem> out;
  out.reserve(f.coeffs().size());
  for (auto& c : f.coeffs()) out.push_back(r->neg(c));
  return SkewPoly(f.ring(), f.endo(), std::move(out));
}

SkewPoly skew_sub(const SkewPoly& f, const SkewPoly& g) { return skew_add(f, skew_neg(g)); }

SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g) {
  require_context(f, g);
  const auto& r = f.ring();
  const auto& s = f.endo();
  if (f.is_zero() || g.is_zero()) return SkewPoly::zero(f.ring(), f.endo());
  std::vector<Elem> out(f.coeffs().size() + g.coeffs().size() - 1, r->zero());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (r->is_zero(f.coeffs()[i])) continue;
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
      Elem t = r->mul(f.coeffs()[i], s->apply_pow(g.coeffs()[j], static_cast<unsigned>(i)));
      out[i + j] = r->add(out[i + j], t);
    }
  }
  return SkewPoly(f.ring(), f.endo(), std::move(out));
}

SkewPoly right_scalar_mul(const SkewPoly& f, const Elem& c) {
  const auto& r = f.ring();
  const auto& s = f.endo();
  std::vector<Elem> out;
  out.reserve(f.coeffs().size());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    out.push_back(r->mul(f.coeffs()[i], s->apply_pow(c, static_cast<unsigned>(i))));
  return SkewPoly(f.ring(), f.endo(), std::move(out));
}

SkewPoly left_scalar_mul(const Elem& c, const SkewPoly& f) {
  const auto& r = f.ring();
  std::vector<Elem> out;
  out.reserve(f.coeffs().size());
  for (auto& a : f.coeffs()) out.push_back(r->mul(c, a));
  return SkewPoly(f.ring(), f.endo(), std::move(out));
}

SkewPoly sigma_map(const SkewPoly& f) {
  const auto& s = f.endo();
  std::vector<Elem> out;
  out.reserve(f.coeffs().size());
  for (auto& a : f.coeffs()) out.push_back(s->apply(a));
  return SkewPoly(f.ring(), f.endo(), std::move(out));
}

std::string to_string(const SkewPoly& f) {
  return serialize_poly_text(f.ring(), f.coeffs());
}

SkewPoly parse_skew_poly(const RingPtr& ring, const EndoPtr& endo, std::string_view text) {
  return SkewPoly(ring, endo, parse_poly_text(ring, text));
}

}  // namespace ringforge
