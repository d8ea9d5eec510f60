#include <algorithm>

#include "ringforge/algebra.hpp"

namespace ringforge {

namespace {

// Enumeration lists are sorted under Elem::cmp (table rings excepted, handled
// separately), so index lookup is a binary search.
int index_of(const std::vector<Elem>& sorted, const Elem& e) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), e);
  if (it == sorted.end() || !(*it == e)) return -1;
  return static_cast<int>(it - sorted.begin());
}

constexpr std::uint64_t kEnumCap = 8192;  // enumeration size cap for order detection

}  // namespace

EndoPtr Endo::identity(RingPtr ring, const CheckConfig& cfg) {
  auto e = std::shared_ptr<Endo>(new Endo());
  e->rule_ = Rule::Identity;
  e->ring_ = std::move(ring);
  e->verify(cfg);
  e->detect_order();
  return e;
}

EndoPtr Endo::swap(RingPtr ring, const CheckConfig& cfg) {
  bool ok = false;
  if (ring->kind() == Ring::Kind::CongruencePairs) ok = true;
  if (ring->kind() == Ring::Kind::Product && ring->factors().size() == 2 &&
      ring->factors()[0]->describe() == ring->factors()[1]->describe())
    ok = true;
  if (!ok)
    throw RfError(Err::RuleMismatch,
                  "swap requires a product of two identical factors or congruence-pairs, got " +
                      ring->describe());
  auto e = std::shared_ptr<Endo>(new Endo());
  e->rule_ = Rule::Swap;
  e->ring_ = std::move(ring);
  e->verify(cfg);
  e->detect_order();
  return e;
}

EndoPtr Endo::eval_at_zero(RingPtr ring, const CheckConfig& cfg) {
  if (ring->kind() != Ring::Kind::Poly)
    throw RfError(Err::RuleMismatch, "eval-at-zero requires a poly ring, got " + ring->describe());
  auto e = std::shared_ptr<Endo>(new Endo());
  e->rule_ = Rule::EvalAtZero;
  e->ring_ = std::move(ring);
  e->verify(cfg);
  e->detect_order();
  return e;
}

EndoPtr Endo::negate_offdiagonal(RingPtr ring, const CheckConfig& cfg) {
  if (ring->kind() != Ring::Kind::Matrix || ring->mat_dim() != 2)
    throw RfError(Err::RuleMismatch,
                  "negate-offdiagonal requires matrix(2,·), got " + ring->describe());
  auto e = std::shared_ptr<Endo>(new Endo());
  e->rule_ = Rule::NegateOffdiag;
  e->ring_ = std::move(ring);
  e->verify(cfg);
  e->detect_order();
  return e;
}

EndoPtr Endo::table(RingPtr ring, std::vector<int> images, const CheckConfig& cfg) {
  if (!ring->enumerable())
    throw RfError(Err::RuleMismatch, "explicit-table requires an enumerable ring");
  auto e = std::shared_ptr<Endo>(new Endo());
  e->rule_ = Rule::Table;
  e->domain_ = ring->enumerate();
  if (images.size() != e->domain_.size())
    throw RfError(Err::InvalidSpec, "endomorphism table size mismatch");
  for (int v : images)
    if (v < 0 || static_cast<std::size_t>(v) >= e->domain_.size())
      throw RfError(Err::InvalidSpec, "endomorphism table image out of range");
  e->images_ = std::move(images);
  e->ring_ = std::move(ring);
  e->verify(cfg);
  e->detect_order();
  return e;
}

EndoPtr Endo::from_rule(RingPtr ring, Rule rule, const CheckConfig& cfg) {
  switch (rule) {
    case Rule::Identity: return identity(std::move(ring), cfg);
    case Rule::Swap: return swap(std::move(ring), cfg);
    case Rule::EvalAtZero: return eval_at_zero(std::move(ring), cfg);
    case Rule::NegateOffdiag: return negate_offdiagonal(std::move(ring), cfg);
    case Rule::Table: throw RfError(Err::InvalidSpec, "table endo needs explicit images");
  }
  throw RfError(Err::InvalidSpec, "unreachable");
}

Elem Endo::apply(const Elem& e) const {
  switch (rule_) {
    case Rule::Identity:
      return e;
    case Rule::Swap:
      return Elem::composite(e.tag(), {e.parts()[1], e.parts()[0]});
    case Rule::EvalAtZero: {
      if (e.parts().empty()) return e;
      const Elem& c0 = e.parts()[0];
      if (ring_->base()->is_zero(c0)) return ring_->zero();
      return Elem::poly({c0});
    }
    case Rule::NegateOffdiag: {
      const auto& b = ring_->base();
      return Elem::matrix(
          {e.parts()[0], b->neg(e.parts()[1]), b->neg(e.parts()[2]), e.parts()[3]});
    }
    case Rule::Table: {
      int i = index_of(domain_, e);
      if (i < 0) throw RfError(Err::RingMismatch, "element outside endomorphism domain");
      return domain_[static_cast<std::size_t>(images_[i])];
    }
  }
  throw RfError(Err::InvalidSpec, "unreachable");
}

Elem Endo::apply_pow(const Elem& e, unsigned k) const {
  if (detected_order_) k %= *detected_order_;
  Elem cur = e;
  for (unsigned i = 0; i < k; ++i) cur = apply(cur);
  return cur;
}

void Endo::verify(const CheckConfig& cfg) const {
  if (apply(ring_->zero()) != ring_->zero())
    throw RfError(Err::NotAnEndomorphism, describe() + " does not fix zero");
  if (apply(ring_->one()) != ring_->one())
    throw RfError(Err::NotAnEndomorphism, describe() + " does not fix one");
  auto check_pair = [&](const Elem& a, const Elem& b) {
    if (apply(ring_->add(a, b)) != ring_->add(apply(a), apply(b)))
      throw RfError(Err::NotAnEndomorphism, describe() + " is not additive");
    if (apply(ring_->mul(a, b)) != ring_->mul(apply(a), apply(b)))
      throw RfError(Err::NotAnEndomorphism, describe() + " is not multiplicative");
  };
  if (ring_->enumerable() && *ring_->order() <= cfg.exhaustive_cap) {
    auto elems = ring_->enumerate();
    for (const auto& a : elems)
      for (const auto& b : elems) check_pair(a, b);
  } else {
    std::mt19937_64 rng(cfg.seed ^ 0xabcdef1234567890ull);
    for (std::size_t t = 0; t < cfg.sample_triples; ++t)
      check_pair(ring_->sample(rng), ring_->sample(rng));
  }
}

void Endo::detect_order() {
  if (ring_->enumerable() && *ring_->order() <= kEnumCap) {
    auto elems = ring_->enumerate();
    std::vector<int> img(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      int j = index_of(elems, apply(elems[i]));
      if (j < 0 && ring_->kind() == Ring::Kind::Table) {
        // table ring enumeration lists zero first, not fully sorted
        for (std::size_t t = 0; t < elems.size(); ++t)
          if (elems[t] == apply(elems[i])) j = static_cast<int>(t);
      }
      img[i] = j;
    }
    std::vector<int> cur = img;
    const unsigned limit = 10000;
    for (unsigned k = 1; k <= limit; ++k) {
      bool id = true;
      for (std::size_t i = 0; i < cur.size() && id; ++i) id = cur[i] == static_cast<int>(i);
      if (id) {
        detected_order_ = k;
        return;
      }
      for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = img[static_cast<std::size_t>(cur[i])];
    }
    return;  // no finite order found
  }
  switch (rule_) {
    case Rule::Identity: detected_order_ = 1; break;
    case Rule::Swap: detected_order_ = 2; break;
    case Rule::NegateOffdiag: detected_order_ = 2; break;
    case Rule::EvalAtZero: break;  // sigma^2 = sigma != id: no finite order
    case Rule::Table: break;
  }
}

std::string Endo::describe() const {
  switch (rule_) {
    case Rule::Identity: return "identity";
    case Rule::Swap: return "swap";
    case Rule::EvalAtZero: return "eval-at-zero";
    case Rule::NegateOffdiag: return "negate-offdiagonal";
    case Rule::Table: return "explicit-table";
  }
  return "?";
}

}  // namespace ringforge
