#include "ringforge/annihilator.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

namespace ringforge {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

void require_enumerable(const RingPtr& ring) {
  if (!ring->enumerable()) throw RfError(Err::NotEnumerable, "ring is not enumerable");
}

// The generator products f_i * (c x^j) for all c in R, j <= J, duplicates and
// zero dropped, in the deterministic search order (generator, then c
// canonical, then j ascending).
std::vector<SkewPoly> generator_products(const RightIdealSpec& ideal) {
  const unsigned J = ideal.effective_power_bound();
  const auto consts = ideal.ring->enumerate();
  std::vector<SkewPoly> out;
  std::set<std::vector<Elem>> seen;
  for (const auto& f : ideal.skew_generators)
    for (const auto& c : consts) {
      if (ideal.ring->is_zero(c)) continue;
      for (unsigned j = 0; j <= J; ++j) {
        SkewPoly h = skew_mul(f, SkewPoly::monomial(ideal.ring, ideal.endo, c, j));
        if (h.is_zero()) continue;
        if (seen.insert(h.coeffs()).second) out.push_back(std::move(h));
      }
    }
  return out;
}

}  // namespace

RightIdealSpec RightIdealSpec::in_ring(RingPtr ring, std::vector<Elem> generators) {
  RightIdealSpec spec;
  spec.ambient = Ambient::BaseRing;
  spec.ring = std::move(ring);
  for (auto& g : generators)
    if (!spec.ring->contains(g)) throw RfError(Err::RingMismatch, "generator outside the ring");
  spec.ring_generators = std::move(generators);
  return spec;
}

RightIdealSpec RightIdealSpec::in_skew(RingPtr ring, EndoPtr endo,
                                       std::vector<SkewPoly> generators, long long degree_bound,
                                       std::optional<unsigned> power_bound) {
  if (!endo || endo->ring() != ring)
    throw RfError(Err::ContextMismatch, "skew ideal needs an endomorphism of its base ring");
  RightIdealSpec spec;
  spec.ambient = Ambient::SkewPoly;
  spec.ring = std::move(ring);
  spec.endo = std::move(endo);
  if (degree_bound < 0) throw RfError(Err::InvalidSpec, "degree bound must be >= 0");
  for (const auto& g : generators) {
    if (g.ring() != spec.ring) throw RfError(Err::RingMismatch, "generator outside the skew ring");
    if (g.degree() > degree_bound)
      throw RfError(Err::InvalidSpec, "generator degree exceeds the ideal's degree bound");
  }
  spec.skew_generators = std::move(generators);
  spec.degree_bound = degree_bound;
  spec.power_bound = power_bound;
  return spec;
}

bool RightIdealSpec::zero_ideal() const {
  if (ambient == Ambient::BaseRing) {
    for (const auto& g : ring_generators)
      if (!ring->is_zero(g)) return false;
    return true;
  }
  for (const auto& g : skew_generators)
    if (!g.is_zero()) return false;
  return true;
}

unsigned RightIdealSpec::effective_power_bound() const {
  if (power_bound) return *power_bound;
  if (auto ord = endo->detected_order()) return *ord;
  throw RfError(Err::BoundTooLarge,
                "sigma has no detected finite order; supply an explicit power bound");
}

std::string RightIdealSpec::describe() const {
  std::ostringstream os;
  if (ambient == Ambient::BaseRing) {
    os << "ideal(";
    for (std::size_t i = 0; i < ring_generators.size(); ++i)
      os << (i ? ", " : "") << ring->serialize(ring_generators[i]);
    os << ") in " << ring->describe();
  } else {
    os << "skew-ideal(";
    for (std::size_t i = 0; i < skew_generators.size(); ++i)
      os << (i ? ", " : "") << to_string(skew_generators[i]);
    os << ") in " << ring->describe() << "[x;" << endo->describe() << "]";
  }
  return os.str();
}

std::vector<Elem> right_ideal_elements(const RingPtr& ring, const std::vector<Elem>& generators) {
  require_enumerable(ring);
  const auto all = ring->enumerate();
  std::set<Elem> span;
  span.insert(ring->zero());
  std::vector<Elem> products;
  for (const auto& g : generators)
    for (const auto& r : all) products.push_back(ring->mul(g, r));
  // additive closure: fold each product's cyclic contribution into the span
  for (const auto& p : products) {
    if (span.count(p)) continue;
    std::vector<Elem> current(span.begin(), span.end());
    std::vector<Elem> frontier = {p};
    while (!frontier.empty()) {
      std::vector<Elem> next;
      for (const auto& f : frontier)
        for (const auto& s : current)
          if (span.insert(ring->add(s, f)).second) next.push_back(ring->add(s, f));
      for (const auto& f : frontier) current.push_back(f);
      frontier = std::move(next);
    }
  }
  return std::vector<Elem>(span.begin(), span.end());
}

AnnihilatorResult right_annihilator_in_ring(const RightIdealSpec& ideal) {
  if (ideal.ambient != RightIdealSpec::Ambient::BaseRing)
    throw RfError(Err::ContextMismatch, "expected a base-ring ideal");
  require_enumerable(ideal.ring);
  const auto closure = right_ideal_elements(ideal.ring, ideal.ring_generators);
  AnnihilatorResult out;
  out.kind = AnnihilatorResult::Kind::ElementSet;
  for (const auto& c : ideal.ring->enumerate()) {
    bool kills = true;
    for (const auto& a : closure)
      if (!ideal.ring->is_zero(ideal.ring->mul(a, c))) {
        kills = false;
        break;
      }
    if (kills) out.elements.push_back(c);
  }
  return out;
}

bool skew_ideal_kills(const RightIdealSpec& ideal, const SkewPoly& g) {
  if (ideal.ambient != RightIdealSpec::Ambient::SkewPoly)
    throw RfError(Err::ContextMismatch, "expected a skew ideal");
  require_enumerable(ideal.ring);
  for (const auto& h : generator_products(ideal))
    if (!skew_mul(h, g).is_zero()) return false;
  return true;
}

AnnihilatorResult right_annihilator_constants_of_skew_ideal(const RightIdealSpec& ideal) {
  if (ideal.ambient != RightIdealSpec::Ambient::SkewPoly)
    throw RfError(Err::ContextMismatch, "expected a skew ideal");
  require_enumerable(ideal.ring);
  const unsigned J = ideal.effective_power_bound();
  const auto products = generator_products(ideal);
  AnnihilatorResult out;
  out.kind = AnnihilatorResult::Kind::BoundedCertificate;
  out.degree_bound = ideal.degree_bound;
  out.power_bound = J;
  auto ord = ideal.endo->detected_order();
  out.exact = ord.has_value() && J >= *ord;
  for (const auto& c : ideal.ring->enumerate()) {
    bool kills = true;
    for (const auto& h : products)
      if (!right_scalar_mul(h, c).is_zero()) {
        kills = false;
        break;
      }
    if (kills) out.elements.push_back(c);
  }
  return out;
}

std::vector<Elem> idempotents(const RingPtr& ring) {
  require_enumerable(ring);
  std::vector<Elem> out;
  for (const auto& e : ring->enumerate())
    if (ring->mul(e, e) == e) out.push_back(e);
  return out;
}

Verdict check_quasi_baer(const RingPtr& ring, int generator_bound, const SearchLimits& limits) {
  Timer timer;
  if (generator_bound < 1) throw RfError(Err::InvalidSpec, "generator bound must be >= 1");
  require_enumerable(ring);
  const auto elems = ring->enumerate();

  // annihilator sets that qualify: eR for each idempotent e
  std::vector<std::vector<Elem>> targets;
  for (const auto& e : idempotents(ring)) targets.push_back(right_ideal_elements(ring, {e}));

  std::uint64_t multisets = 1;  // rough count of generator multisets, for the ceiling
  for (int i = 0; i < generator_bound; ++i) {
    if (multisets > limits.ceiling / std::max<std::uint64_t>(elems.size(), 1))
      throw RfError(Err::BoundTooLarge, "too many generator multisets");
    multisets *= elems.size();
  }

  std::optional<std::vector<std::string>> witness;
  std::vector<Elem> gens;
  // unordered multisets of nonzero generators, sizes 0..G (size 0 = zero ideal)
  std::function<bool(std::size_t, int)> rec = [&](std::size_t from, int remaining) {
    const auto ann_set = right_annihilator_in_ring(RightIdealSpec::in_ring(ring, gens)).elements;
    bool matched = false;
    for (const auto& t : targets)
      if (t == ann_set) {
        matched = true;
        break;
      }
    if (!matched) {
      std::vector<std::string> w;
      for (const auto& g : gens) w.push_back(ring->serialize(g));
      witness = w;
      return true;
    }
    if (remaining == 0) return false;
    for (std::size_t i = from; i < elems.size(); ++i) {
      if (ring->is_zero(elems[i])) continue;
      gens.push_back(elems[i]);
      if (rec(i, remaining - 1)) return true;
      gens.pop_back();
    }
    return false;
  };
  rec(0, generator_bound);

  Verdict v;
  v.property = Property::QuasiBaer;
  v.ring = ring->describe();
  v.generator_bound = generator_bound;
  if (witness) {
    v.holds = Holds::False;
    v.witness = *witness;
  } else {
    v.holds = Holds::TrueUpToGenerators;
  }
  v.elapsed_ms = timer.ms();
  return v;
}

std::vector<SkewPoly> elements_of_skew_ideal(const RightIdealSpec& ideal,
                                             const SearchLimits& limits) {
  if (ideal.ambient != RightIdealSpec::Ambient::SkewPoly)
    throw RfError(Err::ContextMismatch, "expected a skew ideal");
  require_enumerable(ideal.ring);
  auto cmp = [](const SkewPoly& a, const SkewPoly& b) { return a < b; };
  std::set<SkewPoly, decltype(cmp)> span(cmp);
  std::vector<SkewPoly> seeds;
  for (auto& h : generator_products(ideal))
    if (h.degree() <= ideal.degree_bound) seeds.push_back(std::move(h));
  const SkewPoly zero = SkewPoly::zero(ideal.ring, ideal.endo);
  span.insert(zero);
  for (const auto& p : seeds) {
    if (span.count(p)) continue;
    std::vector<SkewPoly> current(span.begin(), span.end());
    std::vector<SkewPoly> frontier = {p};
    while (!frontier.empty()) {
      if (span.size() > limits.ceiling)
        throw RfError(Err::BoundTooLarge, "ideal element stream exceeds the search ceiling");
      std::vector<SkewPoly> next;
      for (const auto& f : frontier)
        for (const auto& s : current) {
          SkewPoly sum = skew_add(s, f);
          if (span.insert(sum).second) next.push_back(std::move(sum));
        }
      for (const auto& f : frontier) current.push_back(f);
      frontier = std::move(next);
    }
  }
  std::vector<SkewPoly> out;
  for (const auto& p : span)
    if (!p.is_zero()) out.push_back(p);
  return out;
}

std::vector<SkewPoly> bounded_skew_annihilator(const RightIdealSpec& ideal,
                                               const SearchLimits& limits) {
  if (ideal.ambient != RightIdealSpec::Ambient::SkewPoly)
    throw RfError(Err::ContextMismatch, "expected a skew ideal");
  require_enumerable(ideal.ring);
  const auto elems = ideal.ring->enumerate();
  const auto products = generator_products(ideal);
  const long long d = ideal.degree_bound;

  std::uint64_t count = 1;
  for (long long i = 0; i <= d; ++i) {
    if (count > limits.ceiling / std::max<std::uint64_t>(elems.size(), 1))
      throw RfError(Err::BoundTooLarge, "annihilator scan exceeds the search ceiling");
    count *= elems.size();
  }

  std::vector<SkewPoly> out;
  if (products.empty()) {
    // zero ideal: every bounded polynomial qualifies
    std::vector<Elem> coeffs;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t j, std::size_t m) {
      for (const auto& c : elems) {
        if (j == m && ideal.ring->is_zero(c)) continue;
        coeffs[j] = c;
        if (j == m) out.emplace_back(ideal.ring, ideal.endo, coeffs);
        else rec(j + 1, m);
      }
    };
    for (long long m = 0; m <= d; ++m) {
      coeffs.assign(static_cast<std::size_t>(m) + 1, ideal.ring->zero());
      rec(0, static_cast<std::size_t>(m));
    }
    return out;
  }

  // Lowest nonzero coefficient index per product; with g_0..g_j assigned, the
  // coefficient lo+j of h*g is fully determined (its g-indices are lo+j-i with
  // i >= lo, hence <= j) and must be zero for any extension of the prefix.
  std::vector<std::size_t> min_support;
  for (const auto& h : products) {
    std::size_t lo = 0;
    while (lo < h.coeffs().size() && ideal.ring->is_zero(h.coeffs()[lo])) ++lo;
    min_support.push_back(lo);
  }

  std::vector<Elem> coeffs;
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t j, std::size_t m) {
    for (const auto& c : elems) {
      if (j == m && ideal.ring->is_zero(c)) continue;
      coeffs[j] = c;
      bool ok = true;
      for (std::size_t hi = 0; hi < products.size() && ok; ++hi) {
        const auto& hc = products[hi].coeffs();
        const std::size_t k = min_support[hi] + j;
        Elem acc = ideal.ring->zero();
        for (std::size_t i = min_support[hi]; i < hc.size() && i <= k; ++i)
          acc = ideal.ring->add(
              acc, ideal.ring->mul(hc[i], ideal.endo->apply_pow(coeffs[k - i],
                                                                static_cast<unsigned>(i))));
        ok = ideal.ring->is_zero(acc);
      }
      if (!ok) continue;
      if (j == m) {
        SkewPoly g(ideal.ring, ideal.endo, coeffs);
        bool kills = true;
        for (const auto& h : products)
          if (!skew_mul(h, g).is_zero()) {
            kills = false;
            break;
          }
        if (kills) out.push_back(std::move(g));
      } else if (rec(j + 1, m)) {
        return true;
      }
    }
    return false;
  };
  for (long long m = 0; m <= d; ++m) {
    coeffs.assign(static_cast<std::size_t>(m) + 1, ideal.ring->zero());
    rec(0, static_cast<std::size_t>(m));
  }
  return out;
}

}  // namespace ringforge
