#include <algorithm>

#include "ringforge/algebra.hpp"

namespace ringforge {

namespace {

int index_of(const std::vector<Elem>& sorted, const Elem& e) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), e);
  if (it == sorted.end() || !(*it == e)) return -1;
  return static_cast<int>(it - sorted.begin());
}

}  // namespace

ModulePtr Module::ring_as_module(RingPtr ring, const CheckConfig& cfg) {
  auto m = std::shared_ptr<Module>(new Module());
  m->kind_ = Kind::RingAsModule;
  m->zero_ = ring->zero();
  m->order_ = ring->order();
  m->ring_ = std::move(ring);
  m->verify_axioms(cfg);
  return m;
}

ModulePtr Module::ring_power(RingPtr ring, int k, const CheckConfig& cfg) {
  if (k < 1) throw RfError(Err::InvalidSpec, "ring-power exponent must be >= 1");
  if (!ring->commutative())
    throw RfError(Err::NonCommutativeBase, ring->describe() + " is not commutative");
  auto m = std::shared_ptr<Module>(new Module());
  m->kind_ = Kind::RingPower;
  m->power_ = k;
  m->zero_ = Elem::tuple(std::vector<Elem>(static_cast<std::size_t>(k), ring->zero()));
  if (ring->order()) {
    std::uint64_t n = 1;
    for (int i = 0; i < k; ++i) n *= *ring->order();
    m->order_ = n;
  }
  m->ring_ = std::move(ring);
  m->verify_axioms(cfg);
  return m;
}

ModulePtr Module::table_module(RingPtr ring, std::vector<std::vector<int>> add,
                               std::vector<std::vector<int>> action, const CheckConfig& cfg) {
  if (!ring->commutative())
    throw RfError(Err::NonCommutativeBase, ring->describe() + " is not commutative");
  if (!ring->enumerable())
    throw RfError(Err::NotEnumerable, "table module requires an enumerable base ring");
  const std::size_t n = add.size();
  if (n == 0 || action.size() != n)
    throw RfError(Err::InvalidSpec, "table module needs matching add/action tables");
  const std::size_t rn = static_cast<std::size_t>(*ring->order());
  for (auto& row : add) {
    if (row.size() != n) throw RfError(Err::InvalidSpec, "table module add row mismatch");
    for (int v : row)
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw RfError(Err::InvalidSpec, "table module entry out of range");
  }
  for (auto& row : action) {
    if (row.size() != rn) throw RfError(Err::InvalidSpec, "table module action row mismatch");
    for (int v : row)
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw RfError(Err::InvalidSpec, "table module entry out of range");
  }
  auto m = std::shared_ptr<Module>(new Module());
  m->kind_ = Kind::Table;
  m->tadd_ = std::move(add);
  m->taction_ = std::move(action);
  // locate additive identity
  int zi = -1;
  for (std::size_t z = 0; z < n; ++z) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = m->tadd_[z][x] == static_cast<int>(x) && m->tadd_[x][z] == static_cast<int>(x);
    if (ok) { zi = static_cast<int>(z); break; }
  }
  if (zi < 0) throw RfError(Err::AxiomViolation, "table module has no additive identity");
  m->zero_ = Elem::residue(zi);
  m->order_ = static_cast<std::uint64_t>(n);
  m->ring_ = std::move(ring);
  m->verify_axioms(cfg);
  return m;
}

bool Module::contains(const Elem& m) const {
  switch (kind_) {
    case Kind::RingAsModule:
      return ring_->contains(m);
    case Kind::RingPower: {
      if (m.tag() != Elem::Tag::Tuple || m.parts().size() != static_cast<std::size_t>(power_))
        return false;
      for (auto& p : m.parts())
        if (!ring_->contains(p)) return false;
      return true;
    }
    case Kind::Table:
      return m.tag() == Elem::Tag::Residue && m.as_residue() >= 0 &&
             static_cast<std::uint64_t>(m.as_residue()) < *order_;
  }
  return false;
}

Elem Module::add(const Elem& m, const Elem& n) const {
  switch (kind_) {
    case Kind::RingAsModule:
      return ring_->add(m, n);
    case Kind::RingPower: {
      std::vector<Elem> out;
      out.reserve(m.parts().size());
      for (std::size_t i = 0; i < m.parts().size(); ++i)
        out.push_back(ring_->add(m.parts()[i], n.parts()[i]));
      return Elem::tuple(std::move(out));
    }
    case Kind::Table:
      return Elem::residue(tadd_[m.as_residue()][n.as_residue()]);
  }
  throw RfError(Err::InvalidSpec, "unreachable");
}

Elem Module::neg(const Elem& m) const {
  switch (kind_) {
    case Kind::RingAsModule:
      return ring_->neg(m);
    case Kind::RingPower: {
      std::vector<Elem> out;
      out.reserve(m.parts().size());
      for (auto& p : m.parts()) out.push_back(ring_->neg(p));
      return Elem::tuple(std::move(out));
    }
    case Kind::Table: {
      for (std::size_t b = 0; b < *order_; ++b)
        if (tadd_[m.as_residue()][b] == zero_.as_residue())
          return Elem::residue(static_cast<long long>(b));
      throw RfError(Err::AxiomViolation, "table module element without inverse");
    }
  }
  throw RfError(Err::InvalidSpec, "unreachable");
}

Elem Module::act(const Elem& m, const Elem& a) const {
  switch (kind_) {
    case Kind::RingAsModule:
      return ring_->mul(m, a);
    case Kind::RingPower: {
      std::vector<Elem> out;
      out.reserve(m.parts().size());
      for (auto& p : m.parts()) out.push_back(ring_->mul(p, a));
      return Elem::tuple(std::move(out));
    }
    case Kind::Table: {
      auto elems = ring_->enumerate();
      int i = index_of(elems, a);
      if (i < 0) throw RfError(Err::RingMismatch, "scalar outside base ring");
      return Elem::residue(taction_[m.as_residue()][static_cast<std::size_t>(i)]);
    }
  }
  throw RfError(Err::InvalidSpec, "unreachable");
}

std::vector<Elem> Module::enumerate(std::optional<long long> bound) const {
  switch (kind_) {
    case Kind::RingAsModule:
      return ring_->enumerate(bound);
    case Kind::RingPower: {
      auto base = ring_->enumerate(bound);
      std::vector<Elem> out;
      std::vector<std::size_t> idx(static_cast<std::size_t>(power_), 0);
      for (;;) {
        std::vector<Elem> parts;
        parts.reserve(idx.size());
        for (auto i : idx) parts.push_back(base[i]);
        out.push_back(Elem::tuple(std::move(parts)));
        std::size_t i = idx.size();
        while (i > 0) {
          --i;
          if (++idx[i] < base.size()) break;
          idx[i] = 0;
          if (i == 0) {
            std::sort(out.begin(), out.end());
            return out;
          }
        }
      }
    }
    case Kind::Table: {
      std::vector<Elem> out;
      for (std::size_t i = 0; i < *order_; ++i) out.push_back(Elem::residue(static_cast<long long>(i)));
      std::sort(out.begin(), out.end(), [this](const Elem& a, const Elem& b) {
        if (a == zero_) return b != zero_;
        if (b == zero_) return false;
        return a < b;
      });
      return out;
    }
  }
  throw RfError(Err::InvalidSpec, "unreachable");
}

Elem Module::sample(std::mt19937_64& rng) const {
  switch (kind_) {
    case Kind::RingAsModule:
      return ring_->sample(rng);
    case Kind::RingPower: {
      std::vector<Elem> parts;
      parts.reserve(static_cast<std::size_t>(power_));
      for (int i = 0; i < power_; ++i) parts.push_back(ring_->sample(rng));
      return Elem::tuple(std::move(parts));
    }
    case Kind::Table:
      return Elem::residue(static_cast<long long>(rng() % *order_));
  }
  throw RfError(Err::InvalidSpec, "unreachable");
}

std::string Module::serialize(const Elem& m) const {
  switch (kind_) {
    case Kind::RingAsModule:
      return ring_->serialize(m);
    case Kind::RingPower: {
      std::string out = "(";
      for (std::size_t i = 0; i < m.parts().size(); ++i) {
        if (i) out += ",";
        out += ring_->serialize(m.parts()[i]);
      }
      return out + ")";
    }
    case Kind::Table:
      return std::to_string(m.as_residue());
  }
  throw RfError(Err::InvalidSpec, "unreachable");
}

Elem Module::parse(std::string_view text) const {
  switch (kind_) {
    case Kind::RingAsModule:
      return ring_->parse(text);
    case Kind::RingPower: {
      // reuse the tuple syntax via a throwaway product parse
      std::string s(text);
      s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
      if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw RfError(Err::ParseError, "expected tuple");
      std::vector<Elem> parts;
      int depth = 0;
      std::size_t start = 1;
      for (std::size_t i = 1; i + 1 <= s.size(); ++i) {
        char c = s[i];
        if (c == '(' || c == '[') ++depth;
        else if ((c == ')' || c == ']') && i + 1 != s.size()) --depth;
        if ((c == ',' && depth == 0) || i + 1 == s.size()) {
          parts.push_back(ring_->parse(s.substr(start, i - start)));
          start = i + 1;
        }
      }
      if (parts.size() != static_cast<std::size_t>(power_))
        throw RfError(Err::ParseError, "tuple arity mismatch");
      return Elem::tuple(std::move(parts));
    }
    case Kind::Table: {
      long long v = std::stoll(std::string(text));
      return Elem::residue(v);
    }
  }
  throw RfError(Err::InvalidSpec, "unreachable");
}

std::string Module::describe() const {
  switch (kind_) {
    case Kind::RingAsModule:
      return "self";
    case Kind::RingPower:
      return "ring-power(" + std::to_string(power_) + ")";
    case Kind::Table:
      return "table(" + std::to_string(order_ ? *order_ : 0) + ")";
  }
  return "?";
}

void Module::verify_axioms(const CheckConfig& cfg) const {
  std::vector<Elem> ms, as;
  bool exhaustive = order_ && *order_ <= cfg.exhaustive_cap && ring_->enumerable() &&
                    *ring_->order() <= cfg.exhaustive_cap;
  std::mt19937_64 rng(cfg.seed ^ 0x6d6f64756c65ull);
  if (exhaustive) {
    ms = enumerate();
    as = ring_->enumerate();
  } else {
    for (int i = 0; i < 16; ++i) {
      ms.push_back(sample(rng));
      as.push_back(ring_->sample(rng));
    }
    ms.push_back(zero_);
    as.push_back(ring_->one());
  }
  auto check = [&](const Elem& m, const Elem& n, const Elem& a, const Elem& b) {
    if (add(m, n) != add(n, m))
      throw RfError(Err::AxiomViolation, "module addition not commutative");
    if (act(add(m, n), a) != add(act(m, a), act(n, a)))
      throw RfError(Err::AxiomViolation, "module action not additive in the module");
    if (act(m, ring_->add(a, b)) != add(act(m, a), act(m, b)))
      throw RfError(Err::AxiomViolation, "module action not additive in the ring");
    if (act(m, ring_->mul(a, b)) != act(act(m, a), b))
      throw RfError(Err::AxiomViolation, "module action not multiplicative");
  };
  for (const auto& m : ms) {
    if (act(m, ring_->one()) != m)
      throw RfError(Err::AxiomViolation, "module action: m*1 != m");
    if (add(m, neg(m)) != zero_)
      throw RfError(Err::AxiomViolation, "module additive inverse fails");
    if (add(m, zero_) != m) throw RfError(Err::AxiomViolation, "module zero not neutral");
  }
  if (exhaustive) {
    for (const auto& m : ms)
      for (const auto& n : ms)
        for (const auto& a : as)
          for (const auto& b : as) check(m, n, a, b);
  } else {
    std::uniform_int_distribution<std::size_t> pm(0, ms.size() - 1), pa(0, as.size() - 1);
    for (std::size_t t = 0; t < cfg.sample_triples; ++t)
      check(ms[pm(rng)], ms[pm(rng)], as[pa(rng)], as[pa(rng)]);
  }
}

// ---------------------------------------------------------------------------
// Nagata extension

RingPtr Ring::nagata(RingPtr base, ModulePtr module, EndoPtr endo, const CheckConfig& cfg) {
  if (!base->commutative())
    throw RfError(Err::NonCommutativeBase, "Nagata base must be commutative");
  if (module->ring().get() != base.get())
    throw RfError(Err::ContextMismatch, "module is not over the Nagata base ring");
  if (endo->ring().get() != base.get())
    throw RfError(Err::ContextMismatch, "endomorphism is not on the Nagata base ring");
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = Kind::Nagata;
  r->zero_ = Elem::nagata(base->zero(), module->zero());
  r->one_ = Elem::nagata(base->one(), module->zero());
  if (base->order() && module->order()) r->order_ = *base->order() * *module->order();
  r->commutative_ = false;
  r->base_ = std::move(base);
  r->nag_module_ = std::move(module);
  r->nag_endo_ = std::move(endo);
  if (r->order_) {
    // exhaustive commutativity scan for finite Nagata rings
    if (*r->order_ <= 4096) {
      auto elems = r->enumerate();
      bool comm = true;
      for (std::size_t i = 0; i < elems.size() && comm; ++i)
        for (std::size_t j = i + 1; j < elems.size() && comm; ++j)
          comm = r->mul(elems[i], elems[j]) == r->mul(elems[j], elems[i]);
      r->commutative_ = comm;
    }
  } else if (r->nag_endo_->rule() == Endo::Rule::Identity) {
    r->commutative_ = true;  // R (+) M with the identity twist is commutative
  }
  r->verify_axioms(cfg);
  return r;
}

// ---------------------------------------------------------------------------
// torsion submodule

TorsionResult torsion_submodule(const ModulePtr& module) {
  if (!module->enumerable() || !module->ring()->enumerable())
    throw RfError(Err::NotEnumerable, "torsion submodule needs a finite module over a finite ring");
  auto scalars = module->ring()->enumerate();
  auto elems = module->enumerate();
  TorsionResult out;
  for (const auto& m : elems) {
    bool torsion = false;
    for (const auto& r : scalars) {
      if (module->ring()->is_zero(r)) continue;
      if (module->is_zero(module->act(m, r))) {
        torsion = true;
        break;
      }
    }
    if (torsion) out.elements.push_back(m);
  }
  if (out.elements.size() == elems.size()) out.cls = TorsionClass::Torsion;
  else if (out.elements.size() <= 1) out.cls = TorsionClass::TorsionFree;
  else out.cls = TorsionClass::Mixed;
  // flag whether the base is actually a domain; callers may want to know
  bool domain = true;
  for (const auto& a : scalars) {
    if (module->ring()->is_zero(a)) continue;
    for (const auto& b : scalars) {
      if (module->ring()->is_zero(b)) continue;
      if (module->ring()->is_zero(module->ring()->mul(a, b))) {
        domain = false;
        break;
      }
    }
    if (!domain) break;
  }
  out.base_is_domain = domain;
  return out;
}

// ---------------------------------------------------------------------------
// module polynomials

ModulePoly::ModulePoly(ModulePtr module, std::vector<Elem> coeffs)
    : module_(std::move(module)), coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && module_->is_zero(coeffs_.back())) coeffs_.pop_back();
}

ModulePoly module_poly_add(const ModulePoly& a, const ModulePoly& b) {
  if (a.module().get() != b.module().get())
    throw RfError(Err::ContextMismatch, "module polynomials over different modules");
  const auto& mod = a.module();
  std::vector<Elem> out;
  std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  for (std::size_t i = 0; i < n; ++i) out.push_back(mod->add(a.coeff(i), b.coeff(i)));
  return ModulePoly(mod, std::move(out));
}

ModulePoly module_poly_mul(const ModulePoly& m, const std::vector<Elem>& ring_poly) {
  const auto& mod = m.module();
  if (m.is_zero() || ring_poly.empty()) return ModulePoly::zero(mod);
  std::vector<Elem> out(m.coeffs().size() + ring_poly.size() - 1, mod->zero());
  for (std::size_t i = 0; i < m.coeffs().size(); ++i)
    for (std::size_t j = 0; j < ring_poly.size(); ++j)
      out[i + j] = mod->add(out[i + j], mod->act(m.coeffs()[i], ring_poly[j]));
  return ModulePoly(mod, std::move(out));
}

}  // namespace ringforge
