#include "ringforge/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>

namespace ringforge {

namespace {

long long normalize_mod(long long v, long long n) {
  long long r = v % n;
  if (r < 0) r += n;
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Split on a separator character at bracket depth zero.
std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[') ++depth;
    else if (c == ')' || c == ']') --depth;
    else if (c == sep && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

BigInt parse_bigint(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw RfError(Err::ParseError, "empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw RfError(Err::ParseError, "bad integer literal");
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw RfError(Err::ParseError, "bad integer literal '" + std::string(s) + "'");
  return BigInt(std::string(s));
}

std::string_view strip_outer(std::string_view s, char open, char close) {
  s = trim(s);
  if (s.size() < 2 || s.front() != open || s.back() != close)
    throw RfError(Err::ParseError, "expected '" + std::string(1, open) + "...'" +
                                       std::string(1, close) + " in '" + std::string(s) + "'");
  // ensure the closing bracket matches the opening one
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(' || s[i] == '[') ++depth;
    else if (s[i] == ')' || s[i] == ']') --depth;
    if (depth == 0 && i + 1 != s.size())
      throw RfError(Err::ParseError, "unbalanced brackets in '" + std::string(s) + "'");
  }
  return s.substr(1, s.size() - 2);
}

}  // namespace

// ---------------------------------------------------------------------------
// construction

RingPtr Ring::zmod(long long n, const CheckConfig& cfg) {
  if (n < 1) throw RfError(Err::InvalidSpec, "zmod modulus must be >= 1");
  if (n == 1) throw RfError(Err::TrivialRing, "zmod(1) has zero = one");
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = Kind::Zmod;
  r->param_ = n;
  r->zero_ = Elem::residue(0);
  r->one_ = Elem::residue(1);
  r->order_ = static_cast<std::uint64_t>(n);
  r->commutative_ = true;
  r->verify_axioms(cfg);
  return r;
}

RingPtr Ring::product(std::vector<RingPtr> factors, const CheckConfig& cfg) {
  if (factors.size() < 2) throw RfError(Err::InvalidSpec, "product needs at least two factors");
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = Kind::Product;
  std::vector<Elem> z, o;
  std::optional<std::uint64_t> order(1);
  bool comm = true;
  for (auto& f : factors) {
    z.push_back(f->zero());
    o.push_back(f->one());
    if (order && f->order()) *order *= *f->order();
    else order.reset();
    comm = comm && f->commutative();
  }
  r->factors_ = std::move(factors);
  r->zero_ = Elem::tuple(std::move(z));
  r->one_ = Elem::tuple(std::move(o));
  r->order_ = order;
  r->commutative_ = comm;
  r->verify_axioms(cfg);
  return r;
}

RingPtr Ring::matrix_ring(int k, RingPtr base, const CheckConfig& cfg) {
  if (k < 1) throw RfError(Err::InvalidSpec, "matrix dimension must be >= 1");
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = Kind::Matrix;
  r->mat_dim_ = k;
  std::vector<Elem> z(static_cast<std::size_t>(k) * k, base->zero());
  std::vector<Elem> o = z;
  for (int i = 0; i < k; ++i) o[static_cast<std::size_t>(i) * k + i] = base->one();
  r->zero_ = Elem::matrix(std::move(z));
  r->one_ = Elem::matrix(std::move(o));
  if (base->order()) {
    std::uint64_t n = 1;
    for (int i = 0; i < k * k; ++i) n *= *base->order();
    r->order_ = n;
  }
  r->commutative_ = (k == 1) && base->commutative();
  r->base_ = std::move(base);
  r->verify_axioms(cfg);
  return r;
}

RingPtr Ring::integers(const CheckConfig& cfg) {
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = Kind::Integers;
  r->zero_ = Elem::integer(0);
  r->one_ = Elem::integer(1);
  r->commutative_ = true;
  r->verify_axioms(cfg);
  return r;
}

RingPtr Ring::congruence_pairs(long long modulus, const CheckConfig& cfg) {
  if (modulus < 2) throw RfError(Err::InvalidSpec, "congruence-pairs modulus must be >= 2");
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = Kind::CongruencePairs;
  r->param_ = modulus;
  r->zero_ = Elem::tuple({Elem::integer(0), Elem::integer(0)});
  r->one_ = Elem::tuple({Elem::integer(1), Elem::integer(1)});
  r->commutative_ = true;
  r->verify_axioms(cfg);
  return r;
}

RingPtr Ring::poly_ring(RingPtr base, const CheckConfig& cfg) {
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = Kind::Poly;
  r->zero_ = Elem::poly({});
  r->one_ = Elem::poly({base->one()});
  r->commutative_ = base->commutative();
  r->base_ = std::move(base);
  r->verify_axioms(cfg);
  return r;
}

RingPtr Ring::table_ring(std::vector<std::vector<int>> add, std::vector<std::vector<int>> mul,
                         const CheckConfig& cfg) {
  const std::size_t n = add.size();
  if (n < 2 || mul.size() != n)
    throw RfError(Err::InvalidSpec, "table ring needs two n x n tables, n >= 2");
  for (auto* t : {&add, &mul})
    for (auto& row : *t) {
      if (row.size() != n) throw RfError(Err::InvalidSpec, "table row size mismatch");
      for (int v : row)
        if (v < 0 || static_cast<std::size_t>(v) >= n)
          throw RfError(Err::InvalidSpec, "table entry out of range");
    }
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = Kind::Table;
  r->param_ = static_cast<long long>(n);
  r->tadd_ = std::move(add);
  r->tmul_ = std::move(mul);
  // locate the additive and multiplicative identities
  int zi = -1, oi = -1;
  for (std::size_t z = 0; z < n; ++z) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = r->tadd_[z][x] == static_cast<int>(x) && r->tadd_[x][z] == static_cast<int>(x);
    if (ok) { zi = static_cast<int>(z); break; }
  }
  for (std::size_t o = 0; o < n; ++o) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = r->tmul_[o][x] == static_cast<int>(x) && r->tmul_[x][o] == static_cast<int>(x);
    if (ok) { oi = static_cast<int>(o); break; }
  }
  if (zi < 0) throw RfError(Err::AxiomViolation, "table ring has no additive identity");
  if (oi < 0) throw RfError(Err::AxiomViolation, "table ring has no multiplicative identity");
  if (zi == oi) throw RfError(Err::TrivialRing, "table ring has zero = one");
  r->zero_ = Elem::residue(zi);
  r->one_ = Elem::residue(oi);
  r->order_ = static_cast<std::uint64_t>(n);
  bool comm = true;
  for (std::size_t a = 0; a < n && comm; ++a)
    for (std::size_t b = 0; b < n && comm; ++b) comm = r->tmul_[a][b] == r->tmul_[b][a];
  r->commutative_ = comm;
  r->verify_axioms(cfg);
  return r;
}

// ---------------------------------------------------------------------------
// membership

bool Ring::contains(const Elem& e) const {
  switch (kind_) {
    case Kind::Zmod:
      return e.tag() == Elem::Tag::Residue && e.as_residue() >= 0 && e.as_residue() < param_;
    case Kind::Table:
      return e.tag() == Elem::Tag::Residue && e.as_residue() >= 0 && e.as_residue() < param_;
    case Kind::Integers:
      return e.tag() == Elem::Tag::Integer;
    case Kind::Product: {
      if (e.tag() != Elem::Tag::Tuple || e.parts().size() != factors_.size()) return false;
      for (std::size_t i = 0; i < factors_.size(); ++i)
        if (!factors_[i]->contains(e.parts()[i])) return false;
      return true;
    }
    case Kind::CongruencePairs: {
      if (e.tag() != Elem::Tag::Tuple || e.parts().size() != 2) return false;
      for (auto& p : e.parts())
        if (p.tag() != Elem::Tag::Integer) return false;
      return (e.parts()[0].as_integer() - e.parts()[1].as_integer()) % param_ == 0;
    }
    case Kind::Matrix: {
      if (e.tag() != Elem::Tag::Matrix ||
          e.parts().size() != static_cast<std::size_t>(mat_dim_) * mat_dim_)
        return false;
      for (auto& p : e.parts())
        if (!base_->contains(p)) return false;
      return true;
    }
    case Kind::Poly: {
      if (e.tag() != Elem::Tag::Poly) return false;
      for (auto& p : e.parts())
        if (!base_->contains(p)) return false;
      return e.parts().empty() || !base_->is_zero(e.parts().back());
    }
    case Kind::Nagata:
      return e.tag() == Elem::Tag::Nagata && e.parts().size() == 2 &&
             base_->contains(e.parts()[0]) && nag_module_->contains(e.parts()[1]);
  }
  return false;
}

// ---------------------------------------------------------------------------
// arithmetic

Elem Ring::add(const Elem& a, const Elem& b) const {
  switch (kind_) {
    case Kind::Zmod:
      return Elem::residue(normalize_mod(a.as_residue() + b.as_residue(), param_));
    case Kind::Table:
      return Elem::residue(tadd_[a.as_residue()][b.as_residue()]);
    case Kind::Integers:
      return Elem::integer(a.as_integer() + b.as_integer());
    case Kind::Product: {
      std::vector<Elem> out;
      out.reserve(factors_.size());
      for (std::size_t i = 0; i < factors_.size(); ++i)
        out.push_back(factors_[i]->add(a.parts()[i], b.parts()[i]));
      return Elem::tuple(std::move(out));
    }
    case Kind::CongruencePairs:
      return Elem::tuple({Elem::integer(a.parts()[0].as_integer() + b.parts()[0].as_integer()),
                          Elem::integer(a.parts()[1].as_integer() + b.parts()[1].as_integer())});
    case Kind::Matrix: {
      std::vector<Elem> out;
      out.reserve(a.parts().size());
      for (std::size_t i = 0; i < a.parts().size(); ++i)
        out.push_back(base_->add(a.parts()[i], b.parts()[i]));
      return Elem::matrix(std::move(out));
    }
    case Kind::Poly: {
      std::vector<Elem> out;
      std::size_t n = std::max(a.parts().size(), b.parts().size());
      out.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        const Elem& ca = i < a.parts().size() ? a.parts()[i] : base_->zero();
        const Elem& cb = i < b.parts().size() ? b.parts()[i] : base_->zero();
        out.push_back(base_->add(ca, cb));
      }
      while (!out.empty() && base_->is_zero(out.back())) out.pop_back();
      return Elem::poly(std::move(out));
    }
    case Kind::Nagata:
      return Elem::nagata(base_->add(a.parts()[0], b.parts()[0]),
                          nag_module_->add(a.parts()[1], b.parts()[1]));
  }
  throw RfError(Err::InvalidSpec, "unreachable");
}

Elem Ring::neg(const Elem& a) const {
  switch (kind_) {
    case Kind::Zmod:
      return Elem::residue(normalize_mod(-a.as_residue(), param_));
    case Kind::Table: {
      for (long long b = 0; b < param_; ++b)
        if (tadd_[a.as_residue()][b] == zero_.as_residue()) return Elem::residue(b);
      throw RfError(Err::AxiomViolation, "table ring element without additive inverse");
    }
    case Kind::Integers:
      return Elem::integer(-a.as_integer());
    case Kind::Product: {
      std::vector<Elem> out;
      out.reserve(factors_.size());
      for (std::size_t i = 0; i < factors_.size(); ++i)
        out.push_back(factors_[i]->neg(a.parts()[i]));
      return Elem::tuple(std::move(out));
    }
    case Kind::CongruencePairs:
      return Elem::tuple({Elem::integer(-a.parts()[0].as_integer()),
                          Elem::integer(-a.parts()[1].as_integer())});
    case Kind::Matrix: {
      std::vector<Elem> out;
      out.reserve(a.parts().size());
      for (auto& p : a.parts()) out.push_back(base_->neg(p));
      return Elem::matrix(std::move(out));
    }
    case Kind::Poly: {
      std::vector<Elem> out;
      out.reserve(a.parts().size());
      for (auto& p : a.parts()) out.push_back(base_->neg(p));
      return Elem::poly(std::move(out));
    }
    case Kind::Nagata:
      return Elem::nagata(base_->neg(a.parts()[0]), nag_module_->neg(a.parts()[1]));
  }
  throw RfError(Err::InvalidSpec, "unreachable");
}

Elem Ring::mul(const Elem& a, const Elem& b) const {
  switch (kind_) {
    case Kind::Zmod:
      return Elem::residue(normalize_mod(a.as_residue() * b.as_residue(), param_));
    case Kind::Table:
      return Elem::residue(tmul_[a.as_residue()][b.as_residue()]);
    case Kind::Integers:
      return Elem::integer(a.as_integer() * b.as_integer());
    case Kind::Product: {
      std::vector<Elem> out;
      out.reserve(factors_.size());
      for (std::size_t i = 0; i < factors_.size(); ++i)
        out.push_back(factors_[i]->mul(a.parts()[i], b.parts()[i]));
      return Elem::tuple(std::move(out));
    }
    case Kind::CongruencePairs:
      return Elem::tuple({Elem::integer(a.parts()[0].as_integer() * b.parts()[0].as_integer()),
                          Elem::integer(a.parts()[1].as_integer() * b.parts()[1].as_integer())});
    case Kind::Matrix: {
      const int k = mat_dim_;
      std::vector<Elem> out(static_cast<std::size_t>(k) * k, base_->zero());
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          Elem acc = base_->zero();
          for (int t = 0; t < k; ++t)
            acc = base_->add(acc, base_->mul(a.parts()[static_cast<std::size_t>(i) * k + t],
                                             b.parts()[static_cast<std::size_t>(t) * k + j]));
          out[static_cast<std::size_t>(i) * k + j] = std::move(acc);
        }
      return Elem::matrix(std::move(out));
    }
    case Kind::Poly: {
      if (a.parts().empty() || b.parts().empty()) return zero_;
      std::vector<Elem> out(a.parts().size() + b.parts().size() - 1, base_->zero());
      for (std::size_t i = 0; i < a.parts().size(); ++i)
        for (std::size_t j = 0; j < b.parts().size(); ++j)
          out[i + j] = base_->add(out[i + j], base_->mul(a.parts()[i], b.parts()[j]));
      while (!out.empty() && base_->is_zero(out.back())) out.pop_back();
      return Elem::poly(std::move(out));
    }
    case Kind::Nagata: {
      // (a, m)(b, n) = (ab, n sigma(a) + m b)
      const Elem& ra = a.parts()[0];
      const Elem& ma = a.parts()[1];
      const Elem& rb = b.parts()[0];
      const Elem& mb = b.parts()[1];
      Elem prod = base_->mul(ra, rb);
      Elem m = nag_module_->add(nag_module_->act(mb, nag_endo_->apply(ra)),
                                nag_module_->act(ma, rb));
      return Elem::nagata(std::move(prod), std::move(m));
    }
  }
  throw RfError(Err::InvalidSpec, "unreachable");
}

Elem ring_add(const RingPtr& r, const Elem& a, const Elem& b) {
  if (!r->contains(a) || !r->contains(b))
    throw RfError(Err::RingMismatch, "operands do not belong to " + r->describe());
  return r->add(a, b);
}
Elem ring_mul(const RingPtr& r, const Elem& a, const Elem& b) {
  if (!r->contains(a) || !r->contains(b))
    throw RfError(Err::RingMismatch, "operands do not belong to " + r->describe());
  return r->mul(a, b);
}
Elem ring_neg(const RingPtr& r, const Elem& a) {
  if (!r->contains(a)) throw RfError(Err::RingMismatch, "operand does not belong to " + r->describe());
  return r->neg(a);
}
Elem ring_sub(const RingPtr& r, const Elem& a, const Elem& b) {
  if (!r->contains(a) || !r->contains(b))
    throw RfError(Err::RingMismatch, "operands do not belong to " + r->describe());
  return r->sub(a, b);
}

// ---------------------------------------------------------------------------
// enumeration and sampling

std::vector<Elem> Ring::enumerate(std::optional<long long> bound) const {
  switch (kind_) {
    case Kind::Zmod:
    case Kind::Table: {
      std::vector<Elem> out;
      out.reserve(param_);
      for (long long i = 0; i < param_; ++i) out.push_back(Elem::residue(i));
      if (kind_ == Kind::Table) {
        // indices in canonical order but zero first
        std::sort(out.begin(), out.end(), [this](const Elem& a, const Elem& b) {
          if (a == zero_) return b != zero_;
          if (b == zero_) return false;
          return a < b;
        });
      }
      return out;
    }
    case Kind::Integers: {
      if (!bound) throw RfError(Err::NotEnumerable, "integers need an element bound");
      std::vector<Elem> out;
      out.push_back(Elem::integer(0));
      for (long long v = 1; v <= *bound; ++v) {
        out.push_back(Elem::integer(v));
        out.push_back(Elem::integer(-v));
      }
      return out;
    }
    case Kind::CongruencePairs: {
      if (!bound) throw RfError(Err::NotEnumerable, "congruence-pairs need an element bound");
      std::vector<Elem> out;
      for (long long a = -*bound; a <= *bound; ++a)
        for (long long b = -*bound; b <= *bound; ++b)
          if ((a - b) % param_ == 0) out.push_back(Elem::tuple({Elem::integer(a), Elem::integer(b)}));
      std::sort(out.begin(), out.end());
      return out;
    }
    case Kind::Product: {
      std::vector<std::vector<Elem>> lists;
      for (auto& f : factors_) lists.push_back(f->enumerate(bound));
      std::vector<Elem> out;
      std::vector<std::size_t> idx(lists.size(), 0);
      for (;;) {
        std::vector<Elem> parts;
        parts.reserve(lists.size());
        for (std::size_t i = 0; i < lists.size(); ++i) parts.push_back(lists[i][idx[i]]);
        out.push_back(Elem::tuple(std::move(parts)));
        std::size_t i = lists.size();
        while (i > 0) {
          --i;
          if (++idx[i] < lists[i].size()) break;
          idx[i] = 0;
          if (i == 0) {
            std::sort(out.begin(), out.end());
            return out;
          }
        }
      }
    }
    case Kind::Matrix: {
      auto entries = base_->enumerate(bound);
      const std::size_t cells = static_cast<std::size_t>(mat_dim_) * mat_dim_;
      std::vector<Elem> out;
      std::vector<std::size_t> idx(cells, 0);
      for (;;) {
        std::vector<Elem> parts;
        parts.reserve(cells);
        for (std::size_t i = 0; i < cells; ++i) parts.push_back(entries[idx[i]]);
        out.push_back(Elem::matrix(std::move(parts)));
        std::size_t i = cells;
        while (i > 0) {
          --i;
          if (++idx[i] < entries.size()) break;
          idx[i] = 0;
          if (i == 0) {
            std::sort(out.begin(), out.end());
            return out;
          }
        }
      }
    }
    case Kind::Poly: {
      if (!bound) throw RfError(Err::NotEnumerable, "poly ring needs a degree bound");
      auto coeffs = base_->enumerate();
      std::vector<Elem> out;
      out.push_back(zero_);
      for (long long deg = 0; deg <= *bound; ++deg) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(deg) + 1, 0);
        std::vector<Elem> block;
        for (;;) {
          if (!base_->is_zero(coeffs[idx.back()])) {
            std::vector<Elem> parts;
            parts.reserve(idx.size());
            for (auto i : idx) parts.push_back(coeffs[i]);
            block.push_back(Elem::poly(std::move(parts)));
          }
          std::size_t i = idx.size();
          bool done = false;
          while (i > 0) {
            --i;
            if (++idx[i] < coeffs.size()) break;
            idx[i] = 0;
            if (i == 0) done = true;
          }
          if (done) break;
        }
        std::sort(block.begin(), block.end());
        out.insert(out.end(), block.begin(), block.end());
      }
      return out;
    }
    case Kind::Nagata: {
      auto as = base_->enumerate(bound);
      auto ms = nag_module_->enumerate(bound);
      std::vector<Elem> out;
      out.reserve(as.size() * ms.size());
      for (auto& a : as)
        for (auto& m : ms) out.push_back(Elem::nagata(a, m));
      std::sort(out.begin(), out.end());
      return out;
    }
  }
  throw RfError(Err::InvalidSpec, "unreachable");
}

Elem Ring::sample(std::mt19937_64& rng) const {
  switch (kind_) {
    case Kind::Zmod:
    case Kind::Table:
      return Elem::residue(static_cast<long long>(rng() % static_cast<std::uint64_t>(param_)));
    case Kind::Integers: {
      std::uniform_int_distribution<long long> d(-50, 50);
      return Elem::integer(d(rng));
    }
    case Kind::CongruencePairs: {
      std::uniform_int_distribution<long long> d(-40, 40), k(-10, 10);
      long long a = d(rng);
      return Elem::tuple({Elem::integer(a), Elem::integer(a + param_ * k(rng))});
    }
    case Kind::Product: {
      std::vector<Elem> parts;
      parts.reserve(factors_.size());
      for (auto& f : factors_) parts.push_back(f->sample(rng));
      return Elem::tuple(std::move(parts));
    }
    case Kind::Matrix: {
      std::vector<Elem> parts;
      const std::size_t cells = static_cast<std::size_t>(mat_dim_) * mat_dim_;
      parts.reserve(cells);
      for (std::size_t i = 0; i < cells; ++i) parts.push_back(base_->sample(rng));
      return Elem::matrix(std::move(parts));
    }
    case Kind::Poly: {
      std::uniform_int_distribution<int> d(0, 3);
      int deg = d(rng);
      std::vector<Elem> parts;
      for (int i = 0; i <= deg; ++i) parts.push_back(base_->sample(rng));
      while (!parts.empty() && base_->is_zero(parts.back())) parts.pop_back();
      return Elem::poly(std::move(parts));
    }
    case Kind::Nagata:
      return Elem::nagata(base_->sample(rng), nag_module_->sample(rng));
  }
  throw RfError(Err::InvalidSpec, "unreachable");
}

// ---------------------------------------------------------------------------
// axiom verification

void Ring::verify_axioms(const CheckConfig& cfg) const {
  if (zero_ == one_) throw RfError(Err::TrivialRing, describe() + " has zero = one");
  std::vector<Elem> pool;
  bool exhaustive = order_ && *order_ <= cfg.exhaustive_cap;
  if (exhaustive) {
    pool = enumerate();
  } else {
    std::mt19937_64 rng(cfg.seed);
    for (std::size_t i = 0; i < 24; ++i) pool.push_back(sample(rng));
    pool.push_back(zero_);
    pool.push_back(one_);
  }
  auto check_triple = [&](const Elem& a, const Elem& b, const Elem& c) {
    if (add(add(a, b), c) != add(a, add(b, c)))
      throw RfError(Err::AxiomViolation, describe() + ": addition not associative");
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw RfError(Err::AxiomViolation, describe() + ": multiplication not associative");
    if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
      throw RfError(Err::AxiomViolation, describe() + ": left distributivity fails");
    if (mul(add(a, b), c) != add(mul(a, c), mul(b, c)))
      throw RfError(Err::AxiomViolation, describe() + ": right distributivity fails");
  };
  for (const auto& a : pool) {
    if (add(a, zero_) != a) throw RfError(Err::AxiomViolation, describe() + ": zero not neutral");
    if (add(a, neg(a)) != zero_)
      throw RfError(Err::AxiomViolation, describe() + ": additive inverse fails");
    if (mul(a, one_) != a || mul(one_, a) != a)
      throw RfError(Err::AxiomViolation, describe() + ": one not neutral");
  }
  if (exhaustive) {
    for (const auto& a : pool)
      for (const auto& b : pool)
        if (add(a, b) != add(b, a))
          throw RfError(Err::AxiomViolation, describe() + ": addition not commutative");
    for (const auto& a : pool)
      for (const auto& b : pool)
        for (const auto& c : pool) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (std::size_t t = 0; t < cfg.sample_triples; ++t) {
      const Elem& a = pool[pick(rng)];
      const Elem& b = pool[pick(rng)];
      const Elem& c = pool[pick(rng)];
      if (add(a, b) != add(b, a))
        throw RfError(Err::AxiomViolation, describe() + ": addition not commutative");
      check_triple(a, b, c);
    }
  }
}

// ---------------------------------------------------------------------------
// serialization

std::string Ring::serialize(const Elem& e) const {
  switch (kind_) {
    case Kind::Zmod:
    case Kind::Table:
      return std::to_string(e.as_residue());
    case Kind::Integers:
      return e.as_integer().str();
    case Kind::Product: {
      std::string out = "(";
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += ",";
        out += factors_[i]->serialize(e.parts()[i]);
      }
      return out + ")";
    }
    case Kind::CongruencePairs:
      return "(" + e.parts()[0].as_integer().str() + "," + e.parts()[1].as_integer().str() + ")";
    case Kind::Matrix: {
      std::string out = "[";
      for (int i = 0; i < mat_dim_; ++i) {
        if (i) out += ",";
        out += "[";
        for (int j = 0; j < mat_dim_; ++j) {
          if (j) out += ",";
          out += base_->serialize(e.parts()[static_cast<std::size_t>(i) * mat_dim_ + j]);
        }
        out += "]";
      }
      return out + "]";
    }
    case Kind::Poly:
      return serialize_poly_text(base_, e.parts());
    case Kind::Nagata:
      return "(" + base_->serialize(e.parts()[0]) + " | " + nag_module_->serialize(e.parts()[1]) +
             ")";
  }
  throw RfError(Err::InvalidSpec, "unreachable");
}

Elem Ring::parse(std::string_view text) const {
  text = trim(text);
  switch (kind_) {
    case Kind::Zmod: {
      BigInt v = parse_bigint(text);
      BigInt m = v % param_;
      if (m < 0) m += param_;
      return Elem::residue(m.convert_to<long long>());
    }
    case Kind::Table: {
      BigInt v = parse_bigint(text);
      if (v < 0 || v >= param_) throw RfError(Err::ParseError, "table index out of range");
      return Elem::residue(v.convert_to<long long>());
    }
    case Kind::Integers:
      return Elem::integer(parse_bigint(text));
    case Kind::Product: {
      auto inner = strip_outer(text, '(', ')');
      auto items = split_top_level(inner, ',');
      if (items.size() != factors_.size())
        throw RfError(Err::ParseError, "tuple arity mismatch in '" + std::string(text) + "'");
      std::vector<Elem> parts;
      for (std::size_t i = 0; i < items.size(); ++i) parts.push_back(factors_[i]->parse(items[i]));
      return Elem::tuple(std::move(parts));
    }
    case Kind::CongruencePairs: {
      auto inner = strip_outer(text, '(', ')');
      auto items = split_top_level(inner, ',');
      if (items.size() != 2) throw RfError(Err::ParseError, "expected a pair");
      Elem e = Elem::tuple({Elem::integer(parse_bigint(items[0])), Elem::integer(parse_bigint(items[1]))});
      if (!contains(e))
        throw RfError(Err::ParseError, "pair entries not congruent mod " + std::to_string(param_));
      return e;
    }
    case Kind::Matrix: {
      auto inner = strip_outer(text, '[', ']');
      auto rows = split_top_level(inner, ',');
      if (rows.size() != static_cast<std::size_t>(mat_dim_))
        throw RfError(Err::ParseError, "matrix row count mismatch");
      std::vector<Elem> parts;
      for (auto row : rows) {
        auto cells = split_top_level(strip_outer(row, '[', ']'), ',');
        if (cells.size() != static_cast<std::size_t>(mat_dim_))
          throw RfError(Err::ParseError, "matrix column count mismatch");
        for (auto c : cells) parts.push_back(base_->parse(c));
      }
      return Elem::matrix(std::move(parts));
    }
    case Kind::Poly:
      return Elem::poly(parse_poly_text(base_, text));
    case Kind::Nagata: {
      auto inner = strip_outer(text, '(', ')');
      auto items = split_top_level(inner, '|');
      if (items.size() != 2) throw RfError(Err::ParseError, "expected '(a | m)'");
      return Elem::nagata(base_->parse(items[0]), nag_module_->parse(items[1]));
    }
  }
  throw RfError(Err::InvalidSpec, "unreachable");
}

std::string serialize_poly_text(const RingPtr& base, const std::vector<Elem>& coeffs) {
  if (coeffs.empty()) return "0";
  const bool wrap = base->kind() == Ring::Kind::Poly || base->kind() == Ring::Kind::Nagata;
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Elem& c = coeffs[i];
    if (base->is_zero(c)) continue;
    if (!first) out += " + ";
    first = false;
    std::string cs = base->serialize(c);
    if (wrap) cs = "(" + cs + ")";
    if (i == 0) {
      out += cs;
    } else {
      std::string xs = i == 1 ? "x" : "x^" + std::to_string(i);
      out += (c == base->one()) ? xs : cs + "*" + xs;
    }
  }
  return out;
}

std::vector<Elem> parse_poly_text(const RingPtr& base, std::string_view text) {
  text = trim(text);
  if (text == "0") return {};
  std::vector<Elem> coeffs;
  auto put = [&](std::size_t k, const Elem& c) {
    if (coeffs.size() <= k) coeffs.resize(k + 1, base->zero());
    coeffs[k] = base->add(coeffs[k], c);
  };
  for (auto term : split_top_level(text, '+')) {
    term = trim(term);
    if (term.empty()) throw RfError(Err::ParseError, "empty polynomial term");
    // locate a top-level '*' splitting the coefficient from the power
    std::size_t star = std::string_view::npos;
    int depth = 0;
    for (std::size_t i = 0; i < term.size(); ++i) {
      char ch = term[i];
      if (ch == '(' || ch == '[') ++depth;
      else if (ch == ')' || ch == ']') --depth;
      else if (ch == '*' && depth == 0) star = i;
    }
    std::string_view coef_text, pow_text;
    if (star != std::string_view::npos) {
      coef_text = trim(term.substr(0, star));
      pow_text = trim(term.substr(star + 1));
    } else if (term.front() == 'x') {
      pow_text = term;
    } else {
      coef_text = term;
    }
    std::size_t k = 0;
    if (!pow_text.empty()) {
      if (pow_text == "x") k = 1;
      else if (pow_text.size() > 2 && pow_text.substr(0, 2) == "x^")
        k = std::stoull(std::string(pow_text.substr(2)));
      else
        throw RfError(Err::ParseError, "bad power '" + std::string(pow_text) + "'");
    }
    Elem c = base->one();
    if (!coef_text.empty()) {
      // poly/nagata coefficients arrive parenthesized
      if (coef_text.front() == '(' &&
          (base->kind() == Ring::Kind::Poly || base->kind() == Ring::Kind::Zmod ||
           base->kind() == Ring::Kind::Integers || base->kind() == Ring::Kind::Table))
        coef_text = strip_outer(coef_text, '(', ')');
      c = base->parse(coef_text);
    }
    put(k, c);
  }
  while (!coeffs.empty() && base->is_zero(coeffs.back())) coeffs.pop_back();
  return coeffs;
}

std::string Ring::describe() const {
  switch (kind_) {
    case Kind::Zmod:
      return "zmod(" + std::to_string(param_) + ")";
    case Kind::Table:
      return "table(" + std::to_string(param_) + ")";
    case Kind::Integers:
      return "integers";
    case Kind::CongruencePairs:
      return "congruence-pairs(" + std::to_string(param_) + ")";
    case Kind::Product: {
      std::string out = "product(";
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += ",";
        out += factors_[i]->describe();
      }
      return out + ")";
    }
    case Kind::Matrix:
      return "matrix(" + std::to_string(mat_dim_) + "," + base_->describe() + ")";
    case Kind::Poly:
      return "poly(" + base_->describe() + ")";
    case Kind::Nagata:
      return "nagata(" + base_->describe() + "," + nag_module_->describe() + "," +
             nag_endo_->describe() + ")";
  }
  return "?";
}

const char* err_name(Err e) {
  switch (e) {
    case Err::InvalidSpec: return "InvalidSpec";
    case Err::AxiomViolation: return "AxiomViolation";
    case Err::TrivialRing: return "TrivialRing";
    case Err::RingMismatch: return "RingMismatch";
    case Err::ContextMismatch: return "ContextMismatch";
    case Err::NotEnumerable: return "NotEnumerable";
    case Err::MissingEndo: return "MissingEndo";
    case Err::NotAnEndomorphism: return "NotAnEndomorphism";
    case Err::RuleMismatch: return "RuleMismatch";
    case Err::NonCommutativeBase: return "NonCommutativeBase";
    case Err::BoundTooLarge: return "BoundTooLarge";
    case Err::ZeroPolynomial: return "ZeroPolynomial";
    case Err::UnknownSuite: return "UnknownSuite";
    case Err::ZeroG: return "ZeroG";
    case Err::MembershipFailed: return "MembershipFailed";
    case Err::StabilityFailed: return "StabilityFailed";
    case Err::SearchExhausted: return "SearchExhausted";
    case Err::NoProgress: return "NoProgress";
    case Err::ParseError: return "ParseError";
  }
  return "Error";
}

int exit_code_for(Err e) {
  switch (e) {
    case Err::BoundTooLarge:
    case Err::SearchExhausted:
      return 3;
    case Err::NoProgress:
    case Err::AxiomViolation:
      return 4;
    default:
      return 2;
  }
}

}  // namespace ringforge
