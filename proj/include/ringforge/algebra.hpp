#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ringforge/elem.hpp"
#include "ringforge/error.hpp"

namespace ringforge {

class Ring;
class Endo;
class Module;
using RingPtr = std::shared_ptr<const Ring>;
using EndoPtr = std::shared_ptr<const Endo>;
using ModulePtr = std::shared_ptr<const Module>;

// Construction-time verification settings. Structures of order <= exhaustive_cap
// get full axiom scans; larger or infinite ones are sampled on seeded triples.
struct CheckConfig {
  std::size_t exhaustive_cap = 64;
  std::size_t sample_triples = 1000;
  std::uint64_t seed = 0x52464f52474531ull;
};

class Ring : public std::enable_shared_from_this<Ring> {
 public:
  enum class Kind { Zmod, Product, Matrix, Integers, CongruencePairs, Poly, Nagata, Table };

  static RingPtr zmod(long long n, const CheckConfig& cfg = {});
  static RingPtr product(std::vector<RingPtr> factors, const CheckConfig& cfg = {});
  static RingPtr matrix_ring(int k, RingPtr base, const CheckConfig& cfg = {});
  static RingPtr integers(const CheckConfig& cfg = {});
  static RingPtr congruence_pairs(long long modulus, const CheckConfig& cfg = {});
  static RingPtr poly_ring(RingPtr base, const CheckConfig& cfg = {});
  // Explicit finite ring from operation tables (indices 0..n-1).
  static RingPtr table_ring(std::vector<std::vector<int>> add, std::vector<std::vector<int>> mul,
                            const CheckConfig& cfg = {});
  static RingPtr nagata(RingPtr base, ModulePtr module, EndoPtr endo, const CheckConfig& cfg = {});

  Kind kind() const { return kind_; }
  long long param() const { return param_; }
  int mat_dim() const { return mat_dim_; }
  const std::vector<RingPtr>& factors() const { return factors_; }
  const RingPtr& base() const { return base_; }
  const ModulePtr& nagata_module() const { return nag_module_; }
  const EndoPtr& nagata_endo() const { return nag_endo_; }

  const Elem& zero() const { return zero_; }
  const Elem& one() const { return one_; }
  bool enumerable() const { return order_.has_value(); }
  std::optional<std::uint64_t> order() const { return order_; }
  bool commutative() const { return commutative_; }

  bool contains(const Elem& e) const;
  bool is_zero(const Elem& e) const { return e == zero_; }

  Elem add(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

  // Canonical enumeration, zero first, sorted under Elem::cmp. A bound is
  // required for non-enumerable rings (poly: degree; integers and
  // congruence-pairs: entry magnitude).
  std::vector<Elem> enumerate(std::optional<long long> bound = std::nullopt) const;

  Elem sample(std::mt19937_64& rng) const;

  std::string serialize(const Elem& e) const;
  Elem parse(std::string_view text) const;

  std::string describe() const;

 private:
  Ring() = default;
  void verify_axioms(const CheckConfig& cfg) const;
  friend RingPtr make_nagata_ring(RingPtr, ModulePtr, EndoPtr, const CheckConfig&);

  Kind kind_ = Kind::Zmod;
  long long param_ = 0;  // zmod modulus / congruence modulus / table size
  int mat_dim_ = 0;
  std::vector<RingPtr> factors_;
  RingPtr base_;
  ModulePtr nag_module_;
  EndoPtr nag_endo_;
  std::vector<std::vector<int>> tadd_, tmul_;
  Elem zero_, one_;
  std::optional<std::uint64_t> order_;
  bool commutative_ = false;
};

// Textual polynomial form "c0 + c1*x + c2*x^2" with coefficients serialized by
// the base ring; shared by the poly ring kind and by skew polynomials.
std::string serialize_poly_text(const RingPtr& base, const std::vector<Elem>& coeffs);
std::vector<Elem> parse_poly_text(const RingPtr& base, std::string_view text);

// Validated ring operations for external callers; check membership and throw
// RingMismatch on foreign elements.
Elem ring_add(const RingPtr& r, const Elem& a, const Elem& b);
Elem ring_mul(const RingPtr& r, const Elem& a, const Elem& b);
Elem ring_neg(const RingPtr& r, const Elem& a);
Elem ring_sub(const RingPtr& r, const Elem& a, const Elem& b);

class Endo {
 public:
  enum class Rule { Identity, Swap, EvalAtZero, NegateOffdiag, Table };

  static EndoPtr identity(RingPtr ring, const CheckConfig& cfg = {});
  static EndoPtr swap(RingPtr ring, const CheckConfig& cfg = {});
  static EndoPtr eval_at_zero(RingPtr ring, const CheckConfig& cfg = {});
  static EndoPtr negate_offdiagonal(RingPtr ring, const CheckConfig& cfg = {});
  // images[i] = index of sigma(e_i) in the canonical enumeration.
  static EndoPtr table(RingPtr ring, std::vector<int> images, const CheckConfig& cfg = {});

  static EndoPtr from_rule(RingPtr ring, Rule rule, const CheckConfig& cfg = {});

  Rule rule() const { return rule_; }
  const RingPtr& ring() const { return ring_; }
  std::optional<unsigned> detected_order() const { return detected_order_; }

  Elem apply(const Elem& e) const;
  Elem apply_pow(const Elem& e, unsigned k) const;

  std::string describe() const;

 private:
  Endo() = default;
  void verify(const CheckConfig& cfg) const;
  void detect_order();

  Rule rule_ = Rule::Identity;
  RingPtr ring_;
  std::vector<Elem> domain_;       // table rule
  std::vector<int> images_;        // table rule
  std::optional<unsigned> detected_order_;
};

class Module {
 public:
  enum class Kind { RingAsModule, RingPower, Table };

  static ModulePtr ring_as_module(RingPtr ring, const CheckConfig& cfg = {});
  static ModulePtr ring_power(RingPtr ring, int k, const CheckConfig& cfg = {});
  // Explicit finite module: n elements with an addition table and a right
  // action table (element index x ring enumeration index -> element index).
  static ModulePtr table_module(RingPtr ring, std::vector<std::vector<int>> add,
                                std::vector<std::vector<int>> action, const CheckConfig& cfg = {});

  Kind kind() const { return kind_; }
  const RingPtr& ring() const { return ring_; }
  int power() const { return power_; }
  const Elem& zero() const { return zero_; }
  bool enumerable() const { return order_.has_value(); }
  std::optional<std::uint64_t> order() const { return order_; }

  bool contains(const Elem& m) const;
  bool is_zero(const Elem& m) const { return m == zero_; }
  Elem add(const Elem& m, const Elem& n) const;
  Elem neg(const Elem& m) const;
  Elem act(const Elem& m, const Elem& a) const;  // m . a

  std::vector<Elem> enumerate(std::optional<long long> bound = std::nullopt) const;
  Elem sample(std::mt19937_64& rng) const;
  std::string serialize(const Elem& m) const;
  Elem parse(std::string_view text) const;
  std::string describe() const;

 private:
  Module() = default;
  void verify_axioms(const CheckConfig& cfg) const;

  Kind kind_ = Kind::RingAsModule;
  RingPtr ring_;
  int power_ = 1;
  std::vector<std::vector<int>> tadd_, taction_;
  Elem zero_;
  std::optional<std::uint64_t> order_;
};

enum class TorsionClass { Torsion, TorsionFree, Mixed };

struct TorsionResult {
  std::vector<Elem> elements;  // T(M), canonical order
  TorsionClass cls;
  bool base_is_domain;  // torsion is only well-behaved over commutative domains
};

TorsionResult torsion_submodule(const ModulePtr& module);

// Polynomials over a right module, acted on by ordinary (untwisted) ring
// polynomials by convolution.
class ModulePoly {
 public:
  ModulePoly(ModulePtr module, std::vector<Elem> coeffs);
  static ModulePoly zero(ModulePtr module) { return ModulePoly(std::move(module), {}); }

  const ModulePtr& module() const { return module_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : module_->zero(); }
  friend bool operator==(const ModulePoly& a, const ModulePoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  ModulePtr module_;
  std::vector<Elem> coeffs_;
};

ModulePoly module_poly_add(const ModulePoly& a, const ModulePoly& b);
// m(x) . f(x) for an ordinary polynomial f over the base ring (coefficient list).
ModulePoly module_poly_mul(const ModulePoly& m, const std::vector<Elem>& ring_poly);

}  // namespace ringforge
