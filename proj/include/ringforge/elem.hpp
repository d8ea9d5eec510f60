#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

namespace ringforge {

using BigInt = boost::multiprecision::cpp_int;

// Immutable structural value of a ring or module element. The owning Ring
// knows how to interpret the payload; Elem itself only provides structural
// equality, a total order and storage.
class Elem {
 public:
  enum class Tag : std::uint8_t { Residue, Integer, Tuple, Matrix, Poly, Nagata };

  Elem() : tag_(Tag::Residue), residue_(0) {}

  static Elem residue(long long v) {
    Elem e;
    e.tag_ = Tag::Residue;
    e.residue_ = v;
    return e;
  }
  static Elem integer(BigInt v) {
    Elem e;
    e.tag_ = Tag::Integer;
    e.integer_ = std::move(v);
    return e;
  }
  static Elem composite(Tag tag, std::vector<Elem> parts) {
    Elem e;
    e.tag_ = tag;
    e.parts_ = std::move(parts);
    return e;
  }
  static Elem tuple(std::vector<Elem> parts) { return composite(Tag::Tuple, std::move(parts)); }
  static Elem matrix(std::vector<Elem> rowmajor) { return composite(Tag::Matrix, std::move(rowmajor)); }
  static Elem poly(std::vector<Elem> coeffs) { return composite(Tag::Poly, std::move(coeffs)); }
  static Elem nagata(Elem a, Elem m) {
    std::vector<Elem> p;
    p.reserve(2);
    p.push_back(std::move(a));
    p.push_back(std::move(m));
    return composite(Tag::Nagata, std::move(p));
  }

  Tag tag() const { return tag_; }
  long long as_residue() const { return residue_; }
  const BigInt& as_integer() const { return integer_; }
  const std::vector<Elem>& parts() const { return parts_; }

  // Canonical total order: residues and integers ascending (integers by
  // magnitude, nonnegative first, so that 0 < 1 < -1 < 2 < ...), tuples and
  // matrices componentwise, polynomials by degree then coefficients from the
  // constant term up, Nagata pairs componentwise.
  static int cmp(const Elem& a, const Elem& b);

  friend bool operator==(const Elem& a, const Elem& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const Elem& a, const Elem& b) { return cmp(a, b) != 0; }
  friend bool operator<(const Elem& a, const Elem& b) { return cmp(a, b) < 0; }

 private:
  Tag tag_;
  long long residue_ = 0;
  BigInt integer_;
  std::vector<Elem> parts_;
};

}  // namespace ringforge
