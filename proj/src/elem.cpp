#include "ringforge/elem.hpp"

namespace ringforge {

namespace {

int cmp_big(const BigInt& a, const BigInt& b) {
  // Magnitude first, nonnegative before negative: 0, 1, -1, 2, -2, ...
  BigInt aa = abs(a), ab = abs(b);
  if (aa != ab) return aa < ab ? -1 : 1;
  if (a == b) return 0;
  return a > b ? -1 : 1;  // same magnitude, positive first
}

int cmp_lex(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = Elem::cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace

int Elem::cmp(const Elem& a, const Elem& b) {
  if (a.tag_ != b.tag_) return a.tag_ < b.tag_ ? -1 : 1;
  switch (a.tag_) {
    case Tag::Residue:
      if (a.residue_ != b.residue_) return a.residue_ < b.residue_ ? -1 : 1;
      return 0;
    case Tag::Integer:
      return cmp_big(a.integer_, b.integer_);
    case Tag::Poly:
      // degree first (shorter coefficient list first), then coefficients
      // from the constant term up
      if (a.parts_.size() != b.parts_.size())
        return a.parts_.size() < b.parts_.size() ? -1 : 1;
      return cmp_lex(a.parts_, b.parts_);
    case Tag::Tuple:
    case Tag::Matrix:
    case Tag::Nagata:
      return cmp_lex(a.parts_, b.parts_);
  }
  return 0;
}

}  // namespace ringforge
