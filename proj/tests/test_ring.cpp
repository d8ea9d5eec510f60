#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ringforge/algebra.hpp"

using namespace ringforge;

TEST_CASE("zmod basics") {
  auto r = Ring::zmod(4);
  CHECK(r->order() == 4);
  CHECK(r->serialize(r->zero()) == "0");
  CHECK(r->serialize(r->one()) == "1");
  CHECK(r->add(r->parse("2"), r->parse("2")) == r->zero());
  CHECK(r->parse("-1") == r->parse("3"));
  CHECK_THROWS_AS(Ring::zmod(1), RfError);
}

TEST_CASE("product ring of order 4") {
  auto z2 = Ring::zmod(2);
  auto r = Ring::product({z2, z2});
  CHECK(r->order() == 4);
  auto elems = r->enumerate();
  REQUIRE(elems.size() == 4);
  CHECK(r->serialize(elems[0]) == "(0,0)");
  CHECK(r->serialize(elems[1]) == "(0,1)");
  CHECK(r->serialize(elems[2]) == "(1,0)");
  CHECK(r->serialize(elems[3]) == "(1,1)");
  CHECK(r->commutative());
}

TEST_CASE("matrix ring order and arithmetic") {
  auto r = Ring::matrix_ring(2, Ring::zmod(3));
  CHECK(r->order() == 81);
  CHECK_FALSE(r->commutative());
  // [[1,1],[0,0]] * [[0,-1],[0,1]] = 0
  auto a = r->parse("[[1,1],[0,0]]");
  auto b = r->parse("[[0,-1],[0,1]]");
  CHECK(r->is_zero(r->mul(a, b)));
  CHECK(r->serialize(b) == "[[0,2],[0,1]]");
}

TEST_CASE("congruence pairs pointwise ops") {
  auto r = Ring::congruence_pairs(2);
  CHECK_FALSE(r->enumerable());
  auto a = r->parse("(2,0)");
  auto b = r->parse("(0,2)");
  CHECK(r->is_zero(r->mul(a, b)));
  CHECK(r->serialize(r->mul(a, a)) == "(4,0)");
  CHECK_THROWS_AS(r->parse("(1,2)"), RfError);
}

TEST_CASE("poly ring bounded enumeration") {
  auto r = Ring::poly_ring(Ring::zmod(2));
  auto elems = r->enumerate(1);
  REQUIRE(elems.size() == 4);
  CHECK(r->serialize(elems[0]) == "0");
  CHECK(r->serialize(elems[1]) == "1");
  CHECK(r->serialize(elems[2]) == "x");
  CHECK(r->serialize(elems[3]) == "1 + x");
  CHECK_THROWS_AS(r->enumerate(), RfError);
}

TEST_CASE("enumeration is stable, zero-first, duplicate-free") {
  for (auto r : {Ring::zmod(6), Ring::product({Ring::zmod(2), Ring::zmod(3)}),
                 Ring::matrix_ring(2, Ring::zmod(2))}) {
    auto e1 = r->enumerate();
    auto e2 = r->enumerate();
    CHECK(e1 == e2);
    CHECK(e1.front() == r->zero());
    for (std::size_t i = 1; i < e1.size(); ++i) CHECK(e1[i - 1] < e1[i]);
  }
}

TEST_CASE("serialization round-trips over enumerated elements") {
  for (auto r : {Ring::zmod(9), Ring::product({Ring::zmod(2), Ring::zmod(2)}),
                 Ring::matrix_ring(2, Ring::zmod(2))}) {
    for (const auto& e : r->enumerate()) CHECK(r->parse(r->serialize(e)) == e);
  }
  auto p = Ring::poly_ring(Ring::zmod(3));
  for (const auto& e : p->enumerate(2)) CHECK(p->parse(p->serialize(e)) == e);
}

TEST_CASE("ring axioms hold exhaustively on small rings") {
  // construction itself runs the exhaustive check; spot-check an explicit triple
  auto r = Ring::zmod(8);
  auto e = r->enumerate();
  for (const auto& a : e)
    for (const auto& b : e) CHECK(r->mul(a, r->add(b, b)) == r->add(r->mul(a, b), r->mul(a, b)));
}

TEST_CASE("endomorphism construction and order detection") {
  auto z2 = Ring::zmod(2);
  auto r = Ring::product({z2, z2});
  auto sw = Endo::swap(r);
  CHECK(sw->detected_order() == 2);
  CHECK(sw->apply(r->parse("(1,0)")) == r->parse("(0,1)"));

  auto id = Endo::identity(r);
  CHECK(id->detected_order() == 1);

  auto m3 = Ring::matrix_ring(2, Ring::zmod(3));
  auto neg = Endo::negate_offdiagonal(m3);
  CHECK(neg->detected_order() == 2);
  CHECK(neg->apply(m3->parse("[[1,2],[1,0]]")) == m3->parse("[[1,1],[2,0]]"));

  CHECK_THROWS_AS(Endo::swap(Ring::zmod(4)), RfError);
  CHECK_THROWS_AS(Endo::negate_offdiagonal(Ring::zmod(4)), RfError);
}

TEST_CASE("endomorphism power identity") {
  auto r = Ring::product({Ring::zmod(2), Ring::zmod(2)});
  auto sw = Endo::swap(r);
  for (const auto& a : r->enumerate()) CHECK(sw->apply_pow(a, *sw->detected_order()) == a);
}

TEST_CASE("explicit table ring and endomorphism") {
  // Z2 x Z2 as a table ring, swap as a table endomorphism
  auto r0 = Ring::product({Ring::zmod(2), Ring::zmod(2)});
  auto elems = r0->enumerate();
  auto idx = [&](const Elem& e) {
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == e) return static_cast<int>(i);
    return -1;
  };
  std::vector<std::vector<int>> add(4, std::vector<int>(4)), mul(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      add[i][j] = idx(r0->add(elems[i], elems[j]));
      mul[i][j] = idx(r0->mul(elems[i], elems[j]));
    }
  auto t = Ring::table_ring(add, mul);
  CHECK(t->order() == 4);
  CHECK(t->commutative());
  std::vector<int> images(4);
  for (int i = 0; i < 4; ++i)
    images[i] = idx(Elem::tuple({elems[i].parts()[1], elems[i].parts()[0]}));
  auto sigma = Endo::table(t, images);
  CHECK(sigma->detected_order() == 2);
}

TEST_CASE("invalid table rejected") {
  std::vector<std::vector<int>> bad = {{0, 1}, {1, 1}};  // not a group
  CHECK_THROWS_AS(Ring::table_ring(bad, bad), RfError);
}

TEST_CASE("eval-at-zero endomorphism") {
  auto p = Ring::poly_ring(Ring::zmod(2));
  auto ev = Endo::eval_at_zero(p);
  CHECK_FALSE(ev->detected_order().has_value());
  CHECK(ev->apply(p->parse("1 + x")) == p->one());
  CHECK(ev->apply(p->parse("x")) == p->zero());
}

TEST_CASE("validated ops reject foreign elements") {
  auto r = Ring::zmod(4);
  auto q = Ring::product({Ring::zmod(2), Ring::zmod(2)});
  CHECK_THROWS_AS(ring_mul(r, r->one(), q->one()), RfError);
}
