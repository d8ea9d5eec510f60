#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ringforge/properties.hpp"

using namespace ringforge;

namespace {
const SearchLimits kLim = SearchLimits::defaults();

nlohmann::json without_elapsed(nlohmann::json j) {
  j.erase("elapsed_ms");
  return j;
}
}  // namespace

TEST_CASE("property name round trips") {
  for (Property p : {Property::Reduced, Property::Reversible, Property::Semicommutative,
                     Property::Commutative, Property::Domain, Property::SigmaCompatible,
                     Property::SigmaSemicommutative, Property::SigmaReversibleRight,
                     Property::SigmaReversibleLeft, Property::ArmendarizRing,
                     Property::ArmendarizModule, Property::MccoyRight, Property::MccoyLeft,
                     Property::SigmaSkewMccoy, Property::ConditionC1, Property::ConditionC2,
                     Property::SkewRingSemicommutative, Property::QuasiBaer}) {
    auto back = property_from_name(property_name(p));
    REQUIRE(back.has_value());
    CHECK(*back == p);
  }
  CHECK_FALSE(property_from_name("no-such-property").has_value());
  CHECK(property_needs_endo(Property::SigmaCompatible));
  CHECK_FALSE(property_needs_endo(Property::Reduced));
}

TEST_CASE("element properties on commutative carriers") {
  auto z6 = Ring::zmod(6);
  CHECK(check_element_property(z6, nullptr, Property::Semicommutative).holds ==
        Holds::TrueExhaustive);
  CHECK(check_element_property(z6, nullptr, Property::Commutative).holds ==
        Holds::TrueExhaustive);
  CHECK(check_element_property(z6, nullptr, Property::Reversible).holds ==
        Holds::TrueExhaustive);
  CHECK(check_element_property(z6, nullptr, Property::Domain).holds == Holds::False);
  CHECK(check_element_property(Ring::zmod(5), nullptr, Property::Domain).holds ==
        Holds::TrueExhaustive);
}

TEST_CASE("reduced verdict with replayable witness") {
  auto z4 = Ring::zmod(4);
  auto v = check_element_property(z4, nullptr, Property::Reduced);
  REQUIRE(v.holds == Holds::False);
  REQUIRE(v.witness.size() == 2);
  Elem a = z4->parse(v.witness[0]);
  int k = std::stoi(v.witness[1]);
  Elem pow = a;
  for (int i = 1; i < k; ++i) pow = z4->mul(pow, a);
  CHECK(z4->is_zero(pow));
  CHECK_FALSE(z4->is_zero(a));
}

TEST_CASE("matrix rings are not reversible") {
  auto m2 = Ring::matrix_ring(2, Ring::zmod(2));
  auto v = check_element_property(m2, nullptr, Property::Reversible);
  REQUIRE(v.holds == Holds::False);
  REQUIRE(v.witness.size() == 2);
  Elem a = m2->parse(v.witness[0]);
  Elem b = m2->parse(v.witness[1]);
  CHECK(m2->is_zero(m2->mul(a, b)));
  CHECK_FALSE(m2->is_zero(m2->mul(b, a)));
  CHECK(check_element_property(m2, nullptr, Property::Semicommutative).holds == Holds::False);
}

TEST_CASE("sigma variants under the swap twist") {
  auto r = Ring::product({Ring::zmod(2), Ring::zmod(2)});
  auto s = Endo::swap(r);

  auto compat = check_element_property(r, s, Property::SigmaCompatible);
  REQUIRE(compat.holds == Holds::False);
  Elem a = r->parse(compat.witness[0]);
  Elem b = r->parse(compat.witness[1]);
  CHECK(r->is_zero(r->mul(a, b)) != r->is_zero(r->mul(a, s->apply(b))));

  auto semi = check_element_property(r, s, Property::SigmaSemicommutative);
  REQUIRE(semi.holds == Holds::False);
  REQUIRE(semi.witness.size() == 3);
  Elem sa = r->parse(semi.witness[0]);
  Elem sb = r->parse(semi.witness[1]);
  Elem sr = r->parse(semi.witness[2]);
  CHECK(r->is_zero(r->mul(sa, sb)));
  CHECK_FALSE(r->is_zero(r->mul(r->mul(sa, sr), s->apply(sb))));

  // under the identity twist the sigma variants collapse to the plain ones
  auto id = Endo::identity(r);
  CHECK(check_element_property(r, id, Property::SigmaCompatible).holds ==
        Holds::TrueExhaustive);
  CHECK(check_element_property(r, id, Property::SigmaReversibleRight).holds ==
        check_element_property(r, nullptr, Property::Reversible).holds);
}

TEST_CASE("sigma properties demand an endomorphism") {
  auto z4 = Ring::zmod(4);
  CHECK_THROWS_AS(check_element_property(z4, nullptr, Property::SigmaCompatible), RfError);
  auto z2 = Ring::zmod(2);
  CHECK_THROWS_AS(check_element_property(z4, Endo::identity(z2), Property::SigmaCompatible),
                  RfError);
  // non-enumerable carrier requires an element bound
  auto py = Ring::poly_ring(z2);
  CHECK_THROWS_AS(check_element_property(py, nullptr, Property::Reversible), RfError);
  CHECK(check_element_property(py, nullptr, Property::Reversible, 2).holds ==
        Holds::TrueUpToBound);
}

TEST_CASE("conditions C1 and C2") {
  auto z6 = Ring::zmod(6);
  auto z6m = Module::ring_as_module(z6);
  CHECK(check_condition_C(z6m, Endo::identity(z6), 1).holds == Holds::TrueExhaustive);
  CHECK(check_condition_C(z6m, Endo::identity(z6), 2).holds == Holds::TrueExhaustive);

  auto z4 = Ring::zmod(4);
  auto c2 = check_condition_C(Module::ring_as_module(z4), Endo::identity(z4), 2);
  REQUIRE(c2.holds == Holds::False);
  CHECK(c2.witness == std::vector<std::string>{"1", "2"});

  auto r = Ring::product({Ring::zmod(2), Ring::zmod(2)});
  auto c1 = check_condition_C(Module::ring_as_module(r), Endo::swap(r), 1);
  REQUIRE(c1.holds == Holds::False);
  CHECK(c1.witness == std::vector<std::string>{"(1,0)", "(0,1)"});
}

TEST_CASE("Armendariz checks") {
  CHECK(check_armendariz_ring(Ring::zmod(2), 2).holds == Holds::TrueUpToBound);
  CHECK(check_armendariz_ring(Ring::zmod(6), 2).holds == Holds::TrueUpToBound);

  auto m2 = Ring::matrix_ring(2, Ring::zmod(2));
  auto v = check_armendariz_ring(m2, 1, kLim);
  REQUIRE(v.holds == Holds::False);
  REQUIRE(v.witness.size() == 4);
  // witness: p, q, and a coefficient pair with nonzero product
  auto id = Endo::identity(m2);
  SkewPoly p = parse_skew_poly(m2, id, v.witness[0]);
  SkewPoly q = parse_skew_poly(m2, id, v.witness[1]);
  CHECK(skew_mul(p, q).is_zero());
  Elem ai = m2->parse(v.witness[2]);
  Elem bj = m2->parse(v.witness[3]);
  CHECK_FALSE(m2->is_zero(m2->mul(ai, bj)));

  auto z2z2 = Ring::product({Ring::zmod(2), Ring::zmod(2)});
  auto mv = check_armendariz_module(Module::ring_as_module(z2z2), 2);
  CHECK(mv.holds == Holds::TrueUpToBound);
}

TEST_CASE("McCoy checks") {
  auto z4 = Ring::zmod(4);
  CHECK(check_mccoy(z4, nullptr, MccoyVariant::Right, 2).holds == Holds::TrueUpToBound);
  CHECK(check_mccoy(z4, nullptr, MccoyVariant::Left, 2).holds == Holds::TrueUpToBound);

  // identity twist: sigma-skew agrees with plain right McCoy
  for (const auto& r : {Ring::zmod(4), Ring::product({Ring::zmod(2), Ring::zmod(2)})}) {
    auto right = check_mccoy(r, nullptr, MccoyVariant::Right, 1);
    auto skew = check_mccoy(r, Endo::identity(r), MccoyVariant::SigmaSkew, 1);
    CHECK(right.holds == skew.holds);
    CHECK(right.witness == skew.witness);
  }

  auto z2z2 = Ring::product({Ring::zmod(2), Ring::zmod(2)});
  auto s = Endo::swap(z2z2);
  auto v = check_mccoy(z2z2, s, MccoyVariant::SigmaSkew, 1);
  REQUIRE(v.holds == Holds::False);
  REQUIRE(v.witness.size() == 2);
  SkewPoly p = parse_skew_poly(z2z2, s, v.witness[0]);
  SkewPoly q = parse_skew_poly(z2z2, s, v.witness[1]);
  CHECK_FALSE(p.is_zero());
  CHECK_FALSE(q.is_zero());
  CHECK(skew_mul(p, q).is_zero());
  for (const auto& c : z2z2->enumerate())
    if (!z2z2->is_zero(c)) CHECK_FALSE(right_scalar_mul(p, c).is_zero());
  // refutations persist as the bound grows
  CHECK(check_mccoy(z2z2, s, MccoyVariant::SigmaSkew, 2).holds == Holds::False);
}

TEST_CASE("skew polynomial ring semicommutativity") {
  auto z4 = Ring::zmod(4);
  CHECK(check_skewring_semicommutative(z4, Endo::identity(z4), 1).holds ==
        Holds::TrueUpToBound);

  auto z2z2 = Ring::product({Ring::zmod(2), Ring::zmod(2)});
  auto s = Endo::swap(z2z2);
  auto v = check_skewring_semicommutative(z2z2, s, 1);
  REQUIRE(v.holds == Holds::False);
  REQUIRE(v.witness.size() == 3);
  SkewPoly p = parse_skew_poly(z2z2, s, v.witness[0]);
  SkewPoly h = parse_skew_poly(z2z2, s, v.witness[1]);
  SkewPoly q = parse_skew_poly(z2z2, s, v.witness[2]);
  CHECK(skew_mul(p, q).is_zero());
  CHECK_FALSE(skew_mul(skew_mul(p, h), q).is_zero());
}

TEST_CASE("pointwise sigma-semicommutativity refutation") {
  auto cp = Ring::congruence_pairs(2);
  auto s = Endo::swap(cp);
  auto ref = refute_sigma_semicommutative_pointwise(cp, s, cp->parse("(2,0)"), cp->parse("(0,2)"));
  CHECK(ref.applicable);
  CHECK(ref.refuted);
  CHECK(ref.ab == "(0,0)");
  CHECK(ref.a_sigma_b == "(4,0)");
}

TEST_CASE("thread count does not change results") {
  auto z2z2 = Ring::product({Ring::zmod(2), Ring::zmod(2)});
  auto s = Endo::swap(z2z2);
  SearchLimits one = kLim, four = kLim;
  one.threads = 1;
  four.threads = 4;
  auto a = check_mccoy(z2z2, s, MccoyVariant::SigmaSkew, 2, one);
  auto b = check_mccoy(z2z2, s, MccoyVariant::SigmaSkew, 2, four);
  CHECK(without_elapsed(a.to_json()) == without_elapsed(b.to_json()));

  auto c = check_armendariz_ring(Ring::matrix_ring(2, Ring::zmod(2)), 1, one);
  auto d = check_armendariz_ring(Ring::matrix_ring(2, Ring::zmod(2)), 1, four);
  CHECK(without_elapsed(c.to_json()) == without_elapsed(d.to_json()));
}

TEST_CASE("pair-count ceiling rejects oversized scans") {
  SearchLimits tiny = kLim;
  tiny.ceiling = 10;
  CHECK_THROWS_AS(check_armendariz_ring(Ring::zmod(4), 2, tiny), RfError);
  auto m3 = Ring::matrix_ring(2, Ring::zmod(3));
  CHECK_THROWS_AS(check_mccoy(m3, Endo::identity(m3), MccoyVariant::SigmaSkew, 2, kLim),
                  RfError);
}
