#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <iostream>

#include "doctest.h"
#include "ringforge/witness.hpp"

using namespace ringforge;

namespace {

const SearchLimits kLim = SearchLimits::defaults();

std::vector<SkewPoly> polys_up_to(const RingPtr& r, const EndoPtr& s, int d) {
  std::vector<SkewPoly> out;
  auto elems = r->enumerate();
  std::vector<std::size_t> idx;
  for (int m = 0; m <= d; ++m) {
    idx.assign(m + 1, 0);
    while (true) {
      std::vector<Elem> coeffs;
      for (auto i : idx) coeffs.push_back(elems[i]);
      if (!r->is_zero(coeffs.back())) out.emplace_back(r, s, coeffs);
      int j = 0;
      for (; j <= m; ++j) {
        if (++idx[j] < elems.size()) break;
        idx[j] = 0;
      }
      if (j > m) break;
    }
  }
  return out;
}

// upper triangular 2x2 matrices over Z2 as an explicit table ring;
// element i encodes (a, b, d) = (i>>2 & 1, i>>1 & 1, i & 1)
RingPtr upper_triangular_z2() {
  auto a = [](int i) { return (i >> 2) & 1; };
  auto b = [](int i) { return (i >> 1) & 1; };
  auto d = [](int i) { return i & 1; };
  auto pack = [](int a_, int b_, int d_) { return (a_ << 2) | (b_ << 1) | d_; };
  std::vector<std::vector<int>> add(8, std::vector<int>(8));
  std::vector<std::vector<int>> mul(8, std::vector<int>(8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      add[i][j] = pack(a(i) ^ a(j), b(i) ^ b(j), d(i) ^ d(j));
      mul[i][j] = pack(a(i) & a(j), (a(i) & b(j)) ^ (b(i) & d(j)), d(i) & d(j));
    }
  return Ring::table_ring(std::move(add), std::move(mul));
}

// (a, b, d) -> (a, 0, d) is a ring endomorphism of the triangular ring
EndoPtr diagonal_endo(const RingPtr& t2) {
  std::vector<int> images(8);
  for (int i = 0; i < 8; ++i) images[static_cast<size_t>(i)] = i & ~2;  // clear b
  return Endo::table(t2, images);
}

void check_trace_invariants(const RightIdealSpec& ideal, const SkewPoly& g,
                            const WitnessTrace& trace) {
  const auto& r = ideal.ring;
  const auto& s = ideal.endo;
  CHECK(trace.verified);
  CHECK_FALSE(r->is_zero(trace.result_elem));
  CHECK(skew_ideal_kills(ideal, SkewPoly::constant(r, s, trace.result_elem)));
  SkewPoly cur = g;
  for (const auto& step : trace.steps) {
    CHECK(to_string(cur) == step.g_before);
    SkewPoly f = parse_skew_poly(r, s, step.f);
    Elem a_p = r->parse(step.a_p);
    CHECK(f.coeff(step.p) == a_p);
    // the descent bookkeeping: a_p kills the leading coefficient through the twist
    Elem b_m = cur.leading_coeff();
    if (trace.mode == DescentMode::SigmaStable)
      CHECK(r->is_zero(r->mul(a_p, s->apply_pow(b_m, step.p))));
    else
      CHECK(r->is_zero(r->mul(a_p, b_m)));
    SkewPoly twisted = cur;
    if (trace.mode == DescentMode::SigmaStable)
      for (unsigned k = 0; k < step.p; ++k) twisted = sigma_map(twisted);
    SkewPoly next = left_scalar_mul(a_p, twisted);
    CHECK(to_string(next) == step.g_after);
    CHECK(next.degree() < cur.degree());
    cur = next;
  }
  if (!trace.steps.empty()) CHECK(to_string(cur) == trace.result);
}

}  // namespace

TEST_CASE("zero ideal yields the least nonzero constant") {
  auto z4 = Ring::zmod(4);
  auto id = Endo::identity(z4);
  auto ideal = RightIdealSpec::in_skew(z4, id, {}, 2, 1u);
  SkewPoly g = parse_skew_poly(z4, id, "1 + x");
  auto trace = extract_witness(ideal, g, DescentMode::SigmaCompatible, kLim);
  CHECK(trace.steps.empty());
  CHECK(trace.result == "1");
  CHECK(trace.verified);
}

TEST_CASE("leading coefficient shortcut") {
  auto z2z2 = Ring::product({Ring::zmod(2), Ring::zmod(2)});
  auto id = Endo::identity(z2z2);
  SkewPoly f = parse_skew_poly(z2z2, id, "(1,0) + (1,0)*x");
  auto ideal = RightIdealSpec::in_skew(z2z2, id, {f}, 2, 1u);
  SkewPoly g = parse_skew_poly(z2z2, id, "(0,1) + (0,1)*x");
  auto trace = extract_witness(ideal, g, DescentMode::SigmaCompatible, kLim);
  CHECK(trace.steps.empty());
  CHECK(trace.result == "(0,1)");
  check_trace_invariants(ideal, g, trace);
}

TEST_CASE("membership precheck rejects non-members") {
  auto z2z2 = Ring::product({Ring::zmod(2), Ring::zmod(2)});
  auto s = Endo::swap(z2z2);
  SkewPoly p = parse_skew_poly(z2z2, s, "(1,0) + (1,0)*x");
  SkewPoly q = parse_skew_poly(z2z2, s, "(0,1) + (1,0)*x");
  auto ideal = RightIdealSpec::in_skew(z2z2, s, {p}, 1);

  CHECK(skew_mul(p, q).is_zero());
  auto cert = verify_annihilator_membership(ideal, q);
  CHECK_FALSE(cert.member);
  CHECK_FALSE(cert.failure.empty());
  CHECK_THROWS_AS(extract_witness(ideal, q, DescentMode::SigmaStable, kLim), RfError);
}

TEST_CASE("stability is trivial under the identity twist") {
  auto z4 = Ring::zmod(4);
  auto id = Endo::identity(z4);
  SkewPoly f = parse_skew_poly(z4, id, "2 + 2*x");
  auto ideal = RightIdealSpec::in_skew(z4, id, {f}, 2, 1u);
  auto cert = verify_stability(ideal, kLim);
  CHECK(cert.stable);
  CHECK(cert.exact);
  CHECK(cert.checked > 0);
}

TEST_CASE("membership certificates are exact when J covers the order") {
  auto z2z2 = Ring::product({Ring::zmod(2), Ring::zmod(2)});
  auto s = Endo::swap(z2z2);
  SkewPoly p = parse_skew_poly(z2z2, s, "(1,0) + (1,0)*x");
  auto ideal = RightIdealSpec::in_skew(z2z2, s, {p}, 2);
  // (0,0) polynomial trivially annihilates, but membership wants our g's
  SkewPoly zerog = SkewPoly::zero(z2z2, s);
  CHECK_THROWS_AS(extract_witness(ideal, zerog, DescentMode::SigmaStable, kLim), RfError);
  auto cert = verify_annihilator_membership(ideal, zerog);
  CHECK(cert.member);
  CHECK(cert.exact);
  CHECK(cert.power_bound == 2);
}

// Z2[u,v]/(u^2, v^2) as a table ring; element index encodes
// b0 + b1*u + b2*v + b3*uv, so u = 2, v = 4, uv = 8.
static RingPtr truncated_uv_ring() {
  auto mulfn = [](int x, int y) {
    int a0 = x & 1, a1 = (x >> 1) & 1, a2 = (x >> 2) & 1, a3 = (x >> 3) & 1;
    int c0 = y & 1, c1 = (y >> 1) & 1, c2 = (y >> 2) & 1, c3 = (y >> 3) & 1;
    int r0 = a0 & c0;
    int r1 = (a0 & c1) ^ (a1 & c0);
    int r2 = (a0 & c2) ^ (a2 & c0);
    int r3 = (a0 & c3) ^ (a3 & c0) ^ (a1 & c2) ^ (a2 & c1);
    return r0 | (r1 << 1) | (r2 << 2) | (r3 << 3);
  };
  std::vector<std::vector<int>> add(16, std::vector<int>(16)), mul(16, std::vector<int>(16));
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) {
      add[i][j] = i ^ j;
      mul[i][j] = mulfn(i, j);
    }
  return Ring::table_ring(std::move(add), std::move(mul));
}

TEST_CASE("descent with a genuine step, locked instance") {
  // in Z2[u,v]/(u^2, v^2): f = v + u*x annihilates g = v + u*x, but no
  // constant of the ideal kills the leading coefficient u, so the extractor
  // must take one real descent step down to the constant uv
  auto r = truncated_uv_ring();
  CHECK(r->commutative());
  auto id = Endo::identity(r);
  SkewPoly f = parse_skew_poly(r, id, "4 + 2*x");
  auto ideal = RightIdealSpec::in_skew(r, id, {f}, 2, 1u);
  SkewPoly g = f;
  CHECK(skew_mul(f, g).is_zero());
  CHECK(verify_annihilator_membership(ideal, g).member);
  CHECK_FALSE(skew_ideal_kills(ideal, SkewPoly::constant(r, id, g.leading_coeff())));

  auto trace = extract_witness(ideal, g, DescentMode::SigmaCompatible, kLim);
  REQUIRE(trace.steps.size() == 1);
  const auto& step = trace.steps[0];
  CHECK(step.g_before == "4 + 2*x");
  CHECK(step.f == "4 + 2*x");
  CHECK(step.f_origin == "f0*(1*x^0)");
  CHECK(step.p == 1);
  CHECK(step.rule == "a_p*g");
  CHECK(step.a_p == "2");
  CHECK(step.g_after == "8");
  CHECK(trace.result == "8");
  check_trace_invariants(ideal, g, trace);

  // the extracted constant agrees with the annihilator module
  auto consts = right_annihilator_constants_of_skew_ideal(ideal);
  REQUIRE(consts.elements.size() == 2);
  CHECK(r->serialize(consts.elements[1]) == "8");
}

TEST_CASE("search oracle for genuine-step descent instances") {
  // deterministic sweep: single generators of degree <= 2 (<= 1 on the
  // largest carrier), looking for I*g = 0 with deg g >= 1 where the ideal
  // does not kill the leading coefficient of g. The small noncommutative
  // carriers admit no such configuration; the truncated polynomial ring,
  // listed last, produces the locked instance above as its first hit.
  struct Cand {
    std::string label;
    RingPtr ring;
    EndoPtr endo;
    int gen_degree;
  };
  auto z2z2 = Ring::product({Ring::zmod(2), Ring::zmod(2)});
  auto t2 = upper_triangular_z2();
  auto m2 = Ring::matrix_ring(2, Ring::zmod(2));
  auto nag = Ring::nagata(z2z2, Module::ring_as_module(z2z2), Endo::swap(z2z2));
  auto trunc = truncated_uv_ring();
  std::vector<Cand> cands = {
      {"z2z2/swap", z2z2, Endo::swap(z2z2), 2},
      {"t2(z2)/identity", t2, Endo::identity(t2), 2},
      {"t2(z2)/diagonal", t2, diagonal_endo(t2), 2},
      {"mat2(z2)/identity", m2, Endo::identity(m2), 1},
      {"nagata(z2z2)/identity", nag, Endo::identity(nag), 1},
      {"trunc-uv/identity", trunc, Endo::identity(trunc), 1},
  };

  std::string found_label, found_gen, found_g;
  std::size_t found_steps = 0;
  for (const auto& cand : cands) {
    if (!found_label.empty()) break;
    bool compatible = check_element_property(cand.ring, cand.endo, Property::SigmaCompatible,
                                             std::nullopt, kLim)
                          .holds != Holds::False;
    std::optional<unsigned> J;
    if (!cand.endo->detected_order()) J = 2u;
    for (const auto& f : polys_up_to(cand.ring, cand.endo, cand.gen_degree)) {
      if (f.degree() < 1) continue;  // constant generators always shortcut
      auto ideal = RightIdealSpec::in_skew(cand.ring, cand.endo, {f}, 2, J);
      const SkewPoly* hit = nullptr;
      auto ann = bounded_skew_annihilator(ideal, kLim);
      for (const auto& g : ann) {
        if (g.degree() < 1) continue;
        if (skew_ideal_kills(ideal, SkewPoly::constant(cand.ring, cand.endo, g.leading_coeff())))
          continue;
        hit = &g;
        break;
      }
      if (!hit) continue;
      DescentMode mode = DescentMode::SigmaCompatible;
      if (!compatible) {
        REQUIRE(verify_stability(ideal, kLim).stable);
        mode = DescentMode::SigmaStable;
      }
      auto trace = extract_witness(ideal, *hit, mode, kLim);
      check_trace_invariants(ideal, *hit, trace);
      found_label = cand.label;
      found_gen = to_string(f);
      found_g = to_string(*hit);
      found_steps = trace.steps.size();
      break;
    }
  }
  CHECK(found_label == "trunc-uv/identity");
  CHECK(found_gen == "4 + 2*x");
  CHECK(found_g == "4 + 2*x");
  CHECK(found_steps == 1);
}
