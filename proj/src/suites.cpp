#include <sstream>

#include "ringforge/properties.hpp"
#include "ringforge/witness.hpp"

namespace ringforge {

namespace {

struct Ctx {
  RingPtr z2 = Ring::zmod(2);
  RingPtr z3 = Ring::zmod(3);
  RingPtr z4 = Ring::zmod(4);
  RingPtr z5 = Ring::zmod(5);
  RingPtr z6 = Ring::zmod(6);
  RingPtr z2z2 = Ring::product({Ring::zmod(2), Ring::zmod(2)});
  RingPtr m2z2 = Ring::matrix_ring(2, Ring::zmod(2));
};

std::string verdict_note(const char* label, const Verdict& v) {
  std::string s = std::string(label) + "=" + holds_name(v.holds);
  if (v.holds == Holds::False && !v.witness.empty()) {
    s += " (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) s += (i ? ", " : "") + v.witness[i];
    s += ")";
  }
  return s;
}

struct RowBuilder {
  SuiteRow row;
  std::vector<std::string> notes;
  bool hyp_ok = true;
  bool violated = false;

  explicit RowBuilder(std::string instance) { row.instance = std::move(instance); }

  // hypothesis clause: a false verdict makes the whole row PASS vacuously
  void hyp(const char* label, const Verdict& v) {
    notes.push_back(verdict_note(label, v));
    if (v.holds == Holds::False) hyp_ok = false;
  }
  // conclusion clause: must not be false when all hypotheses held
  void concl(const char* label, const Verdict& v) {
    notes.push_back(verdict_note(label, v));
    if (hyp_ok && v.holds == Holds::False) violated = true;
  }
  // biconditional conclusion: the two verdicts must agree
  void concl_iff(const char* l1, const Verdict& a, const char* l2, const Verdict& b) {
    notes.push_back(verdict_note(l1, a));
    notes.push_back(verdict_note(l2, b));
    if (hyp_ok && (a.holds == Holds::False) != (b.holds == Holds::False)) violated = true;
  }

  SuiteRow finish() {
    row.status = violated ? "VIOLATION" : "PASS";
    std::string d;
    for (std::size_t i = 0; i < notes.size(); ++i) d += (i ? "; " : "") + notes[i];
    if (!violated && !hyp_ok) d += "; vacuous (hypothesis failed)";
    row.detail = d;
    return row;
  }
};

SuiteReport suite_prop26(const Ctx& c, const SearchLimits& limits) {
  SuiteReport rep;
  rep.id = "prop2.6";
  struct Inst { RingPtr r; EndoPtr s; long long d; };
  std::vector<Inst> roster = {
      {c.z2, Endo::identity(c.z2), 2},   {c.z3, Endo::identity(c.z3), 2},
      {c.z4, Endo::identity(c.z4), 2},   {c.z2z2, Endo::identity(c.z2z2), 2},
      {c.z2z2, Endo::swap(c.z2z2), 1},   {c.m2z2, Endo::identity(c.m2z2), 1},
  };
  for (const auto& in : roster) {
    RowBuilder b(in.r->describe() + " / " + in.s->describe() + " / d=" + std::to_string(in.d));
    b.hyp("skewring-semicommutative", check_skewring_semicommutative(in.r, in.s, in.d, limits));
    if (b.hyp_ok)
      b.concl("sigma-skew-mccoy", check_mccoy(in.r, in.s, MccoyVariant::SigmaSkew, in.d, limits));
    auto row = b.finish();
    if (row.status == "VIOLATION") rep.all_clear = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

SuiteReport suite_cor210(const Ctx& c, const SearchLimits& limits) {
  SuiteReport rep;
  rep.id = "cor2.10";
  struct Inst { RingPtr r; EndoPtr s; long long d; };
  std::vector<Inst> roster = {
      {c.z2, Endo::identity(c.z2), 2},   {c.z3, Endo::identity(c.z3), 2},
      {c.z4, Endo::identity(c.z4), 2},   {c.z2z2, Endo::swap(c.z2z2), 1},
      {c.z2z2, Endo::identity(c.z2z2), 2}, {c.m2z2, Endo::identity(c.m2z2), 1},
  };
  for (const auto& in : roster) {
    RowBuilder b(in.r->describe() + " / " + in.s->describe() + " / d=" + std::to_string(in.d));
    b.hyp("semicommutative",
          check_element_property(in.r, nullptr, Property::Semicommutative, std::nullopt, limits));
    b.hyp("C2", check_condition_C(Module::ring_as_module(in.r), in.s, 2, std::nullopt, limits));
    if (b.hyp_ok)
      b.concl("sigma-skew-mccoy", check_mccoy(in.r, in.s, MccoyVariant::SigmaSkew, in.d, limits));
    auto row = b.finish();
    if (row.status == "VIOLATION") rep.all_clear = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

struct NagataInst {
  RingPtr base;
  ModulePtr module;
  EndoPtr endo;
  long long d;
  RingPtr nagata;
  std::string name;
};

NagataInst make_nagata(RingPtr base, int power, EndoPtr endo, long long d) {
  NagataInst in;
  in.base = base;
  in.module = power == 1 ? Module::ring_as_module(base) : Module::ring_power(base, power);
  in.endo = std::move(endo);
  in.d = d;
  in.nagata = Ring::nagata(base, in.module, in.endo);
  in.name = in.nagata->describe() + " / d=" + std::to_string(d);
  return in;
}

SuiteReport suite_prop31(const Ctx& c, const SearchLimits& limits) {
  SuiteReport rep;
  rep.id = "prop3.1";
  std::vector<NagataInst> roster = {
      make_nagata(c.z2, 1, Endo::identity(c.z2), 2),
      make_nagata(c.z3, 1, Endo::identity(c.z3), 2),
      make_nagata(c.z4, 1, Endo::identity(c.z4), 1),
      make_nagata(c.z2z2, 1, Endo::swap(c.z2z2), 1),
      make_nagata(c.z2, 2, Endo::identity(c.z2), 1),
      make_nagata(c.z5, 1, Endo::identity(c.z5), 1),
  };
  for (const auto& in : roster) {
    RowBuilder b(in.name);
    b.hyp("commutative",
          check_element_property(in.base, nullptr, Property::Commutative, std::nullopt, limits));
    b.hyp("domain",
          check_element_property(in.base, nullptr, Property::Domain, std::nullopt, limits));
    if (b.hyp_ok)
      b.concl_iff("module-armendariz", check_armendariz_module(in.module, in.d, limits),
                  "nagata-armendariz", check_armendariz_ring(in.nagata, in.d, limits));
    auto row = b.finish();
    if (row.status == "VIOLATION") rep.all_clear = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

SuiteReport suite_prop33(const Ctx& c, const SearchLimits& limits) {
  SuiteReport rep;
  rep.id = "prop3.3";
  std::vector<NagataInst> roster = {
      make_nagata(c.z2, 1, Endo::identity(c.z2), 1),
      make_nagata(c.z3, 1, Endo::identity(c.z3), 1),
      make_nagata(c.z4, 1, Endo::identity(c.z4), 1),
      make_nagata(c.z2z2, 1, Endo::swap(c.z2z2), 1),
      make_nagata(c.z2z2, 1, Endo::identity(c.z2z2), 1),
      make_nagata(c.z6, 1, Endo::identity(c.z6), 1),
  };
  for (const auto& in : roster) {
    RowBuilder b(in.name);
    b.hyp("commutative",
          check_element_property(in.base, nullptr, Property::Commutative, std::nullopt, limits));
    b.hyp("R-C1",
          check_condition_C(Module::ring_as_module(in.base), in.endo, 1, std::nullopt, limits));
    b.hyp("M-C2", check_condition_C(in.module, in.endo, 2, std::nullopt, limits));
    if (b.hyp_ok)
      b.concl("nagata-semicommutative",
              check_element_property(in.nagata, nullptr, Property::Semicommutative, std::nullopt,
                                     limits));
    auto row = b.finish();
    if (row.status == "VIOLATION") rep.all_clear = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

SuiteReport suite_prop34(const Ctx& c, const SearchLimits& limits) {
  SuiteReport rep;
  rep.id = "prop3.4";
  std::vector<NagataInst> roster = {
      make_nagata(c.z3, 1, Endo::identity(c.z3), 2),
      make_nagata(c.z2, 1, Endo::identity(c.z2), 2),
      make_nagata(c.z5, 1, Endo::identity(c.z5), 1),
      make_nagata(c.z4, 1, Endo::identity(c.z4), 1),
      make_nagata(c.z2z2, 1, Endo::identity(c.z2z2), 1),
      make_nagata(c.z2, 2, Endo::identity(c.z2), 1),
      make_nagata(c.z3, 2, Endo::identity(c.z3), 1),
  };
  for (const auto& in : roster) {
    RowBuilder b(in.name);
    b.hyp("commutative",
          check_element_property(in.base, nullptr, Property::Commutative, std::nullopt, limits));
    b.hyp("domain",
          check_element_property(in.base, nullptr, Property::Domain, std::nullopt, limits));
    if (b.hyp_ok) {
      b.concl("nagata-semicommutative",
              check_element_property(in.nagata, nullptr, Property::Semicommutative, std::nullopt,
                                     limits));
      b.concl("nagata-mccoy-right",
              check_mccoy(in.nagata, nullptr, MccoyVariant::Right, in.d, limits));
    }
    auto row = b.finish();
    if (row.status == "VIOLATION") rep.all_clear = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

SuiteReport suite_thm38(const Ctx& c, const SearchLimits& limits) {
  SuiteReport rep;
  rep.id = "thm3.8";
  std::vector<NagataInst> roster = {
      make_nagata(c.z2, 1, Endo::identity(c.z2), 2),
      make_nagata(c.z3, 1, Endo::identity(c.z3), 2),
      make_nagata(c.z4, 1, Endo::identity(c.z4), 1),
      make_nagata(c.z2z2, 1, Endo::swap(c.z2z2), 1),
      make_nagata(c.z2z2, 1, Endo::identity(c.z2z2), 1),
      make_nagata(c.z6, 1, Endo::identity(c.z6), 1),
  };
  for (const auto& in : roster) {
    RowBuilder b(in.name);
    b.hyp("commutative",
          check_element_property(in.base, nullptr, Property::Commutative, std::nullopt, limits));
    b.hyp("base-armendariz", check_armendariz_ring(in.base, in.d, limits));
    b.hyp("M-C2", check_condition_C(in.module, in.endo, 2, std::nullopt, limits));
    if (b.hyp_ok)
      b.concl_iff("module-armendariz", check_armendariz_module(in.module, in.d, limits),
                  "nagata-armendariz", check_armendariz_ring(in.nagata, in.d, limits));
    auto row = b.finish();
    if (row.status == "VIOLATION") rep.all_clear = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

SuiteReport suite_cor39(const Ctx& c, const SearchLimits& limits) {
  SuiteReport rep;
  rep.id = "cor3.9";
  std::vector<NagataInst> roster = {
      make_nagata(c.z2, 1, Endo::identity(c.z2), 2),
      make_nagata(c.z3, 1, Endo::identity(c.z3), 2),
      make_nagata(c.z4, 1, Endo::identity(c.z4), 1),
      make_nagata(c.z2z2, 1, Endo::swap(c.z2z2), 1),
      make_nagata(c.z2z2, 1, Endo::identity(c.z2z2), 1),
      make_nagata(c.z6, 1, Endo::identity(c.z6), 1),
  };
  for (const auto& in : roster) {
    RowBuilder b(in.name);
    b.hyp("commutative",
          check_element_property(in.base, nullptr, Property::Commutative, std::nullopt, limits));
    b.hyp("reduced",
          check_element_property(in.base, nullptr, Property::Reduced, std::nullopt, limits));
    b.hyp("R-C1",
          check_condition_C(Module::ring_as_module(in.base), in.endo, 1, std::nullopt, limits));
    if (b.hyp_ok) {
      b.concl("nagata-semicommutative",
              check_element_property(in.nagata, nullptr, Property::Semicommutative, std::nullopt,
                                     limits));
      b.concl("nagata-armendariz", check_armendariz_ring(in.nagata, in.d, limits));
    }
    auto row = b.finish();
    if (row.status == "VIOLATION") rep.all_clear = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace

SuiteReport run_implication_suite(const std::string& suite_id, const SearchLimits& limits) {
  Ctx c;
  if (suite_id == "prop2.6") return suite_prop26(c, limits);
  if (suite_id == "cor2.10") return suite_cor210(c, limits);
  if (suite_id == "prop3.1") return suite_prop31(c, limits);
  if (suite_id == "prop3.3") return suite_prop33(c, limits);
  if (suite_id == "prop3.4") return suite_prop34(c, limits);
  if (suite_id == "thm3.8") return suite_thm38(c, limits);
  if (suite_id == "cor3.9") return suite_cor39(c, limits);
  if (suite_id == "thm2.1-random") {
    std::vector<std::pair<RingPtr, EndoPtr>> roster = {
        {c.z4, Endo::identity(c.z4)},
        {c.z2z2, Endo::identity(c.z2z2)},
        {c.z2z2, Endo::swap(c.z2z2)},
        {c.m2z2, Endo::identity(c.m2z2)},
    };
    return theorem21_random_suite(roster, 20, 0x52464f524745ull, limits);
  }
  throw RfError(Err::UnknownSuite, "unknown suite id: " + suite_id);
}

}  // namespace ringforge
