#include "ihoml/variants.hpp"

#include <algorithm>
#include <sstream>

#include "ihoml/errors.hpp"
#include "ihoml/printer.hpp"

namespace ihoml {

using namespace mk;

namespace {

const Type kEnt = Type::ent();
const Type kGamma = Type::gamma();
const Type kDelta = Type::delta();
const Type kSigma = Type::sigma();

bool mentions_sym(const TermPtr& t, const std::string& name) {
  if (t->kind == Kind::Sym && t->name == name) return true;
  if (t->a && mentions_sym(t->a, name)) return true;
  if (t->b && mentions_sym(t->b, name)) return true;
  return false;
}

TermPtr subst_sym(const TermPtr& t, const std::string& name, const TermPtr& body) {
  if (t->kind == Kind::Sym) return t->name == name ? body : t;
  if (!t->a && !t->b) return t;
  auto n = std::make_shared<Term>(*t);
  if (t->a) n->a = subst_sym(t->a, name, body);
  if (t->b) n->b = subst_sym(t->b, name, body);
  return n;
}

TermPtr P() { return sym("P"); }
TermPtr G() { return sym("G"); }
TermPtr E() { return sym("E"); }
TermPtr NE() { return sym("NE"); }

CatalogEntry def(std::string name, std::string symbol, TermPtr t) {
  return {CatalogEntry::EntryKind::Definition, std::move(name), std::move(symbol),
          std::move(t)};
}
CatalogEntry ax(std::string name, TermPtr t) {
  return {CatalogEntry::EntryKind::Postulate, std::move(name), "", std::move(t)};
}

// --- axiom shapes over the intensional signature (Scott and Anderson) ----

TermPtr a1a_gamma() {
  return forallP("X", kGamma, mimp(app(P(), negg(var("X"))), mnot(app(P(), var("X")))));
}
TermPtr a1b_gamma() {
  return forallP("X", kGamma, mimp(mnot(app(P(), var("X"))), app(P(), negg(var("X")))));
}
TermPtr a2_gamma() {
  return forallP(
      "X", kGamma,
      forallP("Y", kGamma,
              mimp(mand(app(P(), var("X")),
                        box(forallE("z", mimp(app(var("X"), var("z")),
                                              app(var("Y"), var("z")))))),
                   app(P(), var("Y")))));
}
TermPtr a3_gamma() {
  TermPtr z_only_pos =
      forallP("Y", kGamma, mimp(app(var("Z"), var("Y")), app(P(), var("Y"))));
  TermPtr x_is_conj = box(forallP(
      "x", kEnt,
      mequ(app(var("X"), var("x")),
           forallP("Y", kGamma, mimp(app(var("Z"), var("Y")), app(var("Y"), var("x")))))));
  return forallP("Z", Type::fun(kGamma, kSigma),
                 forallP("X", kGamma,
                         mimp(mand(z_only_pos, x_is_conj), app(P(), var("X")))));
}
TermPtr a4_gamma() {
  return forallP("X", kGamma, mimp(app(P(), var("X")), box(app(P(), var("X")))));
}

TermPtr exists_godlike() { return existsE("x", app(G(), var("x"))); }

// T1/T4/T5 are not printed in the figures; these are the textbook shapes
// with the variant's own G and E spliced in.
void add_theorem_goals_gamma(std::map<std::string, Goal>& goals) {
  auto add = [&](const std::string& n, TermPtr t) {
    goals[n] = Goal{n, std::move(t), std::nullopt};
  };
  add("T1", forallP("X", kGamma,
                    mimp(app(P(), var("X")), dia(existsE("z", app(var("X"), var("z")))))));
  add("T2", app(P(), G()));
  add("T3", dia(exists_godlike()));
  add("T4", forallP("x", kEnt, mimp(app(G(), var("x")), app2(E(), G(), var("x")))));
  add("T5", mimp(dia(exists_godlike()), box(exists_godlike())));
  add("T6", box(exists_godlike()));
}

void add_schema_goals(std::map<std::string, Goal>& goals) {
  auto add = [&](Schema s) {
    std::string n = s.name;
    goals[n] = Goal{n, nullptr, std::move(s)};
  };
  add(mk_modal_collapse());
  add(mk_barcan(QuantFlavor::EntActualist, BarcanDirection::BF));
  add(mk_barcan(QuantFlavor::EntActualist, BarcanDirection::CBF));
  add(mk_barcan(QuantFlavor::GammaPossibilist, BarcanDirection::BF));
  add(mk_barcan(QuantFlavor::GammaPossibilist, BarcanDirection::CBF));
}

void add_ultrafilter_goals_gamma(std::map<std::string, Goal>& goals, const VariantSpec& v) {
  TermPtr pprime = mk_P_prime(v);
  goals["U1"] = Goal{"U1", ultrafilter_pred(FamilyKind::Gamma, P()), std::nullopt};
  goals["U2"] = Goal{"U2", ultrafilter_pred(FamilyKind::Gamma, pprime), std::nullopt};
  goals["U3"] = Goal{"U3",
                     forallP("phi", kGamma,
                             mequ(app(P(), var("phi")), app(pprime, var("phi")))),
                     std::nullopt};
}

VariantSpec scott_variant() {
  VariantSpec v;
  v.name = "scott";
  v.signature = {{"P", Type::fun(kGamma, kSigma)}};

  TermPtr g_def = lam(
      "x", kEnt, forallP("Y", kGamma, mimp(app(P(), var("Y")), app(var("Y"), var("x")))));
  TermPtr e_def = lam(
      "Y", kGamma,
      lam("x", kEnt,
          mand(app(var("Y"), var("x")),
               forallP("Z", kGamma,
                       mimp(app(var("Z"), var("x")),
                            box(forallE("z", mimp(app(var("Y"), var("z")),
                                                  app(var("Z"), var("z"))))))))));
  TermPtr ne_def =
      lam("x", kEnt,
          forallP("Y", kGamma,
                  mimp(app2(E(), var("Y"), var("x")),
                       box(existsE("z", app(var("Y"), var("z")))))));

  v.entries = {def("df.G", "G", g_def), ax("A1a", a1a_gamma()), ax("A1b", a1b_gamma()),
               ax("A2", a2_gamma()),    ax("A3", a3_gamma()),   ax("A4", a4_gamma()),
               def("df.E", "E", e_def), def("df.NE", "NE", ne_def),
               ax("A5", app(P(), NE()))};

  add_theorem_goals_gamma(v.goals);
  add_ultrafilter_goals_gamma(v.goals, v);
  add_schema_goals(v.goals);
  for (auto& [n, g] : v.goals)
    if (g.closed) g.closed = v.expand(g.closed);
  return v;
}

VariantSpec anderson_variant() {
  VariantSpec v;
  v.name = "anderson";
  v.signature = {{"P", Type::fun(kGamma, kSigma)}};

  TermPtr g_def = lam(
      "x", kEnt, forallP("Y", kGamma, mequ(app(P(), var("Y")), box(app(var("Y"), var("x"))))));
  TermPtr e_def = lam(
      "Y", kGamma,
      lam("x", kEnt,
          forallP("Z", kGamma,
                  mequ(box(app(var("Z"), var("x"))),
                       box(forallE("z", mimp(app(var("Y"), var("z")),
                                             app(var("Z"), var("z")))))))));
  TermPtr ne_def =
      lam("x", kEnt,
          forallP("Y", kGamma,
                  mimp(app2(E(), var("Y"), var("x")),
                       box(existsE("z", app(var("Y"), var("z")))))));

  // Anderson drops A1b and A3 and postulates T2 directly.
  v.entries = {def("df.G^A", "G", g_def),
               ax("A1a", a1a_gamma()),
               ax("A2", a2_gamma()),
               ax("T2", app(P(), G())),
               ax("A4", a4_gamma()),
               def("df.E^A", "E", e_def),
               def("df.NE^A", "NE", ne_def),
               ax("A5", app(P(), NE()))};

  add_theorem_goals_gamma(v.goals);
  add_ultrafilter_goals_gamma(v.goals, v);
  add_schema_goals(v.goals);
  for (auto& [n, g] : v.goals)
    if (g.closed) g.closed = v.expand(g.closed);
  return v;
}

VariantSpec fitting_variant() {
  VariantSpec v;
  v.name = "fitting";
  v.signature = {{"P", Type::fun(kDelta, kSigma)}};

  TermPtr g_def =
      lam("x", kEnt,
          forallP("Y", kDelta, mimp(app(P(), var("Y")), rigid(app(var("Y"), var("x"))))));
  TermPtr a1a = forallP(
      "X", kDelta, mimp(app(P(), negd(var("X"))), mnot(app(P(), var("X")))));
  TermPtr a1b = forallP(
      "X", kDelta, mimp(mnot(app(P(), var("X"))), app(P(), negd(var("X")))));
  TermPtr a2 = forallP(
      "X", kDelta,
      forallP("Y", kDelta,
              mimp(mand(app(P(), var("X")),
                        box(forallE("z", mimp(rigid(app(var("X"), var("z"))),
                                              rigid(app(var("Y"), var("z"))))))),
                   app(P(), var("Y")))));
  TermPtr e_def = lam(
      "Y", kDelta,
      lam("x", kEnt,
          mand(rigid(app(var("Y"), var("x"))),
               forallP("Z", kDelta,
                       mimp(rigid(app(var("Z"), var("x"))),
                            box(forallE("z", mimp(rigid(app(var("Y"), var("z"))),
                                                  rigid(app(var("Z"), var("z")))))))))));
  TermPtr ne_def =
      lam("x", kEnt,
          forallP("Y", kDelta,
                  mimp(app2(E(), var("Y"), var("x")),
                       box(existsE("z", rigid(app(var("Y"), var("z"))))))));

  v.entries = {def("df.G", "G", g_def),
               ax("A1a", a1a),
               ax("A1b", a1b),
               ax("A2", a2),
               ax("T2", down(P(), G())),
               def("df.E", "E", e_def),
               def("df.NE", "NE", ne_def),
               ax("A5", down(P(), NE()))};

  auto add = [&](const std::string& n, TermPtr t) {
    v.goals[n] = Goal{n, std::move(t), std::nullopt};
  };
  add("T1", forallP("X", kDelta,
                    mimp(app(P(), var("X")),
                         dia(existsE("z", rigid(app(var("X"), var("z"))))))));
  add("T2", down(P(), G()));
  TermPtr t3_dd = dia(exists_godlike());
  TermPtr t6_dd = box(exists_godlike());
  TermPtr dia_dr = existsE("z", dia(rigid(app(var("X"), var("z")))));
  TermPtr box_dr = existsE("z", box(rigid(app(var("X"), var("z")))));
  add("T3_dd", t3_dd);
  add("T3_dr", down(lam("X", kDelta, dia_dr), G()));
  add("T3", t3_dd);
  add("T4", forallP("x", kEnt,
                    mimp(app(G(), var("x")), app(down1(E(), G()), var("x")))));
  add("T5_dd", mimp(t3_dd, t6_dd));
  add("T5_dr", down(lam("X", kDelta, mimp(dia_dr, box_dr)), G()));
  add("T5", mimp(t3_dd, t6_dd));
  add("T6_dd", t6_dd);
  add("T6_dr", down(lam("X", kDelta, box_dr), G()));
  add("T6", box(exists_godlike()));
  add("U1", ultrafilter_pred(FamilyKind::Delta, P()));
  add_schema_goals(v.goals);
  for (auto& [n, g] : v.goals)
    if (g.closed) g.closed = v.expand(g.closed);
  return v;
}

}  // namespace

Signature VariantSpec::full_signature() const {
  Signature sig = signature;
  sig.emplace("r", Type::tau());
  sig.emplace("existsAt", kGamma);
  for (const auto& e : entries)
    if (e.kind == CatalogEntry::EntryKind::Definition)
      sig[e.symbol] = typecheck(e.term, sig);
  return sig;
}

TermPtr VariantSpec::expand(TermPtr t) const {
  bool again = true;
  while (again) {
    again = false;
    for (const auto& e : entries) {
      if (e.kind != CatalogEntry::EntryKind::Definition) continue;
      if (mentions_sym(t, e.symbol)) {
        t = subst_sym(t, e.symbol, e.term);
        again = true;
      }
    }
  }
  return t;
}

std::vector<std::pair<std::string, TermPtr>> VariantSpec::check_axioms(
    int entities, int worlds, uint64_t cap, std::string* mode) const {
  Universe u(entities, worlds, cap);
  if (mode) *mode = "";
  std::vector<std::pair<std::string, TermPtr>> out;
  for (const auto& e : entries) {
    if (e.kind != CatalogEntry::EntryKind::Postulate) continue;
    if (e.name == "A3") {
      // third-order quantifier; substitute its sole consequence when the
      // carrier is not enumerable
      if (u.carrier_size(Type::fun(kGamma, kSigma)) > cap) {
        out.emplace_back("T2", expand(app(P(), G())));
        if (mode) *mode = "A3-replaced-by-T2";
        continue;
      }
      if (mode) *mode = "A3";
    }
    out.emplace_back(e.name, expand(e.term));
  }
  // cheap axioms first; evaluation order only affects speed
  auto rank = [](const std::string& n) {
    if (n == "A1a") return 0;
    if (n == "A1b") return 1;
    if (n == "A4") return 2;
    if (n == "T2") return 3;
    if (n == "A2") return 4;
    if (n == "A5") return 5;
    if (n == "A3") return 6;
    return 4;
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const auto& a, const auto& b) { return rank(a.first) < rank(b.first); });
  return out;
}

VariantSpec build_variant(const std::string& name) {
  if (name == "scott") return scott_variant();
  if (name == "anderson") return anderson_variant();
  if (name == "fitting") return fitting_variant();
  throw Error("unknown variant: " + name);
}

TermPtr mk_P_prime(const VariantSpec& v) {
  if (v.signature.at("P") == Type::fun(kDelta, kSigma))
    throw NotApplicable("P is already extensional in the " + v.name + " variant");
  return lam("phi", kGamma, downb(P(), var("phi")));
}

Schema mk_modal_collapse() {
  return Schema{"MC", kSigma, [](const Value& v) {
                  TermPtr l = lit(v);
                  return mimp(l, box(l));
                }};
}

Schema mk_barcan(QuantFlavor flavor, BarcanDirection dir) {
  const bool ent = flavor == QuantFlavor::EntActualist;
  std::string name = std::string(dir == BarcanDirection::BF ? "BF" : "CBF") +
                     (ent ? "_e" : "_g");
  Type param = ent ? kGamma : Type::fun(kGamma, kSigma);
  return Schema{name, param, [ent, dir](const Value& v) {
                  TermPtr l = lit(v);
                  TermPtr quant_box, box_quant;
                  if (ent) {
                    quant_box = forallE("x", box(app(l, var("x"))));
                    box_quant = box(forallE("x", app(l, var("x"))));
                  } else {
                    quant_box = forallP("X", kGamma, box(app(l, var("X"))));
                    box_quant = box(forallP("X", kGamma, app(l, var("X"))));
                  }
                  return dir == BarcanDirection::BF ? mimp(quant_box, box_quant)
                                                    : mimp(box_quant, quant_box);
                }};
}

TermPtr mk_de_dicto(const VariantSpec& v, const std::string& goal) {
  auto it = v.goals.find(goal + "_dd");
  if (it == v.goals.end())
    throw NotApplicable("no de dicto reading of " + goal + " in " + v.name);
  return it->second.closed;
}

TermPtr mk_de_re(const VariantSpec& v, const std::string& goal) {
  auto it = v.goals.find(goal + "_dr");
  if (it == v.goals.end())
    throw NotApplicable("no de re reading of " + goal + " in " + v.name);
  return it->second.closed;
}

std::string export_catalog(const VariantSpec& v) {
  std::ostringstream os;
  for (const auto& e : v.entries) {
    if (e.kind == CatalogEntry::EntryKind::Definition)
      os << e.name << ": " << e.symbol << " := " << print_term(e.term) << "\n";
    else
      os << e.name << ": " << print_term(e.term) << "\n";
  }
  return os.str();
}

}  // namespace ihoml
