#include "ihoml/ultrafilter.hpp"

#include "ihoml/errors.hpp"

namespace ihoml {

using namespace mk;

TermPtr SetOps::top() const {
  if (kind == FamilyKind::Delta) return lam("z", Type::ent(), tru(true));
  return lam("z", Type::ent(), mtrue());
}

TermPtr SetOps::empty() const {
  if (kind == FamilyKind::Delta) return lam("z", Type::ent(), tru(false));
  return lam("z", Type::ent(), mfalse());
}

TermPtr SetOps::elem(TermPtr x, TermPtr family) const {
  return app(std::move(family), std::move(x));
}

TermPtr SetOps::subset(TermPtr x, TermPtr y) const {
  if (kind == FamilyKind::Delta)
    return rigid(forall("z", Type::ent(),
                        imp(app(std::move(x), var("z")), app(std::move(y), var("z")))));
  return forallP("z", Type::ent(),
                 mimp(app(std::move(x), var("z")), app(std::move(y), var("z"))));
}

TermPtr SetOps::inter(TermPtr x, TermPtr y) const {
  if (kind == FamilyKind::Delta)
    return lam("z", Type::ent(),
               and_(app(std::move(x), var("z")), app(std::move(y), var("z"))));
  return lam("z", Type::ent(),
             mand(app(std::move(x), var("z")), app(std::move(y), var("z"))));
}

TermPtr SetOps::complement(TermPtr x) const {
  return kind == FamilyKind::Delta ? negd(std::move(x)) : negg(std::move(x));
}

TermPtr filter_pred(FamilyKind kind, TermPtr family) {
  SetOps ops = set_ops(kind);
  const Type mem = member_type(kind);
  TermPtr large = ops.elem(ops.top(), family);
  TermPtr excl = mnot(ops.elem(ops.empty(), family));
  TermPtr sup = forallP(
      "X", mem,
      forallP("Y", mem,
              mimp(mand(app(family, var("X")), ops.subset(var("X"), var("Y"))),
                   app(family, var("Y")))));
  TermPtr inter = forallP(
      "X", mem,
      forallP("Y", mem,
              mimp(mand(app(family, var("X")), app(family, var("Y"))),
                   app(family, ops.inter(var("X"), var("Y"))))));
  return mand(mand(large, excl), mand(sup, inter));
}

TermPtr ultrafilter_pred(FamilyKind kind, TermPtr family) {
  SetOps ops = set_ops(kind);
  const Type mem = member_type(kind);
  TermPtr maximal = forallP(
      "X", mem, mor(app(family, var("X")), app(family, ops.complement(var("X")))));
  return mand(filter_pred(kind, family), maximal);
}

namespace {

bool member_at(const Value& x, int z, int w, FamilyKind kind) {
  return kind == FamilyKind::Delta ? x.at(size_t(z)).as_truth()
                                   : x.at(size_t(z)).at(size_t(w)).as_truth();
}

void check_family_type(FamilyKind kind, const Value& family) {
  if (!(family.type() == family_type(kind)))
    throw TypeMismatch("family must have type " + family_type(kind).str() + ", got " +
                       family.type().str());
}

}  // namespace

bool is_filter_at(FamilyKind kind, const Value& family, const Model& m, Universe& u,
                  int world) {
  check_family_type(kind, family);
  const Type mem = member_type(kind);
  const auto& members = u.carrier(mem);
  const size_t n = members.size();
  const int E = m.entity_count;
  auto holds = [&](size_t i) { return family.at(i).at(size_t(world)).as_truth(); };

  if (!holds(n - 1)) return false;  // top is the maximal table
  if (holds(0)) return false;       // empty is the minimal table
  for (size_t i = 0; i < n; ++i) {
    if (!holds(i)) continue;
    for (size_t j = 0; j < n; ++j) {
      bool sub = true;
      for (int z = 0; z < E && sub; ++z)
        if (member_at(members[i], z, world, kind) && !member_at(members[j], z, world, kind))
          sub = false;
      if (sub && !holds(j)) return false;  // closed under supersets
      if (holds(j)) {
        // intersect pointwise and look the result up
        Value inter = members[i];
        if (kind == FamilyKind::Delta) {
          std::vector<Value> es;
          for (int z = 0; z < E; ++z)
            es.push_back(Value::truth(member_at(members[i], z, world, kind) &&
                                      member_at(members[j], z, world, kind)));
          inter = Value::table(mem, std::move(es));
        } else {
          std::vector<Value> rows;
          for (int z = 0; z < E; ++z) {
            std::vector<Value> row;
            for (int w2 = 0; w2 < m.frame.world_count; ++w2)
              row.push_back(Value::truth(members[i].at(size_t(z)).at(size_t(w2)).as_truth() &&
                                         members[j].at(size_t(z)).at(size_t(w2)).as_truth()));
            rows.push_back(Value::table(Type::sigma(), std::move(row)));
          }
          inter = Value::table(mem, std::move(rows));
        }
        if (!holds(size_t(u.rank(inter)))) return false;  // closed under intersections
      }
    }
  }
  return true;
}

bool is_ultrafilter_at(FamilyKind kind, const Value& family, const Model& m, Universe& u,
                       int world) {
  if (!is_filter_at(kind, family, m, u, world)) return false;
  const auto& members = u.carrier(member_type(kind));
  const size_t n = members.size();
  for (size_t i = 0; i < n; ++i) {
    // complement by flipping every truth leaf pointwise
    Value c = members[i];
    if (kind == FamilyKind::Delta) {
      std::vector<Value> es;
      for (const Value& e : members[i].entries()) es.push_back(Value::truth(!e.as_truth()));
      c = Value::table(member_type(kind), std::move(es));
    } else {
      std::vector<Value> rows;
      for (const Value& row : members[i].entries()) {
        std::vector<Value> bits;
        for (const Value& e : row.entries()) bits.push_back(Value::truth(!e.as_truth()));
        rows.push_back(Value::table(Type::sigma(), std::move(bits)));
      }
      c = Value::table(member_type(kind), std::move(rows));
    }
    bool in_i = family.at(i).at(size_t(world)).as_truth();
    bool in_c = family.at(size_t(u.rank(c))).at(size_t(world)).as_truth();
    if (!in_i && !in_c) return false;
  }
  return true;
}

bool is_ultrafilter_globally(FamilyKind kind, const Value& family, const Model& m, Universe& u) {
  for (int w = 0; w < m.frame.world_count; ++w)
    if (!is_ultrafilter_at(kind, family, m, u, w)) return false;
  return true;
}

}  // namespace ihoml
