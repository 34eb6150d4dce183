#include "ihoml/model.hpp"

#include <algorithm>

#include "ihoml/errors.hpp"

namespace ihoml {

Frame::Frame(int worlds, std::vector<std::pair<int, int>> pairs)
    : world_count(worlds), accessibility(std::move(pairs)) {
  std::sort(accessibility.begin(), accessibility.end());
  accessibility.erase(std::unique(accessibility.begin(), accessibility.end()),
                      accessibility.end());
  for (auto [i, j] : accessibility)
    if (i < 0 || j < 0 || i >= worlds || j >= worlds)
      throw Error("accessibility pair out of range");
  succ_.assign(size_t(worlds), {});
  for (auto [i, j] : accessibility) succ_[size_t(i)].push_back(j);
}

bool Frame::related(int i, int j) const {
  return std::binary_search(accessibility.begin(), accessibility.end(),
                            std::make_pair(i, j));
}

Value Frame::as_value() const {
  std::vector<Value> rows;
  rows.reserve(size_t(world_count));
  for (int i = 0; i < world_count; ++i) {
    std::vector<Value> row;
    row.reserve(size_t(world_count));
    for (int j = 0; j < world_count; ++j) row.push_back(Value::truth(related(i, j)));
    rows.push_back(Value::table(Type::sigma(), std::move(row)));
  }
  return Value::table(Type::tau(), std::move(rows));
}

uint64_t Frame::relation_mask() const {
  uint64_t m = 0;
  for (auto [i, j] : accessibility) m |= uint64_t(1) << (i * world_count + j);
  return m;
}

Frame Frame::from_mask(int worlds, uint64_t mask) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < worlds; ++i)
    for (int j = 0; j < worlds; ++j)
      if (mask & (uint64_t(1) << (i * worlds + j))) pairs.emplace_back(i, j);
  return Frame(worlds, std::move(pairs));
}

const char* frame_class_name(FrameClass c) {
  switch (c) {
    case FrameClass::K: return "K";
    case FrameClass::KB: return "KB";
    case FrameClass::S5: return "S5";
  }
  return "?";
}

FrameClass frame_class_from_name(const std::string& name) {
  if (name == "K" || name == "k") return FrameClass::K;
  if (name == "KB" || name == "kb") return FrameClass::KB;
  if (name == "S5" || name == "s5") return FrameClass::S5;
  throw Error("unknown frame class: " + name);
}

bool frame_satisfies(const Frame& f, FrameClass c) {
  if (c == FrameClass::K) return true;
  for (auto [i, j] : f.accessibility)
    if (!f.related(j, i)) return false;  // symmetry (KB and S5)
  if (c == FrameClass::KB) return true;
  for (int i = 0; i < f.world_count; ++i)
    if (!f.related(i, i)) return false;  // reflexivity
  for (auto [i, j] : f.accessibility)
    for (int k : f.successors(j))
      if (!f.related(i, k)) return false;  // transitivity
  return true;
}

std::vector<Frame> frames_in_class(int worlds, FrameClass c) {
  std::vector<Frame> out;
  const uint64_t total = uint64_t(1) << (worlds * worlds);
  for (uint64_t mask = 0; mask < total; ++mask) {
    Frame f = Frame::from_mask(worlds, mask);
    if (frame_satisfies(f, c)) out.push_back(std::move(f));
  }
  return out;
}

const Value& Model::lookup(const std::string& sym) const {
  auto it = interp.find(sym);
  if (it == interp.end()) throw UnboundSymbol("unbound symbol: " + sym);
  return it->second;
}

std::map<std::string, Type> Model::symbol_types() const {
  std::map<std::string, Type> sig;
  for (const auto& [name, v] : interp) sig.emplace(name, v.type());
  sig.emplace("r", Type::tau());
  sig.emplace("existsAt", Type::gamma());
  return sig;
}

namespace {

// Checks that a value is a well-formed member of its type's carrier for the
// given domain sizes (total tables, indices in range).
bool value_well_formed(const Value& v, const Type& ty, int entities, int worlds) {
  if (!(v.type() == ty)) return false;
  switch (v.kind()) {
    case Value::Kind::Truth: return ty.tag() == Type::Tag::Tru;
    case Value::Kind::Entity:
      return ty.tag() == Type::Tag::Ent && v.index() >= 0 && v.index() < entities;
    case Value::Kind::World:
      return ty.tag() == Type::Tag::Wld && v.index() >= 0 && v.index() < worlds;
    case Value::Kind::Table: break;
  }
  if (!ty.is_fun()) return false;
  Universe u(entities, worlds);
  if (v.size() != u.carrier_size(ty.dom())) return false;
  for (const Value& e : v.entries())
    if (!value_well_formed(e, ty.cod(), entities, worlds)) return false;
  return true;
}

}  // namespace

Model make_model(Frame frame, int entity_count, Value exists_at,
                 std::map<std::string, Value> interp,
                 const std::map<std::string, Type>& signature, FrameClass cls) {
  if (entity_count < 1) throw EmptyDomain("entity domain must be nonempty");
  if (frame.world_count < 1) throw EmptyDomain("world domain must be nonempty");
  if (!frame_satisfies(frame, cls))
    throw FrameClassViolation(std::string("frame violates class ") + frame_class_name(cls));
  if (!value_well_formed(exists_at, Type::gamma(), entity_count, frame.world_count))
    throw TypeMismatch("existsAt must be a total table of type g");
  for (const auto& [name, ty] : signature) {
    auto it = interp.find(name);
    if (it == interp.end()) throw TypeMismatch("missing interpretation for symbol " + name);
    if (!value_well_formed(it->second, ty, entity_count, frame.world_count))
      throw TypeMismatch("interpretation of " + name + " does not match declared type " +
                         ty.str());
  }
  for (const auto& [name, v] : interp)
    if (!signature.count(name))
      throw TypeMismatch("interpretation for undeclared symbol " + name);
  Model m;
  m.frame = std::move(frame);
  m.entity_count = entity_count;
  m.exists_at = std::move(exists_at);
  m.interp = std::move(interp);
  return m;
}

}  // namespace ihoml
