#include "ihoml/model_io.hpp"

#include <fstream>

#include "json.hpp"

#include "ihoml/errors.hpp"
#include "ihoml/parser.hpp"

namespace ihoml {

using json = nlohmann::ordered_json;

namespace {

json value_to_json(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Truth: return v.as_truth();
    case Value::Kind::Entity:
    case Value::Kind::World: return v.index();
    case Value::Kind::Table: {
      json arr = json::array();
      for (const Value& e : v.entries()) arr.push_back(value_to_json(e));
      return arr;
    }
  }
  return nullptr;
}

Value value_from_json(const Type& ty, const json& j, int entities, int worlds) {
  switch (ty.tag()) {
    case Type::Tag::Tru:
      if (!j.is_boolean()) throw TypeMismatch("expected boolean in table for type t");
      return Value::truth(j.get<bool>());
    case Type::Tag::Ent:
      if (!j.is_number_integer()) throw TypeMismatch("expected entity index");
      return Value::entity(j.get<int32_t>());
    case Type::Tag::Wld:
      if (!j.is_number_integer()) throw TypeMismatch("expected world index");
      return Value::world(j.get<int32_t>());
    case Type::Tag::Fun: break;
  }
  if (!j.is_array()) throw TypeMismatch("expected table array for type " + ty.str());
  Universe u(entities, worlds);
  const uint64_t n = u.carrier_size(ty.dom());
  if (j.size() != n)
    throw TypeMismatch("table for " + ty.str() + " must have " + std::to_string(n) +
                       " entries in canonical order, got " + std::to_string(j.size()));
  std::vector<Value> entries;
  entries.reserve(j.size());
  for (const auto& e : j) entries.push_back(value_from_json(ty.cod(), e, entities, worlds));
  return Value::table(ty, std::move(entries));
}

}  // namespace

std::string model_to_json(const Model& m) {
  json j;
  j["worlds"] = m.frame.world_count;
  j["entities"] = m.entity_count;
  json acc = json::array();
  for (auto [i, k] : m.frame.accessibility) acc.push_back(json::array({i, k}));
  j["accessibility"] = std::move(acc);
  json ex = json::array();
  for (int e = 0; e < m.entity_count; ++e)
    for (int w = 0; w < m.frame.world_count; ++w)
      if (m.exists(e, w)) ex.push_back(json::array({e, w}));
  j["existsAt"] = std::move(ex);
  json interp = json::object();
  for (const auto& [name, v] : m.interp) {
    json entry;
    entry["type"] = v.type().str();
    entry["table"] = value_to_json(v);
    interp[name] = std::move(entry);
  }
  j["interp"] = std::move(interp);
  return j.dump(2) + "\n";
}

Model model_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("model file is not valid JSON: ") + e.what());
  }
  const int worlds = j.at("worlds").get<int>();
  const int entities = j.at("entities").get<int>();
  std::vector<std::pair<int, int>> acc;
  for (const auto& p : j.at("accessibility"))
    acc.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  Frame frame(worlds, std::move(acc));

  Universe u(entities, worlds);
  // existsAt arrives as a list of true (entity, world) pairs
  std::vector<std::vector<bool>> bits(size_t(entities),
                                      std::vector<bool>(size_t(worlds), false));
  for (const auto& p : j.at("existsAt")) {
    int e = p.at(0).get<int>(), w = p.at(1).get<int>();
    if (e < 0 || e >= entities || w < 0 || w >= worlds)
      throw TypeMismatch("existsAt entry out of range");
    bits[size_t(e)][size_t(w)] = true;
  }
  std::vector<Value> rows;
  for (int e = 0; e < entities; ++e) {
    std::vector<Value> row;
    for (int w = 0; w < worlds; ++w) row.push_back(Value::truth(bits[size_t(e)][size_t(w)]));
    rows.push_back(Value::table(Type::sigma(), std::move(row)));
  }
  Value exists_at = Value::table(Type::gamma(), std::move(rows));

  std::map<std::string, Value> interp;
  std::map<std::string, Type> sig;
  if (j.contains("interp")) {
    for (const auto& [name, entry] : j.at("interp").items()) {
      Type ty = parse_type(entry.at("type").get<std::string>());
      interp.emplace(name, value_from_json(ty, entry.at("table"), entities, worlds));
      sig.emplace(name, ty);
    }
  }
  return make_model(std::move(frame), entities, std::move(exists_at), std::move(interp),
                    sig, FrameClass::K);
}

void save_model(const Model& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << model_to_json(m);
}

Model load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return model_from_json(text);
}

}  // namespace ihoml
