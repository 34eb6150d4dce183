#pragma once

#include <map>
#include <string>
#include <vector>

#include "ihoml/universe.hpp"
#include "ihoml/value.hpp"

namespace ihoml {

// Kripke frame: worlds 0..worldCount-1 plus an accessibility relation,
// kept as a sorted pair list and as per-world successor lists.
struct Frame {
  int world_count = 1;
  std::vector<std::pair<int, int>> accessibility;  // sorted, deduplicated

  Frame() = default;
  Frame(int worlds, std::vector<std::pair<int, int>> pairs);

  const std::vector<int>& successors(int w) const { return succ_[w]; }
  bool related(int i, int j) const;

  // Accessibility as a canonical value of type tau = w>s.
  Value as_value() const;

  uint64_t relation_mask() const;  // bit i*W+j set iff (i,j) in r
  static Frame from_mask(int worlds, uint64_t mask);

 private:
  std::vector<std::vector<int>> succ_;
};

enum class FrameClass { K, KB, S5 };

const char* frame_class_name(FrameClass c);
FrameClass frame_class_from_name(const std::string& name);

// K: no condition; KB: symmetric; S5: symmetric, reflexive, transitive.
bool frame_satisfies(const Frame& f, FrameClass c);

// All frames on `worlds` worlds that satisfy `c`, ascending by relation mask.
std::vector<Frame> frames_in_class(int worlds, FrameClass c);

// A finite model: frame, entity domain, existsAt table (type g) and
// interpretations of the variant's free symbols. Immutable after
// construction; safe to share read-only.
struct Model {
  Frame frame;
  int entity_count = 1;
  Value exists_at;                      // type g, validated
  std::map<std::string, Value> interp;  // symbol -> value

  bool exists(int entity, int world) const {
    return exists_at.at(size_t(entity)).at(size_t(world)).as_truth();
  }
  const Value& lookup(const std::string& sym) const;  // throws UnboundSymbol

  // Declared types of all interpreted symbols plus r and existsAt.
  std::map<std::string, Type> symbol_types() const;
};

// Validates frame/class membership, domain nonemptiness and interpretation
// types against the declared signature. Throws FrameClassViolation,
// EmptyDomain or TypeMismatch.
Model make_model(Frame frame, int entity_count, Value exists_at,
                 std::map<std::string, Value> interp,
                 const std::map<std::string, Type>& signature, FrameClass cls);

}  // namespace ihoml
