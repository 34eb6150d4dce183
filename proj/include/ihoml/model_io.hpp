#pragma once

#include <string>

#include "ihoml/model.hpp"

namespace ihoml {

// Text model format (JSON): {worlds, entities, accessibility: [[i,j],...],
// existsAt: [[entity,world],...] listing true entries, interp: {symbol:
// {type, table}}} with every table in canonical carrier order.
std::string model_to_json(const Model& m);
Model model_from_json(const std::string& text);

void save_model(const Model& m, const std::string& path);
Model load_model(const std::string& path);

}  // namespace ihoml
