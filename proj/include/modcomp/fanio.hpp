#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modcomp/fan.hpp"

namespace modcomp {

// Parsed fan input file:
// {
//   "rays": [[int,...],...],
//   "max_cones": [[int,...],...],
//   "sigma": int,
//   "irreducible_classes": [[int,...],...],   // optional
//   "class_names": {"s": [int,...], ...}      // optional, file order kept
// }
struct FanFile {
  Fan fan;
  int sigma = 0;
  std::optional<std::vector<CurveClass>> irreducible_classes;
  std::vector<std::pair<std::string, CurveClass>> class_names;
};

FanFile load_fan_file(const std::string& path);
FanFile parse_fan_json(const std::string& text);

// Print a class through the name map: an exact nonnegative multiple of a
// named class when possible ("2e", "l"), else an integer expansion in the
// first linearly independent named classes ("3s+2e"), else raw coords.
std::string class_name(const CurveClass& c,
                       const std::vector<std::pair<std::string, CurveClass>>& names);

}  // namespace modcomp
