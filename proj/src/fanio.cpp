#include "modcomp/fanio.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace modcomp {

FanFile parse_fan_json(const std::string& text) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
  FanFile f;
  if (!j.contains("rays") || !j.contains("max_cones"))
    throw std::invalid_argument("fan file must contain \"rays\" and \"max_cones\"");
  for (const auto& ray : j["rays"]) f.fan.rays.push_back(ray.get<std::vector<i64>>());
  if (f.fan.rays.empty()) throw std::invalid_argument("fan file has no rays");
  f.fan.dim = static_cast<int>(f.fan.rays[0].size());
  for (const auto& cone : j["max_cones"]) f.fan.max_cones.push_back(cone.get<std::vector<int>>());
  f.sigma = j.value("sigma", 0);
  if (j.contains("irreducible_classes")) {
    std::vector<CurveClass> list;
    for (const auto& c : j["irreducible_classes"]) list.push_back(c.get<CurveClass>());
    f.irreducible_classes = std::move(list);
  }
  if (j.contains("class_names")) {
    for (auto it = j["class_names"].begin(); it != j["class_names"].end(); ++it)
      f.class_names.emplace_back(it.key(), it.value().get<CurveClass>());
  }
  return f;
}

FanFile load_fan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fan file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_fan_json(ss.str());
}

std::string class_name(const CurveClass& c,
                       const std::vector<std::pair<std::string, CurveClass>>& names) {
  auto is_zero = [](const CurveClass& v) {
    for (i64 x : v)
      if (x != 0) return false;
    return true;
  };
  if (is_zero(c)) return "0";

  auto term = [](i64 k, const std::string& name) {
    return k == 1 ? name : std::to_string(k) + name;
  };

  // exact positive multiple of a named class
  for (const auto& [name, g] : names) {
    if (is_zero(g)) continue;
    i64 k = 0;
    bool ok = true;
    for (size_t i = 0; i < c.size() && ok; ++i) {
      if (g[i] == 0) {
        if (c[i] != 0) ok = false;
      } else if (c[i] % g[i]) {
        ok = false;
      } else {
        i64 t = c[i] / g[i];
        if (k == 0) k = t;
        else if (k != t) ok = false;
      }
    }
    if (ok && k > 0) {
      for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != k * g[i]) ok = false;
      if (ok) return term(k, name);
    }
  }

  // expansion in the first two independent named classes (rank-2 case)
  if (c.size() == 2 && names.size() >= 2) {
    for (size_t a = 0; a < names.size(); ++a) {
      for (size_t b = a + 1; b < names.size(); ++b) {
        const auto& ga = names[a].second;
        const auto& gb = names[b].second;
        i64 det = ga[0] * gb[1] - ga[1] * gb[0];
        if (det == 0) continue;
        i64 xn = c[0] * gb[1] - c[1] * gb[0];
        i64 yn = ga[0] * c[1] - ga[1] * c[0];
        if (xn % det || yn % det) continue;
        i64 x = xn / det, y = yn / det;
        if (x > 0 && y > 0)
          return term(x, names[a].first) + "+" + term(y, names[b].first);
      }
    }
  }

  std::string s = "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

}  // namespace modcomp
