#include "modcomp/render.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include <json.hpp>

namespace modcomp {

namespace {

bool is_zero(const CurveClass& c) {
  return std::all_of(c.begin(), c.end(), [](i64 x) { return x == 0; });
}

std::string decomposition_str(const DecoratedTree& t, const NameMap& names) {
  std::vector<CurveClass> parts;
  for (const auto& c : t.cls)
    if (!is_zero(c)) parts.push_back(c);
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += class_name(parts[i], names);
  }
  return s + ")";
}

std::string verdict_str(const EmptinessVerdict& v) {
  if (!v.is_empty()) return "Passed";
  std::string s = "Empty[" + v.rule;
  if (v.ray >= 0) s += " ray=" + std::to_string(v.ray);
  if (v.vertex >= 0) s += " v=" + std::to_string(v.vertex);
  return s + "]";
}

}  // namespace

std::string short_id(const CanonicalKey& key) {
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%012llx", h & 0xffffffffffffull);
  return buf;
}

std::string render_table(const ComponentReport& rep, const NameMap& names) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"id", "decomposition", "#E", "d-d0", "status", "component"});
  for (const auto& e : rep.trees) {
    rows.push_back({short_id(e.key), decomposition_str(e.tree, names),
                    std::to_string(e.tree.edges.size()), std::to_string(e.offset),
                    verdict_str(e.verdict), e.component ? "COMPONENT" : ""});
  }
  std::vector<size_t> w(rows[0].size(), 0);
  for (const auto& r : rows)
    for (size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
  std::ostringstream out;
  for (size_t ri = 0; ri < rows.size(); ++ri) {
    for (size_t i = 0; i < rows[ri].size(); ++i) {
      out << rows[ri][i] << std::string(w[i] - rows[ri][i].size(), ' ');
      out << (i + 1 < rows[ri].size() ? "  " : "");
    }
    out << "\n";
    if (ri == 0) {
      size_t total = 0;
      for (size_t i = 0; i < w.size(); ++i) total += w[i] + (i + 1 < w.size() ? 2 : 0);
      out << std::string(total, '-') << "\n";
    }
  }
  size_t ncomp = rep.component_keys.size();
  out << rep.trees.size() << " trees, " << ncomp << (ncomp == 1 ? " component\n" : " components\n");
  return out.str();
}

std::string render_json(const ComponentReport& rep, const NameMap& names) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["mode"] = rep.mode == Mode::maps ? "maps" : "quasimaps";
  j["beta"] = rep.beta;
  j["marks"] = rep.n;
  switch (rep.irred_source) {
    case IrredOracle::Source::builtin: j["irreducible_classes_source"] = "builtin"; break;
    case IrredOracle::Source::user_list: j["irreducible_classes_source"] = "user"; break;
    case IrredOracle::Source::effective_fallback:
      j["irreducible_classes_source"] = "effective-fallback-UNKNOWN";
      break;
  }
  j["trees"] = nlohmann::ordered_json::array();
  for (const auto& e : rep.trees) {
    nlohmann::ordered_json t;
    t["id"] = short_id(e.key);
    t["key"] = e.key;
    t["classes"] = e.tree.cls;
    t["edges"] = e.tree.edges;
    t["marks"] = e.tree.marks;
    t["decomposition"] = decomposition_str(e.tree, names);
    t["num_edges"] = e.tree.edges.size();
    t["i_G"] = e.score.i_G;
    t["d_G"] = e.score.d_G;
    t["offset"] = e.offset;
    t["h0_per_ray"] = e.score.h0_per_ray;
    t["h1_per_ray"] = e.score.h1_per_ray;
    t["status"] = e.verdict.is_empty() ? "Empty" : "Passed";
    if (e.verdict.is_empty()) {
      t["rule"] = e.verdict.rule;
      if (e.verdict.ray >= 0) t["ray"] = e.verdict.ray;
      if (e.verdict.vertex >= 0) t["vertex"] = e.verdict.vertex;
    }
    t["component"] = e.component;
    j["trees"].push_back(std::move(t));
  }
  j["components"] = nlohmann::ordered_json::array();
  for (const auto& k : rep.component_keys) j["components"].push_back(short_id(k));
  return j.dump(2) + "\n";
}

std::string tree_dot(const DecoratedTree& t, const NameMap& names) {
  std::vector<std::vector<int>> vmarks(t.cls.size());
  for (size_t i = 0; i < t.marks.size(); ++i) vmarks[t.marks[i]].push_back(static_cast<int>(i) + 1);
  std::ostringstream out;
  out << "graph tree {\n";
  for (size_t v = 0; v < t.cls.size(); ++v) {
    std::string label = class_name(t.cls[v], names);
    if (!vmarks[v].empty()) {
      label += " | {";
      for (size_t i = 0; i < vmarks[v].size(); ++i)
        label += (i ? "," : "") + std::to_string(vmarks[v][i]);
      label += "}";
    }
    out << "  v" << v << " [label=\"" << label << "\"];\n";
  }
  for (auto [a, b] : t.edges) out << "  v" << a << " -- v" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string poset_dot(const ComponentReport& rep, const NameMap& names) {
  std::ostringstream out;
  out << "digraph contraction_poset {\n";
  std::set<CanonicalKey> have;
  for (const auto& e : rep.trees) have.insert(e.key);
  for (const auto& e : rep.trees) {
    out << "  n" << short_id(e.key) << " [label=\"" << decomposition_str(e.tree, names)
        << " #E=" << e.tree.edges.size() << "\"];\n";
  }
  std::set<std::pair<std::string, std::string>> arrows;
  for (const auto& e : rep.trees) {
    for (int i = 0; i < static_cast<int>(e.tree.edges.size()); ++i) {
      DecoratedTree c = contract_edges(e.tree, {i});
      CanonicalKey ck = canonical_form(c);
      if (have.count(ck)) arrows.insert({short_id(e.key), short_id(ck)});
    }
  }
  for (const auto& [a, b] : arrows) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace modcomp
