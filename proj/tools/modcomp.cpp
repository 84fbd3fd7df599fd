#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "modcomp/render.hpp"

using namespace modcomp;

namespace {

int fail(int code, const std::string& msg) {
  std::cerr << "modcomp: " << msg << "\n";
  return code;
}

bool parse_beta(const std::string& csv, CurveClass& out) {
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stoll(tok, &pos));
      if (pos != tok.size()) return false;
    } catch (...) {
      return false;
    }
  }
  return !out.empty();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modcomp: irreducible components of genus-0 stable map / quasimap moduli"};
  std::string fan_path, beta_csv, mode_str = "maps", json_path, dot_dir, classes_path;
  int marks = 0, max_parts = -1;
  bool table = true;
  app.add_option("--fan", fan_path, "fan file (JSON)")->required();
  app.add_option("--beta", beta_csv, "curve class, comma-separated integers in the A1 basis")
      ->required();
  app.add_option("--marks", marks, "number of marked points")->check(CLI::NonNegativeNumber);
  app.add_option("--mode", mode_str, "maps | quasimaps")
      ->check(CLI::IsMember({"maps", "quasimaps"}));
  app.add_option("--json", json_path, "write JSON report here");
  app.add_option("--dot", dot_dir, "write per-tree DOT files and the contraction poset here");
  app.add_flag("--table,!--no-table", table, "print the per-tree table (default on)");
  app.add_option("--max-parts", max_parts, "cap on decomposition parts");
  app.add_option("--classes", classes_path,
                 "file with one irreducible class per line (overrides the built-in table)");
  CLI11_PARSE(app, argc, argv);

  FanFile ff;
  try {
    ff = load_fan_file(fan_path);
  } catch (const std::exception& ex) {
    return fail(2, ex.what());
  }
  auto rep = validate_fan(ff.fan);
  if (!rep.ok) {
    std::cerr << "modcomp: fan validation failed:\n";
    for (const auto& v : rep.violations) std::cerr << "  - " << v << "\n";
    return 2;
  }
  ToricBasis basis = build_basis(ff.fan, ff.sigma);

  CurveClass beta;
  if (!parse_beta(beta_csv, beta)) return fail(3, "malformed --beta: " + beta_csv);
  if (beta.size() != basis.pic_rays.size())
    return fail(3, "beta has " + std::to_string(beta.size()) + " coordinates, fan needs " +
                       std::to_string(basis.pic_rays.size()));

  Mode mode = mode_str == "maps" ? Mode::maps : Mode::quasimaps;
  if (mode == Mode::quasimaps && marks < 2) return fail(4, "moduli space empty for n < 2");

  PipelineOptions opt;
  opt.max_parts = max_parts;
  opt.irreducible_classes = ff.irreducible_classes;
  if (!classes_path.empty()) {
    std::ifstream in(classes_path);
    if (!in) return fail(2, "cannot open class list: " + classes_path);
    std::vector<CurveClass> list;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      CurveClass c;
      if (!parse_beta(line, c) || c.size() != basis.pic_rays.size())
        return fail(3, "malformed class in " + classes_path + ": " + line);
      list.push_back(std::move(c));
    }
    opt.irreducible_classes = std::move(list);
  }

  ComponentReport report;
  try {
    report = irreducible_components(basis, beta, marks, mode, opt);
  } catch (const std::invalid_argument& ex) {
    std::string what = ex.what();
    if (what.find("n < 2") != std::string::npos) return fail(4, what);
    return fail(3, what);
  }

  if (table) std::cout << render_table(report, ff.class_names);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) return fail(2, "cannot write " + json_path);
    out << render_json(report, ff.class_names);
  }
  if (!dot_dir.empty()) {
    std::filesystem::create_directories(dot_dir);
    for (const auto& e : report.trees) {
      std::ofstream out(std::filesystem::path(dot_dir) / ("tree_" + short_id(e.key) + ".dot"));
      out << tree_dot(e.tree, ff.class_names);
    }
    std::ofstream out(std::filesystem::path(dot_dir) / "poset.dot");
    out << poset_dot(report, ff.class_names);
  }
  return 0;
}
