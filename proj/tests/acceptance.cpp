// Acceptance suite: one pass/fail line per criterion, evaluated in full.
//
// Three sub-assertions reproduce values from the published tables that the
// computation provably contradicts (the tables omit four stable trees, list
// one stratum with a non-irreducible decoration as nonempty, and list one
// tree at the wrong score). Those assertions are kept as stated and fail
// honestly; each failure message points at the regression test that pins
// the computed value. Everything else passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "coh_oracle.hpp"
#include "fixtures.hpp"
#include "modcomp/pipeline.hpp"

using namespace modcomp;
using fx::se;

namespace {

int failures = 0;

struct Criterion {
  std::string label;
  std::vector<std::string> problems;
  void check(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  void finish() {
    if (problems.empty()) {
      std::printf("criterion %s: PASS\n", label.c_str());
    } else {
      ++failures;
      std::printf("criterion %s: FAIL\n", label.c_str());
      for (const auto& p : problems) std::printf("  - %s\n", p.c_str());
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::map<CanonicalKey, const TreeEntry*> by_key(const ComponentReport& rep) {
  std::map<CanonicalKey, const TreeEntry*> m;
  for (const auto& e : rep.trees) m[e.key] = &e;
  return m;
}

}  // namespace

int main() {
  ToricBasis blp2 = fx::blp2_basis_13();
  ToricBasis p2 = fx::p2_basis();
  auto table = fx::table_2l();
  auto key_of = [](const fx::NamedTree& nt) { return canonical_form(nt.tree); };

  auto t2l0 = std::chrono::steady_clock::now();
  ComponentReport rep2l = irreducible_components(blp2, se(2, 2), 0, Mode::maps);
  double time2l = seconds_since(t2l0);
  auto keys2l = by_key(rep2l);

  // 1. 2l component list
  {
    Criterion c{"1 (2l components)"};
    c.check(rep2l.trees.size() == 24,
            "enumeration has " + std::to_string(rep2l.trees.size()) +
                " isomorphism classes, the published table says 24; the table omits four "
                "stable trees over the partition (s,s,e,e) [pinned in test_trees.cpp]");
    for (const auto& nt : table)
      c.check(keys2l.count(key_of(nt)) == 1, std::string("table row ") + nt.name + " missing");
    std::set<CanonicalKey> comp(rep2l.component_keys.begin(), rep2l.component_keys.end());
    std::set<CanonicalKey> want{key_of(table[0]), key_of(table[1])};
    c.check(comp == want, "components differ from {G0, G1}");
    for (const auto& k : rep2l.component_keys)
      c.check(keys2l.at(k)->offset == 0, "component offset is not 0");
    c.check(time2l < 1.0, "runtime " + std::to_string(time2l) + "s >= 1s");
    c.finish();
  }

  // 2. Table score column
  {
    Criterion c{"2 (2l score column)"};
    std::vector<i64> head{0, 0, -1, -1, -2};
    for (size_t i = 0; i < table.size(); ++i) {
      i64 off = keys2l.at(key_of(table[i]))->offset;
      if (i < head.size())
        c.check(off == head[i], std::string(table[i].name) + " offset " + std::to_string(off) +
                                    " != " + std::to_string(head[i]));
      else
        c.check(off < 0, std::string(table[i].name) + " offset not negative");
    }
    c.finish();
  }

  // 3. Table emptiness column
  {
    Criterion c{"3 (2l emptiness column)"};
    std::set<std::string> want_empty{"G11", "G12", "G14", "G16", "G20"};
    for (const auto& nt : table) {
      bool is_empty = keys2l.at(key_of(nt))->verdict.is_empty();
      bool should = want_empty.count(nt.name) > 0;
      std::string extra;
      if (std::string(nt.name) == "G5")
        extra =
            " (G5 = (s | s+2e): s+2e has no irreducible representative, so R1 soundly "
            "empties it; the published row contradicts the published A_1^irred description "
            "[pinned in test_pipeline.cpp])";
      c.check(is_empty == should,
              std::string(nt.name) + (is_empty ? " Empty" : " Passed") + " but table says " +
                  (should ? "Empty" : "Passed") + extra);
    }
    c.finish();
  }

  // 4. 3l component list
  {
    Criterion c{"4 (3l components)"};
    auto t0 = std::chrono::steady_clock::now();
    ComponentReport rep = irreducible_components(blp2, se(3, 3), 0, Mode::maps);
    double dt = seconds_since(t0);
    auto keys = by_key(rep);
    auto fig = fx::fig_3l();
    std::set<CanonicalKey> comp(rep.component_keys.begin(), rep.component_keys.end());
    std::set<CanonicalKey> want{key_of(fig[0]), key_of(fig[1]), key_of(fig[2]), key_of(fig[3]),
                                key_of(fig[4])};
    c.check(comp == want,
            "components differ from the published five: (3s+2e | e) has e-degrees (1,-1), "
            "h1 = 0 and d - d0 = -1, so it is dominated by the main component; computed "
            "components are the other four [pinned in test_pipeline.cpp]");
    std::vector<std::pair<int, i64>> offsets{{0, 0}, {1, 0}, {2, 1}, {3, 0}, {4, 0}};
    for (auto [i, off] : offsets) {
      i64 got = keys.at(key_of(fig[i]))->offset;
      c.check(got == off, std::string(fig[i].name) + " offset " + std::to_string(got) +
                              " != " + std::to_string(off));
    }
    c.check(default_dim_main(blp2, se(3, 3), 0) == 8, "dim_main != 8");
    auto dims = dimension_report(rep, 8);
    std::multiset<i64> dim_set(dims.begin(), dims.end());
    c.check(dim_set.count(9) == 1 && dim_set.count(8) + dim_set.count(9) == dim_set.size(),
            "component dimensions are not {8,...,9}");
    auto g5 = keys.at(key_of(fig[5]));
    c.check(g5->verdict.is_empty() && g5->verdict.rule == "R2c",
            "(2s, 2e, s+e) not rejected as Empty");
    i64 d_g2 = keys.at(key_of(fig[2]))->score.d_G;
    for (int i : {6, 7, 8, 9}) {
      const auto* e = keys.at(key_of(fig[i]));
      c.check(!e->component && !e->verdict.is_empty() && e->score.d_G < d_g2,
              std::string(fig[i].name) + " not rejected by the d-condition against (3s | 3e)");
    }
    auto hx = keys.at(key_of(fig[10]));
    c.check(hx->verdict.is_empty() && hx->verdict.rule == "R1",
            "(s+3e | 2s) not rejected by R1");
    c.check(dt < 5.0, "runtime " + std::to_string(dt) + "s >= 5s");
    c.finish();
  }

  // 5. Two-marked maps and quasimaps
  {
    Criterion c{"5 (2l with two marks)"};
    auto fig = fx::fig_2l_n2();
    ComponentReport maps = irreducible_components(blp2, se(2, 2), 2, Mode::maps);
    std::set<CanonicalKey> mcomp(maps.component_keys.begin(), maps.component_keys.end());
    std::set<CanonicalKey> mwant;
    for (const auto& nt : fig) mwant.insert(key_of(nt));
    c.check(mcomp.size() == 5 && mcomp == mwant, "maps components differ from the five");
    ComponentReport q = irreducible_components(blp2, se(2, 2), 2, Mode::quasimaps);
    std::set<CanonicalKey> qcomp(q.component_keys.begin(), q.component_keys.end());
    std::set<CanonicalKey> qwant{key_of(fig[0]), key_of(fig[1]), key_of(fig[2])};
    c.check(qcomp.size() == 3 && qcomp == qwant, "quasimap components differ from the three");
    c.finish();
  }

  // 6. Projective plane sanity
  {
    Criterion c{"6 (P2, d <= 3)"};
    for (i64 d : {1, 2, 3}) {
      ComponentReport rep = irreducible_components(p2, {d}, 0, Mode::maps);
      c.check(rep.component_keys.size() == 1,
              "degree " + std::to_string(d) + ": " + std::to_string(rep.component_keys.size()) +
                  " components");
      for (const auto& e : rep.trees)
        if (e.component) c.check(e.tree.cls.size() == 1, "component is not the one-vertex tree");
    }
    c.finish();
  }

  // 7. Cohomology unit suite
  {
    Criterion c{"7 (cohomology)"};
    for (i64 k = -5; k <= 5; ++k) {
      DegreeTree t;
      t.deg = {k};
      c.check(h0_tree(t) == (k >= 0 ? k + 1 : 0), "h0 on a single vertex");
      c.check(h1_tree(t) == (k <= -2 ? -k - 1 : 0), "h1 on a single vertex");
    }
    std::mt19937_64 rng(2024);
    int mismatches = 0;
    for (int iter = 0; iter < 1000; ++iter) {
      DegreeTree t = coh_oracle::random_tree(rng, 8, -4, 4);
      i64 h0 = h0_tree(t);
      i64 h1 = h1_tree(t);
      i64 sum = std::accumulate(t.deg.begin(), t.deg.end(), i64(0));
      if (h0 - h1 != sum + 1) c.check(false, "Euler identity violated");
      if (h0 != coh_oracle::h0_randomized(t, rng)) ++mismatches;
    }
    c.check(mismatches == 0, std::to_string(mismatches) + " oracle mismatches");
    c.finish();
  }

  // 8. Property suite
  {
    Criterion c{"8 (properties)"};
    std::mt19937_64 rng(99);
    for (const auto& nt : table) {
      CanonicalKey key = key_of(nt);
      int n = static_cast<int>(nt.tree.cls.size());
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      for (int iter = 0; iter < 100; ++iter) {
        std::shuffle(perm.begin(), perm.end(), rng);
        DecoratedTree r;
        r.cls.resize(n);
        for (int v = 0; v < n; ++v) r.cls[perm[v]] = nt.tree.cls[v];
        for (auto [a, b] : nt.tree.edges) r.edges.push_back({perm[a], perm[b]});
        std::shuffle(r.edges.begin(), r.edges.end(), rng);
        if (canonical_form(r) != key) {
          c.check(false, std::string("canonical key changed under relabeling of ") + nt.name);
          break;
        }
      }
    }
    ComponentReport rep3l = irreducible_components(blp2, se(3, 3), 0, Mode::maps);
    for (const ComponentReport* rep : {&rep2l, &rep3l}) {
      for (const auto& e : rep->trees)
        for (const auto& ct : contraction_closure(e.tree))
          if (!is_stable(ct, Mode::maps)) c.check(false, "contraction broke stability");
    }
    PipelineOptions o1, o2, o8;
    o1.threads = 1;
    o2.threads = 2;
    o8.threads = 8;
    auto r1 = irreducible_components(blp2, se(2, 2), 0, Mode::maps, o1);
    auto r2 = irreducible_components(blp2, se(2, 2), 0, Mode::maps, o2);
    auto r8 = irreducible_components(blp2, se(2, 2), 0, Mode::maps, o8);
    c.check(r1.component_keys == r2.component_keys && r1.component_keys == r8.component_keys,
            "component output depends on the thread count");
    c.finish();
  }

  // 9. Known discrepancies pinned, not asserted
  {
    Criterion c{"9 (pinned discrepancies)"};
    // (s+3e | 2s): published offset 1, computed 0 (either way the stratum is
    // an extra component of the ambient cone)
    TreeScore s = score_tree(fx::chain({se(1, 3), se(2, 0)}), blp2);
    c.check(s.d_G == 0, "oracle value for (s+3e | 2s) changed");
    // absolute 2l dimension: offsets are asserted, the published absolute
    // value 7 is recorded but not asserted; the default formula gives 5
    c.check(default_dim_main(blp2, se(2, 2), 0) == 5, "dim_main formula changed");
    for (const auto& k : rep2l.component_keys)
      c.check(keys2l.at(k)->offset == 0, "2l component offsets changed");
    c.finish();
  }

  std::printf("%d/9 criteria pass\n", 9 - failures);
  if (failures) {
    std::printf(
        "failing sub-assertions reproduce published table values that the computation "
        "contradicts; the computed values are pinned in the unit suite\n");
  }
  return failures > 0 ? 1 : 0;
}
