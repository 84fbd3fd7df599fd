#include "modcomp/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "modcomp/cohomology.hpp"

namespace modcomp {

namespace {

bool is_zero(const CurveClass& c) {
  return std::all_of(c.begin(), c.end(), [](i64 x) { return x == 0; });
}

i64 smooth_h0(i64 d) { return d >= 0 ? d + 1 : 0; }
i64 smooth_h1(i64 d) { return d <= -2 ? -d - 1 : 0; }

}  // namespace

TreeScore score_tree(const DecoratedTree& t, const ToricBasis& basis) {
  TreeScore s;
  int nrays = static_cast<int>(basis.fan.rays.size());
  CurveClass beta = class_sum(t);
  i64 i_via_h1 = 0;
  for (int rho = 0; rho < nrays; ++rho) {
    DivisorClass d_rho = divisor_class_of_ray(basis, rho);
    DegreeTree dt;
    dt.edges = t.edges;
    dt.deg.reserve(t.cls.size());
    for (const auto& c : t.cls) dt.deg.push_back(dot(c, d_rho));
    CohomologyResult h = cohomology(dt);
    s.h0_per_ray.push_back(h.h0);
    s.h1_per_ray.push_back(h.h1);
    i64 bd = dot(beta, d_rho);
    s.i_G += h.h0 - smooth_h0(bd);
    i_via_h1 += h.h1 - smooth_h1(bd);
  }
  // chi bookkeeping: the h0 route and the h1 route must agree
  if (i_via_h1 != s.i_G) std::abort();
  s.d_G = s.i_G - static_cast<i64>(t.edges.size());
  return s;
}

IrredOracle make_irred_oracle(const ToricBasis& basis,
                              const std::optional<std::vector<CurveClass>>& user_list) {
  IrredOracle o;
  if (user_list) {
    o.source = IrredOracle::Source::user_list;
    auto list = *user_list;
    std::sort(list.begin(), list.end());
    o.contains = [list](const CurveClass& c) {
      return std::binary_search(list.begin(), list.end(), c);
    };
    return o;
  }

  // Picard rank 1: the fan is a projective space; every nonzero effective
  // class has an irreducible representative.
  if (basis.pic_rays.size() == 1) {
    o.source = IrredOracle::Source::builtin;
    o.contains = [](const CurveClass& c) { return c[0] >= 1; };
    return o;
  }

  // Bl_pt P^2 == F_1, recognized among smooth complete surfaces with 4 rays
  // by wall self-intersections {-1, 0, 0, +1}. Then
  //   A_1^irred = Z>=0 e  u  (Z>=0 s + Z>=0 l),   l = s + e,
  // with e the (-1)-wall class and s a 0-wall class.
  if (basis.fan.dim == 2 && basis.fan.rays.size() == 4) {
    std::vector<i64> self_ints;
    CurveClass e_cls, s_cls;
    for (size_t w = 0; w < basis.walls.size(); ++w) {
      i64 si = basis.walls[w].ray_degrees[basis.walls[w].rays[0]];
      self_ints.push_back(si);
      if (si == -1) e_cls = basis.wall_classes[w];
      if (si == 0) s_cls = basis.wall_classes[w];
    }
    std::sort(self_ints.begin(), self_ints.end());
    if (self_ints == std::vector<i64>{-1, 0, 0, 1}) {
      CurveClass l_cls = {s_cls[0] + e_cls[0], s_cls[1] + e_cls[1]};
      o.source = IrredOracle::Source::builtin;
      o.contains = [e_cls, s_cls, l_cls](const CurveClass& c) {
        // multiple of e?
        if (e_cls[0] * c[1] == e_cls[1] * c[0]) {
          i64 t = e_cls[0] != 0 ? c[0] / e_cls[0] : c[1] / e_cls[1];
          if (t >= 0 && c[0] == t * e_cls[0] && c[1] == t * e_cls[1]) return true;
        }
        // a*s + b*l with a, b >= 0: (s, l) is a lattice basis
        i64 det = s_cls[0] * l_cls[1] - s_cls[1] * l_cls[0];
        i64 a_num = c[0] * l_cls[1] - c[1] * l_cls[0];
        i64 b_num = s_cls[0] * c[1] - s_cls[1] * c[0];
        if (det < 0) { det = -det; a_num = -a_num; b_num = -b_num; }
        if (a_num % det || b_num % det) return false;
        return a_num / det >= 0 && b_num / det >= 0;
      };
      return o;
    }
  }

  o.source = IrredOracle::Source::effective_fallback;
  auto gens = basis.wall_classes;
  o.contains = [gens](const CurveClass& c) { return in_nonneg_span(gens, c); };
  return o;
}

EmptinessVerdict nonempty_status(const DecoratedTree& t, const ToricBasis& basis, Mode mode,
                                 const IrredOracle& irred) {
  int n = static_cast<int>(t.cls.size());
  int nrays = static_cast<int>(basis.fan.rays.size());

  if (mode == Mode::maps) {
    for (int v = 0; v < n; ++v) {
      if (!is_zero(t.cls[v]) && !irred.contains(t.cls[v])) {
        EmptinessVerdict e;
        e.status = EmptinessVerdict::Status::empty;
        e.rule = "R1";
        e.vertex = v;
        return e;
      }
    }
  }

  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : t.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  // forced-into-D_rho fixpoint, one set per ray; the sets only grow, so the
  // result is order-independent
  std::vector<std::vector<char>> forced(nrays, std::vector<char>(n, 0));
  for (int rho = 0; rho < nrays; ++rho) {
    DivisorClass d_rho = divisor_class_of_ray(basis, rho);
    std::vector<i64> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = dot(t.cls[v], d_rho);
    auto& F = forced[rho];
    for (int v = 0; v < n; ++v)
      if (deg[v] < 0) F[v] = 1;  // (a) a nonzero section has nonnegative degree
    auto cone = divisor_curve_cone(basis, rho);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < n; ++v) {
        if (F[v]) continue;
        int nf = 0;
        for (int w : adj[v]) nf += F[w];
        if (is_zero(t.cls[v])) {
          if (nf > 0) { F[v] = 1; changed = true; }  // (b) a point mapping into D_rho
        } else if (nf > deg[v]) {
          // (c) more forced nodes than the degree allows: the section
          // vanishes identically on C_v, so C_v maps into D_rho
          if (in_nonneg_span(cone, t.cls[v])) {
            F[v] = 1;
            changed = true;
          } else {
            EmptinessVerdict e;
            e.status = EmptinessVerdict::Status::empty;
            e.rule = "R2c";
            e.ray = rho;
            e.vertex = v;
            return e;
          }
        }
      }
    }
  }

  // (R3) the rays forcing a vertex must lie in a common maximal cone
  for (int v = 0; v < n; ++v) {
    std::vector<int> rays_v;
    for (int rho = 0; rho < nrays; ++rho)
      if (forced[rho][v]) rays_v.push_back(rho);
    if (rays_v.empty()) continue;
    bool fits = false;
    for (const auto& cone : basis.fan.max_cones) {
      std::set<int> cs(cone.begin(), cone.end());
      if (std::all_of(rays_v.begin(), rays_v.end(), [&](int r) { return cs.count(r) > 0; })) {
        fits = true;
        break;
      }
    }
    if (!fits) {
      EmptinessVerdict e;
      e.status = EmptinessVerdict::Status::empty;
      e.rule = "R3";
      e.vertex = v;
      return e;
    }
  }
  return {};
}

i64 default_dim_main(const ToricBasis& basis, const CurveClass& beta, int n) {
  i64 sum = 0;
  for (int rho = 0; rho < static_cast<int>(basis.fan.rays.size()); ++rho)
    sum += curve_degree(basis, beta, rho);
  return basis.fan.dim + sum + n - 3;
}

std::vector<i64> dimension_report(const ComponentReport& report, i64 dim_main) {
  std::vector<i64> dims;
  for (const auto& e : report.trees)
    if (e.component) dims.push_back(dim_main + e.offset);
  return dims;
}

namespace {

int thread_count(int requested) {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  int n = requested > 0 ? requested : hw;
  if (const char* env = std::getenv("MODCOMP_THREADS")) {
    int cap = std::atoi(env);
    if (cap > 0) n = std::min(n, cap);
  }
  return std::max(1, n);
}

}  // namespace

ComponentReport irreducible_components(const ToricBasis& basis, const CurveClass& beta, int n,
                                       Mode mode, const PipelineOptions& opt) {
  if (mode == Mode::quasimaps && n < 2)
    throw std::invalid_argument("moduli space empty for n < 2");
  if (beta.size() != basis.pic_rays.size())
    throw std::invalid_argument("beta has wrong length for this basis");
  if (is_zero(beta)) throw std::invalid_argument("beta must be nonzero");
  if (!is_effective(basis, beta)) throw std::invalid_argument("beta is not effective");

  ComponentReport rep;
  rep.mode = mode;
  rep.beta = beta;
  rep.n = n;

  IrredOracle irred = make_irred_oracle(basis, opt.irreducible_classes);
  rep.irred_source = irred.source;

  std::vector<CurveClass> class_set =
      opt.class_set ? *opt.class_set : effective_points_between(basis, beta, true);

  auto trees = enumerate_trees(basis, beta, n, class_set, mode, opt.max_parts);
  rep.trees.resize(trees.size());

  // per-tree work is independent; entries are written by index, so the
  // result does not depend on the thread count
  std::unordered_map<CanonicalKey, i64> d_memo;
  std::mutex memo_mu;
  auto closure_score = [&](const DecoratedTree& t, const CanonicalKey& key) {
    {
      std::lock_guard<std::mutex> lk(memo_mu);
      auto it = d_memo.find(key);
      if (it != d_memo.end()) return it->second;
    }
    i64 d = score_tree(t, basis).d_G;
    std::lock_guard<std::mutex> lk(memo_mu);
    d_memo.emplace(key, d);
    return d;
  };

  auto work = [&](size_t i) {
    TreeEntry& e = rep.trees[i];
    e.tree = trees[i];
    e.key = canonical_form(e.tree);
    e.score = score_tree(e.tree, basis);
    e.offset = e.score.d_G;  // the one-vertex tree has i = 0, no edges: d_G0 = 0
    e.verdict = nonempty_status(e.tree, basis, mode, irred);
    for (const auto& c : contraction_closure(e.tree)) {
      CanonicalKey ck = canonical_form(c);
      if (ck == e.key) continue;
      e.closure.push_back({ck, closure_score(c, ck), static_cast<i64>(c.edges.size())});
    }
    bool dominated = false;
    for (const auto& c : e.closure)
      if (c.d_G > e.score.d_G) { dominated = true; break; }
    e.component = !dominated && !e.verdict.is_empty();
  };

  int nthreads = thread_count(opt.threads);
  if (nthreads <= 1 || trees.size() < 2) {
    for (size_t i = 0; i < trees.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < trees.size(); i = next.fetch_add(1)) work(i);
      });
    for (auto& th : pool) th.join();
  }

  std::sort(rep.trees.begin(), rep.trees.end(),
            [](const TreeEntry& a, const TreeEntry& b) { return a.key < b.key; });
  for (const auto& e : rep.trees)
    if (e.component) rep.component_keys.push_back(e.key);

  // cross-check against the generic stratified-cone engine: the d-condition
  // route through component_strata must agree with the direct computation
  if (!rep.trees.empty()) {
    std::vector<Stratum> strata;
    ClosureOrder order;
    std::set<CanonicalKey> have;
    for (const auto& e : rep.trees) {
      strata.push_back({e.key, e.score.i_G, static_cast<i64>(e.tree.edges.size())});
      have.insert(e.key);
    }
    for (const auto& e : rep.trees) {
      for (const auto& c : e.closure) {
        if (!have.count(c.key)) {
          strata.push_back({c.key, c.d_G + c.num_edges, c.num_edges});
          have.insert(c.key);
        }
        order.relation.insert({e.key, c.key});
      }
    }
    for (const auto& s : strata) order.relation.insert({s.id, s.id});
    auto comp = component_strata(strata, order);
    for (const auto& e : rep.trees) {
      bool in = comp.count(e.key) > 0;
      if (e.component != (in && !e.verdict.is_empty())) std::abort();
    }
  }
  return rep;
}

}  // namespace modcomp
