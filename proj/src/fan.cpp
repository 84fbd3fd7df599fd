#include "modcomp/fan.hpp"

#include <functional>
#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace modcomp {

namespace {

i64 gcd64(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) { i64 t = a % b; a = b; b = t; }
  return a;
}

std::string ray_str(const std::vector<i64>& u) {
  std::string s = "(";
  for (size_t i = 0; i < u.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(u[i]);
  }
  return s + ")";
}

}  // namespace

ValidationReport validate_fan(const Fan& fan) {
  ValidationReport rep;
  auto bad = [&rep](std::string msg) {
    rep.ok = false;
    rep.violations.push_back(std::move(msg));
  };

  if (fan.dim <= 0) bad("ambient rank must be positive");
  for (size_t i = 0; i < fan.rays.size(); ++i) {
    const auto& u = fan.rays[i];
    if (static_cast<int>(u.size()) != fan.dim) {
      bad("ray " + std::to_string(i) + " has wrong length");
      continue;
    }
    i64 g = 0;
    for (i64 c : u) g = gcd64(g, c);
    if (g != 1) bad("ray " + std::to_string(i) + " " + ray_str(u) + " is not primitive");
  }
  for (size_t i = 0; i < fan.rays.size(); ++i)
    for (size_t j = i + 1; j < fan.rays.size(); ++j)
      if (fan.rays[i] == fan.rays[j])
        bad("duplicate rays " + std::to_string(i) + " and " + std::to_string(j));
  if (!rep.ok) return rep;

  for (size_t c = 0; c < fan.max_cones.size(); ++c) {
    const auto& cone = fan.max_cones[c];
    std::set<int> uniq(cone.begin(), cone.end());
    if (uniq.size() != cone.size()) bad("cone " + std::to_string(c) + " repeats a ray");
    for (int r : cone)
      if (r < 0 || r >= static_cast<int>(fan.rays.size()))
        bad("cone " + std::to_string(c) + " has out-of-range ray index " + std::to_string(r));
    if (static_cast<int>(cone.size()) != fan.dim)
      bad("cone " + std::to_string(c) + " is not full-dimensional");
  }
  if (!rep.ok) return rep;

  for (size_t c = 0; c < fan.max_cones.size(); ++c) {
    IMat m(fan.dim, fan.dim);
    for (int i = 0; i < fan.dim; ++i)
      for (int j = 0; j < fan.dim; ++j) m.at(i, j) = fan.rays[fan.max_cones[c][i]][j];
    i128 d = det_bareiss(m);
    if (d != 1 && d != -1)
      bad("cone " + std::to_string(c) + " is not unimodular (det " + i128_to_string(d) + ")");
  }

  // completeness: every facet shared by exactly two maximal cones, wall graph connected
  std::map<std::vector<int>, std::vector<int>> facets;
  for (size_t c = 0; c < fan.max_cones.size(); ++c) {
    auto cone = fan.max_cones[c];
    std::sort(cone.begin(), cone.end());
    for (size_t drop = 0; drop < cone.size(); ++drop) {
      std::vector<int> f;
      for (size_t i = 0; i < cone.size(); ++i)
        if (i != drop) f.push_back(cone[i]);
      facets[f].push_back(static_cast<int>(c));
    }
  }
  for (const auto& [f, cones] : facets) {
    if (cones.size() != 2) {
      std::string fs = "{";
      for (size_t i = 0; i < f.size(); ++i) fs += (i ? "," : "") + std::to_string(f[i]);
      fs += "}";
      bad("facet " + fs + " of cone " + std::to_string(cones.front()) + " is shared by " +
          std::to_string(cones.size()) + " maximal cones, expected 2");
    }
  }
  if (rep.ok && !fan.max_cones.empty()) {
    std::vector<std::vector<int>> adj(fan.max_cones.size());
    for (const auto& [f, cones] : facets)
      if (cones.size() == 2) {
        adj[cones[0]].push_back(cones[1]);
        adj[cones[1]].push_back(cones[0]);
      }
    std::vector<char> seen(fan.max_cones.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (int w : adj[c])
        if (!seen[w]) { seen[w] = 1; stack.push_back(w); }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      bad("wall-adjacency graph of maximal cones is not connected");
  }
  return rep;
}

ToricBasis build_basis(const Fan& fan, int sigma) {
  auto rep = validate_fan(fan);
  if (!rep.ok) throw std::invalid_argument("build_basis: invalid fan: " + rep.violations.front());
  if (sigma < 0 || sigma >= static_cast<int>(fan.max_cones.size()))
    throw std::out_of_range("build_basis: sigma out of range");

  ToricBasis b;
  b.fan = fan;
  b.sigma = sigma;
  std::set<int> in_sigma(fan.max_cones[sigma].begin(), fan.max_cones[sigma].end());
  for (int r = 0; r < static_cast<int>(fan.rays.size()); ++r)
    if (!in_sigma.count(r)) b.pic_rays.push_back(r);

  // dual basis of sigma's rays: m_i solves <m_i, u_{tau_j}> = delta_ij
  IMat R(fan.dim, fan.dim);
  for (int j = 0; j < fan.dim; ++j)
    for (int k = 0; k < fan.dim; ++k) R.at(j, k) = fan.rays[fan.max_cones[sigma][j]][k];
  b.pairing.assign(fan.dim, std::vector<i64>(b.pic_rays.size(), 0));
  for (int i = 0; i < fan.dim; ++i) {
    std::vector<i64> e(fan.dim, 0);
    e[i] = 1;
    auto m = solve_unimodular(R, e);
    if (!m) throw std::runtime_error("build_basis: sigma not unimodular");
    for (size_t k = 0; k < b.pic_rays.size(); ++k)
      b.pairing[i][k] = dot(*m, fan.rays[b.pic_rays[k]]);
  }

  // walls: facets shared by two maximal cones, one relation per wall with
  // coefficient 1 on the two off-wall rays
  std::map<std::vector<int>, std::vector<int>> facets;
  for (size_t c = 0; c < fan.max_cones.size(); ++c) {
    auto cone = fan.max_cones[c];
    std::sort(cone.begin(), cone.end());
    for (size_t drop = 0; drop < cone.size(); ++drop) {
      std::vector<int> f;
      for (size_t i = 0; i < cone.size(); ++i)
        if (i != drop) f.push_back(cone[i]);
      facets[f].push_back(static_cast<int>(c));
    }
  }
  for (const auto& [f, cones] : facets) {
    Wall w;
    w.rays = f;
    w.cone_a = cones[0];
    w.cone_b = cones[1];
    std::set<int> fs(f.begin(), f.end());
    int ray_a = -1, ray_b = -1;
    for (int r : fan.max_cones[w.cone_a])
      if (!fs.count(r)) ray_a = r;
    for (int r : fan.max_cones[w.cone_b])
      if (!fs.count(r)) ray_b = r;
    // u_b in the basis (wall rays, u_a) of cone_a; smoothness forces the
    // u_a coefficient to be -1, giving u_a + u_b + sum c_rho u_rho = 0
    IMat A(fan.dim, fan.dim);
    std::vector<int> basis_rays = f;
    basis_rays.push_back(ray_a);
    for (int j = 0; j < fan.dim; ++j)
      for (int k = 0; k < fan.dim; ++k) A.at(k, j) = fan.rays[basis_rays[j]][k];
    auto coeff = solve_unimodular(A, fan.rays[ray_b]);
    if (!coeff) throw std::runtime_error("build_basis: degenerate wall");
    if (coeff->back() != -1) throw std::runtime_error("build_basis: wall relation not unimodular");
    w.ray_degrees.assign(fan.rays.size(), 0);
    w.ray_degrees[ray_a] = 1;
    w.ray_degrees[ray_b] = 1;
    for (int k = 0; k + 1 < fan.dim; ++k) w.ray_degrees[f[k]] = -(*coeff)[k];
    b.walls.push_back(std::move(w));
  }
  for (const auto& w : b.walls) {
    CurveClass c(b.pic_rays.size());
    for (size_t k = 0; k < b.pic_rays.size(); ++k) c[k] = w.ray_degrees[b.pic_rays[k]];
    b.wall_classes.push_back(std::move(c));
  }
  return b;
}

DivisorClass divisor_class_of_ray(const ToricBasis& basis, int rho) {
  if (rho < 0 || rho >= static_cast<int>(basis.fan.rays.size()))
    throw std::out_of_range("divisor_class_of_ray: ray index out of range");
  DivisorClass d(basis.pic_rays.size(), 0);
  auto it = std::find(basis.pic_rays.begin(), basis.pic_rays.end(), rho);
  if (it != basis.pic_rays.end()) {
    d[it - basis.pic_rays.begin()] = 1;
    return d;
  }
  const auto& cone = basis.fan.max_cones[basis.sigma];
  int i = static_cast<int>(std::find(cone.begin(), cone.end(), rho) - cone.begin());
  for (size_t k = 0; k < basis.pic_rays.size(); ++k) d[k] = -basis.pairing[i][k];
  return d;
}

i64 curve_degree(const ToricBasis& basis, const CurveClass& beta, int rho) {
  return dot(beta, divisor_class_of_ray(basis, rho));
}

std::vector<CurveClass> divisor_curve_cone(const ToricBasis& basis, int rho) {
  std::vector<CurveClass> out;
  for (size_t w = 0; w < basis.walls.size(); ++w)
    if (std::find(basis.walls[w].rays.begin(), basis.walls[w].rays.end(), rho) !=
        basis.walls[w].rays.end())
      out.push_back(basis.wall_classes[w]);
  return out;
}

bool is_effective(const ToricBasis& basis, const CurveClass& beta) {
  return in_nonneg_span(basis.wall_classes, beta);
}

std::vector<CurveClass> effective_points_between(const ToricBasis& basis, const CurveClass& beta,
                                                 bool include_ends) {
  auto lam = positive_functional(basis.wall_classes);
  if (!lam) throw std::runtime_error("effective cone is not pointed");
  i64 H = dot(*lam, beta);
  if (H < 0) return {};
  i64 M = 1;
  for (const auto& g : basis.wall_classes)
    for (i64 c : g) M = std::max(M, c < 0 ? -c : c);
  i64 B = H * M;
  int r = static_cast<int>(beta.size());
  std::vector<CurveClass> out;
  CurveClass x(r, -B);
  while (true) {
    i64 h = dot(*lam, x);
    if (h >= 0 && h <= H) {
      CurveClass rem(r);
      for (int i = 0; i < r; ++i) rem[i] = beta[i] - x[i];
      bool zero = std::all_of(x.begin(), x.end(), [](i64 c) { return c == 0; });
      bool full = (rem == CurveClass(r, 0));
      if ((include_ends || (!zero && !full)) && in_nonneg_span(basis.wall_classes, x) &&
          in_nonneg_span(basis.wall_classes, rem))
        out.push_back(x);
    }
    int i = 0;
    while (i < r && x[i] == B) x[i++] = -B;
    if (i == r) break;
    ++x[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<CurveClass>> effective_decompositions(const ToricBasis& basis,
                                                              const CurveClass& beta,
                                                              const std::vector<CurveClass>& allowed,
                                                              int max_parts) {
  std::vector<CurveClass> parts;
  for (const auto& c : allowed)
    if (!std::all_of(c.begin(), c.end(), [](i64 x) { return x == 0; })) parts.push_back(c);
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  std::vector<std::vector<CurveClass>> out;
  std::vector<CurveClass> cur;
  int r = static_cast<int>(beta.size());
  const CurveClass zero(r, 0);

  std::function<void(const CurveClass&, size_t)> rec = [&](const CurveClass& rem, size_t start) {
    if (rem == zero) {
      if (!cur.empty()) out.push_back(cur);
      return;
    }
    if (max_parts >= 0 && static_cast<int>(cur.size()) >= max_parts) return;
    for (size_t i = start; i < parts.size(); ++i) {
      CurveClass next(r);
      for (int k = 0; k < r; ++k) next[k] = rem[k] - parts[i][k];
      if (!in_nonneg_span(basis.wall_classes, next)) continue;
      cur.push_back(parts[i]);
      rec(next, i);
      cur.pop_back();
    }
  };
  rec(beta, 0);
  return out;
}

}  // namespace modcomp
