#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modcomp/intlin.hpp"

namespace modcomp {

// Curve and divisor classes are integer coordinate vectors in the bases
// adapted to a chosen maximal cone sigma: divisors in {[D_rho] : rho not in
// sigma(1)}, curves in the dual basis of A_1(X). Both have length #pic_rays.
using CurveClass = std::vector<i64>;
using DivisorClass = std::vector<i64>;

struct Fan {
  int dim = 0;                              // rank of the lattice N
  std::vector<std::vector<i64>> rays;       // primitive generators u_rho
  std::vector<std::vector<int>> max_cones;  // ray index sets, each of size dim
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Checks: primitive rays, unimodular maximal cones (smoothness), facet
// pairing plus wall-graph connectivity (completeness), well-formed indices.
ValidationReport validate_fan(const Fan& fan);

struct Wall {
  std::vector<int> rays;        // the dim-1 rays spanning the wall
  int cone_a = -1, cone_b = -1; // the two maximal cones sharing it
  std::vector<i64> ray_degrees; // [C_w] . D_rho for every ray rho of the fan
};

struct ToricBasis {
  Fan fan;
  int sigma = 0;
  std::vector<int> pic_rays;                // rays not in sigma(1), ascending
  std::vector<std::vector<i64>> pairing;    // pairing[i][k] = <m_i, u_{pic_rays[k]}>
  std::vector<Wall> walls;
  std::vector<CurveClass> wall_classes;     // coords of [C_w] over pic_rays, per wall
};

// Requires a valid fan. The dual basis m_i of sigma's rays is found by exact
// integer solves (the cone is unimodular, so solutions are integral).
ToricBasis build_basis(const Fan& fan, int sigma);

// [D_rho] in the pic basis: a unit vector for rho not in sigma(1), else the
// linear-equivalence expansion coords(rho') = -<m_i, u_rho'>.
DivisorClass divisor_class_of_ray(const ToricBasis& basis, int rho);

// beta . D_rho
i64 curve_degree(const ToricBasis& basis, const CurveClass& beta, int rho);

// Wall classes of all walls whose ray set contains rho; these generate the
// cone of invariant curves inside D_rho.
std::vector<CurveClass> divisor_curve_cone(const ToricBasis& basis, int rho);

// Membership in the Mori cone (nonnegative span of wall classes).
bool is_effective(const ToricBasis& basis, const CurveClass& beta);

// All lattice points gamma with gamma and beta - gamma both effective,
// excluding 0 and beta unless include_ends. Finite because the cone is
// pointed; enumerated over an exact integer box.
std::vector<CurveClass> effective_points_between(const ToricBasis& basis, const CurveClass& beta,
                                                 bool include_ends);

// All multisets {g_1,...,g_k}, k <= max_parts, of elements of `allowed`
// with sum beta; each emitted once, parts sorted. max_parts < 0 means
// unbounded (the pointed cone bounds it anyway).
std::vector<std::vector<CurveClass>> effective_decompositions(const ToricBasis& basis,
                                                              const CurveClass& beta,
                                                              const std::vector<CurveClass>& allowed,
                                                              int max_parts);

}  // namespace modcomp
