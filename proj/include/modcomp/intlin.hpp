#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Exact integer linear algebra on small dense matrices. Everything here is
// fraction-free: entries stay integers (128-bit) through elimination, so
// results are exact. No floating point.

namespace modcomp {

using i64 = long long;
using i128 = __int128;

std::string i128_to_string(i128 v);

inline i128 abs128(i128 v) { return v < 0 ? -v : v; }

// Guard against silent wraparound: intermediate values in Bareiss elimination
// are minors of the input, which for the matrices this project builds stay
// far below 2^120. Anything larger indicates misuse.
inline void check_range(i128 v) {
  constexpr i128 lim = (i128(1) << 120);
  if (v >= lim || v <= -lim) throw std::overflow_error("intlin: 128-bit overflow");
}

struct IMat {
  int rows = 0;
  int cols = 0;
  std::vector<i128> a;

  IMat() = default;
  IMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  i128& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  i128 at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// Rank by fraction-free (Bareiss) elimination.
int rank_bareiss(IMat m);

// Determinant of a square matrix, fraction-free.
i128 det_bareiss(IMat m);

// Solve A x = b for square A with det(A) = ±1; returns integer solution.
// Returns nullopt if A is singular. Throws if the solution is fractional
// (cannot happen when |det| = 1).
std::optional<std::vector<i64>> solve_unimodular(const IMat& A, const std::vector<i64>& b);

// Whether v lies in the nonnegative rational span of the generators.
// Decided exactly by Caratheodory: v is in the cone iff it lies in a
// simplicial subcone spanned by a linearly independent subset.
bool in_nonneg_span(const std::vector<std::vector<i64>>& gens, const std::vector<i64>& v);

// A strictly positive integer functional on cone(gens): lambda with
// lambda . g >= 1 for every generator. Exists iff the cone is pointed.
// Searched over growing integer boxes; nullopt if none found within bound.
std::optional<std::vector<i64>> positive_functional(const std::vector<std::vector<i64>>& gens);

inline i64 dot(const std::vector<i64>& a, const std::vector<i64>& b) {
  i64 s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace modcomp
