#include "modcomp/intlin.hpp"

#include <algorithm>
#include <cassert>

namespace modcomp {

std::string i128_to_string(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  i128 x = neg ? -v : v;
  std::string s;
  while (x > 0) {
    s.push_back(char('0' + int(x % 10)));
    x /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

int rank_bareiss(IMat m) {
  int r = 0;
  i128 prev = 1;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i) {
      if (m.at(i, c) != 0) { piv = i; break; }
    }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    }
    i128 p = m.at(r, c);
    for (int i = r + 1; i < m.rows; ++i) {
      i128 f = m.at(i, c);
      for (int j = c; j < m.cols; ++j) {
        i128 t = m.at(i, j) * p - f * m.at(r, j);
        check_range(t);
        m.at(i, j) = t / prev;  // exact by Bareiss
      }
    }
    prev = p;
    ++r;
  }
  return r;
}

i128 det_bareiss(IMat m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  i128 prev = 1;
  int sign = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i) {
      if (m.at(i, c) != 0) { piv = i; break; }
    }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
      sign = -sign;
    }
    i128 p = m.at(c, c);
    for (int i = c + 1; i < n; ++i) {
      i128 f = m.at(i, c);
      for (int j = c; j < n; ++j) {
        i128 t = m.at(i, j) * p - f * m.at(c, j);
        check_range(t);
        m.at(i, j) = t / prev;
      }
    }
    prev = p;
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

std::optional<std::vector<i64>> solve_unimodular(const IMat& A, const std::vector<i64>& b) {
  assert(A.rows == A.cols && static_cast<int>(b.size()) == A.rows);
  int n = A.rows;
  i128 d = det_bareiss(A);
  if (d == 0) return std::nullopt;
  // Cramer: x_i = det(A with column i replaced by b) / det(A).
  std::vector<i64> x(n);
  for (int i = 0; i < n; ++i) {
    IMat Ai = A;
    for (int r = 0; r < n; ++r) Ai.at(r, i) = b[r];
    i128 di = det_bareiss(Ai);
    if (di % d != 0) throw std::runtime_error("solve_unimodular: fractional solution");
    i128 xi = di / d;
    x[i] = static_cast<i64>(xi);
  }
  return x;
}

namespace {

// v in cone spanned by the chosen column subset? Uses a row subset with
// nonzero determinant, Cramer, then verifies against every row.
bool subset_covers(const std::vector<std::vector<i64>>& gens, const std::vector<int>& idx,
                   const std::vector<i64>& v) {
  int dim = static_cast<int>(v.size());
  int k = static_cast<int>(idx.size());
  // find k rows with nonzero det of the k x k submatrix
  std::vector<int> rows;
  {
    // greedy row selection by elimination
    IMat m(dim, k);
    for (int r = 0; r < dim; ++r)
      for (int j = 0; j < k; ++j) m.at(r, j) = gens[idx[j]][r];
    // gaussian row-pick over rationals is fine via bareiss on copies; pick
    // rows incrementally so the leading minor is nonsingular
    std::vector<int> chosen;
    IMat acc(0, k);
    for (int r = 0; r < dim && static_cast<int>(chosen.size()) < k; ++r) {
      IMat trial(static_cast<int>(chosen.size()) + 1, k);
      for (size_t i = 0; i < chosen.size(); ++i)
        for (int j = 0; j < k; ++j) trial.at(static_cast<int>(i), j) = gens[idx[j]][chosen[i]];
      for (int j = 0; j < k; ++j) trial.at(static_cast<int>(chosen.size()), j) = gens[idx[j]][r];
      if (rank_bareiss(trial) == static_cast<int>(chosen.size()) + 1) chosen.push_back(r);
    }
    if (static_cast<int>(chosen.size()) < k) return false;  // dependent columns
    rows = chosen;
  }
  IMat M(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) M.at(i, j) = gens[idx[j]][rows[i]];
  i128 D = det_bareiss(M);
  if (D == 0) return false;
  // N_j = det(M with column j -> v[rows])
  std::vector<i128> N(k);
  for (int j = 0; j < k; ++j) {
    IMat Mj = M;
    for (int i = 0; i < k; ++i) Mj.at(i, j) = v[rows[i]];
    N[j] = det_bareiss(Mj);
  }
  // nonnegativity: x_j = N_j / D >= 0
  for (int j = 0; j < k; ++j) {
    if ((D > 0 && N[j] < 0) || (D < 0 && N[j] > 0)) return false;
  }
  // consistency on all coordinates: sum_j N_j * g_j == D * v
  for (int r = 0; r < dim; ++r) {
    i128 lhs = 0;
    for (int j = 0; j < k; ++j) lhs += N[j] * i128(gens[idx[j]][r]);
    if (lhs != D * i128(v[r])) return false;
  }
  return true;
}

}  // namespace

bool in_nonneg_span(const std::vector<std::vector<i64>>& gens, const std::vector<i64>& v) {
  bool zero = true;
  for (i64 c : v)
    if (c != 0) zero = false;
  if (zero) return true;
  if (gens.empty()) return false;
  int dim = static_cast<int>(v.size());
  int m = static_cast<int>(gens.size());
  int kmax = std::min(dim, m);
  std::vector<int> idx;
  // enumerate subsets of size 1..kmax
  for (int k = 1; k <= kmax; ++k) {
    idx.assign(k, 0);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      if (subset_covers(gens, idx, v)) return true;
      int i = k - 1;
      while (i >= 0 && idx[i] == m - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

std::optional<std::vector<i64>> positive_functional(const std::vector<std::vector<i64>>& gens) {
  if (gens.empty()) return std::vector<i64>();
  int dim = static_cast<int>(gens[0].size());
  for (i64 L = 1; L <= 16; L *= 2) {
    std::vector<i64> lam(dim, -L);
    while (true) {
      bool ok = true;
      for (const auto& g : gens) {
        if (dot(lam, g) < 1) { ok = false; break; }
      }
      if (ok) return lam;
      int i = 0;
      while (i < dim && lam[i] == L) lam[i++] = -L;
      if (i == dim) break;
      ++lam[i];
    }
  }
  return std::nullopt;
}

}  // namespace modcomp
