#include "modcomp/trees.hpp"

#include <functional>
#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace modcomp {

bool is_tree(const DecoratedTree& t) {
  int n = static_cast<int>(t.cls.size());
  if (n == 0) return false;
  if (static_cast<int>(t.edges.size()) != n - 1) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : t.edges) {
    if (a < 0 || a >= n || b < 0 || b >= n || a == b) return false;
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

CurveClass class_sum(const DecoratedTree& t) {
  if (t.cls.empty()) return {};
  CurveClass s(t.cls[0].size(), 0);
  for (const auto& c : t.cls)
    for (size_t i = 0; i < s.size(); ++i) s[i] += c[i];
  return s;
}

std::vector<int> valences(const DecoratedTree& t) {
  std::vector<int> val(t.cls.size(), 0);
  for (auto [a, b] : t.edges) {
    ++val[a];
    ++val[b];
  }
  return val;
}

namespace {

bool is_zero(const CurveClass& c) {
  return std::all_of(c.begin(), c.end(), [](i64 x) { return x == 0; });
}

std::vector<int> marks_per_vertex(const DecoratedTree& t) {
  std::vector<int> cnt(t.cls.size(), 0);
  for (int v : t.marks) ++cnt[v];
  return cnt;
}

}  // namespace

bool is_stable(const DecoratedTree& t, Mode mode) {
  auto val = valences(t);
  auto cnt = marks_per_vertex(t);
  for (size_t v = 0; v < t.cls.size(); ++v) {
    if (is_zero(t.cls[v]) && cnt[v] + val[v] < 3) return false;
    if (mode == Mode::quasimaps && cnt[v] + val[v] < 2) return false;
  }
  return true;
}

CanonicalKey canonical_form(const DecoratedTree& t) {
  int n = static_cast<int>(t.cls.size());
  assert(n > 0);
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : t.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::vector<int>> vmarks(n);
  for (size_t i = 0; i < t.marks.size(); ++i) vmarks[t.marks[i]].push_back(static_cast<int>(i) + 1);
  for (auto& m : vmarks) std::sort(m.begin(), m.end());

  auto label = [&](int v) {
    std::string s = "c";
    for (i64 c : t.cls[v]) s += "," + std::to_string(c);
    s += ";m";
    for (int m : vmarks[v]) s += "," + std::to_string(m);
    return s;
  };

  // find the center by leaf peeling
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
  std::vector<int> frontier;
  std::vector<char> removed(n, 0);
  for (int v = 0; v < n; ++v)
    if (deg[v] <= 1) frontier.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : frontier) {
      removed[v] = 1;
      --remaining;
      for (int w : adj[v])
        if (!removed[w] && --deg[w] == 1) next.push_back(w);
    }
    frontier = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) centers.push_back(v);

  std::function<std::string(int, int)> enc = [&](int v, int parent) {
    std::vector<std::string> kids;
    for (int w : adj[v])
      if (w != parent) kids.push_back(enc(w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + label(v);
    for (auto& k : kids) s += k;
    s += ")";
    return s;
  };

  std::string best;
  for (int c : centers) {
    std::string s = enc(c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

DecoratedTree contract_edges(const DecoratedTree& t, const std::vector<int>& edge_indices) {
  int n = static_cast<int>(t.cls.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<char> contracted(t.edges.size(), 0);
  for (int e : edge_indices) {
    contracted[e] = 1;
    int ra = find(t.edges[e].first), rb = find(t.edges[e].second);
    if (ra != rb) parent[ra] = rb;
  }
  std::map<int, int> comp;
  for (int v = 0; v < n; ++v) {
    int r = find(v);
    if (!comp.count(r)) comp[r] = static_cast<int>(comp.size());
  }
  DecoratedTree out;
  out.cls.assign(comp.size(), CurveClass(t.cls.empty() ? 0 : t.cls[0].size(), 0));
  for (int v = 0; v < n; ++v) {
    auto& dst = out.cls[comp[find(v)]];
    for (size_t i = 0; i < dst.size(); ++i) dst[i] += t.cls[v][i];
  }
  for (size_t e = 0; e < t.edges.size(); ++e)
    if (!contracted[e])
      out.edges.push_back({comp[find(t.edges[e].first)], comp[find(t.edges[e].second)]});
  for (int v : t.marks) out.marks.push_back(comp[find(v)]);
  return out;
}

std::vector<DecoratedTree> contraction_closure(const DecoratedTree& t) {
  int ne = static_cast<int>(t.edges.size());
  std::unordered_map<CanonicalKey, DecoratedTree> seen;
  for (unsigned mask = 0; mask < (1u << ne); ++mask) {
    std::vector<int> idx;
    for (int e = 0; e < ne; ++e)
      if (mask >> e & 1) idx.push_back(e);
    DecoratedTree c = contract_edges(t, idx);
    seen.emplace(canonical_form(c), std::move(c));
  }
  std::vector<std::pair<CanonicalKey, DecoratedTree>> items(seen.begin(), seen.end());
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<DecoratedTree> out;
  for (auto& [k, tr] : items) out.push_back(std::move(tr));
  return out;
}

namespace {

// Grow vertex-colored trees one leaf at a time, deduplicating canonically at
// every level; any tree is reachable since removing a leaf gives a smaller
// tree on a sub-multiset. Harvests every intermediate tree that already uses
// all nonzero parts (those are the z < zero_budget shapes). A state whose
// class-0 vertices are short of valence 3 by more than the remaining
// attachments plus the mark budget can never become stable and is dropped.
void grow_shapes(const std::vector<CurveClass>& parts, const CurveClass& zero, int zero_budget,
                 int n_marks, const std::function<void(const DecoratedTree&)>& harvest) {
  std::map<CurveClass, int> want;
  for (const auto& c : parts) ++want[c];
  int k = static_cast<int>(parts.size());
  if (zero_budget > 0) want[zero] += zero_budget;
  int total = k + zero_budget;

  auto nonzero_count = [&](const DecoratedTree& t) {
    int c = 0;
    for (const auto& cl : t.cls)
      if (cl != zero) ++c;
    return c;
  };
  auto zero_deficiency = [&](const DecoratedTree& t) {
    std::vector<int> val(t.cls.size(), 0);
    for (auto [a, b] : t.edges) {
      ++val[a];
      ++val[b];
    }
    int d = 0;
    for (size_t v = 0; v < t.cls.size(); ++v)
      if (t.cls[v] == zero && val[v] < 3) d += 3 - val[v];
    return d;
  };

  std::unordered_map<CanonicalKey, DecoratedTree> level;
  for (const auto& [c, cnt] : want) {
    DecoratedTree t;
    t.cls.push_back(c);
    level.emplace(canonical_form(t), std::move(t));
  }
  for (int size = 1; size <= total; ++size) {
    for (const auto& [key, t] : level)
      if (nonzero_count(t) == k) harvest(t);
    if (size == total) break;
    std::unordered_map<CanonicalKey, DecoratedTree> next;
    for (const auto& [key, t] : level) {
      std::map<CurveClass, int> used;
      for (const auto& c : t.cls) ++used[c];
      for (const auto& [c, cnt] : want) {
        if (used[c] >= cnt) continue;
        for (int v = 0; v < static_cast<int>(t.cls.size()); ++v) {
          DecoratedTree t2 = t;
          t2.cls.push_back(c);
          t2.edges.push_back({v, static_cast<int>(t.cls.size())});
          if (zero_deficiency(t2) > (total - size - 1) + n_marks) continue;
          CanonicalKey k2 = canonical_form(t2);
          next.emplace(std::move(k2), std::move(t2));
        }
      }
    }
    level = std::move(next);
  }
}

}  // namespace

std::vector<DecoratedTree> enumerate_trees(const ToricBasis& basis, const CurveClass& beta, int n,
                                           const std::vector<CurveClass>& class_set, Mode mode,
                                           int max_parts) {
  std::vector<CurveClass> parts_set;
  for (const auto& c : class_set)
    if (!std::all_of(c.begin(), c.end(), [](i64 x) { return x == 0; })) parts_set.push_back(c);

  auto decomps = effective_decompositions(basis, beta, parts_set, max_parts);

  std::unordered_map<CanonicalKey, DecoratedTree> out;
  const CurveClass zero(beta.size(), 0);
  for (const auto& parts : decomps) {
    int k = static_cast<int>(parts.size());
    int zero_cap = std::max(0, k + n - 2);
    auto harvest = [&](const DecoratedTree& shape) {
      // mark placements: n small, enumerate all |V|^n assignments
      int m = static_cast<int>(shape.cls.size());
      std::vector<int> assign(n, 0);
      while (true) {
        DecoratedTree t = shape;
        t.marks = assign;
        if (is_stable(t, mode)) {
          // derived zero bound, asserted so a counterexample aborts loudly
          assert(m - k <= std::max(0, k + n - 2));
          CanonicalKey key = canonical_form(t);
          out.emplace(std::move(key), std::move(t));
        }
        if (n == 0) break;
        int i = 0;
        while (i < n && assign[i] == m - 1) assign[i++] = 0;
        if (i == n) break;
        ++assign[i];
      }
    };
    grow_shapes(parts, zero, zero_cap, n, harvest);
  }
  std::vector<std::pair<CanonicalKey, DecoratedTree>> items(out.begin(), out.end());
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<DecoratedTree> result;
  for (auto& [key, t] : items) result.push_back(std::move(t));
  return result;
}

}  // namespace modcomp
