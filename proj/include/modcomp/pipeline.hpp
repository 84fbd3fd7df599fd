#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "modcomp/strata.hpp"
#include "modcomp/trees.hpp"

namespace modcomp {

struct TreeScore {
  i64 i_G = 0;                 // sum over rays of (h0 on the stratum - smooth h0)
  i64 d_G = 0;                 // i_G - #edges
  std::vector<i64> h0_per_ray;
  std::vector<i64> h1_per_ray;
};

TreeScore score_tree(const DecoratedTree& t, const ToricBasis& basis);

// Which curve classes admit an irreducible representative (up to positive
// multiple). Built-in for Bl_pt P^2 (recognized structurally) and for
// Picard-rank-1 fans; user lists override; otherwise every effective class
// passes and the source is flagged.
struct IrredOracle {
  enum class Source { builtin, user_list, effective_fallback };
  Source source = Source::effective_fallback;
  std::function<bool(const CurveClass&)> contains;
};

IrredOracle make_irred_oracle(const ToricBasis& basis,
                              const std::optional<std::vector<CurveClass>>& user_list);

struct EmptinessVerdict {
  enum class Status { passed, empty };
  Status status = Status::passed;
  std::string rule;  // "R1", "R2c", "R3" with witness, empty when passed
  int ray = -1;
  int vertex = -1;
  bool is_empty() const { return status == Status::empty; }
};

// Sound necessary conditions for M_G (resp. Q_G) to be nonempty; "passed"
// is a necessary-conditions pass, not a constructive nonemptiness proof.
// R1 (maps only): a vertex class outside A_1^irred u {0}.
// R2: per-ray forced-vanishing fixpoint; a vertex whose section must vanish
//     identically but whose class does not lie in the invariant-curve cone
//     of the ray's divisor is a contradiction.
// R3: the rays forcing a common vertex must fit in one maximal cone.
EmptinessVerdict nonempty_status(const DecoratedTree& t, const ToricBasis& basis, Mode mode,
                                 const IrredOracle& irred);

struct ClosureElement {
  CanonicalKey key;
  i64 d_G = 0;
  i64 num_edges = 0;
};

struct TreeEntry {
  CanonicalKey key;
  DecoratedTree tree;
  TreeScore score;
  EmptinessVerdict verdict;
  i64 offset = 0;  // d_G - d_G0 (d_G0 = 0 for the one-vertex tree)
  bool component = false;
  std::vector<ClosureElement> closure;  // proper contractions, deduplicated
};

struct ComponentReport {
  Mode mode = Mode::maps;
  CurveClass beta;
  int n = 0;
  std::vector<TreeEntry> trees;               // sorted by canonical key
  std::vector<CanonicalKey> component_keys;   // sorted
  IrredOracle::Source irred_source = IrredOracle::Source::effective_fallback;
};

struct PipelineOptions {
  int max_parts = -1;
  int threads = 0;  // 0 = hardware_concurrency, capped by MODCOMP_THREADS
  std::optional<std::vector<CurveClass>> irreducible_classes;
  std::optional<std::vector<CurveClass>> class_set;  // default: nonzero effective points
};

// Enumerate stable trees, score them, run the emptiness rules, and flag a
// tree as a component iff it passed and d_G >= d_G' over its full
// contraction closure. Throws std::invalid_argument for quasimaps with n<2.
ComponentReport irreducible_components(const ToricBasis& basis, const CurveClass& beta, int n,
                                       Mode mode, const PipelineOptions& opt = {});

// dim X + sum_rho beta.D_rho + n - 3 (the main-component dimension the
// report defaults to; offsets are the authoritative output).
i64 default_dim_main(const ToricBasis& basis, const CurveClass& beta, int n);

// Absolute dimension per component: dim_main + offset.
std::vector<i64> dimension_report(const ComponentReport& report, i64 dim_main);

}  // namespace modcomp
