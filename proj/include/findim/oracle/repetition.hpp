#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "findim/oracle/hom.hpp"
#include "findim/oracle/module.hpp"

namespace findim::oracle {

struct OracleOptions {
  std::size_t dimension_bound = default_dimension_bound;
  int cutoff = 12;
  std::uint64_t seed = 0;
};

/// Isomorphism classes of indecomposable modules met along syzygy sequences, with Ω¹ between
/// them. Classes are matched by dimension vector and layer matrix first, then by
/// are_isomorphic.
class ClassGraph {
public:
  ClassGraph(const BasedAlgebra& alg, OracleOptions options) : alg_(&alg), options_(options) {}

  /// Classes (with multiplicity) of the indecomposable summands of M.
  std::map<int, std::uint64_t> summands(const MatrixModule& m) {
    std::map<int, std::uint64_t> out;
    if (m.is_zero()) return out;
    const Decomposition d = decompose(*alg_, m, options_.seed, options_.dimension_bound);
    certified_ = certified_ && d.certified;
    for (const auto& s : d.summands) out[classify(s)] += 1;
    return out;
  }

  int classify(const MatrixModule& indecomposable) {
    const LayerMatrix lm = layer_matrix(*alg_, indecomposable);
    for (std::size_t c = 0; c < reps_.size(); ++c) {
      if (reps_[c].dims != indecomposable.dims || layers_[c] != lm) continue;
      const IsoDecision iso =
          isomorphism_test(*alg_, reps_[c], indecomposable, options_.seed, options_.dimension_bound);
      certified_ = certified_ && iso.certified;
      if (iso.isomorphic) return static_cast<int>(c);
    }
    reps_.push_back(indecomposable);
    layers_.push_back(lm);
    projective_.push_back(is_projective(*alg_, indecomposable));
    children_.emplace_back();
    expanded_.push_back(false);
    return static_cast<int>(reps_.size()) - 1;
  }

  const std::map<int, std::uint64_t>& children(int c) {
    if (!expanded_[c]) {
      expanded_[c] = true;
      const MatrixModule omega = syzygy_matrix(*alg_, reps_[c]);
      if (omega.dimension() > options_.dimension_bound)
        throw DimensionBoundExceeded(omega.dimension(), options_.dimension_bound);
      auto kids = summands(omega);
      children_[c] = std::move(kids);
    }
    return children_[c];
  }

  bool projective(int c) const { return projective_.at(c); }
  const MatrixModule& representative(int c) const { return reps_.at(c); }
  const LayerMatrix& layers(int c) const { return layers_.at(c); }
  std::size_t size() const { return reps_.size(); }
  bool certified() const { return certified_; }
  const OracleOptions& options() const { return options_; }
  const BasedAlgebra& algebra() const { return *alg_; }

private:
  const BasedAlgebra* alg_;
  OracleOptions options_;
  std::vector<MatrixModule> reps_;
  std::vector<LayerMatrix> layers_;
  std::vector<bool> projective_;
  std::vector<std::map<int, std::uint64_t>> children_;
  std::vector<bool> expanded_;
  bool certified_ = true;
};

struct RepetitionResult {
  std::optional<int> value; // empty: undetermined within the cutoff
  int cutoff = 0;
  /// Non-projective indecomposable classes of Ω^0, Ω^1, ... as computed.
  std::vector<std::set<int>> class_sets;
  /// The class-set sequence satisfies C_(start + period) = C_start.
  int period_start = -1;
  int period = 0;
  bool certified = true;

  bool determined() const { return value.has_value(); }
};

/// Least i such that every class in C_i recurs, given that C_0..C_cutoff are computed.
/// "Recurs infinitely often" means lying in the union of the periodic tail.
inline RepetitionResult repetition_from(ClassGraph& g, const std::set<int>& start, int cutoff) {
  RepetitionResult r;
  r.cutoff = cutoff;
  std::map<std::set<int>, int> seen;
  std::set<int> cur = start;
  for (int k = 0; k <= cutoff; ++k) {
    auto [it, inserted] = seen.emplace(cur, k);
    r.class_sets.push_back(cur);
    if (!inserted) {
      r.period_start = it->second;
      r.period = k - it->second;
      break;
    }
    if (k == cutoff) break;
    std::set<int> next;
    for (int c : cur)
      for (const auto& [child, m] : g.children(c))
        if (!g.projective(child)) next.insert(child);
    cur = std::move(next);
  }
  r.certified = g.certified();
  if (r.period_start < 0) return r;
  std::set<int> recurrent;
  for (int k = r.period_start; k < r.period_start + r.period; ++k)
    recurrent.insert(r.class_sets[k].begin(), r.class_sets[k].end());
  for (int k = 0; k <= r.period_start; ++k)
    if (std::includes(recurrent.begin(), recurrent.end(), r.class_sets[k].begin(), r.class_sets[k].end())) {
      r.value = k;
      break;
    }
  return r;
}

inline std::set<int> non_projective_classes(ClassGraph& g, const MatrixModule& m) {
  std::set<int> out;
  for (const auto& [c, mult] : g.summands(m))
    if (!g.projective(c)) out.insert(c);
  return out;
}

/// Repetition index of M, evaluated on the eventually periodic sequence of class sets.
inline RepetitionResult repetition_index_bounded(const BasedAlgebra& alg, const MatrixModule& m, int cutoff,
                                                 OracleOptions options = {}) {
  if (m.dimension() > options.dimension_bound)
    throw DimensionBoundExceeded(m.dimension(), options.dimension_bound);
  ClassGraph g(alg, options);
  return repetition_from(g, non_projective_classes(g, m), cutoff);
}

} // namespace findim::oracle
