#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "findim/oracle/module.hpp"

namespace findim::oracle {

/// Result of a cutoff-bounded projective dimension search.
struct BoundedPdim {
  std::optional<int> value; // least k <= cutoff with Ω^(k+1) = 0
  int cutoff = 0;

  bool exceeded() const { return !value.has_value(); }
};

/// Iterates Ω¹ on direct sums of coordinate blocks. Identical blocks are stored once with a
/// multiplicity, and the syzygy of each distinct block is computed once.
class SyzygyStream {
public:
  using Sum = std::map<int, std::uint64_t>; // block id -> multiplicity

  explicit SyzygyStream(const BasedAlgebra& alg) : alg_(&alg) {}

  Sum decompose_blocks(const MatrixModule& m) {
    Sum s;
    for (auto& b : split_blocks(*alg_, m))
      if (!b.is_zero()) s[intern(std::move(b))] += 1;
    return s;
  }

  Sum step(const Sum& s) {
    Sum out;
    for (const auto& [id, mult] : s)
      for (const auto& [child, m] : children(id)) out[child] += m * mult;
    return out;
  }

  const Sum& children(int id) {
    auto it = children_.find(id);
    if (it != children_.end()) return it->second;
    Sum kids = decompose_blocks(syzygy_matrix(*alg_, blocks_[id]));
    return children_.emplace(id, std::move(kids)).first->second;
  }

  const LayerMatrix& layers(int id) {
    auto it = layers_.find(id);
    if (it != layers_.end()) return it->second;
    return layers_.emplace(id, layer_matrix(*alg_, blocks_[id])).first->second;
  }

  LayerMatrix layers(const Sum& s) {
    LayerMatrix lm(alg_->vertex_count());
    for (const auto& [id, mult] : s) lm.add(layers(id), mult);
    return lm;
  }

  const MatrixModule& block(int id) const { return blocks_.at(id); }
  std::size_t block_count() const { return blocks_.size(); }

private:
  int intern(MatrixModule m) {
    std::string key = module_key(m);
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    const int id = static_cast<int>(blocks_.size());
    blocks_.push_back(std::move(m));
    ids_.emplace(std::move(key), id);
    return id;
  }

  const BasedAlgebra* alg_;
  std::vector<MatrixModule> blocks_;
  std::map<std::string, int> ids_;
  std::map<int, Sum> children_;
  std::map<int, LayerMatrix> layers_;
};

/// Projective dimension if it is at most cutoff (least k with Ω^(k+1)(M) = 0), else exceeded.
/// The zero module gets 0.
inline BoundedPdim pdim_upto(const BasedAlgebra& alg, const MatrixModule& m, int cutoff) {
  SyzygyStream stream(alg);
  auto sum = stream.decompose_blocks(m);
  if (sum.empty()) return {0, cutoff};
  for (int k = 0; k <= cutoff; ++k) {
    sum = stream.step(sum);
    if (sum.empty()) return {k, cutoff};
  }
  return {std::nullopt, cutoff};
}

/// Layer matrices of Ω^0(M), ..., Ω^steps(M).
inline std::vector<LayerMatrix> syzygy_layers(const BasedAlgebra& alg, const MatrixModule& m, int steps) {
  SyzygyStream stream(alg);
  auto sum = stream.decompose_blocks(m);
  std::vector<LayerMatrix> out;
  for (int k = 0; k <= steps; ++k) {
    out.push_back(stream.layers(sum));
    if (k < steps) sum = stream.step(sum);
  }
  return out;
}

} // namespace findim::oracle
