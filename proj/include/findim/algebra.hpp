#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "findim/errors.hpp"
#include "findim/quiver.hpp"

namespace findim {

/// A finite dimensional monomial algebra kQ/I together with its basis of nonzero paths.
///
/// Basis indices are stable: trivial paths come first in vertex order, then paths by length,
/// ties broken by the sequence of arrow names. Ring multiplication x·y means "first y, then x",
/// so the left projective Λe_i is spanned by the basis paths with source i.
class AlgebraModel {
public:
  /// Hard ceiling on the number of enumerated basis paths.
  static constexpr std::size_t max_dimension = std::size_t{1} << 20;

  /// A cap below max_dimension turns an oversized enumeration into DimensionBoundExceeded.
  explicit AlgebraModel(MonomialPresentation p, std::size_t cap = max_dimension)
      : presentation_(std::move(p)) {
    presentation_.validate();
    enumerate(std::min(cap, max_dimension));
  }

  const MonomialPresentation& presentation() const { return presentation_; }
  const Quiver& quiver() const { return presentation_.quiver; }
  int vertex_count() const { return quiver().vertex_count(); }
  std::size_t dimension() const { return basis_.size(); }
  /// dim_k J = dimension − number of vertices.
  std::size_t radical_dimension() const { return basis_.size() - vertex_count(); }
  int loewy_length() const { return loewy_length_; }

  const std::vector<Path>& basis() const { return basis_; }
  const Path& path(int index) const { return basis_.at(index); }
  int trivial(int vertex) const { return vertex; }

  std::optional<int> index_of(const Path& p) const {
    if (p.is_trivial()) {
      if (p.source < 0 || p.source >= vertex_count()) return std::nullopt;
      return p.source;
    }
    auto it = lookup_.find(p.arrows);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }

  /// Index of "p then q", or nullopt if the endpoints do not meet or the product is zero.
  std::optional<int> then(int p, int q) const {
    const Path& a = basis_[p];
    const Path& b = basis_[q];
    if (a.target != b.source) return std::nullopt;
    if (a.is_trivial()) return q;
    if (b.is_trivial()) return p;
    std::vector<int> word = a.arrows;
    word.insert(word.end(), b.arrows.begin(), b.arrows.end());
    auto it = lookup_.find(word);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }

  /// Basis paths with the given source, in basis order.
  const std::vector<int>& paths_from(int vertex) const { return from_.at(vertex); }

  /// Basis index of the arrow `a` viewed as a path, or nullopt if the arrow is itself zero
  /// (never happens: relations have length >= 2).
  int arrow_path(int a) const { return arrow_index_.at(a); }

  std::string name_of(int index) const { return path_to_string(quiver(), basis_[index]); }

private:
  void enumerate(std::size_t cap) {
    const Quiver& q = quiver();
    const int n = q.vertex_count();
    std::vector<int> name_rank(q.arrow_count());
    {
      std::vector<int> order(q.arrow_count());
      for (int a = 0; a < q.arrow_count(); ++a) order[a] = a;
      std::sort(order.begin(), order.end(),
                [&](int x, int y) { return q.arrow(x).name < q.arrow(y).name; });
      for (int r = 0; r < q.arrow_count(); ++r) name_rank[order[r]] = r;
    }
    std::vector<std::vector<const Path*>> relations_ending(q.arrow_count());
    std::size_t max_relation = 1;
    for (const auto& r : presentation_.relations) {
      relations_ending[r.arrows.back()].push_back(&r);
      max_relation = std::max(max_relation, r.length());
    }
    auto nonzero_extension = [&](const std::vector<int>& word) {
      for (const Path* r : relations_ending[word.back()]) {
        if (r->length() > word.size()) continue;
        if (std::equal(r->arrows.rbegin(), r->arrows.rend(), word.rbegin())) return false;
      }
      return true;
    };

    for (int v = 0; v < n; ++v) basis_.push_back(Path::trivial(v));
    std::vector<Path> level(basis_.begin(), basis_.end());
    std::size_t state_count = 0;
    std::size_t length = 0;
    loewy_length_ = n > 0 ? 1 : 0;
    while (!level.empty()) {
      if (length == max_relation - 1) state_count = level.size();
      // Once the window of the last (max_relation - 1) arrows must have repeated, a cycle of
      // nonzero extensions exists and paths grow without bound.
      if (length >= max_relation - 1 && length - (max_relation - 1) >= state_count &&
          state_count > 0)
        throw InfiniteDimensional("the presentation has nonzero paths of unbounded length");
      std::vector<Path> next;
      for (const auto& p : level) {
        for (int a = 0; a < q.arrow_count(); ++a) {
          if (q.arrow(a).source != p.target) continue;
          Path ext{p.source, q.arrow(a).target, p.arrows};
          ext.arrows.push_back(a);
          if (nonzero_extension(ext.arrows)) next.push_back(std::move(ext));
        }
      }
      std::sort(next.begin(), next.end(), [&](const Path& x, const Path& y) {
        return std::lexicographical_compare(
            x.arrows.begin(), x.arrows.end(), y.arrows.begin(), y.arrows.end(),
            [&](int s, int t) { return name_rank[s] < name_rank[t]; });
      });
      if (basis_.size() + next.size() > cap && cap < max_dimension)
        throw DimensionBoundExceeded(basis_.size() + next.size(), cap);
      if (basis_.size() + next.size() > max_dimension)
        throw InfiniteDimensional("the algebra exceeds " + std::to_string(max_dimension) +
                                  " basis paths");
      if (!next.empty()) loewy_length_ = static_cast<int>(length) + 2;
      for (const auto& p : next) basis_.push_back(p);
      level = std::move(next);
      ++length;
    }

    from_.assign(n, {});
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      from_[basis_[i].source].push_back(static_cast<int>(i));
      if (!basis_[i].is_trivial()) lookup_[basis_[i].arrows] = static_cast<int>(i);
    }
    arrow_index_.resize(q.arrow_count());
    for (int a = 0; a < q.arrow_count(); ++a) arrow_index_[a] = lookup_.at({a});
  }

  MonomialPresentation presentation_;
  std::vector<Path> basis_;
  std::map<std::vector<int>, int> lookup_;
  std::vector<std::vector<int>> from_;
  std::vector<int> arrow_index_;
  int loewy_length_ = 0;
};

inline AlgebraModel build_algebra(MonomialPresentation p) { return AlgebraModel(std::move(p)); }

/// "p then q" on paths; nullopt stands for zero.
inline std::optional<Path> multiply(const AlgebraModel& a, const Path& p, const Path& q) {
  auto i = a.index_of(p);
  auto j = a.index_of(q);
  if (!i || !j) throw NotABasisPath("multiply expects basis paths");
  auto r = a.then(*i, *j);
  if (!r) return std::nullopt;
  return a.path(*r);
}

inline std::size_t dim_radical(const AlgebraModel& a) { return a.radical_dimension(); }

/// Reverses every arrow and every relation; right modules are left modules over the result.
inline MonomialPresentation opposite(const MonomialPresentation& p) {
  MonomialPresentation op;
  for (const auto& v : p.quiver.vertices()) op.quiver.add_vertex(v);
  for (const auto& a : p.quiver.arrows()) op.quiver.add_arrow(a.name, a.target, a.source);
  for (const auto& r : p.relations) {
    Path rev{r.target, r.source, {r.arrows.rbegin(), r.arrows.rend()}};
    op.relations.push_back(std::move(rev));
  }
  return op;
}

inline AlgebraModel opposite(const AlgebraModel& a) { return AlgebraModel(opposite(a.presentation())); }

} // namespace findim
