#pragma once

#include <deque>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "findim/algebra.hpp"
#include "findim/errors.hpp"
#include "findim/quiver.hpp"

namespace findim {

struct BasisElement {
  std::string name;
  int source = 0;
  int target = 0;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// A finite dimensional algebra with a multiplicative basis: every product of two basis
/// elements is a basis element or zero, structure constants are 1.
///
/// Elements 0..n-1 are the vertex idempotents. `product(c, b)` is c·b, "first b then c",
/// defined only when source(c) == target(b).
class BasedAlgebra {
public:
  static constexpr int zero = -1;

  BasedAlgebra() = default;

  /// Validates associativity, the idempotent structure, left cancellation, nilpotence of the
  /// radical, and generation by arrow-level elements. Throws InvalidBasedAlgebra otherwise.
  BasedAlgebra(std::vector<std::string> vertex_names, std::vector<BasisElement> elements,
               std::vector<int> product)
      : vertex_names_(std::move(vertex_names)), elements_(std::move(elements)),
        product_(std::move(product)) {
    validate();
    derive();
  }

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  std::size_t dimension() const { return elements_.size(); }
  std::size_t radical_dimension() const { return elements_.size() - vertex_names_.size(); }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::vector<BasisElement>& elements() const { return elements_; }
  const BasisElement& element(int i) const { return elements_.at(i); }
  bool is_idempotent(int i) const { return i < vertex_count(); }

  int product(int c, int b) const { return product_[static_cast<std::size_t>(c) * dimension() + b]; }

  /// Arrow-level elements: radical elements that are not products of two radical elements.
  const std::vector<int>& arrows() const { return arrows_; }
  /// For each element, a word in arrow positions (indices into arrows()), first factor first.
  const std::vector<std::vector<int>>& words() const { return words_; }
  /// Elements whose source is the given vertex, in index order.
  const std::vector<int>& elements_from(int v) const { return from_.at(v); }
  /// Largest l with J^(l-1) != 0.
  int loewy_length() const { return loewy_length_; }

  std::optional<int> find(const std::string& name) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (elements_[i].name == name) return static_cast<int>(i);
    return std::nullopt;
  }

  /// Value of a word of arrow positions, first factor first; zero if it vanishes.
  int evaluate(const std::vector<int>& word) const {
    if (word.empty()) return zero;
    int x = arrows_[word[0]];
    for (std::size_t k = 1; k < word.size() && x != zero; ++k) {
      const int a = arrows_[word[k]];
      if (elements_[a].source != elements_[x].target) return zero;
      x = product(a, x);
    }
    return x;
  }

  bool right_cancellative() const {
    const int d = static_cast<int>(dimension());
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int c2 = c + 1; c2 < d; ++c2) {
          const int x = product(b, c);
          if (x != zero && x == product(b, c2)) return false;
        }
    return true;
  }

  bool left_cancellative() const {
    const int d = static_cast<int>(dimension());
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int c2 = c + 1; c2 < d; ++c2) {
          const int x = product(c, b);
          if (x != zero && x == product(c2, b)) return false;
        }
    return true;
  }

  friend bool operator==(const BasedAlgebra& a, const BasedAlgebra& b) {
    return a.vertex_names_ == b.vertex_names_ && a.elements_ == b.elements_ &&
           a.product_ == b.product_;
  }

private:
  void validate() const {
    const int n = vertex_count();
    const int d = static_cast<int>(elements_.size());
    auto fail = [](const std::string& why) { throw InvalidBasedAlgebra(why); };
    if (d < n) fail("fewer basis elements than idempotents");
    if (product_.size() != static_cast<std::size_t>(d) * d) fail("product table has the wrong size");
    for (int i = 0; i < d; ++i) {
      const auto& e = elements_[i];
      if (e.source < 0 || e.source >= n || e.target < 0 || e.target >= n)
        fail("element '" + e.name + "' has an unknown endpoint");
      if (i < n && (e.source != i || e.target != i)) fail("idempotent e" + std::to_string(i) + " is misplaced");
    }
    for (int c = 0; c < d; ++c)
      for (int b = 0; b < d; ++b) {
        const int x = product(c, b);
        const auto& ec = elements_[c];
        const auto& eb = elements_[b];
        if (x == zero) {
          if (c < n && ec.source == eb.target) fail("idempotent does not act as identity");
          if (b < n && eb.target == ec.source) fail("idempotent does not act as identity");
          continue;
        }
        if (x < 0 || x >= d) fail("product index out of range");
        if (ec.source != eb.target) fail("nonzero product of non-composable elements");
        if (elements_[x].source != eb.source || elements_[x].target != ec.target)
          fail("product has the wrong endpoints");
        if (c < n && x != b) fail("idempotent does not act as identity");
        if (b < n && x != c) fail("idempotent does not act as identity");
      }
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const int ab = product(a, b);
        for (int c = 0; c < d; ++c) {
          const int left = ab == zero ? zero : product(ab, c);
          const int bc = product(b, c);
          const int right = bc == zero ? zero : product(a, bc);
          if (left != right) fail("product is not associative");
        }
      }
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int c2 = c + 1; c2 < d; ++c2) {
          const int x = product(c, b);
          if (x != zero && x == product(c2, b)) fail("left cancellation fails");
        }
  }

  void derive() {
    const int n = vertex_count();
    const int d = static_cast<int>(elements_.size());
    std::vector<bool> decomposable(d, false);
    for (int c = n; c < d; ++c)
      for (int b = n; b < d; ++b) {
        const int x = product(c, b);
        if (x != zero) decomposable[x] = true;
      }
    for (int x = n; x < d; ++x)
      if (!decomposable[x]) arrows_.push_back(x);

    // Radical powers as sets of basis elements; they must reach zero.
    std::set<int> power;
    for (int x = n; x < d; ++x) power.insert(x);
    loewy_length_ = n > 0 ? 1 : 0;
    for (int l = 1; !power.empty(); ++l) {
      if (l > d) throw InvalidBasedAlgebra("the radical is not nilpotent");
      loewy_length_ = l + 1;
      std::set<int> next;
      for (int a : arrows_)
        for (int y : power) {
          const int z = product(a, y);
          if (z != zero) next.insert(z);
        }
      power = std::move(next);
    }

    words_.assign(d, {});
    std::vector<bool> seen(d, false);
    std::deque<int> queue;
    for (int v = 0; v < n; ++v) seen[v] = true;
    for (std::size_t k = 0; k < arrows_.size(); ++k) {
      seen[arrows_[k]] = true;
      words_[arrows_[k]] = {static_cast<int>(k)};
      queue.push_back(arrows_[k]);
    }
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < arrows_.size(); ++k) {
        const int y = product(arrows_[k], x);
        if (y == zero || seen[y]) continue;
        seen[y] = true;
        words_[y] = words_[x];
        words_[y].push_back(static_cast<int>(k));
        queue.push_back(y);
      }
    }
    for (int x = 0; x < d; ++x)
      if (!seen[x]) throw InvalidBasedAlgebra("element '" + elements_[x].name + "' is not generated by arrows");

    from_.assign(n, {});
    for (int x = 0; x < d; ++x) from_[elements_[x].source].push_back(x);
  }

  std::vector<std::string> vertex_names_;
  std::vector<BasisElement> elements_;
  std::vector<int> product_;
  std::vector<int> arrows_;
  std::vector<std::vector<int>> words_;
  std::vector<std::vector<int>> from_;
  int loewy_length_ = 0;
};

/// The monomial algebra as a based algebra on its path basis (same indices).
inline BasedAlgebra to_based(const AlgebraModel& a) {
  const int d = static_cast<int>(a.dimension());
  std::vector<BasisElement> elements;
  elements.reserve(d);
  for (int i = 0; i < d; ++i) elements.push_back({a.name_of(i), a.path(i).source, a.path(i).target});
  std::vector<int> product(static_cast<std::size_t>(d) * d, BasedAlgebra::zero);
  for (int c = 0; c < d; ++c)
    for (int b = 0; b < d; ++b)
      if (auto x = a.then(b, c)) product[static_cast<std::size_t>(c) * d + b] = *x;
  return BasedAlgebra(a.quiver().vertices(), std::move(elements), std::move(product));
}

inline BasedAlgebra opposite(const BasedAlgebra& a) {
  const int d = static_cast<int>(a.dimension());
  std::vector<BasisElement> elements;
  for (const auto& e : a.elements()) elements.push_back({e.name, e.target, e.source});
  std::vector<int> product(static_cast<std::size_t>(d) * d, BasedAlgebra::zero);
  for (int c = 0; c < d; ++c)
    for (int b = 0; b < d; ++b) product[static_cast<std::size_t>(c) * d + b] = a.product(b, c);
  return BasedAlgebra(a.vertex_names(), std::move(elements), std::move(product));
}

/// Exponents λ_ij of a tiled order: entry (i, j) is the power of the uniformizer at (i, j).
struct ExponentMatrix {
  int n = 0;
  std::vector<std::vector<int>> lambda;

  int operator()(int i, int j) const { return lambda[i][j]; }

  void validate() const {
    if (n < 1) throw InvalidExponentMatrix("matrix size must be at least 1");
    if (static_cast<int>(lambda.size()) != n) throw InvalidExponentMatrix("row count differs from n");
    for (const auto& row : lambda)
      if (static_cast<int>(row.size()) != n) throw InvalidExponentMatrix("row length differs from n");
    for (int i = 0; i < n; ++i) {
      if (lambda[i][i] != 0) throw InvalidExponentMatrix("diagonal entry " + std::to_string(i + 1) + " is nonzero");
      for (int j = 0; j < n; ++j)
        if (lambda[i][j] < 0) throw InvalidExponentMatrix("negative exponent");
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (lambda[i][j] + lambda[j][k] < lambda[i][k])
            throw InvalidExponentMatrix("closure fails at (" + std::to_string(i + 1) + "," +
                                        std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
  }

  friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;
};

struct TiledImport {
  BasedAlgebra algebra;
  /// Quiver read off the arrow-level elements; arrow b<i>_<j> runs from vertex j to vertex i.
  Quiver quiver;
  /// Equivalent monomial presentation, present iff every basis element is reached by exactly
  /// one nonzero quiver path.
  std::optional<MonomialPresentation> presentation;
  /// Pairs of distinct quiver paths with the same nonzero value (empty when monomial).
  std::vector<std::pair<Path, Path>> identifications;

  bool monomial() const { return presentation.has_value(); }
};

inline std::string tiled_element_name(int i, int j) {
  return "b" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

/// Reduction of the tiled order with exponents λ modulo the uniformizer: basis b_ij with
/// b_ij·b_jk = b_ik when λ_ij + λ_jk = λ_ik and zero otherwise.
inline TiledImport import_tiled_order(const ExponentMatrix& m) {
  m.validate();
  const int n = m.n;
  std::vector<std::string> vertices;
  for (int i = 0; i < n; ++i) vertices.push_back(std::to_string(i + 1));
  std::vector<std::pair<int, int>> position;
  for (int i = 0; i < n; ++i) position.emplace_back(i, i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) position.emplace_back(i, j);
  std::vector<std::vector<int>> index(n, std::vector<int>(n));
  std::vector<BasisElement> elements;
  for (std::size_t x = 0; x < position.size(); ++x) {
    auto [i, j] = position[x];
    index[i][j] = static_cast<int>(x);
    elements.push_back({tiled_element_name(i, j), j, i});
  }
  const int d = n * n;
  std::vector<int> product(static_cast<std::size_t>(d) * d, BasedAlgebra::zero);
  for (int c = 0; c < d; ++c)
    for (int b = 0; b < d; ++b) {
      auto [i, j] = position[c];
      auto [j2, k] = position[b];
      if (j != j2) continue;
      if (m(i, j) + m(j, k) == m(i, k)) product[static_cast<std::size_t>(c) * d + b] = index[i][k];
    }

  TiledImport out;
  out.algebra = BasedAlgebra(vertices, std::move(elements), std::move(product));
  const BasedAlgebra& alg = out.algebra;
  for (const auto& v : vertices) out.quiver.add_vertex(v);
  for (int a : alg.arrows()) out.quiver.add_arrow(alg.element(a).name, alg.element(a).source, alg.element(a).target);

  // Enumerate nonzero quiver paths (quiver arrow k corresponds to arrows()[k]).
  std::vector<std::vector<Path>> reached(d);
  std::vector<std::pair<Path, int>> frontier;
  for (int k = 0; k < out.quiver.arrow_count(); ++k) {
    Path p = Path::of_arrow(out.quiver, k);
    reached[alg.arrows()[k]].push_back(p);
    frontier.emplace_back(p, alg.arrows()[k]);
  }
  std::vector<Path> zero_words;
  while (!frontier.empty()) {
    std::vector<std::pair<Path, int>> next;
    for (const auto& [p, value] : frontier)
      for (int k = 0; k < out.quiver.arrow_count(); ++k) {
        if (out.quiver.arrow(k).source != p.target) continue;
        Path ext = *concat(p, Path::of_arrow(out.quiver, k));
        const int y = alg.product(alg.arrows()[k], value);
        if (y == BasedAlgebra::zero) {
          std::vector<int> suffix(ext.arrows.begin() + 1, ext.arrows.end());
          if (alg.evaluate(suffix) != BasedAlgebra::zero) zero_words.push_back(ext);
          continue;
        }
        reached[y].push_back(ext);
        next.emplace_back(std::move(ext), y);
      }
    frontier = std::move(next);
  }
  for (int x = n; x < d; ++x)
    for (std::size_t r = 1; r < reached[x].size(); ++r)
      out.identifications.emplace_back(reached[x][0], reached[x][r]);
  if (out.identifications.empty()) {
    MonomialPresentation p;
    p.quiver = out.quiver;
    p.relations = reduce_relations(std::move(zero_words));
    out.presentation = std::move(p);
  }
  return out;
}

} // namespace findim
