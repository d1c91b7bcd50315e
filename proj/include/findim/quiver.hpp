#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "findim/errors.hpp"

namespace findim {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Finite directed multigraph; loops and parallel arrows allowed.
class Quiver {
public:
  Quiver() = default;

  int add_vertex(const std::string& id) {
    if (vertex_lookup_.count(id)) throw InvalidPresentation("duplicate vertex '" + id + "'");
    vertex_lookup_[id] = static_cast<int>(vertices_.size());
    vertices_.push_back(id);
    return static_cast<int>(vertices_.size()) - 1;
  }

  int add_arrow(const std::string& name, int source, int target) {
    if (arrow_lookup_.count(name)) throw InvalidPresentation("duplicate arrow '" + name + "'");
    if (source < 0 || target < 0 || source >= vertex_count() || target >= vertex_count())
      throw InvalidPresentation("arrow '" + name + "' has an undeclared endpoint");
    arrow_lookup_[name] = static_cast<int>(arrows_.size());
    arrows_.push_back({name, source, target});
    return static_cast<int>(arrows_.size()) - 1;
  }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int a) const { return arrows_.at(a); }
  const std::string& vertex_name(int v) const { return vertices_.at(v); }

  std::optional<int> find_vertex(const std::string& id) const {
    auto it = vertex_lookup_.find(id);
    if (it == vertex_lookup_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<int> find_arrow(const std::string& name) const {
    auto it = arrow_lookup_.find(name);
    if (it == arrow_lookup_.end()) return std::nullopt;
    return it->second;
  }

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> vertex_lookup_;
  std::map<std::string, int> arrow_lookup_;
};

/// A path, traversed first arrow first. The empty arrow list is the trivial path at `source`.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  static Path trivial(int v) { return {v, v, {}}; }
  static Path of_arrow(const Quiver& q, int a) {
    return {q.arrow(a).source, q.arrow(a).target, {a}};
  }

  std::size_t length() const { return arrows.size(); }
  bool is_trivial() const { return arrows.empty(); }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

/// Builds a path from arrow indices, checking that consecutive arrows compose.
inline std::optional<Path> make_path(const Quiver& q, const std::vector<int>& arrows) {
  if (arrows.empty()) return std::nullopt;
  for (std::size_t k = 0; k + 1 < arrows.size(); ++k)
    if (q.arrow(arrows[k]).target != q.arrow(arrows[k + 1]).source) return std::nullopt;
  return Path{q.arrow(arrows.front()).source, q.arrow(arrows.back()).target, arrows};
}

/// "p then q"; nullopt when the endpoints do not meet.
inline std::optional<Path> concat(const Path& p, const Path& q) {
  if (p.target != q.source) return std::nullopt;
  Path r{p.source, q.target, p.arrows};
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

/// True if `needle` occurs as a contiguous block of `hay`.
inline bool contains_factor(const std::vector<int>& hay, const std::vector<int>& needle) {
  if (needle.size() > hay.size()) return false;
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

inline std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return "e(" + q.vertex_name(p.source) + ")";
  std::string s;
  for (std::size_t k = 0; k < p.arrows.size(); ++k) {
    if (k) s += '*';
    s += q.arrow(p.arrows[k]).name;
  }
  return s;
}

/// Quiver plus a set of monomial relations of length >= 2.
struct MonomialPresentation {
  Quiver quiver;
  std::vector<Path> relations;

  /// Throws InvalidPresentation unless every relation is a composable path of length >= 2
  /// and no relation is a factor of another.
  void validate() const {
    for (const auto& r : relations) {
      if (r.length() < 2)
        throw InvalidPresentation("relation '" + path_to_string(quiver, r) +
                                  "' has length < 2");
      for (int a : r.arrows)
        if (a < 0 || a >= quiver.arrow_count()) throw InvalidPresentation("relation uses unknown arrow");
      auto p = make_path(quiver, r.arrows);
      if (!p || p->source != r.source || p->target != r.target)
        throw InvalidPresentation("relation '" + path_to_string(quiver, r) + "' does not compose");
    }
    for (std::size_t i = 0; i < relations.size(); ++i)
      for (std::size_t j = 0; j < relations.size(); ++j)
        if (i != j && contains_factor(relations[j].arrows, relations[i].arrows))
          throw InvalidPresentation("relation '" + path_to_string(quiver, relations[i]) +
                                    "' is a factor of '" + path_to_string(quiver, relations[j]) +
                                    "'");
  }

  friend bool operator==(const MonomialPresentation&, const MonomialPresentation&) = default;
};

/// Drops duplicate relations and relations that contain another relation as a factor.
inline std::vector<Path> reduce_relations(std::vector<Path> relations) {
  std::sort(relations.begin(), relations.end(),
            [](const Path& a, const Path& b) {
              return a.length() != b.length() ? a.length() < b.length() : a.arrows < b.arrows;
            });
  relations.erase(std::unique(relations.begin(), relations.end()), relations.end());
  std::vector<Path> kept;
  for (const auto& r : relations) {
    bool redundant = false;
    for (const auto& k : kept)
      if (contains_factor(r.arrows, k.arrows)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(r);
  }
  return kept;
}

} // namespace findim
