#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "findim/analysis.hpp"

namespace testing_util {

using namespace findim;

inline std::string data_path(const std::string& name) { return std::string(FINDIM_DATA_DIR) + "/" + name; }

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline io::AlgebraDocument parallel_doc() { return io::parse_algebra(read_data("parallel_arrows.qalg")); }

inline AlgebraModel parallel_arrows() { return AlgebraModel(parallel_doc().presentation); }

inline ExponentMatrix tiled5() { return io::parse_exponent_matrix(read_data("tiled5.tord")); }

/// Path from arrow names, first arrow first.
inline Path path_of(const Quiver& q, const std::vector<std::string>& names) {
  std::vector<int> arrows;
  for (const auto& n : names) arrows.push_back(q.find_arrow(n).value());
  return make_path(q, arrows).value();
}

inline int index_of(const AlgebraModel& a, const std::vector<std::string>& names) {
  return a.index_of(path_of(a.quiver(), names)).value();
}

/// k[x]/(x^2).
inline MonomialPresentation one_loop() {
  MonomialPresentation p;
  p.quiver.add_vertex("1");
  p.quiver.add_arrow("x", 0, 0);
  p.relations = {path_of(p.quiver, {"x", "x"})};
  return p;
}

/// n vertices, a loop l_i at each and arrows a_i: i -> i+1 (cyclically). Every length-2 path
/// except l_i*a_i is a relation, so J^3 = 0 and J^2 != 0.
inline MonomialPresentation looped_cycle(int n) {
  MonomialPresentation p;
  for (int i = 0; i < n; ++i) p.quiver.add_vertex(std::to_string(i + 1));
  for (int i = 0; i < n; ++i) p.quiver.add_arrow("l" + std::to_string(i + 1), i, i);
  for (int i = 0; i < n; ++i) p.quiver.add_arrow("a" + std::to_string(i + 1), i, (i + 1) % n);
  for (int x = 0; x < p.quiver.arrow_count(); ++x)
    for (int y = 0; y < p.quiver.arrow_count(); ++y) {
      auto q = make_path(p.quiver, {x, y});
      if (!q) continue;
      if (x < n && y == x + n) continue;
      p.relations.push_back(*q);
    }
  return p;
}

} // namespace testing_util
