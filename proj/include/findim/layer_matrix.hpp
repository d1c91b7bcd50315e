#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace findim {

/// Entry (l, i) is the multiplicity of the simple S_i in J^l M / J^(l+1) M (rows from 0).
struct LayerMatrix {
  int columns = 0;
  std::vector<std::vector<std::uint64_t>> rows;

  explicit LayerMatrix(int simple_count = 0) : columns(simple_count) {}

  std::size_t layer_count() const { return rows.size(); }

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto& r : rows)
      for (auto x : r) t += x;
    return t;
  }

  void add(const LayerMatrix& other, std::uint64_t multiplicity = 1) {
    if (other.rows.size() > rows.size()) rows.resize(other.rows.size(), std::vector<std::uint64_t>(columns, 0));
    for (std::size_t l = 0; l < other.rows.size(); ++l)
      for (int i = 0; i < columns; ++i) rows[l][i] += multiplicity * other.rows[l][i];
  }

  /// Per-vertex totals over all layers.
  std::vector<std::uint64_t> dimension_vector() const {
    std::vector<std::uint64_t> d(columns, 0);
    for (const auto& r : rows)
      for (int i = 0; i < columns; ++i) d[i] += r[i];
    return d;
  }

  /// Layers written as "{S1,S2x2}" joined by spaces; vertex names are 1-based positions.
  std::string str(const std::vector<std::string>& vertex_names = {}) const {
    std::ostringstream os;
    for (std::size_t l = 0; l < rows.size(); ++l) {
      if (l) os << ' ';
      os << '{';
      bool first = true;
      for (int i = 0; i < columns; ++i) {
        if (!rows[l][i]) continue;
        if (!first) os << ',';
        first = false;
        os << 'S' << (vertex_names.empty() ? std::to_string(i + 1) : vertex_names[i]);
        if (rows[l][i] > 1) os << 'x' << rows[l][i];
      }
      os << '}';
    }
    return os.str();
  }

  friend bool operator==(const LayerMatrix&, const LayerMatrix&) = default;
  friend auto operator<=>(const LayerMatrix&, const LayerMatrix&) = default;
};

} // namespace findim
