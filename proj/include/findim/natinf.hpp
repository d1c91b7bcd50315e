#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <optional>
#include <ostream>
#include <string>

namespace findim {

/// A natural number or infinity; used for projective and global dimensions.
class NatInf {
public:
  constexpr NatInf() = default;
  constexpr NatInf(int value) : value_(value) { assert(value >= 0); }

  static constexpr NatInf infinity() {
    NatInf r;
    r.value_ = -1;
    return r;
  }

  constexpr bool finite() const { return value_ >= 0; }
  constexpr int value() const {
    assert(finite());
    return value_;
  }

  constexpr std::optional<int> as_optional() const {
    if (finite()) return value_;
    return std::nullopt;
  }

  std::string str() const { return finite() ? std::to_string(value_) : "infinity"; }

  friend constexpr bool operator==(NatInf a, NatInf b) { return a.value_ == b.value_; }
  friend constexpr std::strong_ordering operator<=>(NatInf a, NatInf b) {
    if (a.value_ == b.value_) return std::strong_ordering::equal;
    if (!a.finite()) return std::strong_ordering::greater;
    if (!b.finite()) return std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

  friend constexpr NatInf operator+(NatInf a, int k) {
    return a.finite() ? NatInf(a.value_ + k) : a;
  }

  friend std::ostream& operator<<(std::ostream& os, NatInf n) { return os << n.str(); }

private:
  int value_ = 0;
};

inline constexpr NatInf max(NatInf a, NatInf b) { return a < b ? b : a; }

} // namespace findim
