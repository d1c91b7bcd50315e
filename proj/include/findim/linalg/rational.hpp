#pragma once

#include <gmpxx.h>

#include <string>

#include "findim/linalg/matrix.hpp"

namespace findim {

/// Exact rationals; every certified oracle answer is computed over this field.
using Rational = mpq_class;
using QMatrix = linalg::Matrix<Rational>;

inline std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace findim
