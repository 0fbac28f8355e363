#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mbd {

// Exact rationals, always in lowest terms with positive denominator.
using Rational = mpq_class;

struct PointQ2 {
    Rational x, y;
};

/// True iff the three points lie on a common line, decided by the 3x3
/// homogeneous determinant, computed exactly.
bool collinear(const PointQ2& a, const PointQ2& b, const PointQ2& c);

/// Rank of a set of exact rational vectors (each of equal length).
int rational_matrix_rank(std::vector<std::vector<Rational>> rows);

}  // namespace mbd
