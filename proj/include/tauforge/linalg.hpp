#pragma once

#include "tauforge/rational.hpp"

#include <vector>

namespace tauforge {

using Matrix = std::vector<std::vector<Rational>>;
using Vector = std::vector<Rational>;

// Solve A x = rhs exactly over the rationals.  A must be square or
// overdetermined with full column rank; rows are scaled to integers and
// eliminated fraction-free (Bareiss).  Rank-deficient systems throw
// domain_error("singular system"); overdetermined systems whose extra
// rows do not reduce to 0 = 0 throw domain_error("inconsistent system").
Vector exact_linear_solve(const Matrix& a, const Vector& rhs);

// Rank of the matrix, computed by the same elimination.
int matrix_rank(const Matrix& a);

}  // namespace tauforge
