#pragma once

#include <stdexcept>
#include <vector>

#include "feqs/cfunction.hpp"

namespace feqs::linalg {

using Row = std::vector<Complex>;
using Matrix = std::vector<Row>;

/// A pivot candidate fell inside (epsilon, 100*epsilon): the tolerance
/// cannot separate rank, so rank decisions would be unreliable.
class IllConditioned : public std::runtime_error {
public:
    explicit IllConditioned(double pivot)
        : std::runtime_error("row reduction: pivot magnitude " + std::to_string(pivot) +
                             " inside the guard band"),
          pivot_(pivot) {}
    double pivot() const { return pivot_; }

private:
    double pivot_;
};

/// Free-variable basis of the epsilon-nullspace, from row-reduced echelon
/// form. Columns are processed left to right; the pivot row is the largest
/// remaining entry by magnitude (ties to the lowest row index).
std::vector<Row> nullspace_basis(Matrix m, int ncols, const NumericPolicy& policy);

/// Rank under the same pivot rule.
int rank(Matrix m, int ncols, const NumericPolicy& policy);

struct LeastSquares {
    std::vector<Complex> coeffs;
    double residual = 0.0;  // max-abs of target minus the fitted combination
};

/// Least-squares fit of target on the span of the given functions via the
/// normal equations. The basis must be linearly independent.
LeastSquares least_squares_fit(const std::vector<CFunction>& basis, const CFunction& target);

}  // namespace feqs::linalg
