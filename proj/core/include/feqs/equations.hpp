#pragma once

#include <optional>
#include <string>

#include "feqs/cfunction.hpp"
#include "feqs/linalg.hpp"
#include "feqs/measure.hpp"
#include "feqs/morphisms.hpp"
#include "feqs/semigroup.hpp"

namespace feqs {

enum class Sign { Plus, Minus };

/// One functional equation instance on a fixed semigroup:
///
///   sum_i c_i f((xy)z_i) +/- sum_i c_i f((sigma(y)x)z_i) = 2 f(x) g(y)
///
/// or, without a weighting measure,
///
///   f(xy) +/- f(sigma(y)x) = 2 f(x) g(y).
///
/// The constructor validates sigma (involutive automorphism) and the
/// weighting (central, distinct atoms) against the bound semigroup.
class EquationSpec {
public:
    EquationSpec(Semigroup binding, Sign sign, Automorphism sigma,
                 std::optional<DiracCombination> weighting);

    const Semigroup& binding() const { return binding_; }
    Sign sign() const { return sign_; }
    const Automorphism& sigma() const { return sigma_; }
    const std::optional<DiracCombination>& weighting() const { return weighting_; }
    bool has_measure() const { return weighting_.has_value(); }
    const DiracCombination& measure() const { return *weighting_; }

    double sign_factor() const { return sign_ == Sign::Plus ? 1.0 : -1.0; }

private:
    Semigroup binding_;
    Sign sign_;
    Automorphism sigma_;
    std::optional<DiracCombination> weighting_;
};

/// LHS(x, y) - 2 f(x) g(y) under the spec's sign and weighting.
Complex residual(const EquationSpec& spec, const CFunction& f, const CFunction& g, ElementId x,
                 ElementId y);

double residual_max(const EquationSpec& spec, const CFunction& f, const CFunction& g);

/// The n^2 x n homogeneous system (rows keyed (x, y), x-major) whose
/// solutions are exactly the f with residual_max(spec, f, g) = 0.
struct LinearSystem {
    int ncols = 0;
    linalg::Matrix rows;
};

LinearSystem assemble_linear_system(const EquationSpec& spec, const CFunction& g);

/// Row-reduced free-variable basis of the epsilon-nullspace; deterministic
/// pivot order. Throws linalg::IllConditioned when a pivot falls inside
/// (epsilon, 100 epsilon).
std::vector<CFunction> nullspace(const LinearSystem& sys, const NumericPolicy& policy);

}  // namespace feqs
