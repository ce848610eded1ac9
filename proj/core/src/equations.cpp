#include "feqs/equations.hpp"

#include <stdexcept>

namespace feqs {

EquationSpec::EquationSpec(Semigroup binding, Sign sign, Automorphism sigma,
                           std::optional<DiracCombination> weighting)
    : binding_(std::move(binding)),
      sign_(sign),
      sigma_(std::move(sigma)),
      weighting_(std::move(weighting)) {
    const MorphismCheck mcheck = validate_involutive_automorphism(binding_, sigma_.perm);
    if (!mcheck.ok()) throw std::invalid_argument("equation spec: invalid sigma");
    sigma_.involutive = true;
    if (weighting_) {
        const MeasureCheck wcheck = validate_measure(binding_, *weighting_);
        if (!wcheck.ok()) throw std::invalid_argument("equation spec: invalid measure");
    }
}

Complex residual(const EquationSpec& spec, const CFunction& f, const CFunction& g, ElementId x,
                 ElementId y) {
    const Semigroup& s = spec.binding();
    const ElementId q1 = s.at(x, y);
    const ElementId q2 = s.at(spec.sigma()(y), x);
    Complex lhs;
    if (spec.has_measure()) {
        lhs = 0.0;
        for (const auto& atom : spec.measure().atoms)
            lhs += atom.c * (f[s.at(q1, atom.z)] + spec.sign_factor() * f[s.at(q2, atom.z)]);
    } else {
        lhs = f[q1] + spec.sign_factor() * f[q2];
    }
    return lhs - 2.0 * f[x] * g[y];
}

double residual_max(const EquationSpec& spec, const CFunction& f, const CFunction& g) {
    double m = 0.0;
    for (int x = 0; x < spec.binding().order(); ++x)
        for (int y = 0; y < spec.binding().order(); ++y)
            m = std::max(m, std::abs(residual(spec, f, g, x, y)));
    return m;
}

LinearSystem assemble_linear_system(const EquationSpec& spec, const CFunction& g) {
    const Semigroup& s = spec.binding();
    const int n = s.order();
    LinearSystem sys;
    sys.ncols = n;
    sys.rows.reserve(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            linalg::Row row(n, 0.0);
            const ElementId q1 = s.at(x, y);
            const ElementId q2 = s.at(spec.sigma()(y), x);
            if (spec.has_measure()) {
                for (const auto& atom : spec.measure().atoms) {
                    row[s.at(q1, atom.z)] += atom.c;
                    row[s.at(q2, atom.z)] += spec.sign_factor() * atom.c;
                }
            } else {
                row[q1] += 1.0;
                row[q2] += spec.sign_factor();
            }
            row[x] -= 2.0 * g[y];
            sys.rows.push_back(std::move(row));
        }
    }
    return sys;
}

std::vector<CFunction> nullspace(const LinearSystem& sys, const NumericPolicy& policy) {
    std::vector<CFunction> basis;
    for (auto& v : linalg::nullspace_basis(sys.rows, sys.ncols, policy))
        basis.emplace_back(std::move(v));
    return basis;
}

}  // namespace feqs
