#include "feqs/families.hpp"

#include <algorithm>
#include <cmath>

#include "json_util.hpp"

namespace feqs {

std::string to_string(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::KW1: return "KW1";
        case FamilyTag::KW2: return "KW2";
        case FamilyTag::KW3: return "KW3";
        case FamilyTag::KW4: return "KW4";
        case FamilyTag::W2: return "W2";
        case FamilyTag::W3: return "W3";
        case FamilyTag::V2: return "V2";
        case FamilyTag::VV2: return "VV2";
        case FamilyTag::JEN: return "JEN";
        case FamilyTag::SYM2: return "SYM2";
        case FamilyTag::Unclassified: return "Unclassified";
    }
    return "?";
}

FamilyTag tag_of(const SolutionFamily& fam) {
    return std::visit(
        [](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, KW1>) return FamilyTag::KW1;
            else if constexpr (std::is_same_v<T, KW2>) return FamilyTag::KW2;
            else if constexpr (std::is_same_v<T, KW3>) return FamilyTag::KW3;
            else if constexpr (std::is_same_v<T, KW4>) return FamilyTag::KW4;
            else if constexpr (std::is_same_v<T, W2>) return FamilyTag::W2;
            else if constexpr (std::is_same_v<T, W3>) return FamilyTag::W3;
            else if constexpr (std::is_same_v<T, V2>) return FamilyTag::V2;
            else if constexpr (std::is_same_v<T, VV2>) return FamilyTag::VV2;
            else if constexpr (std::is_same_v<T, JEN>) return FamilyTag::JEN;
            else return FamilyTag::SYM2;
        },
        fam);
}

SideConditionViolated::SideConditionViolated(std::string condition, std::string witness)
    : FamilyError("side condition violated: " + condition +
                  (witness.empty() ? "" : " (" + witness + ")")),
      condition_(std::move(condition)),
      witness_(std::move(witness)) {}

SelfCheckFailed::SelfCheckFailed(double residual)
    : FamilyError("constructed pair failed its residual self-check: " + std::to_string(residual)),
      residual_(residual) {}

NotASolution::NotASolution(double residual)
    : FamilyError("pair is not a solution: residual " + std::to_string(residual)),
      residual_(residual) {}

namespace {

void require(bool cond, const char* name, const std::string& witness = "") {
    if (!cond) throw SideConditionViolated(name, witness);
}

bool sine_law_holds(const Semigroup& s, const CFunction& chi, const CFunction& phi, double eps) {
    for (int x = 0; x < s.order(); ++x)
        for (int y = 0; y < s.order(); ++y)
            if (std::abs(phi[s.at(x, y)] - phi[x] * chi[y] - phi[y] * chi[x]) > eps) return false;
    return true;
}

CFunction half_sum(const CFunction& a, const CFunction& b, double sign) {
    CFunction out = a;
    if (sign > 0)
        out += b;
    else
        out -= b;
    out *= 0.5;
    return out;
}

}  // namespace

std::vector<CFunction> odd_sine_basis(const Semigroup& s, const Automorphism& sigma,
                                      const Character& chi, const NumericPolicy& policy) {
    const std::vector<CFunction> sine = sine_addition_basis(s, chi, policy);
    if (sine.empty()) return {};
    const int k = static_cast<int>(sine.size());
    // solve for coefficient vectors u with sum_j u_j (phi_j + phi_j o sigma) = 0
    linalg::Matrix rows;
    for (int x = 0; x < s.order(); ++x) {
        linalg::Row r(k);
        for (int j = 0; j < k; ++j) r[j] = sine[j][x] + sine[j][sigma(x)];
        rows.push_back(std::move(r));
    }
    std::vector<CFunction> out;
    for (const auto& u : linalg::nullspace_basis(std::move(rows), k, policy)) {
        CFunction phi = CFunction::zeros(s.order());
        for (int j = 0; j < k; ++j) phi += u[j] * sine[j];
        out.push_back(std::move(phi));
    }
    return out;
}

std::vector<CFunction> admissible_sine_basis(const Semigroup& s, const Automorphism& sigma,
                                             const DiracCombination& mu, const Character& chi,
                                             const NumericPolicy& policy) {
    const std::vector<CFunction> sine = sine_addition_basis(s, chi, policy);
    if (sine.empty()) return {};
    const int k = static_cast<int>(sine.size());
    linalg::Matrix rows;
    for (int x = 0; x < s.order(); ++x) {
        linalg::Row r(k);
        for (int j = 0; j < k; ++j) r[j] = sine[j][x] + sine[j][sigma(x)];
        rows.push_back(std::move(r));
    }
    linalg::Row integral_row(k);
    for (int j = 0; j < k; ++j) integral_row[j] = integrate(mu, sine[j]);
    rows.push_back(std::move(integral_row));
    std::vector<CFunction> out;
    for (const auto& u : linalg::nullspace_basis(std::move(rows), k, policy)) {
        CFunction phi = CFunction::zeros(s.order());
        for (int j = 0; j < k; ++j) phi += u[j] * sine[j];
        out.push_back(std::move(phi));
    }
    return out;
}

SolutionPair build_family(const EquationSpec& spec, const SolutionFamily& fam,
                          const NumericPolicy& policy) {
    const Semigroup& s = spec.binding();
    const Automorphism& sigma = spec.sigma();
    const double eps = policy.epsilon;
    const int n = s.order();
    SolutionPair out;

    if (const auto* p = std::get_if<KW1>(&fam)) {
        require(p->g.size() == n, "GBoundToSemigroup");
        require(max_abs(p->g) > eps, "GNonzero");
        out.f = CFunction::zeros(n);
        out.g = p->g;
    } else if (const auto* p = std::get_if<KW2>(&fam)) {
        require(spec.sign() == Sign::Plus && spec.has_measure(), "RequiresWeightedPlusEquation");
        require(std::abs(p->lambda2) > eps, "Lambda2Nonzero");
        const CFunction& m = p->m.materialized;
        const Complex im = integrate(spec.measure(), m);
        require(std::abs(im) > eps, "IntegralMNonzero", "integral(m) = " + render_complex(im));
        out.f = p->lambda2 * m;
        out.g = im * half_sum(m, star(m, sigma), +1.0);
    } else if (const auto* p = std::get_if<KW3>(&fam)) {
        require(spec.sign() == Sign::Plus && spec.has_measure(), "RequiresWeightedPlusEquation");
        require(std::abs(p->alpha1) > eps || std::abs(p->beta1) > eps, "CoefficientsNonzero");
        const CFunction& chi = p->chi.materialized;
        const CFunction chis = star(chi, sigma);
        require(max_abs_diff(chi, chis) > eps, "ChiDistinctFromChiStar");
        const Complex ic = integrate(spec.measure(), chi);
        const Complex ics = integrate(spec.measure(), chis);
        require(std::abs(ic) > eps, "IntegralChiNonzero", "integral(chi) = " + render_complex(ic));
        require(std::abs(ic - ics) <= eps, "IntegralChiEqualsIntegralChiStar",
                render_complex(ic) + " vs " + render_complex(ics));
        out.f = p->alpha1 * chi + p->beta1 * chis;
        out.g = ic * half_sum(chi, chis, +1.0);
    } else if (const auto* p = std::get_if<KW4>(&fam)) {
        require(spec.sign() == Sign::Plus && spec.has_measure(), "RequiresWeightedPlusEquation");
        require(std::abs(p->lambda) > eps, "LambdaNonzero");
        const CFunction& chi = p->chi.materialized;
        require(max_abs(chi) > eps, "ChiNonzero");
        require(max_abs_diff(chi, star(chi, sigma)) <= eps, "ChiEven");
        require(max_abs(p->phi) > eps, "PhiNonzero");
        require(sine_law_holds(s, chi, p->phi, eps), "PhiSolvesSineAdditionLaw");
        require(max_abs_diff(star(p->phi, sigma), -p->phi) <= eps, "PhiOdd");
        const Complex ic = integrate(spec.measure(), chi);
        require(std::abs(ic) > eps, "IntegralChiNonzero", "integral(chi) = " + render_complex(ic));
        const Complex ip = integrate(spec.measure(), p->phi);
        require(std::abs(ip) <= eps, "IntegralPhiZero", "integral(phi) = " + render_complex(ip));
        out.f = p->lambda * (p->gamma1 * chi + p->phi);
        out.g = ic * chi;
    } else if (const auto* p = std::get_if<W2>(&fam)) {
        require(spec.sign() == Sign::Plus && !spec.has_measure(), "RequiresUnweightedPlusEquation");
        require(std::abs(p->alpha) > eps || std::abs(p->beta) > eps, "CoefficientsNonzero");
        const CFunction& chi = p->chi.materialized;
        require(max_abs(chi) > eps, "ChiNonzero");
        const CFunction chis = star(chi, sigma);
        out.f = p->alpha * chi + p->beta * chis;
        out.g = half_sum(chi, chis, +1.0);
    } else if (const auto* p = std::get_if<W3>(&fam)) {
        require(spec.sign() == Sign::Plus && !spec.has_measure(), "RequiresUnweightedPlusEquation");
        const CFunction& chi = p->chi.materialized;
        require(max_abs(chi) > eps, "ChiNonzero");
        require(max_abs_diff(chi, star(chi, sigma)) <= eps, "ChiEven");
        require(max_abs(p->phi) > eps, "PhiNonzero");
        require(sine_law_holds(s, chi, p->phi, eps), "PhiSolvesSineAdditionLaw");
        require(max_abs_diff(star(p->phi, sigma), -p->phi) <= eps, "PhiOdd");
        out.f = p->gamma1 * chi + p->phi;
        out.g = chi;
    } else if (const auto* p = std::get_if<V2>(&fam)) {
        require(spec.sign() == Sign::Minus && !spec.has_measure(),
                "RequiresUnweightedMinusEquation");
        require(std::abs(p->lambda) > eps, "LambdaNonzero");
        const CFunction& chi = p->chi.materialized;
        const CFunction chis = star(chi, sigma);
        require(max_abs_diff(chi, chis) > eps, "ChiDistinctFromChiStar");
        out.f = p->lambda * chi;
        out.g = half_sum(chi, chis, -1.0);
    } else if (const auto* p = std::get_if<VV2>(&fam)) {
        require(spec.sign() == Sign::Minus && spec.has_measure(), "RequiresWeightedMinusEquation");
        require(std::abs(p->alpha1) > eps || std::abs(p->alpha2) > eps, "CoefficientsNonzero");
        const CFunction& chi = p->chi.materialized;
        const CFunction chis = star(chi, sigma);
        require(max_abs_diff(chi, chis) > eps, "ChiDistinctFromChiStar");
        const Complex ic = integrate(spec.measure(), chi);
        const Complex ics = integrate(spec.measure(), chis);
        require(std::abs(ic) > eps, "IntegralChiNonzero", "integral(chi) = " + render_complex(ic));
        require(std::abs(ic + ics) <= eps, "IntegralChiOppositeToIntegralChiStar",
                render_complex(ic) + " vs " + render_complex(ics));
        out.f = p->alpha1 * chi + p->alpha2 * chis;
        out.g = ic * half_sum(chi, chis, -1.0);
    } else if (const auto* p = std::get_if<JEN>(&fam)) {
        require(spec.sign() == Sign::Plus && spec.has_measure() && spec.measure().is_unit_dirac(),
                "RequiresUnitDiracPlusEquation");
        if (p->A.size() != 0) {
            require(p->A.size() == n, "ABoundToSemigroup");
            // finite semigroups admit no nonzero additive function
            require(max_abs(p->A) <= eps, "NoNonzeroAdditive");
        }
        out.f = CFunction::constant(n, p->gamma1);
        out.g = CFunction::ones(n);
    } else if (const auto* p = std::get_if<SYM2>(&fam)) {
        require(spec.sign() == Sign::Plus && spec.has_measure() && spec.measure().is_unit_dirac(),
                "RequiresUnitDiracPlusEquation");
        require(sigma.is_identity(), "RequiresIdentitySigma");
        require(std::abs(p->lambda2) > eps, "Lambda2Nonzero");
        const CFunction& chi = p->chi.materialized;
        require(max_abs(chi) > eps, "ChiNonzero");
        const Complex chiz0 = chi[spec.measure().z0()];
        require(std::abs(chiz0) > eps, "ChiAtZ0Nonzero");
        out.f = p->lambda2 * chi;
        out.g = chiz0 * chi;
    }

    const double res = residual_max(spec, out.f, out.g);
    if (res > eps) throw SelfCheckFailed(res);
    return out;
}

ReductionResult reduce(const EquationSpec& spec, const CFunction& f, const CFunction& g,
                       const NumericPolicy& policy) {
    if (!spec.has_measure())
        throw std::invalid_argument("reduce: requires a measure-weighted equation");
    const double eps = policy.epsilon;
    const double res = residual_max(spec, f, g);
    if (res > eps) throw NotASolution(res);
    if (max_abs(f) <= eps) throw ZeroFunction("reduce: f vanishes");
    if (max_abs(g) <= eps) throw ZeroFunction("reduce: g vanishes");

    const Semigroup& s = spec.binding();
    ReductionResult out;
    out.h = smear(s, spec.measure(), f);
    const Complex ig = integrate(spec.measure(), g);
    if (std::abs(ig) > eps) {
        out.degenerate = false;
        out.F = (1.0 / ig) * out.h;
        CFunction gs = smear(s, spec.measure(), g);
        const CFunction gss = smear_sigma(s, spec.sigma(), spec.measure(), g);
        if (spec.sign() == Sign::Plus)
            gs += gss;
        else
            gs -= gss;
        out.G = (0.5 / ig) * gs;
        // both branches reduce to the unweighted plus equation
        const EquationSpec reduced(s, Sign::Plus, spec.sigma(), std::nullopt);
        const double dev = residual_max(reduced, out.F, out.G);
        if (dev > 10.0 * eps)
            throw FamilyError("reduce: reduced pair violates its defining identity, deviation " +
                              std::to_string(dev));
        if (max_abs(out.G) <= eps) throw FamilyError("reduce: reduced G vanishes");
    } else {
        out.degenerate = true;
        int argmax = 0;
        for (int x = 1; x < s.order(); ++x)
            if (std::abs(f[x]) > std::abs(f[argmax])) argmax = x;
        out.lambda1 = out.h[argmax] / f[argmax];
        CFunction dev = out.h;
        dev -= out.lambda1 * f;
        if (max_abs(dev) > 10.0 * eps)
            throw LambdaNotFound("reduce: smear(mu, f) is not proportional to f, deviation " +
                                 std::to_string(max_abs(dev)));
        if (std::abs(out.lambda1) <= eps)
            throw LambdaNotFound("reduce: proportionality constant vanishes");
    }
    return out;
}

DependenceCheck check_linear_dependence(const Semigroup& s, const CFunction& F, const CFunction& G,
                                        const NumericPolicy& policy) {
    for (int x = 0; x < s.order(); ++x)
        for (int y = 0; y < s.order(); ++y) {
            const Complex lhs = F[s.at(x, y)];
            const Complex rhs = F[x] * G[y] - F[y] * G[x];
            if (std::abs(lhs - rhs) > policy.epsilon)
                return {DependenceCheck::Status::HypothesisFails, x, y, lhs - rhs};
        }
    for (int x = 0; x < s.order(); ++x)
        for (int y = x + 1; y < s.order(); ++y) {
            const Complex minor = F[x] * G[y] - F[y] * G[x];
            if (std::abs(minor) > policy.epsilon)
                return {DependenceCheck::Status::Counterexample, x, y, minor};
        }
    return {};
}

namespace {

struct Matcher {
    const EquationSpec& spec;
    const CFunction& f;
    const CFunction& g;
    const std::vector<Character>& chars;
    const NumericPolicy& policy;
    double tol;  // fit acceptance: 10 * epsilon

    bool g_matches(const CFunction& gfam) const { return max_abs_diff(g, gfam) <= tol; }

    bool try_family(FamilyTag tag, FamilyMatch& m) const {
        switch (tag) {
            case FamilyTag::KW1: return try_kw1(m);
            case FamilyTag::KW2: return try_kw2(m);
            case FamilyTag::KW3: return try_kw3(m);
            case FamilyTag::KW4: return try_kw4(m);
            case FamilyTag::W2: return try_w2(m);
            case FamilyTag::W3: return try_w3(m);
            case FamilyTag::V2: return try_v2(m);
            case FamilyTag::VV2: return try_vv2(m);
            case FamilyTag::JEN: return try_jen(m);
            case FamilyTag::SYM2: return try_sym2(m);
            default: return false;
        }
    }

    bool try_kw1(FamilyMatch& m) const {
        if (max_abs(f) > policy.epsilon || max_abs(g) <= policy.epsilon) return false;
        m.tag = FamilyTag::KW1;
        m.fit_residual = max_abs(f);
        return true;
    }

    bool try_kw2(FamilyMatch& m) const {
        const double eps = policy.epsilon;
        for (size_t i = 0; i < chars.size(); ++i) {
            const CFunction& cm = chars[i].materialized;
            if (max_abs(cm) <= eps) continue;
            const Complex im = integrate(spec.measure(), cm);
            if (std::abs(im) <= eps) continue;
            if (!g_matches(im * half_sum(cm, star(cm, spec.sigma()), +1.0))) continue;
            const auto fit = linalg::least_squares_fit({cm}, f);
            if (fit.residual > tol || std::abs(fit.coeffs[0]) <= eps) continue;
            m.tag = FamilyTag::KW2;
            m.character = static_cast<int>(i);
            m.params = {{"lambda2", fit.coeffs[0]}};
            m.fit_residual = fit.residual;
            return true;
        }
        return false;
    }

    bool try_kw3(FamilyMatch& m) const {
        const double eps = policy.epsilon;
        for (size_t i = 0; i < chars.size(); ++i) {
            const CFunction& chi = chars[i].materialized;
            const CFunction chis = star(chi, spec.sigma());
            if (max_abs_diff(chi, chis) <= eps) continue;
            const Complex ic = integrate(spec.measure(), chi);
            const Complex ics = integrate(spec.measure(), chis);
            if (std::abs(ic) <= eps || std::abs(ic - ics) > eps) continue;
            if (!g_matches(ic * half_sum(chi, chis, +1.0))) continue;
            const auto fit = linalg::least_squares_fit({chi, chis}, f);
            if (fit.residual > tol) continue;
            if (std::abs(fit.coeffs[0]) <= eps && std::abs(fit.coeffs[1]) <= eps) continue;
            m.tag = FamilyTag::KW3;
            m.character = static_cast<int>(i);
            m.params = {{"alpha1", fit.coeffs[0]}, {"beta1", fit.coeffs[1]}};
            m.fit_residual = fit.residual;
            return true;
        }
        return false;
    }

    bool try_kw4(FamilyMatch& m) const {
        const double eps = policy.epsilon;
        for (size_t i = 0; i < chars.size(); ++i) {
            const CFunction& chi = chars[i].materialized;
            if (max_abs(chi) <= eps) continue;
            if (max_abs_diff(chi, star(chi, spec.sigma())) > eps) continue;
            const Complex ic = integrate(spec.measure(), chi);
            if (std::abs(ic) <= eps) continue;
            if (!g_matches(ic * chi)) continue;
            const auto adm = admissible_sine_basis(spec.binding(), spec.sigma(), spec.measure(),
                                                   chars[i], policy);
            if (adm.empty()) continue;
            std::vector<CFunction> basis{chi};
            basis.insert(basis.end(), adm.begin(), adm.end());
            const auto fit = linalg::least_squares_fit(basis, f);
            if (fit.residual > tol) continue;
            CFunction phi = CFunction::zeros(f.size());
            for (size_t j = 0; j < adm.size(); ++j) phi += fit.coeffs[j + 1] * adm[j];
            if (max_abs(phi) <= eps) continue;  // no sine component: that is family (2)
            m.tag = FamilyTag::KW4;
            m.character = static_cast<int>(i);
            m.params = {{"lambda", 1.0}, {"gamma1", fit.coeffs[0]}};
            m.phi = std::move(phi);
            m.fit_residual = fit.residual;
            return true;
        }
        return false;
    }

    bool try_w2(FamilyMatch& m) const {
        const double eps = policy.epsilon;
        for (size_t i = 0; i < chars.size(); ++i) {
            const CFunction& chi = chars[i].materialized;
            if (max_abs(chi) <= eps) continue;
            const CFunction chis = star(chi, spec.sigma());
            if (!g_matches(half_sum(chi, chis, +1.0))) continue;
            const bool even = max_abs_diff(chi, chis) <= eps;
            const auto fit = even ? linalg::least_squares_fit({chi}, f)
                                  : linalg::least_squares_fit({chi, chis}, f);
            if (fit.residual > tol) continue;
            const Complex alpha = fit.coeffs[0];
            const Complex beta = even ? Complex(0.0) : fit.coeffs[1];
            if (std::abs(alpha) <= eps && std::abs(beta) <= eps) continue;
            m.tag = FamilyTag::W2;
            m.character = static_cast<int>(i);
            m.params = {{"alpha", alpha}, {"beta", beta}};
            m.fit_residual = fit.residual;
            return true;
        }
        return false;
    }

    bool try_w3(FamilyMatch& m) const {
        const double eps = policy.epsilon;
        for (size_t i = 0; i < chars.size(); ++i) {
            const CFunction& chi = chars[i].materialized;
            if (max_abs(chi) <= eps) continue;
            if (max_abs_diff(chi, star(chi, spec.sigma())) > eps) continue;
            if (!g_matches(chi)) continue;
            const auto odd = odd_sine_basis(spec.binding(), spec.sigma(), chars[i], policy);
            if (odd.empty()) continue;
            std::vector<CFunction> basis{chi};
            basis.insert(basis.end(), odd.begin(), odd.end());
            const auto fit = linalg::least_squares_fit(basis, f);
            if (fit.residual > tol) continue;
            CFunction phi = CFunction::zeros(f.size());
            for (size_t j = 0; j < odd.size(); ++j) phi += fit.coeffs[j + 1] * odd[j];
            if (max_abs(phi) <= eps) continue;
            m.tag = FamilyTag::W3;
            m.character = static_cast<int>(i);
            m.params = {{"gamma1", fit.coeffs[0]}};
            m.phi = std::move(phi);
            m.fit_residual = fit.residual;
            return true;
        }
        return false;
    }

    bool try_v2(FamilyMatch& m) const {
        const double eps = policy.epsilon;
        for (size_t i = 0; i < chars.size(); ++i) {
            const CFunction& chi = chars[i].materialized;
            const CFunction chis = star(chi, spec.sigma());
            if (max_abs_diff(chi, chis) <= eps) continue;
            if (!g_matches(half_sum(chi, chis, -1.0))) continue;
            const auto fit = linalg::least_squares_fit({chi}, f);
            if (fit.residual > tol || std::abs(fit.coeffs[0]) <= eps) continue;
            m.tag = FamilyTag::V2;
            m.character = static_cast<int>(i);
            m.params = {{"lambda", fit.coeffs[0]}};
            m.fit_residual = fit.residual;
            return true;
        }
        return false;
    }

    bool try_vv2(FamilyMatch& m) const {
        const double eps = policy.epsilon;
        for (size_t i = 0; i < chars.size(); ++i) {
            const CFunction& chi = chars[i].materialized;
            const CFunction chis = star(chi, spec.sigma());
            if (max_abs_diff(chi, chis) <= eps) continue;
            const Complex ic = integrate(spec.measure(), chi);
            const Complex ics = integrate(spec.measure(), chis);
            if (std::abs(ic) <= eps || std::abs(ic + ics) > eps) continue;
            if (!g_matches(ic * half_sum(chi, chis, -1.0))) continue;
            const auto fit = linalg::least_squares_fit({chi, chis}, f);
            if (fit.residual > tol) continue;
            if (std::abs(fit.coeffs[0]) <= eps && std::abs(fit.coeffs[1]) <= eps) continue;
            m.tag = FamilyTag::VV2;
            m.character = static_cast<int>(i);
            m.params = {{"alpha1", fit.coeffs[0]}, {"alpha2", fit.coeffs[1]}};
            m.fit_residual = fit.residual;
            return true;
        }
        return false;
    }

    bool try_jen(FamilyMatch& m) const {
        if (!spec.has_measure() || !spec.measure().is_unit_dirac() || spec.sign() != Sign::Plus)
            return false;
        if (!g_matches(CFunction::ones(g.size()))) return false;
        const Complex gamma1 = f[spec.measure().z0()];
        CFunction a = f;
        a -= CFunction::constant(f.size(), gamma1);
        // finite semigroups force A = 0, so f must be the constant gamma1
        if (max_abs(a) > tol) return false;
        m.tag = FamilyTag::JEN;
        m.params = {{"gamma1", gamma1}};
        m.fit_residual = max_abs(a);
        return true;
    }

    bool try_sym2(FamilyMatch& m) const {
        const double eps = policy.epsilon;
        if (!spec.has_measure() || !spec.measure().is_unit_dirac() || spec.sign() != Sign::Plus)
            return false;
        if (!spec.sigma().is_identity()) return false;
        for (size_t i = 0; i < chars.size(); ++i) {
            const CFunction& chi = chars[i].materialized;
            if (max_abs(chi) <= eps) continue;
            const Complex chiz0 = chi[spec.measure().z0()];
            if (std::abs(chiz0) <= eps) continue;
            if (!g_matches(chiz0 * chi)) continue;
            const auto fit = linalg::least_squares_fit({chi}, f);
            if (fit.residual > tol || std::abs(fit.coeffs[0]) <= eps) continue;
            m.tag = FamilyTag::SYM2;
            m.character = static_cast<int>(i);
            m.params = {{"lambda2", fit.coeffs[0]}};
            m.fit_residual = fit.residual;
            return true;
        }
        return false;
    }
};

}  // namespace

FamilyMatch classify(const EquationSpec& spec, const CFunction& f, const CFunction& g,
                     const std::vector<Character>& characters, const NumericPolicy& policy) {
    const double res = residual_max(spec, f, g);
    if (res > policy.epsilon) throw NotASolution(res);

    std::vector<FamilyTag> order;
    if (spec.sign() == Sign::Plus && spec.has_measure())
        order = {FamilyTag::KW1, FamilyTag::KW2, FamilyTag::KW3, FamilyTag::KW4, FamilyTag::JEN,
                 FamilyTag::SYM2};
    else if (spec.sign() == Sign::Plus)
        order = {FamilyTag::KW1, FamilyTag::W2, FamilyTag::W3};
    else if (spec.has_measure())
        order = {FamilyTag::KW1, FamilyTag::VV2};
    else
        order = {FamilyTag::KW1, FamilyTag::V2};

    Matcher matcher{spec, f, g, characters, policy, 10.0 * policy.epsilon};
    FamilyMatch result;
    std::vector<FamilyTag> matched;
    for (FamilyTag tag : order) {
        FamilyMatch attempt;
        if (matcher.try_family(tag, attempt)) {
            matched.push_back(tag);
            if (result.tag == FamilyTag::Unclassified) result = std::move(attempt);
        }
    }
    result.all_tags = std::move(matched);
    return result;
}

SolutionFamily parse_family_json(const Semigroup& s, const std::vector<Character>& characters,
                                 const std::string& json_text) {
    const detail::Json doc = detail::parse_json(json_text);
    if (!doc.is_object() || !doc.contains("family"))
        throw ParseError("family: expected an object with a \"family\" field", 1, 1);
    const std::string name = doc["family"].get<std::string>();

    auto complex_field = [&](const char* key, bool required, Complex fallback) -> Complex {
        if (!doc.contains(key)) {
            if (required) throw ParseError(std::string("family: missing field \"") + key + "\"", 1, 1);
            return fallback;
        }
        const auto& v = doc[key];
        if (v.is_number()) return {v.get<double>(), 0.0};
        if (v.is_string()) return parse_complex(v.get<std::string>());
        if (v.is_object()) return {v.value("re", 0.0), v.value("im", 0.0)};
        throw ParseError(std::string("family: field \"") + key + "\" must be a complex value", 1, 1);
    };
    auto character_field = [&](const char* key) -> Character {
        if (!doc.contains(key) || !doc[key].is_number_integer())
            throw ParseError(std::string("family: missing character index \"") + key + "\"", 1, 1);
        const int idx = doc[key].get<int>();
        if (idx < 0 || idx >= static_cast<int>(characters.size()))
            throw ParseError("family: character index out of range", 1, 1);
        return characters[idx];
    };
    auto function_field = [&](const char* key, bool required) -> CFunction {
        if (!doc.contains(key)) {
            if (required) throw ParseError(std::string("family: missing field \"") + key + "\"", 1, 1);
            return CFunction::zeros(s.order());
        }
        const CFunction f = parse_cfunction(doc[key].get<std::string>());
        if (f.size() != s.order())
            throw ParseError(std::string("family: field \"") + key + "\" has wrong length", 1, 1);
        return f;
    };

    if (name == "KW1") return KW1{function_field("g", true)};
    if (name == "KW2") return KW2{character_field("m"), complex_field("lambda2", true, 0.0)};
    if (name == "KW3")
        return KW3{character_field("chi"), complex_field("alpha1", true, 0.0),
                   complex_field("beta1", true, 0.0)};
    if (name == "KW4")
        return KW4{character_field("chi"), function_field("phi", true),
                   complex_field("lambda", true, 0.0), complex_field("gamma1", false, 0.0)};
    if (name == "W2")
        return W2{character_field("chi"), complex_field("alpha", true, 0.0),
                  complex_field("beta", true, 0.0)};
    if (name == "W3")
        return W3{character_field("chi"), function_field("phi", true),
                  complex_field("gamma1", false, 0.0)};
    if (name == "V2") return V2{character_field("chi"), complex_field("lambda", true, 0.0)};
    if (name == "VV2")
        return VV2{character_field("chi"), complex_field("alpha1", true, 0.0),
                   complex_field("alpha2", true, 0.0)};
    if (name == "JEN") return JEN{complex_field("gamma1", true, 0.0), function_field("A", false)};
    if (name == "SYM2") return SYM2{character_field("chi"), complex_field("lambda2", true, 0.0)};
    throw ParseError("family: unknown family \"" + name + "\"", 1, 1);
}

}  // namespace feqs
