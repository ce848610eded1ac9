#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "feqs/characters.hpp"
#include "feqs/equations.hpp"

namespace feqs {

// Solution family parameter records. Each stores only parameters; the
// realization into an (f, g) pair and the side-condition checks live in
// build_family.

/// f = 0, g != 0 arbitrary. The degenerate family shared by every variant.
struct KW1 {
    CFunction g;
};
/// Weighted plus: f = lambda2 * m, g = integral(m) * (m + m*)/2.
struct KW2 {
    Character m;
    Complex lambda2;
};
/// Weighted plus: f = alpha1 chi + beta1 chi*, g = integral(chi) (chi + chi*)/2.
struct KW3 {
    Character chi;
    Complex alpha1, beta1;
};
/// Weighted plus: f = lambda (gamma1 chi + phi), g = integral(chi) * chi.
struct KW4 {
    Character chi;
    CFunction phi;
    Complex lambda, gamma1;
};
/// Unweighted plus: f = alpha chi + beta chi*, g = (chi + chi*)/2.
struct W2 {
    Character chi;
    Complex alpha, beta;
};
/// Unweighted plus: f = gamma1 chi + phi, g = chi.
struct W3 {
    Character chi;
    CFunction phi;
    Complex gamma1;
};
/// Unweighted minus: f = lambda chi, g = (chi - chi*)/2.
struct V2 {
    Character chi;
    Complex lambda;
};
/// Weighted minus: f = alpha1 chi + alpha2 chi*, g = integral(chi) (chi - chi*)/2.
struct VV2 {
    Character chi;
    Complex alpha1, alpha2;
};
/// Jensen (g fixed to 1, unit atom at z0): f = gamma1 + A, A additive and
/// odd with A(z0) = 0. Finite semigroups admit only A = 0.
struct JEN {
    Complex gamma1;
    CFunction A;
};
/// Symmetrized (sigma = id, unit atom at z0): f = lambda2 chi, g = chi(z0) chi.
struct SYM2 {
    Character chi;
    Complex lambda2;
};

using SolutionFamily = std::variant<KW1, KW2, KW3, KW4, W2, W3, V2, VV2, JEN, SYM2>;

enum class FamilyTag { KW1, KW2, KW3, KW4, W2, W3, V2, VV2, JEN, SYM2, Unclassified };

std::string to_string(FamilyTag tag);
FamilyTag tag_of(const SolutionFamily& fam);

struct SolutionPair {
    CFunction f, g;
};

class FamilyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SideConditionViolated : public FamilyError {
public:
    SideConditionViolated(std::string condition, std::string witness);
    const std::string& condition() const { return condition_; }
    const std::string& witness() const { return witness_; }

private:
    std::string condition_, witness_;
};

/// A constructed pair failed its own residual check: an implementation bug,
/// never an expected outcome.
class SelfCheckFailed : public FamilyError {
public:
    explicit SelfCheckFailed(double residual);
    double residual() const { return residual_; }

private:
    double residual_;
};

class NotASolution : public FamilyError {
public:
    explicit NotASolution(double residual);
    double residual() const { return residual_; }

private:
    double residual_;
};

class ZeroFunction : public FamilyError {
public:
    using FamilyError::FamilyError;
};

/// The degenerate reduction branch found no scalar with h = lambda1 * f.
/// Signals a violated reduction identity; tests must fail loudly on it.
class LambdaNotFound : public FamilyError {
public:
    using FamilyError::FamilyError;
};

/// Realizes the family into (f, g), enforcing its side conditions, then
/// self-checks residual_max(spec, f, g) <= epsilon.
SolutionPair build_family(const EquationSpec& spec, const SolutionFamily& fam,
                          const NumericPolicy& policy);

/// Output of the measure-weighted reduction: with nonzero integral(g) the
/// smeared pair (F, G) satisfies F(xy) + F(sigma(y)x) = 2 F(x) G(y); with
/// zero integral a scalar lambda1 != 0 has smear(mu, f) = lambda1 * f.
struct ReductionResult {
    CFunction h;
    bool degenerate = false;
    CFunction F, G;   // non-degenerate branch (G carries the sign-matched form)
    Complex lambda1;  // degenerate branch
};

ReductionResult reduce(const EquationSpec& spec, const CFunction& f, const CFunction& g,
                       const NumericPolicy& policy);

struct DependenceCheck {
    enum class Status { Ok, HypothesisFails, Counterexample };
    Status status = Status::Ok;
    ElementId x = 0, y = 0;
    Complex minor = 0.0;

    bool ok() const { return status == Status::Ok; }
};

/// If (F, G) satisfies F(xy) = F(x)G(y) - F(y)G(x) within epsilon, verifies
/// that F and G are linearly dependent (all 2x2 minors vanish).
DependenceCheck check_linear_dependence(const Semigroup& s, const CFunction& F, const CFunction& G,
                                        const NumericPolicy& policy);

struct FamilyMatch {
    FamilyTag tag = FamilyTag::Unclassified;
    std::vector<FamilyTag> all_tags;  // every family that fits, canonical order
    int character = -1;               // index into the supplied character list
    std::vector<std::pair<std::string, Complex>> params;
    CFunction phi;  // fitted sine-law component (KW4 / W3)
    double fit_residual = 0.0;

    bool classified() const { return tag != FamilyTag::Unclassified; }
};

/// Maps a verified solution pair back to the first matching family in
/// canonical order (KW1, KW2, KW3, KW4 for the weighted plus equation, and
/// analogously per variant). Parameters are fitted by least squares with the
/// side conditions re-checked; fit residual above 10*epsilon rejects the
/// family. Unclassified output signals a bug or a genuine gap and must be
/// surfaced by callers.
FamilyMatch classify(const EquationSpec& spec, const CFunction& f, const CFunction& g,
                     const std::vector<Character>& characters, const NumericPolicy& policy);

/// Subspace of sine_addition_basis with star(phi) = -phi.
std::vector<CFunction> odd_sine_basis(const Semigroup& s, const Automorphism& sigma,
                                      const Character& chi, const NumericPolicy& policy);

/// Odd sine-law solutions with integral(mu, phi) = 0: the phi admissible in
/// the weighted plus family (4).
std::vector<CFunction> admissible_sine_basis(const Semigroup& s, const Automorphism& sigma,
                                             const DiracCombination& mu, const Character& chi,
                                             const NumericPolicy& policy);

/// Parses the CLI family document, e.g.
/// {"family":"KW2","m":1,"lambda2":{"re":3,"im":0}}. Character fields are
/// indices into enumerate_multiplicative order; complex fields accept a
/// number or {"re":..,"im":..}; phi/A/g accept function literals.
SolutionFamily parse_family_json(const Semigroup& s, const std::vector<Character>& characters,
                                 const std::string& json_text);

}  // namespace feqs
