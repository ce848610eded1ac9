#include "feqs/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

#include "feqs/characters.hpp"
#include "feqs/equations.hpp"
#include "feqs/families.hpp"
#include "feqs/random.hpp"
#include "feqs/version.hpp"
#include "json_util.hpp"

namespace feqs {

namespace {

using detail::Json;

// parameter grid for the converse-direction sweeps
const std::vector<Complex> kGrid = {{1, 0}, {-1, 0}, {2, 0}, {0, 1}, {1, 1}};
const std::vector<Complex> kGridWithZero = {{0, 0}, {1, 0}, {-1, 0}, {2, 0}, {0, 1}, {1, 1}};

struct Ctx {
    const CorpusEntry& entry;
    const Automorphism& sigma;
    const std::vector<Character>& chars;
    NumericPolicy policy;
    std::uint64_t seed;
};

struct Built {
    FamilyTag built = FamilyTag::Unclassified;
    FamilyTag expected = FamilyTag::Unclassified;
    SolutionPair pair;
};

std::string sigma_label(const Automorphism& sigma) { return render_sigma_spec(sigma); }

/// Collector that times each check and accumulates the records.
class Checks {
public:
    explicit Checks(Report& report) : report_(report) {}

    /// fn fills witness/residual and returns pass/fail; exceptions fail the
    /// check with the message as witness.
    void run(const std::string& name,
             const std::function<bool(Json& witness, std::optional<double>& residual)>& fn) {
        CheckRecord rec;
        rec.name = name;
        const auto start = std::chrono::steady_clock::now();
        Json witness;
        std::optional<double> residual;
        try {
            rec.status = fn(witness, residual) ? CheckStatus::Pass : CheckStatus::Fail;
        } catch (const std::exception& e) {
            rec.status = CheckStatus::Fail;
            witness = Json{{"error", e.what()}};
        }
        rec.ms = static_cast<int>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                      std::chrono::steady_clock::now() - start)
                                      .count());
        if (!witness.is_null()) rec.witness_json = witness.dump();
        rec.residual = residual;
        report_.checks.push_back(std::move(rec));
    }

    void skip(const std::string& name, const std::string& why) {
        CheckRecord rec;
        rec.name = name;
        rec.status = CheckStatus::Skip;
        rec.witness_json = Json{{"reason", why}}.dump();
        report_.checks.push_back(std::move(rec));
    }

private:
    Report& report_;
};

// ---------------------------------------------------------------------------
// family sweeps (converse directions)

enum class SweepKind { TheoremFamilies, Jensen, Symmetrized };

void push_built(std::vector<Built>& out, const EquationSpec& spec, const SolutionFamily& fam,
                FamilyTag expected, const NumericPolicy& policy) {
    Built b;
    b.built = tag_of(fam);
    b.expected = expected;
    b.pair = build_family(spec, fam, policy);
    // a pair whose f collapses to zero (alpha chi + beta chi* with chi = chi*
    // and alpha = -beta) belongs to the degenerate family
    if (max_abs(b.pair.f) <= policy.epsilon) b.expected = FamilyTag::KW1;
    out.push_back(std::move(b));
}

/// All admissible family instances for the spec over the parameter grid.
/// Side conditions are evaluated here so only admissible constructions are
/// attempted; build_family re-checks them.
std::vector<Built> sweep_families(const EquationSpec& spec, const Ctx& ctx, SweepKind kind) {
    const double eps = ctx.policy.epsilon;
    const Automorphism& sigma = spec.sigma();
    std::vector<Built> out;

    if (kind == SweepKind::Jensen) {
        for (const Complex& gamma1 : kGridWithZero) {
            const FamilyTag expected =
                std::abs(gamma1) <= eps ? FamilyTag::KW1 : FamilyTag::KW2;
            push_built(out, spec, JEN{gamma1, CFunction()}, expected, ctx.policy);
        }
        return out;
    }
    if (kind == SweepKind::Symmetrized) {
        const ElementId z0 = spec.measure().z0();
        for (const Character& chi : ctx.chars) {
            if (max_abs(chi.materialized) <= eps) continue;
            if (std::abs(chi.materialized[z0]) <= eps) continue;
            for (const Complex& l2 : kGrid)
                push_built(out, spec, SYM2{chi, l2}, FamilyTag::KW2, ctx.policy);
        }
        return out;
    }

    if (spec.sign() == Sign::Plus && spec.has_measure()) {
        const DiracCombination& mu = spec.measure();
        for (const Character& m : ctx.chars) {
            if (std::abs(integrate(mu, m.materialized)) <= eps) continue;
            for (const Complex& l2 : kGrid)
                push_built(out, spec, KW2{m, l2}, FamilyTag::KW2, ctx.policy);
        }
        for (const Character& chi : ctx.chars) {
            const CFunction chis = star(chi.materialized, sigma);
            if (max_abs_diff(chi.materialized, chis) <= eps) continue;
            const Complex ic = integrate(mu, chi.materialized);
            if (std::abs(ic) <= eps || std::abs(ic - integrate(mu, chis)) > eps) continue;
            for (const Complex& a1 : kGridWithZero)
                for (const Complex& b1 : kGridWithZero) {
                    if (std::abs(a1) <= eps && std::abs(b1) <= eps) continue;
                    const FamilyTag expected = std::abs(a1) > eps && std::abs(b1) > eps
                                                   ? FamilyTag::KW3
                                                   : FamilyTag::KW2;
                    push_built(out, spec, KW3{chi, a1, b1}, expected, ctx.policy);
                }
        }
        for (const Character& chi : ctx.chars) {
            if (max_abs(chi.materialized) <= eps) continue;
            if (max_abs_diff(chi.materialized, star(chi.materialized, sigma)) > eps) continue;
            if (std::abs(integrate(mu, chi.materialized)) <= eps) continue;
            const auto adm = admissible_sine_basis(spec.binding(), sigma, mu, chi, ctx.policy);
            for (const CFunction& phi : adm)
                for (const Complex& lambda : kGrid)
                    for (const Complex& gamma1 : kGridWithZero)
                        push_built(out, spec, KW4{chi, phi, lambda, gamma1}, FamilyTag::KW4,
                                   ctx.policy);
        }
    } else if (spec.sign() == Sign::Plus) {
        for (const Character& chi : ctx.chars) {
            if (max_abs(chi.materialized) <= eps) continue;
            for (const Complex& a : kGridWithZero)
                for (const Complex& b : kGridWithZero) {
                    if (std::abs(a) <= eps && std::abs(b) <= eps) continue;
                    push_built(out, spec, W2{chi, a, b}, FamilyTag::W2, ctx.policy);
                }
        }
        for (const Character& chi : ctx.chars) {
            if (max_abs(chi.materialized) <= eps) continue;
            if (max_abs_diff(chi.materialized, star(chi.materialized, sigma)) > eps) continue;
            const auto odd = odd_sine_basis(spec.binding(), sigma, chi, ctx.policy);
            for (const CFunction& phi : odd)
                for (const Complex& gamma1 : kGridWithZero)
                    push_built(out, spec, W3{chi, phi, gamma1}, FamilyTag::W3, ctx.policy);
        }
    } else if (spec.has_measure()) {
        const DiracCombination& mu = spec.measure();
        for (const Character& chi : ctx.chars) {
            const CFunction chis = star(chi.materialized, sigma);
            if (max_abs_diff(chi.materialized, chis) <= eps) continue;
            const Complex ic = integrate(mu, chi.materialized);
            if (std::abs(ic) <= eps || std::abs(ic + integrate(mu, chis)) > eps) continue;
            for (const Complex& a1 : kGridWithZero)
                for (const Complex& a2 : kGridWithZero) {
                    if (std::abs(a1) <= eps && std::abs(a2) <= eps) continue;
                    push_built(out, spec, VV2{chi, a1, a2}, FamilyTag::VV2, ctx.policy);
                }
        }
    } else {
        for (const Character& chi : ctx.chars) {
            if (max_abs_diff(chi.materialized, star(chi.materialized, sigma)) <= eps) continue;
            for (const Complex& lambda : kGrid)
                push_built(out, spec, V2{chi, lambda}, FamilyTag::V2, ctx.policy);
        }
    }
    return out;
}

std::vector<CFunction> distinct_gs(const std::vector<Built>& harvest,
                                   const NumericPolicy& policy) {
    std::vector<CFunction> out;
    for (const Built& b : harvest) {
        const bool seen = std::any_of(out.begin(), out.end(), [&](const CFunction& g) {
            return max_abs_diff(g, b.pair.g) <= policy.epsilon;
        });
        if (!seen) out.push_back(b.pair.g);
    }
    return out;
}

/// Generators of the full solution span the theorems predict for this g:
/// the union of every family's f-directions whose side conditions hold.
std::vector<CFunction> predicted_span(const EquationSpec& spec, const CFunction& g,
                                      const Ctx& ctx) {
    const double eps = ctx.policy.epsilon;
    const double tol = 10.0 * eps;
    const Automorphism& sigma = spec.sigma();
    std::vector<CFunction> gens;
    auto g_is = [&](const CFunction& gfam) { return max_abs_diff(g, gfam) <= tol; };

    if (spec.sign() == Sign::Plus && spec.has_measure()) {
        const DiracCombination& mu = spec.measure();
        for (const Character& m : ctx.chars) {
            const CFunction& cm = m.materialized;
            const Complex im = integrate(mu, cm);
            if (std::abs(im) <= eps) continue;
            CFunction gfam = cm + star(cm, sigma);
            gfam *= 0.5 * im;
            if (g_is(gfam)) gens.push_back(cm);
        }
        for (const Character& chi : ctx.chars) {
            const CFunction& c = chi.materialized;
            if (max_abs(c) <= eps) continue;
            if (max_abs_diff(c, star(c, sigma)) > eps) continue;
            const Complex ic = integrate(mu, c);
            if (std::abs(ic) <= eps || !g_is(ic * c)) continue;
            gens.push_back(c);
            for (const CFunction& phi : admissible_sine_basis(spec.binding(), sigma, mu, chi,
                                                              ctx.policy))
                gens.push_back(phi);
        }
    } else if (spec.sign() == Sign::Plus) {
        for (const Character& chi : ctx.chars) {
            const CFunction& c = chi.materialized;
            if (max_abs(c) <= eps) continue;
            const CFunction cs = star(c, sigma);
            CFunction gfam = c + cs;
            gfam *= 0.5;
            if (g_is(gfam)) {
                gens.push_back(c);
                gens.push_back(cs);
            }
            if (max_abs_diff(c, cs) <= eps && g_is(c)) {
                gens.push_back(c);
                for (const CFunction& phi : odd_sine_basis(spec.binding(), sigma, chi, ctx.policy))
                    gens.push_back(phi);
            }
        }
    } else if (spec.has_measure()) {
        const DiracCombination& mu = spec.measure();
        for (const Character& chi : ctx.chars) {
            const CFunction& c = chi.materialized;
            const CFunction cs = star(c, sigma);
            if (max_abs_diff(c, cs) <= eps) continue;
            const Complex ic = integrate(mu, c);
            if (std::abs(ic) <= eps || std::abs(ic + integrate(mu, cs)) > eps) continue;
            CFunction gfam = c - cs;
            gfam *= 0.5 * ic;
            if (g_is(gfam)) {
                gens.push_back(c);
                gens.push_back(cs);
            }
        }
    } else {
        for (const Character& chi : ctx.chars) {
            const CFunction& c = chi.materialized;
            const CFunction cs = star(c, sigma);
            if (max_abs_diff(c, cs) <= eps) continue;
            CFunction gfam = c - cs;
            gfam *= 0.5;
            if (g_is(gfam)) gens.push_back(c);
        }
    }
    return gens;
}

int span_rank(const std::vector<CFunction>& gens, int n, const NumericPolicy& policy) {
    linalg::Matrix rows;
    for (const CFunction& f : gens) rows.push_back(f.values());
    return linalg::rank(std::move(rows), n, policy);
}

bool family_tag_is_variant(const EquationSpec& spec, FamilyTag tag) {
    if (spec.sign() == Sign::Plus && spec.has_measure())
        return tag == FamilyTag::KW2 || tag == FamilyTag::KW3 || tag == FamilyTag::KW4;
    if (spec.sign() == Sign::Plus) return tag == FamilyTag::W2 || tag == FamilyTag::W3;
    if (spec.has_measure()) return tag == FamilyTag::VV2;
    return tag == FamilyTag::V2;
}

// ---------------------------------------------------------------------------
// per-spec check bundles

void converse_checks(Checks& checks, const Ctx& ctx, const std::string& label,
                     const EquationSpec& spec, const std::vector<Built>& harvest) {
    if (harvest.empty()) {
        checks.skip("converse-residuals/" + label, "no admissible family instances");
        return;
    }
    checks.run("converse-residuals/" + label, [&](Json& witness, std::optional<double>& residual) {
        double worst = 0.0;
        for (const Built& b : harvest)
            worst = std::max(worst, residual_max(spec, b.pair.f, b.pair.g));
        residual = worst;
        witness = Json{{"constructions", harvest.size()}};
        return worst <= ctx.policy.epsilon;
    });
    checks.run("classify-roundtrip/" + label, [&](Json& witness, std::optional<double>& residual) {
        double worst_fit = 0.0;
        for (const Built& b : harvest) {
            const FamilyMatch match =
                classify(spec, b.pair.f, b.pair.g, ctx.chars, ctx.policy);
            worst_fit = std::max(worst_fit, match.fit_residual);
            const bool tag_ok = match.tag == b.expected;
            // the constructing family must appear among the matches, except
            // when f collapsed to zero (the classifier cannot see it there)
            const bool built_listed =
                b.built == b.expected || b.expected == FamilyTag::KW1 ||
                std::find(match.all_tags.begin(), match.all_tags.end(), b.built) !=
                    match.all_tags.end();
            if (!tag_ok || !built_listed || match.fit_residual > 10.0 * ctx.policy.epsilon) {
                witness = Json{{"built", to_string(b.built)},
                               {"expected", to_string(b.expected)},
                               {"got", to_string(match.tag)},
                               {"fit_residual", match.fit_residual}};
                residual = match.fit_residual;
                return false;
            }
        }
        residual = worst_fit;
        return true;
    });
    checks.run("abelian/" + label, [&](Json& witness, std::optional<double>&) {
        for (const Built& b : harvest) {
            if (max_abs(b.pair.f) > ctx.policy.epsilon &&
                !is_abelian(spec.binding(), b.pair.f, ctx.policy)) {
                witness = Json{{"function", "f"}, {"family", to_string(b.built)}};
                return false;
            }
            if (max_abs(b.pair.g) > ctx.policy.epsilon &&
                !is_abelian(spec.binding(), b.pair.g, ctx.policy)) {
                witness = Json{{"function", "g"}, {"family", to_string(b.built)}};
                return false;
            }
        }
        return true;
    });
}

void nullspace_checks(Checks& checks, const Ctx& ctx, const std::string& label,
                      const EquationSpec& spec, const std::vector<Built>& harvest) {
    const std::vector<CFunction> gs = distinct_gs(harvest, ctx.policy);
    if (gs.empty()) {
        checks.skip("nullspace-dimension/" + label, "no family g to probe");
        return;
    }
    checks.run("nullspace-dimension/" + label, [&](Json& witness, std::optional<double>&) {
        for (size_t i = 0; i < gs.size(); ++i) {
            const auto basis = nullspace(assemble_linear_system(spec, gs[i]), ctx.policy);
            const int predicted =
                span_rank(predicted_span(spec, gs[i], ctx), spec.binding().order(), ctx.policy);
            if (static_cast<int>(basis.size()) != predicted) {
                witness = Json{{"g_index", i},
                               {"g", render_cfunction(gs[i])},
                               {"nullspace_dim", basis.size()},
                               {"predicted_dim", predicted}};
                return false;
            }
        }
        witness = Json{{"distinct_g", gs.size()}};
        return true;
    });
    checks.run("basis-classification/" + label, [&](Json& witness, std::optional<double>& residual) {
        double worst_fit = 0.0;
        for (size_t i = 0; i < gs.size(); ++i) {
            for (const CFunction& f : nullspace(assemble_linear_system(spec, gs[i]), ctx.policy)) {
                const double res = residual_max(spec, f, gs[i]);
                if (res > 10.0 * ctx.policy.epsilon) {
                    witness = Json{{"g_index", i}, {"soundness_residual", res}};
                    residual = res;
                    return false;
                }
                const FamilyMatch match = classify(spec, f, gs[i], ctx.chars,
                                                   NumericPolicy{10.0 * ctx.policy.epsilon});
                worst_fit = std::max(worst_fit, match.fit_residual);
                if (!family_tag_is_variant(spec, match.tag) ||
                    match.fit_residual > 10.0 * ctx.policy.epsilon) {
                    witness = Json{{"g_index", i},
                                   {"g", render_cfunction(gs[i])},
                                   {"f", render_cfunction(f)},
                                   {"tag", to_string(match.tag)},
                                   {"fit_residual", match.fit_residual}};
                    return false;
                }
            }
        }
        residual = worst_fit;
        return true;
    });
}

void falsification_check(Checks& checks, const Ctx& ctx, const std::string& label,
                         const EquationSpec& spec) {
    checks.run("generic-falsification/" + label, [&](Json& witness, std::optional<double>&) {
        SeededRng rng(ctx.seed, "generic-falsification/" + label);
        for (int trial = 0; trial < 100; ++trial) {
            const CFunction g = rng.next_cfunction(spec.binding().order());
            const auto basis = nullspace(assemble_linear_system(spec, g), ctx.policy);
            if (!basis.empty()) {
                witness = Json{{"trial", trial},
                               {"g", render_cfunction(g)},
                               {"nullspace_dim", basis.size()}};
                return false;
            }
        }
        witness = Json{{"trials", 100}};
        return true;
    });
}

// ---------------------------------------------------------------------------
// suite bodies

std::vector<EquationSpec> measure_specs(const CorpusEntry& entry, const Automorphism& sigma,
                                        Sign sign, bool unit_dirac_only) {
    std::vector<EquationSpec> out;
    for (const DiracCombination& mu : entry.measures) {
        if (unit_dirac_only && !mu.is_unit_dirac()) continue;
        out.emplace_back(entry.semigroup, sign, sigma, mu);
    }
    return out;
}

std::string spec_suffix(const CorpusEntry& entry, const Automorphism& sigma) {
    return entry.id + "/" + sigma_label(sigma);
}

void theorem_suite(Checks& checks, const CorpusEntry& entry, const NumericPolicy& policy,
                   std::uint64_t seed, Sign sign, bool weighted, bool unit_dirac_only,
                   const std::string& eq_label) {
    const std::vector<Character> chars = enumerate_multiplicative(entry.semigroup);
    for (const Automorphism& sigma : entry.sigmas) {
        const Ctx ctx{entry, sigma, chars, policy, seed};
        std::vector<EquationSpec> specs;
        if (weighted) {
            specs = measure_specs(entry, sigma, sign, unit_dirac_only);
        } else {
            specs.emplace_back(entry.semigroup, sign, sigma, std::nullopt);
        }
        if (specs.empty() && weighted) {
            checks.skip("converse-residuals/" + eq_label + "/" + spec_suffix(entry, sigma),
                        "no admissible measures");
            continue;
        }
        for (const EquationSpec& spec : specs) {
            std::string label = eq_label + "/" + spec_suffix(entry, sigma);
            if (weighted) label += "/" + describe_measure(entry.semigroup, spec.measure());
            const std::vector<Built> harvest = sweep_families(spec, ctx, SweepKind::TheoremFamilies);
            converse_checks(checks, ctx, label, spec, harvest);
            nullspace_checks(checks, ctx, label, spec, harvest);
            falsification_check(checks, ctx, label, spec);
        }
    }
}

void corollaries_suite(Checks& checks, const CorpusEntry& entry, const NumericPolicy& policy,
                       std::uint64_t seed) {
    const std::vector<Character> chars = enumerate_multiplicative(entry.semigroup);

    checks.run("additive-empty/" + entry.id, [&](Json& witness, std::optional<double>&) {
        const auto basis = additive_basis(entry.semigroup, policy);
        if (!basis.empty()) {
            witness = Json{{"dimension", basis.size()}};
            return false;
        }
        return true;
    });

    for (const Automorphism& sigma : entry.sigmas) {
        const Ctx ctx{entry, sigma, chars, policy, seed};
        for (const EquationSpec& spec : measure_specs(entry, sigma, Sign::Plus, true)) {
            const ElementId z0 = spec.measure().z0();
            const std::string where =
                spec_suffix(entry, sigma) + "/z0=" + entry.semigroup.name_of(z0);

            // Jensen: the g = 1 solution space is exactly the constants
            checks.run("jensen-nullspace/" + where, [&](Json& witness, std::optional<double>&) {
                const CFunction one = CFunction::ones(entry.semigroup.order());
                const auto basis = nullspace(assemble_linear_system(spec, one), policy);
                if (basis.size() != 1) {
                    witness = Json{{"dimension", basis.size()}};
                    return false;
                }
                // the single basis vector must be a constant
                CFunction dev = basis[0];
                dev -= CFunction::constant(dev.size(), basis[0][0]);
                if (max_abs(dev) > policy.epsilon) {
                    witness = Json{{"basis", render_cfunction(basis[0])}};
                    return false;
                }
                return true;
            });
            const std::vector<Built> jensen =
                sweep_families(spec, ctx, SweepKind::Jensen);
            converse_checks(checks, ctx, "jensen/" + where, spec, jensen);

            // symmetrized variant: sigma = id only
            if (sigma.is_identity()) {
                const std::vector<Built> sym = sweep_families(spec, ctx, SweepKind::Symmetrized);
                const std::string label = "symmetrized/" + where;
                converse_checks(checks, ctx, label, spec, sym);
                nullspace_checks(checks, ctx, label, spec, sym);
            }
        }

        // unit-atom minus variant
        for (const EquationSpec& spec : measure_specs(entry, sigma, Sign::Minus, true)) {
            const Ctx mctx{entry, sigma, chars, policy, seed};
            const std::string label = "vanvleck/" + spec_suffix(entry, sigma) + "/z0=" +
                                      entry.semigroup.name_of(spec.measure().z0());
            const std::vector<Built> harvest =
                sweep_families(spec, mctx, SweepKind::TheoremFamilies);
            converse_checks(checks, mctx, label, spec, harvest);
            nullspace_checks(checks, mctx, label, spec, harvest);
        }
    }
}

void reductions_suite(Checks& checks, const CorpusEntry& entry, const NumericPolicy& policy,
                      std::uint64_t seed, bool& degenerate_seen) {
    const std::vector<Character> chars = enumerate_multiplicative(entry.semigroup);
    for (const Automorphism& sigma : entry.sigmas) {
        const Ctx ctx{entry, sigma, chars, policy, seed};
        for (Sign sign : {Sign::Plus, Sign::Minus}) {
            for (const EquationSpec& spec : measure_specs(entry, sigma, sign, false)) {
                const std::string label = (sign == Sign::Plus ? "kw/" : "vvw/") +
                                          spec_suffix(entry, sigma) + "/" +
                                          describe_measure(entry.semigroup, spec.measure());
                const std::vector<Built> harvest =
                    sweep_families(spec, ctx, SweepKind::TheoremFamilies);
                std::vector<SolutionPair> pairs;
                for (const Built& b : harvest)
                    if (max_abs(b.pair.f) > policy.epsilon && max_abs(b.pair.g) > policy.epsilon)
                        pairs.push_back(b.pair);
                if (pairs.empty()) {
                    checks.skip("reduction-identity/" + label, "no nonzero solution pairs");
                    continue;
                }
                checks.run("reduction-identity/" + label,
                           [&](Json& witness, std::optional<double>& residual) {
                    double worst = 0.0;
                    int degenerate = 0;
                    const EquationSpec reduced(entry.semigroup, Sign::Plus, sigma, std::nullopt);
                    for (const SolutionPair& p : pairs) {
                        const ReductionResult r = reduce(spec, p.f, p.g, policy);
                        if (max_abs(r.h) <= policy.epsilon) {
                            witness = Json{{"error", "smear of f vanishes"}};
                            return false;
                        }
                        if (r.degenerate) {
                            ++degenerate;
                            degenerate_seen = true;
                            if (std::abs(r.lambda1) <= policy.epsilon) {
                                witness = Json{{"error", "lambda1 vanishes"}};
                                return false;
                            }
                            CFunction dev = smear(entry.semigroup, spec.measure(), p.f);
                            dev -= r.lambda1 * p.f;
                            worst = std::max(worst, max_abs(dev));
                        } else {
                            if (max_abs(r.G) <= policy.epsilon) {
                                witness = Json{{"error", "reduced G vanishes"}};
                                return false;
                            }
                            worst = std::max(worst, residual_max(reduced, r.F, r.G));
                        }
                    }
                    residual = worst;
                    witness = Json{{"pairs", pairs.size()}, {"degenerate", degenerate}};
                    return worst <= 10.0 * policy.epsilon;
                });
                if (sign == Sign::Plus) {
                    // the smeared product identity behind the reduction
                    checks.run("smear-product-identity/" + label,
                               [&](Json& witness, std::optional<double>& residual) {
                        double worst = 0.0;
                        for (const SolutionPair& p : pairs) {
                            const CFunction h = smear(entry.semigroup, spec.measure(), p.f);
                            CFunction gsum = smear(entry.semigroup, spec.measure(), p.g);
                            gsum += smear_sigma(entry.semigroup, sigma, spec.measure(), p.g);
                            const Complex ig = integrate(spec.measure(), p.g);
                            for (int x = 0; x < entry.semigroup.order(); ++x)
                                for (int y = 0; y < entry.semigroup.order(); ++y)
                                    worst = std::max(worst,
                                                     std::abs(h[x] * gsum[y] -
                                                              2.0 * p.f[x] * p.g[y] * ig));
                        }
                        residual = worst;
                        witness = Json{{"pairs", pairs.size()}};
                        return worst <= 10.0 * policy.epsilon;
                    });
                }
            }
        }
    }
}

void dependence_suite(Checks& checks, const CorpusEntry& entry, const NumericPolicy& policy,
                      std::uint64_t seed) {
    const std::vector<Character> chars = enumerate_multiplicative(entry.semigroup);
    const int n = entry.semigroup.order();
    checks.run("dependence-minors/" + entry.id, [&](Json& witness, std::optional<double>&) {
        std::vector<CFunction> samples;
        SeededRng rng(seed, "dependence/" + entry.id);
        for (int i = 0; i < 20; ++i) samples.push_back(rng.next_cfunction(n));
        for (const Character& chi : chars) samples.push_back(chi.materialized);
        int nontrivial = 0;
        for (size_t gi = 0; gi < samples.size(); ++gi) {
            const CFunction& g = samples[gi];
            linalg::Matrix rows;
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    linalg::Row r(n, 0.0);
                    r[entry.semigroup.at(x, y)] += 1.0;
                    r[x] -= g[y];
                    r[y] += g[x];
                    rows.push_back(std::move(r));
                }
            for (const auto& v : linalg::nullspace_basis(std::move(rows), n, policy)) {
                ++nontrivial;
                const CFunction f{std::vector<Complex>(v.begin(), v.end())};
                const DependenceCheck dep =
                    check_linear_dependence(entry.semigroup, f, g,
                                            NumericPolicy{10.0 * policy.epsilon});
                if (!dep.ok()) {
                    witness = Json{{"g_index", gi},
                                   {"status", dep.status == DependenceCheck::Status::HypothesisFails
                                                  ? "hypothesis"
                                                  : "minor"},
                                   {"x", dep.x},
                                   {"y", dep.y}};
                    return false;
                }
            }
        }
        witness = Json{{"samples", samples.size()}, {"nontrivial_solutions", nontrivial}};
        return true;
    });
}

void remarks_suite(Checks& checks, const CorpusEntry& entry, const NumericPolicy& policy,
                   std::uint64_t seed, bool& g0_nonzero_seen) {
    const std::vector<Character> chars = enumerate_multiplicative(entry.semigroup);
    const int n = entry.semigroup.order();
    const auto neutral = find_neutral(entry.semigroup);

    for (const Automorphism& sigma : entry.sigmas) {
        const Ctx ctx{entry, sigma, chars, policy, seed};

        // (a) monoid reduction of the weighted plus equation
        if (neutral) {
            for (const EquationSpec& spec : measure_specs(entry, sigma, Sign::Plus, false)) {
                const std::string label = "monoid-reduction/" + spec_suffix(entry, sigma) + "/" +
                                          describe_measure(entry.semigroup, spec.measure());
                const std::vector<Built> harvest =
                    sweep_families(spec, ctx, SweepKind::TheoremFamilies);
                if (harvest.empty()) {
                    checks.skip(label, "no solutions harvested");
                    continue;
                }
                checks.run(label, [&](Json& witness, std::optional<double>& residual) {
                    double worst = 0.0;
                    for (const Built& b : harvest) {
                        CFunction dev = smear(entry.semigroup, spec.measure(), b.pair.f);
                        dev -= b.pair.g[*neutral] * b.pair.f;
                        worst = std::max(worst, max_abs(dev));
                    }
                    residual = worst;
                    witness = Json{{"solutions", harvest.size()}};
                    return worst <= 10.0 * policy.epsilon;
                });
            }
        }

        // (b) the g = 0 unit-atom plus equation: solutions vanish on
        // ((xy)z) z0 but not necessarily on S
        for (const EquationSpec& spec : measure_specs(entry, sigma, Sign::Plus, true)) {
            const ElementId z0 = spec.measure().z0();
            const std::string label = "g0-vanishing/" + spec_suffix(entry, sigma) + "/z0=" +
                                      entry.semigroup.name_of(z0);
            checks.run(label, [&](Json& witness, std::optional<double>& residual) {
                const auto basis =
                    nullspace(assemble_linear_system(spec, CFunction::zeros(n)), policy);
                double worst = 0.0;
                for (const CFunction& f : basis) {
                    if (max_abs(f) > policy.epsilon) g0_nonzero_seen = true;
                    for (int x = 0; x < n; ++x)
                        for (int y = 0; y < n; ++y)
                            for (int z = 0; z < n; ++z) {
                                const ElementId xyz =
                                    entry.semigroup.at(entry.semigroup.at(x, y), z);
                                worst = std::max(worst,
                                                 std::abs(f[entry.semigroup.at(xyz, z0)]));
                            }
                }
                residual = worst;
                witness = Json{{"dimension", basis.size()}};
                return worst <= policy.epsilon;
            });
        }

        // (c) no nonzero f solves the unweighted minus equation with g = f
        const EquationSpec minus_spec(entry.semigroup, Sign::Minus, sigma, std::nullopt);
        checks.run("minus-selfpair/" + spec_suffix(entry, sigma),
                   [&](Json& witness, std::optional<double>& residual) {
            std::vector<CFunction> candidates;
            for (Sign sign : {Sign::Plus, Sign::Minus}) {
                EquationSpec spec(entry.semigroup, sign, sigma, std::nullopt);
                for (const Built& b : sweep_families(spec, ctx, SweepKind::TheoremFamilies))
                    candidates.push_back(b.pair.g);
            }
            SeededRng rng(seed, "minus-selfpair/" + entry.id + "/" + sigma_label(sigma));
            for (int i = 0; i < 100; ++i) {
                CFunction f = rng.next_cfunction(n);
                const double norm = max_abs(f);
                if (norm > 0) f *= 1.0 / norm;
                candidates.push_back(std::move(f));
            }
            double least = -1.0;
            for (const CFunction& f : candidates) {
                if (max_abs(f) <= policy.epsilon) continue;
                const double res = residual_max(minus_spec, f, f);
                if (least < 0 || res < least) least = res;
                if (res <= 0.1) {
                    witness = Json{{"f", render_cfunction(f)}, {"residual", res}};
                    residual = res;
                    return false;
                }
            }
            residual = least;
            witness = Json{{"candidates", candidates.size()}};
            return true;
        });
    }
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"theorem-wilson", "theorem-kw", "theorem-kannappan", "theorem-van1",
            "theorem-vvw",    "corollaries", "lemma-reductions",  "lemma-lv",
            "remarks"};
}

Report run_suite(const std::string& name, const std::vector<CorpusEntry>& corpus,
                 const SuiteOptions& options) {
    const auto names = suite_names();
    if (name != "all" && std::find(names.begin(), names.end(), name) == names.end())
        throw UnknownSuite(name);
    const std::vector<CorpusEntry> entries = filter_corpus(corpus, options.corpus_filter);
    if (entries.empty()) throw CorpusEmpty();

    Report report;
    report.suite = name;
    report.version = kVersion;
    report.policy = options.policy;
    report.seed = options.seed;
    Checks checks(report);

    const auto want = [&](const char* suite) { return name == "all" || name == suite; };

    if (want("theorem-wilson"))
        for (const auto& e : entries)
            theorem_suite(checks, e, options.policy, options.seed, Sign::Plus, false, false,
                          "wilson");
    if (want("theorem-kw"))
        for (const auto& e : entries)
            theorem_suite(checks, e, options.policy, options.seed, Sign::Plus, true, false, "kw");
    if (want("theorem-kannappan"))
        for (const auto& e : entries)
            theorem_suite(checks, e, options.policy, options.seed, Sign::Plus, true, true,
                          "kannappan");
    if (want("theorem-van1"))
        for (const auto& e : entries)
            theorem_suite(checks, e, options.policy, options.seed, Sign::Minus, false, false,
                          "van1");
    if (want("theorem-vvw"))
        for (const auto& e : entries)
            theorem_suite(checks, e, options.policy, options.seed, Sign::Minus, true, false, "vvw");
    if (want("corollaries"))
        for (const auto& e : entries) corollaries_suite(checks, e, options.policy, options.seed);
    if (want("lemma-reductions")) {
        bool degenerate_seen = false;
        for (const auto& e : entries)
            reductions_suite(checks, e, options.policy, options.seed, degenerate_seen);
        checks.run("reduction-degenerate-coverage", [&](Json& witness, std::optional<double>&) {
            witness = Json{{"seen", degenerate_seen}};
            return degenerate_seen;
        });
    }
    if (want("lemma-lv"))
        for (const auto& e : entries) dependence_suite(checks, e, options.policy, options.seed);
    if (want("remarks")) {
        bool g0_nonzero_seen = false;
        for (const auto& e : entries)
            remarks_suite(checks, e, options.policy, options.seed, g0_nonzero_seen);
        checks.run("g0-nonzero-witness", [&](Json& witness, std::optional<double>&) {
            witness = Json{{"seen", g0_nonzero_seen}};
            return g0_nonzero_seen;
        });
    }
    return report;
}

}  // namespace feqs
