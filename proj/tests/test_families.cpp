#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "feqs/corpus.hpp"
#include "feqs/families.hpp"
#include "feqs/parse_error.hpp"
#include "feqs/random.hpp"

using namespace feqs;

namespace {

const Semigroup kZ3({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
const Semigroup kZ4({{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}});
const Semigroup kN3({{0, 0, 0}, {0, 0, 1}, {0, 1, 2}});
const NumericPolicy kPolicy;

Character char_at(const Semigroup& s, int index) {
    return enumerate_multiplicative(s)[index];
}

// Z3 characters sort as [zero, one, chi, chi*]; Z4 as [zero, one, chi_i, chi_-1, chi_-i]
const int kZ3Chi = 2;
const int kZ4ChiI = 2;

Semigroup p9() { return direct_product(kN3, kN3); }

}  // namespace

TEST_CASE("KW2 constructor") {
    const Automorphism neg = parse_sigma_spec(kZ3, "0,2,1");
    const EquationSpec spec(kZ3, Sign::Plus, neg, DiracCombination::dirac(0));
    const Character m = char_at(kZ3, kZ3Chi);
    const auto [f, g] = build_family(spec, KW2{m, 3.0}, kPolicy);
    CHECK(residual_max(spec, f, g) <= 1e-9);
    CHECK(max_abs_diff(f, 3.0 * m.materialized) <= 1e-12);
    // integral of m against delta_0 is 1, so g = (m + m*)/2
    CFunction expected = m.materialized + star(m.materialized, neg);
    expected *= 0.5;
    CHECK(max_abs_diff(g, expected) <= 1e-12);

    CHECK_THROWS_AS((void)build_family(spec, KW2{m, 0.0}, kPolicy), SideConditionViolated);
}

TEST_CASE("KW3 side conditions") {
    const Automorphism neg = parse_sigma_spec(kZ3, "0,2,1");
    const EquationSpec spec(kZ3, Sign::Plus, neg, DiracCombination::dirac(1));
    // integral(chi) = omega while integral(chi*) = omega^2: rejected
    try {
        (void)build_family(spec, KW3{char_at(kZ3, kZ3Chi), 1.0, 1.0}, kPolicy);
        FAIL("expected SideConditionViolated");
    } catch (const SideConditionViolated& e) {
        CHECK(e.condition() == "IntegralChiEqualsIntegralChiStar");
    }
    // with the atom at the fixed point 0 both integrals are 1
    const EquationSpec at0(kZ3, Sign::Plus, neg, DiracCombination::dirac(0));
    const auto [f, g] = build_family(at0, KW3{char_at(kZ3, kZ3Chi), 1.0, 2.0}, kPolicy);
    CHECK(residual_max(at0, f, g) <= 1e-9);
}

TEST_CASE("KW4 on the product monoid") {
    const Semigroup s = p9();
    const Automorphism swap = parse_sigma_spec(s, "0,3,6,1,4,7,2,5,8");
    const EquationSpec spec(s, Sign::Plus, swap, DiracCombination::dirac(8));
    // chi' = indicator of (1,1); phi' = ind(a,1) - ind(1,a)
    const auto chars = enumerate_multiplicative(s);
    int chi_idx = -1;
    for (size_t i = 0; i < chars.size(); ++i) {
        CFunction ind = CFunction::indicator(9, 8);
        if (max_abs_diff(chars[i].materialized, ind) <= 1e-12) chi_idx = static_cast<int>(i);
    }
    REQUIRE(chi_idx >= 0);
    CFunction phi = CFunction::indicator(9, 5);
    phi -= CFunction::indicator(9, 7);

    const auto [f, g] = build_family(spec, KW4{chars[chi_idx], phi, 1.0, 0.0}, kPolicy);
    CHECK(residual_max(spec, f, g) <= 1e-9);
    CHECK(max_abs_diff(g, chars[chi_idx].materialized) <= 1e-12);

    // the admissible subspace is the odd, integral-zero span {phi}
    const auto adm = admissible_sine_basis(s, swap, spec.measure(), chars[chi_idx], kPolicy);
    REQUIRE(adm.size() == 1);
    const auto fit = linalg::least_squares_fit(adm, phi);
    CHECK(fit.residual <= 1e-9);

    // an even phi or one with nonzero integral is rejected
    CFunction phi_even = CFunction::indicator(9, 5);
    phi_even += CFunction::indicator(9, 7);
    CHECK_THROWS_AS((void)build_family(spec, KW4{chars[chi_idx], phi_even, 1.0, 0.0}, kPolicy),
                    SideConditionViolated);
}

TEST_CASE("reduce: non-degenerate branch") {
    const Automorphism neg = parse_sigma_spec(kZ3, "0,2,1");
    const EquationSpec spec(kZ3, Sign::Plus, neg, DiracCombination::dirac(0));
    const Character m = char_at(kZ3, kZ3Chi);
    const auto [f, g] = build_family(spec, KW2{m, 3.0}, kPolicy);

    const ReductionResult r = reduce(spec, f, g, kPolicy);
    CHECK(!r.degenerate);
    CHECK(max_abs(r.G) > kPolicy.epsilon);
    // the reduced pair solves the unweighted plus equation
    const EquationSpec wilson(kZ3, Sign::Plus, neg, std::nullopt);
    CHECK(residual_max(wilson, r.F, r.G) <= 1e-8);
    CHECK(max_abs_diff(r.G, g) <= 1e-9);  // unit atom at the neutral element
}

TEST_CASE("reduce: degenerate branch with lambda1 = integral of m") {
    const Automorphism neg = parse_sigma_spec(kZ4, "0,3,2,1");
    const EquationSpec spec(kZ4, Sign::Plus, neg, DiracCombination::dirac(1));
    const Character m = char_at(kZ4, kZ4ChiI);  // (1, i, -1, -i)
    const auto [f, g] = build_family(spec, KW2{m, 3.0}, kPolicy);

    // integral(g) = i (i + (-i))/2 = 0 puts us in the degenerate branch
    CHECK(std::abs(integrate(spec.measure(), g)) <= 1e-12);
    const ReductionResult r = reduce(spec, f, g, kPolicy);
    CHECK(r.degenerate);
    CHECK(std::abs(r.lambda1 - Complex(0, 1)) <= 1e-9);
    CFunction dev = smear(kZ4, spec.measure(), f);
    dev -= r.lambda1 * f;
    CHECK(max_abs(dev) <= 1e-8);
}

TEST_CASE("reduce rejects unusable input") {
    const EquationSpec spec(kZ3, Sign::Plus, identity_automorphism(kZ3),
                            DiracCombination::dirac(0));
    CHECK_THROWS_AS((void)reduce(spec, CFunction::zeros(3), CFunction::ones(3), kPolicy),
                    ZeroFunction);
    // a genuine solution with g = 0: f = indicator of 1 on N3 with the atom at 0
    const EquationSpec n3spec(kN3, Sign::Plus, identity_automorphism(kN3),
                              DiracCombination::dirac(0));
    REQUIRE(residual_max(n3spec, CFunction::indicator(3, 2), CFunction::zeros(3)) <= 1e-12);
    CHECK_THROWS_AS((void)reduce(n3spec, CFunction::indicator(3, 2), CFunction::zeros(3), kPolicy),
                    ZeroFunction);
    SeededRng rng(2, "reduce-notasolution");
    CHECK_THROWS_AS((void)reduce(spec, rng.next_cfunction(3), rng.next_cfunction(3), kPolicy),
                    NotASolution);
}

TEST_CASE("linear dependence check") {
    SUBCASE("F = 0 passes") {
        CHECK(check_linear_dependence(kZ3, CFunction::zeros(3), CFunction::ones(3), kPolicy).ok());
    }
    SUBCASE("F = G = chi fails the hypothesis") {
        const CFunction chi = char_at(kZ3, kZ3Chi).materialized;
        const DependenceCheck check = check_linear_dependence(kZ3, chi, chi, kPolicy);
        CHECK(check.status == DependenceCheck::Status::HypothesisFails);
    }
    SUBCASE("null semigroup solutions are proportional to G") {
        const Semigroup null2({{0, 0}, {0, 0}});
        const CFunction g({0.0, 0.7});
        const CFunction f({0.0, 1.0});
        CHECK(check_linear_dependence(null2, f, g, kPolicy).ok());
        // and a genuinely independent pair is caught
        const CFunction bad({1.0, 0.0});
        const DependenceCheck check = check_linear_dependence(null2, bad, g, kPolicy);
        CHECK(!check.ok());
    }
}

TEST_CASE("classification") {
    const Automorphism neg4 = parse_sigma_spec(kZ4, "0,3,2,1");
    const EquationSpec minus_spec(kZ4, Sign::Minus, neg4, DiracCombination::dirac(1));
    const auto z4_chars = enumerate_multiplicative(kZ4);
    const CFunction chi = z4_chars[kZ4ChiI].materialized;
    const CFunction chis = star(chi, neg4);

    SUBCASE("f = 0 lands in the degenerate family") {
        CFunction g = chi - chis;
        g *= Complex(0, 0.5);
        const FamilyMatch match =
            classify(minus_spec, CFunction::zeros(4), g, z4_chars, kPolicy);
        CHECK(match.tag == FamilyTag::KW1);
    }
    SUBCASE("weighted minus pair recovers (alpha1, alpha2) = (1, 2)") {
        CFunction f = chi + 2.0 * chis;
        CFunction g = chi - chis;
        g *= Complex(0, 0.5);
        REQUIRE(residual_max(minus_spec, f, g) <= 1e-9);
        const FamilyMatch match = classify(minus_spec, f, g, z4_chars, kPolicy);
        CHECK(match.tag == FamilyTag::VV2);
        REQUIRE(match.params.size() == 2);
        CHECK(std::abs(match.params[0].second - Complex(1.0)) <= 1e-8);
        CHECK(std::abs(match.params[1].second - Complex(2.0)) <= 1e-8);
        CHECK(match.fit_residual <= 1e-8);
    }
    SUBCASE("the P9 instance classifies as the sine-law family") {
        const Semigroup s = p9();
        const Automorphism swap = parse_sigma_spec(s, "0,3,6,1,4,7,2,5,8");
        const EquationSpec spec(s, Sign::Plus, swap, DiracCombination::dirac(8));
        const auto chars = enumerate_multiplicative(s);
        CFunction phi = CFunction::indicator(9, 5);
        phi -= CFunction::indicator(9, 7);
        Character chi_ind;
        for (const auto& c : chars)
            if (max_abs_diff(c.materialized, CFunction::indicator(9, 8)) <= 1e-12) chi_ind = c;
        const auto [f, g] = build_family(spec, KW4{chi_ind, phi, 1.0, 0.0}, kPolicy);
        const FamilyMatch match = classify(spec, f, g, chars, kPolicy);
        CHECK(match.tag == FamilyTag::KW4);
        // lambda * gamma1 = 0 and the phi component is recovered up to scale
        REQUIRE(match.params.size() == 2);
        CHECK(std::abs(match.params[1].second) <= 1e-8);
        const auto fit = linalg::least_squares_fit({match.phi}, phi);
        CHECK(fit.residual <= 1e-8);
    }
    SUBCASE("unclassified surfaces when g vanishes") {
        const EquationSpec spec(kN3, Sign::Plus, identity_automorphism(kN3),
                                DiracCombination::dirac(0));
        // f = indicator of 1 solves the g = 0 equation on N3
        const CFunction f = CFunction::indicator(3, 2);
        REQUIRE(residual_max(spec, f, CFunction::zeros(3)) <= 1e-12);
        const FamilyMatch match =
            classify(spec, f, CFunction::zeros(3), enumerate_multiplicative(kN3), kPolicy);
        CHECK(match.tag == FamilyTag::Unclassified);
    }
    SUBCASE("NotASolution is loud") {
        SeededRng rng(4, "classify-notasolution");
        CHECK_THROWS_AS((void)classify(minus_spec, rng.next_cfunction(4), rng.next_cfunction(4),
                                       z4_chars, kPolicy),
                        NotASolution);
    }
}

TEST_CASE("jensen and symmetrized constructors") {
    SUBCASE("A must vanish on a finite semigroup") {
        const EquationSpec spec(kZ3, Sign::Plus, identity_automorphism(kZ3),
                                DiracCombination::dirac(0));
        try {
            (void)build_family(spec, JEN{1.0, CFunction::indicator(3, 1)}, kPolicy);
            FAIL("expected SideConditionViolated");
        } catch (const SideConditionViolated& e) {
            CHECK(e.condition() == "NoNonzeroAdditive");
        }
        const auto [f, g] = build_family(spec, JEN{Complex(2.0, 1.0), CFunction()}, kPolicy);
        CHECK(max_abs_diff(f, CFunction::constant(3, {2.0, 1.0})) == 0.0);
        CHECK(max_abs_diff(g, CFunction::ones(3)) == 0.0);
    }
    SUBCASE("SYM2 checks chi(z0)") {
        const auto chars = enumerate_multiplicative(kN3);
        const Character chi_ind = chars[1];  // indicator of 1
        const EquationSpec at_a(kN3, Sign::Plus, identity_automorphism(kN3),
                                DiracCombination::dirac(1));
        CHECK_THROWS_AS((void)build_family(at_a, SYM2{chi_ind, 1.0}, kPolicy),
                        SideConditionViolated);
        const EquationSpec at_1(kN3, Sign::Plus, identity_automorphism(kN3),
                                DiracCombination::dirac(2));
        const auto [f, g] = build_family(at_1, SYM2{chi_ind, 2.0}, kPolicy);
        CHECK(residual_max(at_1, f, g) <= 1e-9);
        // classified under the weighted plus canonical order with SYM2 listed
        const FamilyMatch match = classify(at_1, f, g, chars, kPolicy);
        CHECK(match.tag == FamilyTag::KW2);
        CHECK(std::find(match.all_tags.begin(), match.all_tags.end(), FamilyTag::SYM2) !=
              match.all_tags.end());
    }
}

TEST_CASE("family JSON") {
    const auto chars = enumerate_multiplicative(kZ3);
    const SolutionFamily fam = parse_family_json(
        kZ3, chars, R"({"family":"KW2","m":2,"lambda2":{"re":3,"im":0}})");
    CHECK(tag_of(fam) == FamilyTag::KW2);
    const Automorphism neg = parse_sigma_spec(kZ3, "0,2,1");
    const EquationSpec spec(kZ3, Sign::Plus, neg, DiracCombination::dirac(0));
    const auto [f, g] = build_family(spec, fam, kPolicy);
    CHECK(max_abs_diff(f, 3.0 * chars[2].materialized) <= 1e-12);

    CHECK_THROWS_AS((void)parse_family_json(kZ3, chars, R"({"family":"NOPE"})"), ParseError);
    CHECK_THROWS_AS((void)parse_family_json(kZ3, chars, R"({"family":"KW2","m":9})"), ParseError);

    const SolutionFamily v2 =
        parse_family_json(kZ3, chars, R"({"family":"V2","chi":2,"lambda":2})");
    const EquationSpec van1(kZ3, Sign::Minus, neg, std::nullopt);
    const auto pair = build_family(van1, v2, kPolicy);
    CHECK(residual_max(van1, pair.f, pair.g) <= 1e-9);
}

TEST_CASE("constructor and classifier agree across the corpus") {
    for (const CorpusEntry& entry : builtin_corpus()) {
        const auto chars = enumerate_multiplicative(entry.semigroup);
        for (const Automorphism& sigma : entry.sigmas) {
            // unweighted families
            const EquationSpec wilson(entry.semigroup, Sign::Plus, sigma, std::nullopt);
            for (const Character& chi : chars) {
                if (max_abs(chi.materialized) <= kPolicy.epsilon) continue;
                const auto pair = build_family(wilson, W2{chi, 2.0, 0.0}, kPolicy);
                const FamilyMatch match = classify(wilson, pair.f, pair.g, chars, kPolicy);
                CHECK(match.tag == FamilyTag::W2);
                CHECK(match.fit_residual <= 1e-8);
            }
        }
    }
}
