#include <doctest.h>

#include <cmath>

#include "feqs/characters.hpp"
#include "feqs/equations.hpp"
#include "feqs/linalg.hpp"
#include "feqs/measure.hpp"
#include "feqs/random.hpp"

using namespace feqs;

namespace {

const Semigroup kZ2({{0, 1}, {1, 0}});
const Semigroup kZ3({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
const Semigroup kZ4({{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}});
const Semigroup kN3({{0, 0, 0}, {0, 0, 1}, {0, 1, 2}});
const NumericPolicy kPolicy;

CFunction chi_z3() {
    const Complex w{-0.5, std::sqrt(3.0) / 2.0};
    return CFunction({1.0, w, w * w});
}

CFunction chi_z4_i() { return CFunction({1.0, {0, 1}, -1.0, {0, -1}}); }

EquationSpec z4_minus_spec() {
    return EquationSpec(kZ4, Sign::Minus, parse_sigma_spec(kZ4, "0,3,2,1"),
                        DiracCombination::dirac(1));
}

CFunction z4_minus_g() {
    // g = i (chi - chi*)/2 for chi = (1, i, -1, -i) and sigma = negation
    const Automorphism neg = parse_sigma_spec(kZ4, "0,3,2,1");
    const CFunction chi = chi_z4_i();
    CFunction g = chi - star(chi, neg);
    g *= Complex(0, 0.5);
    return g;
}

}  // namespace

TEST_CASE("pointwise residual") {
    SUBCASE("f = 0 solves everything") {
        const EquationSpec spec(kZ3, Sign::Plus, identity_automorphism(kZ3),
                                DiracCombination::dirac(0));
        SeededRng rng(1, "residual-zero");
        const CFunction g = rng.next_cfunction(3);
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y)
                CHECK(std::abs(residual(spec, CFunction::zeros(3), g, x, y)) == 0.0);
    }
    SUBCASE("weighted plus instance on Z3") {
        const Automorphism neg = parse_sigma_spec(kZ3, "0,2,1");
        const EquationSpec spec(kZ3, Sign::Plus, neg, DiracCombination::dirac(0));
        const CFunction chi = chi_z3();
        CFunction g = chi + star(chi, neg);
        g *= 0.5;
        CHECK(residual_max(spec, chi, g) <= 1e-12);
    }
    SUBCASE("weighted minus instance on Z4") {
        CHECK(residual_max(z4_minus_spec(), chi_z4_i(), z4_minus_g()) <= 1e-12);
    }
}

TEST_CASE("residual_max extremes") {
    const EquationSpec wilson(kZ2, Sign::Plus, identity_automorphism(kZ2), std::nullopt);
    CHECK(residual_max(wilson, CFunction::ones(2), CFunction::ones(2)) == 0.0);
    CHECK(residual_max(wilson, CFunction::ones(2), CFunction::zeros(2)) == 2.0);
}

TEST_CASE("linear system assembly and nullspace") {
    SUBCASE("jensen system on N3 leaves exactly the constants") {
        for (ElementId z0 : compute_center(kN3)) {
            const EquationSpec spec(kN3, Sign::Plus, identity_automorphism(kN3),
                                    DiracCombination::dirac(z0));
            const auto basis = nullspace(assemble_linear_system(spec, CFunction::ones(3)), kPolicy);
            REQUIRE(basis.size() == 1);
            CHECK(max_abs_diff(basis[0], CFunction::constant(3, basis[0][0])) <= 1e-9);
        }
    }
    SUBCASE("Z4 minus system spans {chi, chi*}") {
        const auto basis = nullspace(assemble_linear_system(z4_minus_spec(), z4_minus_g()), kPolicy);
        REQUIRE(basis.size() == 2);
        const Automorphism neg = parse_sigma_spec(kZ4, "0,3,2,1");
        const CFunction chi = chi_z4_i();
        for (const CFunction& f : basis) {
            const auto fit = linalg::least_squares_fit({chi, star(chi, neg)}, f);
            CHECK(fit.residual <= 1e-9);
        }
    }
    SUBCASE("random g admits only f = 0") {
        SeededRng rng(0, "test-random-g");
        const EquationSpec spec(kZ3, Sign::Plus, parse_sigma_spec(kZ3, "0,2,1"),
                                DiracCombination::dirac(1));
        for (int trial = 0; trial < 20; ++trial) {
            const auto basis =
                nullspace(assemble_linear_system(spec, rng.next_cfunction(3)), kPolicy);
            CHECK(basis.empty());
        }
    }
    SUBCASE("row encoding matches the residual") {
        // row(x,y) dot f must equal residual(spec, f, g, x, y)
        const EquationSpec spec = z4_minus_spec();
        const CFunction g = z4_minus_g();
        const LinearSystem sys = assemble_linear_system(spec, g);
        SeededRng rng(9, "row-encoding");
        const CFunction f = rng.next_cfunction(4);
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y) {
                Complex dot = 0.0;
                for (int j = 0; j < 4; ++j) dot += sys.rows[x * 4 + y][j] * f[j];
                CHECK(std::abs(dot - residual(spec, f, g, x, y)) < 1e-12);
            }
    }
}

TEST_CASE("nullspace mechanics") {
    SUBCASE("zero matrix yields the standard basis") {
        LinearSystem sys;
        sys.ncols = 3;
        sys.rows.assign(2, linalg::Row(3, 0.0));
        const auto basis = nullspace(sys, kPolicy);
        REQUIRE(basis.size() == 3);
        for (int j = 0; j < 3; ++j) CHECK(basis[j][j] == Complex(1.0));
    }
    SUBCASE("guard band raises IllConditioned") {
        linalg::Matrix m{{Complex(5e-8)}};
        CHECK_THROWS_AS((void)linalg::nullspace_basis(m, 1, kPolicy), linalg::IllConditioned);
        linalg::Matrix ok{{Complex(5e-7)}};
        CHECK(linalg::nullspace_basis(ok, 1, kPolicy).empty());
        linalg::Matrix tiny{{Complex(5e-10)}};
        CHECK(linalg::nullspace_basis(tiny, 1, kPolicy).size() == 1);
    }
    SUBCASE("soundness: basis vectors are solutions within 10 epsilon") {
        const EquationSpec spec = z4_minus_spec();
        const CFunction g = z4_minus_g();
        for (const CFunction& f : nullspace(assemble_linear_system(spec, g), kPolicy))
            CHECK(residual_max(spec, f, g) <= 10.0 * kPolicy.epsilon);
    }
}

TEST_CASE("spec construction validates its pieces") {
    CHECK_THROWS_AS(EquationSpec(kZ3, Sign::Plus, Automorphism{{1, 2, 0}, false},
                                 DiracCombination::dirac(0)),
                    std::invalid_argument);
    const Semigroup lz2({{0, 0}, {1, 1}});
    CHECK_THROWS_AS(EquationSpec(lz2, Sign::Plus, identity_automorphism(lz2),
                                 DiracCombination::dirac(0)),
                    std::invalid_argument);
}

TEST_CASE("monoid reduction identity for the weighted plus equation") {
    // on a monoid, smear(mu, f) = g(e) f for every solution pair
    const Automorphism neg = parse_sigma_spec(kZ3, "0,2,1");
    const DiracCombination mu{{{1, 2.0}, {2, {1.0, -1.0}}}};
    const EquationSpec spec(kZ3, Sign::Plus, neg, mu);
    const CFunction chi = chi_z3();
    const Complex ic = integrate(mu, chi);
    CFunction g = chi + star(chi, neg);
    g *= 0.5 * ic;
    REQUIRE(residual_max(spec, chi, g) <= 1e-9);
    CFunction dev = smear(kZ3, mu, chi);
    dev -= g[0] * chi;  // e = 0
    CHECK(max_abs(dev) <= 1e-9);
}
