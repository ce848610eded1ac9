#include <doctest.h>

#include <cmath>

#include "feqs/cfunction.hpp"
#include "feqs/random.hpp"

using namespace feqs;

namespace {

const Semigroup kZ3({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
const Semigroup kLZ2({{0, 0}, {1, 1}});
const NumericPolicy kPolicy;

const Complex kOmega{-0.5, std::sqrt(3.0) / 2.0};

CFunction chi_z3() { return CFunction({1.0, kOmega, std::conj(kOmega)}); }

}  // namespace

TEST_CASE("star") {
    const Automorphism id = identity_automorphism(kZ3);
    const Automorphism neg = parse_sigma_spec(kZ3, "0,2,1");
    const CFunction chi = chi_z3();

    CHECK(approx_equal(star(chi, id), chi, kPolicy));
    const CFunction chis = star(chi, neg);
    CHECK(std::abs(chis[1] - std::conj(kOmega)) < 1e-12);
    CHECK(std::abs(chis[2] - kOmega) < 1e-12);

    SeededRng rng(7, "star-involution");
    for (int trial = 0; trial < 20; ++trial) {
        const CFunction f = rng.next_cfunction(3);
        CHECK(approx_equal(star(star(f, neg), neg), f, kPolicy));
    }
}

TEST_CASE("even and odd parts") {
    const Automorphism id = identity_automorphism(kZ3);
    const Automorphism neg = parse_sigma_spec(kZ3, "0,2,1");
    const CFunction chi = chi_z3();

    SUBCASE("sigma = id gives (f, 0)") {
        const auto [even, odd] = even_odd_parts(chi, id);
        CHECK(approx_equal(even, chi, kPolicy));
        CHECK(approx_zero(odd, kPolicy));
    }
    SUBCASE("entrywise arithmetic oracle") {
        const auto [even, odd] = even_odd_parts(chi, neg);
        CHECK(std::abs(even[0] - 1.0) < 1e-12);
        CHECK(std::abs(even[1] - Complex(-0.5, 0.0)) < 1e-12);
        CHECK(std::abs(even[2] - Complex(-0.5, 0.0)) < 1e-12);
        CHECK(std::abs(odd[1] - Complex(0.0, std::sqrt(3.0) / 2.0)) < 1e-12);
    }
    SUBCASE("reconstruction and parity") {
        SeededRng rng(3, "even-odd");
        for (int trial = 0; trial < 20; ++trial) {
            const CFunction f = rng.next_cfunction(3);
            const auto [even, odd] = even_odd_parts(f, neg);
            CHECK(approx_equal(even + odd, f, kPolicy));
            CHECK(approx_equal(star(even, neg), even, kPolicy));
            CHECK(approx_equal(star(odd, neg), -odd, kPolicy));
        }
    }
}

TEST_CASE("structural predicates") {
    CHECK(is_multiplicative(kZ3, CFunction::zeros(3), kPolicy));
    CHECK(is_multiplicative(kZ3, chi_z3(), kPolicy));
    CHECK(!is_multiplicative(kZ3, CFunction({1.0, 2.0, 4.0}), kPolicy));

    CHECK(is_additive(kZ3, CFunction::zeros(3), kPolicy));
    CHECK(!is_additive(kZ3, CFunction::ones(3), kPolicy));

    // any function on a commutative semigroup is central
    SeededRng rng(11, "central");
    for (int trial = 0; trial < 10; ++trial)
        CHECK(is_central(kZ3, rng.next_cfunction(3), kPolicy));

    // abelian implies central
    for (int trial = 0; trial < 50; ++trial) {
        const CFunction f = rng.next_cfunction(2);
        if (is_abelian(kLZ2, f, kPolicy)) CHECK(is_central(kLZ2, f, kPolicy));
    }
    // on the left-zero semigroup central means constant
    CHECK(is_central(kLZ2, CFunction::ones(2), kPolicy));
    CHECK(!is_central(kLZ2, CFunction({1.0, 2.0}), kPolicy));
}

TEST_CASE("complex literals") {
    CHECK(parse_complex("1") == Complex(1, 0));
    CHECK(parse_complex("-0.5+0.866i") == Complex(-0.5, 0.866));
    CHECK(parse_complex("i") == Complex(0, 1));
    CHECK(parse_complex("-i") == Complex(0, -1));
    CHECK(parse_complex("2i") == Complex(0, 2));
    CHECK(parse_complex("1-1i") == Complex(1, -1));
    CHECK(parse_complex(" 0 ") == Complex(0, 0));
    CHECK_THROWS(parse_complex("wat"));
    CHECK_THROWS(parse_complex(""));

    const CFunction f = parse_cfunction("1, -0.5+0.866i, 0");
    REQUIRE(f.size() == 3);
    CHECK(f[1] == Complex(-0.5, 0.866));

    SeededRng rng(5, "complex-roundtrip");
    for (int trial = 0; trial < 50; ++trial) {
        const Complex v = rng.next_complex();
        CHECK(std::abs(parse_complex(render_complex(v)) - v) < 1e-10);
    }
}
