#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "feqs/characters.hpp"
#include "feqs/corpus.hpp"

using namespace feqs;

namespace {

const Semigroup kZ3({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
const Semigroup kZ4({{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}});
const Semigroup kN3({{0, 0, 0}, {0, 0, 1}, {0, 1, 2}});
const Semigroup kNull2({{0, 0}, {0, 0}});
const NumericPolicy kPolicy;

// independent oracle: enumerate every assignment from the per-element
// candidate sets using float arithmetic only, keep the multiplicative ones
std::vector<std::vector<Complex>> oracle_characters(const Semigroup& s) {
    const int n = s.order();
    std::vector<std::vector<Complex>> candidates(n);
    for (int x = 0; x < n; ++x) {
        const int p = power_profile(s, x).period;
        candidates[x].push_back(0.0);
        for (int k = 0; k < p; ++k)
            candidates[x].push_back(std::polar(1.0, 2.0 * M_PI * k / p));
    }
    std::vector<std::vector<Complex>> out;
    std::vector<int> pick(n, 0);
    for (;;) {
        std::vector<Complex> vals(n);
        for (int x = 0; x < n; ++x) vals[x] = candidates[x][pick[x]];
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y)
                ok = std::abs(vals[s.at(x, y)] - vals[x] * vals[y]) < 1e-9;
        if (ok) out.push_back(vals);
        int pos = n - 1;
        while (pos >= 0 && pick[pos] + 1 == static_cast<int>(candidates[pos].size()))
            pick[pos--] = 0;
        if (pos < 0) break;
        ++pick[pos];
    }
    // dedup numerically equal assignments
    std::vector<std::vector<Complex>> dedup;
    for (const auto& v : out) {
        const bool seen = std::any_of(dedup.begin(), dedup.end(), [&](const auto& w) {
            for (int i = 0; i < n; ++i)
                if (std::abs(v[i] - w[i]) > 1e-9) return false;
            return true;
        });
        if (!seen) dedup.push_back(v);
    }
    return dedup;
}

bool contains_function(const std::vector<Character>& chars, const std::vector<Complex>& vals) {
    return std::any_of(chars.begin(), chars.end(), [&](const Character& c) {
        for (size_t i = 0; i < vals.size(); ++i)
            if (std::abs(c.materialized[static_cast<int>(i)] - vals[i]) > 1e-9) return false;
        return true;
    });
}

}  // namespace

TEST_CASE("root of unity arithmetic") {
    const RootOfUnity i = RootOfUnity::angle(1, 4);
    CHECK((i * i) == RootOfUnity::angle(1, 2));
    CHECK((i * i).to_string() == "-1");
    CHECK(RootOfUnity::angle(5, 10) == RootOfUnity::angle(1, 2));
    CHECK(RootOfUnity::angle(4, 4) == RootOfUnity::one());
    CHECK(RootOfUnity::angle(-1, 3) == RootOfUnity::angle(2, 3));
    CHECK(RootOfUnity::zero().is_zero());
    CHECK((RootOfUnity::zero() * i).is_zero());
    CHECK(RootOfUnity::angle(2, 3).to_string() == "zeta3^2");
    CHECK(RootOfUnity::angle(1, 4).to_string() == "zeta4");
    CHECK(RootOfUnity::one().to_string() == "1");
    CHECK(RootOfUnity::zero() < RootOfUnity::one());
    CHECK(RootOfUnity::one() < RootOfUnity::angle(1, 3));
    CHECK(RootOfUnity::angle(1, 3) < RootOfUnity::angle(1, 2));
    CHECK(std::abs(RootOfUnity::angle(1, 2).value() - Complex(-1.0)) == 0.0);
}

TEST_CASE("enumeration on the named examples") {
    SUBCASE("Z3 has the zero, the one, and two cube-root characters") {
        const auto chars = enumerate_multiplicative(kZ3);
        REQUIRE(chars.size() == 4);
        CHECK(chars[0].is_zero());
        CHECK(chars[1].symbolic[1] == RootOfUnity::one());
        CHECK(chars[2].symbolic[1] == RootOfUnity::angle(1, 3));
        CHECK(chars[3].symbolic[1] == RootOfUnity::angle(2, 3));
    }
    SUBCASE("N3: zero, indicator of 1, and the constant one") {
        const auto chars = enumerate_multiplicative(kN3);
        REQUIRE(chars.size() == 3);
        CHECK(chars[0].is_zero());
        CHECK(contains_function(chars, {0.0, 0.0, 1.0}));
        CHECK(contains_function(chars, {1.0, 1.0, 1.0}));
    }
    SUBCASE("Z4 has five") { CHECK(enumerate_multiplicative(kZ4).size() == 5); }
    SUBCASE("P9 has five") {
        CHECK(enumerate_multiplicative(direct_product(kN3, kN3)).size() == 5);
    }
}

TEST_CASE("enumeration is complete and exact at micro scale") {
    for (int order = 1; order <= 3; ++order) {
        for (const Semigroup& s : generate_semigroups(order, true)) {
            const auto chars = enumerate_multiplicative(s);
            const auto expected = oracle_characters(s);
            REQUIRE(chars.size() == expected.size());
            for (const auto& vals : expected) CHECK(contains_function(chars, vals));

            // zero function always present
            CHECK(chars[0].is_zero());

            // exact in symbolic form and within epsilon in float form
            for (const Character& c : chars) {
                for (int x = 0; x < s.order(); ++x)
                    for (int y = 0; y < s.order(); ++y)
                        CHECK(c.symbolic[s.at(x, y)] == c.symbolic[x] * c.symbolic[y]);
                CHECK(is_multiplicative(s, c.materialized, kPolicy));
            }

            // sorted by symbolic tuple, no duplicates
            for (size_t i = 0; i + 1 < chars.size(); ++i)
                CHECK(chars[i].symbolic < chars[i + 1].symbolic);
        }
    }
}

TEST_CASE("closure under star for involutive sigma") {
    for (const CorpusEntry& entry : builtin_corpus()) {
        const auto chars = enumerate_multiplicative(entry.semigroup);
        for (const Automorphism& sigma : entry.sigmas)
            for (const Character& c : chars) {
                const CFunction starred = star(c.materialized, sigma);
                CHECK(std::any_of(chars.begin(), chars.end(), [&](const Character& d) {
                    return max_abs_diff(d.materialized, starred) <= 1e-9;
                }));
            }
    }
}

TEST_CASE("sine addition basis") {
    SUBCASE("chi = 1 on a group forces phi = 0") {
        CHECK(sine_addition_basis(kZ3, CFunction::ones(3), kPolicy).empty());
    }
    SUBCASE("N3 with the indicator character has exactly the indicator of a") {
        const auto basis = sine_addition_basis(kN3, CFunction({0.0, 0.0, 1.0}), kPolicy);
        REQUIRE(basis.size() == 1);
        CHECK(std::abs(basis[0][0]) <= 1e-12);
        CHECK(std::abs(basis[0][1]) > 0.5);
        CHECK(std::abs(basis[0][2]) <= 1e-12);
    }
    SUBCASE("chi = 0 degenerates to functions vanishing on the product set") {
        const auto basis = sine_addition_basis(kNull2, CFunction::zeros(2), kPolicy);
        REQUIRE(basis.size() == 1);  // only phi(0) is pinned
        CHECK(std::abs(basis[0][0]) <= 1e-12);
        CHECK(std::abs(basis[0][1]) > 0.5);
    }
    SUBCASE("phi(x^2) = 2 phi(x) chi(x)") {
        for (const CorpusEntry& entry : builtin_corpus())
            for (const Character& chi : enumerate_multiplicative(entry.semigroup))
                for (const CFunction& phi :
                     sine_addition_basis(entry.semigroup, chi.materialized, kPolicy))
                    for (int x = 0; x < entry.semigroup.order(); ++x) {
                        const Complex lhs = phi[entry.semigroup.at(x, x)];
                        const Complex rhs = 2.0 * phi[x] * chi.materialized[x];
                        CHECK(std::abs(lhs - rhs) <= 1e-9);
                    }
    }
}

TEST_CASE("additive functions vanish on finite semigroups") {
    CHECK(additive_basis(Semigroup({{0, 1}, {1, 0}}), kPolicy).empty());
    CHECK(additive_basis(kN3, kPolicy).empty());
    CHECK(additive_basis(kNull2, kPolicy).empty());
    for (const CorpusEntry& entry : builtin_corpus())
        CHECK(additive_basis(entry.semigroup, kPolicy).empty());
    for (const Semigroup& s : generate_semigroups(3, true))
        CHECK(additive_basis(s, kPolicy).empty());
}
