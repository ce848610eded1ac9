#include <doctest.h>

#include <algorithm>

#include "feqs/corpus.hpp"
#include "feqs/morphisms.hpp"

using namespace feqs;

namespace {

const Semigroup kZ3({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
const Semigroup kZ4({{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}});
const Semigroup kN3({{0, 0, 0}, {0, 0, 1}, {0, 1, 2}});
const Semigroup kLZ2({{0, 0}, {1, 1}});

}  // namespace

TEST_CASE("enumeration finds exactly the automorphisms") {
    SUBCASE("Z3: identity and negation, both involutive") {
        const auto autos = enumerate_automorphisms(kZ3);
        REQUIRE(autos.size() == 2);
        CHECK(autos[0].perm == std::vector<ElementId>{0, 1, 2});
        CHECK(autos[1].perm == std::vector<ElementId>{0, 2, 1});
        CHECK(autos[0].involutive);
        CHECK(autos[1].involutive);
    }
    SUBCASE("N3: identity only") {
        const auto autos = enumerate_automorphisms(kN3);
        REQUIRE(autos.size() == 1);
        CHECK(autos[0].is_identity());
    }
    SUBCASE("LZ2: every permutation works") {
        const auto autos = enumerate_automorphisms(kLZ2);
        REQUIRE(autos.size() == 2);
        CHECK(autos[1].perm == std::vector<ElementId>{1, 0});
        CHECK(autos[1].involutive);
    }
}

TEST_CASE("validation") {
    CHECK(validate_involutive_automorphism(kZ3, {0, 1, 2}).ok());
    CHECK(validate_involutive_automorphism(kZ4, {0, 3, 2, 1}).ok());

    const MorphismCheck shift = validate_involutive_automorphism(kZ3, {1, 2, 0});
    CHECK(!shift.ok());
    CHECK((shift.status == MorphismCheck::Status::NotMultiplicative ||
           shift.status == MorphismCheck::Status::NotInvolutive));

    CHECK(validate_involutive_automorphism(kZ3, {0, 0, 1}).status ==
          MorphismCheck::Status::NotBijective);
    CHECK(validate_involutive_automorphism(kZ3, {0, 1}).status ==
          MorphismCheck::Status::NotBijective);
}

TEST_CASE("apply") {
    const Automorphism id = identity_automorphism(kZ4);
    CHECK(apply(id, 2) == 2);
    const Automorphism neg = parse_sigma_spec(kZ4, "0,3,2,1");
    CHECK(apply(neg, 1) == 3);
}

TEST_CASE("sigma spec parsing") {
    CHECK(parse_sigma_spec(kZ3, "id").is_identity());
    CHECK(parse_sigma_spec(kZ3, "0,2,1").perm == std::vector<ElementId>{0, 2, 1});
    CHECK_THROWS_AS(parse_sigma_spec(kZ3, "1,2,0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sigma_spec(kZ3, "0,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sigma_spec(kZ3, "0,1,bogus"), std::invalid_argument);
    CHECK(render_sigma_spec(parse_sigma_spec(kZ3, "0,2,1")) == "0,2,1");
}

TEST_CASE("corpus-wide invariants") {
    for (const CorpusEntry& entry : builtin_corpus()) {
        const auto autos = enumerate_automorphisms(entry.semigroup);

        // the identity is always enumerated
        CHECK(std::any_of(autos.begin(), autos.end(),
                          [](const Automorphism& a) { return a.is_identity(); }));

        // closure under composition
        for (const auto& a : autos)
            for (const auto& b : autos) {
                std::vector<ElementId> comp(a.perm.size());
                for (size_t x = 0; x < comp.size(); ++x) comp[x] = a.perm[b.perm[x]];
                CHECK(std::any_of(autos.begin(), autos.end(),
                                  [&](const Automorphism& c) { return c.perm == comp; }));
            }

        // involutive sigmas map the center onto itself
        const auto center = compute_center(entry.semigroup);
        for (const auto& a : autos) {
            if (!a.involutive) continue;
            for (ElementId z : center)
                CHECK(std::find(center.begin(), center.end(), a(z)) != center.end());
        }
    }
}

TEST_CASE("P9 has exactly the coordinate swap beyond the identity") {
    const Semigroup p9 = direct_product(kN3, kN3);
    const auto autos = enumerate_automorphisms(p9);
    REQUIRE(autos.size() == 2);  // frozen by permutation-search oracle
    CHECK(autos[1].involutive);
    // (a,1) = index 5 maps to (1,a) = index 7
    CHECK(autos[1](5) == 7);
}
