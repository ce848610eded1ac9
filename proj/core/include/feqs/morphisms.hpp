#pragma once

#include <string>
#include <vector>

#include "feqs/semigroup.hpp"

namespace feqs {

/// A product-preserving permutation of the elements of a fixed semigroup.
struct Automorphism {
    std::vector<ElementId> perm;
    bool involutive = false;

    ElementId operator()(ElementId x) const { return perm[x]; }
    bool is_identity() const;
};

inline ElementId apply(const Automorphism& sigma, ElementId x) { return sigma.perm[x]; }

Automorphism identity_automorphism(const Semigroup& s);

struct MorphismCheck {
    enum class Status { Ok, NotBijective, NotMultiplicative, NotInvolutive };
    Status status = Status::Ok;
    ElementId x = 0, y = 0;  // witness pair (x only for NotInvolutive)

    bool ok() const { return status == Status::Ok; }
};

/// Checks bijectivity, then sigma(xy) = sigma(x)sigma(y), then sigma^2 = id,
/// reporting the first violated condition with a witness.
MorphismCheck validate_involutive_automorphism(const Semigroup& s,
                                               const std::vector<ElementId>& perm);

/// All automorphisms, involutive or not, in lexicographic order of the
/// permutation. Brute-force search with pruning on the first product
/// violation.
std::vector<Automorphism> enumerate_automorphisms(const Semigroup& s);

/// Parses the CLI sigma spec: "id" or an image list "2,1,0". Rejects
/// anything that fails validate_involutive_automorphism.
Automorphism parse_sigma_spec(const Semigroup& s, const std::string& spec);

std::string render_sigma_spec(const Automorphism& sigma);

}  // namespace feqs
