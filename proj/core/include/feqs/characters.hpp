#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "feqs/cfunction.hpp"
#include "feqs/linalg.hpp"
#include "feqs/semigroup.hpp"

namespace feqs {

/// Exact multiplicative value: 0, or exp(2*pi*i * num/den) with num/den in
/// lowest terms and 0 <= num < den. Products are angle additions, so the
/// representation is closed and comparison is exact.
class RootOfUnity {
public:
    static RootOfUnity zero() { return RootOfUnity(true, 0, 1); }
    static RootOfUnity one() { return RootOfUnity(false, 0, 1); }
    /// Reduces num/den mod 1 to lowest terms. den must be positive.
    static RootOfUnity angle(std::int64_t num, std::int64_t den);

    bool is_zero() const { return zero_; }
    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Complex value() const;
    RootOfUnity operator*(const RootOfUnity& o) const;

    bool operator==(const RootOfUnity&) const = default;
    /// zero sorts first, then by angle.
    std::strong_ordering operator<=>(const RootOfUnity& o) const;

    /// "0", "1", "-1", or "zeta<den>^<num>" (power suffix omitted for num=1).
    std::string to_string() const;

private:
    RootOfUnity(bool zero, std::int64_t num, std::int64_t den)
        : zero_(zero), num_(num), den_(den) {}
    bool zero_;
    std::int64_t num_, den_;
};

/// A multiplicative function with its exact symbolic values alongside the
/// float rendering used by the numeric layer.
struct Character {
    std::vector<RootOfUnity> symbolic;
    CFunction materialized;

    bool is_zero() const;
    std::string to_string() const;
};

/// The complete, duplicate-free list of multiplicative functions S -> C,
/// zero function included, sorted by symbolic value tuple. Backtracking
/// over {0} union p(s)-th roots of unity per element, where p(s) is the
/// period of s.
std::vector<Character> enumerate_multiplicative(const Semigroup& s);

/// Basis of solutions of phi(xy) = phi(x)chi(y) + phi(y)chi(x).
std::vector<CFunction> sine_addition_basis(const Semigroup& s, const CFunction& chi,
                                           const NumericPolicy& policy);
std::vector<CFunction> sine_addition_basis(const Semigroup& s, const Character& chi,
                                           const NumericPolicy& policy);

/// Basis of solutions of A(xy) = A(x) + A(y); empty on every finite
/// semigroup since x^i = x^{i+p} forces p*A(x) = 0.
std::vector<CFunction> additive_basis(const Semigroup& s, const NumericPolicy& policy);

}  // namespace feqs
