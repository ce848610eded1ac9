#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "feqs/morphisms.hpp"
#include "feqs/semigroup.hpp"

namespace feqs {

using Complex = std::complex<double>;

/// Tolerance for equality-to-zero decisions, in the max-abs norm.
struct NumericPolicy {
    double epsilon = 1e-9;
};

/// A total map from semigroup elements to complex values.
class CFunction {
public:
    CFunction() = default;
    explicit CFunction(std::vector<Complex> values) : values_(std::move(values)) {}

    static CFunction zeros(int n) { return CFunction(std::vector<Complex>(n, 0.0)); }
    static CFunction ones(int n) { return CFunction(std::vector<Complex>(n, 1.0)); }
    static CFunction constant(int n, Complex c) { return CFunction(std::vector<Complex>(n, c)); }
    static CFunction indicator(int n, ElementId x) {
        CFunction f = zeros(n);
        f[x] = 1.0;
        return f;
    }

    int size() const { return static_cast<int>(values_.size()); }
    Complex& operator[](ElementId x) { return values_[x]; }
    const Complex& operator[](ElementId x) const { return values_[x]; }
    const std::vector<Complex>& values() const { return values_; }

    CFunction& operator+=(const CFunction& o);
    CFunction& operator-=(const CFunction& o);
    CFunction& operator*=(Complex c);

    friend CFunction operator+(CFunction a, const CFunction& b) { return a += b; }
    friend CFunction operator-(CFunction a, const CFunction& b) { return a -= b; }
    friend CFunction operator*(Complex c, CFunction f) { return f *= c; }
    friend CFunction operator-(CFunction f) { return f *= -1.0; }

    bool operator==(const CFunction&) const = default;

private:
    std::vector<Complex> values_;
};

double max_abs(const CFunction& f);
double max_abs_diff(const CFunction& a, const CFunction& b);
bool approx_zero(const CFunction& f, const NumericPolicy& policy);
bool approx_equal(const CFunction& a, const CFunction& b, const NumericPolicy& policy);

/// f* := f composed with sigma.
CFunction star(const CFunction& f, const Automorphism& sigma);

/// (f + f*)/2 and (f - f*)/2.
std::pair<CFunction, CFunction> even_odd_parts(const CFunction& f, const Automorphism& sigma);

bool is_multiplicative(const Semigroup& s, const CFunction& f, const NumericPolicy& policy);
bool is_additive(const Semigroup& s, const CFunction& f, const NumericPolicy& policy);
bool is_central(const Semigroup& s, const CFunction& f, const NumericPolicy& policy);
/// Central and invariant under swapping the last two factors of any triple.
bool is_abelian(const Semigroup& s, const CFunction& f, const NumericPolicy& policy);

/// Parses "1, -0.5+0.866i, 0" style literals ('i' suffix notation).
Complex parse_complex(const std::string& text);
CFunction parse_cfunction(const std::string& literal);

std::string render_complex(Complex v);
std::string render_cfunction(const CFunction& f);

}  // namespace feqs
