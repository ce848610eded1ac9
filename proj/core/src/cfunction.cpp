#include "feqs/cfunction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace feqs {

CFunction& CFunction::operator+=(const CFunction& o) {
    for (size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}

CFunction& CFunction::operator-=(const CFunction& o) {
    for (size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
}

CFunction& CFunction::operator*=(Complex c) {
    for (auto& v : values_) v *= c;
    return *this;
}

double max_abs(const CFunction& f) {
    double m = 0.0;
    for (const auto& v : f.values()) m = std::max(m, std::abs(v));
    return m;
}

double max_abs_diff(const CFunction& a, const CFunction& b) {
    double m = 0.0;
    for (int i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

bool approx_zero(const CFunction& f, const NumericPolicy& policy) {
    return max_abs(f) <= policy.epsilon;
}

bool approx_equal(const CFunction& a, const CFunction& b, const NumericPolicy& policy) {
    return a.size() == b.size() && max_abs_diff(a, b) <= policy.epsilon;
}

CFunction star(const CFunction& f, const Automorphism& sigma) {
    std::vector<Complex> out(f.size());
    for (int x = 0; x < f.size(); ++x) out[x] = f[sigma(x)];
    return CFunction(std::move(out));
}

std::pair<CFunction, CFunction> even_odd_parts(const CFunction& f, const Automorphism& sigma) {
    const CFunction fs = star(f, sigma);
    CFunction even = f, odd = f;
    even += fs;
    even *= 0.5;
    odd -= fs;
    odd *= 0.5;
    return {even, odd};
}

bool is_multiplicative(const Semigroup& s, const CFunction& f, const NumericPolicy& policy) {
    for (int x = 0; x < s.order(); ++x)
        for (int y = 0; y < s.order(); ++y)
            if (std::abs(f[s.at(x, y)] - f[x] * f[y]) > policy.epsilon) return false;
    return true;
}

bool is_additive(const Semigroup& s, const CFunction& f, const NumericPolicy& policy) {
    for (int x = 0; x < s.order(); ++x)
        for (int y = 0; y < s.order(); ++y)
            if (std::abs(f[s.at(x, y)] - f[x] - f[y]) > policy.epsilon) return false;
    return true;
}

bool is_central(const Semigroup& s, const CFunction& f, const NumericPolicy& policy) {
    for (int x = 0; x < s.order(); ++x)
        for (int y = 0; y < s.order(); ++y)
            if (std::abs(f[s.at(x, y)] - f[s.at(y, x)]) > policy.epsilon) return false;
    return true;
}

bool is_abelian(const Semigroup& s, const CFunction& f, const NumericPolicy& policy) {
    if (!is_central(s, f, policy)) return false;
    for (int x = 0; x < s.order(); ++x)
        for (int y = 0; y < s.order(); ++y)
            for (int z = 0; z < s.order(); ++z) {
                const ElementId xyz = s.at(s.at(x, y), z);
                const ElementId xzy = s.at(s.at(x, z), y);
                if (std::abs(f[xyz] - f[xzy]) > policy.epsilon) return false;
            }
    return true;
}

Complex parse_complex(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("complex literal: empty");

    // split an optional trailing imaginary term off "a+bi" / "a-bi"
    if (t.back() == 'i' || t.back() == 'I' || t.back() == 'j') {
        std::string body = t.substr(0, t.size() - 1);
        // find the sign separating real and imaginary parts (not an exponent sign)
        for (size_t k = body.size(); k-- > 1;) {
            if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
                const double re = std::stod(body.substr(0, k));
                const std::string im = body.substr(k);
                return {re, im == "+" ? 1.0 : im == "-" ? -1.0 : std::stod(im)};
            }
        }
        if (body.empty() || body == "+") return {0.0, 1.0};
        if (body == "-") return {0.0, -1.0};
        return {0.0, std::stod(body)};
    }
    size_t consumed = 0;
    const double re = std::stod(t, &consumed);
    if (consumed != t.size()) throw std::invalid_argument("complex literal: '" + text + "'");
    return {re, 0.0};
}

CFunction parse_cfunction(const std::string& literal) {
    std::vector<Complex> vals;
    std::string tok;
    for (size_t i = 0; i <= literal.size(); ++i) {
        if (i == literal.size() || literal[i] == ',') {
            vals.push_back(parse_complex(tok));
            tok.clear();
        } else {
            tok += literal[i];
        }
    }
    return CFunction(std::move(vals));
}

namespace {

std::string render_double(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

}  // namespace

std::string render_complex(Complex v) {
    if (v.imag() == 0.0) return render_double(v.real());
    if (v.real() == 0.0) return render_double(v.imag()) + "i";
    return render_double(v.real()) + (v.imag() > 0 ? "+" : "") + render_double(v.imag()) + "i";
}

std::string render_cfunction(const CFunction& f) {
    std::string out;
    for (int i = 0; i < f.size(); ++i) {
        if (i) out += ", ";
        out += render_complex(f[i]);
    }
    return out;
}

}  // namespace feqs
