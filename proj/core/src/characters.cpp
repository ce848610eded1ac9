#include "feqs/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>

namespace feqs {

RootOfUnity RootOfUnity::angle(std::int64_t num, std::int64_t den) {
    num %= den;
    if (num < 0) num += den;
    const std::int64_t g = std::gcd(num, den);
    return RootOfUnity(false, num / g, den / g);
}

Complex RootOfUnity::value() const {
    if (zero_) return 0.0;
    if (num_ == 0) return 1.0;
    if (2 * num_ == den_) return -1.0;
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
    return {std::cos(theta), std::sin(theta)};
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
    if (zero_ || o.zero_) return zero();
    return angle(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

std::strong_ordering RootOfUnity::operator<=>(const RootOfUnity& o) const {
    if (zero_ != o.zero_) return zero_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (zero_) return std::strong_ordering::equal;
    return num_ * o.den_ <=> o.num_ * den_;
}

std::string RootOfUnity::to_string() const {
    if (zero_) return "0";
    if (num_ == 0) return "1";
    if (den_ == 2) return "-1";
    std::string out = "zeta" + std::to_string(den_);
    if (num_ != 1) out += "^" + std::to_string(num_);
    return out;
}

bool Character::is_zero() const {
    return std::all_of(symbolic.begin(), symbolic.end(),
                       [](const RootOfUnity& v) { return v.is_zero(); });
}

std::string Character::to_string() const {
    std::string out;
    for (size_t i = 0; i < symbolic.size(); ++i) {
        if (i) out += ", ";
        out += symbolic[i].to_string();
    }
    return out;
}

namespace {

struct CharSearch {
    const Semigroup& s;
    std::vector<std::vector<RootOfUnity>> candidates;  // per element, zero first then angles
    std::vector<int> periods;
    std::vector<RootOfUnity> assign;
    std::vector<Character>& out;

    bool consistent(int depth) const {
        // Pairs with an assigned product must multiply out exactly. Pairs
        // whose product lies ahead force its future value: conflicting
        // forcings, or a forced value outside the product's candidate set,
        // kill the branch early.
        std::vector<std::optional<RootOfUnity>> need(s.order() - depth - 1);
        for (int x = 0; x <= depth; ++x) {
            for (int y = 0; y <= depth; ++y) {
                const ElementId q = s.at(x, y);
                const RootOfUnity v = assign[x] * assign[y];
                if (q <= depth) {
                    if (!(assign[q] == v)) return false;
                } else {
                    auto& want = need[q - depth - 1];
                    if (want && !(*want == v)) return false;
                    if (!v.is_zero() && periods[q] % v.den() != 0) return false;
                    want = v;
                }
            }
        }
        return true;
    }

    void run(int depth) {
        if (depth == s.order()) {
            Character ch;
            ch.symbolic = assign;
            std::vector<Complex> vals(s.order());
            for (int i = 0; i < s.order(); ++i) vals[i] = assign[i].value();
            ch.materialized = CFunction(std::move(vals));
            out.push_back(std::move(ch));
            return;
        }
        for (const RootOfUnity& v : candidates[depth]) {
            assign[depth] = v;
            if (consistent(depth)) run(depth + 1);
        }
    }
};

}  // namespace

std::vector<Character> enumerate_multiplicative(const Semigroup& s) {
    std::vector<std::vector<RootOfUnity>> candidates(s.order());
    std::vector<int> periods(s.order());
    for (int x = 0; x < s.order(); ++x) {
        const int p = power_profile(s, x).period;
        periods[x] = p;
        candidates[x].push_back(RootOfUnity::zero());
        for (int k = 0; k < p; ++k) candidates[x].push_back(RootOfUnity::angle(k, p));
        std::sort(candidates[x].begin(), candidates[x].end());
        candidates[x].erase(std::unique(candidates[x].begin(), candidates[x].end()),
                            candidates[x].end());
    }
    std::vector<Character> out;
    std::vector<RootOfUnity> assign(s.order(), RootOfUnity::zero());
    CharSearch search{s, std::move(candidates), std::move(periods), std::move(assign), out};
    search.run(0);
    std::sort(out.begin(), out.end(),
              [](const Character& a, const Character& b) { return a.symbolic < b.symbolic; });
    return out;
}

std::vector<CFunction> sine_addition_basis(const Semigroup& s, const CFunction& chi,
                                           const NumericPolicy& policy) {
    const int n = s.order();
    linalg::Matrix rows;
    rows.reserve(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            linalg::Row r(n, 0.0);
            r[s.at(x, y)] += 1.0;
            r[x] -= chi[y];
            r[y] -= chi[x];
            rows.push_back(std::move(r));
        }
    }
    std::vector<CFunction> basis;
    for (auto& v : linalg::nullspace_basis(std::move(rows), n, policy))
        basis.emplace_back(std::move(v));
    return basis;
}

std::vector<CFunction> sine_addition_basis(const Semigroup& s, const Character& chi,
                                           const NumericPolicy& policy) {
    return sine_addition_basis(s, chi.materialized, policy);
}

std::vector<CFunction> additive_basis(const Semigroup& s, const NumericPolicy& policy) {
    const int n = s.order();
    linalg::Matrix rows;
    rows.reserve(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            linalg::Row r(n, 0.0);
            r[s.at(x, y)] += 1.0;
            r[x] -= 1.0;
            r[y] -= 1.0;
            rows.push_back(std::move(r));
        }
    }
    std::vector<CFunction> basis;
    for (auto& v : linalg::nullspace_basis(std::move(rows), n, policy))
        basis.emplace_back(std::move(v));
    return basis;
}

}  // namespace feqs
