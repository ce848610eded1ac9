#include "feqs/morphisms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace feqs {

bool Automorphism::is_identity() const {
    for (int i = 0; i < static_cast<int>(perm.size()); ++i)
        if (perm[i] != i) return false;
    return true;
}

Automorphism identity_automorphism(const Semigroup& s) {
    Automorphism a;
    a.perm.resize(s.order());
    std::iota(a.perm.begin(), a.perm.end(), 0);
    a.involutive = true;
    return a;
}

MorphismCheck validate_involutive_automorphism(const Semigroup& s,
                                               const std::vector<ElementId>& perm) {
    const int n = s.order();
    if (static_cast<int>(perm.size()) != n)
        return {MorphismCheck::Status::NotBijective, 0, 0};
    std::vector<char> seen(n, 0);
    for (int x = 0; x < n; ++x) {
        if (perm[x] < 0 || perm[x] >= n || seen[perm[x]])
            return {MorphismCheck::Status::NotBijective, x, 0};
        seen[perm[x]] = 1;
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (perm[s.at(x, y)] != s.at(perm[x], perm[y]))
                return {MorphismCheck::Status::NotMultiplicative, x, y};
    for (int x = 0; x < n; ++x)
        if (perm[perm[x]] != x) return {MorphismCheck::Status::NotInvolutive, x, 0};
    return {};
}

namespace {

void search(const Semigroup& s, std::vector<ElementId>& perm, std::vector<char>& used,
            int depth, std::vector<Automorphism>& out) {
    const int n = s.order();
    if (depth == n) {
        Automorphism a;
        a.perm = perm;
        a.involutive = true;
        for (int x = 0; x < n && a.involutive; ++x) a.involutive = perm[perm[x]] == x;
        out.push_back(std::move(a));
        return;
    }
    for (ElementId image = 0; image < n; ++image) {
        if (used[image]) continue;
        perm[depth] = image;
        bool ok = true;
        // check every pair made of assigned elements only
        for (int x = 0; x <= depth && ok; ++x) {
            for (int y = 0; y <= depth && ok; ++y) {
                const ElementId q = s.at(x, y);
                const ElementId w = s.at(perm[x], perm[y]);
                if (q <= depth) {
                    ok = perm[q] == w;
                } else {
                    // perm[q] is forced to w later; prune if w is already claimed
                    ok = !used[w] && w != image;
                }
            }
        }
        if (ok) {
            used[image] = 1;
            search(s, perm, used, depth + 1, out);
            used[image] = 0;
        }
    }
}

}  // namespace

std::vector<Automorphism> enumerate_automorphisms(const Semigroup& s) {
    std::vector<ElementId> perm(s.order());
    std::vector<char> used(s.order(), 0);
    std::vector<Automorphism> out;
    search(s, perm, used, 0, out);
    return out;
}

Automorphism parse_sigma_spec(const Semigroup& s, const std::string& spec) {
    if (spec == "id") return identity_automorphism(s);
    std::vector<ElementId> perm;
    std::string tok;
    for (size_t i = 0; i <= spec.size(); ++i) {
        if (i == spec.size() || spec[i] == ',') {
            const size_t a = tok.find_first_not_of(" \t");
            const size_t b = tok.find_last_not_of(" \t");
            if (a == std::string::npos)
                throw std::invalid_argument("sigma spec: empty image entry");
            const auto id = s.element_by_name(tok.substr(a, b - a + 1));
            if (!id) throw std::invalid_argument("sigma spec: unknown element '" + tok + "'");
            perm.push_back(*id);
            tok.clear();
        } else {
            tok += spec[i];
        }
    }
    const MorphismCheck check = validate_involutive_automorphism(s, perm);
    if (!check.ok()) {
        const char* why = check.status == MorphismCheck::Status::NotBijective ? "not a bijection"
                          : check.status == MorphismCheck::Status::NotMultiplicative
                              ? "not multiplicative"
                              : "not involutive";
        throw std::invalid_argument(std::string("sigma spec: ") + why + " (witness " +
                                    std::to_string(check.x) + "," + std::to_string(check.y) + ")");
    }
    Automorphism a;
    a.perm = std::move(perm);
    a.involutive = true;
    return a;
}

std::string render_sigma_spec(const Automorphism& sigma) {
    if (sigma.is_identity()) return "id";
    std::string out;
    for (size_t i = 0; i < sigma.perm.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(sigma.perm[i]);
    }
    return out;
}

}  // namespace feqs
