#include "feqs/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace feqs {

AssocCheck validate_associativity(const CayleyTable& table) {
    const int n = static_cast<int>(table.size());
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(table[x].size()) != n)
            return {AssocCheck::Status::OutOfRange, x, 0, 0};
        for (int y = 0; y < n; ++y)
            if (table[x][y] < 0 || table[x][y] >= n)
                return {AssocCheck::Status::OutOfRange, x, y, 0};
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (table[table[x][y]][z] != table[x][table[y][z]])
                    return {AssocCheck::Status::Counterexample, x, y, z};
    return {};
}

Semigroup::Semigroup(CayleyTable table, std::vector<std::string> names)
    : n_(static_cast<int>(table.size())), table_(std::move(table)), names_(std::move(names)) {
    if (n_ == 0) throw std::invalid_argument("semigroup: empty table");
    const AssocCheck check = validate_associativity(table_);
    if (check.status == AssocCheck::Status::OutOfRange)
        throw std::invalid_argument("semigroup: table entry out of range at (" +
                                    std::to_string(check.x) + "," + std::to_string(check.y) + ")");
    if (check.status == AssocCheck::Status::Counterexample)
        throw std::invalid_argument("semigroup: not associative at (" + std::to_string(check.x) +
                                    "," + std::to_string(check.y) + "," + std::to_string(check.z) + ")");
    if (!names_.empty()) {
        if (static_cast<int>(names_.size()) != n_)
            throw std::invalid_argument("semigroup: expected " + std::to_string(n_) + " names");
        std::set<std::string> distinct(names_.begin(), names_.end());
        if (static_cast<int>(distinct.size()) != n_)
            throw std::invalid_argument("semigroup: duplicate element name");
    }
}

std::string Semigroup::name_of(ElementId x) const {
    return has_names() ? names_[x] : std::to_string(x);
}

std::optional<ElementId> Semigroup::element_by_name(const std::string& s) const {
    for (int i = 0; i < n_; ++i)
        if (has_names() && names_[i] == s) return i;
    // fall back to a decimal index
    if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) {
        const long v = std::stol(s);
        if (v >= 0 && v < n_) return static_cast<ElementId>(v);
    }
    return std::nullopt;
}

std::vector<ElementId> compute_center(const Semigroup& s) {
    std::vector<ElementId> out;
    for (int c = 0; c < s.order(); ++c) {
        bool central = true;
        for (int x = 0; x < s.order() && central; ++x)
            central = s.at(x, c) == s.at(c, x);
        if (central) out.push_back(c);
    }
    return out;
}

std::vector<ElementId> idempotents(const Semigroup& s) {
    std::vector<ElementId> out;
    for (int x = 0; x < s.order(); ++x)
        if (s.at(x, x) == x) out.push_back(x);
    return out;
}

PowerProfile power_profile(const Semigroup& s, ElementId x) {
    // orbit x, x^2, ...; the first repeat pins index and period
    std::vector<ElementId> orbit{x};
    for (;;) {
        const ElementId next = s.at(orbit.back(), x);
        const auto it = std::find(orbit.begin(), orbit.end(), next);
        if (it != orbit.end()) {
            const int i = static_cast<int>(it - orbit.begin()) + 1;
            const int p = static_cast<int>(orbit.size()) - i + 1;
            return {x, i, p};
        }
        orbit.push_back(next);
    }
}

std::optional<ElementId> find_neutral(const Semigroup& s) {
    for (int e = 0; e < s.order(); ++e) {
        bool neutral = true;
        for (int x = 0; x < s.order() && neutral; ++x)
            neutral = s.at(e, x) == x && s.at(x, e) == x;
        if (neutral) return e;
    }
    return std::nullopt;
}

Semigroup direct_product(const Semigroup& s, const Semigroup& t) {
    const int ns = s.order(), nt = t.order(), n = ns * nt;
    CayleyTable table(n, std::vector<ElementId>(n));
    for (int x1 = 0; x1 < ns; ++x1)
        for (int x2 = 0; x2 < nt; ++x2)
            for (int y1 = 0; y1 < ns; ++y1)
                for (int y2 = 0; y2 < nt; ++y2)
                    table[x1 * nt + x2][y1 * nt + y2] = s.at(x1, y1) * nt + t.at(x2, y2);
    std::vector<std::string> names;
    if (s.has_names() || t.has_names()) {
        names.reserve(n);
        for (int x1 = 0; x1 < ns; ++x1)
            for (int x2 = 0; x2 < nt; ++x2)
                names.push_back(s.name_of(x1) + "." + t.name_of(x2));
    }
    return Semigroup(std::move(table), std::move(names));
}

CayleyTable relabel_table(const CayleyTable& table, const std::vector<ElementId>& perm) {
    const int n = static_cast<int>(table.size());
    CayleyTable out(n, std::vector<ElementId>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            out[perm[x]][perm[y]] = perm[table[x][y]];
    return out;
}

namespace {

std::vector<ElementId> flatten(const CayleyTable& t) {
    std::vector<ElementId> flat;
    for (const auto& row : t) flat.insert(flat.end(), row.begin(), row.end());
    return flat;
}

/// Lexicographically least relabeling of the table.
std::vector<ElementId> canonical_form(const CayleyTable& table) {
    const int n = static_cast<int>(table.size());
    std::vector<ElementId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<ElementId> best = flatten(table);
    do {
        std::vector<ElementId> cand = flatten(relabel_table(table, perm));
        if (cand < best) best = std::move(cand);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

bool isomorphic(const Semigroup& a, const Semigroup& b) {
    if (a.order() != b.order()) return false;
    std::vector<ElementId> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (relabel_table(a.table(), perm) == b.table()) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::vector<Semigroup> generate_semigroups(int order, bool dedup) {
    if (order < 1 || order > 3)
        throw std::invalid_argument("generate_semigroups: unsupported order " +
                                    std::to_string(order));
    const int n = order;
    const int cells = n * n;
    std::vector<Semigroup> out;
    std::vector<ElementId> flat(cells, 0);
    // odometer over all n^(n^2) tables, lexicographic
    for (;;) {
        CayleyTable table(n, std::vector<ElementId>(n));
        for (int i = 0; i < cells; ++i) table[i / n][i % n] = flat[i];
        if (validate_associativity(table).ok()) {
            if (!dedup || canonical_form(table) == flat)
                out.emplace_back(std::move(table));
        }
        int pos = cells - 1;
        while (pos >= 0 && flat[pos] == n - 1) flat[pos--] = 0;
        if (pos < 0) break;
        ++flat[pos];
    }
    return out;
}

}  // namespace feqs
