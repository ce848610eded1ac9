#pragma once

#include <optional>
#include <string>
#include <vector>

namespace feqs {

/// Dense 0-based element index into a semigroup of order n.
using ElementId = int;

using CayleyTable = std::vector<std::vector<ElementId>>;

/// Outcome of scanning a raw Cayley table for associativity.
struct AssocCheck {
    enum class Status { Ok, Counterexample, OutOfRange };
    Status status = Status::Ok;
    ElementId x = 0, y = 0, z = 0;

    bool ok() const { return status == Status::Ok; }
};

/// Full O(n^3) triple scan. Returns the lexicographically smallest failing
/// triple, or OutOfRange with the offending (x, y) position.
AssocCheck validate_associativity(const CayleyTable& table);

/// Minimal (index, period) of an element: x^i = x^{i+p}.
struct PowerProfile {
    ElementId element = 0;
    int index = 1;
    int period = 1;
};

/// A finite semigroup given by its Cayley table. Immutable after
/// construction; the constructor rejects non-square, out-of-range and
/// non-associative tables. Names are presentation-layer only.
class Semigroup {
public:
    explicit Semigroup(CayleyTable table, std::vector<std::string> names = {});

    int order() const { return n_; }
    ElementId at(ElementId x, ElementId y) const { return table_[x][y]; }
    const CayleyTable& table() const { return table_; }

    bool has_names() const { return !names_.empty(); }
    const std::vector<std::string>& names() const { return names_; }
    /// Element name, or the decimal index when the semigroup is unnamed.
    std::string name_of(ElementId x) const;
    /// Resolves a name or a decimal index string.
    std::optional<ElementId> element_by_name(const std::string& s) const;

    bool operator==(const Semigroup& other) const = default;

private:
    int n_;
    CayleyTable table_;
    std::vector<std::string> names_;
};

/// Elements commuting with all of S; may be empty.
std::vector<ElementId> compute_center(const Semigroup& s);

std::vector<ElementId> idempotents(const Semigroup& s);

PowerProfile power_profile(const Semigroup& s, ElementId x);

/// The neutral element, if the semigroup is a monoid.
std::optional<ElementId> find_neutral(const Semigroup& s);

/// Componentwise product semigroup; element (x, y) maps to x * order(t) + y.
Semigroup direct_product(const Semigroup& s, const Semigroup& t);

/// Relabels the table along a permutation: perm becomes an isomorphism
/// from `s` onto the result.
CayleyTable relabel_table(const CayleyTable& table, const std::vector<ElementId>& perm);

/// Exhaustive permutation search; intended for small orders.
bool isomorphic(const Semigroup& a, const Semigroup& b);

/// All associative tables of the given order (1..3), in lexicographic order
/// of the flattened table. With dedup, one lex-least representative per
/// isomorphism class. Throws std::invalid_argument for order > 3.
std::vector<Semigroup> generate_semigroups(int order, bool dedup);

}  // namespace feqs
