#pragma once

#include <string>
#include <vector>

#include "feqs/cfunction.hpp"
#include "feqs/morphisms.hpp"
#include "feqs/semigroup.hpp"

namespace feqs {

struct DiracAtom {
    ElementId z = 0;
    Complex c = 0.0;

    bool operator==(const DiracAtom&) const = default;
};

/// A finite weighted combination of point masses; the paper-facing
/// preconditions (central, distinct atoms) are checked by validate_measure,
/// not by the type.
struct DiracCombination {
    std::vector<DiracAtom> atoms;

    static DiracCombination dirac(ElementId z0) { return {{{z0, 1.0}}}; }

    /// Single atom of weight 1 at z0?
    bool is_unit_dirac() const;
    ElementId z0() const { return atoms.front().z; }

    bool operator==(const DiracCombination&) const = default;
};

struct MeasureCheck {
    enum class Status { Ok, NonCentralAtom, DuplicateAtom, EmptyMeasure };
    Status status = Status::Ok;
    ElementId z = 0;

    bool ok() const { return status == Status::Ok; }
};

MeasureCheck validate_measure(const Semigroup& s, const DiracCombination& mu);

/// Sum of c_i * f(z_i).
Complex integrate(const DiracCombination& mu, const CFunction& f);

/// x -> sum of c_i * f(x z_i).
CFunction smear(const Semigroup& s, const DiracCombination& mu, const CFunction& f);

/// x -> sum of c_i * f(x sigma(z_i)).
CFunction smear_sigma(const Semigroup& s, const Automorphism& sigma, const DiracCombination& mu,
                      const CFunction& f);

/// Parses {"atoms":[{"z": <index or name>, "re": r, "im": i}, ...]},
/// merging duplicate atoms by summing weights. "im" defaults to 0.
DiracCombination parse_measure_json(const Semigroup& s, const std::string& json_text);

std::string render_measure_json(const Semigroup& s, const DiracCombination& mu);

/// Short display form such as "d0" or "2d1+(1-1i)d2".
std::string describe_measure(const Semigroup& s, const DiracCombination& mu);

}  // namespace feqs
