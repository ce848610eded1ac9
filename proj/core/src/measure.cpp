#include "feqs/measure.hpp"

#include <algorithm>

#include "json_util.hpp"

namespace feqs {

bool DiracCombination::is_unit_dirac() const {
    return atoms.size() == 1 && std::abs(atoms.front().c - Complex(1.0)) == 0.0;
}

MeasureCheck validate_measure(const Semigroup& s, const DiracCombination& mu) {
    if (mu.atoms.empty()) return {MeasureCheck::Status::EmptyMeasure, 0};
    const std::vector<ElementId> center = compute_center(s);
    std::vector<char> seen(s.order(), 0);
    for (const auto& atom : mu.atoms) {
        if (atom.z < 0 || atom.z >= s.order() ||
            std::find(center.begin(), center.end(), atom.z) == center.end())
            return {MeasureCheck::Status::NonCentralAtom, atom.z};
        if (seen[atom.z]) return {MeasureCheck::Status::DuplicateAtom, atom.z};
        seen[atom.z] = 1;
    }
    return {};
}

Complex integrate(const DiracCombination& mu, const CFunction& f) {
    Complex acc = 0.0;
    for (const auto& atom : mu.atoms) acc += atom.c * f[atom.z];
    return acc;
}

CFunction smear(const Semigroup& s, const DiracCombination& mu, const CFunction& f) {
    CFunction out = CFunction::zeros(s.order());
    for (int x = 0; x < s.order(); ++x)
        for (const auto& atom : mu.atoms) out[x] += atom.c * f[s.at(x, atom.z)];
    return out;
}

CFunction smear_sigma(const Semigroup& s, const Automorphism& sigma, const DiracCombination& mu,
                      const CFunction& f) {
    CFunction out = CFunction::zeros(s.order());
    for (int x = 0; x < s.order(); ++x)
        for (const auto& atom : mu.atoms) out[x] += atom.c * f[s.at(x, sigma(atom.z))];
    return out;
}

DiracCombination parse_measure_json(const Semigroup& s, const std::string& json_text) {
    const detail::Json doc = detail::parse_json(json_text);
    if (!doc.is_object() || !doc.contains("atoms") || !doc["atoms"].is_array())
        throw ParseError("measure: expected an object with an \"atoms\" array", 1, 1);
    DiracCombination mu;
    for (const auto& item : doc["atoms"]) {
        if (!item.is_object() || !item.contains("z"))
            throw ParseError("measure: atom must be an object with \"z\"", 1, 1);
        ElementId z;
        if (item["z"].is_number_integer()) {
            z = item["z"].get<int>();
            if (z < 0 || z >= s.order())
                throw ParseError("measure: atom index out of range", 1, 1);
        } else if (item["z"].is_string()) {
            const auto found = s.element_by_name(item["z"].get<std::string>());
            if (!found)
                throw ParseError("measure: unknown element '" + item["z"].get<std::string>() + "'",
                                 1, 1);
            z = *found;
        } else {
            throw ParseError("measure: \"z\" must be an index or a name", 1, 1);
        }
        const double re = item.value("re", 1.0);
        const double im = item.value("im", 0.0);
        // canonical form: merge duplicate atoms by summing weights
        auto it = std::find_if(mu.atoms.begin(), mu.atoms.end(),
                               [z](const DiracAtom& a) { return a.z == z; });
        if (it != mu.atoms.end())
            it->c += Complex(re, im);
        else
            mu.atoms.push_back({z, Complex(re, im)});
    }
    return mu;
}

std::string render_measure_json(const Semigroup& s, const DiracCombination& mu) {
    detail::Json atoms = detail::Json::array();
    for (const auto& atom : mu.atoms) {
        detail::Json a;
        a["z"] = s.has_names() ? detail::Json(s.name_of(atom.z)) : detail::Json(atom.z);
        a["re"] = atom.c.real();
        a["im"] = atom.c.imag();
        atoms.push_back(a);
    }
    detail::Json doc;
    doc["atoms"] = atoms;
    return doc.dump();
}

std::string describe_measure(const Semigroup& s, const DiracCombination& mu) {
    std::string out;
    for (size_t i = 0; i < mu.atoms.size(); ++i) {
        const auto& atom = mu.atoms[i];
        if (i) out += "+";
        if (atom.c != Complex(1.0)) out += "(" + render_complex(atom.c) + ")";
        out += "d" + s.name_of(atom.z);
    }
    return out;
}

}  // namespace feqs
