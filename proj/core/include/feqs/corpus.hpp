#pragma once

#include <string>
#include <vector>

#include "feqs/measure.hpp"
#include "feqs/morphisms.hpp"
#include "feqs/semigroup.hpp"

namespace feqs {

/// A semigroup bundled with the involutive automorphisms and central
/// measures the verification suites sweep over.
struct CorpusEntry {
    enum class Provenance { Builtin, File };

    std::string id;
    Semigroup semigroup;
    std::vector<Automorphism> sigmas;       // validated involutive
    std::vector<DiracCombination> measures; // validated central; may be empty
    Provenance provenance = Provenance::Builtin;
};

/// The bundled desk-scale corpus: T1, Z2, Z3, Z4, N3, LZ2 (empty measure
/// list) and P9 = N3 x N3. Entries are defined as .cayley / measure-JSON
/// text and loaded through the public parsers.
std::vector<CorpusEntry> builtin_corpus();

/// Loads every *.cayley file in a directory. A sidecar <stem>.json may
/// supply {"sigmas":[...], "measures":[...]}; the defaults are all
/// involutive automorphisms and a unit atom at every central element.
std::vector<CorpusEntry> load_corpus_dir(const std::string& dir);

/// Entries whose id is in the comma-separated filter (empty keeps all).
std::vector<CorpusEntry> filter_corpus(std::vector<CorpusEntry> entries,
                                       const std::string& filter);

}  // namespace feqs
