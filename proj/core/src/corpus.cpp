#include "feqs/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "feqs/cayley_io.hpp"
#include "json_util.hpp"

namespace feqs {

namespace {

// Builtin corpus entries, in the same text formats the CLI accepts.

constexpr const char* kT1 = "1\n0\n";

constexpr const char* kZ2 =
    "2\n"
    "0 1\n"
    "1 0\n";

constexpr const char* kZ3 =
    "3\n"
    "0 1 2\n"
    "1 2 0\n"
    "2 0 1\n";

constexpr const char* kZ4 =
    "4\n"
    "0 1 2 3\n"
    "1 2 3 0\n"
    "2 3 0 1\n"
    "3 0 1 2\n";

// multiplicative monoid {0, a, 1} with a^2 = 0
constexpr const char* kN3 =
    "3\n"
    "0 0 0\n"
    "0 0 1\n"
    "0 1 2\n"
    "names: 0,a,1\n";

// left-zero semigroup: xy = x; empty center, so no valid measures
constexpr const char* kLZ2 =
    "2\n"
    "0 0\n"
    "1 1\n";

std::vector<DiracCombination> diracs_at(const std::vector<ElementId>& atoms) {
    std::vector<DiracCombination> out;
    for (ElementId z : atoms) out.push_back(DiracCombination::dirac(z));
    return out;
}

CorpusEntry make_entry(std::string id, Semigroup s, const std::vector<std::string>& sigma_specs,
                       std::vector<DiracCombination> measures) {
    CorpusEntry e{std::move(id), std::move(s), {}, std::move(measures),
                  CorpusEntry::Provenance::Builtin};
    for (const auto& spec : sigma_specs) e.sigmas.push_back(parse_sigma_spec(e.semigroup, spec));
    for (const auto& mu : e.measures) {
        const MeasureCheck check = validate_measure(e.semigroup, mu);
        if (!check.ok()) throw std::logic_error("builtin corpus: invalid measure in " + e.id);
    }
    return e;
}

}  // namespace

std::vector<CorpusEntry> builtin_corpus() {
    std::vector<CorpusEntry> out;

    {
        Semigroup s = parse_cayley(kT1);
        auto measures = diracs_at({0});
        measures.push_back(parse_measure_json(s, R"({"atoms":[{"z":0,"re":1,"im":-1}]})"));
        out.push_back(make_entry("T1", std::move(s), {"id"}, std::move(measures)));
    }
    {
        Semigroup s = parse_cayley(kZ2);
        auto measures = diracs_at({0, 1});
        measures.push_back(
            parse_measure_json(s, R"({"atoms":[{"z":0,"re":1},{"z":1,"re":0,"im":1}]})"));
        out.push_back(make_entry("Z2", std::move(s), {"id"}, std::move(measures)));
    }
    {
        Semigroup s = parse_cayley(kZ3);
        auto measures = diracs_at({0, 1, 2});
        measures.push_back(
            parse_measure_json(s, R"({"atoms":[{"z":1,"re":2},{"z":2,"re":1,"im":-1}]})"));
        out.push_back(make_entry("Z3", std::move(s), {"id", "0,2,1"}, std::move(measures)));
    }
    {
        Semigroup s = parse_cayley(kZ4);
        auto measures = diracs_at({0, 1, 2, 3});
        measures.push_back(parse_measure_json(s, R"({"atoms":[{"z":1,"re":1},{"z":3,"re":1}]})"));
        measures.push_back(
            parse_measure_json(s, R"({"atoms":[{"z":0,"re":0,"im":2},{"z":2,"re":1,"im":-1}]})"));
        out.push_back(make_entry("Z4", std::move(s), {"id", "0,3,2,1"}, std::move(measures)));
    }
    {
        Semigroup s = parse_cayley(kN3);
        auto measures = diracs_at({0, 1, 2});
        measures.push_back(
            parse_measure_json(s, R"({"atoms":[{"z":"a","re":1},{"z":"1","re":0,"im":1}]})"));
        out.push_back(make_entry("N3", std::move(s), {"id"}, std::move(measures)));
    }
    {
        Semigroup s = parse_cayley(kLZ2);
        out.push_back(make_entry("LZ2", std::move(s), {"id", "1,0"}, {}));
    }
    {
        const Semigroup n3 = parse_cayley(kN3);
        Semigroup s = direct_product(n3, n3);
        std::vector<ElementId> all(s.order());
        for (int i = 0; i < s.order(); ++i) all[i] = i;
        auto measures = diracs_at(all);
        measures.push_back(parse_measure_json(
            s, R"({"atoms":[{"z":"1.1","re":1},{"z":"a.a","re":1,"im":1}]})"));
        // swap of the two coordinates: (x, y) -> (y, x)
        std::string swap_spec;
        for (int i = 0; i < 9; ++i) {
            if (i) swap_spec += ',';
            swap_spec += std::to_string(3 * (i % 3) + i / 3);
        }
        out.push_back(make_entry("P9", std::move(s), {"id", swap_spec}, std::move(measures)));
    }
    return out;
}

std::vector<CorpusEntry> load_corpus_dir(const std::string& dir) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".cayley")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::vector<CorpusEntry> out;
    for (const auto& path : files) {
        CorpusEntry e{path.stem().string(), load_cayley_file(path.string()), {}, {},
                      CorpusEntry::Provenance::File};
        const fs::path sidecar = fs::path(path).replace_extension(".json");
        if (fs::exists(sidecar)) {
            std::ifstream in(sidecar);
            std::ostringstream buf;
            buf << in.rdbuf();
            const detail::Json doc = detail::parse_json(buf.str());
            if (doc.contains("sigmas"))
                for (const auto& spec : doc["sigmas"])
                    e.sigmas.push_back(parse_sigma_spec(e.semigroup, spec.get<std::string>()));
            if (doc.contains("measures"))
                for (const auto& m : doc["measures"]) {
                    const DiracCombination mu = parse_measure_json(e.semigroup, m.dump());
                    const MeasureCheck check = validate_measure(e.semigroup, mu);
                    if (!check.ok())
                        throw std::runtime_error("corpus " + e.id + ": invalid measure");
                    e.measures.push_back(mu);
                }
        }
        if (e.sigmas.empty()) {
            for (const auto& a : enumerate_automorphisms(e.semigroup))
                if (a.involutive) e.sigmas.push_back(a);
        }
        if (e.measures.empty() && !fs::exists(sidecar)) {
            for (ElementId z : compute_center(e.semigroup))
                e.measures.push_back(DiracCombination::dirac(z));
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CorpusEntry> filter_corpus(std::vector<CorpusEntry> entries,
                                       const std::string& filter) {
    if (filter.empty() || filter == "all") return entries;
    std::vector<std::string> wanted;
    std::string tok;
    for (size_t i = 0; i <= filter.size(); ++i) {
        if (i == filter.size() || filter[i] == ',') {
            if (!tok.empty()) wanted.push_back(tok);
            tok.clear();
        } else {
            tok += filter[i];
        }
    }
    std::erase_if(entries, [&](const CorpusEntry& e) {
        return std::find(wanted.begin(), wanted.end(), e.id) == wanted.end();
    });
    return entries;
}

}  // namespace feqs
