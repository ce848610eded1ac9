#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "feqs/corpus.hpp"
#include "feqs/report.hpp"

namespace feqs {

struct SuiteOptions {
    NumericPolicy policy;
    std::uint64_t seed = 0;
    std::string corpus_filter;  // comma-separated entry ids; empty or "all" keeps all
};

/// The known suite ids, in execution order for "all":
/// theorem-wilson, theorem-kw, theorem-kannappan, theorem-van1, theorem-vvw,
/// corollaries, lemma-reductions, lemma-lv, remarks.
std::vector<std::string> suite_names();

class UnknownSuite : public std::runtime_error {
public:
    explicit UnknownSuite(const std::string& name)
        : std::runtime_error("unknown suite '" + name + "'") {}
};

class CorpusEmpty : public std::runtime_error {
public:
    CorpusEmpty() : std::runtime_error("corpus is empty after filtering") {}
};

/// Runs one named suite (or "all") over the corpus and returns its report.
Report run_suite(const std::string& name, const std::vector<CorpusEntry>& corpus,
                 const SuiteOptions& options);

}  // namespace feqs
