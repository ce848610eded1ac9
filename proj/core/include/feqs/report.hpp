#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "feqs/cfunction.hpp"

namespace feqs {

enum class CheckStatus { Pass, Fail, Skip };

std::string to_string(CheckStatus status);

struct CheckRecord {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string witness_json;  // machine-readable witness; empty renders as null
    std::optional<double> residual;
    int ms = 0;
};

/// One suite run. Field order in the JSON rendering is fixed; reports are
/// byte-identical across runs up to the per-check ms timings.
struct Report {
    std::string suite;
    std::string command;
    std::string corpus;
    std::string version;
    NumericPolicy policy;
    std::uint64_t seed = 0;
    std::vector<CheckRecord> checks;

    bool all_passed() const;
    int count(CheckStatus status) const;
};

std::string render_report_json(const Report& report);
std::string render_report_text(const Report& report);

}  // namespace feqs
