#include "feqs/report.hpp"

#include <algorithm>
#include <sstream>

#include "json_util.hpp"

namespace feqs {

std::string to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skip: return "skip";
    }
    return "?";
}

bool Report::all_passed() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const CheckRecord& c) { return c.status == CheckStatus::Fail; });
}

int Report::count(CheckStatus status) const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                          [&](const CheckRecord& c) { return c.status == status; }));
}

std::string render_report_json(const Report& report) {
    detail::Json doc;
    doc["suite"] = report.suite;
    doc["command"] = report.command;
    doc["corpus"] = report.corpus;
    doc["version"] = report.version;
    doc["policy"] = {{"epsilon", report.policy.epsilon},
                     {"seed", report.seed}};
    detail::Json checks = detail::Json::array();
    for (const auto& c : report.checks) {
        detail::Json j;
        j["name"] = c.name;
        j["status"] = to_string(c.status);
        j["witness"] = c.witness_json.empty() ? detail::Json(nullptr)
                                              : detail::parse_json(c.witness_json);
        j["residual"] = c.residual ? detail::Json(*c.residual) : detail::Json(nullptr);
        j["ms"] = c.ms;
        checks.push_back(std::move(j));
    }
    doc["checks"] = std::move(checks);
    return doc.dump(2) + "\n";
}

std::string render_report_text(const Report& report) {
    std::ostringstream out;
    out << "suite: " << report.suite << " (version " << report.version
        << ", epsilon " << report.policy.epsilon << ", seed " << report.seed << ")\n";
    for (const auto& c : report.checks) {
        out << "  [" << to_string(c.status) << "] " << c.name;
        if (c.residual) out << "  residual=" << *c.residual;
        if (c.status != CheckStatus::Pass && !c.witness_json.empty())
            out << "  witness=" << c.witness_json;
        out << "\n";
    }
    out << (report.all_passed() ? "PASS" : "FAIL") << ": " << report.count(CheckStatus::Pass)
        << " passed, " << report.count(CheckStatus::Fail) << " failed, "
        << report.count(CheckStatus::Skip) << " skipped\n";
    return out.str();
}

}  // namespace feqs
