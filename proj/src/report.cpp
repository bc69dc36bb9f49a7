#include "painleve/report.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace painleve {

std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Indeterminate: return "indeterminate";
        case CheckStatus::Warning: return "warning";
    }
    return "?";
}

const std::vector<std::string>& SuiteConfig::known_suites() {
    static const std::vector<std::string> suites = {
        "relations",     "symmetry",       "divisors", "charts",
        "translations",  "degenerations",  "subgroup-limits", "numeric"};
    return suites;
}

bool SuiteConfig::has_suite(const std::string& s) const {
    return std::find(suites.begin(), suites.end(), s) != suites.end();
}

bool SuiteConfig::has_system(SystemId id) const {
    return std::find(systems.begin(), systems.end(), id) != systems.end();
}

void VerificationReport::finalize() {
    std::sort(records.begin(), records.end(),
              [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
    for (size_t i = 1; i < records.size(); ++i)
        if (records[i].id == records[i - 1].id)
            throw std::logic_error("duplicate check id: " + records[i].id);
}

size_t VerificationReport::count(CheckStatus s) const {
    size_t n = 0;
    for (const auto& r : records) n += (r.status == s) ? 1 : 0;
    return n;
}

bool VerificationReport::all_passed() const {
    return count(CheckStatus::Fail) == 0 && count(CheckStatus::Indeterminate) == 0;
}

static nlohmann::ordered_json config_json(const SuiteConfig& c) {
    nlohmann::ordered_json j;
    std::vector<std::string> sys;
    for (SystemId id : c.systems) sys.push_back(system_name(id));
    j["systems"] = sys;
    j["suites"] = c.suites;
    j["seed"] = c.seed;
    j["points"] = c.points;
    j["series_order"] = c.series_order;
    j["rel_tol"] = c.rel_tol;
    if (!c.export_dir.empty()) j["export_dir"] = c.export_dir;
    return j;
}

std::string render_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["config"] = config_json(report.config);
    nlohmann::ordered_json recs = nlohmann::ordered_json::array();
    for (const auto& r : report.records) {
        nlohmann::ordered_json rec;
        rec["id"] = r.id;
        rec["claim"] = r.claim;
        rec["status"] = status_name(r.status);
        if (!r.detail.empty()) rec["detail"] = r.detail;
        recs.push_back(rec);
    }
    j["checks"] = recs;
    j["summary"] = {{"pass", report.count(CheckStatus::Pass)},
                    {"fail", report.count(CheckStatus::Fail)},
                    {"indeterminate", report.count(CheckStatus::Indeterminate)},
                    {"warning", report.count(CheckStatus::Warning)}};
    return j.dump(2) + "\n";
}

std::string render_markdown(const VerificationReport& report) {
    std::ostringstream out;
    out << "# Verification report\n\n";
    out << "- systems:";
    for (SystemId id : report.config.systems) out << " " << system_name(id);
    out << "\n- suites:";
    for (const auto& s : report.config.suites) out << " " << s;
    out << "\n- seed: " << report.config.seed << ", points: " << report.config.points
        << ", series order: " << report.config.series_order
        << ", rel tol: " << report.config.rel_tol << "\n\n";

    std::string current_suite;
    for (const auto& r : report.records) {
        std::string suite = r.id.substr(0, r.id.find('/'));
        if (suite != current_suite) {
            out << "## " << suite << "\n\n";
            current_suite = suite;
        }
        out << "- [" << status_name(r.status) << "] `" << r.id << "` - " << r.claim;
        if (!r.detail.empty()) out << " (" << r.detail << ")";
        out << "\n";
    }
    out << "\n## summary\n\n";
    out << "- pass: " << report.count(CheckStatus::Pass) << "\n";
    out << "- fail: " << report.count(CheckStatus::Fail) << "\n";
    out << "- indeterminate: " << report.count(CheckStatus::Indeterminate) << "\n";
    out << "- warning: " << report.count(CheckStatus::Warning) << "\n";
    return out.str();
}

}  // namespace painleve
