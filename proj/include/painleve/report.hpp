#ifndef PAINLEVE_REPORT_HPP
#define PAINLEVE_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "painleve/systems.hpp"

namespace painleve {

enum class CheckStatus { Pass, Fail, Indeterminate, Warning };

std::string status_name(CheckStatus s);

// One executed check. `claim` states what was verified in the vocabulary of
// the catalog (generator names, translation names, divisor labels).
struct CheckRecord {
    std::string id;
    std::string claim;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;  // witness data / failure notes
};

struct SuiteConfig {
    std::vector<SystemId> systems;
    std::vector<std::string> suites;
    uint64_t seed = 0;
    int points = 25;
    int series_order = 6;
    double rel_tol = 1e-10;
    std::string export_dir;  // trajectory CSV export directory; empty = off

    static const std::vector<std::string>& known_suites();
    bool has_suite(const std::string& s) const;
    bool has_system(SystemId id) const;
};

struct VerificationReport {
    SuiteConfig config;
    std::vector<CheckRecord> records;

    void add(CheckRecord r) { records.push_back(std::move(r)); }
    // records sorted by id; duplicate ids rejected
    void finalize();

    size_t count(CheckStatus s) const;
    // pass iff no Fail and no Indeterminate
    bool all_passed() const;
};

std::string render_json(const VerificationReport& report);
std::string render_markdown(const VerificationReport& report);

}  // namespace painleve

#endif
