#include "copieslab/report.hpp"

#include <ctime>
#include <stdexcept>

namespace copieslab {

ReportBuilder::ReportBuilder(std::string subcommand)
    : subcommand_(std::move(subcommand)), config_(Json::object()) {}

void ReportBuilder::set_config(Json config) {
    if (!config.is_object() || !config.contains("seed"))
        throw std::logic_error("report config must be an object carrying the seed");
    config_ = std::move(config);
}

void ReportBuilder::add_check(CheckRecord record) { checks_.push_back(std::move(record)); }

bool ReportBuilder::all_passed() const {
    for (const CheckRecord& c : checks_)
        if (!c.passed) return false;
    return true;
}

Json ReportBuilder::finish() const {
    if (config_.empty()) throw std::logic_error("report config missing");
    Json checks = Json::array();
    Json per_check = Json::object();
    double total_ms = 0.0;
    int passed = 0;
    for (const CheckRecord& c : checks_) {
        checks.push_back(Json{{"name", c.name},
                              {"statement", c.statement},
                              {"status", c.passed ? "pass" : "fail"},
                              {"witnesses", c.witnesses}});
        per_check[c.name] = c.runtime_ms;
        total_ms += c.runtime_ms;
        if (c.passed) ++passed;
    }
    return Json{{"schema_version", 1},
                {"subcommand", subcommand_},
                {"config", config_},
                {"summary", Json{{"checks", static_cast<int>(checks_.size())},
                                 {"passed", passed},
                                 {"failed", static_cast<int>(checks_.size()) - passed},
                                 {"status", all_passed() ? "pass" : "fail"}}},
                {"checks", checks},
                {"timings", Json{{"timestamp_utc", utc_timestamp()},
                                 {"total_ms", total_ms},
                                 {"per_check_ms", per_check}}}};
}

std::string render_report(const Json& report) { return report.dump(2) + "\n"; }

Json strip_volatile(Json report) {
    report.erase("timings");
    return report;
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm parts{};
    gmtime_r(&now, &parts);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &parts);
    return buffer;
}

}  // namespace copieslab
