#pragma once
// JSON run reports with a stable schema.  Everything that can differ between
// two identical runs (wall-clock times) lives in one `timings` section, so a
// report minus that section is byte-reproducible for a fixed config and seed.

#include <string>
#include <vector>

#include <json.hpp>

namespace copieslab {

using Json = nlohmann::json;

struct CheckRecord {
    std::string name;
    std::string statement;  // the claim being checked, in plain words
    bool passed = false;
    Json witnesses = Json::object();
    double runtime_ms = 0.0;
};

class ReportBuilder {
  public:
    explicit ReportBuilder(std::string subcommand);
    void set_config(Json config);  // must carry "seed"
    void add_check(CheckRecord record);
    bool all_passed() const;
    int check_count() const { return static_cast<int>(checks_.size()); }
    Json finish() const;

  private:
    std::string subcommand_;
    Json config_;
    std::vector<CheckRecord> checks_;
};

std::string render_report(const Json& report);  // stable two-space indentation
Json strip_volatile(Json report);               // drops `timings` for comparisons
std::string utc_timestamp();

}  // namespace copieslab
