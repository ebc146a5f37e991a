#pragma once

#include <json.hpp>

#include <chrono>
#include <complex>
#include <string>
#include <vector>

namespace nt {

using json = nlohmann::json;

struct CheckRecord {
    std::string check;
    json inputs = json::object();
    json lhs;
    json rhs;
    double defect = 0;
    double tolerance = 0;
    bool pass = false;
};

json to_json(std::complex<double> z);

// one suite run; overall pass iff every record passes
class Report {
public:
    explicit Report(std::string suite);

    void add(CheckRecord rec);
    void warn(std::string msg) { warnings_.push_back(std::move(msg)); }
    bool pass() const;
    const std::vector<CheckRecord>& checks() const { return checks_; }
    const std::string& suite() const { return suite_; }

    // stops the clock on first call
    json to_json();

private:
    std::string suite_;
    std::vector<CheckRecord> checks_;
    std::vector<std::string> warnings_;
    std::chrono::steady_clock::time_point start_;
    double wall_ms_ = -1;
};

}  // namespace nt
