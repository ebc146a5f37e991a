#include "nt/report.hpp"

#include <cmath>

namespace nt {

json to_json(std::complex<double> z) {
    if (z.imag() == 0) return z.real();
    return json{{"re", z.real()}, {"im", z.imag()}};
}

Report::Report(std::string suite) : suite_(std::move(suite)), start_(std::chrono::steady_clock::now()) {}

void Report::add(CheckRecord rec) { checks_.push_back(std::move(rec)); }

bool Report::pass() const {
    for (const auto& c : checks_)
        if (!c.pass) return false;
    return true;
}

json Report::to_json() {
    if (wall_ms_ < 0)
        wall_ms_ = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    json checks = json::array();
    for (const auto& c : checks_) {
        json defect = std::isfinite(c.defect) ? json(c.defect) : json(nullptr);
        checks.push_back({{"check", c.check},
                          {"inputs", c.inputs},
                          {"lhs", c.lhs},
                          {"rhs", c.rhs},
                          {"defect", defect},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass}});
    }
    json j{{"schema", 1}, {"suite", suite_}, {"checks", checks}, {"pass", pass()}, {"wall_ms", wall_ms_}};
    if (!warnings_.empty()) j["warnings"] = warnings_;
    return j;
}

}  // namespace nt
