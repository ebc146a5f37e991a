#pragma once

#include "nt/config.hpp"
#include "nt/report.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ntv {

struct Options {
    std::string config;
    std::string out;
    std::optional<double> tol;
    std::optional<unsigned long long> budget;
    unsigned workers = 1;
    unsigned long long seed = 1;
    std::vector<std::string> z;  // command-line override of the config's z list
};

// bad command line or config content; exit code 2
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TableRow {
    std::string regime;
    std::string q;
    unsigned v = 0, r = 0;
    std::string uclass;
    std::string brute;
    std::string closed;  // "unsupported" in regime E
    bool supported = true;
    bool match = false;
};

struct TableResult {
    std::vector<TableRow> rows;
    std::vector<std::string> warnings;
    bool pass() const;
};

TableResult kloosterman_tables(const nt::RunConfig& cfg, const Options& opt);
void write_csv(std::ostream& os, const TableResult& t);

nt::Report verify_dirichlet(const nt::RunConfig& cfg, const Options& opt);
nt::Report verify_lfun(const nt::RunConfig& cfg, const Options& opt);
nt::Report verify_orbital(const nt::RunConfig& cfg, const Options& opt);

}  // namespace ntv
