#include "suites.hpp"

#include "nt/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw ntv::UsageError("cannot write '" + path + "'");
    f << text;
}

int run_report(nt::Report rep, const ntv::Options& opt) {
    auto j = rep.to_json();
    emit(opt.out, j.dump(2) + "\n");
    long failed = 0;
    for (const auto& c : rep.checks()) failed += c.pass ? 0 : 1;
    if (j.contains("warnings"))
        for (const auto& w : j["warnings"]) std::cerr << "warning: " << w.get<std::string>() << "\n";
    std::cerr << rep.suite() << ": " << rep.checks().size() << " checks, " << failed << " failed, "
              << (rep.pass() ? "PASS" : "FAIL") << "\n";
    return rep.pass() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ntverify: exact and numerical cross-checks for GL(2) trace-formula identities"};
    app.require_subcommand(1);
    ntv::Options opt;
    double tol = 0;
    unsigned long long budget = 0;
    app.add_option("--config", opt.config, "field / datum configuration file");
    app.add_option("--out", opt.out, "output file (default stdout)");
    auto* tol_opt = app.add_option("--tol", tol, "numerical tolerance, overrides the config");
    auto* budget_opt = app.add_option("--budget", budget, "enumeration budget, meaning depends on the suite");
    app.add_option("--workers", opt.workers, "worker threads")->check(CLI::Range(1u, 64u));
    app.add_option("--seed", opt.seed, "seed for randomized sweeps");
    app.fallthrough();

    auto* tables = app.add_subcommand("kloosterman-tables", "brute-force against closed-form local sums, CSV");
    auto* dir = app.add_subcommand("verify-dirichlet", "truncated Dirichlet series against the closed form");
    dir->add_option("--z", opt.z, "evaluation points, e.g. 2 or 1.5+0.7i");
    auto* lfun = app.add_subcommand("verify-lfun", "functional equation and approximate functional equation over Q");
    lfun->add_option("--z", opt.z, "points for the functional equation");
    auto* orb = app.add_subcommand("verify-orbital", "orbital divisor sums, congruence criterion, symbols");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    if (*tol_opt) opt.tol = tol;
    if (*budget_opt) {
        if (budget == 0) {
            std::cerr << "error: --budget must be positive\n";
            return kUsage;
        }
        opt.budget = budget;
    }

    try {
        nt::RunConfig cfg = opt.config.empty() ? nt::RunConfig::parse("", "<defaults>") : nt::RunConfig::load(opt.config);
        if (opt.tol && !(*opt.tol > 0 && *opt.tol < 1)) throw ntv::UsageError("--tol must lie in (0, 1)");
        if (*tables) {
            auto t = ntv::kloosterman_tables(cfg, opt);
            std::ostringstream os;
            ntv::write_csv(os, t);
            emit(opt.out, os.str());
            long mism = 0, unsupported = 0;
            for (const auto& r : t.rows) {
                mism += (r.supported && !r.match) ? 1 : 0;
                unsupported += r.supported ? 0 : 1;
            }
            for (const auto& w : t.warnings) std::cerr << "warning: " << w << "\n";
            std::cerr << "kloosterman-tables: " << t.rows.size() << " rows, " << mism << " mismatches, " << unsupported
                      << " without closed form, " << (t.pass() ? "PASS" : "FAIL") << "\n";
            return t.pass() ? kPass : kFail;
        }
        if (*dir) return run_report(ntv::verify_dirichlet(cfg, opt), opt);
        if (*lfun) return run_report(ntv::verify_lfun(cfg, opt), opt);
        if (*orb) return run_report(ntv::verify_orbital(cfg, opt), opt);
    } catch (const ntv::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const nt::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kUsage;
    } catch (const nt::InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "verification aborted: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
