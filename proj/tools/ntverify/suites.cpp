#include "suites.hpp"

#include "nt/elliptic.hpp"
#include "nt/errors.hpp"
#include "nt/kloosterman.hpp"
#include "nt/parallel.hpp"
#include "nt/symbols.hpp"
#include "nt/zagier.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

namespace ntv {

using namespace nt;

namespace {

constexpr unsigned kMaxWorkers = 64;

unsigned workers(const Options& opt) { return std::min(std::max(opt.workers, 1u), kMaxWorkers); }

std::vector<u64> prime_list(const RunConfig& cfg, std::vector<u64> def) {
    if (!cfg.has("primes")) return def;
    std::vector<u64> out;
    for (i64 p : cfg.get_ints("primes")) {
        if (p < 2 || !is_prime_u64(static_cast<u64>(p))) throw UsageError("primes: " + std::to_string(p) + " is not prime");
        out.push_back(static_cast<u64>(p));
    }
    return out;
}

unsigned small_param(const RunConfig& cfg, const std::string& key, long def, long hi) {
    long v = cfg.get_int(key, def);
    if (v < 0 || v > hi) throw UsageError(key + " must lie in [0, " + std::to_string(hi) + "]");
    return static_cast<unsigned>(v);
}

std::string rat_str(const Rational& q) { return q.get_str(); }

cplx parse_complex(const std::string& s0) {
    std::string s = s0;
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    try {
        if (s.empty()) throw std::invalid_argument(s);
        if (s.back() != 'i') {
            std::size_t pos = 0;
            double re = std::stod(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return re;
        }
        std::string body = s.substr(0, s.size() - 1);
        std::size_t cut = std::string::npos;
        for (std::size_t i = body.size(); i-- > 1;) {
            if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
                cut = i;
                break;
            }
        }
        if (cut == std::string::npos) {
            std::size_t pos = 0;
            double im = (body.empty() || body == "+") ? 1.0 : body == "-" ? -1.0 : std::stod(body, &pos);
            if (!body.empty() && body != "+" && body != "-" && pos != body.size()) throw std::invalid_argument(s);
            return {0.0, im};
        }
        std::string a = body.substr(0, cut), b = body.substr(cut);
        std::size_t p1 = 0, p2 = 0;
        double re = std::stod(a, &p1);
        double im = (b == "+") ? 1.0 : (b == "-") ? -1.0 : std::stod(b, &p2);
        if (p1 != a.size() || (b != "+" && b != "-" && p2 != b.size())) throw std::invalid_argument(s);
        return {re, im};
    } catch (const std::invalid_argument&) {
        throw UsageError("cannot parse complex number '" + s0 + "'");
    } catch (const std::out_of_range&) {
        throw UsageError("complex number out of range '" + s0 + "'");
    }
}

std::vector<AlgInt> unit_sweep(const RunConfig& cfg) {
    const Field& K = cfg.field();
    if (K.is_rational()) return {AlgInt(1), AlgInt(-1)};
    AlgInt beta = cfg.unit() ? *cfg.unit() : *K.fundamental_unit().beta;
    return {AlgInt(1), beta, K.neg(beta), K.mul(beta, beta)};
}

EllipticDatum with_unit(const EllipticDatum& d, const AlgInt& u) {
    return EllipticDatum::make(d.K, d.p, d.h, d.rho, d.k, d.K.mul(d.u, u), d.tau);
}

std::string field_tag(const Field& K) { return K.is_rational() ? "Q" : K.name(); }

json datum_json(const EllipticDatum& d) {
    return json{{"field", field_tag(d.K)}, {"p", d.p.str()},  {"k", d.k},
                {"h", d.h},               {"u", d.K.format(d.u)}, {"eps", d.K.format(d.eps)}};
}

double tolerance(const RunConfig& cfg, const Options& opt, const std::string& key, double def) {
    double t = opt.tol ? *opt.tol : cfg.get_double(key, def);
    if (!(t > 0 && t < 1)) throw UsageError("tolerance must lie in (0, 1)");
    return t;
}

}  // namespace

// ---------------------------------------------------------------- kloosterman-tables

bool TableResult::pass() const {
    for (const auto& r : rows)
        if (r.supported && !r.match) return false;
    return true;
}

TableResult kloosterman_tables(const RunConfig& cfg, const Options& opt) {
    const Field& K = cfg.field();
    const unsigned vmax = small_param(cfg, "vmax", 4, 12), rmax = small_param(cfg, "rmax", 4, 12);
    const u64 budget = opt.budget ? *opt.budget : static_cast<u64>(cfg.get_int("budget", 2000000));
    if (budget == 0) throw UsageError("budget must be positive");

    struct Block {
        PrimeIdeal q;
        AlgInt c;
        std::string uclass;
    };
    std::vector<Block> blocks;
    TableResult res;

    if (cfg.datum_specs().empty()) {
        if (!K.is_rational()) throw UsageError("kloosterman-tables over a quadratic field needs a datum");
        // local constants c = 4 w q^k, w over the unit square classes of Z_q
        const unsigned kmax = small_param(cfg, "kmax", 3, 8);
        for (u64 q : prime_list(cfg, {2, 3, 5, 7, 11, 13})) {
            std::vector<long> ws;
            if (q == 2) {
                ws = {1, 3, 5, 7};
            } else {
                long nr = 2;
                while (kronecker(static_cast<i64>(nr), static_cast<i64>(q)) != -1) ++nr;
                ws = {1, nr};
            }
            for (unsigned k = 0; k <= kmax; ++k)
                for (long w : ws) {
                    BigInt c = 4 * w;
                    for (unsigned i = 0; i < k; ++i) c *= static_cast<unsigned long>(q);
                    blocks.push_back({K.primes_above(q)[0], AlgInt(c), "w=" + std::to_string(w) + " k=" + std::to_string(k)});
                }
        }
    } else {
        for (const auto& d0 : cfg.data()) {
            for (const auto& u : unit_sweep(cfg)) {
                auto d = with_unit(d0, u);
                for (u64 p : prime_list(cfg, {2, 3, 5, 7, 11, 13}))
                    for (const auto& q : K.primes_above(p)) {
                        if (q.above_two() && q.type != SplitType::Split) {
                            res.warnings.push_back("skipping non-split prime " + q.str() + " above 2");
                            continue;
                        }
                        blocks.push_back({q, d.four_u_eps(), "u=" + K.format(d.u) + " k=" + std::to_string(d.k)});
                    }
            }
        }
    }

    auto rows = parallel_map<std::vector<TableRow>>(blocks.size(), workers(opt), [&](std::size_t i) {
        const auto& b = blocks[i];
        LocalKloosterman L(K, b.q, b.c);
        std::vector<TableRow> out;
        std::string qs = K.is_rational() ? std::to_string(b.q.p) : b.q.str();
        for (unsigned v = 0; v <= vmax; ++v)
            for (unsigned r = 0; r <= rmax; ++r) {
                TableRow row;
                row.regime = to_string(L.regime());
                row.q = qs;
                row.v = v;
                row.r = r;
                row.uclass = b.uclass;
                BigInt br = L.bruteforce(v, r, budget);
                row.brute = br.get_str();
                try {
                    BigInt cl = L.closed(v, r);
                    row.closed = cl.get_str();
                    row.match = (cl == br);
                } catch (const UnsupportedRegime&) {
                    row.closed = "unsupported";
                    row.supported = false;
                }
                out.push_back(std::move(row));
            }
        return out;
    });
    bool warned_e = false;
    for (auto& block : rows)
        for (auto& r : block) {
            if (!r.supported && !warned_e) {
                res.warnings.push_back("regime E has no closed table; its rows are listed without a comparison");
                warned_e = true;
            }
            res.rows.push_back(std::move(r));
        }
    return res;
}

void write_csv(std::ostream& os, const TableResult& t) {
    auto field = [](const std::string& s) {
        if (s.find_first_of(",\"") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    };
    os << "regime,q,v,r,u-class,bruteforce,closedform,match\n";
    for (const auto& r : t.rows) {
        os << r.regime << ',' << field(r.q) << ',' << r.v << ',' << r.r << ',' << field(r.uclass) << ',' << r.brute << ','
           << r.closed << ',' << (!r.supported ? "n/a" : r.match ? "match" : "MISMATCH") << '\n';
    }
}

// ---------------------------------------------------------------- verify-dirichlet

Report verify_dirichlet(const RunConfig& cfg, const Options& opt) {
    std::vector<cplx> zs;
    std::vector<std::string> zstr = opt.z.empty() ? cfg.get_strings("z") : opt.z;
    if (zstr.empty()) zstr = {"2"};
    for (const auto& s : zstr) {
        cplx z = parse_complex(s);
        if (!(z.real() > 1))
            throw UsageError("z = " + s +
                             " is outside the convergence policy: the Dirichlet series is only summed for Re z > 1");
        zs.push_back(z);
    }
    const double tol = tolerance(cfg, opt, "tol", 1e-6);
    const double u_tol = cfg.get_double("u_tol", 1e-10);
    const double local_tol = cfg.get_double("local_tol", 1e-8);
    const u64 norm_bound = opt.budget ? *opt.budget : static_cast<u64>(cfg.get_int("norm_bound", 10000));
    if (norm_bound < 2) throw UsageError("norm bound must be at least 2");

    std::vector<EllipticDatum> data = cfg.data();
    if (data.empty()) {
        if (!cfg.field().is_rational()) throw UsageError("verify-dirichlet over a quadratic field needs a datum");
        data.push_back(EllipticDatum::rational(1, 1, 5, 1));
    }
    const auto units = unit_sweep(cfg);
    const auto local_primes = prime_list(cfg, {2, 3, 5, 7, 11, 13});
    Report rep("verify-dirichlet");

    for (const auto& d0 : data) {
        const Field& K = d0.K;
        // local factors, one regime per prime
        struct LocalTask {
            PrimeIdeal q;
            cplx z;
        };
        std::vector<LocalTask> lt;
        for (u64 p : local_primes)
            for (const auto& q : K.primes_above(p))
                if (!(q.above_two() && q.type != SplitType::Split))
                    for (cplx z : zs) lt.push_back({q, z});
        auto local = parallel_map<std::optional<CheckRecord>>(lt.size(), workers(opt), [&](std::size_t i) {
            LocalKloosterman L(K, lt[i].q, d0.four_u_eps());
            if (L.regime() == Regime::E) return std::optional<CheckRecord>{};
            auto e = L.dirichlet(lt[i].z, 1e-12);
            cplx ref = L.dirichlet_closed(lt[i].z);
            double diff = std::abs(e.value - ref);
            CheckRecord c;
            c.check = "local_dirichlet";
            c.inputs = datum_json(d0);
            c.inputs["q"] = lt[i].q.str();
            c.inputs["regime"] = to_string(L.regime());
            c.inputs["z"] = to_json(lt[i].z);
            c.inputs["v_max"] = e.v_max;
            c.inputs["r_max"] = e.r_max;
            c.inputs["tail_bound"] = e.tail_bound;
            c.lhs = to_json(e.value);
            c.rhs = to_json(ref);
            c.defect = diff / std::abs(ref);
            c.tolerance = local_tol;
            c.pass = diff <= e.tail_bound + 1e-14 * std::abs(ref) && c.defect < local_tol;
            return std::optional<CheckRecord>(c);
        });
        for (auto& c : local)
            if (c) rep.add(std::move(*c));

        for (cplx z : zs) {
            auto vals = parallel_map<DirichletEval>(units.size(), workers(opt), [&](std::size_t i) {
                return global_dirichlet(with_unit(d0, units[i]), z, norm_bound);
            });
            double spread = 0;
            for (std::size_t i = 0; i < units.size(); ++i) {
                auto d = with_unit(d0, units[i]);
                CheckRecord c;
                c.check = "global_dirichlet";
                c.inputs = datum_json(d);
                c.inputs["z"] = to_json(z);
                c.inputs["norm_bound"] = norm_bound;
                c.inputs["tail_bound"] = vals[i].tail_bound;
                c.lhs = to_json(vals[i].value);
                c.rhs = to_json(*vals[i].reference);
                c.defect = std::abs(vals[i].value - *vals[i].reference);
                c.tolerance = tol;
                c.pass = c.defect <= tol;
                rep.add(std::move(c));
                spread = std::max(spread, std::abs(vals[i].value - vals[0].value));
            }
            CheckRecord c;
            c.check = "unit_independence";
            c.inputs = datum_json(d0);
            c.inputs["z"] = to_json(z);
            json us = json::array();
            for (const auto& u : units) us.push_back(K.format(u));
            c.inputs["units"] = us;
            c.lhs = to_json(vals.front().value);
            c.rhs = to_json(vals.back().value);
            c.defect = spread;
            c.tolerance = u_tol;
            c.pass = spread <= u_tol;
            rep.add(std::move(c));
        }

        if (cfg.get("residue", "no") == "yes") {
            auto r = residue_at_half(d0);
            CheckRecord c;
            c.check = "residue_at_half";
            c.inputs = datum_json(d0);
            c.inputs["kappa"] = r.kappa;
            c.inputs["kappa_over_two_value"] = r.corrected;
            c.lhs = r.numeric;
            c.rhs = r.stated;
            c.defect = std::abs(r.numeric - r.stated);
            c.tolerance = 1e-6;
            c.pass = c.defect <= 1e-6;
            rep.add(std::move(c));
        }
    }
    return rep;
}

// ---------------------------------------------------------------- verify-lfun

Report verify_lfun(const RunConfig& cfg, const Options& opt) {
    if (!cfg.field().is_rational()) throw UsageError("verify-lfun runs its strip checks over Q only");
    Report rep("verify-lfun");
    const bool have_deltas = cfg.has("deltas");
    std::vector<i64> deltas = have_deltas ? cfg.get_ints("deltas") : std::vector<i64>{5, 12, 29, 45, 48};
    std::vector<double> zs = cfg.has("z") ? cfg.get_doubles("z") : std::vector<double>{0.25, 0.3, 0.4, 0.7};
    if (!opt.z.empty()) {
        zs.clear();
        for (const auto& s : opt.z) {
            cplx z = parse_complex(s);
            if (z.imag() != 0) throw UsageError("verify-lfun takes real z");
            zs.push_back(z.real());
        }
    }
    const double tol = tolerance(cfg, opt, "tol", 1e-6);
    const double afe_tol = cfg.get_double("afe_tol", 1e-4);
    const double alpha = cfg.get_double("alpha", 0.5);
    const double xmax = opt.budget ? static_cast<double>(*opt.budget) : cfg.get_double("xmax", 45.0);
    if (!(xmax > 1)) throw UsageError("xmax must exceed 1");
    std::vector<i64> afe = cfg.has("afe_deltas") ? cfg.get_ints("afe_deltas")
                           : have_deltas         ? std::vector<i64>{}
                                                 : std::vector<i64>{29, 45};
    for (i64 d : deltas) {
        if (d == 0 || is_perfect_square(BigInt(static_cast<long>(d))) || floor_mod(d, 4) > 1)
            throw UsageError("delta " + std::to_string(d) + " is not a non-square discriminant");
    }
    if (deltas.empty()) rep.warn("empty delta list: nothing to check, vacuous pass");

    struct FeTask {
        i64 delta;
        double z;
    };
    std::vector<FeTask> tasks;
    for (i64 d : deltas)
        for (double z : zs) tasks.push_back({d, z});
    auto fe = parallel_map<FeReport>(tasks.size(), workers(opt),
                                     [&](std::size_t i) { return verify_functional_equation(tasks[i].delta, tasks[i].z, tol); });
    for (const auto& r : fe) {
        CheckRecord c;
        c.check = "functional_equation";
        c.inputs = {{"delta", r.delta}, {"z", r.z.real()}, {"exact_finite_part_symmetric", r.exact_ok}};
        c.lhs = to_json(r.lhs);
        c.rhs = to_json(r.rhs);
        c.defect = r.defect;
        c.tolerance = tol;
        c.pass = r.pass;
        rep.add(std::move(c));
    }

    if (!deltas.empty()) {
        const long samples = cfg.get_int("symmetry_samples", 100);
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<int> len(1, 4), ex(0, 5);
        long bad = 0;
        for (long i = 0; i < samples; ++i) {
            std::vector<unsigned> e(len(rng));
            for (auto& x : e) x = static_cast<unsigned>(ex(rng));
            if (!finite_part_symmetric(e)) ++bad;
        }
        CheckRecord c;
        c.check = "finite_part_symmetry";
        c.inputs = {{"samples", samples}, {"seed", opt.seed}};
        c.lhs = bad;
        c.rhs = 0;
        c.defect = static_cast<double>(bad);
        c.tolerance = 0;
        c.pass = bad == 0;
        rep.add(std::move(c));
    }

    auto afe_reports = parallel_map<AfeReport>(afe.size(), workers(opt), [&](std::size_t i) { return afe_verify(afe[i], alpha, xmax); });
    for (std::size_t i = 0; i < afe.size(); ++i) {
        const auto& r = afe_reports[i];
        CheckRecord c;
        c.check = "approximate_functional_equation";
        c.inputs = {{"delta", afe[i]},          {"z", r.z},           {"alpha", r.alpha},
                    {"A", r.A},                 {"xmax", xmax},       {"f_terms", r.f_terms},
                    {"h_terms", r.h_terms},     {"f_term", r.f_term}, {"h_term", r.h_term},
                    {"error_budget", r.error_budget}};
        c.lhs = r.lhs;
        c.rhs = r.rhs;
        c.defect = r.abs_defect;
        c.tolerance = afe_tol;
        c.pass = r.abs_defect < afe_tol;
        rep.add(std::move(c));
    }
    return rep;
}

// ---------------------------------------------------------------- verify-orbital

namespace {

struct SweepCount {
    long cases = 0;
    long bad = 0;
    json first_bad;
};

void merge(SweepCount& a, const SweepCount& b) {
    a.cases += b.cases;
    a.bad += b.bad;
    if (a.first_bad.is_null() && !b.first_bad.is_null()) a.first_bad = b.first_bad;
}

CheckRecord count_record(const std::string& name, json inputs, const SweepCount& s) {
    CheckRecord c;
    c.check = name;
    c.inputs = std::move(inputs);
    c.inputs["cases"] = s.cases;
    if (!s.first_bad.is_null()) c.inputs["first_failure"] = s.first_bad;
    c.lhs = s.bad;
    c.rhs = 0;
    c.defect = static_cast<double>(s.bad);
    c.tolerance = 0;
    c.pass = s.bad == 0 && s.cases > 0;
    return c;
}

bool usable_delta(const Field& K, const AlgInt& d) { return !d.is_zero() && !K.is_square(d); }

// exact checks for one discriminant: congruence criterion against S, divisor sum against local product,
// chi_d against the modified symbol
void check_delta(const Field& K, const AlgInt& delta, const std::vector<Ideal>& small, const std::vector<Ideal>& as,
                 SweepCount& cong, SweepCount& orb, SweepCount* sym) {
    auto S = s_gamma(K, delta).S;
    for (const auto& d : small) {
        ++cong.cases;
        if (divides_s_gamma(K, delta, d) != K.divides(d, S)) {
            ++cong.bad;
            if (cong.first_bad.is_null()) cong.first_bad = {{"delta", K.format(delta)}, {"d", d.str()}};
        }
    }
    ++orb.cases;
    Rational a = finite_orbital_divisor_sum(K, delta), b = finite_orbital_product(K, delta);
    if (a != b) {
        ++orb.bad;
        if (orb.first_bad.is_null()) orb.first_bad = {{"delta", K.format(delta)}, {"divisor_sum", rat_str(a)}, {"product", rat_str(b)}};
    }
    if (!sym) return;
    for (const auto& d : K.divisors(S))
        for (const auto& aa : as) {
            ++sym->cases;
            int x = chi_d(K, delta, d, aa), y = modified_hilbert(K, delta, d, aa);
            if (x != y) {
                ++sym->bad;
                if (sym->first_bad.is_null())
                    sym->first_bad = {{"delta", K.format(delta)}, {"d", d.str()}, {"a", aa.str()}, {"chi_d", x}, {"symbol", y}};
            }
        }
}

}  // namespace

Report verify_orbital(const RunConfig& cfg, const Options& opt) {
    Report rep("verify-orbital");
    const Field& K = cfg.field();
    const unsigned dmax = small_param(cfg, "dmax", 30, 100000);

    if (cfg.has("delta")) {
        if (!K.is_rational()) throw UsageError("delta = ... is read as a rational integer; over a quadratic field use a datum");
        for (i64 dv : cfg.get_ints("delta")) {
            AlgInt delta(dv);
            if (!usable_delta(K, delta)) throw UsageError("delta " + std::to_string(dv) + " is zero or a square");
            auto S = s_gamma(K, delta).S;
            Rational a = finite_orbital_divisor_sum(K, delta), b = finite_orbital_product(K, delta);
            CheckRecord c;
            c.check = "finite_part";
            c.inputs = {{"delta", dv}, {"S", S.str()}};
            c.lhs = rat_str(a);
            c.rhs = rat_str(b);
            c.defect = a == b ? 0.0 : 1.0;
            c.tolerance = 0;
            c.pass = a == b;
            rep.add(std::move(c));
            SweepCount cong, orb;
            std::vector<Ideal> small;
            for (unsigned d = 1; d <= dmax; ++d) small.push_back(K.principal(AlgInt(static_cast<long>(d))));
            check_delta(K, delta, small, {}, cong, orb, nullptr);
            rep.add(count_record("congruence_equivalence", {{"delta", dv}, {"dmax", dmax}}, cong));
        }
        return rep;
    }

    if (K.is_rational()) {
        const i64 bound = opt.budget ? static_cast<i64>(*opt.budget) : cfg.get_int("bound", 10000);
        if (bound < 1) throw UsageError("bound must be positive");
        std::vector<Ideal> small;
        for (unsigned d = 1; d <= dmax; ++d) small.push_back(K.principal(AlgInt(static_cast<long>(d))));
        // chunks of the range [-bound, bound]
        const i64 chunk = 500;
        const std::size_t nchunks = static_cast<std::size_t>((2 * bound + chunk) / chunk);
        struct Acc {
            SweepCount cong, orb;
        };
        auto parts = parallel_map<Acc>(nchunks, workers(opt), [&](std::size_t i) {
            Acc acc;
            i64 lo = -bound + static_cast<i64>(i) * chunk, hi = std::min(bound, lo + chunk - 1);
            for (i64 d = lo; d <= hi; ++d) {
                if (floor_mod(d, 4) > 1) continue;
                AlgInt delta(d);
                if (!usable_delta(K, delta)) continue;
                check_delta(K, delta, small, {}, acc.cong, acc.orb, nullptr);
            }
            return acc;
        });
        Acc all;
        for (const auto& p : parts) {
            merge(all.cong, p.cong);
            merge(all.orb, p.orb);
        }
        rep.add(count_record("congruence_equivalence", {{"field", "Q"}, {"bound", bound}, {"dmax", dmax}}, all.cong));
        rep.add(count_record("orbital_divisor_sum_vs_product", {{"field", "Q"}, {"bound", bound}}, all.orb));

        // modified symbol against the Kronecker symbol of delta / d^2
        const long samples = cfg.get_int("samples", 1000);
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<i64> dd(-bound, bound);
        std::uniform_int_distribution<i64> ad(1, 1000);
        SweepCount sym;
        while (sym.cases < samples) {
            i64 d = dd(rng);
            if (floor_mod(d, 4) > 1 || !usable_delta(K, AlgInt(d))) continue;
            auto S = s_gamma(K, AlgInt(d)).S;
            auto divs = K.divisors(S);
            const Ideal& dv = divs[std::uniform_int_distribution<std::size_t>(0, divs.size() - 1)(rng)];
            i64 a = ad(rng);
            i64 dn = dv.norm().get_si();
            int x = modified_hilbert(K, AlgInt(d), dv, K.principal(AlgInt(a)));
            int y = kronecker(d / (dn * dn), a);
            ++sym.cases;
            if (x != y) {
                ++sym.bad;
                if (sym.first_bad.is_null()) sym.first_bad = {{"delta", d}, {"d", dn}, {"a", a}, {"symbol", x}, {"kronecker", y}};
            }
        }
        rep.add(count_record("modified_symbol_vs_kronecker", {{"field", "Q"}, {"seed", opt.seed}}, sym));
        return rep;
    }

    // quadratic field: random tau and unit around the configured data
    std::vector<EllipticDatum> data = cfg.data();
    if (data.empty()) throw UsageError("verify-orbital over a quadratic field needs a datum");
    const long samples = cfg.get_int("samples", 1000);
    const long range = cfg.get_int("tau_range", 30);
    if (samples < 1 || range < 1) throw UsageError("samples and tau_range must be positive");
    const auto units = unit_sweep(cfg);
    std::vector<Ideal> small = K.enumerate_by_norm(dmax);
    std::vector<Ideal> as;
    for (auto& a : K.enumerate_by_norm(cfg.get_int("anorm", 40))) {
        bool ok = true;
        for (const auto& [q, e] : a.factors) ok = ok && !(q.above_two() && q.type != SplitType::Split);
        if (ok) as.push_back(std::move(a));
    }
    std::vector<AlgInt> deltas;
    std::vector<std::string> labels;
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<long> td(-range, range);
    std::uniform_int_distribution<std::size_t> ud(0, units.size() - 1), dsel(0, data.size() - 1);
    while (static_cast<long>(deltas.size()) < samples) {
        const auto& d0 = data[dsel(rng)];
        AlgInt tau(BigInt(td(rng)), BigInt(td(rng)));
        AlgInt u = units[ud(rng)];
        AlgInt delta = K.sub(K.mul(tau, tau), K.scale(K.mul(K.mul(u, d0.u), d0.eps), 4));
        if (!usable_delta(K, delta)) continue;
        deltas.push_back(delta);
    }
    struct Acc {
        SweepCount cong, orb, sym;
    };
    auto parts = parallel_map<Acc>(deltas.size(), workers(opt), [&](std::size_t i) {
        Acc acc;
        check_delta(K, deltas[i], small, as, acc.cong, acc.orb, &acc.sym);
        return acc;
    });
    Acc all;
    for (const auto& p : parts) {
        merge(all.cong, p.cong);
        merge(all.orb, p.orb);
        merge(all.sym, p.sym);
    }
    json in{{"field", field_tag(K)}, {"samples", samples}, {"seed", opt.seed}, {"tau_range", range}};
    auto with = [&](json extra) {
        json j = in;
        for (auto& [k, v] : extra.items()) j[k] = v;
        return j;
    };
    rep.add(count_record("congruence_equivalence", with({{"dmax_norm", dmax}}), all.cong));
    rep.add(count_record("orbital_divisor_sum_vs_product", in, all.orb));
    rep.add(count_record("chi_d_vs_modified_symbol", with({{"a_norm_bound", cfg.get_int("anorm", 40)}}), all.sym));
    return rep;
}

}  // namespace ntv
