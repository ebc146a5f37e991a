// Runs the twelve acceptance criteria; one PASS/FAIL line each.
//   acceptance              all criteria
//   acceptance --criterion N [--criterion M ...]

#include "nt/analytic.hpp"
#include "nt/elliptic.hpp"
#include "nt/errors.hpp"
#include "nt/kloosterman.hpp"
#include "nt/lfunc.hpp"
#include "nt/symbols.hpp"
#include "nt/zagier.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdarg>
#include <cstring>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace nt;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

const Field& Qf() {
    static const Field Q = Field::rationals();
    return Q;
}
const Field& K33() {
    static const Field K = Field::real_quadratic(33);
    return K;
}
const AlgInt kBeta(19, 8);
const AlgInt kRho(2, 1);

EllipticDatum k33_datum(const AlgInt& u, const AlgInt& tau = AlgInt(1)) {
    return EllipticDatum::make(K33(), K33().primes_above(2)[0], 1, kRho, 2, u, tau);
}

bool usable(const Field& K, const AlgInt& d) { return !d.is_zero() && !K.is_square(d); }

// 1. brute force against the closed tables
Outcome table_conformance() {
    const Field& Q = Qf();
    long rows = 0, bad = 0, skipped = 0;
    std::string first;
    for (u64 q : {2, 3, 5, 7, 11, 13}) {
        std::vector<long> ws;
        if (q == 2) {
            ws = {1, 3, 5, 7};
        } else {
            long nr = 2;
            while (kronecker(static_cast<i64>(nr), static_cast<i64>(q)) != -1) ++nr;
            ws = {1, nr};
        }
        for (unsigned k = 0; k <= 3; ++k)
            for (long w : ws) {
                BigInt c = 4 * w;
                for (unsigned i = 0; i < k; ++i) c *= static_cast<unsigned long>(q);
                LocalKloosterman L(Q, Q.primes_above(q)[0], AlgInt(c));
                if (L.regime() == Regime::E) {
                    skipped += 25;
                    continue;
                }
                for (unsigned v = 0; v <= 4; ++v)
                    for (unsigned r = 0; r <= 4; ++r) {
                        ++rows;
                        BigInt b = L.bruteforce(v, r), cl = L.closed(v, r);
                        if (b != cl) {
                            ++bad;
                            if (first.empty())
                                first = fmt(" first: q=%lu w=%ld k=%u v=%u r=%u brute=%s closed=%s", static_cast<unsigned long>(q), w, k, v,
                                            r, b.get_str().c_str(), cl.get_str().c_str());
                        }
                    }
            }
    }
    return {bad == 0, fmt("%ld rows (regimes A, B, B', C, D), %ld mismatches, %ld regime-E rows without a table", rows, bad, skipped) + first};
}

// 2. truncated local series against closed forms
Outcome local_dirichlet() {
    const Field& Q = Qf();
    const Field& K = K33();
    struct Case {
        const Field* F;
        u64 p;
        AlgInt c;
    };
    std::vector<Case> cs = {{&Q, 7, AlgInt(4)},     {&Q, 7, AlgInt(4 * 343)}, {&Q, 7, AlgInt(4 * 49 * 3)},
                            {&Q, 2, AlgInt(4 * 3)}, {&Q, 2, AlgInt(4 * 8 * 5)}, {&K, 2, AlgInt(4)},
                            {&K, 5, AlgInt(4)},     {&K, 3, AlgInt(4)},       {&K, 11, AlgInt(4)}};
    double worst = 0;
    bool ok = true;
    std::string seen;
    for (const auto& c : cs) {
        LocalKloosterman L(*c.F, c.F->primes_above(c.p)[0], c.c);
        if (seen.find(to_string(L.regime())) == std::string::npos) seen += std::string(seen.empty() ? "" : " ") + to_string(L.regime());
        for (cplx z : {cplx(2.0), cplx(1.5, 0.7)}) {
            auto e = L.dirichlet(z, 1e-12);
            cplx ref = L.dirichlet_closed(z);
            double diff = std::abs(e.value - ref), rel = diff / std::abs(ref);
            worst = std::max(worst, rel);
            ok = ok && diff <= e.tail_bound + 1e-14 * std::abs(ref) && rel < 1e-8;
        }
    }
    return {ok, "regimes " + seen + fmt(", worst relative defect %.2e (need < 1e-8), all within tail bounds", worst)};
}

// 3. global series against the zeta quotient, and unit independence
Outcome global_identity() {
    bool ok = true;
    std::ostringstream os;
    auto run = [&](const std::string& name, const std::vector<EllipticDatum>& data) {
        std::vector<cplx> vals;
        double worst = 0;
        for (const auto& d : data) {
            auto g = global_dirichlet(d, 2.0, 10000);
            double diff = std::abs(g.value - *g.reference);
            worst = std::max(worst, diff);
            ok = ok && diff <= 1e-6;
            vals.push_back(g.value);
        }
        double spread = 0;
        for (const auto& v : vals) spread = std::max(spread, std::abs(v - vals[0]));
        ok = ok && spread <= 1e-10;
        os << fmt("%s: max |D - closed| %.2e, unit spread %.2e; ", name.c_str(), worst, spread);
    };
    run("Q p=5 k=1 u=+-1", {EllipticDatum::rational(1, 1, 5, 1), EllipticDatum::rational(1, -1, 5, 1)});
    const Field& K = K33();
    run("Q(sqrt33) k=2 u=1,b,-b,b^2",
        {k33_datum(AlgInt(1)), k33_datum(kBeta), k33_datum(K.neg(kBeta)), k33_datum(K.mul(kBeta, kBeta))});
    return {ok, os.str() + "norm bound 1e4, z=2"};
}

// 4. residue at 1/2 against the stated constant
Outcome residue() {
    auto rq = residue_at_half(EllipticDatum::rational(1, 1, 5, 1));
    auto rk = residue_at_half(k33_datum(AlgInt(1)));
    bool ok = std::abs(rq.numeric - rq.stated) <= 1e-6 && std::abs(rk.numeric - rk.stated) <= 1e-6;
    return {ok, fmt("Q: numeric %.10f stated %.10f; Q(sqrt33): numeric %.10f stated %.10f; "
                    "the numeric residues match kappa/2 in place of kappa (%.10f, %.10f)",
                    rq.numeric, rq.stated, rk.numeric, rk.stated, rq.corrected, rk.corrected)};
}

// 5. sum over x mod q of (x^2 - m / q)
Outcome character_sums() {
    long cases = 0, bad = 0;
    for (u64 q : primes_up_to(50)) {
        if (q == 2) continue;
        i64 qq = static_cast<i64>(q);
        for (i64 m = 1; m < qq; ++m) {
            i64 s = 0;
            for (i64 x = 0; x < qq; ++x) s += kronecker(x * x - m, qq);
            ++cases;
            bad += s != -1;
        }
    }
    return {bad == 0, fmt("%ld (q, m mod q) pairs, %ld with sum != -1", cases, bad)};
}

// 6. modified symbol against the Kronecker symbol of delta / d^2
Outcome symbol_identity() {
    const Field& Q = Qf();
    std::mt19937_64 rng(6);
    long n = 0, bad = 0;
    while (n < 1000) {
        i64 d = static_cast<i64>(rng() % 20001) - 10000;
        if (floor_mod(d, 4) > 1 || !usable(Q, AlgInt(d))) continue;
        auto divs = Q.divisors(s_gamma(Q, AlgInt(d)).S);
        const auto& dv = divs[rng() % divs.size()];
        i64 a = static_cast<i64>(rng() % 1000 + 1), dn = dv.norm().get_si();
        bad += modified_hilbert(Q, AlgInt(d), dv, Q.principal(AlgInt(a))) != kronecker(d / (dn * dn), a);
        ++n;
    }
    return {bad == 0, fmt("%ld random triples (delta, d | S, a <= 1000), %ld disagreements", n, bad)};
}

// 7. congruence criterion against S_gamma
Outcome congruence() {
    const Field& Q = Qf();
    std::vector<Ideal> ds;
    for (long d = 1; d <= 30; ++d) ds.push_back(Q.principal(AlgInt(d)));
    long cases = 0, bad = 0;
    for (i64 d = -10000; d <= 10000; ++d) {
        if (floor_mod(d, 4) > 1 || !usable(Q, AlgInt(d))) continue;
        auto S = s_gamma(Q, AlgInt(d)).S;
        for (const auto& dd : ds) {
            ++cases;
            bad += divides_s_gamma(Q, AlgInt(d), dd) != Q.divides(dd, S);
        }
    }
    return {bad == 0, fmt("%ld (delta, d) pairs with |delta| <= 1e4, d <= 30, %ld disagreements", cases, bad)};
}

// 8. orbital divisor sum against the local product
Outcome orbital_identity() {
    std::mt19937_64 rng(8);
    long nq = 0, nk = 0, bad = 0;
    const Field& Q = Qf();
    while (nq < 500) {
        // tau^2 - 4 u p^k with small primes, so S has several factors
        i64 tau = static_cast<i64>(rng() % 2001) - 1000;
        i64 u = (rng() & 1) ? 1 : -1;
        i64 p = std::vector<i64>{2, 3, 5, 7}[rng() % 4], k = static_cast<i64>(rng() % 4), e = 1;
        for (i64 i = 0; i < k; ++i) e *= p;
        AlgInt d(tau * tau - 4 * u * e);
        if (!usable(Q, d)) continue;
        bad += finite_orbital_divisor_sum(Q, d) != finite_orbital_product(Q, d);
        ++nq;
    }
    const Field& K = K33();
    AlgInt eps = K.mul(kRho, kRho);
    std::vector<AlgInt> units = {AlgInt(1), AlgInt(-1), kBeta, K.neg(kBeta)};
    while (nk < 500) {
        AlgInt tau(static_cast<long>(rng() % 61) - 30, static_cast<long>(rng() % 61) - 30);
        AlgInt d = K.sub(K.mul(tau, tau), K.scale(K.mul(units[rng() % 4], eps), 4));
        if (!usable(K, d)) continue;
        bad += finite_orbital_divisor_sum(K, d) != finite_orbital_product(K, d);
        ++nk;
    }
    return {bad == 0, fmt("%ld data over Q, %ld over Q(sqrt33), %ld disagreements (exact rationals)", nq, nk, bad)};
}

// 9. functional equation
Outcome functional_equation() {
    std::mt19937_64 rng(9);
    long sym_bad = 0;
    for (int t = 0; t < 100; ++t) {
        std::vector<unsigned> e(rng() % 3 + 1);
        for (auto& x : e) x = static_cast<unsigned>(rng() % 6);
        sym_bad += !finite_part_symmetric(e);
    }
    double worst = 0;
    bool ok = sym_bad == 0;
    for (i64 d : {5, 12, 29, 45, 48})
        for (double z : {0.25, 0.3, 0.4, 0.7}) {
            auto r = verify_functional_equation(d, z, 1e-6);
            worst = std::max(worst, r.defect);
            ok = ok && r.pass && r.exact_ok;
        }
    return {ok, fmt("100 random divisor structures, %ld asymmetric; max |Lambda(z) - Lambda(1-z)| %.2e over 20 points", sym_bad, worst)};
}

// 10. approximate functional equation
Outcome afe() {
    bool ok = true;
    std::string s;
    for (i64 d : {29, 45}) {
        auto r = afe_verify(d, 0.5);
        ok = ok && r.abs_defect < 1e-4;
        s += fmt("delta=%ld defect %.2e (budget %.2e); ", static_cast<long>(d), r.abs_defect, r.error_budget);
    }
    return {ok, s + "z=1, alpha=1/2"};
}

// 11. analytic layer
Outcome analytic() {
    bool ok = true;
    std::string s;
    double f0 = cutoff_F(1e-12);
    ok = ok && std::abs(f0 - 1) <= 1e-8;
    s += fmt("F(0+) - 1 = %.1e; ", f0 - 1);
    const double norm = 2 * bessel_k0_2();
    bool bound = true;
    for (int i = 1; i <= 100; ++i) {
        double x = 0.1 * i;
        double f = cutoff_F(x);
        bound = bound && f > 0 && f < std::exp(-x) / norm;
    }
    ok = ok && bound;
    s += std::string("bound on 100 points ") + (bound ? "holds" : "FAILS") + "; ";
    double res = (1e-7 * mellin_F(1e-7)).real();
    ok = ok && std::abs(res - 1) <= 1e-6;
    double odd = std::max(std::abs(mellin_F(0.7) + mellin_F_entire(-0.7)), std::abs(mellin_F(cplx(1, 1)) + mellin_F_entire(cplx(-1, -1))));
    ok = ok && odd <= 1e-8;
    s += fmt("residue %.9f, oddness %.1e; ", res, odd);
    double gq = gamma_ratio_limit(Qf(), {0}), gr = gamma_ratio_limit(Qf(), {1});
    double gk = gamma_ratio_limit(K33(), {0, 0}), gkr = gamma_ratio_limit(K33(), {0, 1});
    ok = ok && std::abs(gq + 1) <= 1e-5 && std::abs(gr) <= 1e-5 && std::abs(gk + 2 * std::sqrt(33.0)) <= 1e-5 && std::abs(gkr) <= 1e-5;
    s += fmt("gamma ratio limits Q %.8f, ramified %.1e, Q(sqrt33) %.8f (-2 sqrt 33 = %.8f), ramified %.1e", gq, gr, gk,
             -2 * std::sqrt(33.0), gkr);
    return {ok, s};
}

// 12. L(1, chi_D) against the class number formula
Outcome class_numbers() {
    bool ok = true;
    std::string s;
    for (i64 D : {5, 8, 12, 13}) {
        auto r = l_one_quadratic(D);
        ok = ok && r.defect < 1e-4;
        s += fmt("D=%ld h=%d defect %.1e; ", static_cast<long>(D), r.class_number, r.defect);
    }
    return {ok, s};
}

struct Criterion {
    const char* name;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> all = {
        {"local sum tables", table_conformance},
        {"local Dirichlet factors", local_dirichlet},
        {"global Dirichlet identity", global_identity},
        {"residue at 1/2", residue},
        {"quadratic character sums", character_sums},
        {"modified symbol over Q", symbol_identity},
        {"congruence criterion", congruence},
        {"orbital divisor sums", orbital_identity},
        {"functional equation", functional_equation},
        {"approximate functional equation", afe},
        {"analytic layer", analytic},
        {"class number cross-check", class_numbers},
    };
    std::vector<int> pick;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            int n = std::atoi(argv[++i]);
            if (n < 1 || n > static_cast<int>(all.size())) {
                std::fprintf(stderr, "no criterion %s\n", argv[i]);
                return 2;
            }
            pick.push_back(n);
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]...\n", argv[0]);
            return 2;
        }
    }
    if (pick.empty())
        for (int i = 1; i <= static_cast<int>(all.size()); ++i) pick.push_back(i);
    bool ok = true;
    for (int n : pick) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = all[n - 1].run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %2d %s  %s (%.1fs): %s\n", n, o.pass ? "PASS" : "FAIL", all[n - 1].name, secs, o.detail.c_str());
        std::fflush(stdout);
        ok = ok && o.pass;
    }
    return ok ? 0 : 1;
}
