#include "nt/zagier.hpp"

#include "nt/errors.hpp"
#include "nt/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace nt {

namespace {


std::vector<i64> divisors_of(i64 n) {
    std::vector<i64> d;
    for (i64 i = 1; i * i <= n; ++i) {
        if (n % i) continue;
        d.push_back(i);
        if (i != n / i) d.push_back(n / i);
    }
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<i64> prime_divisors(i64 n) {
    std::vector<i64> ps;
    for (const auto& pp : factorize(BigInt(static_cast<long>(n)))) ps.push_back(pp.p.get_si());
    return ps;
}

Rational rpow(const BigInt& n, int e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(1) / Rational(r) : Rational(r);
}

cplx cpow(double n, cplx e) { return std::exp(e * std::log(n)); }

// sum_{d | f} d^(1-2z) prod_{q | f/d} (1 - chi_D(q) q^-z)
cplx divisor_factor(i64 D, i64 f, cplx z) {
    cplx total = 0.0;
    for (i64 d : divisors_of(f)) {
        cplx t = cpow(static_cast<double>(d), 1.0 - 2.0 * z);
        for (i64 q : prime_divisors(f / d)) t *= 1.0 - static_cast<double>(kronecker(D, q)) * cpow(static_cast<double>(q), -z);
        total += t;
    }
    return total;
}

bool below_sqrt(i64 x, i64 D) { return x < 0 || x * x < D; }  // x < sqrt D
bool above_sqrt(i64 x, i64 D) { return x > 0 && x * x > D; }  // x > sqrt D

}  // namespace

DiscSplit split_discriminant(i64 delta) {
    i64 r = floor_mod(delta, 4);
    if (r != 0 && r != 1) throw InvalidInput("discriminant must be 0 or 1 mod 4");
    if (delta == 0) throw InvalidInput("discriminant must be nonzero");
    if (delta > 0 && is_perfect_square(BigInt(static_cast<long>(delta)))) throw SquareDiscriminant("square discriminant");
    i64 f = 1;
    for (const auto& pp : factorize(BigInt(static_cast<long>(std::llabs(delta))))) {
        i64 p = pp.p.get_si();
        unsigned t = pp.e / 2;
        if (p == 2) {
            while (t > 0) {
                i64 q = delta / (i64(1) << (2 * t));
                i64 m = floor_mod(q, 4);
                if (m == 0 || m == 1) break;
                --t;
            }
        }
        for (unsigned i = 0; i < t; ++i) f *= p;
    }
    return {delta / (f * f), f};
}

cplx zagier_zeta(cplx z, i64 delta) {
    auto [D, f] = split_discriminant(delta);
    return dirichlet_l(D, z) * divisor_factor(D, f, z);
}

LValue zagier_zeta_partial(cplx z, i64 delta, u64 N) {
    if (z.real() <= 1.0) throw InvalidInput("partial sums need Re z > 1");
    auto [D, f] = split_discriminant(delta);
    (void)D;
    LValue out{0.0, 0.0};
    const double sig = z.real();
    for (i64 d : divisors_of(f)) {
        i64 dd = delta / (d * d);
        i64 m = floor_mod(dd, 4);
        if (m != 0 && m != 1) continue;
        i64 period = std::llabs(dd);
        std::vector<int> chi(static_cast<std::size_t>(period));
        for (i64 n = 0; n < period; ++n) chi[static_cast<std::size_t>(n)] = kronecker(dd, n);
        i64 S = 0, M = 0;
        for (i64 n = 1; n <= period; ++n) {
            S += chi[static_cast<std::size_t>(n % period)];
            M = std::max(M, std::abs(S));
        }
        cplx s = 0.0;
        for (u64 n = 1; n <= N; ++n) {
            int c = chi[n % static_cast<u64>(period)];
            if (c) s += static_cast<double>(c) * cpow(static_cast<double>(n), -z);
        }
        cplx w = cpow(static_cast<double>(d), 1.0 - 2.0 * z);
        out.value += w * s;
        // Abel summation: |sum_{n > N}| <= M N^-sigma (1 + |z| / sigma)
        out.error += std::abs(w) * static_cast<double>(M) * std::pow(static_cast<double>(N), -sig) * (1.0 + std::abs(z) / sig);
    }
    return out;
}

cplx l_mult_langlands(cplx z, i64 delta) {
    auto [D, f] = split_discriminant(delta);
    Field Q = Field::rationals();
    AlgInt del(BigInt(static_cast<long>(delta)));
    double S = static_cast<double>(f);
    return dirichlet_l(D, z) * orbital_z(Q, del, z) / cpow(S, z);
}

LValue hecke_l_euler(const Field& K, const AlgInt& delta, cplx z, u64 P) {
    if (z.real() <= 1.0) throw InvalidInput("Euler product needs Re z > 1");
    cplx lg = 0.0;
    for (u64 p : primes_up_to(P)) {
        for (const auto& q : K.primes_above(p)) {
            if (q.norm > P) continue;
            int c = chi_gamma(K, delta, q);
            if (c == 0) continue;
            lg -= std::log(1.0 - static_cast<double>(c) * cpow(static_cast<double>(q.norm), -z));
        }
    }
    const double sig = z.real();
    double tail = K.degree() * 1.2 * std::pow(static_cast<double>(P), 1.0 - sig) / (sig - 1.0);
    cplx v = std::exp(lg);
    return {v, std::abs(v) * std::expm1(tail)};
}

LValue l_mult_langlands(const Field& K, const AlgInt& delta, cplx z, u64 P) {
    auto L = hecke_l_euler(K, delta, z, P);
    auto D = s_gamma(K, delta);
    cplx fp = orbital_z(K, delta, z) / cpow(D.S.norm().get_d(), z);
    return {L.value * fp, L.error * std::abs(fp)};
}

LValue l_mult_langlands(const EllipticDatum& dat, cplx z, u64 P) { return l_mult_langlands(dat.K, dat.delta(), z, P); }

Rational finite_part_exact(const Field& K, const AlgInt& delta, int z) {
    auto D = s_gamma(K, delta);
    Rational r = orbital_z_exact(K, delta, z) / rpow(D.S.norm(), z);
    r.canonicalize();
    return r;
}

Rational finite_part_mobius(const Field& K, const AlgInt& delta, int z) {
    if (z < 1) throw InvalidInput("finite_part_mobius: z must be >= 1");
    auto D = s_gamma(K, delta);
    std::vector<std::pair<PrimeIdeal, int>> primes;
    for (const auto& [q, e] : D.S.factors) primes.emplace_back(q, chi_gamma(K, delta, q));
    Rational total = 0;
    const std::size_t n = primes.size();
    for (u64 mask = 0; mask < (u64(1) << n); ++mask) {
        IdealFactors rf;
        Rational coef = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask >> i & 1)) continue;
            rf.emplace_back(primes[i].first, 1u);
            coef *= -primes[i].second;
            coef *= rpow(BigInt(static_cast<unsigned long>(primes[i].first.norm)), -z);
        }
        if (coef == 0) continue;
        Ideal rest = K.quotient(D.S, K.from_factors(rf));
        Rational inner = 0;
        for (const auto& d : K.divisors(rest)) inner += rpow(d.norm(), 1 - 2 * z);
        total += coef * inner;
    }
    total.canonicalize();
    return total;
}

bool finite_part_symmetric(const std::vector<unsigned>& exponents) {
    // doubled exponent of prime i in N(r)^(z-1/2) N(d)^(1-2z): (2e - 4j) z + (2j - e)
    using Mono = std::vector<std::pair<long, long>>;
    std::multiset<Mono> before, after;
    std::vector<unsigned> j(exponents.size(), 0);
    while (true) {
        Mono m, mt;
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            long e = exponents[i], jj = j[i];
            long a = 2 * e - 4 * jj, b = 2 * jj - e;
            m.emplace_back(a, b);
            mt.emplace_back(-a, a + b);  // z -> 1 - z
        }
        before.insert(m);
        after.insert(mt);
        std::size_t i = 0;
        while (i < j.size() && j[i] == exponents[i]) j[i++] = 0;
        if (i == j.size()) break;
        ++j[i];
    }
    return before == after;
}

cplx completed_l_primitive(cplx z, i64 D, double X) {
    double a = D < 0 ? 1.0 : 0.0;
    return completed_l_standard(D, z, X) / std::pow(static_cast<double>(std::llabs(D)), a / 2);
}

cplx completed_lambda(cplx z, i64 delta, double X) {
    auto [D, f] = split_discriminant(delta);
    (void)f;
    Field Q = Field::rationals();
    return completed_l_primitive(z, D, X) * orbital_z(Q, AlgInt(BigInt(static_cast<long>(delta))), z);
}

FeReport verify_functional_equation(i64 delta, cplx z, double tol) {
    FeReport rep;
    rep.delta = delta;
    rep.z = z;
    rep.tolerance = tol;
    auto [D, f] = split_discriminant(delta);
    (void)D;
    rep.exact_ok = true;
    // each r' = S / r of the Moebius expansion
    auto ps = factorize(BigInt(static_cast<long>(f)));
    for (u64 mask = 0; mask < (u64(1) << ps.size()); ++mask) {
        std::vector<unsigned> ex;
        for (std::size_t i = 0; i < ps.size(); ++i) ex.push_back(ps[i].e - ((mask >> i & 1) ? 1u : 0u));
        rep.exact_ok = rep.exact_ok && finite_part_symmetric(ex);
    }
    rep.lhs = completed_lambda(z, delta, 1.3);
    rep.rhs = completed_lambda(1.0 - z, delta, 2.0);
    rep.defect = std::abs(rep.lhs - rep.rhs);
    rep.pass = rep.exact_ok && rep.defect <= tol;
    return rep;
}

AfeReport afe_verify(i64 delta, double alpha, double xmax, ContourSpec spec) {
    if (!(alpha > 0 && alpha < 1)) throw InvalidInput("alpha must lie in (0, 1)");
    auto [D, f] = split_discriminant(delta);
    const double ad = static_cast<double>(std::llabs(delta));
    AfeReport rep;
    rep.alpha = alpha;
    rep.A = std::pow(ad, alpha);
    rep.lhs = l_mult_langlands(1.0, delta).real();

    auto chi_d = [&](i64 d, i64 a) {
        if (std::gcd(a, f / d) != 1) return 0;
        return kronecker(D, a);
    };
    const double norm = 2.0 * bessel_k0_2();
    double f_sum = 0, f_err = 0;
    for (i64 d : divisors_of(f)) {
        double dd = static_cast<double>(d * d);
        i64 amax = static_cast<i64>(std::floor(xmax * rep.A / dd));
        for (i64 a = 1; a <= amax; ++a) {
            int c = chi_d(d, a);
            if (!c) continue;
            f_sum += c * cutoff_F(dd * a / rep.A) / (static_cast<double>(d) * a);
            ++rep.f_terms;
        }
        // F(x) < e^-x / 2K_0(2) beyond the cut
        double step = dd / rep.A;
        f_err += std::exp(-xmax) / norm / (static_cast<double>(d) * (amax + 1)) / (-std::expm1(-step));
    }

    HContour H(1.0, {delta < 0 ? 1 : 0}, spec);
    double h_sum = 0, h_err = 0, C = 0;
    const double pref = 1.0 / std::sqrt(ad);
    for (i64 d : divisors_of(f)) {
        double dd = static_cast<double>(d * d);
        double step = dd * rep.A / ad;
        i64 amax = static_cast<i64>(std::floor(xmax / step));
        for (i64 a = 1; a <= amax; ++a) {
            int c = chi_d(d, a);
            if (!c) continue;
            double y = step * a;
            auto h = H(y);
            h_sum += static_cast<double>(d * c) * h.value.real();
            h_err += static_cast<double>(d) * h.error;
            if (y >= 1) C = std::max(C, std::abs(h.value) * y * std::exp(std::sqrt(y)));
            ++rep.h_terms;
        }
        // tail with the fitted decay |H(y)| <= C e^-sqrt(y) / y, summed as an integral past the cut
        double y0 = step * (amax + 1);
        double tail = 0;
        for (double y = y0; y < y0 + 400.0 * step + 4000.0; y += step) {
            double t = C * std::exp(-std::sqrt(y)) / y;
            tail += t;
            if (t < 1e-20) break;
        }
        h_err += static_cast<double>(d) * 2.0 * tail;
    }
    rep.f_term = f_sum;
    rep.h_term = pref * h_sum;
    rep.rhs = rep.f_term + rep.h_term;
    rep.abs_defect = std::abs(rep.lhs - rep.rhs);
    rep.rel_defect = rep.abs_defect / std::abs(rep.lhs);
    rep.error_budget = f_err + pref * h_err + 1e-12;
    return rep;
}

int class_number(i64 D) {
    if (D <= 0 || !is_fundamental_discriminant(D) || D == 1) throw InvalidInput("class_number: positive fundamental discriminant");
    using Form = std::tuple<i64, i64, i64>;
    std::set<Form> reduced;
    for (i64 b = D % 2; below_sqrt(b, D); b += 2) {
        if (b <= 0) continue;
        i64 ac = (b * b - D) / 4;  // negative
        for (i64 a : divisors_of(-ac)) {
            for (i64 sa : {a, -a}) {
                // |sqrt D - 2|a|| < b < sqrt D
                if (above_sqrt(b + 2 * a, D) && below_sqrt(2 * a - b, D))
                    reduced.insert({sa, b, ac / sa});
            }
        }
    }
    auto rho = [&](const Form& f) {
        auto [a, b, c] = f;
        i64 m = 2 * std::llabs(c);
        // b' = -b mod 2|c|, sqrt D - 2|c| < b' < sqrt D
        i64 bp = floor_mod(-b, m);
        while (!below_sqrt(bp, D)) bp -= m;
        while (below_sqrt(bp + m, D)) bp += m;
        return Form{c, bp, (bp * bp - D) / (4 * c)};
    };
    std::set<Form> seen;
    int cycles = 0;
    for (const auto& f : reduced) {
        if (seen.count(f)) continue;
        ++cycles;
        Form g = f;
        do {
            seen.insert(g);
            g = rho(g);
        } while (!seen.count(g));
    }
    i64 m = D % 4 == 0 ? D / 4 : D;
    Field K = Field::real_quadratic(m);
    auto U = K.fundamental_unit();
    bool neg_norm = K.norm(*U.beta) < 0;
    return neg_norm ? cycles : cycles / 2;
}

LOneReport l_one_quadratic(i64 D, u64 N) {
    if (D <= 1 || !is_fundamental_discriminant(D)) throw InvalidInput("l_one_quadratic: positive fundamental discriminant");
    LOneReport rep;
    std::vector<int> chi(static_cast<std::size_t>(D));
    for (i64 n = 0; n < D; ++n) chi[static_cast<std::size_t>(n)] = kronecker(D, n);
    i64 S = 0, M = 0;
    for (i64 n = 1; n <= D; ++n) {
        S += chi[static_cast<std::size_t>(n % D)];
        M = std::max(M, std::abs(S));
    }
    long double s = 0;
    for (u64 n = 1; n <= N; ++n) {
        int c = chi[n % static_cast<u64>(D)];
        if (c) s += static_cast<long double>(c) / static_cast<long double>(n);
    }
    rep.value = static_cast<double>(s);
    rep.tail = 2.0 * static_cast<double>(M) / static_cast<double>(N + 1);
    rep.class_number = class_number(D);
    i64 m = D % 4 == 0 ? D / 4 : D;
    Field K = Field::real_quadratic(m);
    auto U = K.fundamental_unit();
    rep.regulator = std::log(std::fabs(static_cast<double>(K.embed(*U.beta, 0))));
    rep.reference = 2.0 * rep.class_number * rep.regulator / std::sqrt(static_cast<double>(D));
    rep.defect = std::fabs(rep.value - rep.reference);
    return rep;
}

}  // namespace nt
