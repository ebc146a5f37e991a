#include "nt/elliptic.hpp"

#include "nt/errors.hpp"
#include "nt/local.hpp"
#include "nt/symbols.hpp"

namespace nt {

namespace {

// (delta / pi^(2t)) mod 4 at a split prime above 2, val(delta) >= 2t
u64 quotient_mod4(const Field& K, const AlgInt& delta, const PrimeIdeal& q, unsigned t) {
    if (K.is_rational()) {
        BigInt x = delta.x;
        mpz_fdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), 2 * t);
        return mod_u64(x, 4);
    }
    Completion C(K, q, 2 * t + 2);
    return C.mod4(C.div_pi(C.image(delta), 2 * t));
}

unsigned s_exponent(const Field& K, const AlgInt& delta, const PrimeIdeal& q, unsigned v) {
    if (q.p != 2) return v / 2;
    if (q.type != SplitType::Split) {
        if (v <= 1) return 0;
        throw UnsupportedPrime("S_gamma at non-split prime above 2");
    }
    for (unsigned t = v / 2; t > 0; --t) {
        u64 r = quotient_mod4(K, delta, q, t);
        if (r == 0 || r == 1) return t;
    }
    return 0;
}

int chi_of(const Field& K, const AlgInt& delta, const PrimeIdeal& q) { return chi_gamma(K, delta, q); }

SplitType type_of_chi(int chi) {
    if (chi == 1) return SplitType::Split;
    if (chi == -1) return SplitType::Inert;
    return SplitType::Ramified;
}

Rational rpow(u64 q, unsigned n) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), q, n);
    return Rational(r);
}

}  // namespace

EllipticDatum EllipticDatum::make(const Field& K, const PrimeIdeal& p, unsigned h, const AlgInt& rho, unsigned k,
                                  const AlgInt& u, const AlgInt& tau) {
    if (h == 0) throw InvalidInput("h_p must be positive");
    if (k % h != 0) throw InvalidInput("h_p must divide k");
    if (!K.validate_hyp_div(p, h, rho, k)) throw InvalidInput("(rho) is not p^h");
    if (!K.is_unit(u)) throw InvalidInput("u is not a unit");
    EllipticDatum d;
    d.K = K;
    d.p = p;
    d.k = k;
    d.h = h;
    d.rho = rho;
    d.eps = K.pow(rho, k / h);
    d.u = u;
    d.tau = tau;
    return d;
}

EllipticDatum EllipticDatum::rational(i64 tau, i64 u, u64 p, unsigned k) {
    Field Q = Field::rationals();
    auto ps = Q.primes_above(p);
    return make(Q, ps[0], 1, AlgInt(static_cast<long>(p)), k, AlgInt(static_cast<long>(u)), AlgInt(static_cast<long>(tau)));
}

AlgInt EllipticDatum::four_u_eps() const { return K.scale(K.mul(u, eps), 4); }

AlgInt EllipticDatum::delta() const { return K.sub(K.mul(tau, tau), four_u_eps()); }

AlgInt delta(const EllipticDatum& d) { return d.delta(); }

bool is_regular_elliptic(const EllipticDatum& d) {
    AlgInt dl = d.delta();
    return !dl.is_zero() && !d.K.is_square(dl);
}

DiscriminantData s_gamma(const Field& K, const AlgInt& delta) {
    if (delta.is_zero() || K.is_square(delta)) throw SquareDiscriminant("delta is a square in K");
    Ideal D = K.principal(delta);
    IdealFactors sf;
    for (const auto& [q, v] : D.factors) {
        unsigned t = s_exponent(K, delta, q, v);
        if (t) sf.emplace_back(q, t);
    }
    DiscriminantData out;
    out.delta = delta;
    out.S = K.from_factors(sf);
    out.Delta = K.quotient(D, K.multiply(out.S, out.S));
    return out;
}

DiscriminantData s_gamma(const EllipticDatum& d) { return s_gamma(d.K, d.delta()); }

bool divides_s_gamma(const Field& K, const AlgInt& delta, const Ideal& d) {
    if (delta.is_zero()) throw SquareDiscriminant("delta is zero");
    if (!K.contains(K.multiply(d, d), delta)) return false;
    for (const auto& [q, t] : d.factors) {
        if (q.p != 2) continue;
        if (q.type != SplitType::Split) throw UnsupportedPrime("congruence condition at non-split prime above 2");
        u64 r = quotient_mod4(K, delta, q, t);
        if (r != 0 && r != 1) return false;
    }
    return true;
}

bool divides_s_gamma(const EllipticDatum& dat, const Ideal& d) { return divides_s_gamma(dat.K, dat.delta(), d); }

Rational local_orbital(SplitType type, u64 q, unsigned n) {
    if (n == 0) return 1;
    Rational qn = rpow(q, n);
    Rational qq(static_cast<unsigned long>(q));
    switch (type) {
        case SplitType::Split: return qn;
        case SplitType::Inert: return qn * (qq + 1) / (qq - 1) - Rational(2) / (qq - 1);
        case SplitType::Ramified: return qn * qq / (qq - 1) - Rational(1) / (qq - 1);
    }
    return 0;
}

Rational local_orbital(const Field& K, const AlgInt& delta, const PrimeIdeal& q) {
    auto D = s_gamma(K, delta);
    return local_orbital(type_of_chi(chi_of(K, delta, q)), q.norm, D.S.valuation(q));
}

Rational finite_orbital_divisor_sum(const Field& K, const AlgInt& delta) {
    auto D = s_gamma(K, delta);
    Rational total = 0;
    for (const auto& d : K.divisors(D.S)) {
        Rational term(d.norm());
        for (const auto& [q, e] : d.factors) {
            term *= Rational(1) - Rational(chi_of(K, delta, q)) / Rational(static_cast<unsigned long>(q.norm));
        }
        total += term;
    }
    total.canonicalize();
    return total;
}

Rational finite_orbital_product(const Field& K, const AlgInt& delta) {
    auto D = s_gamma(K, delta);
    Rational r = 1;
    for (const auto& [q, n] : D.S.factors) r *= local_orbital(type_of_chi(chi_of(K, delta, q)), q.norm, n);
    r.canonicalize();
    return r;
}

OrbitalValue finite_orbital(const EllipticDatum& d) {
    OrbitalValue v;
    v.rational_part = finite_orbital_divisor_sum(d.K, d.delta());
    v.p = d.p.norm;
    v.p_exponent = Rational(-static_cast<long>(d.k), 2);
    v.p_exponent.canonicalize();
    return v;
}

std::complex<double> orbital_z(const Field& K, const AlgInt& delta, std::complex<double> z) {
    auto D = s_gamma(K, delta);
    std::complex<double> total = 0;
    for (const auto& d : K.divisors(D.S)) {
        std::complex<double> term = std::pow(d.norm().get_d(), 1.0 - 2.0 * z);
        Ideal rest = K.quotient(D.S, d);
        for (const auto& [q, e] : rest.factors)
            term *= 1.0 - static_cast<double>(chi_of(K, delta, q)) * std::pow(static_cast<double>(q.norm), -z);
        total += term;
    }
    return std::pow(D.S.norm().get_d(), z) * total;
}

std::complex<double> orbital_z_local(const Field& K, const AlgInt& delta, std::complex<double> z) {
    auto D = s_gamma(K, delta);
    std::complex<double> r = 1;
    for (const auto& [q, n] : D.S.factors) {
        double qq = static_cast<double>(q.norm);
        double chi = chi_of(K, delta, q);
        std::complex<double> s = 0;
        for (unsigned j = 0; j <= n; ++j) {
            std::complex<double> t = std::pow(qq, static_cast<double>(j) * (1.0 - 2.0 * z));
            if (j < n) t *= 1.0 - chi * std::pow(qq, -z);
            s += t;
        }
        r *= std::pow(qq, static_cast<double>(n) * z) * s;
    }
    return r;
}

Rational orbital_z_exact(const Field& K, const AlgInt& delta, int z) {
    if (z < 1) throw InvalidInput("orbital_z_exact: z must be >= 1");
    auto D = s_gamma(K, delta);
    auto qpow = [](const BigInt& n, int e) {
        BigInt r;
        mpz_pow_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
        return e < 0 ? Rational(1) / Rational(r) : Rational(r);
    };
    Rational total = 0;
    for (const auto& d : K.divisors(D.S)) {
        Rational term = qpow(d.norm(), 1 - 2 * z);
        Ideal rest = K.quotient(D.S, d);
        for (const auto& [q, e] : rest.factors)
            term *= Rational(1) - Rational(chi_of(K, delta, q)) * qpow(BigInt(static_cast<unsigned long>(q.norm)), -z);
        total += term;
    }
    total *= qpow(D.S.norm(), z);
    total.canonicalize();
    return total;
}

}  // namespace nt
