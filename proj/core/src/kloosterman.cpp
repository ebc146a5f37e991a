#include "nt/kloosterman.hpp"

#include "nt/errors.hpp"
#include "nt/lfunc.hpp"
#include "nt/symbols.hpp"

#include <cmath>

namespace nt {

const char* to_string(Regime r) {
    switch (r) {
        case Regime::A: return "A";
        case Regime::B: return "B";
        case Regime::Bp: return "B'";
        case Regime::C: return "C";
        case Regime::D: return "D";
        case Regime::E: return "E";
    }
    return "?";
}

namespace {

BigInt bpow(u64 q, unsigned e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), q, e);
    return r;
}

bool fits_digits(u64 p, unsigned digits) {
    u128 m = 1;
    for (unsigned i = 0; i < digits; ++i) {
        m *= p;
        if (m >= (u128(1) << 62)) return false;
    }
    return true;
}

}  // namespace

LocalKloosterman::LocalKloosterman(const Field& K, const PrimeIdeal& q, const AlgInt& c) : K_(K), q_(q), c_(c) {
    if (c.is_zero()) throw InvalidInput("local constant must be nonzero");
    if (q.p == 2 && q.type != SplitType::Split) throw UnsupportedPrime("Kloosterman sums at non-split prime above 2");
    unsigned vc = K.valuation(c, q);
    if (q.p == 2) {
        if (vc < 2) throw InvalidInput("local constant must be divisible by 4");
        k_ = vc - 2;
        regime_ = k_ == 0 ? Regime::C : (k_ % 2 ? Regime::D : Regime::E);
        Completion C(K, q, vc + 4);
        auto w = C.div_pi(C.image(c), vc);
        cls8_ = static_cast<unsigned>(w.x & 7);
    } else {
        k_ = vc;
        regime_ = k_ == 0 ? Regime::A : (k_ % 2 ? Regime::B : Regime::Bp);
        unsigned d = q.type == SplitType::Ramified ? k_ / 2 + 2 : k_ + 1;
        Completion C(K, q, d);
        auto w = C.div_pi(C.image(c), k_);
        sym_ = C.unit_symbol(w);
    }
}

unsigned LocalKloosterman::modulus_exponent(unsigned v, unsigned r) const { return q_.p == 2 ? 2 + v + 2 * r : v + 2 * r; }

unsigned LocalKloosterman::period(unsigned v, unsigned r) const {
    unsigned base = q_.p == 2 ? 2 * r + 2 : 2 * r;
    return v > 0 ? base + 1 : base;
}

Completion LocalKloosterman::ring(unsigned level) const {
    unsigned d = q_.type == SplitType::Ramified ? (level + 1) / 2 + 1 : level;
    if (d == 0) d = 1;
    if (!fits_digits(q_.p, d)) throw ResourceError("local precision exceeds 62 bits");
    return Completion(K_, q_, d);
}

int LocalKloosterman::summand(const Completion& C, const Completion::Elt& mu, const Completion::Elt& c, unsigned v,
                              unsigned r) const {
    auto s = C.sub(C.sqr(mu), c);
    if (C.val(s) < 2 * r) return 0;
    auto x = C.div_pi(s, 2 * r);
    if (q_.p == 2) {
        u64 m4 = x.x & 3;
        if (m4 > 1) return 0;
        if (v == 0) return 1;
        if ((x.x & 1) == 0) return 0;
        if (v % 2 == 0) return 1;
        u64 m8 = x.x & 7;
        return (m8 == 1 || m8 == 7) ? 1 : -1;
    }
    if (v == 0) return 1;
    int sym = C.unit_symbol(x);
    if (sym == 0) return 0;
    return v % 2 ? sym : 1;
}

BigInt LocalKloosterman::naive(unsigned v, unsigned r) const {
    unsigned M = modulus_exponent(v, r);
    Completion C = ring(std::max(M, period(v, r)));
    auto c = C.image(c_);
    i64 total = 0;
    for (const auto& mu : C.residues(M)) total += summand(C, mu, c, v, r);
    return BigInt(static_cast<long>(total));
}

i64 LocalKloosterman::periodic_sum(unsigned v, unsigned r, unsigned P) const {
    Completion C = ring(P);
    auto c = C.image(c_);
    auto digits = C.digit_set();
    std::vector<Completion::Elt> level{Completion::Elt{}};
    for (unsigned j = 0; j < P; ++j) {
        auto pj = C.pi_pow(j);
        std::vector<Completion::Elt> next;
        for (const auto& mu : level) {
            for (const auto& d : digits) {
                auto child = C.add(mu, C.mul(pj, d));
                if (j + 1 <= 2 * r && C.val(C.sub(C.sqr(child), c)) < j + 1) continue;
                next.push_back(child);
            }
        }
        level = std::move(next);
    }
    i64 total = 0;
    for (const auto& mu : level) total += summand(C, mu, c, v, r);
    return total;
}

i64 LocalKloosterman::cached_periodic(unsigned parity, unsigned r) const {
    auto key = std::make_pair(parity, r);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    i64 s = periodic_sum(parity, r, period(parity, r));
    cache_[key] = s;
    return s;
}

BigInt LocalKloosterman::fast(unsigned v, unsigned r) const {
    unsigned cls = v == 0 ? 0 : (v % 2 ? 1 : 2);
    unsigned M = modulus_exponent(v, r), P = period(v, r);
    return bpow(q_.norm, M - P) * BigInt(static_cast<long>(cached_periodic(cls, r)));
}

BigInt LocalKloosterman::bruteforce(unsigned v, unsigned r, u64 budget) const {
    unsigned M = modulus_exponent(v, r);
    u128 n = 1;
    bool small = true;
    for (unsigned i = 0; i < M && small; ++i) {
        n *= q_.norm;
        if (n > budget) small = false;
    }
    return small ? naive(v, r) : fast(v, r);
}

BigInt LocalKloosterman::closed(unsigned v, unsigned r) const {
    const u64 q = q_.norm;
    const bool ev = v > 0 && v % 2 == 0, od = v % 2 == 1;
    auto P = [&](long e) { return e < 0 ? BigInt(0) : bpow(q, static_cast<unsigned>(e)); };
    switch (regime_) {
        case Regime::A: {
            BigInt one_s = 1 + sym_;
            if (v == 0) return r == 0 ? BigInt(1) : one_s;
            if (r == 0) return ev ? BigInt(P(v) - P(v - 1) * one_s) : BigInt(-P(v - 1));
            return ev ? BigInt(P(v - 1) * (BigInt(static_cast<unsigned long>(q)) - 1) * one_s) : BigInt(0);
        }
        case Regime::B: {
            unsigned k0 = (k_ - 1) / 2;
            if (v == 0) return r == 0 ? BigInt(1) : (r <= k0 ? P(r) : BigInt(0));
            if (r == 0) return P(v) - P(v - 1);
            return r <= k0 ? BigInt(P(r + v) - P(r + v - 1)) : BigInt(0);
        }
        case Regime::Bp: {
            unsigned k0 = k_ / 2;
            BigInt one_s = 1 + sym_;
            if (v == 0) {
                if (r == 0) return 1;
                return r <= k0 ? P(r) : BigInt(P(k0) * one_s);
            }
            if (r + 1 <= k0) return P(r + v) - P(r + v - 1);
            if (r == k0) return ev ? BigInt(P(k0 + v) - P(k0 + v - 1) * one_s) : BigInt(-P(k0 + v - 1));
            return ev ? BigInt((P(k0 + v) - P(k0 + v - 1)) * one_s) : BigInt(0);
        }
        case Regime::C: {
            unsigned c = cls8_;
            if (v == 0) {
                if (r <= 1) return 4;
                if (r == 2) return (c == 1 || c == 5) ? 8 : 0;
                return c == 1 ? 16 : 0;
            }
            if (r == 0) return ev ? P(v + 1) : BigInt(-P(v + 1));
            if (od) return 0;
            if (r == 1) return (c == 3 || c == 7) ? P(v + 2) : BigInt(0);
            if (r == 2) return c == 5 ? P(v + 3) : BigInt(0);
            return c == 1 ? P(v + 3) : BigInt(0);
        }
        case Regime::D: {
            unsigned k0 = (k_ - 1) / 2;
            if (v == 0) {
                if (r == 0) return 4;
                return r <= k0 ? P(2 + r) : BigInt(0);
            }
            if (r == 0) return P(v + 1);
            return r <= k0 ? P(v + r + 1) : BigInt(0);
        }
        case Regime::E:
            throw UnsupportedRegime("no closed table for q = p above 2 with k even");
    }
    return 0;
}

std::complex<double> LocalKloosterman::dirichlet_closed(std::complex<double> z) const {
    const double q = static_cast<double>(q_.norm);
    auto qp = [&](std::complex<double> e) { return std::exp(-e * std::log(q)); };  // q^(-e)
    auto den = [](std::complex<double> d) {
        if (std::abs(d) < 1e-14) throw PoleError("local Dirichlet factor at a pole");
        return d;
    };
    std::complex<double> base = (1.0 - qp(z + 1.0)) / den(1.0 - qp(2.0 * z));
    std::complex<double> pf = 1.0;
    if (regime_ != Regime::A && regime_ != Regime::C)
        pf = (1.0 - qp(z * static_cast<double>(k_ + 1))) / den(1.0 - qp(z));
    double w = q_.p == 2 ? 4.0 : 1.0;
    return w * base * pf;
}

double LocalKloosterman::tail_bound(double sigma, unsigned v_max, unsigned r_max) const {
    const double q = static_cast<double>(q_.norm);
    double a = std::pow(q, -sigma), b = std::pow(q, -(2 * sigma - 1));
    double w = q_.p == 2 ? 4.0 : 1.0;
    double full = 1.0 / ((1 - a) * (1 - b));
    double part = (1 - std::pow(a, v_max + 1)) * (1 - std::pow(b, r_max + 1)) / ((1 - a) * (1 - b));
    return std::max(0.0, w * (full - part));
}

DirichletEval LocalKloosterman::dirichlet_truncated(std::complex<double> z, unsigned v_max, unsigned r_max) const {
    if (z.real() <= 1.0) throw InvalidInput("local Dirichlet series needs Re z > 1");
    const double lq = std::log(static_cast<double>(q_.norm));
    DirichletEval out;
    out.z = z;
    out.v_max = v_max;
    out.r_max = r_max;
    std::complex<double> total = 0;
    for (unsigned r = 0; r <= r_max; ++r) {
        std::complex<double> rr = -static_cast<double>(r) * (2.0 * z + 1.0);
        total += static_cast<double>(cached_periodic(0, r)) * std::exp(rr * lq);
        double s_odd = 0, s_even = 0;
        if (v_max >= 1) s_odd = static_cast<double>(cached_periodic(1, r));
        if (v_max >= 2) s_even = static_cast<double>(cached_periodic(2, r));
        for (unsigned v = 1; v <= v_max; ++v) {
            double S = v % 2 ? s_odd : s_even;
            if (S == 0) continue;
            std::complex<double> e = static_cast<double>(v - 1) - static_cast<double>(v) * (z + 1.0) + rr;
            total += S * std::exp(e * lq);
        }
    }
    out.value = total;
    out.tail_bound = tail_bound(z.real(), v_max, r_max);
    try {
        out.reference = dirichlet_closed(z);
    } catch (const PoleError&) {
    }
    return out;
}

DirichletEval LocalKloosterman::dirichlet(std::complex<double> z, double tol) const {
    const double sigma = z.real();
    if (sigma <= 1.0) throw InvalidInput("local Dirichlet series needs Re z > 1");
    const double q = static_cast<double>(q_.norm);
    double a = std::pow(q, -sigma), b = std::pow(q, -(2 * sigma - 1));
    double w = q_.p == 2 ? 4.0 : 1.0;
    double scale = w / ((1 - a) * (1 - b));
    unsigned V = 0, R = 0;
    while (scale * std::pow(a, V + 1) > tol / 2 && V < 4000) ++V;
    while (scale * std::pow(b, R + 1) > tol / 2 && R < 4000) ++R;
    // the period for depth R must fit the word-size local ring
    while (R > 0) {
        unsigned P = period(1, R);
        unsigned d = q_.type == SplitType::Ramified ? (P + 1) / 2 + 1 : P;
        if (fits_digits(q_.p, d)) break;
        --R;
    }
    return dirichlet_truncated(z, V, R);
}

BigInt global_sum_bruteforce(const EllipticDatum& dat, const Ideal& a, const Ideal& d, u64 budget) {
    const Field& K = dat.K;
    AlgInt c = dat.four_u_eps();
    Ideal mod = K.multiply(K.multiply(K.principal(AlgInt(4)), a), K.multiply(d, d));
    if (mod.norm() > BigInt(static_cast<unsigned long>(budget))) throw ResourceError("global sum: modulus exceeds budget");
    Ideal d2 = K.multiply(d, d);
    struct TwoAdic {
        PrimeIdeal q;
        unsigned t;
        Completion C;
    };
    std::vector<TwoAdic> twos;
    for (const auto& q : K.primes_above(2)) {
        if (q.type != SplitType::Split) throw UnsupportedPrime("global sum with 2 not split");
        unsigned t = d.valuation(q);
        twos.push_back({q, t, Completion(K, q, 2 * t + 3)});
    }
    i64 total = 0;
    for (const auto& mu : K.residues(mod, budget)) {
        AlgInt al = K.sub(K.mul(mu, mu), c);
        if (!K.contains(d2, al)) continue;
        bool ok = true;
        for (const auto& tw : twos) {
            auto x = tw.C.div_pi(tw.C.image(al), 2 * tw.t);
            if (tw.C.mod4(x) > 1) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        if (al.is_zero()) {
            total += a.is_unit() ? 1 : 0;
            continue;
        }
        total += modified_hilbert(K, al, d, a);
    }
    return BigInt(static_cast<long>(total));
}

BigInt global_sum_local_product(const EllipticDatum& dat, const Ideal& a, const Ideal& d) {
    const Field& K = dat.K;
    AlgInt c = dat.four_u_eps();
    std::vector<PrimeIdeal> qs = K.primes_above(2);
    for (const auto& f : {a.factors, d.factors})
        for (const auto& [q, e] : f)
            if (std::find(qs.begin(), qs.end(), q) == qs.end()) qs.push_back(q);
    BigInt r = 1;
    for (const auto& q : qs) r *= LocalKloosterman(K, q, c).bruteforce(a.valuation(q), d.valuation(q));
    return r;
}

std::complex<double> global_dirichlet_closed(const Field& K, u64 pnorm, unsigned k, std::complex<double> z) {
    double four_n = K.is_rational() ? 4.0 : 16.0;
    std::complex<double> zk = zeta_K(K, 2.0 * z) / zeta_K(K, z + 1.0);
    double lp = std::log(static_cast<double>(pnorm));
    std::complex<double> den = 1.0 - std::exp(-z * lp);
    if (std::abs(den) < 1e-14) throw PoleError("closed form at z = 0");
    return four_n * zk * (1.0 - std::exp(-z * static_cast<double>(k + 1) * lp)) / den;
}

std::complex<double> global_dirichlet_closed(const EllipticDatum& dat, std::complex<double> z) {
    return global_dirichlet_closed(dat.K, dat.p.norm, dat.k, z);
}

DirichletEval global_dirichlet(const EllipticDatum& dat, std::complex<double> z, u64 norm_bound, double local_tol) {
    if (z.real() <= 1.0) throw InvalidInput("global Dirichlet series needs Re z > 1");
    const Field& K = dat.K;
    AlgInt c = dat.four_u_eps();
    std::complex<double> logp = 0;
    double tails = 0;
    unsigned vmax = 0, rmax = 0;
    for (u64 p : primes_up_to(norm_bound)) {
        for (const auto& q : K.primes_above(p)) {
            if (q.norm > norm_bound) continue;
            LocalKloosterman L(K, q, c);
            auto e = L.dirichlet(z, local_tol);
            logp += std::log(e.value);
            tails += e.tail_bound / std::max(1e-300, std::abs(e.value) - e.tail_bound);
            vmax = std::max(vmax, e.v_max);
            rmax = std::max(rmax, e.r_max);
        }
    }
    DirichletEval out;
    out.z = z;
    out.value = std::exp(logp);
    out.v_max = vmax;
    out.r_max = rmax;
    // |D_q - 1| <= 2 q^-(sigma+1) + 2 q^-2sigma for q beyond the bound; count n ideals per norm
    const double s = z.real(), B = static_cast<double>(norm_bound);
    double euler_tail = K.degree() * (2.0 * std::pow(B, -s) / s + 2.0 * std::pow(B, 1 - 2 * s) / (2 * s - 1));
    out.tail_bound = std::abs(out.value) * (std::exp(tails + 1.1 * euler_tail) - 1.0);
    out.reference = global_dirichlet_closed(dat, z);
    return out;
}

DirichletEval global_dirichlet_direct(const EllipticDatum& dat, std::complex<double> z, u64 norm_bound) {
    if (z.real() <= 1.0) throw InvalidInput("global Dirichlet series needs Re z > 1");
    const Field& K = dat.K;
    AlgInt c = dat.four_u_eps();
    auto ideals = K.enumerate_by_norm(norm_bound);
    std::map<PrimeIdeal, LocalKloosterman> locals;
    std::map<std::tuple<u64, unsigned, unsigned, unsigned>, double> cache;
    auto local = [&](const PrimeIdeal& q, unsigned v, unsigned r) {
        auto key = std::make_tuple(q.p, q.index, v, r);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        auto lt = locals.find(q);
        if (lt == locals.end()) lt = locals.emplace(q, LocalKloosterman(K, q, c)).first;
        double val = lt->second.bruteforce(v, r).get_d();
        cache[key] = val;
        return val;
    };
    auto twos = K.primes_above(2);
    std::complex<double> total = 0;
    for (const auto& d : ideals) {
        BigInt nd2 = d.norm() * d.norm();
        if (nd2 > BigInt(static_cast<unsigned long>(norm_bound))) break;
        for (const auto& a : ideals) {
            if (a.norm() * nd2 > BigInt(static_cast<unsigned long>(norm_bound))) break;
            double Kad = 1;
            for (const auto& q : twos) Kad *= local(q, a.valuation(q), d.valuation(q));
            std::vector<PrimeIdeal> odd;
            for (const auto& [q, e] : a.factors)
                if (q.p != 2) odd.push_back(q);
            for (const auto& [q, e] : d.factors)
                if (q.p != 2 && a.valuation(q) == 0) odd.push_back(q);
            for (const auto& q : odd) {
                Kad *= local(q, a.valuation(q), d.valuation(q));
                if (Kad == 0) break;
            }
            if (Kad == 0) continue;
            total += Kad * std::exp(-(z + 1.0) * std::log(a.norm().get_d()) - (2.0 * z + 1.0) * std::log(d.norm().get_d()));
        }
    }
    DirichletEval out;
    out.z = z;
    out.value = total;
    const double s = z.real(), B = static_cast<double>(norm_bound);
    const double four_n = K.is_rational() ? 4.0 : 16.0;
    double lb = std::log(B);
    out.tail_bound = four_n * std::pow(B, 1 - s) / (s - 1) * std::pow(1 + lb, K.degree()) * (1 + 0.5 * lb);
    out.reference = global_dirichlet_closed(dat, z);
    return out;
}

ResidueReport residue_at_half(const Field& K, u64 pnorm, unsigned k) {
    ResidueReport rep;
    const double h = 1e-4;
    double up = (h * global_dirichlet_closed(K, pnorm, k, 0.5 + h)).real();
    double dn = (-h * global_dirichlet_closed(K, pnorm, k, 0.5 - h)).real();
    rep.numeric = 0.5 * (up + dn);
    rep.kappa = zeta_K_residue(K);
    double four_n = K.is_rational() ? 4.0 : 16.0;
    double pf = (1 - std::pow(static_cast<double>(pnorm), -(static_cast<double>(k) + 1.0) / 2.0)) / (1 - std::pow(static_cast<double>(pnorm), -0.5));
    double z32 = zeta_K(K, 1.5).real();
    rep.stated = four_n * rep.kappa / z32 * pf;
    rep.corrected = four_n * (rep.kappa / 2) / z32 * pf;
    return rep;
}

ResidueReport residue_at_half(const EllipticDatum& dat) { return residue_at_half(dat.K, dat.p.norm, dat.k); }

}  // namespace nt
