#include "nt/symbols.hpp"

#include "nt/errors.hpp"
#include "nt/local.hpp"

namespace nt {

namespace {

u64 smallest_nonresidue(u64 p) {
    for (u64 w = 2; w < p; ++w)
        if (powmod(w, (p - 1) / 2, p) == p - 1) return w;
    throw InvalidInput("no non-residue");
}

// symbol of a * pi^(-2t) at q, where val_q(a) = 2t
int unit_part_symbol(const Field& K, const AlgInt& a, const PrimeIdeal& q, unsigned t, Uniformizer uni) {
    bool alt = uni == Uniformizer::Alternative && q.p != 2 && t > 0;
    if (K.is_rational()) {
        BigInt pt;
        BigInt p = static_cast<unsigned long>(q.p);
        mpz_pow_ui(pt.get_mpz_t(), p.get_mpz_t(), 2 * t);
        BigInt x = a.x / pt;
        if (q.p == 2) {
            u64 r = mod_u64(x, 8);
            return (r == 1 || r == 7) ? 1 : -1;
        }
        u64 r = mod_u64(x, q.p);
        if (alt) r = mulmod(r, powmod(smallest_nonresidue(q.p), 2 * t, q.p), q.p);
        return kronecker(BigInt(static_cast<unsigned long>(r)), p);
    }
    unsigned digits = q.p == 2 ? 2 * t + 3 : (q.type == SplitType::Ramified ? t + 2 : 2 * t + 1);
    Completion C(K, q, digits);
    auto v = C.div_pi(C.image(a), 2 * t);
    if (alt) {
        Completion::Elt w{};
        for (const auto& d : C.digit_set()) {
            if (C.val(d) == 0 && C.unit_symbol(d) == -1) {
                w = d;
                break;
            }
        }
        Completion::Elt w2{1, 0};
        for (unsigned i = 0; i < 2 * t; ++i) w2 = C.mul(w2, w);
        v = C.mul(v, w2);
    }
    return C.unit_symbol(v);
}

int local_symbol(const Field& K, const AlgInt& a, const PrimeIdeal& q, unsigned t, Uniformizer uni) {
    if (a.is_zero()) return 0;
    unsigned w = K.valuation(a, q);
    if (w != 2 * t) return 0;
    return unit_part_symbol(K, a, q, t, uni);
}

int ipow_sign(int s, unsigned e) {
    if (e == 0) return 1;
    if (s == 0) return 0;
    return (s == -1 && (e & 1)) ? -1 : 1;
}

}  // namespace

int restricted_hilbert(const Field& K, const AlgInt& a, const PrimeIdeal& q) {
    if (q.p == 2 && q.type != SplitType::Split) throw UnsupportedPrime("restricted Hilbert symbol at non-split prime above 2");
    return local_symbol(K, a, q, 0, Uniformizer::Standard);
}

int modified_hilbert(const Field& K, const AlgInt& a, const Ideal& upper, const Ideal& lower, Uniformizer uni) {
    if (a.is_zero()) throw InvalidInput("modified_hilbert: alpha must be nonzero");
    int r = 1;
    for (const auto& [q, e] : lower.factors) {
        if (q.p == 2 && q.type != SplitType::Split) throw UnsupportedPrime("modified Hilbert symbol at non-split prime above 2");
        r *= ipow_sign(local_symbol(K, a, q, upper.valuation(q), uni), e);
        if (r == 0) return 0;
    }
    return r;
}

int chi_gamma(const Field& K, const AlgInt& delta, const PrimeIdeal& q) {
    auto D = s_gamma(K, delta);
    if (q.p == 2 && q.type != SplitType::Split) throw UnsupportedPrime("chi_gamma at non-split prime above 2");
    return local_symbol(K, delta, q, D.S.valuation(q), Uniformizer::Standard);
}

int chi_gamma(const EllipticDatum& d, const PrimeIdeal& q) { return chi_gamma(d.K, d.delta(), q); }

int chi_gamma(const Field& K, const AlgInt& delta, const Ideal& a) {
    auto D = s_gamma(K, delta);
    int r = 1;
    for (const auto& [q, e] : a.factors) {
        r *= ipow_sign(local_symbol(K, delta, q, D.S.valuation(q), Uniformizer::Standard), e);
        if (r == 0) return 0;
    }
    return r;
}

int chi_d(const Field& K, const AlgInt& delta, const Ideal& d, const Ideal& a) {
    auto D = s_gamma(K, delta);
    if (!K.divides(d, D.S)) throw InvalidDivisor("chi_d: d does not divide S_gamma");
    Ideal rest = K.quotient(D.S, d);
    if (!K.coprime(a, rest)) return 0;
    int r = 1;
    for (const auto& [q, e] : a.factors) {
        r *= ipow_sign(local_symbol(K, delta, q, D.S.valuation(q), Uniformizer::Standard), e);
        if (r == 0) return 0;
    }
    return r;
}

int chi_d(const EllipticDatum& dat, const Ideal& d, const Ideal& a) { return chi_d(dat.K, dat.delta(), d, a); }

std::vector<int> ramification_vector(const Field& K, const AlgInt& delta) {
    std::vector<int> v;
    for (int i = 0; i < K.degree(); ++i) v.push_back(K.sign_at(delta, i) > 0 ? 0 : 1);
    return v;
}

std::vector<int> ramification_vector(const EllipticDatum& d) { return ramification_vector(d.K, d.delta()); }

}  // namespace nt
