#pragma once

#include "nt/field.hpp"

#include <complex>
#include <vector>

namespace nt {

// (tau, u) with fixed (p, k, rho); eps = rho^(k/h), determinant u*eps
struct EllipticDatum {
    Field K = Field::rationals();
    PrimeIdeal p;
    unsigned k = 0;
    unsigned h = 1;
    AlgInt rho{1};
    AlgInt eps{1};
    AlgInt u{1};
    AlgInt tau{0};

    // validates (rho) = p^h, h | k, u a unit
    static EllipticDatum make(const Field& K, const PrimeIdeal& p, unsigned h, const AlgInt& rho, unsigned k,
                              const AlgInt& u, const AlgInt& tau);
    // over Q: rho = p, h = 1
    static EllipticDatum rational(i64 tau, i64 u, u64 p, unsigned k);

    AlgInt four_u_eps() const;
    AlgInt delta() const;
};

struct DiscriminantData {
    AlgInt delta;
    Ideal S;
    Ideal Delta;
};

AlgInt delta(const EllipticDatum& d);
bool is_regular_elliptic(const EllipticDatum& d);

// S_gamma and the relative discriminant of K(sqrt(delta))/K; delta must be a nonzero non-square
DiscriminantData s_gamma(const Field& K, const AlgInt& delta);
DiscriminantData s_gamma(const EllipticDatum& d);

// d | S_gamma, decided from d^2 | delta and the 2-adic congruence, without computing S_gamma
bool divides_s_gamma(const Field& K, const AlgInt& delta, const Ideal& d);
bool divides_s_gamma(const EllipticDatum& dat, const Ideal& d);

// exact local orbital factor at q, n = val_q(S_gamma)
Rational local_orbital(SplitType type, u64 q, unsigned n);
Rational local_orbital(const Field& K, const AlgInt& delta, const PrimeIdeal& q);

// rational part of the finite orbital integral; the full value is p^(-k/2) times this
struct OrbitalValue {
    Rational rational_part;
    u64 p = 1;
    Rational p_exponent{0};  // carried symbolically
};
Rational finite_orbital_divisor_sum(const Field& K, const AlgInt& delta);
Rational finite_orbital_product(const Field& K, const AlgInt& delta);
OrbitalValue finite_orbital(const EllipticDatum& d);

// O(z, gamma) = N(S)^z sum_{d | S} N(d)^(1-2z) prod_{q | S/d} (1 - chi(q) N(q)^(-z))
std::complex<double> orbital_z(const Field& K, const AlgInt& delta, std::complex<double> z);
// same value by multiplying local factors, used as an independent oracle
std::complex<double> orbital_z_local(const Field& K, const AlgInt& delta, std::complex<double> z);
// exact value at integer z >= 1
Rational orbital_z_exact(const Field& K, const AlgInt& delta, int z);

}  // namespace nt
