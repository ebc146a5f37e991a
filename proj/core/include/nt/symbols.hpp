#pragma once

#include "nt/elliptic.hpp"
#include "nt/field.hpp"

#include <vector>

namespace nt {

enum class Uniformizer { Standard, Alternative };

// (a, pi_q)_H on local units, 0 otherwise
int restricted_hilbert(const Field& K, const AlgInt& a, const PrimeIdeal& q);

// prod_{q | lower} (a * pi_q^(-2 val_q(upper)))_rH ^ val_q(lower)
// Alternative uses pi' = pi * w with w a non-square unit (odd primes only).
int modified_hilbert(const Field& K, const AlgInt& a, const Ideal& upper, const Ideal& lower,
                     Uniformizer uni = Uniformizer::Standard);

// split/inert/ramified behaviour of K(sqrt(delta))/K at q
int chi_gamma(const Field& K, const AlgInt& delta, const PrimeIdeal& q);
int chi_gamma(const EllipticDatum& d, const PrimeIdeal& q);
// multiplicative extension to ideals
int chi_gamma(const Field& K, const AlgInt& delta, const Ideal& a);

// chi_gamma(a) if a is coprime to S/d, else 0. Throws InvalidDivisor if d does not divide S.
int chi_d(const Field& K, const AlgInt& delta, const Ideal& d, const Ideal& a);
int chi_d(const EllipticDatum& dat, const Ideal& d, const Ideal& a);

// entry v is 1 iff delta is negative at the v-th real place
std::vector<int> ramification_vector(const Field& K, const AlgInt& delta);
std::vector<int> ramification_vector(const EllipticDatum& d);

}  // namespace nt
