#pragma once

#include "nt/field.hpp"

#include <vector>

namespace nt {

// O_q / p^N for a prime q of K. Elements are x + y*theta, theta^2 = c1*theta + c0.
//   split / Q:    residue ring is Z/p^N, y = 0, uniformizer p
//   inert:        theta = omega, uniformizer p
//   ramified odd: theta = omega - root (Eisenstein), uniformizer theta
// Non-split primes above 2 are rejected.
class Completion {
public:
    struct Elt {
        u64 x = 0, y = 0;
        bool operator==(const Elt&) const = default;
    };

    Completion(const Field& K, const PrimeIdeal& q, unsigned digits);

    const PrimeIdeal& prime() const { return q_; }
    u64 p() const { return q_.p; }
    u64 norm() const { return q_.norm; }
    unsigned digits() const { return N_; }
    u64 modulus() const { return mod_; }
    bool is_z() const { return kind_ == Kind::Z; }
    bool is_ramified() const { return kind_ == Kind::Ramified; }
    // valuation reported for zero
    unsigned cap() const { return kind_ == Kind::Ramified ? 2 * N_ : N_; }

    Elt image(const AlgInt& a) const;
    Elt from_int(i64 v) const;
    Elt add(const Elt& a, const Elt& b) const;
    Elt sub(const Elt& a, const Elt& b) const;
    Elt neg(const Elt& a) const;
    Elt mul(const Elt& a, const Elt& b) const;
    Elt sqr(const Elt& a) const { return mul(a, a); }
    Elt scale(const Elt& a, u64 k) const;

    unsigned val(const Elt& a) const;
    bool is_zero(const Elt& a) const { return a.x == 0 && a.y == 0; }
    Elt uniformizer() const;
    Elt pi_pow(unsigned j) const;
    // a / pi^j, requires val(a) >= j; precision drops accordingly
    Elt div_pi(Elt a, unsigned j) const;

    // Hilbert symbol (a, pi)_H of a local unit, 0 if a is not a unit.
    // Odd q: quadratic residue symbol of the residue class. Split q | 2: +1 iff a = +-1 mod 8.
    int unit_symbol(const Elt& a) const;
    // residue class of a unit modulo p (Z kind only) or 2^j for q | 2
    u64 low_bits(const Elt& a, unsigned j) const { return a.x & ((u64(1) << j) - 1); }

    // x mod 4 of an element of Z_2 (q | 2 only)
    u64 mod4(const Elt& a) const { return a.x & 3; }

    // O / q^M representatives, canonical order
    std::vector<Elt> residues(unsigned M) const;
    // digits of the residue field, for building q-adic expansions
    std::vector<Elt> digit_set() const;
    u64 residue_count(unsigned M) const;

    // Hensel lift of the chosen root of x^2 - T x + N modulo p^N (Z kind)
    u64 root_lift() const { return root_; }

private:
    enum class Kind { Z, Inert, Ramified };
    u64 reduce(__int128 v) const;

    PrimeIdeal q_;
    Kind kind_ = Kind::Z;
    unsigned N_ = 0;
    u64 mod_ = 1;
    u64 c1_ = 0, c0_ = 0;  // theta^2 = c1 theta + c0
    u64 root_ = 0;          // omega -> root_ (Z) or omega = theta + root_ (Ramified)
    i64 T_ = 0, Nw_ = 0;
    u64 c0_unit_inv_ = 0;   // (c0 / p)^{-1} mod p^N for division by theta
};

}  // namespace nt
