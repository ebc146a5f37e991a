#pragma once

#include "nt/elliptic.hpp"
#include "nt/field.hpp"
#include "nt/local.hpp"

#include <complex>
#include <map>
#include <optional>
#include <string>

namespace nt {

// A: q odd, q not | rho. B / Bp: q = p odd, k odd / even. C: q | 2, q not | rho.
// D: q = p | 2, k odd. E: q = p | 2, k even (no closed table for the sums).
enum class Regime { A, B, Bp, C, D, E };
const char* to_string(Regime r);

struct DirichletEval {
    std::complex<double> z;
    std::complex<double> value;
    double tail_bound = 0;
    unsigned v_max = 0, r_max = 0;
    std::optional<std::complex<double>> reference;
};

// K~_{q^v, q^r}(u) for the local constant c = 4 u eps at q
class LocalKloosterman {
public:
    LocalKloosterman(const Field& K, const PrimeIdeal& q, const AlgInt& c);

    Regime regime() const { return regime_; }
    const PrimeIdeal& prime() const { return q_; }
    unsigned k() const { return k_; }
    u64 norm() const { return q_.norm; }
    // symbol entering the closed tables: (u eps / q) for A, (4 u w / q) for Bp
    int unit_symbol() const { return sym_; }
    // c(u rho^k') mod 8 (q | 2, q not | rho)
    unsigned unit_class8() const { return cls8_; }

    // modulus exponent of the defining sum
    unsigned modulus_exponent(unsigned v, unsigned r) const;
    // literal enumeration over O / q^M
    BigInt naive(unsigned v, unsigned r) const;
    // q^(M-P) * S(P) with the summand's period P and pruning of non-solutions
    BigInt fast(unsigned v, unsigned r) const;
    // naive when q^M <= budget, fast otherwise
    BigInt bruteforce(unsigned v, unsigned r, u64 budget = 2000000) const;
    BigInt closed(unsigned v, unsigned r) const;

    std::complex<double> dirichlet_closed(std::complex<double> z) const;
    DirichletEval dirichlet_truncated(std::complex<double> z, unsigned v_max, unsigned r_max) const;
    // truncation depth chosen so that the tail bound is below tol
    DirichletEval dirichlet(std::complex<double> z, double tol) const;
    double tail_bound(double sigma, unsigned v_max, unsigned r_max) const;

private:
    // S(P) over O / q^P; v only through its parity class (0, odd, even > 0)
    i64 periodic_sum(unsigned v, unsigned r, unsigned P) const;
    unsigned period(unsigned v, unsigned r) const;
    Completion ring(unsigned level) const;
    int summand(const Completion& C, const Completion::Elt& mu, const Completion::Elt& c, unsigned v, unsigned r) const;
    i64 cached_periodic(unsigned parity, unsigned r) const;

    Field K_;
    PrimeIdeal q_;
    AlgInt c_;
    Regime regime_ = Regime::A;
    unsigned k_ = 0;
    int sym_ = 0;
    unsigned cls8_ = 0;
    mutable std::map<std::pair<unsigned, unsigned>, i64> cache_;
};

// sum over mu mod 4 a d^2 with the congruence conditions of the modified symbol (mu^2 - 4 u eps, d, a)
BigInt global_sum_bruteforce(const EllipticDatum& dat, const Ideal& a, const Ideal& d, u64 budget = 2000000);
// product of the local brute-force sums over the primes dividing 2ad
BigInt global_sum_local_product(const EllipticDatum& dat, const Ideal& a, const Ideal& d);

// closed form 4^n zeta_K(2z) / zeta_K(z+1) * (1 - p^(-z(k+1))) / (1 - p^(-z))
std::complex<double> global_dirichlet_closed(const Field& K, u64 pnorm, unsigned k, std::complex<double> z);
std::complex<double> global_dirichlet_closed(const EllipticDatum& dat, std::complex<double> z);

// Euler product of brute-force local series over prime ideals of norm <= norm_bound
DirichletEval global_dirichlet(const EllipticDatum& dat, std::complex<double> z, u64 norm_bound, double local_tol = 1e-15);
// literal double ideal sum over N(a) N(d)^2 <= norm_bound, K_{a,d} from cached local sums
DirichletEval global_dirichlet_direct(const EllipticDatum& dat, std::complex<double> z, u64 norm_bound);

struct ResidueReport {
    double numeric = 0;    // symmetric limit of (z - 1/2) D(z)
    double stated = 0;     // 4^n kappa / zeta_K(3/2) * (1 - p^(-(k+1)/2)) / (1 - p^(-1/2))
    double corrected = 0;  // the same with kappa / 2, the residue of zeta_K(2z) at z = 1/2
    double kappa = 0;
};
ResidueReport residue_at_half(const Field& K, u64 pnorm, unsigned k);
ResidueReport residue_at_half(const EllipticDatum& dat);

}  // namespace nt
