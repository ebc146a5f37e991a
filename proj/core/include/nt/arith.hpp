#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace nt {

using BigInt = mpz_class;
using Rational = mpq_class;
using i64 = std::int64_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Kronecker symbol with the usual extension to n <= 0 and n even.
int kronecker(const BigInt& a, const BigInt& n);
// Word-size variant, written independently of the GMP one.
int kronecker(i64 a, i64 n);

struct PrimePower {
    BigInt p;
    unsigned e;
    bool operator==(const PrimePower&) const = default;
};

using Factorization = std::vector<PrimePower>;

struct FactorBudget {
    u64 trial_limit = 1000000;
    u64 rho_iterations = 2000000;  // per split attempt
    u64 seed = 0x9e3779b97f4a7c15ULL;
};

Factorization factorize(const BigInt& n, const FactorBudget& budget = {});
BigInt expand(const Factorization& f);

// largest e with p^e | n; throws InvalidInput for n = 0
unsigned valuation(const BigInt& n, const BigInt& p);
unsigned valuation(i64 n, i64 p);

bool is_prime(const BigInt& n);
bool is_prime_u64(u64 n);
bool is_squarefree(const BigInt& n);
bool is_perfect_square(const BigInt& n);
BigInt isqrt(const BigInt& n);

std::vector<u64> primes_up_to(u64 n);

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }
u64 powmod(u64 b, u64 e, u64 m);
u64 invmod(u64 a, u64 m);  // m arbitrary, gcd(a, m) = 1
i64 floor_mod(i64 a, i64 m);
// square root of a quadratic residue modulo an odd prime (Tonelli-Shanks)
u64 sqrt_mod_prime(u64 a, u64 p);
u64 ipow(u64 b, unsigned e);  // throws ResourceError on overflow
// reduce a BigInt into [0, m)
u64 mod_u64(const BigInt& a, u64 m);

}  // namespace nt
