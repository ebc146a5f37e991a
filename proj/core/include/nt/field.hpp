#pragma once

#include "nt/arith.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nt {

// x + y*omega in the integral basis (1, omega); y = 0 over Q
struct AlgInt {
    BigInt x = 0;
    BigInt y = 0;

    AlgInt() = default;
    AlgInt(long v) : x(v), y(0) {}
    AlgInt(BigInt a, BigInt b = 0) : x(std::move(a)), y(std::move(b)) {}
    bool operator==(const AlgInt&) const = default;
    bool is_zero() const { return x == 0 && y == 0; }
};

enum class SplitType { Split, Inert, Ramified };

const char* to_string(SplitType t);

// (p, omega - root) for split/ramified, (p) for inert; over Q always (p), type Split. root = -1 when unused.
struct PrimeIdeal {
    u64 p = 0;
    SplitType type = SplitType::Split;
    unsigned e = 1;
    unsigned f = 1;
    u64 norm = 0;
    i64 root = 0;
    unsigned index = 0;  // position among the primes above p, smaller root first

    bool operator==(const PrimeIdeal& o) const { return p == o.p && index == o.index; }
    bool operator<(const PrimeIdeal& o) const { return p != o.p ? p < o.p : index < o.index; }
    bool above_two() const { return p == 2; }
    std::string str() const;
};

using IdealFactors = std::vector<std::pair<PrimeIdeal, unsigned>>;

// Z-lattice Z*a + Z*(b + c*omega), c | a, c | b, 0 <= b < a. Over Q: (a), b = 0, c = 1.
struct Ideal {
    BigInt a = 1, b = 0, c = 1;
    IdealFactors factors;  // sorted by prime

    BigInt norm() const { return a * c; }
    bool is_unit() const { return factors.empty(); }
    bool operator==(const Ideal& o) const { return a == o.a && b == o.b && c == o.c; }
    unsigned valuation(const PrimeIdeal& q) const;
    std::string str() const;
};

struct UnitSystem {
    AlgInt torsion{-1};
    std::optional<AlgInt> beta;  // absent over Q
    bool totally_positive = true;
};

class Field {
public:
    static Field rationals();
    static Field real_quadratic(i64 m);

    bool is_rational() const { return degree_ == 1; }
    int degree() const { return degree_; }
    i64 m() const { return m_; }
    i64 disc() const { return disc_; }
    // omega^2 = T*omega - N
    i64 trace_omega() const { return T_; }
    i64 norm_omega() const { return N_; }

    AlgInt add(const AlgInt& a, const AlgInt& b) const { return {a.x + b.x, a.y + b.y}; }
    AlgInt sub(const AlgInt& a, const AlgInt& b) const { return {a.x - b.x, a.y - b.y}; }
    AlgInt neg(const AlgInt& a) const { return {-a.x, -a.y}; }
    AlgInt mul(const AlgInt& a, const AlgInt& b) const;
    AlgInt pow(AlgInt a, unsigned e) const;
    AlgInt conj(const AlgInt& a) const;
    AlgInt scale(const AlgInt& a, const BigInt& k) const { return {a.x * k, a.y * k}; }
    BigInt norm(const AlgInt& a) const;
    BigInt trace(const AlgInt& a) const;
    bool is_unit(const AlgInt& a) const;
    // exact division by a rational integer; nullopt if not integral
    std::optional<AlgInt> div_int(const AlgInt& a, const BigInt& k) const;

    long double embed(const AlgInt& a, int place) const;
    int sign_at(const AlgInt& a, int place) const;
    bool is_square(const AlgInt& a) const;

    std::vector<PrimeIdeal> primes_above(u64 p) const;
    UnitSystem fundamental_unit() const;

    unsigned valuation(const AlgInt& a, const PrimeIdeal& q) const;

    Ideal unit_ideal() const;
    Ideal ideal(const PrimeIdeal& q) const;
    Ideal principal(const AlgInt& a) const;
    Ideal from_hnf(BigInt a, BigInt b, BigInt c) const;
    Ideal from_factors(IdealFactors f) const;
    Ideal multiply(const Ideal& I, const Ideal& J) const;
    Ideal pow(const Ideal& I, unsigned e) const;
    Ideal quotient(const Ideal& I, const Ideal& J) const;  // I / J, requires J | I
    bool divides(const Ideal& d, const Ideal& n) const;
    bool coprime(const Ideal& I, const Ideal& J) const;
    bool contains(const Ideal& I, const AlgInt& a) const;
    AlgInt reduce(const AlgInt& a, const Ideal& I) const;
    std::vector<AlgInt> residues(const Ideal& I, u64 budget = 50000000) const;
    std::vector<Ideal> divisors(const Ideal& I) const;
    std::vector<Ideal> enumerate_by_norm(u64 bound, u64 max_bound = 10000000) const;

    bool validate_hyp_div(const PrimeIdeal& p, unsigned h, const AlgInt& rho, unsigned k) const;

    std::string format(const AlgInt& a) const;
    std::string name() const;

private:
    Field() = default;
    IdealFactors factor_hnf(const BigInt& a, const BigInt& b, const BigInt& c) const;
    void hnf_of(std::vector<std::pair<BigInt, BigInt>> gens, BigInt& a, BigInt& b, BigInt& c) const;

    int degree_ = 1;
    i64 m_ = 1;
    i64 disc_ = 1;
    i64 T_ = 0;
    i64 N_ = 0;
};

// sorted merge of exponent vectors
IdealFactors merge_factors(const IdealFactors& a, const IdealFactors& b, int sign = 1);

}  // namespace nt
