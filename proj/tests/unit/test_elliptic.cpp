#include "nt/elliptic.hpp"
#include "nt/errors.hpp"
#include "nt/symbols.hpp"

#include <doctest.h>

#include <random>

using namespace nt;

namespace {
const Field Q = Field::rationals();
Ideal zi(long n) { return Q.principal(AlgInt(n)); }
}  // namespace

TEST_CASE("delta and regularity") {
    CHECK(EllipticDatum::rational(7, 1, 5, 1).delta() == AlgInt(29));
    CHECK(EllipticDatum::rational(7, 1, 5, 0).delta() == AlgInt(45));
    auto deg = EllipticDatum::rational(2, 1, 3, 0);
    CHECK(deg.delta() == AlgInt(0));
    CHECK_FALSE(is_regular_elliptic(deg));
    CHECK(is_regular_elliptic(EllipticDatum::rational(7, 1, 5, 0)));
    // 9 - 8 = 1
    CHECK_FALSE(is_regular_elliptic(EllipticDatum::rational(3, 1, 2, 1)));

    auto K = Field::real_quadratic(33);
    CHECK(K.is_square(AlgInt(33)));
    CHECK_THROWS_AS(s_gamma(K, AlgInt(33)), SquareDiscriminant);
    CHECK_THROWS_AS(s_gamma(Q, AlgInt(0)), InvalidInput);
}

TEST_CASE("datum validation") {
    auto K = Field::real_quadratic(33);
    auto P2 = K.primes_above(2);
    CHECK_NOTHROW(EllipticDatum::make(K, P2[0], 1, AlgInt(2, 1), 2, AlgInt(1), AlgInt(0)));
    CHECK_THROWS_AS(EllipticDatum::make(K, P2[0], 1, AlgInt(3), 2, AlgInt(1), AlgInt(0)), InvalidInput);
    CHECK_THROWS_AS(EllipticDatum::make(K, P2[0], 1, AlgInt(2, 1), 2, AlgInt(2), AlgInt(0)), InvalidInput);
    auto d = EllipticDatum::make(K, P2[0], 1, AlgInt(2, 1), 2, AlgInt(1), AlgInt(0));
    CHECK(d.eps == K.mul(AlgInt(2, 1), AlgInt(2, 1)));
}

TEST_CASE("s_gamma") {
    auto s45 = s_gamma(Q, AlgInt(45));
    CHECK(s45.S == zi(3));
    CHECK(s45.Delta == zi(5));
    auto s48 = s_gamma(Q, AlgInt(48));
    CHECK(s48.S == zi(2));
    CHECK(s48.Delta == zi(12));
    CHECK(s_gamma(Q, AlgInt(29)).S == zi(1));
    CHECK(s_gamma(Q, AlgInt(-4)).S == zi(1));
    CHECK(s_gamma(Q, AlgInt(-16)).S == zi(2));
    CHECK(s_gamma(Q, AlgInt(-3 * 64)).S == zi(8));
    CHECK(s_gamma(Q, AlgInt(-4 * 16)).S == zi(4));
}

TEST_CASE("S^2 Delta = (delta)") {
    std::mt19937_64 rng(1);
    int n = 0;
    while (n < 1000) {
        long d = static_cast<long>(rng() % 200001) - 100000;
        if (d == 0 || floor_mod(d, 4) > 1 || is_perfect_square(BigInt(d))) continue;
        auto s = s_gamma(Q, AlgInt(d));
        REQUIRE(Q.multiply(Q.multiply(s.S, s.S), s.Delta) == zi(d));
        ++n;
    }
    auto K = Field::real_quadratic(33);
    AlgInt eps = K.mul(AlgInt(2, 1), AlgInt(2, 1));
    n = 0;
    while (n < 1000) {
        AlgInt tau(static_cast<long>(rng() % 81) - 40, static_cast<long>(rng() % 81) - 40);
        AlgInt u = (rng() & 1) ? AlgInt(1) : AlgInt(19, 8);
        AlgInt d = K.sub(K.mul(tau, tau), K.scale(K.mul(u, eps), 4));
        if (d.is_zero() || K.is_square(d)) continue;
        auto s = s_gamma(K, d);
        REQUIRE(K.multiply(K.multiply(s.S, s.S), s.Delta) == K.principal(d));
        ++n;
    }
}

TEST_CASE("divides_s_gamma") {
    CHECK(divides_s_gamma(Q, AlgInt(45), zi(3)));
    CHECK_FALSE(divides_s_gamma(Q, AlgInt(45), zi(2)));
    CHECK(divides_s_gamma(Q, AlgInt(48), zi(2)));
    CHECK_FALSE(divides_s_gamma(Q, AlgInt(48), zi(4)));
}

TEST_CASE("divides_s_gamma agrees with S for |delta| <= 2000") {
    for (long d = -2000; d <= 2000; ++d) {
        if (d == 0 || floor_mod(d, 4) > 1 || is_perfect_square(BigInt(d))) continue;
        auto S = s_gamma(Q, AlgInt(d)).S;
        for (long e = 1; e <= 30; ++e) REQUIRE(divides_s_gamma(Q, AlgInt(d), zi(e)) == Q.divides(zi(e), S));
    }
}

TEST_CASE("congruence stability of d^2 | delta") {
    // tau1 = tau2 mod 4 a d^2 gives the same divisibility and the same quotient mod 4
    for (long a = 1; a <= 6; ++a)
        for (long d = 1; d <= 5; ++d) {
            long mod = 4 * a * d * d;
            for (long ue : {1L, -1L, 5L, 7L})
                for (long t = 0; t < mod; ++t)
                    for (long k = 1; k <= 3; ++k) {
                        long d1 = t * t - 4 * ue, t2 = t + k * mod, d2 = t2 * t2 - 4 * ue;
                        bool a1 = d1 % (d * d) == 0, a2 = d2 % (d * d) == 0;
                        REQUIRE(a1 == a2);
                        if (a1) REQUIRE(floor_mod(d1 / (d * d), 4) == floor_mod(d2 / (d * d), 4));
                    }
        }
}

TEST_CASE("local_orbital") {
    for (auto t : {SplitType::Split, SplitType::Inert, SplitType::Ramified}) CHECK(local_orbital(t, 7, 0) == 1);
    CHECK(local_orbital(SplitType::Inert, 3, 1) == 5);
    CHECK(local_orbital(SplitType::Split, 3, 2) == 9);
}

TEST_CASE("finite_orbital") {
    CHECK(finite_orbital_divisor_sum(Q, AlgInt(29)) == 1);
    CHECK(finite_orbital_divisor_sum(Q, AlgInt(45)) == 5);
    CHECK(finite_orbital_product(Q, AlgInt(45)) == 5);
    auto v = finite_orbital(EllipticDatum::rational(7, 1, 5, 0));
    CHECK(v.rational_part == 5);
    auto w = finite_orbital(EllipticDatum::rational(7, 1, 5, 1));
    CHECK(w.rational_part == 1);
    CHECK(w.p == 5);
    CHECK(w.p_exponent == Rational(-1, 2));
}

TEST_CASE("orbital identity: divisor sum equals local product") {
    for (long d = -3000; d <= 3000; ++d) {
        if (d == 0 || floor_mod(d, 4) > 1 || is_perfect_square(BigInt(d))) continue;
        REQUIRE(finite_orbital_divisor_sum(Q, AlgInt(d)) == finite_orbital_product(Q, AlgInt(d)));
    }
    auto K = Field::real_quadratic(33);
    std::mt19937_64 rng(2);
    int n = 0;
    while (n < 300) {
        AlgInt d(static_cast<long>(rng() % 4001) - 2000, static_cast<long>(rng() % 401) - 200);
        if (d.is_zero() || K.is_square(d)) continue;
        REQUIRE(finite_orbital_divisor_sum(K, d) == finite_orbital_product(K, d));
        ++n;
    }
}

TEST_CASE("orbital_z") {
    for (double z : {0.3, 1.0, 2.0}) CHECK(std::abs(orbital_z(Q, AlgInt(29), z) - 1.0) < 1e-15);
    CHECK(std::abs(orbital_z(Q, AlgInt(45), 1.0) - 5.0) < 1e-13);
    // z = 2: 9 (1 (1 + 1/9) + 1/27) = 31/3
    CHECK(orbital_z_exact(Q, AlgInt(45), 2) == Rational(31, 3));
    CHECK(std::abs(orbital_z(Q, AlgInt(45), 2.0) - 31.0 / 3.0) < 1e-12);
    for (long d : {45, 48, 12 * 49, -4 * 27, 5 * 36 * 49}) {
        for (std::complex<double> z : {std::complex<double>(0.3, 0), std::complex<double>(1.5, 2), std::complex<double>(3, 0)})
            REQUIRE(std::abs(orbital_z(Q, AlgInt(d), z) - orbital_z_local(Q, AlgInt(d), z)) < 1e-9 * std::abs(orbital_z(Q, AlgInt(d), z)));
        for (int z = 1; z <= 3; ++z)
            REQUIRE(std::abs(orbital_z(Q, AlgInt(d), static_cast<double>(z)) - orbital_z_exact(Q, AlgInt(d), z).get_d()) <
                    1e-9 * orbital_z_exact(Q, AlgInt(d), z).get_d());
    }
    // at z = 1 the orbital factor is the rational part of the finite orbital integral
    for (long d : {45, 48, 12 * 49, 5 * 36 * 49}) CHECK(orbital_z_exact(Q, AlgInt(d), 1) == finite_orbital_divisor_sum(Q, AlgInt(d)));
}
