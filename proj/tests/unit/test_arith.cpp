#include "nt/arith.hpp"
#include "nt/errors.hpp"

#include <doctest.h>

#include <random>

using namespace nt;

TEST_CASE("kronecker: fixed values") {
    CHECK(kronecker(BigInt(2), BigInt(7)) == 1);
    CHECK(kronecker(BigInt(5), BigInt(3)) == -1);
    for (long a = -20; a <= 20; ++a) CHECK(kronecker(BigInt(a), BigInt(1)) == 1);
    CHECK(kronecker(i64(2), i64(7)) == 1);
    CHECK(kronecker(i64(5), i64(3)) == -1);
}

TEST_CASE("kronecker: n = 0 convention") {
    CHECK(kronecker(i64(1), i64(0)) == 1);
    CHECK(kronecker(i64(-1), i64(0)) == 1);
    CHECK(kronecker(i64(2), i64(0)) == 0);
    CHECK(kronecker(BigInt(-1), BigInt(0)) == 1);
    CHECK(kronecker(BigInt(3), BigInt(0)) == 0);
}

TEST_CASE("kronecker: word and GMP versions agree") {
    for (i64 a = -60; a <= 60; ++a)
        for (i64 n = -60; n <= 60; ++n) REQUIRE(kronecker(a, n) == kronecker(BigInt(static_cast<long>(a)), BigInt(static_cast<long>(n))));
}

TEST_CASE("kronecker: multiplicative in the top argument") {
    for (i64 n = 1; n <= 80; ++n)
        for (i64 a = -25; a <= 25; ++a)
            for (i64 b = -25; b <= 25; ++b) REQUIRE(kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n));
}

TEST_CASE("kronecker: multiplicative in the bottom argument") {
    for (i64 a = -30; a <= 30; ++a) {
        if (floor_mod(a, 4) > 1) continue;  // discriminants
        for (i64 m = 1; m <= 40; ++m)
            for (i64 n = 1; n <= 40; ++n) REQUIRE(kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n));
    }
}

TEST_CASE("kronecker: quadratic residues modulo odd primes up to 200") {
    for (u64 q : primes_up_to(200)) {
        if (q == 2) continue;
        std::vector<bool> sq(q, false);
        for (u64 x = 0; x < q; ++x) sq[x * x % q] = true;
        for (u64 a = 1; a < q; ++a) REQUIRE(kronecker(static_cast<i64>(a), static_cast<i64>(q)) == (sq[a] ? 1 : -1));
    }
}

TEST_CASE("kronecker(2, u) depends on u mod 8") {
    for (i64 u = 1; u < 2000; u += 2) {
        i64 r = u % 8;
        REQUIRE(kronecker(i64(2), u) == ((r == 1 || r == 7) ? 1 : -1));
    }
}

TEST_CASE("factorize") {
    CHECK(factorize(45) == Factorization{{3, 2}, {5, 1}});
    CHECK(factorize(1).empty());
    CHECK(factorize(1024) == Factorization{{2, 10}});
    BigInt n = BigInt(1000003) * BigInt(1000033) * 7;
    auto f = factorize(n);
    CHECK(expand(f) == n);
    for (const auto& pp : f) CHECK(is_prime(pp.p));
    BigInt semi = BigInt("1000000000039") * BigInt("1000000000061");
    CHECK(expand(factorize(semi)) == semi);
    CHECK(factorize(semi).size() == 2);
    CHECK_THROWS_AS(factorize(0), InvalidInput);
}

TEST_CASE("factorize: random round trip") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        BigInt n = BigInt(static_cast<unsigned long>(rng() % 1000000000ULL + 1));
        auto f = factorize(n);
        REQUIRE(expand(f) == n);
        for (std::size_t j = 1; j < f.size(); ++j) REQUIRE(f[j - 1].p < f[j].p);
    }
}

TEST_CASE("valuation") {
    CHECK(valuation(BigInt(45), BigInt(3)) == 2);
    CHECK(valuation(BigInt(45), BigInt(7)) == 0);
    CHECK(valuation(BigInt(1024), BigInt(2)) == 10);
    CHECK(valuation(i64(-1024), i64(2)) == 10);
    CHECK_THROWS_AS(valuation(BigInt(0), BigInt(3)), InvalidInput);
}

TEST_CASE("modular helpers") {
    CHECK(powmod(3, 100, 101) == 1);
    CHECK(mulmod(invmod(7, 40), 7, 40) == 1);
    CHECK(floor_mod(-7, 4) == 1);
    for (u64 p : {3ULL, 5ULL, 13ULL, 17ULL, 41ULL, 97ULL, 1000003ULL})
        for (u64 a = 1; a < std::min<u64>(p, 60); ++a)
            if (kronecker(static_cast<i64>(a), static_cast<i64>(p)) == 1) {
                u64 r = sqrt_mod_prime(a, p);
                REQUIRE(mulmod(r, r, p) == a);
            }
    CHECK(ipow(3, 4) == 81);
    CHECK_THROWS_AS(ipow(10, 30), ResourceError);
    CHECK(is_squarefree(30));
    CHECK_FALSE(is_squarefree(45));
    CHECK(is_perfect_square(BigInt(1) << 100));
    CHECK(isqrt(99) == 9);
    CHECK(mod_u64(BigInt(-5), 7) == 2);
}
