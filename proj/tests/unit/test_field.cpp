#include "nt/errors.hpp"
#include "nt/field.hpp"
#include "nt/local.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace nt;

TEST_CASE("field_init") {
    auto Q = Field::rationals();
    CHECK(Q.is_rational());
    CHECK(Q.disc() == 1);
    CHECK(Q.degree() == 1);

    auto K5 = Field::real_quadratic(5);
    CHECK(K5.disc() == 5);
    // omega = (1 + sqrt 5) / 2: omega^2 = omega + 1
    CHECK(K5.trace_omega() == 1);
    CHECK(K5.norm_omega() == -1);

    auto K33 = Field::real_quadratic(33);
    CHECK(K33.disc() == 33);
    auto P2 = K33.primes_above(2);
    REQUIRE(P2.size() == 2);
    CHECK(P2[0].type == SplitType::Split);

    CHECK(Field::real_quadratic(7).disc() == 28);
    CHECK_THROWS_AS(Field::real_quadratic(12), InvalidField);
    CHECK_THROWS_AS(Field::real_quadratic(1), InvalidField);
    CHECK_THROWS_AS(Field::real_quadratic(-5), InvalidField);
}

TEST_CASE("fundamental_unit") {
    // 23 + 4 sqrt 33 = 19 + 8 omega
    auto u33 = Field::real_quadratic(33).fundamental_unit();
    REQUIRE(u33.beta);
    CHECK(*u33.beta == AlgInt(19, 8));
    CHECK(u33.totally_positive);

    auto u5 = Field::real_quadratic(5).fundamental_unit();
    CHECK(*u5.beta == AlgInt(0, 1));
    CHECK_FALSE(u5.totally_positive);

    auto u7 = Field::real_quadratic(7).fundamental_unit();
    CHECK(*u7.beta == AlgInt(8, 3));
    CHECK(u7.totally_positive);

    CHECK_THROWS_AS(Field::rationals().fundamental_unit(), NotApplicable);
}

TEST_CASE("split_prime") {
    auto K5 = Field::real_quadratic(5);
    auto P3 = K5.primes_above(3);
    REQUIRE(P3.size() == 1);
    CHECK(P3[0].type == SplitType::Inert);
    CHECK(P3[0].norm == 9);
    auto P5 = K5.primes_above(5);
    REQUIRE(P5.size() == 1);
    CHECK(P5[0].type == SplitType::Ramified);
    CHECK(P5[0].norm == 5);

    for (const auto& q : Field::real_quadratic(33).primes_above(2)) CHECK(q.norm == 2);
    auto Q = Field::rationals();
    for (u64 p : {2, 3, 7, 101}) {
        auto ps = Q.primes_above(p);
        REQUIRE(ps.size() == 1);
        CHECK(ps[0].norm == p);
    }
}

TEST_CASE("ideal operations") {
    auto K5 = Field::real_quadratic(5);
    CHECK(K5.principal(AlgInt(3)).norm() == 9);

    auto Q = Field::rationals();
    auto ids = Q.enumerate_by_norm(5);
    REQUIRE(ids.size() == 5);
    for (int n = 1; n <= 5; ++n) CHECK(ids[n - 1].norm() == n);
    CHECK(Q.principal(AlgInt(45)).valuation(Q.primes_above(3)[0]) == 2);
    CHECK_THROWS_AS(K5.principal(AlgInt(0)), InvalidInput);
}

TEST_CASE("ideals: factor reconstruction and multiplicative norm") {
    for (i64 m : {33, 5, 7}) {
        auto K = Field::real_quadratic(m);
        auto ids = K.enumerate_by_norm(300);
        for (const auto& I : ids) {
            REQUIRE(K.from_factors(I.factors) == I);
            BigInt n = 1;
            for (const auto& [q, e] : I.factors)
                for (unsigned i = 0; i < e; ++i) n *= static_cast<unsigned long>(q.norm);
            REQUIRE(n == I.norm());
        }
        std::mt19937_64 rng(11);
        for (int t = 0; t < 1000; ++t) {
            const auto& I = ids[rng() % ids.size()];
            const auto& J = ids[rng() % ids.size()];
            auto IJ = K.multiply(I, J);
            REQUIRE(IJ.norm() == I.norm() * J.norm());
            REQUIRE(K.divides(I, IJ));
            REQUIRE(K.quotient(IJ, J) == I);
        }
    }
}

TEST_CASE("ideals: principal ideals of norm-one units are trivial") {
    auto K = Field::real_quadratic(33);
    CHECK(K.principal(AlgInt(19, 8)).is_unit());
    CHECK(K.is_unit(AlgInt(19, 8)));
    CHECK_FALSE(K.is_unit(AlgInt(2, 1)));
}

TEST_CASE("residues") {
    auto Q = Field::rationals();
    auto r4 = Q.residues(Q.principal(AlgInt(4)));
    std::set<long> got;
    for (const auto& a : r4) got.insert(a.x.get_si());
    CHECK(got == std::set<long>{0, 1, 2, 3});

    auto K33 = Field::real_quadratic(33);
    CHECK(K33.residues(K33.ideal(K33.primes_above(2)[0])).size() == 2);
    auto K5 = Field::real_quadratic(5);
    CHECK(K5.residues(K5.principal(AlgInt(3))).size() == 9);
}

TEST_CASE("residues are pairwise incongruent") {
    for (i64 m : {33, 5}) {
        auto K = Field::real_quadratic(m);
        for (const auto& I : K.enumerate_by_norm(1000)) {
            auto rs = K.residues(I);
            REQUIRE(BigInt(static_cast<unsigned long>(rs.size())) == I.norm());
            std::set<std::pair<std::string, std::string>> seen;
            for (const auto& a : rs) {
                auto red = K.reduce(a, I);
                REQUIRE(seen.insert({red.x.get_str(), red.y.get_str()}).second);
            }
        }
    }
}

TEST_CASE("validate_hyp_div") {
    auto Q = Field::rationals();
    auto p5 = Q.primes_above(5)[0];
    CHECK(Q.validate_hyp_div(p5, 1, AlgInt(5), 3));
    CHECK_FALSE(Q.validate_hyp_div(p5, 1, AlgInt(10), 3));
    CHECK_FALSE(Q.validate_hyp_div(p5, 2, AlgInt(25), 3));

    // N(2 + omega) = 4 + 2 - 8 = -2 in Q(sqrt 33)
    auto K = Field::real_quadratic(33);
    CHECK(K.norm(AlgInt(2, 1)) == -2);
    auto P2 = K.primes_above(2);
    bool one = K.validate_hyp_div(P2[0], 1, AlgInt(2, 1), 2) || K.validate_hyp_div(P2[1], 1, AlgInt(2, 1), 2);
    CHECK(one);
    CHECK(K.validate_hyp_div(P2[0], 1, AlgInt(2, 1), 2));
}

TEST_CASE("split projections are ring homomorphisms") {
    auto K = Field::real_quadratic(33);
    std::mt19937_64 rng(3);
    for (u64 p : {2, 3, 17}) {
        for (const auto& q : K.primes_above(p)) {
            if (q.type != SplitType::Split) continue;
            Completion C(K, q, 6);
            for (int t = 0; t < 300; ++t) {
                AlgInt a(BigInt(static_cast<long>(rng() % 2001) - 1000), BigInt(static_cast<long>(rng() % 2001) - 1000));
                AlgInt b(BigInt(static_cast<long>(rng() % 2001) - 1000), BigInt(static_cast<long>(rng() % 2001) - 1000));
                REQUIRE(C.image(K.add(a, b)) == C.add(C.image(a), C.image(b)));
                REQUIRE(C.image(K.mul(a, b)) == C.mul(C.image(a), C.image(b)));
            }
            // the prime itself maps into the maximal ideal
            CHECK(C.val(C.image(AlgInt(static_cast<long>(p)))) >= 1);
        }
    }
}

TEST_CASE("square test in K") {
    auto K = Field::real_quadratic(33);
    CHECK(K.is_square(AlgInt(33)));
    CHECK(K.is_square(K.mul(AlgInt(3, 5), AlgInt(3, 5))));
    CHECK_FALSE(K.is_square(AlgInt(19, 8)));
    CHECK_FALSE(K.is_square(AlgInt(2)));
    CHECK_FALSE(K.is_square(AlgInt(-1)));
}
