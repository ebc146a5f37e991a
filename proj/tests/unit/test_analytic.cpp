#include "nt/analytic.hpp"
#include "nt/errors.hpp"
#include "nt/symbols.hpp"

#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>

using namespace nt;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("K_0(2) by two quadrature rules") {
    CHECK(std::abs(bessel_k0_2() - 0.11389387275) < 1e-10);
    CHECK(std::abs(bessel_k0_2() - bessel_k0_2_exp_sinh()) < 1e-10);
    CHECK(std::abs(bessel_k0_2() - boost::math::cyl_bessel_k(0, 2.0)) < 1e-13);
}

TEST_CASE("cutoff F") {
    CHECK(std::abs(cutoff_F(1e-12) - 1.0) < 1e-8);
    const double norm = 2 * bessel_k0_2();
    double f1 = cutoff_F(1.0);
    CHECK(f1 > 0);
    CHECK(f1 < std::exp(-1.0) / norm);
    CHECK(cutoff_F(10.0) < std::exp(-10.0) / norm);
    CHECK_THROWS(cutoff_F(0.0));
    CHECK_THROWS(cutoff_F(-1.0));
    double last = 1.0 + 1e-15;
    for (int i = 0; i < 100; ++i) {
        double x = 0.05 + 0.2 * i;
        double f = cutoff_F(x);
        REQUIRE(f > 0);
        REQUIRE(f < std::exp(-x) / norm);
        REQUIRE(f <= last);
        last = f;
    }
}

TEST_CASE("Mellin transform of F") {
    for (double z : {1e-5, 1e-6, 1e-7}) CHECK(std::abs(z * mellin_F(z).real() - 1.0) < 1e-6);
    for (std::complex<double> z : {std::complex<double>(0.7, 0), std::complex<double>(1, 1)}) {
        CHECK(std::abs(mellin_F(z) + mellin_F(-z)) < 1e-8);
        CHECK(std::abs(mellin_F(z) + mellin_F_entire(-z)) < 1e-8);
        CHECK(std::abs(mellin_F(z) - mellin_F_entire(z)) < 1e-10);
    }
    CHECK_THROWS_AS(mellin_F(0.0), PoleError);
    // decay along Re z = 1 at least like e^(-pi |t| / 2)
    double a5 = std::abs(mellin_F_entire({1, 5})), a10 = std::abs(mellin_F_entire({1, 10}));
    CHECK(a5 / a10 >= std::exp(kPi * 5 / 2));
}

TEST_CASE("Mellin inversion") {
    for (double a : {0.5, 1.0, 2.0}) {
        auto r = mellin_inverse_F(a);
        CHECK(std::abs(r.value.real() - cutoff_F(a)) < 1e-6);
        CHECK(std::abs(r.value.imag()) < 1e-10);
    }
}

TEST_CASE("H: refinement stays within the reported error") {
    HContour coarse(1.0, {0}), fine(1.0, {0}, ContourSpec{1.0, 80.0, 0.05});
    for (double y : {0.5, 1.0, 5.0, 20.0, 100.0}) {
        auto a = coarse(y), b = fine(y);
        REQUIRE(std::abs(a.value - b.value) <= a.error);
    }
    CHECK_THROWS_AS(coarse(0.0), InvalidInput);
}

TEST_CASE("H depends only on the sign pattern") {
    const Field Q = Field::rationals();
    auto v5 = ramification_vector(Q, AlgInt(5)), v45 = ramification_vector(Q, AlgInt(45));
    REQUIRE(v5 == v45);
    for (double y : {0.7, 3.0}) CHECK(std::abs(h_function(1.0, y, v5).value - h_function(1.0, y, v45).value) == 0.0);
    // and genuinely on it
    auto vneg = ramification_vector(Q, AlgInt(-4));
    CHECK(std::abs(h_function(1.0, 1.0, v5).value - h_function(1.0, 1.0, vneg).value) > 1e-6);
}

TEST_CASE("H decay constant") {
    double C = fit_h_bound({0}, 1.0, 100.0, 40);
    CHECK(std::isfinite(C));
    CHECK(C > 0);
    // a finer grid barely moves the constant, and the shape e^(-sqrt x) / x persists past the fitted range
    double fine = fit_h_bound({0}, 1.0, 100.0, 200);
    CHECK(fine >= C);
    CHECK(fine <= 1.05 * C);
    HContour H(1.0, {0});
    for (double x : {120.0, 160.0, 200.0}) CHECK(std::abs(H(x).value) <= fine * std::exp(-std::sqrt(x)) / x);
}

TEST_CASE("gamma_ratio_limit") {
    const Field Q = Field::rationals();
    CHECK(std::abs(gamma_ratio_limit(Q, {0}) + 1.0) < 1e-5);
    CHECK(std::abs(gamma_ratio_limit(Q, {1})) < 1e-5);
    auto K = Field::real_quadratic(33);
    CHECK(std::abs(gamma_ratio_limit(K, {0, 0}) + 2 * std::sqrt(33.0)) < 1e-5);
    CHECK(std::abs(gamma_ratio_limit(K, {0, 1})) < 1e-5);
    CHECK(std::abs(gamma_ratio_limit(K, {1, 1})) < 1e-5);
    CHECK_THROWS_AS(gamma_ratio_limit(K, {0}), InvalidInput);
}
