#include "nt/special.hpp"

#include "nt/errors.hpp"

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include <array>
#include <cmath>

namespace nt {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
                                            771.32342877765313,      -176.61502916214059,   12.507343278686905,
                                            -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

cplx expm1_c(cplx w) {
    if (std::abs(w) < 1e-5) return w * (1.0 + w * (0.5 + w * (1.0 / 6.0 + w / 24.0)));
    return std::exp(w) - 1.0;
}

// lgamma1p(a) / a for |a| < 0.25
cplx lgamma1p_over_a(cplx a) {
    cplx s = -kEulerGamma;
    cplx ak = a;  // a^(k-1)
    for (int k = 2; k < 80; ++k) {
        cplx t = ak * boost::math::zeta(static_cast<double>(k)) / static_cast<double>(k);
        s += (k % 2 == 0) ? t : -t;
        if (std::abs(t) < 1e-18) break;
        ak *= a;
    }
    return s;
}

}  // namespace

cplx lgamma_c(cplx z) {
    if (z.real() < 0.5) {
        return std::log(kPi) - std::log(std::sin(kPi * z)) - lgamma_c(1.0 - z);
    }
    z -= 1.0;
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    cplx t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

cplx gamma_c(cplx z) {
    if (z.real() < 0.5) {
        cplx s = std::sin(kPi * z);
        if (std::abs(s) == 0.0) throw PoleError("gamma at a non-positive integer");
        return kPi / (s * gamma_c(1.0 - z));
    }
    return std::exp(lgamma_c(z));
}

cplx rgamma_c(cplx z) {
    if (z.real() < 0.5) return gamma_c(1.0 - z) * std::sin(kPi * z) / kPi;
    return std::exp(-lgamma_c(z));
}

cplx lgamma1p(cplx a) {
    if (std::abs(a) < 0.25) return a * lgamma1p_over_a(a);
    return lgamma_c(1.0 + a);
}

cplx gamma_upper(cplx a, double x) {
    if (!(x > 0)) throw InvalidInput("gamma_upper: x must be positive");
    if (x >= 1.5) {
        // Legendre continued fraction, modified Lentz
        const double tiny = 1e-300;
        cplx b = x + 1.0 - a;
        cplx f = std::abs(b) < tiny ? cplx(tiny) : b;
        cplx C = f, D = 0.0;
        for (int i = 1; i < 10000; ++i) {
            cplx an = -static_cast<double>(i) * (static_cast<double>(i) - a);
            b += 2.0;
            D = b + an * D;
            if (std::abs(D) < tiny) D = tiny;
            C = b + an / C;
            if (std::abs(C) < tiny) C = tiny;
            D = 1.0 / D;
            cplx delta = C * D;
            f *= delta;
            if (std::abs(delta - 1.0) < 1e-16) break;
        }
        return std::exp(-x + a * std::log(x)) / f;
    }
    double lx = std::log(x);
    cplx xa = std::exp(a * lx);
    // upward recurrence away from the poles of the series at non-positive integers
    if (a.real() < -0.25) return (gamma_upper(a + 1.0, x) - xa * std::exp(-x)) / a;
    // Gamma(a) - x^a / a = x^a * expm1(lgamma1p(a) - a log x) / a
    cplx head;
    if (std::abs(a) < 0.25) {
        cplx w_over_a = lgamma1p_over_a(a) - lx;
        cplx w = a * w_over_a;
        cplx ratio = std::abs(w) < 1e-300 ? cplx(1.0) : expm1_c(w) / w;
        head = xa * ratio * w_over_a;
    } else {
        head = xa * expm1_c(lgamma1p(a) - a * lx) / a;
    }
    cplx s = 0.0, term = 1.0;
    for (int n = 1; n < 500; ++n) {
        term *= -x / static_cast<double>(n);
        cplx den = a + static_cast<double>(n);
        if (std::abs(den) < 1e-14) throw PoleError("gamma_upper: a is a negative integer");
        cplx t = term / den;
        s += t;
        if (std::abs(t) < 1e-18 * std::abs(s) && n > 2) break;
    }
    return head - xa * s;
}

cplx riemann_zeta(cplx s) {
    if (std::abs(s - 1.0) == 0.0) throw PoleError("zeta pole at s = 1");
    const int N = 30 + static_cast<int>(std::abs(s.imag()));
    const int K = 24;
    cplx sum = 0.0;
    for (int n = 1; n < N; ++n) sum += std::exp(-s * std::log(static_cast<double>(n)));
    double lN = std::log(static_cast<double>(N));
    cplx Ns = std::exp(-s * lN);
    sum += Ns * static_cast<double>(N) / (s - 1.0) + 0.5 * Ns;
    cplx poch = s;          // s (s+1) ... (s + 2k - 2)
    cplx Npow = Ns / static_cast<double>(N);  // N^(-s-2k+1)
    double fact = 2.0;      // (2k)!
    for (int k = 1; k <= K; ++k) {
        double B = boost::math::bernoulli_b2n<double>(k);
        cplx t = B / fact * poch * Npow;
        sum += t;
        if (std::abs(t) < 1e-18 * std::abs(sum)) break;
        poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
        Npow /= static_cast<double>(N) * N;
        fact *= static_cast<double>(2 * k + 1) * (2 * k + 2);
    }
    return sum;
}

cplx lr_factor(cplx s) {
    cplx h = 0.5 * s;
    double rr = std::round(h.real());
    if (rr <= 0 && std::abs(h - cplx(rr, 0.0)) < 1e-14) throw PoleError("L_R pole");
    return std::exp(-h * std::log(kPi) + lgamma_c(h));
}

}  // namespace nt
