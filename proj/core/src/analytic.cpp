#include "nt/analytic.hpp"

#include "nt/errors.hpp"
#include "nt/lfunc.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>

namespace nt {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfWidth = 6.5;  // e^(-2 cosh 6.5) ~ e^-665
constexpr double kStep = 0.05;
constexpr double kSmallX = 0.02;    // 1 - F(x) < e^-50 below this

double normalizer() {
    static const double n = 2.0 * bessel_k0_2();
    return n;
}

cplx linf(cplx s, const std::vector<int>& dvec) {
    cplx r = 1.0;
    for (int d : dvec) r *= lr_factor(s + static_cast<double>(d));
    return r;
}

// 1 / L_inf(s), entire
cplx rlinf(cplx s, const std::vector<int>& dvec) {
    cplx r = 1.0;
    for (int d : dvec) {
        cplx h = 0.5 * (s + static_cast<double>(d));
        r *= std::exp(h * std::log(kPi)) * rgamma_c(h);
    }
    return r;
}

}  // namespace

double bessel_k0_2() {
    double s = 0;
    int n = static_cast<int>(std::lround(kHalfWidth / kStep));
    for (int i = -n; i <= n; ++i) s += std::exp(-2.0 * std::cosh(i * kStep));
    return 0.5 * s * kStep;
}

double bessel_k0_2_exp_sinh() {
    boost::math::quadrature::exp_sinh<double> es;
    auto f = [](double y) { return (y <= 0 || y > 800) ? 0.0 : std::exp(-y - 1.0 / y) / y; };
    return 0.5 * es.integrate(f);
}

double cutoff_F(double x) {
    if (!(x > 0)) throw std::domain_error("cutoff_F: x must be positive");
    boost::math::quadrature::exp_sinh<double> es;
    auto f = [](double t) { return std::fabs(t) > 8 ? 0.0 : std::exp(-2.0 * std::cosh(t)); };
    double a = std::log(x);
    double right = es.integrate([&](double s) { return f(std::max(a, 0.0) + s); });
    if (a >= 0) return right / normalizer();
    boost::math::quadrature::tanh_sinh<double> ts;
    return (ts.integrate(f, a, 0.0) + right) / normalizer();
}

cplx mellin_F_entire(cplx z) {
    if (std::abs(z) == 0.0) throw PoleError("Mellin transform of F has a pole at 0");
    int n = static_cast<int>(std::lround(kHalfWidth / kStep));
    cplx s = 0.0;
    for (int i = -n; i <= n; ++i) {
        double t = i * kStep;
        s += std::exp(z * t - 2.0 * std::cosh(t));
    }
    return s * kStep / normalizer() / z;
}

cplx mellin_F(cplx z) {
    if (std::abs(z) == 0.0) throw PoleError("Mellin transform of F has a pole at 0");
    if (z.real() < 0) return -mellin_F(-z);
    if (z.real() == 0) return mellin_F_entire(z);
    // F = 1 on (0, x0] up to e^-50; the rest by exp-sinh in s = log x
    boost::math::quadrature::exp_sinh<double> es;
    double a = std::log(kSmallX);
    auto part = [&](bool imag) {
        auto f = [&](double s) {
            if (a + s > 7) return 0.0;  // F(e^7) ~ e^-1100
            cplx w = std::exp(z * (a + s)) * cutoff_F(std::exp(a + s));
            return imag ? w.imag() : w.real();
        };
        return es.integrate(f);
    };
    cplx head = std::exp(z * a) / z;
    return head + cplx(part(false), part(true));
}

HContour::HContour(cplx z, std::vector<int> dvec, ContourSpec spec) : z_(z), dvec_(std::move(dvec)), spec_(spec) {
    if (spec_.step <= 0 || spec_.height <= 0) throw InvalidInput("contour: step and height must be positive");
    int n = static_cast<int>(std::ceil(spec_.height / spec_.step));
    for (int i = -n; i <= n; ++i) {
        double t = i * spec_.step;
        cplx u(spec_.c, t);
        cplx g = mellin_F_entire(u) * linf(1.0 - z_ + u, dvec_) * rlinf(z_ - u, dvec_);
        t_.push_back(t);
        g_.push_back(g);
    }
    // beyond the height the integrand decays at least like its last samples times e^(-pi |t| / 2)
    double edge = std::max(std::abs(g_.front()), std::abs(g_.back()));
    tail_ = 2.0 * edge / (kPi / 2.0) / (2.0 * kPi);
}

ValueError HContour::operator()(double y) const {
    if (!(y > 0)) throw InvalidInput("H: y must be positive");
    double ly = std::log(y);
    cplx fine = 0.0, coarse = 0.0;
    for (std::size_t i = 0; i < t_.size(); ++i) {
        cplx w = std::exp(-cplx(spec_.c, t_[i]) * ly) * g_[i];
        fine += w;
        if (i % 2 == 0) coarse += w;
    }
    const double yc = std::pow(y, -spec_.c);
    fine *= spec_.step / (2.0 * kPi);
    coarse *= 2.0 * spec_.step / (2.0 * kPi);
    return {fine, std::abs(fine - coarse) + tail_ * yc + 1e-16 * std::abs(fine)};
}

ValueError h_function(cplx z, double y, const std::vector<int>& dvec, ContourSpec spec) {
    return HContour(z, dvec, spec)(y);
}

ValueError mellin_inverse_F(double a, ContourSpec spec) {
    if (!(a > 0)) throw InvalidInput("mellin inverse: a must be positive");
    int n = static_cast<int>(std::ceil(spec.height / spec.step));
    double la = std::log(a);
    cplx fine = 0.0, coarse = 0.0;
    double edge = 0;
    for (int i = -n; i <= n; ++i) {
        cplx u(spec.c, i * spec.step);
        cplx g = mellin_F_entire(u);
        cplx w = std::exp(-u * la) * g;
        fine += w;
        if (i % 2 == 0) coarse += w;
        if (std::abs(i) == n) edge = std::max(edge, std::abs(g));
    }
    fine *= spec.step / (2.0 * kPi);
    coarse *= 2.0 * spec.step / (2.0 * kPi);
    double tail = 2.0 * edge / (kPi / 2.0) / (2.0 * kPi) * std::pow(a, -spec.c);
    return {fine, std::abs(fine - coarse) + tail};
}

double fit_h_bound(const std::vector<int>& dvec, double x0, double x1, int points) {
    HContour H(1.0, dvec);
    double C = 0;
    for (int i = 0; i < points; ++i) {
        double x = x0 * std::pow(x1 / x0, points == 1 ? 0.0 : static_cast<double>(i) / (points - 1));
        auto h = H(x);
        C = std::max(C, std::abs(h.value) * x * std::exp(std::sqrt(x)));
    }
    return C;
}

double gamma_ratio_limit(const Field& K, const std::vector<int>& dvec) {
    if (static_cast<int>(dvec.size()) != K.degree()) throw InvalidInput("one ramification entry per real place");
    auto f = [&](double z) {
        cplx r = linf(z, dvec) / linf(1.0 - z, dvec) * zeta_K(K, 2.0 * z) / zeta_K(K, z + 1.0);
        return r.real();
    };
    // two Richardson levels on z = 1e-3, 1e-4, 1e-5; the quadratic term is ~1e2 for real quadratic K
    double f3 = f(1e-3), f4 = f(1e-4), f5 = f(1e-5);
    double r34 = (10.0 * f4 - f3) / 9.0, r45 = (10.0 * f5 - f4) / 9.0;
    return (100.0 * r45 - r34) / 99.0;
}

}  // namespace nt
