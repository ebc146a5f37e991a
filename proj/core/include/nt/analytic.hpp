#pragma once

#include "nt/field.hpp"
#include "nt/special.hpp"

#include <vector>

namespace nt {

// K_0(2) by the trapezoid rule on int e^(-2 cosh t) dt = 2 K_0(2)
double bessel_k0_2();
// same integral as int_0^inf e^(-y-1/y) dy/y by exp-sinh quadrature
double bessel_k0_2_exp_sinh();

// F(x) = (1 / 2K_0(2)) int_x^inf e^(-y-1/y) dy/y, x > 0
double cutoff_F(double x);

// Mellin transform of F: direct quadrature for Re z > 0, -mellin_F(-z) for Re z < 0
cplx mellin_F(cplx z);
// (1/z) int e^(zt - 2cosh t) dt / 2K_0(2); valid for every z != 0
cplx mellin_F_entire(cplx z);

struct ValueError {
    cplx value;
    double error = 0;
};

// vertical line Re u = c, |Im u| <= height, trapezoid step
struct ContourSpec {
    double c = 1.0;
    double height = 40.0;
    double step = 0.1;
};

// H(z, y) = (1/2 pi i) int_{Re u = c} y^-u F~(u) L_inf(1 - z + u) / L_inf(z - u) du,
// L_inf(s) = prod_v L_R(s + dvec[v]). The integrand samples are computed once per (z, dvec).
class HContour {
public:
    HContour(cplx z, std::vector<int> dvec, ContourSpec spec = {});
    ValueError operator()(double y) const;
    const ContourSpec& spec() const { return spec_; }

private:
    cplx z_;
    std::vector<int> dvec_;
    ContourSpec spec_;
    std::vector<double> t_;
    std::vector<cplx> g_;
    double tail_ = 0;
};

ValueError h_function(cplx z, double y, const std::vector<int>& dvec, ContourSpec spec = {});

// (1/2 pi i) int_{Re u = c} a^-u F~(u) du, which should reproduce F(a)
ValueError mellin_inverse_F(double a, ContourSpec spec = {});

// smallest C with |H(1, x)| <= C e^(-sqrt x) / x on a geometric grid over [x0, x1]
double fit_h_bound(const std::vector<int>& dvec, double x0, double x1, int points);

// lim_{z -> 0} L_inf(z) / L_inf(1 - z) * zeta_K(2z) / zeta_K(z + 1), by Richardson extrapolation
double gamma_ratio_limit(const Field& K, const std::vector<int>& dvec);

}  // namespace nt
