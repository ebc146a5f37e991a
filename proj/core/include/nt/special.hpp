#pragma once

#include <complex>

namespace nt {

using cplx = std::complex<double>;

// Lanczos (g = 7, 9 terms) with reflection
cplx lgamma_c(cplx z);
cplx gamma_c(cplx z);
// 1 / Gamma(z), entire
cplx rgamma_c(cplx z);

// log Gamma(1 + a) accurate for small |a|
cplx lgamma1p(cplx a);

// upper incomplete gamma Gamma(a, x) for x > 0 and complex a
cplx gamma_upper(cplx a, double x);

// Riemann zeta by Euler-Maclaurin, s != 1
cplx riemann_zeta(cplx s);

// L_R(s) = pi^(-s/2) Gamma(s/2); throws PoleError at s in -2 N
cplx lr_factor(cplx s);

}  // namespace nt
