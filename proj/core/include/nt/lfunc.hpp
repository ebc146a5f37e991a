#pragma once

#include "nt/arith.hpp"
#include "nt/field.hpp"
#include "nt/special.hpp"

namespace nt {

bool is_fundamental_discriminant(i64 D);

// L(s, chi_D) for a fundamental discriminant D (D = 1 gives zeta), any s
// computed from the theta-function splitting at t = X
cplx dirichlet_l(i64 D, cplx s, double X = 1.3);

// (|D|/pi)^((s+a)/2) Gamma((s+a)/2) L(s, chi_D), a = 0 for D > 0 and 1 for D < 0; symmetric under s -> 1-s
cplx completed_l_standard(i64 D, cplx s, double X = 1.3);

struct EulerEval {
    cplx value;
    double tail = 0;  // bound on |log(full) - log(partial)|
};
// Euler product over p <= P; Re s > 1
EulerEval dirichlet_l_euler(i64 D, cplx s, u64 P);

// zeta_K = zeta * L(., chi_{D_K}) for quadratic K
cplx zeta_K(const Field& K, cplx s);
EulerEval zeta_K_euler(const Field& K, cplx s, u64 P);

// residue of zeta_K at s = 1
double zeta_K_residue(const Field& K);

}  // namespace nt
