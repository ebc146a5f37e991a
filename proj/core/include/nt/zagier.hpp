#pragma once

#include "nt/analytic.hpp"
#include "nt/elliptic.hpp"
#include "nt/field.hpp"
#include "nt/lfunc.hpp"

#include <vector>

namespace nt {

struct LValue {
    cplx value;
    double error = 0;
};

// delta = D f^2 with D a fundamental discriminant (over Q)
struct DiscSplit {
    i64 D = 1;
    i64 f = 1;
};
DiscSplit split_discriminant(i64 delta);

// sum'_{d^2 | delta} d^(1-2z) L(z, (delta/d^2 / .)) assembled from L(z, chi_D) and Euler factors
cplx zagier_zeta(cplx z, i64 delta);
// the same sum from partial sums of the Kronecker characters over n <= N, Re z > 1
LValue zagier_zeta_partial(cplx z, i64 delta, u64 N);

// L(z, chi_gamma) * sum_{d | S} N(d)^(1-2z) prod_{q | S/d} (1 - chi(q) N(q)^-z) over Q, any z
cplx l_mult_langlands(cplx z, i64 delta);
// over K for Re z > 1: Hecke L-function by Euler product over prime ideals of norm <= P
LValue l_mult_langlands(const Field& K, const AlgInt& delta, cplx z, u64 P = 20000);
LValue l_mult_langlands(const EllipticDatum& dat, cplx z, u64 P = 20000);
LValue hecke_l_euler(const Field& K, const AlgInt& delta, cplx z, u64 P);

// finite divisor factor sum_{d | S} N(d)^(1-2z) prod_{q | S/d} (1 - chi(q) N(q)^-z), exact at integer z
Rational finite_part_exact(const Field& K, const AlgInt& delta, int z);
// the same after the Moebius expansion: sum_{r | S} chi(r) mu(r) N(r)^-z sum_{d | S/r} N(d)^(1-2z)
Rational finite_part_mobius(const Field& K, const AlgInt& delta, int z);

// N(r)^(z-1/2) sum_{d | r} N(d)^(1-2z) is invariant under z -> 1-z, checked on monomials with exact
// exponents; r is given by the exponents of its prime factors
bool finite_part_symmetric(const std::vector<unsigned>& exponents);

// paper normalization |D|^(z/2) L_R(z + a) L(z, chi_D), a = 1 for D < 0; X is the theta splitting point
cplx completed_l_primitive(cplx z, i64 D, double X = 1.3);
// Lambda(z, chi_gamma) * O(z, gamma) over Q
cplx completed_lambda(cplx z, i64 delta, double X = 1.3);

struct FeReport {
    i64 delta = 0;
    cplx z;
    cplx lhs, rhs;
    double defect = 0;
    double tolerance = 0;
    bool exact_ok = false;
    bool pass = false;
};
// the two sides use different splitting points, so agreement is not built into the smoothed sums
FeReport verify_functional_equation(i64 delta, cplx z, double tol);

struct AfeReport {
    double z = 1;
    double A = 0;
    double alpha = 0;
    double lhs = 0;
    double f_term = 0;
    double h_term = 0;
    double rhs = 0;
    double abs_defect = 0;
    double rel_defect = 0;
    double error_budget = 0;  // truncation of both sums plus contour error
    u64 f_terms = 0, h_terms = 0;
};
// both sides at z = 1 over Q, A = |delta|^alpha; sums truncated where the weight argument exceeds xmax
AfeReport afe_verify(i64 delta, double alpha, double xmax = 45.0, ContourSpec spec = {});

struct LOneReport {
    double value = 0;
    double tail = 0;
    double reference = 0;
    int class_number = 0;
    double regulator = 0;
    double defect = 0;
};
// L(1, chi_D) by partial sums to N with the Abel-summation tail, against 2 h log eps / sqrt D
LOneReport l_one_quadratic(i64 D, u64 N = 10000000);

// wide class number of Q(sqrt D), D > 0 fundamental, from cycles of reduced forms
int class_number(i64 D);

}  // namespace nt
