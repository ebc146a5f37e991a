#include "nt/lfunc.hpp"

#include "nt/errors.hpp"

#include <cmath>
#include <cstdlib>

namespace nt {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

bool is_fundamental_discriminant(i64 D) {
    if (D == 1) return true;
    if (D == 0) return false;
    i64 r = floor_mod(D, 4);
    if (r == 1) return is_squarefree(BigInt(static_cast<long>(D)));
    if (r != 0) return false;
    i64 m = D / 4;
    i64 rm = floor_mod(m, 4);
    return (rm == 2 || rm == 3) && is_squarefree(BigInt(static_cast<long>(m)));
}

cplx completed_l_standard(i64 D, cplx s, double X) {
    if (D == 1) throw InvalidInput("completed_l_standard: use riemann_zeta for D = 1");
    if (!is_fundamental_discriminant(D)) throw InvalidInput("not a fundamental discriminant");
    double q = static_cast<double>(std::llabs(D));
    double a = D < 0 ? 1.0 : 0.0;
    cplx w1 = 0.5 * (s + a), w2 = 0.5 * (1.0 - s + a);
    double nmin = std::sqrt(60.0 * X * q / kPi) + 2;
    cplx total = 0.0;
    for (i64 n = 1;; ++n) {
        double nn = static_cast<double>(n);
        double y = kPi * nn * nn / q;
        if (nn > nmin) break;
        int chi = kronecker(D, n);
        if (chi == 0) continue;
        double ly = std::log(1.0 / y);  // log(q / (pi n^2))
        cplx t = std::exp(w1 * ly) * gamma_upper(w1, y * X) + std::exp(w2 * ly) * gamma_upper(w2, y / X);
        total += static_cast<double>(chi) * std::pow(nn, a) * t;
    }
    return total;
}

cplx dirichlet_l(i64 D, cplx s, double X) {
    if (D == 1) return riemann_zeta(s);
    double q = static_cast<double>(std::llabs(D));
    double a = D < 0 ? 1.0 : 0.0;
    cplx w1 = 0.5 * (s + a);
    cplx lam = completed_l_standard(D, s, X);
    return lam * std::exp(-w1 * std::log(q / kPi)) * rgamma_c(w1);
}

EulerEval dirichlet_l_euler(i64 D, cplx s, u64 P) {
    if (s.real() <= 1.0) throw InvalidInput("Euler product needs Re s > 1");
    cplx lg = 0.0;
    for (u64 p : primes_up_to(P)) {
        int chi = D == 1 ? 1 : kronecker(D, static_cast<i64>(p));
        if (chi == 0) continue;
        lg -= std::log(1.0 - static_cast<double>(chi) * std::exp(-s * std::log(static_cast<double>(p))));
    }
    double sig = s.real();
    double Pd = static_cast<double>(P);
    // sum_{p > P} |log(1 - p^-s)| <= sum_{n > P} 1.2 n^-sigma
    double tail = 1.2 * std::pow(Pd, 1.0 - sig) / (sig - 1.0);
    return {std::exp(lg), tail};
}

cplx zeta_K(const Field& K, cplx s) {
    if (K.is_rational()) return riemann_zeta(s);
    return riemann_zeta(s) * dirichlet_l(K.disc(), s);
}

EulerEval zeta_K_euler(const Field& K, cplx s, u64 P) {
    auto z = dirichlet_l_euler(1, s, P);
    if (K.is_rational()) return z;
    auto l = dirichlet_l_euler(K.disc(), s, P);
    return {z.value * l.value, z.tail + l.tail};
}

double zeta_K_residue(const Field& K) {
    if (K.is_rational()) return 1.0;
    return dirichlet_l(K.disc(), 1.0).real();
}

}  // namespace nt
