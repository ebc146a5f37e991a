#include "nt/arith.hpp"

#include "nt/errors.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace nt {

int kronecker(const BigInt& a, const BigInt& n) { return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t()); }

int kronecker(i64 a, i64 n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -1;
    }
    int v = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++v;
    }
    if (v > 0) {
        if ((a & 1) == 0) return 0;
        i64 r = floor_mod(a, 8);
        if ((v & 1) && (r == 3 || r == 5)) result = -result;
    }
    // Jacobi symbol (a/n), n odd positive
    i64 x = floor_mod(a, n);
    i64 y = n;
    while (x != 0) {
        while ((x & 1) == 0) {
            x >>= 1;
            i64 r = y & 7;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(x, y);
        if ((x & 3) == 3 && (y & 3) == 3) result = -result;
        x %= y;
    }
    return y == 1 ? result : 0;
}

i64 floor_mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 m) {
    __int128 t = 0, nt_ = 1;
    __int128 r = m, nr = a % m;
    while (nr != 0) {
        __int128 q = r / nr;
        std::tie(t, nt_) = std::make_pair(nt_, t - q * nt_);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (r != 1) throw InvalidInput("invmod: not invertible");
    if (t < 0) t += m;
    return static_cast<u64>(t);
}

u64 sqrt_mod_prime(u64 a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    if (powmod(a, (p - 1) / 2, p) != 1) throw InvalidInput("sqrt_mod_prime: non-residue");
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    u64 q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    u64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    u64 m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 i = 0, tt = t;
        while (tt != 1) {
            tt = mulmod(tt, tt, p);
            ++i;
        }
        u64 b = c;
        for (u64 j = 0; j + 1 < m - i; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

u64 ipow(u64 b, unsigned e) {
    u128 r = 1;
    for (unsigned i = 0; i < e; ++i) {
        r *= b;
        if (r > (u128(1) << 63)) throw ResourceError("ipow overflow");
    }
    return static_cast<u64>(r);
}

u64 mod_u64(const BigInt& a, u64 m) {
    return mpz_fdiv_ui(a.get_mpz_t(), m);
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

BigInt isqrt(const BigInt& n) {
    if (n < 0) throw InvalidInput("isqrt of negative");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const BigInt& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

unsigned valuation(const BigInt& n, const BigInt& p) {
    if (n == 0) throw InvalidInput("valuation of zero");
    if (p < 2) throw InvalidInput("valuation: p must be prime");
    BigInt m = abs(n);
    unsigned e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++e;
    }
    return e;
}

unsigned valuation(i64 n, i64 p) {
    if (n == 0) throw InvalidInput("valuation of zero");
    unsigned e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

std::vector<u64> primes_up_to(u64 n) {
    std::vector<u64> out;
    if (n < 2) return out;
    std::vector<bool> comp(n + 1, false);
    for (u64 i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (u64 j = i * i; j <= n; j += i) comp[j] = true;
    }
    return out;
}

namespace {

// Brent's variant of Pollard rho; returns a nontrivial factor or 0 on budget exhaustion.
BigInt rho_split(const BigInt& n, std::mt19937_64& rng, u64 max_iter) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (int attempt = 0; attempt < 20; ++attempt) {
        BigInt c = static_cast<unsigned long>(rng() % 1000000 + 1);
        BigInt y = static_cast<unsigned long>(rng() % 1000000 + 2);
        BigInt g = 1, q = 1, x, ys;
        u64 r = 1, iters = 0;
        const u64 m = 128;
        auto f = [&](const BigInt& v) {
            BigInt t = v * v + c;
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            return t;
        };
        while (g == 1 && iters < max_iter) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    BigInt d = abs(x - y);
                    q = (q * d) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
                iters += m;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                ys = f(ys);
                BigInt d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n && g != 1) return g;
    }
    return 0;
}

void factor_rec(const BigInt& n, std::map<BigInt, unsigned>& acc, std::mt19937_64& rng, const FactorBudget& b) {
    if (n == 1) return;
    if (is_prime(n)) {
        acc[n] += 1;
        return;
    }
    BigInt d = rho_split(n, rng, b.rho_iterations);
    if (d == 0) throw ResourceError("factorize: rho budget exhausted for " + n.get_str());
    factor_rec(d, acc, rng, b);
    factor_rec(n / d, acc, rng, b);
}

}  // namespace

Factorization factorize(const BigInt& n_in, const FactorBudget& budget) {
    if (n_in < 1) throw InvalidInput("factorize: n must be >= 1");
    BigInt n = n_in;
    std::map<BigInt, unsigned> acc;
    for (u64 p = 2; p <= budget.trial_limit; p += (p == 2 ? 1 : 2)) {
        if (mpz_cmp_ui(n.get_mpz_t(), p * p) < 0) break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e) acc[BigInt(static_cast<unsigned long>(p))] = e;
    }
    if (n > 1) {
        std::mt19937_64 rng(budget.seed);
        factor_rec(n, acc, rng, budget);
    }
    Factorization out;
    for (auto& [p, e] : acc) out.push_back({p, e});
    return out;
}

BigInt expand(const Factorization& f) {
    BigInt r = 1;
    for (const auto& pe : f) {
        BigInt t;
        mpz_pow_ui(t.get_mpz_t(), pe.p.get_mpz_t(), pe.e);
        r *= t;
    }
    return r;
}

bool is_squarefree(const BigInt& n) {
    if (n == 0) return false;
    for (const auto& pe : factorize(abs(n))) {
        if (pe.e > 1) return false;
    }
    return true;
}

}  // namespace nt
