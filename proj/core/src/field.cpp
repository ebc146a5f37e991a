#include "nt/field.hpp"

#include "nt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

namespace nt {

const char* to_string(SplitType t) {
    switch (t) {
        case SplitType::Split: return "split";
        case SplitType::Inert: return "inert";
        case SplitType::Ramified: return "ramified";
    }
    return "?";
}

std::string PrimeIdeal::str() const {
    std::ostringstream os;
    if (root < 0) {
        os << "(" << p << ")";
    } else {
        os << "(" << p << ",w-" << root << ")";
    }
    return os.str();
}

unsigned Ideal::valuation(const PrimeIdeal& q) const {
    for (const auto& [pr, e] : factors) {
        if (pr == q) return e;
    }
    return 0;
}

std::string Ideal::str() const {
    if (factors.empty()) return "(1)";
    std::ostringstream os;
    bool first = true;
    for (const auto& [q, e] : factors) {
        if (!first) os << "*";
        first = false;
        os << q.str();
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

IdealFactors merge_factors(const IdealFactors& a, const IdealFactors& b, int sign) {
    std::map<PrimeIdeal, long> acc;
    for (const auto& [q, e] : a) acc[q] += e;
    for (const auto& [q, e] : b) acc[q] += sign * static_cast<long>(e);
    IdealFactors out;
    for (const auto& [q, e] : acc) {
        if (e < 0) throw InvalidDivisor("ideal quotient is not integral");
        if (e > 0) out.emplace_back(q, static_cast<unsigned>(e));
    }
    return out;
}

Field Field::rationals() {
    Field K;
    K.degree_ = 1;
    K.m_ = 1;
    K.disc_ = 1;
    K.T_ = 0;
    K.N_ = 0;
    return K;
}

Field Field::real_quadratic(i64 m) {
    if (m <= 1) throw InvalidField("m must be > 1");
    if (!is_squarefree(BigInt(static_cast<long>(m)))) throw InvalidField("m must be squarefree");
    Field K;
    K.degree_ = 2;
    K.m_ = m;
    if (floor_mod(m, 4) == 1) {
        K.disc_ = m;
        K.T_ = 1;
        K.N_ = (1 - m) / 4;
    } else {
        K.disc_ = 4 * m;
        K.T_ = 0;
        K.N_ = -m;
    }
    return K;
}

std::string Field::name() const {
    if (is_rational()) return "Q";
    return "Q(sqrt(" + std::to_string(m_) + "))";
}

AlgInt Field::mul(const AlgInt& a, const AlgInt& b) const {
    if (is_rational()) return {a.x * b.x, 0};
    BigInt bd = a.y * b.y;
    return {a.x * b.x - BigInt(static_cast<long>(N_)) * bd, a.x * b.y + a.y * b.x + BigInt(static_cast<long>(T_)) * bd};
}

AlgInt Field::pow(AlgInt a, unsigned e) const {
    AlgInt r(1);
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

AlgInt Field::conj(const AlgInt& a) const {
    if (is_rational()) return a;
    return {a.x + a.y * BigInt(static_cast<long>(T_)), -a.y};
}

BigInt Field::norm(const AlgInt& a) const {
    if (is_rational()) return a.x;
    return a.x * a.x + BigInt(static_cast<long>(T_)) * a.x * a.y + BigInt(static_cast<long>(N_)) * a.y * a.y;
}

BigInt Field::trace(const AlgInt& a) const {
    if (is_rational()) return a.x;
    return 2 * a.x + BigInt(static_cast<long>(T_)) * a.y;
}

bool Field::is_unit(const AlgInt& a) const {
    BigInt n = norm(a);
    return n == 1 || n == -1;
}

std::optional<AlgInt> Field::div_int(const AlgInt& a, const BigInt& k) const {
    if (k == 0) throw InvalidInput("division by zero");
    if (!mpz_divisible_p(a.x.get_mpz_t(), k.get_mpz_t()) || !mpz_divisible_p(a.y.get_mpz_t(), k.get_mpz_t()))
        return std::nullopt;
    return AlgInt{a.x / k, a.y / k};
}

long double Field::embed(const AlgInt& a, int place) const {
    long double x = a.x.get_d(), y = a.y.get_d();
    if (is_rational()) return x;
    long double s = std::sqrt(static_cast<long double>(disc_));
    long double w = (static_cast<long double>(T_) + (place == 0 ? s : -s)) / 2.0L;
    return x + y * w;
}

int Field::sign_at(const AlgInt& a, int place) const {
    if (is_rational()) return sgn(a.x);
    // 2*(x + y*w) = (2x + yT) +- y*sqrt(D)
    BigInt A = 2 * a.x + BigInt(static_cast<long>(T_)) * a.y;
    BigInt B = place == 0 ? a.y : BigInt(-a.y);
    int sa = sgn(A), sb = sgn(B);
    if (sa >= 0 && sb >= 0) return (sa == 0 && sb == 0) ? 0 : 1;
    if (sa <= 0 && sb <= 0) return -1;
    BigInt lhs = A * A, rhs = B * B * BigInt(static_cast<long>(disc_));
    if (lhs == rhs) return 0;
    return (lhs > rhs) ? sa : sb;
}

bool Field::is_square(const AlgInt& a) const {
    if (is_rational()) return is_perfect_square(a.x);
    if (a.is_zero()) return true;
    BigInt n = norm(a);
    if (!is_perfect_square(n)) return false;
    BigInt r = isqrt(n);
    BigInt tr = trace(a);
    // beta^2 = a with N(beta) = nb, Tr(beta)^2 = Tr(a) + 2 nb, and a + nb = Tr(beta) * beta
    for (int sn : {1, -1}) {
        BigInt nb = sn * r;
        BigInt t2 = tr + 2 * nb;
        if (t2 < 0 || !is_perfect_square(t2)) continue;
        BigInt t = isqrt(t2);
        if (t == 0) {
            // a rational, beta = c*sqrt(m) with c integral, or beta rational
            if (a.y != 0) continue;
            BigInt c2 = a.x;
            if (mpz_divisible_ui_p(c2.get_mpz_t(), static_cast<unsigned long>(m_))) {
                BigInt q = c2 / BigInt(static_cast<long>(m_));
                if (is_perfect_square(q)) return true;
            }
            continue;
        }
        AlgInt num = add(a, AlgInt(nb));
        auto beta = div_int(num, t);
        if (beta && mul(*beta, *beta) == a) return true;
    }
    return false;
}

std::vector<PrimeIdeal> Field::primes_above(u64 p) const {
    if (!is_prime_u64(p)) throw InvalidInput("primes_above: p must be prime");
    std::vector<PrimeIdeal> out;
    if (is_rational()) {
        out.push_back({p, SplitType::Split, 1, 1, p, -1, 0});
        return out;
    }
    int k = kronecker(static_cast<i64>(disc_), static_cast<i64>(p));
    i64 pp = static_cast<i64>(p);
    auto f_at = [&](i64 r) { return floor_mod(floor_mod(r * r, pp) - floor_mod(T_ * r, pp) + floor_mod(N_, pp), pp); };
    if (k == -1) {
        out.push_back({p, SplitType::Inert, 1, 2, p * p, -1, 0});
    } else if (k == 0) {
        i64 r = 0;
        if (p == 2) {
            r = (f_at(0) == 0) ? 0 : 1;
        } else {
            r = floor_mod(T_ * static_cast<i64>(invmod(2, p)), pp);
        }
        out.push_back({p, SplitType::Ramified, 2, 1, p, r, 0});
    } else {
        std::vector<i64> roots;
        if (p == 2) {
            for (i64 r = 0; r < 2; ++r)
                if (f_at(r) == 0) roots.push_back(r);
        } else {
            u64 s = sqrt_mod_prime(static_cast<u64>(floor_mod(disc_, pp)), p);
            i64 inv2 = static_cast<i64>(invmod(2, p));
            roots.push_back(floor_mod(static_cast<i64>(mulmod(static_cast<u64>(floor_mod(T_ + static_cast<i64>(s), pp)), inv2, p)), pp));
            roots.push_back(floor_mod(static_cast<i64>(mulmod(static_cast<u64>(floor_mod(T_ - static_cast<i64>(s), pp)), inv2, p)), pp));
        }
        std::sort(roots.begin(), roots.end());
        if (roots.size() != 2 || roots[0] == roots[1]) throw InvalidInput("split prime without two roots");
        for (unsigned i = 0; i < 2; ++i) out.push_back({p, SplitType::Split, 1, 1, p, roots[i], i});
    }
    return out;
}

UnitSystem Field::fundamental_unit() const {
    if (is_rational()) throw NotApplicable("Q has unit rank 0");
    // continued fraction of omega = (P + sqrt(d)) / Q
    BigInt d = static_cast<long>(m_);
    BigInt s = isqrt(d);
    BigInt P = (T_ == 1) ? 1 : 0;
    BigInt Q = (T_ == 1) ? 2 : 1;
    BigInt h1 = 1, h2 = 0, k1 = 0, k2 = 1;
    const int cap = 200000;
    for (int it = 0; it < cap; ++it) {
        BigInt a;
        if (Q > 0) {
            mpz_fdiv_q(a.get_mpz_t(), BigInt(P + s).get_mpz_t(), Q.get_mpz_t());
        } else {
            BigInt aq = -Q;
            mpz_fdiv_q(a.get_mpz_t(), BigInt(P + s).get_mpz_t(), aq.get_mpz_t());
            a = -(a + 1);
        }
        BigInt h = a * h1 + h2, k = a * k1 + k2;
        h2 = h1;
        h1 = h;
        k2 = k1;
        k1 = k;
        AlgInt eta{h, -k};
        BigInt n = norm(eta);
        if (n == 1 || n == -1) {
            AlgInt eps = conj(eta);
            if (sign_at(eps, 0) < 0) eps = neg(eps);
            UnitSystem U;
            U.beta = eps;
            U.totally_positive = sign_at(eps, 1) > 0;
            return U;
        }
        BigInt P2 = a * Q - P;
        BigInt Q2 = (d - P2 * P2) / Q;
        P = P2;
        Q = Q2;
    }
    throw ResourceError("fundamental_unit: continued fraction iteration cap reached");
}

unsigned Field::valuation(const AlgInt& a, const PrimeIdeal& q) const {
    if (a.is_zero()) throw InvalidInput("valuation of zero");
    BigInt p = static_cast<unsigned long>(q.p);
    if (is_rational()) return nt::valuation(a.x, p);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.x.get_mpz_t(), a.y.get_mpz_t());
    unsigned s = nt::valuation(g, p);
    BigInt ps;
    mpz_pow_ui(ps.get_mpz_t(), p.get_mpz_t(), s);
    AlgInt b{a.x / ps, a.y / ps};
    switch (q.type) {
        case SplitType::Inert: return s;
        case SplitType::Ramified: return 2 * s + nt::valuation(norm(b), p);
        case SplitType::Split: {
            BigInt r = BigInt(static_cast<long>(q.root));
            BigInt t = b.x + b.y * r;
            if (!mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) return s;
            return s + nt::valuation(norm(b), p);
        }
    }
    return 0;
}

void Field::hnf_of(std::vector<std::pair<BigInt, BigInt>> gens, BigInt& a, BigInt& b, BigInt& c) const {
    BigInt ga = 0;
    std::pair<BigInt, BigInt> piv{0, 0};
    for (auto& v : gens) {
        if (v.second == 0) {
            mpz_gcd(ga.get_mpz_t(), ga.get_mpz_t(), v.first.get_mpz_t());
            continue;
        }
        if (piv.second == 0) {
            piv = v;
            continue;
        }
        BigInt g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), piv.second.get_mpz_t(), v.second.get_mpz_t());
        std::pair<BigInt, BigInt> np{s * piv.first + t * v.first, g};
        BigInt u = v.second / g, w = piv.second / g;
        BigInt other = u * piv.first - w * v.first;
        mpz_gcd(ga.get_mpz_t(), ga.get_mpz_t(), other.get_mpz_t());
        piv = np;
    }
    if (ga == 0 || piv.second == 0) throw InvalidInput("hnf: lattice not of full rank");
    if (piv.second < 0) {
        piv.first = -piv.first;
        piv.second = -piv.second;
    }
    a = abs(ga);
    c = piv.second;
    mpz_fdiv_r(b.get_mpz_t(), piv.first.get_mpz_t(), a.get_mpz_t());
}

IdealFactors Field::factor_hnf(const BigInt& a, const BigInt& b, const BigInt& c) const {
    IdealFactors out;
    BigInt n = a * c;
    if (n == 1) return out;
    AlgInt g1{a, 0}, g2{b, c};
    for (const auto& pe : factorize(n)) {
        for (const auto& q : primes_above(pe.p.get_ui())) {
            unsigned v = valuation(g1, q);
            if (!is_rational()) v = std::min(v, valuation(g2, q));
            if (v) out.emplace_back(q, v);
        }
    }
    return out;
}

Ideal Field::from_hnf(BigInt a, BigInt b, BigInt c) const {
    Ideal I;
    I.a = std::move(a);
    I.b = std::move(b);
    I.c = std::move(c);
    I.factors = factor_hnf(I.a, I.b, I.c);
    return I;
}

Ideal Field::unit_ideal() const { return Ideal{}; }

Ideal Field::ideal(const PrimeIdeal& q) const {
    Ideal I;
    BigInt p = static_cast<unsigned long>(q.p);
    if (is_rational()) {
        I.a = p;
    } else if (q.type == SplitType::Inert) {
        I.a = p;
        I.b = 0;
        I.c = p;
    } else {
        I.a = p;
        I.c = 1;
        mpz_fdiv_r(I.b.get_mpz_t(), BigInt(-static_cast<long>(q.root)).get_mpz_t(), p.get_mpz_t());
    }
    I.factors = {{q, 1}};
    return I;
}

Ideal Field::principal(const AlgInt& v) const {
    if (v.is_zero()) throw InvalidInput("zero ideal");
    if (is_rational()) return from_hnf(abs(v.x), 0, 1);
    AlgInt vw = mul(v, AlgInt{0, 1});
    BigInt a, b, c;
    hnf_of({{v.x, v.y}, {vw.x, vw.y}}, a, b, c);
    return from_hnf(a, b, c);
}

Ideal Field::multiply(const Ideal& I, const Ideal& J) const {
    Ideal R;
    if (is_rational()) {
        R.a = I.a * J.a;
    } else {
        AlgInt i1{I.a, 0}, i2{I.b, I.c}, j1{J.a, 0}, j2{J.b, J.c};
        std::vector<std::pair<BigInt, BigInt>> g;
        for (const auto& x : {i1, i2})
            for (const auto& y : {j1, j2}) {
                AlgInt z = mul(x, y);
                g.emplace_back(z.x, z.y);
            }
        hnf_of(std::move(g), R.a, R.b, R.c);
    }
    R.factors = merge_factors(I.factors, J.factors);
    return R;
}

Ideal Field::pow(const Ideal& I, unsigned e) const {
    Ideal R = unit_ideal();
    for (unsigned i = 0; i < e; ++i) R = multiply(R, I);
    return R;
}

Ideal Field::from_factors(IdealFactors f) const {
    std::sort(f.begin(), f.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    Ideal R = unit_ideal();
    for (const auto& [q, e] : f) R = multiply(R, pow(ideal(q), e));
    return R;
}

Ideal Field::quotient(const Ideal& I, const Ideal& J) const { return from_factors(merge_factors(I.factors, J.factors, -1)); }

bool Field::divides(const Ideal& d, const Ideal& n) const {
    for (const auto& [q, e] : d.factors) {
        if (n.valuation(q) < e) return false;
    }
    return true;
}

bool Field::coprime(const Ideal& I, const Ideal& J) const {
    for (const auto& [q, e] : I.factors) {
        if (J.valuation(q) > 0) return false;
    }
    return true;
}

bool Field::contains(const Ideal& I, const AlgInt& v) const {
    if (!mpz_divisible_p(v.y.get_mpz_t(), I.c.get_mpz_t())) return false;
    BigInt k = v.y / I.c;
    BigInt x = v.x - k * I.b;
    return mpz_divisible_p(x.get_mpz_t(), I.a.get_mpz_t()) != 0;
}

AlgInt Field::reduce(const AlgInt& v, const Ideal& I) const {
    BigInt k, y;
    mpz_fdiv_qr(k.get_mpz_t(), y.get_mpz_t(), v.y.get_mpz_t(), I.c.get_mpz_t());
    BigInt x = v.x - k * I.b;
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), I.a.get_mpz_t());
    return {x, y};
}

std::vector<AlgInt> Field::residues(const Ideal& I, u64 budget) const {
    BigInt n = I.norm();
    if (n > BigInt(static_cast<unsigned long>(budget))) throw ResourceError("residues: norm exceeds enumeration budget");
    u64 A = I.a.get_ui(), C = I.c.get_ui();
    std::vector<AlgInt> out;
    out.reserve(A * C);
    for (u64 y = 0; y < C; ++y)
        for (u64 x = 0; x < A; ++x) out.emplace_back(BigInt(static_cast<unsigned long>(x)), BigInt(static_cast<unsigned long>(y)));
    return out;
}

std::vector<Ideal> Field::divisors(const Ideal& I) const {
    std::vector<IdealFactors> acc{{}};
    for (const auto& [q, e] : I.factors) {
        std::vector<IdealFactors> next;
        for (const auto& f : acc)
            for (unsigned j = 0; j <= e; ++j) {
                auto g = f;
                if (j) g.emplace_back(q, j);
                next.push_back(std::move(g));
            }
        acc = std::move(next);
    }
    std::vector<Ideal> out;
    for (auto& f : acc) out.push_back(from_factors(f));
    std::sort(out.begin(), out.end(), [](const Ideal& x, const Ideal& y) {
        if (x.norm() != y.norm()) return x.norm() < y.norm();
        return x.str() < y.str();
    });
    return out;
}

std::vector<Ideal> Field::enumerate_by_norm(u64 bound, u64 max_bound) const {
    if (bound > max_bound) throw ResourceError("enumerate_by_norm: bound exceeds B_max");
    std::vector<u64> spf(bound + 1, 0);
    for (u64 i = 2; i <= bound; ++i) {
        if (spf[i]) continue;
        for (u64 j = i; j <= bound; j += i)
            if (!spf[j]) spf[j] = i;
    }
    std::map<u64, std::vector<PrimeIdeal>> above;
    auto primes_of = [&](u64 p) -> const std::vector<PrimeIdeal>& {
        auto it = above.find(p);
        if (it == above.end()) it = above.emplace(p, primes_above(p)).first;
        return it->second;
    };
    std::vector<Ideal> out;
    for (u64 n = 1; n <= bound; ++n) {
        std::vector<IdealFactors> acc{{}};
        u64 r = n;
        bool ok = true;
        while (r > 1 && ok) {
            u64 p = spf[r];
            unsigned e = 0;
            while (r % p == 0) {
                r /= p;
                ++e;
            }
            const auto& qs = primes_of(p);
            std::vector<IdealFactors> local;
            if (qs.size() == 2) {
                for (unsigned i = 0; i <= e; ++i) {
                    IdealFactors f;
                    if (i) f.emplace_back(qs[0], i);
                    if (e - i) f.emplace_back(qs[1], e - i);
                    local.push_back(f);
                }
            } else if (qs[0].type == SplitType::Inert) {
                if (e % 2 == 0) local.push_back({{qs[0], e / 2}});
            } else {
                local.push_back({{qs[0], e}});
            }
            if (local.empty()) ok = false;
            std::vector<IdealFactors> next;
            for (const auto& f : acc)
                for (const auto& g : local) {
                    auto h = f;
                    h.insert(h.end(), g.begin(), g.end());
                    next.push_back(std::move(h));
                }
            acc = std::move(next);
        }
        if (!ok) continue;
        std::vector<Ideal> batch;
        for (auto& f : acc) batch.push_back(from_factors(f));
        std::sort(batch.begin(), batch.end(), [](const Ideal& x, const Ideal& y) {
            if (x.b != y.b) return x.b < y.b;
            return x.c < y.c;
        });
        for (auto& I : batch) out.push_back(std::move(I));
    }
    return out;
}

bool Field::validate_hyp_div(const PrimeIdeal& p, unsigned h, const AlgInt& rho, unsigned k) const {
    if (h == 0) return false;
    if (k % h != 0) return false;
    if (rho.is_zero()) return false;
    return principal(rho) == pow(ideal(p), h);
}

std::string Field::format(const AlgInt& v) const {
    if (is_rational() || v.y == 0) return v.x.get_str();
    std::ostringstream os;
    os << v.x.get_str() << (v.y < 0 ? "-" : "+") << BigInt(abs(v.y)).get_str() << "w";
    return os.str();
}

}  // namespace nt
