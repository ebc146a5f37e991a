#include "nt/local.hpp"

#include "nt/errors.hpp"

namespace nt {

namespace {

unsigned vp(u64 x, u64 p, unsigned cap) {
    if (x == 0) return cap;
    unsigned e = 0;
    while (x % p == 0) {
        x /= p;
        ++e;
    }
    return e;
}

}  // namespace

u64 Completion::reduce(__int128 v) const {
    __int128 m = static_cast<__int128>(mod_);
    v %= m;
    if (v < 0) v += m;
    return static_cast<u64>(v);
}

Completion::Completion(const Field& K, const PrimeIdeal& q, unsigned digits) : q_(q), N_(digits) {
    if (digits == 0) throw InvalidInput("Completion: precision must be positive");
    if (q.p == 2 && q.type != SplitType::Split) throw UnsupportedPrime("non-split prime above 2");
    u128 m = 1;
    for (unsigned i = 0; i < digits; ++i) {
        m *= q.p;
        if (m >= (u128(1) << 62)) throw ResourceError("Completion: p^N exceeds 2^62");
    }
    mod_ = static_cast<u64>(m);
    T_ = K.trace_omega();
    Nw_ = K.norm_omega();
    if (K.is_rational()) {
        kind_ = Kind::Z;
        return;
    }
    switch (q.type) {
        case SplitType::Split: {
            kind_ = Kind::Z;
            // Newton iteration on f(x) = x^2 - T x + N starting from the residue root
            u64 r = static_cast<u64>(q.root);
            for (unsigned it = 0; it < 2 * digits + 4; ++it) {
                __int128 rr = r;
                u64 f = reduce(rr * rr - static_cast<__int128>(T_) * rr + Nw_);
                if (f == 0) break;
                u64 fp = reduce(2 * rr - T_);
                r = reduce(static_cast<__int128>(r) - static_cast<__int128>(mulmod(f, invmod(fp, mod_), mod_)));
            }
            root_ = r;
            break;
        }
        case SplitType::Inert:
            kind_ = Kind::Inert;
            c1_ = reduce(T_);
            c0_ = reduce(-static_cast<__int128>(Nw_));
            break;
        case SplitType::Ramified: {
            kind_ = Kind::Ramified;
            i64 r = q.root;
            root_ = static_cast<u64>(r);
            __int128 fr = static_cast<__int128>(r) * r - static_cast<__int128>(T_) * r + Nw_;
            c1_ = reduce(T_ - 2 * r);
            c0_ = reduce(-fr);
            __int128 unit = -fr / static_cast<__int128>(q.p);
            if ((-fr) % static_cast<__int128>(q.p) != 0 || reduce(unit) % q.p == 0)
                throw InvalidInput("Completion: ramified root is not Eisenstein");
            c0_unit_inv_ = invmod(reduce(unit), mod_);
            break;
        }
    }
}

Completion::Elt Completion::image(const AlgInt& a) const {
    u64 x = mod_u64(a.x, mod_), y = mod_u64(a.y, mod_);
    switch (kind_) {
        case Kind::Z:
            return {static_cast<u64>((static_cast<u128>(y) * root_ + x) % mod_), 0};
        case Kind::Inert:
            return {x, y};
        case Kind::Ramified:
            return {static_cast<u64>((static_cast<u128>(y) * root_ + x) % mod_), y};
    }
    return {};
}

Completion::Elt Completion::from_int(i64 v) const { return {reduce(v), 0}; }

Completion::Elt Completion::add(const Elt& a, const Elt& b) const {
    u64 x = a.x + b.x, y = a.y + b.y;
    if (x >= mod_) x -= mod_;
    if (y >= mod_) y -= mod_;
    return {x, y};
}

Completion::Elt Completion::sub(const Elt& a, const Elt& b) const {
    u64 x = a.x >= b.x ? a.x - b.x : a.x + mod_ - b.x;
    u64 y = a.y >= b.y ? a.y - b.y : a.y + mod_ - b.y;
    return {x, y};
}

Completion::Elt Completion::neg(const Elt& a) const { return sub(Elt{}, a); }

Completion::Elt Completion::mul(const Elt& a, const Elt& b) const {
    if (kind_ == Kind::Z) return {mulmod(a.x, b.x, mod_), 0};
    u64 yy = mulmod(a.y, b.y, mod_);
    u64 x = (mulmod(a.x, b.x, mod_) + mulmod(c0_, yy, mod_)) % mod_;
    u64 y = (static_cast<u128>(mulmod(a.x, b.y, mod_)) + mulmod(a.y, b.x, mod_) + mulmod(c1_, yy, mod_)) % mod_;
    return {x, y};
}

Completion::Elt Completion::scale(const Elt& a, u64 k) const {
    k %= mod_;
    return {mulmod(a.x, k, mod_), mulmod(a.y, k, mod_)};
}

unsigned Completion::val(const Elt& a) const {
    u64 p = q_.p;
    switch (kind_) {
        case Kind::Z: return vp(a.x, p, N_);
        case Kind::Inert: return std::min(vp(a.x, p, N_), vp(a.y, p, N_));
        case Kind::Ramified: return std::min(2 * vp(a.x, p, N_), 2 * vp(a.y, p, N_) + 1);
    }
    return 0;
}

Completion::Elt Completion::uniformizer() const {
    if (kind_ == Kind::Ramified) return {0, 1};
    return {q_.p % mod_, 0};
}

Completion::Elt Completion::pi_pow(unsigned j) const {
    Elt r{1 % mod_, 0}, u = uniformizer();
    for (unsigned i = 0; i < j; ++i) r = mul(r, u);
    return r;
}

Completion::Elt Completion::div_pi(Elt a, unsigned j) const {
    if (val(a) < j) throw InvalidInput("div_pi: valuation too small");
    u64 p = q_.p;
    for (unsigned i = 0; i < j; ++i) {
        if (kind_ != Kind::Ramified) {
            a.x /= p;
            a.y /= p;
            continue;
        }
        // (x + y theta) / theta = y + x (theta - c1) / c0, with p | x
        u64 t = mulmod(a.x / p, c0_unit_inv_, mod_);
        a = {sub(Elt{a.y, 0}, Elt{mulmod(t, c1_, mod_), 0}).x, t};
    }
    return a;
}

int Completion::unit_symbol(const Elt& a) const {
    if (val(a) > 0) return 0;
    u64 p = q_.p;
    if (p == 2) {
        u64 r = a.x & 7;
        return (r == 1 || r == 7) ? 1 : -1;
    }
    if (kind_ != Kind::Inert) {
        u64 e = powmod(a.x % p, (p - 1) / 2, p);
        return e == 1 ? 1 : -1;
    }
    // a^((p^2-1)/2) in F_p[theta]
    u64 c0 = c0_ % p, c1 = c1_ % p;
    auto fmul = [&](std::pair<u64, u64> u, std::pair<u64, u64> v) {
        u64 yy = u.second * v.second % p;
        return std::pair<u64, u64>{(u.first * v.first + c0 * yy) % p, (u.first * v.second + u.second * v.first + c1 * yy) % p};
    };
    std::pair<u64, u64> r{1, 0}, b{a.x % p, a.y % p};
    u64 e = (p * p - 1) / 2;
    while (e) {
        if (e & 1) r = fmul(r, b);
        b = fmul(b, b);
        e >>= 1;
    }
    if (r.second != 0) throw InvalidInput("unit_symbol: residue norm not in F_p");
    return r.first == 1 ? 1 : -1;
}

u64 Completion::residue_count(unsigned M) const {
    if (kind_ == Kind::Inert) return ipow(q_.p, 2 * M);
    return ipow(q_.p, M);
}

std::vector<Completion::Elt> Completion::residues(unsigned M) const {
    u64 p = q_.p;
    u64 nx = 1, ny = 1;
    switch (kind_) {
        case Kind::Z: nx = ipow(p, M); break;
        case Kind::Inert: nx = ny = ipow(p, M); break;
        case Kind::Ramified:
            nx = ipow(p, (M + 1) / 2);
            ny = ipow(p, M / 2);
            break;
    }
    if (nx > mod_ || ny > mod_) throw ResourceError("residues: precision below requested level");
    std::vector<Elt> out;
    out.reserve(nx * ny);
    for (u64 y = 0; y < ny; ++y)
        for (u64 x = 0; x < nx; ++x) out.push_back({x, y});
    return out;
}

std::vector<Completion::Elt> Completion::digit_set() const {
    std::vector<Elt> out;
    u64 p = q_.p;
    if (kind_ == Kind::Inert) {
        for (u64 y = 0; y < p; ++y)
            for (u64 x = 0; x < p; ++x) out.push_back({x, y});
    } else {
        for (u64 x = 0; x < p; ++x) out.push_back({x, 0});
    }
    return out;
}

}  // namespace nt
