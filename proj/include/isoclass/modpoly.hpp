#ifndef ISOCLASS_MODPOLY_HPP
#define ISOCLASS_MODPOLY_HPP

// Polynomials over F_p for word-sized p, used by the modular gcd/resultant
// and the mod-p stage of factorization in Z[X].

#include "isoclass/poly.hpp"

#include <cstdint>
#include <vector>

namespace isoclass {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 addmod(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    if (s >= p || s < a) s -= p;
    return s;
}
inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }
inline u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}
inline u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); } // p prime

// dense poly over F_p; invariant: no trailing zeros
using FpPoly = std::vector<u64>;

inline void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
inline long fp_deg(const FpPoly& f) { return static_cast<long>(f.size()) - 1; }

inline FpPoly fp_from_zpoly(const ZPoly& f, u64 p) {
    FpPoly r(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) {
        Int m = fdiv_r(f.c[i], Int(static_cast<unsigned long>(p)));
        r[i] = m.get_ui();
    }
    fp_trim(r);
    return r;
}

inline FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
    }
    fp_trim(r);
    return r;
}

inline void fp_divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r, u64 p) {
    r = a;
    q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, 0);
    long db = fp_deg(b);
    u64 il = invmod(b.back(), p);
    while (fp_deg(r) >= db) {
        long k = fp_deg(r) - db;
        u64 f = mulmod(r.back(), il, p);
        q[k] = addmod(q[k], f, p);
        for (long i = 0; i <= db; ++i) r[k + i] = submod(r[k + i], mulmod(f, b[i], p), p);
        fp_trim(r);
    }
    fp_trim(q);
}

inline FpPoly fp_mod(const FpPoly& a, const FpPoly& b, u64 p) {
    FpPoly q, r;
    fp_divmod(a, b, q, r, p);
    return r;
}

inline FpPoly fp_monic(FpPoly f, u64 p) {
    if (f.empty()) return f;
    u64 il = invmod(f.back(), p);
    for (auto& x : f) x = mulmod(x, il, p);
    return f;
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(std::move(a), p);
}

inline FpPoly fp_xgcd(FpPoly a, FpPoly b, FpPoly& u, FpPoly& v, u64 p) {
    FpPoly u0{1}, u1, v0, v1{1};
    fp_trim(u0); fp_trim(v1);
    u0 = {1}; u1 = {}; v0 = {}; v1 = {1};
    while (!b.empty()) {
        FpPoly q, r;
        fp_divmod(a, b, q, r, p);
        a = std::move(b);
        b = std::move(r);
        FpPoly qu = fp_mul(q, u1, p), qv = fp_mul(q, v1, p);
        FpPoly nu = u0, nv = v0;
        // nu = u0 - q*u1, nv = v0 - q*v1
        nu.resize(std::max(nu.size(), qu.size()), 0);
        for (size_t i = 0; i < qu.size(); ++i) nu[i] = submod(nu[i], qu[i], p);
        fp_trim(nu);
        nv.resize(std::max(nv.size(), qv.size()), 0);
        for (size_t i = 0; i < qv.size(); ++i) nv[i] = submod(nv[i], qv[i], p);
        fp_trim(nv);
        u0 = u1; u1 = std::move(nu);
        v0 = v1; v1 = std::move(nv);
    }
    if (!a.empty()) {
        u64 il = invmod(a.back(), p);
        for (auto& x : a) x = mulmod(x, il, p);
        for (auto& x : u0) x = mulmod(x, il, p);
        for (auto& x : v0) x = mulmod(x, il, p);
    }
    u = u0;
    v = v0;
    return a;
}

inline FpPoly fp_powmod(FpPoly base, Int e, const FpPoly& f, u64 p) {
    FpPoly r{1};
    base = fp_mod(base, f, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = fp_mod(fp_mul(r, base, p), f, p);
        base = fp_mod(fp_mul(base, base, p), f, p);
        e >>= 1;
    }
    return r;
}

// factorization of a squarefree monic polynomial over F_p (Cantor-Zassenhaus)
std::vector<FpPoly> fp_factor_squarefree(const FpPoly& f, u64 p, u64 seed = 1);

// resultant over F_p by the Euclidean remainder sequence
u64 fp_resultant(FpPoly a, FpPoly b, u64 p);

} // namespace isoclass

#endif
