#ifndef ISOCLASS_POLY_HPP
#define ISOCLASS_POLY_HPP

// Dense univariate polynomials over an exact coefficient ring. The zero
// polynomial is the empty coefficient vector; otherwise the leading
// coefficient is nonzero.

#include "isoclass/bigint.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <vector>

namespace isoclass {

template <class T>
struct poly {
    std::vector<T> c; // c[i] multiplies X^i

    poly() = default;
    explicit poly(const T& a) {
        if (!(a == T(0))) c.push_back(a);
    }
    explicit poly(std::vector<T> v) : c(std::move(v)) { trim(); }

    static poly X() { return poly(std::vector<T>{T(0), T(1)}); }

    void trim() {
        while (!c.empty() && c.back() == T(0)) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(c.size()) - 1; }
    const T& lead() const {
        assert(!c.empty());
        return c.back();
    }
    T coeff(size_t i) const { return i < c.size() ? c[i] : T(0); }

    bool operator==(const poly& o) const { return c == o.c; }
    bool operator!=(const poly& o) const { return !(*this == o); }
};

template <class T>
poly<T> operator+(const poly<T>& a, const poly<T>& b) {
    poly<T> r;
    r.c.resize(std::max(a.c.size(), b.c.size()), T(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
    r.trim();
    return r;
}

template <class T>
poly<T> operator-(const poly<T>& a) {
    poly<T> r = a;
    for (auto& x : r.c) x = T(0) - x;
    return r;
}

template <class T>
poly<T> operator-(const poly<T>& a, const poly<T>& b) {
    return a + (-b);
}

template <class T>
poly<T> operator*(const poly<T>& a, const poly<T>& b) {
    if (a.is_zero() || b.is_zero()) return {};
    poly<T> r;
    r.c.assign(a.c.size() + b.c.size() - 1, T(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == T(0)) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

template <class T>
poly<T> operator*(const T& s, const poly<T>& a) {
    poly<T> r = a;
    for (auto& x : r.c) x = s * x;
    r.trim();
    return r;
}

template <class T>
poly<T> shift(const poly<T>& a, size_t k) { // multiply by X^k
    if (a.is_zero()) return a;
    poly<T> r;
    r.c.assign(a.c.size() + k, T(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i + k] = a.c[i];
    return r;
}

template <class T>
poly<T> pow(const poly<T>& a, unsigned long e) {
    poly<T> r(T(1));
    poly<T> b = a;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

template <class T, class S>
S eval(const poly<T>& f, const S& x) {
    S r(0);
    for (size_t i = f.c.size(); i-- > 0;) r = r * x + S(f.c[i]);
    return r;
}

template <class T>
poly<T> derivative(const poly<T>& f) {
    poly<T> r;
    if (f.c.size() <= 1) return r;
    r.c.resize(f.c.size() - 1);
    for (size_t i = 1; i < f.c.size(); ++i) r.c[i - 1] = T(static_cast<long>(i)) * f.c[i];
    r.trim();
    return r;
}

// division with remainder over a field
template <class T>
void divmod(const poly<T>& a, const poly<T>& b, poly<T>& q, poly<T>& r) {
    if (b.is_zero()) throw std::domain_error("poly division by zero");
    q = poly<T>();
    r = a;
    long db = b.degree();
    T inv_lead = T(1) / b.lead();
    while (!r.is_zero() && r.degree() >= db) {
        long k = r.degree() - db;
        T f = r.lead() * inv_lead;
        if (q.c.size() < static_cast<size_t>(k + 1)) q.c.resize(k + 1, T(0));
        q.c[k] = q.c[k] + f;
        for (long i = 0; i <= db; ++i) r.c[k + i] = r.c[k + i] - f * b.c[i];
        r.trim();
    }
    q.trim();
}

template <class T>
poly<T> operator/(const poly<T>& a, const poly<T>& b) {
    poly<T> q, r;
    divmod(a, b, q, r);
    return q;
}

template <class T>
poly<T> operator%(const poly<T>& a, const poly<T>& b) {
    poly<T> q, r;
    divmod(a, b, q, r);
    return r;
}

template <class T>
poly<T> monic(const poly<T>& a) {
    if (a.is_zero()) return a;
    return (T(1) / a.lead()) * a;
}

// monic gcd over a field
template <class T>
poly<T> gcd(poly<T> a, poly<T> b) {
    while (!b.is_zero()) {
        poly<T> r = a % b;
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return monic(a);
}

// g = gcd(a,b) = u*a + v*b, g monic
template <class T>
poly<T> xgcd(const poly<T>& a, const poly<T>& b, poly<T>& u, poly<T>& v) {
    poly<T> r0 = a, r1 = b;
    poly<T> u0(T(1)), u1, v0, v1(T(1));
    while (!r1.is_zero()) {
        poly<T> q, r;
        divmod(r0, r1, q, r);
        r0 = r1; r1 = r;
        poly<T> nu = u0 - q * u1, nv = v0 - q * v1;
        u0 = u1; u1 = nu;
        v0 = v1; v1 = nv;
    }
    if (r0.is_zero()) { u = u0; v = v0; return r0; }
    T s = T(1) / r0.lead();
    u = s * u0;
    v = s * v0;
    return s * r0;
}

using QPoly = poly<Rat>;
using ZPoly = poly<Int>;

inline QPoly to_qpoly(const ZPoly& f) {
    QPoly r;
    r.c.assign(f.c.begin(), f.c.end());
    return r;
}

// clear denominators, return primitive integer polynomial with positive lead
inline ZPoly primitive_zpoly(const QPoly& f, Rat* scale = nullptr) {
    if (f.is_zero()) {
        if (scale) *scale = 1;
        return {};
    }
    Int den = 1;
    for (auto& x : f.c) den = lcm(den, x.get_den());
    ZPoly g;
    g.c.reserve(f.c.size());
    for (auto& x : f.c) g.c.push_back(Int(x * den));
    Int cont = 0;
    for (auto& x : g.c) cont = gcd(cont, x);
    if (g.c.back() < 0) cont = -cont;
    for (auto& x : g.c) x = divexact(x, cont);
    if (scale) *scale = Rat(cont) / Rat(den);
    return g;
}

inline Int content(const ZPoly& f) {
    Int c = 0;
    for (auto& x : f.c) c = gcd(c, x);
    return c;
}

inline ZPoly primitive_part(const ZPoly& f) {
    if (f.is_zero()) return f;
    Int c = content(f);
    if (f.c.back() < 0) c = -c;
    ZPoly r = f;
    for (auto& x : r.c) x = divexact(x, c);
    return r;
}

// exact division in Z[X]; throws if not divisible
inline ZPoly zdivexact(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw std::domain_error("zdivexact by zero");
    ZPoly q, r = a;
    long db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        long k = r.degree() - db;
        if (!divides(b.lead(), r.lead())) throw std::domain_error("zdivexact: not divisible");
        Int f = divexact(r.lead(), b.lead());
        if (q.c.size() < static_cast<size_t>(k + 1)) q.c.resize(k + 1, 0);
        q.c[k] += f;
        for (long i = 0; i <= db; ++i) r.c[k + i] -= f * b.c[i];
        r.trim();
    }
    if (!r.is_zero()) throw std::domain_error("zdivexact: nonzero remainder");
    q.trim();
    return q;
}

inline bool zdivides(const ZPoly& b, const ZPoly& a, ZPoly* quot = nullptr) {
    try {
        ZPoly q = zdivexact(a, b);
        if (quot) *quot = q;
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

} // namespace isoclass

#endif
