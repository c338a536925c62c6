#ifndef ISOCLASS_NUMBERFIELD_HPP
#define ISOCLASS_NUMBERFIELD_HPP

// Number fields Q[X]/(f) for a monic integer minimal polynomial, and their
// elements. Rationals embed as elements with a null field pointer, so
// nf_elem works as a coefficient type for poly<> without a field context.

#include "isoclass/poly.hpp"
#include "isoclass/zfactor.hpp"

#include <memory>
#include <string>

namespace isoclass {

struct number_field;
using nf_ptr = std::shared_ptr<const number_field>;

struct number_field {
    ZPoly minpoly; // monic, irreducible over Q
    std::string name;

    static nf_ptr create(const ZPoly& f, std::string name = "a", bool check_irreducible = true) {
        if (f.degree() < 2) throw std::invalid_argument("number field needs degree >= 2");
        if (f.lead() != 1) throw std::invalid_argument("number field minpoly must be monic");
        if (check_irreducible && !zis_irreducible(f))
            throw std::invalid_argument("number field minpoly must be irreducible");
        auto K = std::make_shared<number_field>();
        K->minpoly = f;
        K->name = std::move(name);
        return K;
    }

    long degree() const { return minpoly.degree(); }

    // Q(sqrt(d)) for squarefree-ish d (any non-square integer works)
    static nf_ptr quadratic_sqrt(const Int& d) {
        ZPoly f;
        f.c = {-d, 0, 1};
        return create(f, "s", false);
    }
};

inline bool same_field(const nf_ptr& a, const nf_ptr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->minpoly == b->minpoly;
}

struct nf_elem {
    nf_ptr K;                // null: rational value in coords[0]
    std::vector<Rat> coords; // length K->degree(), little-endian in powers of the generator

    nf_elem() : coords{Rat(0)} {}
    nf_elem(long v) : coords{Rat(v)} {}
    nf_elem(const Rat& v) : coords{v} {}
    nf_elem(const Int& v) : coords{Rat(v)} {}
    nf_elem(nf_ptr field, std::vector<Rat> c) : K(std::move(field)), coords(std::move(c)) {
        coords.resize(K->degree(), Rat(0));
    }

    static nf_elem gen(const nf_ptr& K) {
        std::vector<Rat> c(K->degree(), Rat(0));
        c[1] = 1;
        return nf_elem(K, std::move(c));
    }

    bool is_rational() const {
        if (!K) return true;
        for (size_t i = 1; i < coords.size(); ++i)
            if (coords[i] != 0) return false;
        return true;
    }
    Rat rational_value() const {
        if (!is_rational()) throw std::domain_error("element is not rational");
        return coords[0];
    }
    bool is_zero_elem() const {
        for (auto& c : coords)
            if (c != 0) return false;
        return true;
    }
};

namespace detail {
inline void promote(nf_elem& a, nf_elem& b) {
    if (same_field(a.K, b.K)) return;
    if (!a.K && b.K) {
        Rat v = a.coords[0];
        a.K = b.K;
        a.coords.assign(b.K->degree(), Rat(0));
        a.coords[0] = v;
        return;
    }
    if (a.K && !b.K) {
        promote(b, a);
        return;
    }
    throw std::domain_error("nf_elem arithmetic across different fields");
}
} // namespace detail

inline bool operator==(const nf_elem& a, const nf_elem& b) {
    nf_elem x = a, y = b;
    detail::promote(x, y);
    return x.coords == y.coords;
}
inline bool operator!=(const nf_elem& a, const nf_elem& b) { return !(a == b); }

inline nf_elem operator+(const nf_elem& a, const nf_elem& b) {
    nf_elem x = a, y = b;
    detail::promote(x, y);
    for (size_t i = 0; i < x.coords.size(); ++i) x.coords[i] += y.coords[i];
    return x;
}
inline nf_elem operator-(const nf_elem& a, const nf_elem& b) {
    nf_elem x = a, y = b;
    detail::promote(x, y);
    for (size_t i = 0; i < x.coords.size(); ++i) x.coords[i] -= y.coords[i];
    return x;
}
inline nf_elem operator-(const nf_elem& a) {
    nf_elem x = a;
    for (auto& c : x.coords) c = -c;
    return x;
}

inline nf_elem operator*(const nf_elem& a, const nf_elem& b) {
    nf_elem x = a, y = b;
    detail::promote(x, y);
    if (!x.K) return nf_elem(x.coords[0] * y.coords[0]);
    size_t n = x.coords.size();
    std::vector<Rat> prod(2 * n - 1, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        if (x.coords[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) prod[i + j] += x.coords[i] * y.coords[j];
    }
    // reduce modulo the monic minimal polynomial
    const ZPoly& f = x.K->minpoly;
    for (size_t d = 2 * n - 2; d >= n; --d) {
        Rat lead = prod[d];
        if (lead == 0) continue;
        prod[d] = 0;
        for (size_t i = 0; i < n; ++i) prod[d - n + i] -= lead * Rat(f.c[i]);
    }
    prod.resize(n);
    return nf_elem(x.K, std::move(prod));
}

nf_elem inverse(const nf_elem& a);

inline nf_elem operator/(const nf_elem& a, const nf_elem& b) { return a * inverse(b); }

inline nf_elem inverse(const nf_elem& a) {
    if (a.is_zero_elem()) throw std::domain_error("nf_elem inverse of zero");
    if (!a.K) return nf_elem(Rat(1) / a.coords[0]);
    QPoly ap(std::vector<Rat>(a.coords));
    QPoly f = to_qpoly(a.K->minpoly);
    QPoly u, v;
    QPoly g = xgcd(ap, f, u, v);
    if (g.degree() != 0) throw std::domain_error("nf_elem not invertible (reducible minpoly?)");
    QPoly inv = (Rat(1) / g.c[0]) * u;
    std::vector<Rat> c(a.K->degree(), Rat(0));
    for (size_t i = 0; i < inv.c.size(); ++i) c[i] = inv.c[i];
    return nf_elem(a.K, std::move(c));
}

// apply the field homomorphism sending the generator to gen_image
inline nf_elem apply_hom(const nf_elem& a, const nf_elem& gen_image) {
    nf_elem r(Rat(0));
    for (size_t i = a.coords.size(); i-- > 0;) r = r * gen_image + nf_elem(a.coords[i]);
    return r;
}

// matrix of multiplication by a on the power basis
inline std::vector<std::vector<Rat>> mult_matrix(const nf_elem& a) {
    if (!a.K) throw std::domain_error("mult_matrix needs a field element");
    size_t n = a.K->degree();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    nf_elem cur = a;
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < n; ++i) m[i][j] = cur.coords[i];
        if (j + 1 < n) cur = cur * nf_elem::gen(a.K);
    }
    return m;
}

Rat nf_trace(const nf_elem& a);
Rat nf_norm(const nf_elem& a);

inline Rat nf_trace(const nf_elem& a) {
    if (!a.K) return a.coords[0] * Rat((long)1);
    auto m = mult_matrix(a);
    Rat t = 0;
    for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

// characteristic polynomial of multiplication by a (degree n), exact
QPoly nf_charpoly(const nf_elem& a);

inline Rat nf_norm(const nf_elem& a) {
    if (!a.K) return a.coords[0];
    QPoly cp = nf_charpoly(a);
    Rat n0 = cp.c[0];
    return (cp.degree() % 2) ? -n0 : n0;
}

// all roots of the field's own minimal polynomial inside the field
std::vector<nf_elem> field_automorphism_images(const nf_ptr& K);

// roots in K of a polynomial with rational coefficients (Trager-style)
std::vector<nf_elem> roots_in_field(const QPoly& f, const nf_ptr& K);

// does d (rational) have a square root in K? returns it if so
std::optional<nf_elem> sqrt_in_field(const Rat& d, const nf_ptr& K);

std::string to_string(const nf_elem& a);

} // namespace isoclass

#endif
