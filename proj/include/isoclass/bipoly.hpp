#ifndef ISOCLASS_BIPOLY_HPP
#define ISOCLASS_BIPOLY_HPP

// Sparse bivariate integer polynomials, canonical term order, exact
// arithmetic. Large enough for the composed modular polynomials (degree
// ~50 per variable, coefficient sizes in the hundreds of digits).

#include "isoclass/poly.hpp"

#include <map>
#include <utility>

namespace isoclass {

struct BiPoly {
    // (i, j) -> coefficient of X^i Y^j; no zero coefficients stored
    std::map<std::pair<unsigned, unsigned>, Int> t;

    bool is_zero() const { return t.empty(); }
    void add_term(unsigned i, unsigned j, const Int& c) {
        if (c == 0) return;
        auto it = t.find({i, j});
        if (it == t.end()) {
            t.emplace(std::make_pair(i, j), c);
        } else {
            it->second += c;
            if (it->second == 0) t.erase(it);
        }
    }
    Int coeff(unsigned i, unsigned j) const {
        auto it = t.find({i, j});
        return it == t.end() ? Int(0) : it->second;
    }
    long deg_x() const {
        long d = -1;
        for (auto& [k, v] : t) d = std::max(d, (long)k.first);
        return d;
    }
    long deg_y() const {
        long d = -1;
        for (auto& [k, v] : t) d = std::max(d, (long)k.second);
        return d;
    }
    bool operator==(const BiPoly& o) const { return t == o.t; }

    bool is_symmetric() const {
        for (auto& [k, v] : t)
            if (coeff(k.second, k.first) != v) return false;
        return true;
    }

    BiPoly transpose() const {
        BiPoly r;
        for (auto& [k, v] : t) r.t[{k.second, k.first}] = v;
        return r;
    }
};

BiPoly bipoly_add(const BiPoly& a, const BiPoly& b);
BiPoly bipoly_mul(const BiPoly& a, const BiPoly& b);
BiPoly bipoly_scale(const BiPoly& a, const Int& s);

// substitute Y = value (exact), producing a univariate polynomial in X
ZPoly bipoly_eval_y(const BiPoly& f, const Int& y);
Rat bipoly_eval(const BiPoly& f, const Rat& x, const Rat& y);

// treat f as polynomial in X with coefficients in Z[Y]
std::vector<ZPoly> bipoly_x_coeffs(const BiPoly& f);

// exact division of a by b where b is monic in X; throws if remainder nonzero
BiPoly bipoly_divexact_monic_x(const BiPoly& a, const BiPoly& b);
bool bipoly_divides_monic_x(const BiPoly& b, const BiPoly& a);

// den(u)^d * den(v)^d * F(num(u)/den(u), num(v)/den(v)) with d = max degree of F per variable
BiPoly bivariate_compose_clear(const BiPoly& F, const ZPoly& num, const ZPoly& den);

ZPoly bipoly_diagonal(const BiPoly& f); // f(X, X)

} // namespace isoclass

#endif
