#include "isoclass/bipoly.hpp"

namespace isoclass {

BiPoly bipoly_add(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (auto& [k, v] : b.t) r.add_term(k.first, k.second, v);
    return r;
}

BiPoly bipoly_mul(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (auto& [ka, va] : a.t)
        for (auto& [kb, vb] : b.t) r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
    return r;
}

BiPoly bipoly_scale(const BiPoly& a, const Int& s) {
    BiPoly r;
    if (s == 0) return r;
    for (auto& [k, v] : a.t) r.t[k] = v * s;
    return r;
}

ZPoly bipoly_eval_y(const BiPoly& f, const Int& y) {
    // collect coefficients of X^i as polynomials in Y, then evaluate
    std::map<unsigned, Int> acc;
    for (auto& [k, v] : f.t) acc[k.first] += v * pow(y, k.second);
    ZPoly r;
    for (auto& [i, c] : acc) {
        if (r.c.size() < i + 1) r.c.resize(i + 1, 0);
        r.c[i] = c;
    }
    r.trim();
    return r;
}

Rat bipoly_eval(const BiPoly& f, const Rat& x, const Rat& y) {
    Rat s = 0;
    for (auto& [k, v] : f.t) s += Rat(v) * pow(x, k.first) * pow(y, k.second);
    return s;
}

std::vector<ZPoly> bipoly_x_coeffs(const BiPoly& f) {
    std::vector<ZPoly> cs(static_cast<size_t>(std::max(0L, f.deg_x() + 1)));
    for (auto& [k, v] : f.t) {
        ZPoly& c = cs[k.first];
        if (c.c.size() < k.second + 1) c.c.resize(k.second + 1, 0);
        c.c[k.second] = v;
    }
    for (auto& c : cs) c.trim();
    return cs;
}

namespace {
BiPoly from_x_coeffs(const std::vector<ZPoly>& cs) {
    BiPoly r;
    for (unsigned i = 0; i < cs.size(); ++i)
        for (unsigned j = 0; j < cs[i].c.size(); ++j) r.add_term(i, j, cs[i].c[j]);
    return r;
}
} // namespace

BiPoly bipoly_divexact_monic_x(const BiPoly& a, const BiPoly& b) {
    long db = b.deg_x();
    auto bc = bipoly_x_coeffs(b);
    if (db < 0 || bc[db].degree() != 0 || bc[db].c[0] != 1)
        throw std::invalid_argument("divisor must be monic in X");
    auto rc = bipoly_x_coeffs(a);
    long da = static_cast<long>(rc.size()) - 1;
    std::vector<ZPoly> q(da >= db ? da - db + 1 : 0);
    for (long k = da - db; k >= 0; --k) {
        ZPoly f = (static_cast<size_t>(k + db) < rc.size()) ? rc[k + db] : ZPoly();
        if (f.is_zero()) continue;
        q[k] = f;
        for (long i = 0; i <= db; ++i) {
            if (bc[i].is_zero()) continue;
            rc[k + i] = rc[k + i] - f * bc[i];
        }
    }
    for (auto& r : rc)
        if (!r.is_zero()) throw std::domain_error("bipoly division: nonzero remainder");
    return from_x_coeffs(q);
}

bool bipoly_divides_monic_x(const BiPoly& b, const BiPoly& a) {
    try {
        bipoly_divexact_monic_x(a, b);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

BiPoly bivariate_compose_clear(const BiPoly& F, const ZPoly& num, const ZPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("zero denominator");
    long d = std::max(F.deg_x(), F.deg_y());
    if (d < 0) return {};
    // A_i = num^i * den^(d-i)
    std::vector<ZPoly> A(d + 1);
    for (long i = 0; i <= d; ++i) A[i] = pow(num, (unsigned long)i) * pow(den, (unsigned long)(d - i));
    BiPoly out;
    for (auto& [k, v] : F.t) {
        const ZPoly& ax = A[k.first];
        const ZPoly& ay = A[k.second];
        for (unsigned i = 0; i < ax.c.size(); ++i) {
            if (ax.c[i] == 0) continue;
            Int f = v * ax.c[i];
            for (unsigned j = 0; j < ay.c.size(); ++j) {
                if (ay.c[j] == 0) continue;
                out.add_term(i, j, f * ay.c[j]);
            }
        }
    }
    return out;
}

ZPoly bipoly_diagonal(const BiPoly& f) {
    std::map<unsigned, Int> acc;
    for (auto& [k, v] : f.t) acc[k.first + k.second] += v;
    ZPoly r;
    for (auto& [i, c] : acc) {
        if (r.c.size() < i + 1) r.c.resize(i + 1, 0);
        r.c[i] = c;
    }
    r.trim();
    return r;
}

} // namespace isoclass
