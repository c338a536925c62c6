#include "isoclass/numberfield.hpp"

#include "isoclass/linalg.hpp"

#include <sstream>

namespace isoclass {

QPoly nf_charpoly(const nf_elem& a) {
    if (!a.K) {
        QPoly r;
        r.c = {-a.coords[0], Rat(1)};
        return r;
    }
    return mat_charpoly(Mat<Rat>(mult_matrix(a)));
}

namespace {

// gcd over K[Y], monic
poly<nf_elem> kgcd(poly<nf_elem> a, poly<nf_elem> b) {
    while (!b.is_zero()) {
        poly<nf_elem> r = a % b;
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return monic(a);
}

} // namespace

// Factor f over K far enough to read off the roots (Trager's norm method).
std::vector<nf_elem> roots_in_field(const QPoly& f_in, const nf_ptr& K) {
    std::vector<nf_elem> roots;
    if (f_in.is_zero()) throw std::invalid_argument("roots of zero polynomial");
    QPoly f = monic(f_in);
    {
        QPoly g = gcd(f, derivative(f));
        if (g.degree() > 0) f = f / g; // Trager needs a squarefree input
    }
    long n = K->degree();
    QPoly m = to_qpoly(K->minpoly);

    for (long s = 0;; ++s) {
        if (s > 64) throw std::runtime_error("roots_in_field: no squarefree shift found");
        // g(Y) = f(Y - s*x) as element of K[Y]; its norm is
        // N(Y) = Res_X(m(X), f(Y - s X)) which we compute by interpolation in Y.
        long dres = f.degree() * n;
        std::vector<Rat> xs(dres + 1), ys(dres + 1);
        bool fail = false;
        for (long i = 0; i <= dres; ++i) {
            Rat y(i - dres / 2);
            // h(X) = f(y - s X) in Q[X], by Horner in the linear substitution
            QPoly lin;
            lin.c = {y, Rat(-s)};
            lin.trim();
            QPoly h;
            for (size_t k = f.c.size(); k-- > 0;) {
                h = h * lin;
                h = h + QPoly(f.c[k]);
            }
            ZPoly hz;
            Rat sc;
            hz = primitive_zpoly(h, &sc);
            Rat val;
            if (h.is_zero()) {
                val = 0;
            } else {
                Int r = zresultant(primitive_zpoly(m), hz);
                // Res(m, c*h) = c^deg(m) Res(m, h); m monic integer so primitive ok
                val = Rat(r) * rat_pow_int(sc, n);
            }
            xs[i] = y;
            ys[i] = val;
        }
        // Lagrange interpolation (exact)
        QPoly N;
        {
            QPoly acc(Rat(1)); // prod (Y - xs[j]) built incrementally: use Newton form instead
            // Newton divided differences
            std::vector<Rat> dd = ys;
            for (long k = 1; k <= dres; ++k)
                for (long i = dres; i >= k; --i)
                    dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
            N = QPoly(dd[dres]);
            for (long i = dres - 1; i >= 0; --i) {
                QPoly lin;
                lin.c = {-xs[i], Rat(1)};
                N = N * lin + QPoly(dd[i]);
            }
        }
        ZPoly Nz = primitive_zpoly(N);
        if (zgcd(Nz, primitive_zpoly(derivative(to_qpoly(Nz)))).degree() != 0) continue; // norm not squarefree
        auto fac = zfactor(Nz);
        // linear factors of f over K correspond to factors N_i with
        // gcd(g, N_i) of degree 1 in K[Y]
        poly<nf_elem> gK; // f(Y - s*x) over K
        {
            nf_elem x = nf_elem::gen(K);
            poly<nf_elem> lin;
            lin.c = {nf_elem(Rat(0)) - nf_elem(Rat(s)) * x, nf_elem(Rat(1))};
            poly<nf_elem> h;
            for (size_t k = f.c.size(); k-- > 0;) {
                h = h * lin;
                h = h + poly<nf_elem>(nf_elem(f.c[k]));
            }
            gK = h;
        }
        for (auto& [Ni, mult] : fac.factors) {
            (void)mult;
            poly<nf_elem> NiK;
            NiK.c.reserve(Ni.c.size());
            for (auto& c : Ni.c) NiK.c.push_back(nf_elem(Rat(c)));
            NiK.trim();
            poly<nf_elem> g = kgcd(gK, NiK);
            if (g.degree() == 1) {
                // root of g: -c0; root of f: that minus ... f(Y - s x): root_f = root_g - s x? No:
                // if g(y0)=0 then f(y0 - s x) = 0, so the root of f is y0 - s x.
                nf_elem y0 = nf_elem(Rat(0)) - g.c[0];
                nf_elem root = y0 - nf_elem(Rat(s)) * nf_elem::gen(K);
                roots.push_back(root);
            } else if (g.degree() > 1) {
                // repeated-root degenerate shift; try another s
                fail = true;
                break;
            }
        }
        if (!fail) break;
        roots.clear();
    }
    return roots;
}

std::vector<nf_elem> field_automorphism_images(const nf_ptr& K) {
    return roots_in_field(to_qpoly(K->minpoly), K);
}

std::optional<nf_elem> sqrt_in_field(const Rat& d, const nf_ptr& K) {
    QPoly f;
    f.c = {-d, Rat(0), Rat(1)};
    auto r = roots_in_field(f, K);
    if (r.empty()) return std::nullopt;
    return r.front();
}

std::string to_string(const nf_elem& a) {
    if (!a.K) return to_string(a.coords[0]);
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < a.coords.size(); ++i) {
        if (a.coords[i] == 0) continue;
        if (!first) os << " + ";
        os << to_string(a.coords[i]);
        if (i >= 1) os << "*" << a.K->name;
        if (i >= 2) os << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace isoclass
