#include "isoclass/exactmath.hpp"

#include "isoclass/zfactor.hpp"

namespace isoclass {

int sign_a_plus_b_sqrt(const Rat& a, const Rat& b, const Int& n) {
    if (n < 0) throw std::invalid_argument("sign_a_plus_b_sqrt needs n >= 0");
    int sa = sgn(a), sb = sgn(b);
    if (n == 0 || sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with b^2 n
    Rat d = a * a - b * b * Rat(n);
    int sd = sgn(d);
    return sd == 0 ? 0 : (sd == sa ? sa : sb);
}

bool rat_is_square(const Rat& r, Rat* root) {
    if (r < 0) return false;
    Int np, dp;
    if (!is_square(r.get_num(), &np) || !is_square(r.get_den(), &dp)) return false;
    if (root) *root = Rat(np) / Rat(dp);
    return true;
}

namespace {

bool integral_monic(const QPoly& f) {
    if (f.is_zero() || f.lead() != 1) return false;
    for (auto& c : f.c)
        if (c.get_den() != 1) return false;
    return true;
}

bool weil_quadratic(const QPoly& f, const Int& q) {
    // f = X^2 + c1 X + c0, not divisible by X^2 - q (caller strips that)
    Rat c1 = f.coeff(1), c0 = f.coeff(0);
    return c0 == Rat(q) && c1 * c1 < Rat(4 * q);
}

} // namespace

bool is_weil_poly(const QPoly& f_in, const Int& q) {
    if (!is_prime(q)) throw std::invalid_argument("is_weil_poly: q must be prime");
    if (!integral_monic(f_in) || (f_in.degree() != 2 && f_in.degree() != 4))
        throw std::invalid_argument("is_weil_poly wants a monic integral polynomial of degree 2 or 4");
    QPoly f = f_in;
    // strip real factors X^2 - q (roots +-sqrt(q) have absolute value sqrt(q))
    QPoly realq;
    realq.c = {Rat(-q), Rat(0), Rat(1)};
    while (f.degree() >= 2) {
        QPoly quo, rem;
        divmod(f, realq, quo, rem);
        if (!rem.is_zero()) break;
        f = quo;
    }
    if (f.degree() == 0) return true;
    if (f.degree() == 2) return weil_quadratic(f, q);
    // degree 4: functional equation X^4 f(q/X) = q^2 f(X), then the real
    // quadratic beta = x + q/x must have both conjugates in [-2 sqrt q, 2 sqrt q]
    Rat c3 = f.coeff(3), c2 = f.coeff(2), c1 = f.coeff(1), c0 = f.coeff(0);
    if (c0 != Rat(q * q) || c1 != Rat(q) * c3) return false;
    Rat a1 = -c3;
    Rat a2 = c2 - Rat(2 * q);
    // beta real: disc(Y^2 - a1 Y + a2) >= 0
    if (a1 * a1 - 4 * a2 < 0) return false;
    // g(2 sqrt q) >= 0, g(-2 sqrt q) >= 0, vertex within the interval
    if (sign_a_plus_b_sqrt(Rat(4 * q) + a2, -a1 * 2, q) < 0) return false;
    if (sign_a_plus_b_sqrt(Rat(4 * q) + a2, a1 * 2, q) < 0) return false;
    if (a1 * a1 > Rat(16 * q)) return false;
    return true;
}

const char* to_string(galois_type t) {
    switch (t) {
        case galois_type::V4: return "V4";
        case galois_type::C4: return "C4";
        case galois_type::D4: return "D4";
        case galois_type::A4: return "A4";
        case galois_type::S4: return "S4";
    }
    return "?";
}

std::vector<long> factor_degrees_over_field(const QPoly& f_in, const nf_ptr& K) {
    // Trager: degrees of gcd(f(Y - s x), N_i(Y)) over K for the factors N_i
    // of the squarefree norm
    QPoly f = monic(f_in);
    {
        QPoly g = gcd(f, derivative(f));
        if (g.degree() > 0) throw std::invalid_argument("factor_degrees_over_field wants squarefree input");
    }
    long n = K->degree();
    for (long s = 0;; ++s) {
        if (s > 64) throw std::runtime_error("factor_degrees_over_field: no squarefree shift");
        long dres = f.degree() * n;
        std::vector<Rat> xs(dres + 1), ys(dres + 1);
        for (long i = 0; i <= dres; ++i) {
            Rat y(i - dres / 2);
            QPoly lin;
            lin.c = {y, Rat(-s)};
            lin.trim();
            QPoly h;
            for (size_t k = f.c.size(); k-- > 0;) {
                h = h * lin;
                h = h + QPoly(f.c[k]);
            }
            Rat val;
            if (h.is_zero()) {
                val = 0;
            } else {
                Rat sc;
                ZPoly hz = primitive_zpoly(h, &sc);
                val = Rat(zresultant(K->minpoly, hz)) * rat_pow_int(sc, n);
            }
            xs[i] = y;
            ys[i] = val;
        }
        std::vector<Rat> dd = ys;
        for (long k = 1; k <= dres; ++k)
            for (long i = dres; i >= k; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
        QPoly N(dd[dres]);
        for (long i = dres - 1; i >= 0; --i) {
            QPoly lin;
            lin.c = {-xs[i], Rat(1)};
            N = N * lin + QPoly(dd[i]);
        }
        ZPoly Nz = primitive_zpoly(N);
        {
            ZPoly d;
            d.c.resize(Nz.c.size() - 1);
            for (size_t i = 1; i < Nz.c.size(); ++i) d.c[i - 1] = Int((unsigned long)i) * Nz.c[i];
            d.trim();
            if (zgcd(Nz, d).degree() != 0) continue;
        }
        auto fac = zfactor(Nz);
        poly<nf_elem> gK;
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
        std::vector<long> degs;
        long total = 0;
        for (auto& [Ni, mult] : fac.factors) {
            (void)mult;
            poly<nf_elem> NiK;
            for (auto& c : Ni.c) NiK.c.push_back(nf_elem(Rat(c)));
            NiK.trim();
            poly<nf_elem> a = gK, b = NiK;
            while (!b.is_zero()) {
                poly<nf_elem> r = a % b;
                a = b;
                b = r;
            }
            if (a.degree() > 0) {
                degs.push_back(a.degree());
                total += a.degree();
            }
        }
        if (total != f.degree()) continue; // degenerate shift
        std::sort(degs.begin(), degs.end());
        return degs;
    }
}

galois_type quartic_galois_type(const QPoly& f_in) {
    if (f_in.degree() != 4) throw std::invalid_argument("quartic_galois_type wants degree 4");
    QPoly f = monic(f_in);
    ZPoly fz = primitive_zpoly(f);
    if (!zis_irreducible(fz)) throw std::invalid_argument("quartic_galois_type wants irreducible input");
    Rat b = f.coeff(3), c = f.coeff(2), d = f.coeff(1), e = f.coeff(0);
    // resolvent cubic for beta = x1 x2 + x3 x4
    QPoly R;
    R.c = {-(b * b * e - 4 * c * e + d * d), b * d - 4 * e, -c, Rat(1)};
    ZPoly Rz = primitive_zpoly(R);
    Rat disc(zdiscriminant(fz));
    bool disc_square = rat_is_square(disc);
    auto rroots = rational_roots(Rz);
    if (rroots.empty()) return disc_square ? galois_type::A4 : galois_type::S4;
    if (disc_square) return galois_type::V4;
    // C4 vs D4: C4 iff f splits over Q(sqrt(disc))
    Int cond, sf;
    Rat dn = disc;
    Int num = dn.get_num() * dn.get_den(); // same square class
    square_split(num, cond, sf);
    nf_ptr K = number_field::quadratic_sqrt(sf);
    auto degs = factor_degrees_over_field(f, K);
    return degs.size() >= 2 ? galois_type::C4 : galois_type::D4;
}

} // namespace isoclass
