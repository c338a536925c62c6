#include "isoclass/roots.hpp"

#include "isoclass/zfactor.hpp"

#include <algorithm>
#include <cmath>

namespace isoclass {

namespace {

// bare complex numbers on mpfr, no interval tracking (approximation stage)
struct cnum {
    mpfr_t re, im;
    explicit cnum(mpfr_prec_t p) {
        mpfr_init2(re, p);
        mpfr_init2(im, p);
        mpfr_set_zero(re, 1);
        mpfr_set_zero(im, 1);
    }
    cnum(const cnum& o) {
        mpfr_init2(re, mpfr_get_prec(o.re));
        mpfr_init2(im, mpfr_get_prec(o.im));
        mpfr_set(re, o.re, MPFR_RNDN);
        mpfr_set(im, o.im, MPFR_RNDN);
    }
    cnum& operator=(const cnum& o) {
        mpfr_set_prec(re, mpfr_get_prec(o.re));
        mpfr_set_prec(im, mpfr_get_prec(o.im));
        mpfr_set(re, o.re, MPFR_RNDN);
        mpfr_set(im, o.im, MPFR_RNDN);
        return *this;
    }
    ~cnum() {
        mpfr_clear(re);
        mpfr_clear(im);
    }
};

void cmul(cnum& r, const cnum& a, const cnum& b, mpfr_t t1, mpfr_t t2) {
    // r = a*b, r distinct from a,b
    mpfr_mul(t1, a.re, b.re, MPFR_RNDN);
    mpfr_mul(t2, a.im, b.im, MPFR_RNDN);
    mpfr_sub(t1, t1, t2, MPFR_RNDN);
    mpfr_mul(t2, a.re, b.im, MPFR_RNDN);
    mpfr_set(r.re, t1, MPFR_RNDN);
    mpfr_mul(t1, a.im, b.re, MPFR_RNDN);
    mpfr_add(r.im, t1, t2, MPFR_RNDN);
}

void cdiv(cnum& r, const cnum& a, const cnum& b, mpfr_t t1, mpfr_t t2, mpfr_t t3) {
    // r = a/b
    mpfr_mul(t1, b.re, b.re, MPFR_RNDN);
    mpfr_mul(t2, b.im, b.im, MPFR_RNDN);
    mpfr_add(t3, t1, t2, MPFR_RNDN); // |b|^2
    mpfr_mul(t1, a.re, b.re, MPFR_RNDN);
    mpfr_mul(t2, a.im, b.im, MPFR_RNDN);
    mpfr_add(t1, t1, t2, MPFR_RNDN);
    mpfr_div(t1, t1, t3, MPFR_RNDN);
    mpfr_mul(t2, a.im, b.re, MPFR_RNDN);
    mpfr_set(r.re, t1, MPFR_RNDN);
    mpfr_mul(t1, a.re, b.im, MPFR_RNDN);
    mpfr_sub(t2, t2, t1, MPFR_RNDN);
    mpfr_div(r.im, t2, t3, MPFR_RNDN);
}

// Horner evaluation of f at z (approximate)
void ceval(cnum& out, const std::vector<cnum>& coeffs, const cnum& z, mpfr_t t1, mpfr_t t2) {
    cnum acc(mpfr_get_prec(z.re));
    for (size_t i = coeffs.size(); i-- > 0;) {
        cnum tmp(mpfr_get_prec(z.re));
        cmul(tmp, acc, z, t1, t2);
        mpfr_add(acc.re, tmp.re, coeffs[i].re, MPFR_RNDN);
        mpfr_add(acc.im, tmp.im, coeffs[i].im, MPFR_RNDN);
    }
    out = acc;
}

std::vector<cnum> durand_kerner(const QPoly& f, mpfr_prec_t prec, int max_sweeps) {
    long n = f.degree();
    std::vector<cnum> coeffs;
    coeffs.reserve(n + 1);
    Rat lead = f.lead();
    for (long i = 0; i <= n; ++i) {
        cnum c(prec);
        Rat v = f.coeff(i) / lead;
        mpfr_set_q(c.re, v.get_mpq_t(), MPFR_RNDN);
        coeffs.push_back(c);
    }
    // Cauchy-style radius
    double r = 0;
    for (long i = 0; i < n; ++i) {
        double m = std::fabs(mpfr_get_d(coeffs[i].re, MPFR_RNDN));
        r = std::max(r, std::pow(m, 1.0 / (n - i)));
    }
    r = 1.0 + r;
    std::vector<cnum> z;
    for (long k = 0; k < n; ++k) {
        cnum c(prec);
        double ang = 2 * M_PI * k / n + 0.3979;
        mpfr_set_d(c.re, r * std::cos(ang), MPFR_RNDN);
        mpfr_set_d(c.im, r * std::sin(ang), MPFR_RNDN);
        z.push_back(c);
    }
    mpfr_t t1, t2, t3, err, tmp;
    mpfr_inits2(prec, t1, t2, t3, err, tmp, (mpfr_ptr) nullptr);
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        mpfr_set_zero(err, 1);
        for (long i = 0; i < n; ++i) {
            cnum num(prec), den(prec), q(prec);
            ceval(num, coeffs, z[i], t1, t2);
            mpfr_set_ui(den.re, 1, MPFR_RNDN);
            mpfr_set_zero(den.im, 1);
            for (long j = 0; j < n; ++j) {
                if (j == i) continue;
                cnum d(prec);
                mpfr_sub(d.re, z[i].re, z[j].re, MPFR_RNDN);
                mpfr_sub(d.im, z[i].im, z[j].im, MPFR_RNDN);
                cnum nd(prec);
                cmul(nd, den, d, t1, t2);
                den = nd;
            }
            cdiv(q, num, den, t1, t2, t3);
            mpfr_sub(z[i].re, z[i].re, q.re, MPFR_RNDN);
            mpfr_sub(z[i].im, z[i].im, q.im, MPFR_RNDN);
            mpfr_hypot(tmp, q.re, q.im, MPFR_RNDN);
            mpfr_max(err, err, tmp, MPFR_RNDN);
        }
        mpfr_mul_2si(tmp, err, prec / 2, MPFR_RNDN);
        if (mpfr_cmp_ui(tmp, 1) < 0) break; // converged well below target
    }
    mpfr_clears(t1, t2, t3, err, tmp, (mpfr_ptr) nullptr);
    return z;
}

} // namespace

ball_complex eval_ball(const QPoly& f, const ball_complex& z, mpfr_prec_t prec) {
    ball_complex acc(prec);
    for (size_t i = f.c.size(); i-- > 0;) {
        acc = cball_mul(acc, z);
        ball_complex c(prec);
        c.re = ball_real::from_rat(f.c[i], prec);
        acc = cball_add(acc, c);
    }
    return acc;
}

std::vector<root_box> complex_roots(const QPoly& f_in, long target_bits, long max_bits) {
    if (f_in.is_zero()) throw std::invalid_argument("complex_roots of zero polynomial");
    std::vector<root_box> out;
    ZPoly fz = primitive_zpoly(f_in);
    // roots at zero
    unsigned k0 = 0;
    while (k0 < fz.c.size() && fz.c[k0] == 0) ++k0;
    if (k0) {
        fz.c.erase(fz.c.begin(), fz.c.begin() + k0);
        ball_complex zero(static_cast<mpfr_prec_t>(target_bits + 16));
        out.push_back({zero, k0});
    }
    if (fz.degree() < 1) return out;

    // squarefree pieces with multiplicities
    std::vector<std::pair<ZPoly, unsigned>> parts;
    {
        ZPoly g = fz;
        unsigned mult = 1;
        while (g.degree() > 0) {
            ZPoly rad = zsquarefree_part(g);
            ZPoly next = primitive_zpoly(to_qpoly(g) / to_qpoly(rad));
            ZPoly same = zgcd(rad, next);
            ZPoly only = primitive_zpoly(to_qpoly(rad) / to_qpoly(same));
            if (only.degree() > 0) parts.emplace_back(only, mult);
            g = next;
            ++mult;
        }
    }

    for (auto& [sf, mult] : parts) {
        QPoly g = to_qpoly(sf);
        QPoly dg = derivative(g);
        long n = g.degree();
        for (long prec = std::max(64L, target_bits + 32);; prec *= 2) {
            if (prec > max_bits)
                throw std::runtime_error("complex_roots: certification failed below the precision cap");
            auto approx = durand_kerner(g, prec, 200 + 8 * (int)n);
            std::vector<ball_complex> boxes;
            bool ok = true;
            for (long i = 0; i < n && ok; ++i) {
                ball_complex z0(prec);
                mpfr_set(z0.re.mid, approx[i].re, MPFR_RNDN);
                mpfr_set(z0.im.mid, approx[i].im, MPFR_RNDN);
                // residual-based radius guess
                ball_complex fv = eval_ball(g, z0, prec);
                ball_complex dv = eval_ball(dg, z0, prec);
                if (cball_abs_lower(dv) == 0) {
                    ok = false;
                    break;
                }
                ball_complex corr = cball_div(fv, dv);
                double rr = 8.0 * cball_abs_upper(corr) + std::ldexp(1.0, (int)-(target_bits));
                // interval Newton certificate on the disk of radius rr
                ball_complex disk = z0;
                mpfr_set_d(disk.re.rad, rr, MPFR_RNDU);
                mpfr_set_d(disk.im.rad, rr, MPFR_RNDU);
                ball_complex dfd = eval_ball(dg, disk, prec);
                if (cball_abs_lower(dfd) == 0) {
                    ok = false;
                    break;
                }
                ball_complex newton = cball_sub(z0, cball_div(fv, dfd));
                // containment: |newton.mid - z0.mid| + newton.rad < rr (per component, circle norm)
                ball_complex diff = cball_sub(newton, z0);
                double shift = cball_abs_upper(diff);
                double nrad = std::max(mpfr_get_d(newton.re.rad, MPFR_RNDU),
                                       mpfr_get_d(newton.im.rad, MPFR_RNDU));
                if (shift + nrad >= rr * 0.9) {
                    ok = false;
                    break;
                }
                // certified: unique root within disk; report the tighter newton box
                ball_complex cert = newton;
                boxes.push_back(cert);
            }
            if (ok) {
                // pairwise disjoint?
                for (size_t i = 0; i < boxes.size() && ok; ++i)
                    for (size_t j = i + 1; j < boxes.size() && ok; ++j)
                        if (!cballs_disjoint(boxes[i], boxes[j])) ok = false;
                // radius small enough?
                for (auto& b : boxes)
                    if (ok && std::max(b.re.rad_d(), b.im.rad_d()) > std::ldexp(1.0, (int)-target_bits))
                        ok = false;
            }
            if (ok) {
                for (auto& b : boxes) out.push_back({b, mult});
                break;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const root_box& a, const root_box& b) {
        int c = mpfr_cmp(a.box.re.mid, b.box.re.mid);
        if (c) return c < 0;
        return mpfr_cmp(a.box.im.mid, b.box.im.mid) < 0;
    });
    return out;
}

std::vector<ball_complex> field_embeddings(const ZPoly& minpoly, long target_bits) {
    auto rb = complex_roots(to_qpoly(minpoly), target_bits);
    std::vector<ball_complex> out;
    for (auto& r : rb) out.push_back(r.box);
    return out;
}

} // namespace isoclass
