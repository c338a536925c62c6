#include "isoclass/ball.hpp"

namespace isoclass {

namespace {

// add the rounding-error allowance for the last RNDN operation on mid
void add_ulp(ball_real& x) {
    if (mpfr_zero_p(x.mid)) return; // see note: zero results of RNDN ops here are exact
    mpfr_exp_t e = mpfr_get_exp(x.mid);
    mpfr_t u;
    mpfr_init2(u, 16);
    mpfr_set_ui_2exp(u, 1, e - mpfr_get_prec(x.mid) + 1, MPFR_RNDU);
    mpfr_add(x.rad, x.rad, u, MPFR_RNDU);
    mpfr_clear(u);
}

void rad_addmul_abs(mpfr_t rad, const mpfr_t a, const mpfr_t b) {
    // rad += |a| * b (b >= 0), upward
    mpfr_t t;
    mpfr_init2(t, BALL_RAD_PREC);
    mpfr_abs(t, a, MPFR_RNDU);
    mpfr_mul(t, t, b, MPFR_RNDU);
    mpfr_add(rad, rad, t, MPFR_RNDU);
    mpfr_clear(t);
}

} // namespace

ball_real ball_real::from_int(const Int& v, mpfr_prec_t prec) {
    ball_real r(prec);
    mpfr_set_z(r.mid, v.get_mpz_t(), MPFR_RNDN);
    add_ulp(r);
    if (mpfr_fits_slong_p(r.mid, MPFR_RNDN) && v.fits_slong_p()) {
        // small integers are exact at any reasonable precision
        if (mpfr_cmp_si(r.mid, v.get_si()) == 0) mpfr_set_zero(r.rad, 1);
    }
    return r;
}

ball_real ball_real::from_rat(const Rat& v, mpfr_prec_t prec) {
    ball_real r(prec);
    mpfr_set_q(r.mid, v.get_mpq_t(), MPFR_RNDN);
    add_ulp(r);
    return r;
}

ball_real ball_real::exact_double(double v, mpfr_prec_t prec) {
    ball_real r(prec);
    mpfr_set_d(r.mid, v, MPFR_RNDN);
    return r;
}

bool ball_real::contains_zero() const {
    mpfr_t a;
    mpfr_init2(a, BALL_RAD_PREC);
    mpfr_abs(a, mid, MPFR_RNDD);
    bool in = mpfr_cmp(a, rad) <= 0;
    mpfr_clear(a);
    return in;
}

bool ball_real::is_positive() const {
    if (mpfr_sgn(mid) <= 0) return false;
    mpfr_t a;
    mpfr_init2(a, BALL_RAD_PREC);
    mpfr_set(a, mid, MPFR_RNDD);
    bool ok = mpfr_cmp(a, rad) > 0;
    mpfr_clear(a);
    return ok;
}

bool ball_real::is_negative() const {
    ball_real n = ball_neg(*this);
    return n.is_positive();
}

std::string ball_real::str(size_t digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), mid);
    std::string out = s;
    mpfr_free_str(s);
    char* t = nullptr;
    mpfr_asprintf(&t, "%.3Rg", rad);
    out += " +/- ";
    out += t;
    mpfr_free_str(t);
    return out;
}

ball_real ball_add(const ball_real& a, const ball_real& b) {
    ball_real r(std::max(a.prec(), b.prec()));
    mpfr_add(r.mid, a.mid, b.mid, MPFR_RNDN);
    mpfr_add(r.rad, a.rad, b.rad, MPFR_RNDU);
    add_ulp(r);
    return r;
}

ball_real ball_sub(const ball_real& a, const ball_real& b) {
    ball_real r(std::max(a.prec(), b.prec()));
    mpfr_sub(r.mid, a.mid, b.mid, MPFR_RNDN);
    mpfr_add(r.rad, a.rad, b.rad, MPFR_RNDU);
    add_ulp(r);
    return r;
}

ball_real ball_neg(const ball_real& a) {
    ball_real r = a;
    mpfr_neg(r.mid, r.mid, MPFR_RNDN);
    return r;
}

ball_real ball_abs(const ball_real& a) {
    ball_real r = a;
    mpfr_abs(r.mid, r.mid, MPFR_RNDN);
    return r;
}

ball_real ball_mul(const ball_real& a, const ball_real& b) {
    ball_real r(std::max(a.prec(), b.prec()));
    mpfr_mul(r.mid, a.mid, b.mid, MPFR_RNDN);
    // rad = |a|rb + |b|ra + ra rb
    mpfr_set_zero(r.rad, 1);
    rad_addmul_abs(r.rad, a.mid, b.rad);
    rad_addmul_abs(r.rad, b.mid, a.rad);
    mpfr_t t;
    mpfr_init2(t, BALL_RAD_PREC);
    mpfr_mul(t, a.rad, b.rad, MPFR_RNDU);
    mpfr_add(r.rad, r.rad, t, MPFR_RNDU);
    mpfr_clear(t);
    add_ulp(r);
    return r;
}

ball_real ball_mul_rat(const ball_real& a, const Rat& s) {
    ball_real sb = ball_real::from_rat(s, a.prec());
    return ball_mul(a, sb);
}

ball_real ball_inv(const ball_real& a) {
    // |1/x - 1/m| <= r / (|m| (|m| - r)) for |m| > r
    mpfr_t am, den;
    mpfr_init2(am, BALL_RAD_PREC);
    mpfr_init2(den, BALL_RAD_PREC);
    mpfr_abs(am, a.mid, MPFR_RNDD);
    if (mpfr_cmp(am, a.rad) <= 0) {
        mpfr_clear(am);
        mpfr_clear(den);
        throw std::domain_error("ball_inv: ball contains zero");
    }
    ball_real r(a.prec());
    mpfr_ui_div(r.mid, 1, a.mid, MPFR_RNDN);
    mpfr_sub(den, am, a.rad, MPFR_RNDD);
    mpfr_mul(den, den, am, MPFR_RNDD);
    mpfr_div(r.rad, a.rad, den, MPFR_RNDU);
    add_ulp(r);
    mpfr_clear(am);
    mpfr_clear(den);
    return r;
}

ball_real ball_sqrt(const ball_real& a) {
    // monotone increasing: bracket by sqrt of the endpoints
    ball_real r(a.prec());
    if (mpfr_sgn(a.mid) < 0) throw std::domain_error("ball_sqrt of negative midpoint");
    mpfr_sqrt(r.mid, a.mid, MPFR_RNDN);
    mpfr_t lo, hi;
    mpfr_init2(lo, BALL_RAD_PREC + 8);
    mpfr_init2(hi, BALL_RAD_PREC + 8);
    mpfr_sub(lo, a.mid, a.rad, MPFR_RNDD);
    if (mpfr_sgn(lo) < 0) mpfr_set_zero(lo, 1);
    mpfr_add(hi, a.mid, a.rad, MPFR_RNDU);
    mpfr_sqrt(lo, lo, MPFR_RNDD);
    mpfr_sqrt(hi, hi, MPFR_RNDU);
    mpfr_sub(hi, hi, lo, MPFR_RNDU);
    mpfr_set(r.rad, hi, MPFR_RNDU);
    add_ulp(r);
    mpfr_clear(lo);
    mpfr_clear(hi);
    return r;
}

ball_real ball_exp(const ball_real& a) {
    ball_real r(a.prec());
    mpfr_exp(r.mid, a.mid, MPFR_RNDN);
    // |exp(x) - exp(m)| <= exp(m + r) * r
    mpfr_t t;
    mpfr_init2(t, BALL_RAD_PREC + 16);
    mpfr_add(t, a.mid, a.rad, MPFR_RNDU);
    mpfr_exp(t, t, MPFR_RNDU);
    mpfr_mul(t, t, a.rad, MPFR_RNDU);
    mpfr_set(r.rad, t, MPFR_RNDU);
    add_ulp(r);
    mpfr_clear(t);
    return r;
}

void ball_sincos(const ball_real& a, ball_real& s, ball_real& c) {
    s = ball_real(a.prec());
    c = ball_real(a.prec());
    mpfr_sin_cos(s.mid, c.mid, a.mid, MPFR_RNDN);
    // |derivative| <= 1
    mpfr_set(s.rad, a.rad, MPFR_RNDU);
    mpfr_set(c.rad, a.rad, MPFR_RNDU);
    add_ulp(s);
    add_ulp(c);
}

ball_real ball_pi(mpfr_prec_t prec) {
    ball_real r(prec);
    mpfr_const_pi(r.mid, MPFR_RNDN);
    add_ulp(r);
    return r;
}

void ball_bounds(const ball_real& a, mpfr_t lo, mpfr_t hi) {
    mpfr_sub(lo, a.mid, a.rad, MPFR_RNDD);
    mpfr_add(hi, a.mid, a.rad, MPFR_RNDU);
}

std::optional<Int> ball_round_certified(const ball_real& a) {
    if (mpfr_cmp_d(a.rad, 0.25) >= 0) return std::nullopt;
    mpfr_t n;
    mpfr_init2(n, mpfr_get_prec(a.mid));
    mpfr_round(n, a.mid);
    mpfr_t d;
    mpfr_init2(d, BALL_RAD_PREC);
    mpfr_sub(d, a.mid, n, MPFR_RNDA);
    mpfr_abs(d, d, MPFR_RNDU);
    mpfr_add(d, d, a.rad, MPFR_RNDU);
    bool ok = mpfr_cmp_d(d, 0.49) < 0;
    std::optional<Int> out;
    if (ok) {
        Int v;
        mpfr_get_z(v.get_mpz_t(), n, MPFR_RNDN);
        out = v;
    }
    mpfr_clear(n);
    mpfr_clear(d);
    return out;
}

ball_complex cball_add(const ball_complex& a, const ball_complex& b) {
    return {ball_add(a.re, b.re), ball_add(a.im, b.im)};
}
ball_complex cball_sub(const ball_complex& a, const ball_complex& b) {
    return {ball_sub(a.re, b.re), ball_sub(a.im, b.im)};
}
ball_complex cball_neg(const ball_complex& a) { return {ball_neg(a.re), ball_neg(a.im)}; }

ball_complex cball_mul(const ball_complex& a, const ball_complex& b) {
    return {ball_sub(ball_mul(a.re, b.re), ball_mul(a.im, b.im)),
            ball_add(ball_mul(a.re, b.im), ball_mul(a.im, b.re))};
}

ball_complex cball_inv(const ball_complex& a) {
    ball_real n = ball_add(ball_mul(a.re, a.re), ball_mul(a.im, a.im));
    ball_real ninv = ball_inv(n);
    return {ball_mul(a.re, ninv), ball_neg(ball_mul(a.im, ninv))};
}

ball_complex cball_div(const ball_complex& a, const ball_complex& b) {
    return cball_mul(a, cball_inv(b));
}

ball_complex cball_exp(const ball_complex& a) {
    ball_real ex = ball_exp(a.re);
    ball_real s(a.prec()), c(a.prec());
    ball_sincos(a.im, s, c);
    return {ball_mul(ex, c), ball_mul(ex, s)};
}

ball_real cball_abs(const ball_complex& a) {
    ball_real n = ball_add(ball_mul(a.re, a.re), ball_mul(a.im, a.im));
    return ball_sqrt(n);
}

double cball_abs_upper(const ball_complex& a) {
    ball_real m = cball_abs(a);
    mpfr_t hi;
    mpfr_init2(hi, 64);
    mpfr_add(hi, m.mid, m.rad, MPFR_RNDU);
    double d = mpfr_get_d(hi, MPFR_RNDU);
    mpfr_clear(hi);
    return d;
}

double cball_abs_lower(const ball_complex& a) {
    ball_real m = cball_abs(a);
    mpfr_t lo;
    mpfr_init2(lo, 64);
    mpfr_sub(lo, m.mid, m.rad, MPFR_RNDD);
    double d = mpfr_get_d(lo, MPFR_RNDD);
    mpfr_clear(lo);
    return d < 0 ? 0 : d;
}

bool cballs_disjoint(const ball_complex& a, const ball_complex& b) {
    ball_complex d = cball_sub(a, b);
    return cball_abs_lower(d) > 0;
}

bool cball_contains_zero(const ball_complex& a) {
    return a.re.contains_zero() && a.im.contains_zero();
}

} // namespace isoclass
