#ifndef ISOCLASS_BALL_HPP
#define ISOCLASS_BALL_HPP

// Real and complex balls: an MPFR midpoint plus an upper-bounded radius.
// Every operation keeps the invariant "the true value lies within rad of
// mid". Radii are tracked at low precision with upward rounding.

#include "isoclass/bigint.hpp"

#include <mpfr.h>

#include <string>

namespace isoclass {

constexpr mpfr_prec_t BALL_RAD_PREC = 32;

class ball_real {
public:
    mpfr_t mid;
    mpfr_t rad; // >= 0, upper bound on |true - mid|

    explicit ball_real(mpfr_prec_t prec = 64) {
        mpfr_init2(mid, prec);
        mpfr_init2(rad, BALL_RAD_PREC);
        mpfr_set_zero(mid, 1);
        mpfr_set_zero(rad, 1);
    }
    ball_real(const ball_real& o) {
        mpfr_init2(mid, mpfr_get_prec(o.mid));
        mpfr_init2(rad, BALL_RAD_PREC);
        mpfr_set(mid, o.mid, MPFR_RNDN);
        mpfr_set(rad, o.rad, MPFR_RNDU);
    }
    ball_real(ball_real&& o) noexcept {
        mpfr_init2(mid, 2);
        mpfr_init2(rad, 2);
        mpfr_swap(mid, o.mid);
        mpfr_swap(rad, o.rad);
    }
    ball_real& operator=(ball_real o) {
        mpfr_swap(mid, o.mid);
        mpfr_swap(rad, o.rad);
        return *this;
    }
    ~ball_real() {
        mpfr_clear(mid);
        mpfr_clear(rad);
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(mid); }

    static ball_real from_int(const Int& v, mpfr_prec_t prec);
    static ball_real from_rat(const Rat& v, mpfr_prec_t prec);
    static ball_real exact_double(double v, mpfr_prec_t prec);

    bool contains_zero() const;
    bool is_positive() const; // certainly > 0
    bool is_negative() const;
    double rad_d() const { return mpfr_get_d(rad, MPFR_RNDU); }
    double mid_d() const { return mpfr_get_d(mid, MPFR_RNDN); }
    std::string str(size_t digits = 20) const;
};

ball_real ball_add(const ball_real& a, const ball_real& b);
ball_real ball_sub(const ball_real& a, const ball_real& b);
ball_real ball_neg(const ball_real& a);
ball_real ball_mul(const ball_real& a, const ball_real& b);
ball_real ball_mul_rat(const ball_real& a, const Rat& s);
ball_real ball_inv(const ball_real& a); // requires 0 not in ball
ball_real ball_sqrt(const ball_real& a);
ball_real ball_exp(const ball_real& a);
void ball_sincos(const ball_real& a, ball_real& s, ball_real& c);
ball_real ball_pi(mpfr_prec_t prec);
ball_real ball_abs(const ball_real& a);

// upper/lower bounds (as RNDU/RNDD doubles are too narrow, return balls of rad 0 semantics)
void ball_bounds(const ball_real& a, mpfr_t lo, mpfr_t hi); // lo,hi must be init'ed

// nearest integer if the ball certifies one within distance < 1/4, else nullopt
std::optional<Int> ball_round_certified(const ball_real& a);

struct ball_complex {
    ball_real re, im;
    explicit ball_complex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    ball_complex(ball_real r, ball_real i) : re(std::move(r)), im(std::move(i)) {}
    mpfr_prec_t prec() const { return re.prec(); }
    std::string str(size_t digits = 20) const { return re.str(digits) + " + " + im.str(digits) + "*i"; }
};

ball_complex cball_add(const ball_complex& a, const ball_complex& b);
ball_complex cball_sub(const ball_complex& a, const ball_complex& b);
ball_complex cball_neg(const ball_complex& a);
ball_complex cball_mul(const ball_complex& a, const ball_complex& b);
ball_complex cball_inv(const ball_complex& a);
ball_complex cball_div(const ball_complex& a, const ball_complex& b);
ball_complex cball_exp(const ball_complex& a); // e^(re) * (cos im + i sin im)
ball_real cball_abs(const ball_complex& a);    // ball containing |z|
double cball_abs_upper(const ball_complex& a);
double cball_abs_lower(const ball_complex& a);
bool cballs_disjoint(const ball_complex& a, const ball_complex& b);
bool cball_contains_zero(const ball_complex& a);

} // namespace isoclass

#endif
