#ifndef ISOCLASS_BIGINT_HPP
#define ISOCLASS_BIGINT_HPP

// Arbitrary-precision integers and rationals. Thin layer over GMP's C++
// classes plus the handful of number-theoretic helpers the rest of the
// library keeps reaching for.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace isoclass {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int g;
    mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int abs(const Int& a) {
    Int r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

// floor division and the matching remainder (sign of divisor irrelevant)
inline Int fdiv_q(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int fdiv_r(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int pow(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

inline Rat pow(const Rat& a, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), a.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), a.get_den().get_mpz_t(), e);
    r.canonicalize();
    return r;
}

// a/b where the division is known to be exact
inline Int divexact(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool divides(const Int& d, const Int& a) {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline bool is_square(const Int& a, Int* root = nullptr) {
    if (a < 0) return false;
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    if (r * r == a) {
        if (root) *root = r;
        return true;
    }
    return false;
}

// floor(sqrt(a)), a >= 0
inline Int isqrt(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline Int next_prime(const Int& n) {
    Int r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline long to_long(const Int& a) {
    if (!a.fits_slong_p()) throw std::overflow_error("bigint does not fit in long");
    return a.get_si();
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline std::vector<Int> divisors(const Int& n_in) {
    Int n = abs(n_in);
    if (n == 0) throw std::invalid_argument("divisors of 0");
    std::vector<Int> ds;
    for (Int d = 1; d * d <= n; ++d) {
        if (divides(d, n)) {
            ds.push_back(d);
            Int e = n / d;
            if (e != d) ds.push_back(e);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

// prime factorization by trial division; fine at the sizes this project meets
inline std::vector<std::pair<Int, unsigned>> factor_integer(Int n) {
    if (n == 0) throw std::invalid_argument("factor of 0");
    n = abs(n);
    std::vector<std::pair<Int, unsigned>> fs;
    for (Int p = 2; p * p <= n; p = (p == 2 ? Int(3) : p + 2)) {
        unsigned e = 0;
        while (divides(p, n)) {
            n /= p;
            ++e;
        }
        if (e) fs.emplace_back(p, e);
    }
    if (n > 1) fs.emplace_back(n, 1);
    return fs;
}

// largest f with f^2 | n, together with the squarefree part
inline void square_split(const Int& n, Int& conductor, Int& squarefree) {
    conductor = 1;
    squarefree = n < 0 ? -1 : 1;
    for (auto& [p, e] : factor_integer(n)) {
        for (unsigned i = 0; i + 1 < e; i += 2) conductor *= p;
        if (e % 2) squarefree *= p;
    }
}

inline Rat rat_pow_int(const Rat& a, long e) {
    if (e >= 0) return pow(a, static_cast<unsigned long>(e));
    if (a == 0) throw std::domain_error("0^negative");
    return pow(Rat(1) / a, static_cast<unsigned long>(-e));
}

inline std::string to_string(const Int& a) { return a.get_str(); }
inline std::string to_string(const Rat& a) {
    if (a.get_den() == 1) return a.get_num().get_str();
    return a.get_num().get_str() + "/" + a.get_den().get_str();
}

} // namespace isoclass

#endif
