#ifndef ISOCLASS_EXACTMATH_HPP
#define ISOCLASS_EXACTMATH_HPP

// Exact decision procedures on small polynomials: the Weil condition,
// quartic Galois groups, factorization over quadratic fields, and the
// sign gymnastics for numbers of the form a + b*sqrt(n).

#include "isoclass/linalg.hpp"
#include "isoclass/numberfield.hpp"
#include "isoclass/poly.hpp"

namespace isoclass {

// sign of a + b*sqrt(n) for n > 0, decided by squaring; returns -1, 0, +1
int sign_a_plus_b_sqrt(const Rat& a, const Rat& b, const Int& n);

bool rat_is_square(const Rat& r, Rat* root = nullptr);

// true iff every complex root of monic integer f (degree 2 or 4) has
// absolute value exactly sqrt(q)
bool is_weil_poly(const QPoly& f, const Int& q);

enum class galois_type { V4, C4, D4, A4, S4 };
const char* to_string(galois_type t);

// Galois group of the splitting field of an irreducible quartic
galois_type quartic_galois_type(const QPoly& f);

// degrees of the irreducible factors of f over K (Trager norms)
std::vector<long> factor_degrees_over_field(const QPoly& f, const nf_ptr& K);

template <class T>
poly<T> char_poly(const Mat<T>& m) {
    if (m.empty() || m.size() > 4 || m.size() != m[0].size())
        throw std::invalid_argument("char_poly wants a square matrix of dimension <= 4");
    return mat_charpoly(m);
}

} // namespace isoclass

#endif
