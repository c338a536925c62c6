#ifndef ISOCLASS_ZFACTOR_HPP
#define ISOCLASS_ZFACTOR_HPP

// gcd, resultants and factorization in Z[X] (modular gcd, Hensel-lifted
// Zassenhaus factorization). Everything here works at the scales this
// project needs: degrees in the low hundreds, coefficients of a few
// hundred digits.

#include "isoclass/poly.hpp"

#include <utility>
#include <vector>

namespace isoclass {

// gcd of primitive parts, computed modulo word primes and verified exactly
ZPoly zgcd(const ZPoly& a, const ZPoly& b);

// resultant over Z, modular with a rigorous prime-count bound
Int zresultant(const ZPoly& a, const ZPoly& b);

// (-1)^(n(n-1)/2) Res(f, f') / lc(f)
Int zdiscriminant(const ZPoly& f);

// squarefree part (radical) of f
ZPoly zsquarefree_part(const ZPoly& f);

struct zfactorization {
    Rat unit; // f = unit * prod factors^mult over Q; unit carries content and sign
    std::vector<std::pair<ZPoly, unsigned>> factors; // irreducible, primitive, positive lead
};

// complete factorization over Z; throws on pathological recombination blowup
zfactorization zfactor(const ZPoly& f, size_t subset_cap = 2000000);

// rational roots of f (exact)
std::vector<Rat> rational_roots(const ZPoly& f);

bool zis_irreducible(const ZPoly& f);

} // namespace isoclass

#endif
