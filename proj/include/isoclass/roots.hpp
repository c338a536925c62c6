#ifndef ISOCLASS_ROOTS_HPP
#define ISOCLASS_ROOTS_HPP

// Certified complex root isolation for rational polynomials: plain
// Durand-Kerner approximation followed by an interval Newton certificate,
// with doubling working precision up to a cap.

#include "isoclass/ball.hpp"
#include "isoclass/poly.hpp"

#include <vector>

namespace isoclass {

struct root_box {
    ball_complex box;
    unsigned multiplicity;
};

// Roots of f with multiplicity; boxes of distinct roots are pairwise
// disjoint and each contains exactly one root. target_bits controls the
// radius (roughly 2^-target_bits); max_bits caps the refinement loop.
std::vector<root_box> complex_roots(const QPoly& f, long target_bits = 128, long max_bits = 4096);

// convenience: evaluate f at a complex ball
ball_complex eval_ball(const QPoly& f, const ball_complex& z, mpfr_prec_t prec);

// embeddings of a number field: one certified box per root of its minpoly
std::vector<ball_complex> field_embeddings(const ZPoly& minpoly, long target_bits = 192);

} // namespace isoclass

#endif
