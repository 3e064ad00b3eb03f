#pragma once

#include <vector>

#include "degen/poly.hpp"

namespace degen {

/// All rational roots of f, each once, in no particular order.  Candidates
/// p/q in lowest terms have p | constant term and q | leading coefficient of
/// the zero-root-stripped part; each is verified by exact evaluation.
/// Throws on the zero polynomial.
std::vector<Rat> rational_roots(const IntPoly& f);

/// Irreducibility over Q (content ignored) for degrees 1..4.
/// Degree 1: always true.  Degrees 2, 3: true iff there is no rational root.
/// Degree 4: true iff no rational root and no factorization into two
/// rational quadratics; the quartic is reduced to a monic integer quartic by
/// the substitution Y = a_0 X (which preserves irreducibility over Q) and
/// integer quadratic factor pairs are enumerated over divisors of the
/// constant term.  Throws on degree 0 or degree >= 5.
bool is_irreducible_q(const IntPoly& f);

/// Eisenstein's criterion at the prime p: p does not divide the leading
/// coefficient, p divides every other coefficient, p^2 does not divide the
/// constant term.  A true result certifies irreducibility over Q for any
/// degree >= 1.
bool eisenstein_check(const IntPoly& f, const Int& p);

}  // namespace degen
