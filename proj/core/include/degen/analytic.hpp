#pragma once

#include <complex>
#include <vector>

#include "degen/common.hpp"
#include "degen/poly.hpp"

namespace degen {

/// One numeric root with a certified inclusion radius: the union of the
/// discs D(approx, radius) over all returned roots contains every complex
/// root of f, and when the discs are pairwise disjoint each contains exactly
/// one root (Weierstrass-correction discs of radius deg(f)*|W_i|).
struct CertifiedRoot {
  std::complex<double> approx;
  double radius;
};

/// All deg(f) roots by Aberth-Ehrlich simultaneous iteration.  Exact zero
/// roots are split off first and reported with radius 0.  On slow
/// convergence the radii widen honestly instead of being reported
/// optimistically.  Pre: deg f >= 1.
std::vector<CertifiedRoot> roots_numeric(const IntPoly& f);

struct MahlerResult {
  double value;
  double lower;  // from shrinking every root disc
  double upper;  // from inflating every root disc
};

/// M(f) = |a_0| * prod max(1, |root|), numeric, with an interval derived
/// from the certified root radii.  Pre: f nonzero.
MahlerResult mahler_measure(const IntPoly& f);

/// Unique positive root of |a_0|X^n - |a_1|X^{n-1} - ... - |a_n|, which
/// bounds the modulus of every root of f.  Pre: a_0 != 0 and some a_j != 0
/// for j >= 1.  Bisection on [0, 1 + max|a_j|/|a_0|], Newton-polished to
/// relative tolerance 1e-12.
double cauchy_radius(const IntPoly& f);

/// Whether f has a unique root of strictly maximal modulus.  yes/no only
/// when the certified radii decide it; uncertain otherwise (e.g. when the
/// top discs cannot be separated from each other).
Tristate has_dominant_root(const IntPoly& f);

/// Checks H(f)*2^-n <= M(f) <= H(f)*sqrt(n+1) within the numeric tolerance
/// implied by the Mahler interval.
bool mahler_bounds_check(const IntPoly& f);

}  // namespace degen
