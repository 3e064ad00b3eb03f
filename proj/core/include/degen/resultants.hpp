#pragma once

#include <vector>

#include "degen/common.hpp"
#include "degen/poly.hpp"

namespace degen {

/// Exact resultant (Sylvester determinant) via fraction-free Bareiss
/// elimination with row pivoting.  Res(f, c) = c^deg(f) for constant c.
/// Throws when either input is the zero polynomial.
Int resultant(const IntPoly& f, const IntPoly& g);

/// r(X) = Res_Y(f(Y), f(XY)), the integer polynomial whose complex roots are
/// exactly the ratios alpha_i/alpha_j of roots of f.
///
/// Pre: deg f >= 1 and f(0) != 0.  deg r = (deg f)^2, (X-1)^deg(f) | r,
/// r(1) = 0.  Computed by evaluating x -> resultant(f(Y), f(xY)) at
/// (deg f)^2 + 1 nonzero integer points and interpolating exactly over the
/// rationals; a non-integer interpolated coefficient is a hard internal error.
IntPoly ratio_resultant(const IntPoly& f);

/// Product of f(eta X) over the primitive k-th roots of unity eta, an integer
/// polynomial of degree phi(k) * deg f, realized as Res_Y(Phi_k(Y), f(XY)).
/// Pre: f nonzero, k >= 2.
IntPoly rotation_product(const IntPoly& f, int k);

/// k-th cyclotomic polynomial, from a process-wide cache.  Phi_k is computed
/// by exact division of X^k - 1 by the product of Phi_d over proper divisors
/// d of k.  Pre: k >= 1.
const IntPoly& cyclotomic_poly(int k);

/// Euler totient, cached alongside the cyclotomic table.  Pre: k >= 1.
long euler_phi(int k);

/// All candidate orders k >= 2 of a root-of-unity ratio of two roots of a
/// degree-n integer polynomial, ascending.  The bound on phi(k) is n^2 in
/// safe mode and max(n, floor(n/2)*ceil(n/2)) in tight mode (see OrderMode).
/// Pre: n >= 2.
std::vector<int> candidate_orders(int n, OrderMode mode);

}  // namespace degen
