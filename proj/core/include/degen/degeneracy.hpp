#pragma once

#include <vector>

#include "degen/common.hpp"
#include "degen/poly.hpp"
#include "degen/resultants.hpp"

namespace degen {

/// Verdict of the degeneracy test, with the witness root-of-unity orders and
/// the reduction metadata.  degenerate <=> witness_orders nonempty; every
/// witness order k satisfies Phi_k | ratio_resultant of the reduced core.
struct DegeneracyReport {
  bool degenerate = false;
  std::vector<int> witness_orders;
  int zero_root_multiplicity = 0;
  int reduced_degree = 0;  // degree of the squarefree, zero-root-stripped core
};

/// Decides whether f has two distinct roots whose quotient is a root of
/// unity.  Reduction order: strip zero roots, then squarefree part, then
/// ratio resultant; witnesses are the candidate orders k whose cyclotomic
/// polynomial divides the ratio resultant.  Throws on the zero polynomial.
DegeneracyReport is_degenerate(const IntPoly& f, OrderMode mode = OrderMode::safe);

/// True iff resultant(f, rotation_product(f, k)) == 0, i.e. some pair of
/// roots of f has quotient a primitive k-th root of unity.
/// Pre: deg f >= 1, f(0) != 0, f squarefree, k >= 2 (violations throw).
bool fast_witness(const IntPoly& f, int k);

/// Root-equivalence class structure of an irreducible polynomial: s classes
/// of equal size ell, with s * ell = deg f.
struct ClassStructure {
  int s = 0;
  int ell = 0;
};

/// Class structure of an irreducible f of degree >= 2 (irreducibility is the
/// caller's responsibility).  ell = 1 + T/n where T counts ordered pairs of
/// distinct roots with root-of-unity quotient, read off the cyclotomic
/// multiplicities of the ratio resultant.  When the arithmetic is
/// inconsistent with any irreducible input (T not divisible by n, or ell not
/// dividing n), throws std::domain_error("input not irreducible").
ClassStructure equivalence_stats(const IntPoly& f, OrderMode mode = OrderMode::safe);

/// Numeric screen for the census: false means certainly non-degenerate
/// (every pair of distinct roots has certified modulus gap), true means the
/// exact path must decide.  Degrades to true on any numeric uncertainty.
/// rel_gap is an extra relative separation demanded on top of the certified
/// per-root error radii.
bool prefilter_possible(const IntPoly& f, double rel_gap = 1e-9);

/// Exact closed-form degeneracy test for a0 X^2 + a1 X + a2 (a0 != 0):
/// degenerate iff (a1 == 0 and a2 != 0) or a1^2 in {a0*a2, 2*a0*a2, 3*a0*a2}.
/// The four cases correspond to ratio orders 2, 3, 4, 6.
bool quadratic_is_degenerate(const Int& a0, const Int& a1, const Int& a2);

}  // namespace degen
