#pragma once

#include <optional>
#include <string>
#include <vector>

#include "degen/poly.hpp"

namespace degen {

/// A named construction-family instance together with its machine-checkable
/// expectations.  Expectations beyond the verifiable range (irreducibility
/// for degree >= 5) are recorded but reported as expected-unverified.
struct FamilySpec {
  std::string name;
  std::vector<Int> params;
  IntPoly produced;
  bool expect_degenerate = true;
  std::optional<bool> expect_irreducible;
  std::optional<int> expect_class_size;
};

/// g(X) = X^m - 2 b_1 X^(m-1) - ... - 2 b_(m-1) X - 2 (2 b_m - 1), then
/// f = g(X^ell).  Eisenstein at 2 makes g (hence f) irreducible; all root
/// quotients within a power block are ell-th roots of unity, so f is
/// degenerate with class size ell.
/// Pre: m >= 1, ell >= 2, b has m entries, all >= 1.
FamilySpec eisenstein_power_family(int m, int ell, const std::vector<Int>& b);

/// Non-monic analogue with leading coefficient 2 b_0 - 1.
/// Pre: additionally b0 >= 1.
FamilySpec eisenstein_power_family_general(int m, int ell, const Int& b0,
                                           const std::vector<Int>& b);

/// (X+a)(X^2+b), b != 0: monic cubic, degenerate (the quadratic factor has
/// an opposite-root pair), reducible.
FamilySpec linear_times_quadratic(const Int& a, const Int& b);

/// (X^2+1) g(X), g nonzero: degenerate via the roots +-i.
FamilySpec cyclo_times_poly(const IntPoly& g);

/// (aX+b)(cX^2+d), a, c, d != 0.
FamilySpec linear_times_quadratic_general(const Int& a, const Int& b, const Int& c,
                                          const Int& d);

/// The four degenerate monic quadratic shapes, parameter a != 0:
///   sqrt:   X^2 - a          (ratio order 2; irreducible unless a is a square)
///   order3: X^2 + aX + a^2   (ratio order 3)
///   order4: X^2 + 2aX + 2a^2 (ratio order 4)
///   order6: X^2 + 3aX + 3a^2 (ratio order 6)
enum class QuadraticKind { sqrt, order3, order4, order6 };
FamilySpec quadratic_degenerate_family(QuadraticKind kind, const Int& a);

struct ExpectationOutcome {
  std::string what;
  bool checked = false;  // false: out of verifiable range, recorded only
  bool passed = false;
  std::string detail;
};

struct FamilyReport {
  FamilySpec spec;
  std::vector<ExpectationOutcome> outcomes;
  bool all_checked_passed = true;
};

/// Runs the degeneracy test, the irreducibility test (degree <= 4), the
/// class-structure computation (when an expected class size is given and the
/// instance verified irreducible), and the power-shape decomposition.
/// Failures are reported, not thrown.
FamilyReport verify_family(const FamilySpec& spec);

}  // namespace degen
