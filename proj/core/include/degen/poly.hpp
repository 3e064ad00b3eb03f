#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace degen {

using Int = mpz_class;
using Rat = mpq_class;

/// Univariate polynomial with exact arbitrary-precision integer coefficients.
///
/// Coefficients are stored in descending power order: coeff(0) multiplies
/// X^deg.  The zero polynomial is the empty sequence; nonzero polynomials
/// have a nonzero leading coefficient.  Values are immutable after
/// construction, so they are safe to share across threads.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs_desc);
  IntPoly(std::initializer_list<long> coeffs_desc);

  static IntPoly zero() { return IntPoly(); }
  static IntPoly constant(Int c);
  /// c * X^power
  static IntPoly monomial(Int c, int power);

  bool is_zero() const { return c_.empty(); }
  /// Degree, or nullopt for the zero polynomial (no sentinel integer).
  std::optional<int> degree() const;
  /// Degree of a known-nonzero polynomial; throws on the zero polynomial.
  int deg() const;

  const Int& leading() const;
  const Int& constant_term() const;
  /// Coefficient of X^j (zero when j exceeds the degree or is negative).
  const Int& coeff_of_power(int j) const;
  /// Descending coefficients; empty for the zero polynomial.
  std::span<const Int> coeffs() const { return c_; }

  /// max_j |a_j|; 0 for the zero polynomial.
  Int height() const;
  /// Exact evaluation at an integer point (Horner).
  Int eval(const Int& t) const;

  bool operator==(const IntPoly&) const = default;

 private:
  std::vector<Int> c_;
};

IntPoly add(const IntPoly& f, const IntPoly& g);
IntPoly sub(const IntPoly& f, const IntPoly& g);
IntPoly negate(const IntPoly& f);
IntPoly mul(const IntPoly& f, const IntPoly& g);
IntPoly mul_scalar(const IntPoly& f, const Int& c);
IntPoly derivative(const IntPoly& f);

/// Positive gcd of all coefficients; throws on the zero polynomial.
Int content(const IntPoly& f);
/// f / content(f), sign-normalized to a positive leading coefficient.
IntPoly primitive_part(const IntPoly& f);

/// Primitive gcd in Z[X] with positive leading coefficient (primitive
/// pseudo-remainder sequence).  Throws when both arguments are zero.
IntPoly gcd_z(const IntPoly& f, const IntPoly& g);

/// primitive_part(f / gcd_z(f, f')): squarefree, same set of complex roots.
IntPoly squarefree_part(const IntPoly& f);

struct StripResult {
  int zero_root_multiplicity;
  IntPoly reduced;  // reduced(0) != 0, f = X^v * reduced
};
StripResult strip_zero_roots(const IntPoly& f);

/// g(X^ell), ell >= 1.
IntPoly compose_power(const IntPoly& g, int ell);

struct PowerDecomposition {
  int m;         // largest m with f = base(X^m)
  IntPoly base;  // the corresponding g
};
/// Pre: f nonzero and nonconstant.  m is the gcd of exponents of nonzero terms.
PowerDecomposition decompose_power(const IntPoly& f);

/// Quotient when g divides f exactly over Z[X]; nullopt otherwise.
std::optional<IntPoly> try_divide_exact(const IntPoly& f, const IntPoly& g);
/// Exact quotient; throws when the division is not exact.
IntPoly divide_exact(const IntPoly& f, const IntPoly& g);
/// Largest e with p^e | f (f, p nonzero, deg p >= 1).
int multiplicity_of_factor(const IntPoly& f, const IntPoly& p);

/// f(-X)
IntPoly substitute_neg_x(const IntPoly& f);
/// f(cX), c != 0
IntPoly scale_argument(const IntPoly& f, const Int& c);
/// X^deg(f) * f(1/X); pre: f(0) != 0.
IntPoly reverse_poly(const IntPoly& f);

std::string to_string(const IntPoly& f);
std::ostream& operator<<(std::ostream& os, const IntPoly& f);

}  // namespace degen
