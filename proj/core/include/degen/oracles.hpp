#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "degen/common.hpp"

namespace degen {

/// Exact integer square root of n >= 0.
long long isqrt_ll(long long n);

/// Number of reducible degenerate monic quadratics of height <= H:
/// floor(sqrt(H)).  Pre: H >= 1.
long long r2_closed(long long H);

/// Number of irreducible degenerate monic quadratics of height <= H:
/// 2H + floor(sqrt(H)) + 2 floor(sqrt(H/2)) + 2 floor(sqrt(H/3)).
/// floor(sqrt(H/c)) is computed as isqrt(floor(H/c)), which equals the count
/// of integers a >= 1 with a^2 c <= H.  Pre: H >= 1.
long long i2_closed(long long H);

/// i2_closed + r2_closed.
long long d2_closed(long long H);

/// Number of reducible degenerate general quadratics of height <= H:
/// 2 * sum over squarefree c <= H of floor(sqrt(H/c))^2.  Pre: H >= 1.
long long r2star_closed(long long H);

/// Number of monic cubics of the shape (X+a)(X^2+b), b != 0, of height <= H:
/// 2 * sum_{b=1..H} (2 floor(H/b) + 1).  Pre: H >= 1.
long long cubic_linear_family_count(long long H);

/// squarefree flags for 0..N (index 0 unused, set false).
std::vector<bool> squarefree_sieve(long long N);

/// Euler totients for 0..N (index 0 set to 0).
std::vector<long long> phi_sieve(long long N);

/// sum_{j<=N} phi(j)/j^2 in double precision.
double phi_ratio_sum(long long N);

enum class Quantity { D, I, R };

/// A known asymptotic constant: either a plain rational or a rational
/// multiple of 1/pi^2, or unknown.
struct AsymptoticConstant {
  enum class Kind { unknown, rational, rational_over_pi_squared } kind = Kind::unknown;
  long long num = 0;
  long long den = 1;
  /// Floating-point value; NaN when unknown.
  double value() const;
  std::string text() const;
};

struct AsymptoticTarget {
  Variant variant = Variant::monic;
  int n = 0;                 // 0 encodes "any n >= 4" rows
  bool n_is_lower_bound = false;
  Quantity quantity = Quantity::D;
  std::string normalizer;    // e.g. "H log H", "H^2", "H^(n/p)"
  AsymptoticConstant constant;
};

/// The full table of growth rates and (when known) limit constants.
const std::vector<AsymptoticTarget>& asymptotic_targets();

/// Resolves the applicable table row for a concrete (variant, n, quantity),
/// instantiating normalizers that depend on n (p = smallest prime divisor).
std::optional<AsymptoticTarget> lookup_target(Variant variant, int n, Quantity q);

}  // namespace degen
