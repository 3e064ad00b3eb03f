#pragma once

#include <stdexcept>
#include <string>

namespace degen {

inline constexpr const char* kVersion = "1.0.0";

/// Candidate-order bound used when searching for root-of-unity ratios.
///
/// safe:  orders k with phi(k) <= n^2.  A ratio of two algebraic numbers of
///        degree <= n lies in a field of degree <= n^2, so a root of unity
///        among such ratios has phi(k) <= n^2.  Always sound.
/// tight: orders k with phi(k) <= max(n, floor(n/2)*ceil(n/2)).  A ratio of
///        two conjugates of a degree-n algebraic number that is a root of
///        unity has degree <= n; a ratio of roots of two distinct irreducible
///        factors of degrees d1 + d2 <= n has degree <= d1*d2, which is at
///        most floor(n/2)*ceil(n/2).  Sound, and much smaller for n >= 3.
enum class OrderMode { safe, tight };

enum class Variant { monic, general };

enum class Tristate { yes, no, uncertain };

inline const char* to_string(Variant v) {
  return v == Variant::monic ? "monic" : "general";
}

inline const char* to_string(OrderMode m) {
  return m == OrderMode::safe ? "safe" : "tight";
}

inline const char* to_string(Tristate t) {
  switch (t) {
    case Tristate::yes: return "true";
    case Tristate::no: return "false";
    default: return "uncertain";
  }
}

}  // namespace degen
