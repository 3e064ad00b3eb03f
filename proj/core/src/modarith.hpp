#pragma once

// 64-bit prime-field kernels for the census fast path.  A nonzero resultant
// modulo a prime certifies a nonzero integer resultant, which eliminates
// almost every candidate witness order without bignum work.  Field
// multiplication is Montgomery-based; remainder sequences avoid per-step
// inversions by pseudo-division with a single final inversion.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace degen::detail {

uint64_t powmod_plain(uint64_t a, uint64_t e, uint64_t p);
bool is_prime_u64(uint64_t n);

/// Smallest prime p > start with p ≡ 1 (mod k); 0 if none exists below 2^63.
uint64_t find_prime_1mod(uint64_t k, uint64_t start);

/// An element of multiplicative order exactly k in F_p (requires k | p-1).
uint64_t element_of_order(uint64_t k, uint64_t p);

/// Montgomery arithmetic mod an odd prime p < 2^62 (R = 2^64).
struct MontCtx {
  uint64_t p = 0;
  uint64_t pinv = 0;   // -p^{-1} mod 2^64
  uint64_t one_m = 0;  // 2^64 mod p
  uint64_t r2 = 0;     // 2^128 mod p

  void init(uint64_t prime);

  uint64_t mul(uint64_t a, uint64_t b) const {
    __uint128_t t = static_cast<__uint128_t>(a) * b;
    uint64_t m = static_cast<uint64_t>(t) * pinv;
    uint64_t u = static_cast<uint64_t>((t + static_cast<__uint128_t>(m) * p) >> 64);
    return u >= p ? u - p : u;
  }
  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + (p - b); }
  uint64_t to_mont(uint64_t a) const { return mul(a % p, r2); }
  uint64_t from_mont(uint64_t a) const { return mul(a, 1); }
  uint64_t pow(uint64_t base_m, uint64_t e) const {
    uint64_t r = one_m;
    while (e) {
      if (e & 1) r = mul(r, base_m);
      base_m = mul(base_m, base_m);
      e >>= 1;
    }
    return r;
  }
  uint64_t inv(uint64_t a_m) const { return pow(a_m, p - 2); }
  uint64_t to_mont_signed(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(p);
    if (r < 0) r += static_cast<int64_t>(p);
    return to_mont(static_cast<uint64_t>(r));
  }
};

inline constexpr int kMaxCensusDegree = 8;
inline constexpr int kMaxScreenPoints = kMaxCensusDegree * kMaxCensusDegree + 1;

/// Resultant over F_p of two nonzero polynomials given by descending
/// Montgomery-domain coefficients with nonzero leading entries; both spans
/// are clobbered.  Returns the Montgomery-domain resultant (0 iff the true
/// resultant vanishes mod p).
uint64_t resultant_mont(std::span<uint64_t> a, std::span<uint64_t> b, const MontCtx& M);

/// One screening prime: Montgomery context, inverses of the small integers
/// that appear as interpolation-node differences, and a root of unity of
/// exact order k for every candidate order.
struct ScreenPrime {
  MontCtx m;
  std::vector<uint64_t> inv_small;                 // [d] = (1/d) mod p, Montgomery
  std::vector<std::pair<int, uint64_t>> omegas;    // (k, omega_k), Montgomery

  /// p must satisfy p ≡ 1 (mod k) for every k in orders.
  void init(uint64_t p, std::span<const int> orders);

  uint64_t omega_of(int k) const {
    for (const auto& [kk, w] : omegas)
      if (kk == k) return w;
    return 0;
  }
};

/// Newton form of x -> Res_Y(f(Y), f(xY)) mod p, built from d^2 + 1 modular
/// resultants at the points 1, -1, 2, -2, ...; evaluating at a k-th root of
/// unity screens witness order k (nonzero => order k certainly absent).
class RatioScreen {
 public:
  void build(std::span<const int64_t> f_desc, const ScreenPrime& sp);
  /// R(omega) != 0 in F_p?
  bool nonzero_at(uint64_t omega_mont, const ScreenPrime& sp) const;

 private:
  int npoints_ = 0;
  std::array<uint64_t, kMaxScreenPoints> xs_{};      // Montgomery
  std::array<uint64_t, kMaxScreenPoints> newton_{};  // Montgomery
};

/// Res(f, f') mod p nonzero => f squarefree (and the converse failure is
/// caught by the exact path).  f_desc holds the true degree; deg >= 1.
bool squarefree_screen_nonzero(std::span<const int64_t> f_desc, const ScreenPrime& sp);

}  // namespace degen::detail
