#include "degen/oracles.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace degen {

long long isqrt_ll(long long n) {
  if (n < 0) throw std::invalid_argument("isqrt_ll: negative argument");
  if (n == 0) return 0;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

namespace {

void require_height(long long H) {
  if (H < 1) throw std::invalid_argument("oracle: H must be >= 1");
}

}  // namespace

long long r2_closed(long long H) {
  require_height(H);
  return isqrt_ll(H);
}

long long i2_closed(long long H) {
  require_height(H);
  return 2 * H + isqrt_ll(H) + 2 * isqrt_ll(H / 2) + 2 * isqrt_ll(H / 3);
}

long long d2_closed(long long H) { return i2_closed(H) + r2_closed(H); }

long long r2star_closed(long long H) {
  require_height(H);
  std::vector<bool> sf = squarefree_sieve(H);
  long long sum = 0;
  for (long long c = 1; c <= H; ++c) {
    if (!sf[static_cast<size_t>(c)]) continue;
    long long s = isqrt_ll(H / c);
    sum += s * s;
  }
  return 2 * sum;
}

long long cubic_linear_family_count(long long H) {
  require_height(H);
  long long sum = 0;
  for (long long b = 1; b <= H; ++b) sum += 2 * (H / b) + 1;
  return 2 * sum;
}

std::vector<bool> squarefree_sieve(long long N) {
  if (N < 1) throw std::invalid_argument("squarefree_sieve: N must be >= 1");
  std::vector<bool> sf(static_cast<size_t>(N) + 1, true);
  sf[0] = false;
  for (long long p = 2; p * p <= N; ++p)
    for (long long q = p * p; q <= N; q += p * p) sf[static_cast<size_t>(q)] = false;
  return sf;
}

std::vector<long long> phi_sieve(long long N) {
  if (N < 1) throw std::invalid_argument("phi_sieve: N must be >= 1");
  std::vector<long long> phi(static_cast<size_t>(N) + 1);
  for (long long i = 0; i <= N; ++i) phi[static_cast<size_t>(i)] = i;
  for (long long p = 2; p <= N; ++p) {
    if (phi[static_cast<size_t>(p)] != p) continue;  // not prime
    for (long long q = p; q <= N; q += p)
      phi[static_cast<size_t>(q)] -= phi[static_cast<size_t>(q)] / p;
  }
  phi[0] = 0;
  return phi;
}

double phi_ratio_sum(long long N) {
  std::vector<long long> phi = phi_sieve(N);
  double sum = 0.0;
  for (long long j = N; j >= 1; --j) {
    double dj = static_cast<double>(j);
    sum += static_cast<double>(phi[static_cast<size_t>(j)]) / (dj * dj);
  }
  return sum;
}

double AsymptoticConstant::value() const {
  switch (kind) {
    case Kind::rational:
      return static_cast<double>(num) / static_cast<double>(den);
    case Kind::rational_over_pi_squared:
      return static_cast<double>(num) / static_cast<double>(den) / (M_PI * M_PI);
    default:
      return std::numeric_limits<double>::quiet_NaN();
  }
}

std::string AsymptoticConstant::text() const {
  switch (kind) {
    case Kind::rational:
      return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    case Kind::rational_over_pi_squared:
      return (den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den)) +
             "/pi^2";
    default:
      return "unknown";
  }
}

namespace {

AsymptoticConstant rational_const(long long num, long long den = 1) {
  return {AsymptoticConstant::Kind::rational, num, den};
}
AsymptoticConstant pi2_const(long long num, long long den = 1) {
  return {AsymptoticConstant::Kind::rational_over_pi_squared, num, den};
}
AsymptoticConstant unknown_const() { return {}; }

int smallest_prime_divisor(int n) {
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

}  // namespace

const std::vector<AsymptoticTarget>& asymptotic_targets() {
  static const std::vector<AsymptoticTarget> table = {
      {Variant::monic, 3, false, Quantity::D, "H log H", rational_const(4)},
      {Variant::monic, 4, true, Quantity::D, "H^(n-2)", unknown_const()},
      {Variant::monic, 0, true, Quantity::I, "H^(n/p)", unknown_const()},
      {Variant::general, 2, false, Quantity::I, "H^2", rational_const(4)},
      {Variant::general, 2, false, Quantity::R, "H log H", pi2_const(12)},
      {Variant::general, 2, false, Quantity::D, "H^2", rational_const(4)},
      {Variant::general, 3, false, Quantity::D, "H^2 log H", pi2_const(96)},
      {Variant::general, 4, true, Quantity::D, "H^(n-1)", unknown_const()},
      {Variant::general, 0, true, Quantity::I, "H^(1+n/p)", unknown_const()},
  };
  return table;
}

std::optional<AsymptoticTarget> lookup_target(Variant variant, int n, Quantity q) {
  if (n < 2) return std::nullopt;
  for (const AsymptoticTarget& t : asymptotic_targets()) {
    if (t.variant != variant || t.quantity != q) continue;
    if (t.n_is_lower_bound ? n < (t.n == 0 ? 2 : t.n) : n != t.n) continue;
    AsymptoticTarget out = t;
    out.n = n;
    out.n_is_lower_bound = false;
    const int p = smallest_prime_divisor(n);
    if (out.normalizer == "H^(n/p)") {
      out.normalizer = "H^" + std::to_string(n / p);
      if (n / p == 1) out.normalizer = "H";
    } else if (out.normalizer == "H^(1+n/p)") {
      out.normalizer = "H^" + std::to_string(1 + n / p);
    } else if (out.normalizer == "H^(n-2)") {
      out.normalizer = n == 2 ? "1" : (n == 3 ? "H" : "H^" + std::to_string(n - 2));
    } else if (out.normalizer == "H^(n-1)") {
      out.normalizer = "H^" + std::to_string(n - 1);
    }
    return out;
  }
  return std::nullopt;
}

}  // namespace degen
