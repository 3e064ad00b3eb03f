#include "modarith.hpp"

#include <stdexcept>

namespace degen::detail {

namespace {

uint64_t mulmod_plain(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

}  // namespace

uint64_t powmod_plain(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod_plain(r, a, p);
    a = mulmod_plain(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
    if (n % q == 0) return n == q;
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic Miller-Rabin base set for 64-bit integers
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_plain(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_plain(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

uint64_t find_prime_1mod(uint64_t k, uint64_t start) {
  if (k == 0 || k > (1ull << 62)) return 0;
  uint64_t t = start / k + 1;
  while (true) {
    if (t > (~0ull >> 1) / k) return 0;  // p would exceed 2^63
    uint64_t p = k * t + 1;
    if (p > start && is_prime_u64(p)) return p;
    ++t;
  }
}

uint64_t element_of_order(uint64_t k, uint64_t p) {
  if ((p - 1) % k != 0) throw std::logic_error("element_of_order: k does not divide p-1");
  std::vector<uint64_t> prime_factors;
  uint64_t m = k;
  for (uint64_t q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      prime_factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) prime_factors.push_back(m);

  for (uint64_t g = 2; g < p; ++g) {
    uint64_t w = powmod_plain(g, (p - 1) / k, p);
    if (w == 1) continue;
    bool exact = true;
    for (uint64_t q : prime_factors)
      if (powmod_plain(w, k / q, p) == 1) {
        exact = false;
        break;
      }
    if (exact) return w;
  }
  throw std::logic_error("element_of_order: no element found");
}

void MontCtx::init(uint64_t prime) {
  p = prime;
  // Newton iteration for p^{-1} mod 2^64, then negate.
  uint64_t x = p;
  for (int i = 0; i < 6; ++i) x *= 2 - p * x;
  pinv = ~x + 1;  // -p^{-1} mod 2^64
  one_m = (~0ull % p) + 1;
  if (one_m == p) one_m = 0;
  r2 = one_m;
  for (int i = 0; i < 64; ++i) r2 = add(r2, r2);
}

uint64_t resultant_mont(std::span<uint64_t> a, std::span<uint64_t> b, const MontCtx& M) {
  size_t alen = a.size(), blen = b.size();
  uint64_t num = M.one_m;  // accumulated numerator, Montgomery
  uint64_t den = M.one_m;  // accumulated denominator, Montgomery
  bool negate = false;

  if (alen < blen) {
    std::swap(a, b);
    std::swap(alen, blen);
    if (((alen - 1) & 1) && ((blen - 1) & 1)) negate = !negate;
  }
  while (true) {
    if (blen == 1) {
      num = M.mul(num, M.pow(b[0], alen - 1));
      break;
    }
    const size_t da = alen - 1, db = blen - 1;
    const uint64_t b0 = b[0];
    // pseudo-division: every elimination step scales the tail by b0, so the
    // final remainder is b0^(da-db+1) times the true one
    size_t steps = 0;
    for (size_t i = 0; i + blen <= alen; ++i, ++steps) {
      uint64_t lead = a[i];
      for (size_t j = i + 1; j < alen; ++j) {
        uint64_t scaled = M.mul(b0, a[j]);
        size_t bi = j - i;
        a[j] = bi <= db ? M.sub(scaled, M.mul(lead, b[bi])) : scaled;
      }
      a[i] = 0;
    }
    size_t lead = alen - blen + 1;
    while (lead < alen && a[lead] == 0) ++lead;
    if (lead == alen) return 0;  // b divides a: common factor, resultant 0
    const size_t dr = alen - 1 - lead;

    // Res(a,b) = (-1)^(da db) lc(b)^(da-dr) Res(b, r); remainder here is
    // b0^steps * r, and Res(b, c*r) = c^db * Res(b, r).
    num = M.mul(num, M.pow(b0, da - dr));
    den = M.mul(den, M.pow(M.pow(b0, steps), db));
    if ((da & 1) && (db & 1)) negate = !negate;

    std::span<uint64_t> r = a.subspan(lead);
    a = b;
    alen = blen;
    b = r;
    blen = r.size();
  }
  uint64_t res = M.mul(num, M.inv(den));
  return negate ? (res == 0 ? 0 : M.p - res) : res;
}

void ScreenPrime::init(uint64_t p, std::span<const int> orders) {
  m.init(p);
  const int cap = 2 * kMaxScreenPoints + 4;
  inv_small.assign(static_cast<size_t>(cap) + 1, 0);
  for (int d = 1; d <= cap; ++d) inv_small[static_cast<size_t>(d)] = m.inv(m.to_mont(static_cast<uint64_t>(d)));
  omegas.clear();
  omegas.reserve(orders.size());
  for (int k : orders)
    omegas.emplace_back(k, m.to_mont(element_of_order(static_cast<uint64_t>(k), p)));
}

void RatioScreen::build(std::span<const int64_t> f_desc, const ScreenPrime& sp) {
  const MontCtx& M = sp.m;
  const int n = static_cast<int>(f_desc.size()) - 1;
  npoints_ = n * n + 1;

  std::array<uint64_t, kMaxCensusDegree + 1> fm;
  for (int i = 0; i <= n; ++i) fm[static_cast<size_t>(i)] = M.to_mont_signed(f_desc[static_cast<size_t>(i)]);

  std::array<uint64_t, kMaxCensusDegree + 1> fa, fb;
  std::array<int64_t, kMaxScreenPoints> xplain;
  for (int t = 0; t < npoints_; ++t) {
    const int64_t x = (t % 2 == 0) ? (t / 2 + 1) : -(t / 2 + 1);
    xplain[static_cast<size_t>(t)] = x;
    const uint64_t xm = M.to_mont_signed(x);
    xs_[static_cast<size_t>(t)] = xm;
    uint64_t xp = M.one_m;
    for (int i = n; i >= 0; --i) {
      fb[static_cast<size_t>(i)] = M.mul(fm[static_cast<size_t>(i)], xp);
      xp = M.mul(xp, xm);
    }
    fa = fm;
    newton_[static_cast<size_t>(t)] =
        resultant_mont(std::span<uint64_t>(fa.data(), static_cast<size_t>(n) + 1),
                       std::span<uint64_t>(fb.data(), static_cast<size_t>(n) + 1), M);
  }

  // divided differences; node differences are small integers, inverted by table
  for (int level = 1; level < npoints_; ++level)
    for (int i = npoints_ - 1; i >= level; --i) {
      uint64_t numd = M.sub(newton_[static_cast<size_t>(i)], newton_[static_cast<size_t>(i - 1)]);
      int64_t diff = xplain[static_cast<size_t>(i)] - xplain[static_cast<size_t>(i - level)];
      uint64_t invd = diff > 0 ? sp.inv_small[static_cast<size_t>(diff)]
                               : M.p - sp.inv_small[static_cast<size_t>(-diff)];
      newton_[static_cast<size_t>(i)] = M.mul(numd, invd);
    }
}

bool RatioScreen::nonzero_at(uint64_t omega_mont, const ScreenPrime& sp) const {
  const MontCtx& M = sp.m;
  uint64_t acc = newton_[static_cast<size_t>(npoints_ - 1)];
  for (int i = npoints_ - 2; i >= 0; --i) {
    acc = M.mul(acc, M.sub(omega_mont, xs_[static_cast<size_t>(i)]));
    acc = M.add(acc, newton_[static_cast<size_t>(i)]);
  }
  return acc != 0;
}

bool squarefree_screen_nonzero(std::span<const int64_t> f_desc, const ScreenPrime& sp) {
  const MontCtx& M = sp.m;
  const int n = static_cast<int>(f_desc.size()) - 1;
  std::array<uint64_t, kMaxCensusDegree + 1> fa;
  std::array<uint64_t, kMaxCensusDegree + 1> fd;
  for (int i = 0; i <= n; ++i) fa[static_cast<size_t>(i)] = M.to_mont_signed(f_desc[static_cast<size_t>(i)]);
  for (int i = 0; i < n; ++i)
    fd[static_cast<size_t>(i)] = M.mul(fa[static_cast<size_t>(i)], M.to_mont(static_cast<uint64_t>(n - i)));
  // derivative may lose degree mod p only if p | n*a0, impossible for small inputs
  return resultant_mont(std::span<uint64_t>(fa.data(), static_cast<size_t>(n) + 1),
                        std::span<uint64_t>(fd.data(), static_cast<size_t>(n)), M) != 0;
}

}  // namespace degen::detail
