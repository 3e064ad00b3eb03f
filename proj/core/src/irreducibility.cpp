#include "degen/irreducibility.hpp"

#include <algorithm>
#include <stdexcept>

namespace degen {

namespace {

// Positive divisors by trial division; inputs in this project are modest.
std::vector<Int> positive_divisors(const Int& n) {
  Int m = abs(n);
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      Int q = m / d;
      if (q != d) large.push_back(q);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_perfect_square(const Int& n, Int* root = nullptr) {
  if (n < 0) return false;
  Int r = sqrt(n);
  if (r * r == n) {
    if (root) *root = r;
    return true;
  }
  return false;
}

// Does the monic integer quartic Y^4 + g1 Y^3 + g2 Y^2 + g3 Y + g4 (g4 != 0)
// split into two monic integer quadratics?
bool monic_quartic_splits(const Int& g1, const Int& g2, const Int& g3, const Int& g4) {
  for (const Int& d : positive_divisors(g4)) {
    for (int sign = 0; sign < 2; ++sign) {
      Int q = sign ? Int(-d) : d;
      Int s = g4 / q;
      // (Y^2 + pY + q)(Y^2 + rY + s): p + r = g1, pr = g2 - q - s, ps + qr = g3
      Int disc = g1 * g1 - 4 * (g2 - q - s);
      Int root;
      if (!is_perfect_square(disc, &root)) continue;
      if ((g1 + root) % 2 != 0) continue;
      Int p = (g1 + root) / 2;
      Int r = g1 - p;
      if (p * s + q * r == g3) return true;
      if (r * s + q * p == g3) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Rat> rational_roots(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  std::vector<Rat> roots;
  auto [v, ft] = strip_zero_roots(f);
  if (v > 0) roots.emplace_back(0);
  if (ft.deg() == 0) return roots;

  std::vector<Int> ps = positive_divisors(ft.constant_term());
  std::vector<Int> qs = positive_divisors(ft.leading());
  for (const Int& p : ps) {
    for (const Int& q : qs) {
      Int g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      if (g != 1) continue;
      for (int sign = 0; sign < 2; ++sign) {
        Rat cand(sign ? Int(-p) : p, q);
        cand.canonicalize();
        Rat val(0);  // exact Horner over Q
        for (const Int& a : ft.coeffs()) val = val * cand + Rat(a);
        if (val == 0) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Rat& a, const Rat& b) { return a < b; });
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

bool is_irreducible_q(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("is_irreducible_q: zero polynomial");
  const int n = f.deg();
  if (n < 1 || n > 4)
    throw std::domain_error("is_irreducible_q: supported degrees are 1..4");
  if (n == 1) return true;

  IntPoly g = primitive_part(f);
  if (!rational_roots(g).empty()) return false;
  if (n <= 3) return true;

  // Quartic with no linear factor: check for a quadratic * quadratic split.
  // Substitute Y = a0 X and clear denominators: h(Y) = a0^3 g(Y/a0) is monic
  // with integer coefficients and is irreducible iff g is.
  const Int& a0 = g.leading();
  Int h1 = g.coeff_of_power(3);
  Int h2 = g.coeff_of_power(2) * a0;
  Int h3 = g.coeff_of_power(1) * a0 * a0;
  Int h4 = g.coeff_of_power(0) * a0 * a0 * a0;
  return !monic_quartic_splits(h1, h2, h3, h4);
}

bool eisenstein_check(const IntPoly& f, const Int& p) {
  if (f.is_zero()) throw std::invalid_argument("eisenstein_check: zero polynomial");
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
    throw std::invalid_argument("eisenstein_check: p must be prime");
  if (f.deg() < 1) return false;
  if (f.leading() % p == 0) return false;
  for (int j = 0; j < f.deg(); ++j)
    if (f.coeff_of_power(j) % p != 0) return false;
  return f.constant_term() % (p * p) != 0;
}

}  // namespace degen
