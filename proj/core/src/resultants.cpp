#include "degen/resultants.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace degen {

namespace {

Int pow_int(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

// Determinant of the Sylvester matrix by Bareiss elimination.  Row swaps are
// tracked through the sign; exact divisions stay exact in the presence of
// swaps, which is the standard fraction-free pivoting scheme.
Int sylvester_determinant(const IntPoly& f, const IntPoly& g) {
  const int m = f.deg();
  const int n = g.deg();
  const int N = m + n;
  std::vector<std::vector<Int>> M(static_cast<size_t>(N),
                                  std::vector<Int>(static_cast<size_t>(N), Int(0)));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) M[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = f.coeffs()[static_cast<size_t>(j)];
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) M[static_cast<size_t>(n + r)][static_cast<size_t>(r + j)] = g.coeffs()[static_cast<size_t>(j)];

  int sign = 1;
  Int prev = 1;
  for (int k = 0; k < N - 1; ++k) {
    if (M[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
      int piv = -1;
      for (int r = k + 1; r < N; ++r)
        if (M[static_cast<size_t>(r)][static_cast<size_t>(k)] != 0) { piv = r; break; }
      if (piv < 0) return Int(0);
      std::swap(M[static_cast<size_t>(k)], M[static_cast<size_t>(piv)]);
      sign = -sign;
    }
    const Int& pivot = M[static_cast<size_t>(k)][static_cast<size_t>(k)];
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j < N; ++j) {
        Int t = M[static_cast<size_t>(i)][static_cast<size_t>(j)] * pivot -
                M[static_cast<size_t>(i)][static_cast<size_t>(k)] * M[static_cast<size_t>(k)][static_cast<size_t>(j)];
        mpz_divexact(M[static_cast<size_t>(i)][static_cast<size_t>(j)].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      M[static_cast<size_t>(i)][static_cast<size_t>(k)] = 0;
    }
    prev = pivot;
  }
  Int det = M[static_cast<size_t>(N - 1)][static_cast<size_t>(N - 1)];
  return sign < 0 ? Int(-det) : det;
}

// f(xY) as a polynomial in Y for a fixed integer x.
IntPoly substitute_scaled(const IntPoly& f, const Int& x) {
  return scale_argument(f, x);
}

// Newton interpolation through (xs[i], ys[i]) over Q, asserting that the
// result is an integer polynomial of degree <= xs.size() - 1.
IntPoly interpolate_integer(const std::vector<Int>& xs, const std::vector<Int>& ys,
                            const char* what) {
  const size_t n = xs.size();
  std::vector<Rat> dd(n);
  for (size_t i = 0; i < n; ++i) dd[i] = Rat(ys[i]);
  // divided differences, dd[i] becomes f[x_0..x_i]
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rat(xs[i] - xs[i - level]);
      if (i == level) break;
    }
  // expand Newton form to descending monomial coefficients
  std::vector<Rat> coeffs;  // descending
  coeffs.push_back(dd[n - 1]);
  for (size_t i = n - 1; i-- > 0;) {
    // coeffs(X) * (X - xs[i]) + dd[i]
    coeffs.push_back(Rat(0));
    for (size_t j = coeffs.size() - 1; j >= 1; --j)
      coeffs[j] -= Rat(xs[i]) * coeffs[j - 1];
    coeffs.back() += dd[i];
  }
  std::vector<Int> out;
  out.reserve(coeffs.size());
  for (const Rat& c : coeffs) {
    if (c.get_den() != 1)
      throw std::logic_error(std::string(what) + ": interpolation produced a non-integer coefficient");
    out.push_back(c.get_num());
  }
  return IntPoly(std::move(out));
}

// Evaluation points 1, -1, 2, -2, ... (zero skipped).
std::vector<Int> evaluation_points(size_t count) {
  std::vector<Int> xs;
  xs.reserve(count);
  long v = 1;
  while (xs.size() < count) {
    xs.emplace_back(v);
    if (xs.size() < count) xs.emplace_back(-v);
    ++v;
  }
  return xs;
}

class CyclotomicTable {
 public:
  static CyclotomicTable& instance() {
    static CyclotomicTable t;
    return t;
  }

  const IntPoly& phi(int k) {
    std::lock_guard<std::mutex> lock(mu_);
    return phi_locked(k);
  }

  long totient(int k) {
    std::lock_guard<std::mutex> lock(mu_);
    return totient_locked(k);
  }

 private:
  const IntPoly& phi_locked(int k) {
    auto it = polys_.find(k);
    if (it != polys_.end()) return it->second;
    IntPoly value;
    if (k == 1) {
      value = IntPoly{1, -1};  // X - 1
    } else {
      // X^k - 1 divided by the product of Phi_d over proper divisors d | k.
      IntPoly num = sub(IntPoly::monomial(1, k), IntPoly::constant(1));
      IntPoly den = IntPoly::constant(1);
      for (int d = 1; d < k; ++d)
        if (k % d == 0) den = mul(den, phi_locked(d));
      value = divide_exact(num, den);
    }
    return polys_.emplace(k, std::move(value)).first->second;
  }

  long totient_locked(int k) {
    auto it = phis_.find(k);
    if (it != phis_.end()) return it->second;
    long result = 1;
    int m = k;
    for (int p = 2; static_cast<long>(p) * p <= m; ++p) {
      if (m % p != 0) continue;
      result *= p - 1;
      m /= p;
      while (m % p == 0) {
        result *= p;
        m /= p;
      }
    }
    if (m > 1) result *= m - 1;
    return phis_.emplace(k, result).first->second;
  }

  std::mutex mu_;
  std::map<int, IntPoly> polys_;
  std::map<int, long> phis_;
};

}  // namespace

Int resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("resultant: zero polynomial");
  const int m = f.deg();
  const int n = g.deg();
  if (m == 0 && n == 0) return Int(1);
  if (m == 0) return pow_int(f.leading(), static_cast<unsigned long>(n));
  if (n == 0) return pow_int(g.leading(), static_cast<unsigned long>(m));
  return sylvester_determinant(f, g);
}

IntPoly ratio_resultant(const IntPoly& f) {
  if (f.is_zero() || f.deg() < 1)
    throw std::invalid_argument("ratio_resultant: need deg f >= 1");
  if (f.constant_term() == 0)
    throw std::invalid_argument("ratio_resultant: f(0) must be nonzero");
  const int n = f.deg();
  const size_t points = static_cast<size_t>(n) * static_cast<size_t>(n) + 1;
  std::vector<Int> xs = evaluation_points(points);
  std::vector<Int> ys;
  ys.reserve(points);
  for (const Int& x : xs) ys.push_back(resultant(f, substitute_scaled(f, x)));
  IntPoly r = interpolate_integer(xs, ys, "ratio_resultant");

  // Postconditions; any failure is an internal error, not a caller error.
  if (r.is_zero() || r.deg() != n * n)
    throw std::logic_error("ratio_resultant: degree drop");
  if (r.eval(1) != 0) throw std::logic_error("ratio_resultant: r(1) != 0");
  IntPoly q = r;
  for (int i = 0; i < n; ++i) {
    auto next = try_divide_exact(q, IntPoly{1, -1});
    if (!next) throw std::logic_error("ratio_resultant: (X-1)^deg does not divide");
    q = std::move(*next);
  }
  return r;
}

IntPoly rotation_product(const IntPoly& f, int k) {
  if (f.is_zero()) throw std::invalid_argument("rotation_product: zero polynomial");
  if (k < 2) throw std::invalid_argument("rotation_product: k must be >= 2");
  const IntPoly& phi = cyclotomic_poly(k);
  const long ph = euler_phi(k);
  if (f.deg() == 0) return IntPoly::constant(pow_int(f.leading(), static_cast<unsigned long>(ph)));

  const size_t points = static_cast<size_t>(ph) * static_cast<size_t>(f.deg()) + 1;
  std::vector<Int> xs = evaluation_points(points);
  std::vector<Int> ys;
  ys.reserve(points);
  for (const Int& x : xs) ys.push_back(resultant(phi, substitute_scaled(f, x)));
  IntPoly r = interpolate_integer(xs, ys, "rotation_product");
  if (r.is_zero() || r.deg() != static_cast<int>(ph) * f.deg())
    throw std::logic_error("rotation_product: degree drop");
  return r;
}

const IntPoly& cyclotomic_poly(int k) {
  if (k < 1) throw std::invalid_argument("cyclotomic_poly: k must be >= 1");
  return CyclotomicTable::instance().phi(k);
}

long euler_phi(int k) {
  if (k < 1) throw std::invalid_argument("euler_phi: k must be >= 1");
  return CyclotomicTable::instance().totient(k);
}

std::vector<int> candidate_orders(int n, OrderMode mode) {
  if (n < 2) throw std::invalid_argument("candidate_orders: n must be >= 2");
  long bound = mode == OrderMode::safe
                   ? static_cast<long>(n) * n
                   : std::max<long>(n, static_cast<long>(n / 2) * ((n + 1) / 2));
  // phi(k) >= sqrt(k/2) for all k, so k <= 2*bound^2 exhausts the candidates.
  std::vector<int> orders;
  for (int k = 2; k <= 2 * bound * bound + 1; ++k)
    if (euler_phi(k) <= bound) orders.push_back(k);
  return orders;
}

}  // namespace degen
