#include "degen/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "aberth.hpp"

namespace degen {

namespace {

std::vector<double> to_doubles(const IntPoly& f) {
  std::vector<double> c;
  c.reserve(f.coeffs().size());
  for (const Int& a : f.coeffs()) c.push_back(a.get_d());
  return c;
}

}  // namespace

std::vector<CertifiedRoot> roots_numeric(const IntPoly& f) {
  if (f.is_zero() || f.deg() < 1)
    throw std::invalid_argument("roots_numeric: need deg f >= 1");

  auto [v, ftilde] = strip_zero_roots(f);
  std::vector<CertifiedRoot> out;
  out.reserve(static_cast<size_t>(f.deg()));
  for (int i = 0; i < v; ++i) out.push_back({{0.0, 0.0}, 0.0});

  const int d = ftilde.deg();
  if (d >= 1) {
    std::vector<double> c = to_doubles(ftilde);
    std::vector<std::complex<double>> roots(static_cast<size_t>(d));
    std::vector<double> radii(static_cast<size_t>(d));
    detail::aberth_solve(c, roots, radii);
    for (int i = 0; i < d; ++i) out.push_back({roots[static_cast<size_t>(i)], radii[static_cast<size_t>(i)]});
  }
  return out;
}

MahlerResult mahler_measure(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("mahler_measure: zero polynomial");
  double a0 = std::fabs(f.leading().get_d());
  if (f.deg() == 0) return {a0, a0, a0};

  MahlerResult m{a0, a0, a0};
  for (const CertifiedRoot& r : roots_numeric(f)) {
    double mod = std::abs(r.approx);
    m.value *= std::max(1.0, mod);
    m.lower *= std::max(1.0, mod - r.radius);
    m.upper *= std::max(1.0, mod + r.radius);
  }
  return m;
}

double cauchy_radius(const IntPoly& f) {
  if (f.is_zero() || f.deg() < 1)
    throw std::invalid_argument("cauchy_radius: need deg f >= 1");
  const int n = f.deg();
  bool any_low = false;
  for (int j = 0; j < n; ++j)
    if (f.coeff_of_power(j) != 0) { any_low = true; break; }
  if (!any_low)
    throw std::invalid_argument("cauchy_radius: a_1..a_n must not all vanish");

  // companion: |a_0| x^n - sum_{j>=1} |a_j| x^(n-j), descending doubles
  std::vector<double> c = to_doubles(f);
  for (double& x : c) x = std::fabs(x);
  for (size_t i = 1; i < c.size(); ++i) c[i] = -c[i];

  auto eval = [&](double x, double* deriv = nullptr) {
    double fz = c[0], dz = 0.0;
    for (size_t j = 1; j < c.size(); ++j) {
      dz = dz * x + fz;
      fz = fz * x + c[j];
    }
    if (deriv) *deriv = dz;
    return fz;
  };

  double hi = 1.0;
  for (size_t j = 1; j < c.size(); ++j) hi = std::max(hi, std::fabs(c[j]) / c[0]);
  hi += 1.0;
  while (eval(hi) <= 0) hi *= 2;  // paranoia against rounding; R < hi holds exactly

  double lo = 0.0;
  for (int it = 0; it < 200 && (hi - lo) > 1e-14 * hi; ++it) {
    double mid = 0.5 * (lo + hi);
    (eval(mid) > 0 ? hi : lo) = mid;
  }
  double r = 0.5 * (lo + hi);
  for (int it = 0; it < 8; ++it) {
    double dz;
    double fz = eval(r, &dz);
    if (dz == 0) break;
    double next = r - fz / dz;
    if (!std::isfinite(next) || std::fabs(next - r) < 1e-13 * std::fabs(r)) {
      r = next > 0 ? next : r;
      break;
    }
    r = next;
  }
  return r;
}

Tristate has_dominant_root(const IntPoly& f) {
  if (f.is_zero() || f.deg() < 1)
    throw std::invalid_argument("has_dominant_root: need deg f >= 1");
  if (f.deg() == 1) return Tristate::yes;

  std::vector<CertifiedRoot> roots = roots_numeric(f);
  size_t top = 0;
  double topmod = -1.0;
  for (size_t i = 0; i < roots.size(); ++i) {
    double m = std::abs(roots[i].approx);
    if (!std::isfinite(m) || !std::isfinite(roots[i].radius)) return Tristate::uncertain;
    if (m > topmod) { topmod = m; top = i; }
  }

  bool separated = true;
  for (size_t j = 0; j < roots.size(); ++j) {
    if (j == top) continue;
    if (topmod - roots[top].radius <= std::abs(roots[j].approx) + roots[j].radius)
      separated = false;
  }
  if (separated) return Tristate::yes;

  // Not separable in modulus.  If some other root is certified distinct from
  // the top one (disjoint discs all around) while its modulus interval
  // overlaps the top interval, no usable dominant root exists.
  auto singleton = [&](size_t i) {
    for (size_t j = 0; j < roots.size(); ++j) {
      if (j == i) continue;
      if (std::abs(roots[i].approx - roots[j].approx) <= roots[i].radius + roots[j].radius)
        return false;
    }
    return true;
  };
  if (singleton(top)) {
    for (size_t j = 0; j < roots.size(); ++j) {
      if (j == top || !singleton(j)) continue;
      if (topmod - roots[top].radius <= std::abs(roots[j].approx) + roots[j].radius)
        return Tristate::no;
    }
  }
  return Tristate::uncertain;
}

bool mahler_bounds_check(const IntPoly& f) {
  if (f.is_zero()) return false;
  const int n = f.deg();
  double h = f.height().get_d();
  double lo = h * std::ldexp(1.0, -n);
  double hi = h * std::sqrt(static_cast<double>(n) + 1.0);
  MahlerResult m = mahler_measure(f);
  const double tol = 1e-9;
  return m.upper >= lo * (1.0 - tol) && m.lower <= hi * (1.0 + tol);
}

}  // namespace degen
