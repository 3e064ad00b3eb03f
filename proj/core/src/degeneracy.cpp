#include "degen/degeneracy.hpp"

#include <cmath>
#include <stdexcept>

#include "degen/analytic.hpp"

namespace degen {

DegeneracyReport is_degenerate(const IntPoly& f, OrderMode mode) {
  if (f.is_zero()) throw std::invalid_argument("is_degenerate: zero polynomial");

  DegeneracyReport report;
  auto [v, ftilde] = strip_zero_roots(f);
  report.zero_root_multiplicity = v;

  IntPoly fstar = squarefree_part(ftilde);
  report.reduced_degree = fstar.deg();
  if (fstar.deg() <= 1) return report;

  IntPoly r = ratio_resultant(fstar);
  for (int k : candidate_orders(fstar.deg(), mode))
    if (try_divide_exact(r, cyclotomic_poly(k))) report.witness_orders.push_back(k);
  report.degenerate = !report.witness_orders.empty();
  return report;
}

bool fast_witness(const IntPoly& f, int k) {
  if (f.is_zero() || f.deg() < 1)
    throw std::invalid_argument("fast_witness: need deg f >= 1");
  if (f.constant_term() == 0)
    throw std::invalid_argument("fast_witness: f(0) must be nonzero");
  if (k < 2) throw std::invalid_argument("fast_witness: k must be >= 2");
  if (gcd_z(f, derivative(f)).deg() != 0)
    throw std::invalid_argument("fast_witness: f must be squarefree");
  return resultant(f, rotation_product(f, k)) == 0;
}

ClassStructure equivalence_stats(const IntPoly& f, OrderMode mode) {
  if (f.is_zero() || f.deg() < 2)
    throw std::invalid_argument("equivalence_stats: need deg f >= 2");
  // Cheap certain witnesses of reducibility; full irreducibility is on the caller.
  if (f.constant_term() == 0 || gcd_z(f, derivative(f)).deg() != 0)
    throw std::domain_error("input not irreducible");

  const int n = f.deg();
  IntPoly r = ratio_resultant(f);
  long t = 0;
  for (int k : candidate_orders(n, mode))
    t += euler_phi(k) * multiplicity_of_factor(r, cyclotomic_poly(k));
  if (t % n != 0) throw std::domain_error("input not irreducible");
  const long ell = 1 + t / n;
  if (n % ell != 0) throw std::domain_error("input not irreducible");
  return {static_cast<int>(n / ell), static_cast<int>(ell)};
}

bool prefilter_possible(const IntPoly& f, double rel_gap) {
  if (f.is_zero() || f.deg() < 2)
    throw std::invalid_argument("prefilter_possible: need deg f >= 2");

  auto [v, ftilde] = strip_zero_roots(f);
  struct ModInterval {
    double modulus;
    double radius;
  };
  std::vector<ModInterval> mods;
  if (v > 0) mods.push_back({0.0, 0.0});  // exact zero root
  if (ftilde.deg() >= 1) {
    for (const CertifiedRoot& r : roots_numeric(ftilde)) {
      if (!std::isfinite(r.radius) || !std::isfinite(std::abs(r.approx))) return true;
      mods.push_back({std::abs(r.approx), r.radius});
    }
  }
  for (size_t i = 0; i < mods.size(); ++i)
    for (size_t j = i + 1; j < mods.size(); ++j) {
      double gap = std::fabs(mods[i].modulus - mods[j].modulus);
      double need = mods[i].radius + mods[j].radius +
                    rel_gap * std::max(mods[i].modulus, mods[j].modulus);
      if (gap <= need) return true;
    }
  return false;
}

bool quadratic_is_degenerate(const Int& a0, const Int& a1, const Int& a2) {
  if (a0 == 0) throw std::invalid_argument("quadratic_is_degenerate: a0 must be nonzero");
  if (a1 == 0) return a2 != 0;
  Int t = a1 * a1;
  Int p = a0 * a2;
  return t == p || t == 2 * p || t == 3 * p;
}

}  // namespace degen
