#pragma once

// Aberth-Ehrlich simultaneous root iteration on double coefficients, with
// Weierstrass-correction inclusion radii.  Shared by the analytic module and
// the census prefilter; works on caller-provided buffers so the census inner
// loop stays allocation-free.

#include <cmath>
#include <complex>
#include <limits>
#include <span>

namespace degen::detail {

struct AberthParams {
  int max_iters = 500;
  double residual_tol = 1e-14;
};

// coeffs_desc: descending coefficients, coeffs_desc[0] != 0 and constant
// term != 0 (caller strips zero roots).  roots/radii must each have room for
// deg = coeffs_desc.size() - 1 entries.  The union of the discs
// D(roots[i], radii[i]) contains every root; pairwise disjoint discs contain
// exactly one root each.
inline void aberth_solve(std::span<const double> coeffs_desc,
                         std::span<std::complex<double>> roots,
                         std::span<double> radii,
                         const AberthParams& params = {}) {
  using C = std::complex<double>;
  const int d = static_cast<int>(coeffs_desc.size()) - 1;
  const double* c = coeffs_desc.data();

  if (d == 1) {
    roots[0] = C(-c[1] / c[0], 0.0);
    // one long-division step is exact up to rounding; certify via residual
    double scale = std::fabs(c[0]) * std::abs(roots[0]) + std::fabs(c[1]);
    radii[0] = 4.0 * std::numeric_limits<double>::epsilon() * scale / std::fabs(c[0]) +
               1e-300;
    return;
  }

  // Initial guesses on a circle inside the Cauchy-style bound, angles offset
  // so that real-axis symmetric configurations do not stall.
  double maxratio = 0.0;
  for (int j = 1; j <= d; ++j) maxratio = std::max(maxratio, std::fabs(c[j] / c[0]));
  const double r0 = 0.5 + 0.7 * (1.0 + maxratio);
  for (int i = 0; i < d; ++i) {
    double theta = 2.0 * M_PI * (static_cast<double>(i) + 0.353) / d + 0.91;
    roots[i] = std::polar(r0 * (0.6 + 0.5 * static_cast<double>(i % 3)), theta);
  }

  auto horner = [&](C z, C& fz, C& dfz, double& scale) {
    fz = c[0];
    dfz = 0.0;
    scale = std::fabs(c[0]);
    double az = std::abs(z);
    for (int j = 1; j <= d; ++j) {
      dfz = dfz * z + fz;
      fz = fz * z + c[j];
      scale = scale * az + std::fabs(c[j]);
    }
  };

  const double eps = std::numeric_limits<double>::epsilon();
  for (int iter = 0; iter < params.max_iters; ++iter) {
    bool all_small = true;
    for (int i = 0; i < d; ++i) {
      C fz, dfz;
      double scale;
      horner(roots[i], fz, dfz, scale);
      if (std::abs(fz) <= params.residual_tol * scale) continue;
      all_small = false;

      C newton = (std::abs(dfz) > 0) ? fz / dfz : C(1e-3, 1e-3);
      C s = 0.0;
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        C diff = roots[i] - roots[j];
        if (std::abs(diff) < 1e-280) diff = C(1e-280, 0);
        s += 1.0 / diff;
      }
      C denom = 1.0 - newton * s;
      if (std::abs(denom) < 1e-12) denom = 1.0;
      roots[i] -= newton / denom;
    }
    if (all_small) break;
  }

  // Inclusion radii d*|W_i| from the Weierstrass corrections, inflated for
  // the floating-point error of evaluating f and the pairwise products.
  for (int i = 0; i < d; ++i) {
    C fz, dfz;
    double scale;
    horner(roots[i], fz, dfz, scale);
    double prod = std::fabs(c[0]);
    for (int j = 0; j < d; ++j) {
      if (j == i) continue;
      prod *= std::abs(roots[i] - roots[j]);
    }
    double eval_err = 2.0 * (d + 1) * eps * scale;
    if (prod > 0.0 && std::isfinite(prod)) {
      double w = (std::abs(fz) + eval_err) / prod;
      radii[i] = d * w * (1.0 + 8.0 * d * eps) + 1e-300;
    } else {
      radii[i] = std::numeric_limits<double>::infinity();
    }
  }
}

}  // namespace degen::detail
