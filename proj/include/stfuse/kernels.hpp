#pragma once

#include <cmath>

namespace stfuse {

/// Modified Bessel function K0/K1/K2. The nu=2 case is the hot path of the
/// spatial kernel and uses Chebyshev expansions good to ~1e-15 relative;
/// general nu falls through to std::cyl_bessel_k (slow path).
double bessel_k0(double x);
double bessel_k1(double x);
double bessel_k2(double x);
double bessel_k(double nu, double x);

/// Matern correlation (2 sqrt(nu) theta d)^nu K_nu(2 sqrt(nu) theta d)
/// / {2^(nu-1) Gamma(nu)}, with the continuity limit 1 at d = 0.
double matern(double d, double theta_S, double nu = 2.0);

/// Product of the exponential and the compactly supported spherical
/// correlation: exp(-theta_T h) * max(1 - h/r, 0)^2 * (1 + h/(2r)).
/// Exactly zero for h >= r.
double tapered_temporal(double h, double theta_T, double taper_range = 7.0);

/// Short-range process kernel parameters.
struct KernelSpec {
  double nu = 2.0;
  double theta_S = 0.05;     // 1/km
  double theta_T = 0.1;      // 1/day
  double sigma2_u = 0.1;
  double taper_range = 7.0;  // days

  double spatial(double d_km) const { return matern(d_km, theta_S, nu); }
  double temporal(double h_days) const {
    return tapered_temporal(h_days, theta_T, taper_range);
  }
  /// Separable covariance sigma2_u * C_S(d) * C_T(h).
  double cov(double d_km, double h_days) const {
    if (h_days >= taper_range) return 0.0;
    return sigma2_u * spatial(d_km) * temporal(h_days);
  }
};

}  // namespace stfuse
