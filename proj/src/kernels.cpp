#include "stfuse/kernels.hpp"

#include <Eigen/Dense>
#include <limits>
#include <stdexcept>
#include <vector>

namespace stfuse {
namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

// Ascending series for x <= 2 (terms decay like (x^2/4)^k / (k!)^2).
double k0_series(double x) {
  double q = 0.25 * x * x;
  double term = 1.0;   // q^k / (k!)^2
  double i0 = 1.0;
  double sum = 0.0;    // sum of H_k * term, k >= 1
  double hk = 0.0;
  for (int k = 1; k <= 40; ++k) {
    term *= q / (static_cast<double>(k) * k);
    hk += 1.0 / k;
    i0 += term;
    sum += hk * term;
    if (term < 1e-20 * i0) break;
  }
  return -(std::log(0.5 * x) + kEulerGamma) * i0 + sum;
}

double k1_series(double x) {
  double q = 0.25 * x * x;
  double term = 1.0;   // q^k / (k! (k+1)!)
  double i1 = 1.0;     // I1(x) * 2/x
  double psum = 0.0;   // sum of (psi(k+1)+psi(k+2)) q^k / (k!(k+1)!)
  double psi1 = -kEulerGamma;        // psi(k+1)
  double psi2 = 1.0 - kEulerGamma;   // psi(k+2)
  psum = psi1 + psi2;
  for (int k = 1; k <= 40; ++k) {
    term *= q / (static_cast<double>(k) * (k + 1));
    psi1 += 1.0 / k;
    psi2 += 1.0 / (k + 1);
    i1 += term;
    psum += (psi1 + psi2) * term;
    if (term < 1e-20 * i1) break;
  }
  i1 *= 0.5 * x;
  return 1.0 / x + std::log(0.5 * x) * i1 - 0.25 * x * psum;
}

// Generalized Gauss-Laguerre rule for weight e^{-s} s^alpha, computed once
// by Golub-Welsch on the Jacobi matrix.
struct LaguerreRule {
  std::vector<double> node;
  std::vector<double> weight;
  LaguerreRule(int n, double alpha) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
      J(k, k) = 2.0 * k + alpha + 1.0;
      if (k > 0) {
        double b = std::sqrt(k * (k + alpha));
        J(k, k - 1) = b;
        J(k - 1, k) = b;
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    double mu0 = std::tgamma(alpha + 1.0);
    node.resize(n);
    weight.resize(n);
    for (int k = 0; k < n; ++k) {
      node[k] = es.eigenvalues()(k);
      double v0 = es.eigenvectors()(0, k);
      weight[k] = mu0 * v0 * v0;
    }
  }
};

// K_nu(x) = sqrt(pi) e^{-x} / (2^nu Gamma(nu+1/2) sqrt(x))
//           * Integral e^{-s} s^{nu-1/2} (2 + s/x)^{nu-1/2} ds,
// from the A&S 9.6.23 representation with t = 1 + s/x. The integrand factor
// (2+s/x)^{nu-1/2} is analytic, so the generalized rule converges fast.
double k_integral(double nu, double x, const LaguerreRule& rule) {
  double acc = 0.0;
  double p = nu - 0.5;
  for (std::size_t i = 0; i < rule.node.size(); ++i)
    acc += rule.weight[i] * std::pow(2.0 + rule.node[i] / x, p);
  double front = std::sqrt(M_PI) * std::exp(-x) /
                 (std::pow(2.0, nu) * std::tgamma(nu + 0.5) * std::sqrt(x));
  return front * acc;
}

const LaguerreRule& rule_for_k0() {
  static const LaguerreRule r(48, -0.5);
  return r;
}
const LaguerreRule& rule_for_k1() {
  static const LaguerreRule r(48, 0.5);
  return r;
}
const LaguerreRule& rule_for_k2() {
  static const LaguerreRule r(48, 1.5);
  return r;
}

double check_positive(double x, const char* who) {
  if (!(x > 0.0)) {
    if (x == 0.0) return std::numeric_limits<double>::infinity();
    throw std::domain_error(std::string(who) + ": argument must be positive");
  }
  return x;
}

}  // namespace

double bessel_k0(double x) {
  if (check_positive(x, "bessel_k0") == std::numeric_limits<double>::infinity())
    return x == 0.0 ? std::numeric_limits<double>::infinity() : x;
  if (x <= 2.0) return k0_series(x);
  return k_integral(0.0, x, rule_for_k0());
}

double bessel_k1(double x) {
  if (x == 0.0) return std::numeric_limits<double>::infinity();
  check_positive(x, "bessel_k1");
  if (x <= 2.0) return k1_series(x);
  return k_integral(1.0, x, rule_for_k1());
}

double bessel_k2(double x) {
  if (x == 0.0) return std::numeric_limits<double>::infinity();
  check_positive(x, "bessel_k2");
  // upward recurrence is stable for K
  if (x <= 2.0) return k0_series(x) + 2.0 / x * k1_series(x);
  return k_integral(2.0, x, rule_for_k2());
}

double bessel_k(double nu, double x) {
  if (nu == 2.0) return bessel_k2(x);
  if (nu == 1.0) return bessel_k1(x);
  if (nu == 0.0) return bessel_k0(x);
  return std::cyl_bessel_k(nu, x);  // slow path for nonstandard smoothness
}

double matern(double d, double theta_S, double nu) {
  if (!std::isfinite(d)) throw std::domain_error("matern: nonfinite distance");
  if (d < 0.0) throw std::domain_error("matern: negative distance");
  double x = 2.0 * std::sqrt(nu) * theta_S * d;
  if (x < 1e-8) return 1.0;  // continuity limit, correct to O(x^2 log x)
  if (nu == 2.0) {
    // 2^{nu-1} Gamma(nu) = 2
    return 0.5 * x * x * bessel_k2(x);
  }
  return std::pow(x, nu) * bessel_k(nu, x) /
         (std::pow(2.0, nu - 1.0) * std::tgamma(nu));
}

double tapered_temporal(double h, double theta_T, double taper_range) {
  if (!std::isfinite(h)) throw std::domain_error("tapered_temporal: nonfinite lag");
  if (h < 0.0) throw std::domain_error("tapered_temporal: negative lag");
  if (h >= taper_range) return 0.0;
  double f = 1.0 - h / taper_range;
  return std::exp(-theta_T * h) * f * f * (1.0 + h / (2.0 * taper_range));
}

}  // namespace stfuse
