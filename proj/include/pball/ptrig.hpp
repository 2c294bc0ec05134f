#pragma once

#include <stdexcept>

namespace pball {

/// Validated exponent p > 1 with cached constants shared by all evaluations:
/// the half-period doubled pi_p = 2*pi/(p*sin(pi/p)) and the complete Beta
/// value B(1/p, 1-1/p) = pi/sin(pi/p).
class PExponent {
public:
  explicit PExponent(double p);

  double p() const { return p_; }
  double pi_p() const { return pi_p_; }
  double half_pi_p() const { return half_pi_p_; }
  double beta_const() const { return beta_const_; }
  double log_beta_const() const { return log_beta_const_; }

private:
  double p_;
  double pi_p_;
  double half_pi_p_;
  double beta_const_;
  double log_beta_const_;
};

/// 2*pi/(p*sin(pi/p)); strictly decreasing in p, range (2, inf).
double pi_p(const PExponent& px);

/// Integral of (1-t^p)^(-1/p) over [0, y]; y in [0, 1].
/// Evaluated through the regularized incomplete Beta function, not by
/// quadrature of the integrand, so the y = 1 endpoint is exact.
double arcsin_p(const PExponent& px, double y);

/// Odd extension of arcsin_p to [-1, 1].
double arcsin_p_signed(const PExponent& px, double y);

/// Generalized sine: inverse of arcsin_p on [0, pi_p/2], extended to all of
/// R by oddness, reflection about pi_p/2, and 2*pi_p periodicity.
double sin_p(const PExponent& px, double x);

/// Derivative of sin_p; equals (1 - sin_p^p)^{1/p} on the first quadrant,
/// negative on (pi_p/2, 3*pi_p/2) within each period.
double cos_p(const PExponent& px, double x);

/// sin_p and cos_p from a single argument reduction.
void sin_cos_p(const PExponent& px, double x, double& s, double& c);

/// sin_p / cos_p. Throws std::domain_error at odd multiples of pi_p/2.
double tan_p(const PExponent& px, double x);

/// sin_p(x)/x with value 1 at x = 0. Even; |sinc_p| <= 1; roots at n*pi_p.
double sinc_p(const PExponent& px, double x);

/// Reduction of x into the fundamental domain [0, 2*pi_p).
double reduce_angle(const PExponent& px, double x);

/// Leading Maclaurin coefficients of sinc_p in w = x^p:
/// sinc_p(x) = 1 + a1*w + a2*w^2 + O(w^3).
double sinc_series_a1(double p);
double sinc_series_a2(double p);

/// Regularized incomplete Beta I_x(a, b) by continued fraction (modified
/// Lentz). one_minus_x must hold 1-x to full precision; log_beta_ab is
/// ln B(a, b).
double incomplete_beta_reg(double a, double b, double x, double one_minus_x,
                           double log_beta_ab);

/// ln B(a, b) via lgamma.
double log_beta(double a, double b);

}  // namespace pball
