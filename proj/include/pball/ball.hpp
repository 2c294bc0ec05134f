#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pball/quad.hpp"

namespace pball {

/// I_p(q) = q^{1/p} * integral of |sinc_p|^q over [0, infinity).
struct BallIntegral {
  double p;
  double q;
  double value;     // scaled integral q^{1/p} * raw
  double raw;       // unscaled integral (tail excluded, see quad)
  QuadResult quad;  // diagnostics of the underlying quadrature
};

BallIntegral ball_integral(const PExponent& px, double q, double tol,
                           Exec exec = Exec::parallel);

/// Limit of I_p(q) as q -> infinity: Gamma(1/p)/p * (p(p+1))^{1/p}.
double limit_value(const PExponent& px);

/// phi_p(n, q) = integral of (ln|sinc_p|)^n |sinc_p|^q over [0, infinity),
/// the n-th q-derivative of the unscaled Ball integrand. Stored unscaled;
/// sign alternates as (-1)^n.
double phi(const PExponent& px, int n, double q, double tol,
           Exec exec = Exec::parallel);

/// Same integral with full quadrature diagnostics.
QuadResult phi_integral(const PExponent& px, int n, double q, double tol,
                        Exec exec = Exec::parallel);

/// Numerical probe of the scaled limit of phi: the sequence
/// (-1)^n q^{n+1/p} phi_p(n, q) along q_list, compared against two closed
/// candidates that differ by a factor Gamma(1/p).
struct PhiLimitReport {
  int n = 0;
  std::vector<double> q;
  std::vector<double> phi_values;
  std::vector<double> scaled;      // (-1)^n q^{n+1/p} phi_p(n, q)
  double candidate_derivative;     // (1/p) (p(p+1))^{1/p} Gamma(n + 1/p)
  double candidate_gamma;          // candidate_derivative * Gamma(1/p)
  bool matches_derivative = false; // final point closer to the derivative one
};

PhiLimitReport phi_limit_check(const PExponent& px, int n,
                               const std::vector<double>& q_list,
                               Exec exec = Exec::parallel);

/// One failed sample of a verification suite.
struct Violation {
  std::size_t index;
  double x;       // abscissa (grid point, q value, or case index)
  double margin;  // signed margin; negative means the check failed
};

/// Outcome of a verification sweep. Margins are oriented so that a correct
/// claim yields a nonnegative value; max_slack records the smallest margin
/// seen, making near-violations visible even when everything passes.
struct InequalityReport {
  std::string suite;
  std::string grid;
  std::size_t checked = 0;
  double max_slack = 0.0;
  std::vector<Violation> violations;

  bool pass() const { return violations.empty() && max_slack >= 0.0; }
};

/// Two-sided sinc_p bound 2/pi_p <= sinc_p(x) < 1 on (0, pi_p/2], plus
/// |sinc_p| <= 1 on the wide grid (0, 40*pi_p].
InequalityReport verify_jordan(const PExponent& px, std::size_t samples,
                               Exec exec = Exec::parallel);

/// Strict decrease of sinc_p on (0, pi_p/2) sampled pairwise, plus strict
/// decrease of p -> pi_p on a fixed logarithmic p-grid.
InequalityReport verify_monotonic(const PExponent& px, std::size_t samples,
                                  Exec exec = Exec::parallel);

/// |sin_p|^p + |cos_p|^p = 1 within 1e-12 on a symmetric grid spanning two
/// full periods.
InequalityReport verify_pythagorean(const PExponent& px, std::size_t samples,
                                    Exec exec = Exec::parallel);

/// Oddness and reflection of sin_p within 1e-14 and 2*pi_p periodicity
/// within 1e-12 at deterministic pseudo-random arguments.
InequalityReport verify_symmetry(const PExponent& px, std::size_t samples,
                                 Exec exec = Exec::parallel);

/// Sharpened sinc_p bounds: y/arcsin_p(y) > (1 - y^p)^{1/(p(p+1))} on
/// (0, y*) with y* = (1 - (2/pi_p)^{p(p+1)})^{1/p}, and
/// y/arcsin_p(y) < (1 + y^p/(p(p+1)))^{-1} on (0, 1). Margins are taken in
/// logs and switch to a series form for y^p <= 0.1, where the direct
/// difference would drown in cancellation.
InequalityReport verify_bhayo(const PExponent& px, std::size_t samples,
                              Exec exec = Exec::parallel);

/// Euler integral of the first kind under the power substitution:
/// integral_0^1 x^{mu-1} (1 - x^lambda)^{nu-1} dx = B(mu/lambda, nu)/lambda.
struct BetaIdentityCase {
  double mu;
  double lambda;
  double nu;
};

/// Companion identity on the half line:
/// integral_0^infty x^{mu-1} (1 + b x^p)^{-nu} dx
///   = b^{-mu/p} B(mu/p, nu - mu/p) / p, for 0 < mu < p*nu.
struct BetaImproperCase {
  double mu;
  double p;
  double b;
  double nu;
};

/// Quadrature vs closed form for both Beta identities, |difference| <= 1e-7.
InequalityReport verify_beta_identities(
    const std::vector<BetaIdentityCase>& proper,
    const std::vector<BetaImproperCase>& improper);
InequalityReport verify_beta_identities();  // built-in parameter grid

/// Gamma ratio asymptotics: Gamma(q+a)/(Gamma(q+b) q^{a-b}) -> 1, with
/// |ratio - 1| decreasing along q_list and below 5/max(q) at the end.
InequalityReport verify_gamma_ratio(double a, double b,
                                    const std::vector<double>& q_list);

/// Certified tail bounds vs computed tails of |sinc_p|^q on a grid of
/// truncation points and exponents.
InequalityReport verify_tail_bounds(const PExponent& px,
                                    Exec exec = Exec::parallel);

}  // namespace pball
