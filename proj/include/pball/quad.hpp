#pragma once

#include <functional>
#include <stdexcept>

#include "pball/ptrig.hpp"

namespace pball {

/// Kernel execution policy. Both policies produce bit-identical results;
/// parallel runs the independent panels under OpenMP and folds them in
/// index order.
enum class Exec { serial, parallel };

/// Quadrature failure: non-finite integrand value, or a truncation point
/// for an improper integral that cannot be reached.
class QuadratureError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadResult {
  double value = 0.0;           // integral estimate (excludes tail_remainder)
  double err_est = 0.0;         // accumulated local error estimates
  long subdivisions = 0;        // Gauss-Kronrod panel evaluations
  double tail_remainder = 0.0;  // bound on the truncated tail (improper only)
  bool converged = true;
};

struct TailBound {
  double alpha;
  double q;
  double bound;
};

using Integrand = std::function<double(double)>;
using TailFn = std::function<double(double)>;

/// Adaptive Gauss-Kronrod 7/15 integration of f over the finite interval
/// [a, b]. The rule is open: f is never evaluated at a or b, so endpoint
/// singularities are tolerated. A panel is accepted once its local error
/// estimate drops below tol scaled by the panel's share of the interval;
/// after 10^4 panel evaluations the partial result is returned with
/// converged = false. A non-finite integrand value throws QuadratureError.
QuadResult integrate(const Integrand& f, double a, double b, double tol);

/// Upper bound for the integral of |sinc_p|^q over [alpha, infinity):
///   alpha >= 1:  alpha^{1-q} / (q-1)
///   alpha <  1:  sinc_p(alpha)^q * (1-alpha) + 1/(q-1)
/// Requires alpha > 0 and q > 1. Nonincreasing in alpha.
TailBound tail_bound(const PExponent& px, double alpha, double q);

/// Integral of f over [a, infinity) for integrands with a certified tail
/// bound. The truncation point is a + step * 2^k for the smallest k <= 22
/// with tail(alpha) < tol/2 (throws QuadratureError if none qualifies);
/// the 2^k width-step panels are then integrated independently to equal
/// shares of the remaining budget and summed in order. The returned value
/// excludes the tail; tail(alpha) is reported in tail_remainder.
QuadResult integrate_to_infinity(const Integrand& f, double a, double tol,
                                 const TailFn& tail, double step,
                                 Exec exec = Exec::parallel);

}  // namespace pball
