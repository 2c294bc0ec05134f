#pragma once

#include <cstddef>
#include <vector>

#include "pball/ptrig.hpp"

namespace pball {

/// Truncated power series in the graded variable w = x^p. coefs[k] is the
/// coefficient of w^k; leading_x marks series that carry an implicit outer
/// factor of x (arcsin_p and sin_p are odd, so their expansions are
/// x * series(w)). All operations truncate to the shorter operand.
struct PowerSeries {
  std::vector<double> coefs;
  bool leading_x = false;

  explicit PowerSeries(std::size_t order, double c0 = 0.0)
      : coefs(order + 1, 0.0) {
    coefs[0] = c0;
  }

  std::size_t order() const { return coefs.size() - 1; }
  double operator[](std::size_t k) const { return coefs[k]; }

  /// Horner evaluation of the series part (the implicit x factor, when
  /// present, is the caller's business).
  double evaluate(double w) const;
};

PowerSeries add(const PowerSeries& a, const PowerSeries& b);
PowerSeries sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries scale(const PowerSeries& a, double s);
PowerSeries mul(const PowerSeries& a, const PowerSeries& b);

/// outer(inner(w)); requires inner constant term zero.
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);

/// 1/a; requires nonzero constant term.
PowerSeries reciprocal(const PowerSeries& a);

/// ln(a); requires constant term 1.
PowerSeries log_series(const PowerSeries& a);

/// exp(a); requires constant term 0.
PowerSeries exp_series(const PowerSeries& a);

/// a^r for real r; requires constant term 1.
PowerSeries pow_series(const PowerSeries& a, double r);

/// Coefficient-wise derivative d/dw (order drops by one).
PowerSeries derivative(const PowerSeries& a);

/// Compositional inverse of v, i.e. u with v(u(w)) = w + O(w^{n+1});
/// requires v(0) = 0 and [w] v = 1.
PowerSeries revert(const PowerSeries& v);

/// Maclaurin series of arcsin_p: arcsin_p(x) = x * A(x^p) with
/// A_k = C(k)/(p k + 1), C(k) = prod_{i<k} (1/p + i) / k!.
PowerSeries arcsin_series(const PExponent& px, std::size_t order);

/// Inverse expansion: given the arcsin_p series factor A (constant term 1,
/// checked to 1e-12), returns B with sin_p(x) = x * B(x^p). The grading
/// couples the reversion to p, hence the exponent parameter.
PowerSeries revert_series(const PExponent& px, const PowerSeries& s,
                          std::size_t order);

/// Coefficients b_j of exp(w) * S(w) where S is the sinc_p series rescaled
/// by powers of p(p+1); b_0 = 1 and b_1 vanishes identically.
PowerSeries b_coefficients(const PExponent& px, std::size_t order);

/// Polynomial in q with real coefficients; coefs[m] multiplies q^m.
struct QPolynomial {
  std::vector<double> coefs;

  QPolynomial() : coefs(1, 0.0) {}
  explicit QPolynomial(std::vector<double> c) : coefs(std::move(c)) {}

  double operator()(double q) const;
  /// Degree ignoring exact-zero leading coefficients.
  int degree() const;
};

QPolynomial poly_add(const QPolynomial& a, const QPolynomial& b);
QPolynomial poly_scale(const QPolynomial& a, double s);
QPolynomial poly_mul(const QPolynomial& a, const QPolynomial& b);

/// Polynomials c_j(q) from the binomial expansion of (1 + T(w))^q with
/// T = sum_{j>=2} b_j w^j; deg c_j = floor(j/2), c_0 = 1, c_1 = 0.
std::vector<QPolynomial> c_coefficients(const PExponent& px,
                                        std::size_t order);

/// Large-q expansion assembled once per (p, order): term j carries
/// prefactor * Gamma(j + 1/p) * c_j(q) / q^j, and regrouping by powers of
/// 1/q yields constants g_m, final for m <= order/2.
struct AsymptoticExpansion {
  double p;
  std::size_t order;
  double prefactor;             // (p(p+1))^{1/p} / p
  std::vector<QPolynomial> c;   // c[j], j = 0..order
  std::vector<double> g;        // g[m], m = 0..order/2

  /// prefactor * Gamma(j + 1/p) * c_j(q) / q^j.
  double term(std::size_t j, double q) const;
};

AsymptoticExpansion assemble_expansion(const PExponent& px,
                                       std::size_t order = 12);

/// Partial sum sum_{m<=m_max} g_m q^{-m}; m_max must not exceed the stable
/// range order/2.
double evaluate_expansion(const AsymptoticExpansion& e, double q,
                          std::size_t m_max);

}  // namespace pball
