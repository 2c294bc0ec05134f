#include "pball/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pball {

namespace {

std::size_t common_order(const PowerSeries& a, const PowerSeries& b) {
  return std::min(a.order(), b.order());
}

}  // namespace

double PowerSeries::evaluate(double w) const {
  double r = 0.0;
  for (std::size_t k = coefs.size(); k-- > 0;) r = r * w + coefs[k];
  return r;
}

PowerSeries add(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(common_order(a, b));
  for (std::size_t k = 0; k <= r.order(); ++k) r.coefs[k] = a[k] + b[k];
  return r;
}

PowerSeries sub(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(common_order(a, b));
  for (std::size_t k = 0; k <= r.order(); ++k) r.coefs[k] = a[k] - b[k];
  return r;
}

PowerSeries scale(const PowerSeries& a, double s) {
  PowerSeries r(a.order());
  for (std::size_t k = 0; k <= r.order(); ++k) r.coefs[k] = a[k] * s;
  return r;
}

PowerSeries mul(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(common_order(a, b));
  for (std::size_t k = 0; k <= r.order(); ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i <= k; ++i) s += a[i] * b[k - i];
    r.coefs[k] = s;
  }
  return r;
}

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner) {
  if (inner[0] != 0.0) {
    throw std::domain_error(
        "compose: inner series must have zero constant term");
  }
  const std::size_t n = common_order(outer, inner);
  PowerSeries r(n);
  // Horner over series: r = outer[n]; r = r*inner + outer[k].
  r.coefs[0] = outer[n];
  for (std::size_t k = n; k-- > 0;) {
    r = mul(r, inner);
    r.coefs[0] += outer[k];
  }
  return r;
}

PowerSeries reciprocal(const PowerSeries& a) {
  if (a[0] == 0.0) {
    throw std::domain_error(
        "reciprocal: series must have nonzero constant term");
  }
  PowerSeries r(a.order());
  const double inv = 1.0 / a[0];
  r.coefs[0] = inv;
  for (std::size_t k = 1; k <= r.order(); ++k) {
    double s = 0.0;
    for (std::size_t i = 1; i <= k; ++i) s += a[i] * r.coefs[k - i];
    r.coefs[k] = -inv * s;
  }
  return r;
}

PowerSeries log_series(const PowerSeries& a) {
  if (a[0] != 1.0) {
    throw std::domain_error("log_series: series must have constant term 1");
  }
  // ln(a)' = a'/a, integrated termwise.
  const PowerSeries ratio = mul(derivative(a), reciprocal(a));
  PowerSeries r(a.order());
  for (std::size_t k = 1; k <= a.order(); ++k) {
    r.coefs[k] = ratio[k - 1] / static_cast<double>(k);
  }
  return r;
}

PowerSeries exp_series(const PowerSeries& a) {
  if (a[0] != 0.0) {
    throw std::domain_error("exp_series: series must have constant term 0");
  }
  // E' = a' E gives k E_k = sum i a_i E_{k-i}.
  PowerSeries r(a.order(), 1.0);
  for (std::size_t k = 1; k <= r.order(); ++k) {
    double s = 0.0;
    for (std::size_t i = 1; i <= k; ++i) {
      s += static_cast<double>(i) * a[i] * r.coefs[k - i];
    }
    r.coefs[k] = s / static_cast<double>(k);
  }
  return r;
}

PowerSeries pow_series(const PowerSeries& a, double r) {
  if (a[0] != 1.0) {
    throw std::domain_error("pow_series: series must have constant term 1");
  }
  return exp_series(scale(log_series(a), r));
}

PowerSeries derivative(const PowerSeries& a) {
  if (a.order() == 0) return PowerSeries(0);
  PowerSeries r(a.order() - 1);
  for (std::size_t k = 0; k <= r.order(); ++k) {
    r.coefs[k] = static_cast<double>(k + 1) * a[k + 1];
  }
  return r;
}

PowerSeries revert(const PowerSeries& v) {
  if (v[0] != 0.0 || v.order() < 1 || v[1] != 1.0) {
    throw std::domain_error(
        "revert: series must be w + higher order terms exactly");
  }
  const std::size_t n = v.order();
  PowerSeries u(n);
  u.coefs[1] = 1.0;
  // Triangular solve: with u correct below w^k, the w^k coefficient of
  // v(u) - w is linear in u_k with unit slope, so one correction zeroes it.
  for (std::size_t k = 2; k <= n; ++k) {
    u.coefs[k] -= compose(v, u).coefs[k];
  }
  return u;
}

PowerSeries arcsin_series(const PExponent& px, std::size_t order) {
  const double p = px.p();
  PowerSeries a(order);
  a.leading_x = true;
  double c = 1.0;  // C(k) = prod_{i<k} (1/p + i) / k!
  for (std::size_t k = 0; k <= order; ++k) {
    if (k > 0) c *= (1.0 / p + (k - 1)) / static_cast<double>(k);
    a.coefs[k] = c / (p * k + 1.0);
  }
  return a;
}

PowerSeries revert_series(const PExponent& px, const PowerSeries& s,
                          std::size_t order) {
  if (std::fabs(s[0] - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "revert_series: leading coefficient must be 1, got " << s[0];
    throw std::domain_error(os.str());
  }
  // x = t*A(t^p) gives x^p = V(t^p) with V(w) = w*A(w)^p; revert V, then
  // sin = x / A at the reverted argument.
  PowerSeries a = s;
  a.coefs[0] = 1.0;
  a.coefs.resize(order + 1, 0.0);
  const PowerSeries ap = pow_series(a, px.p());
  PowerSeries v(order);
  for (std::size_t k = 1; k <= order; ++k) v.coefs[k] = ap[k - 1];
  const PowerSeries u = revert(v);
  PowerSeries b = compose(reciprocal(a), u);
  b.leading_x = true;
  return b;
}

PowerSeries b_coefficients(const PExponent& px, std::size_t order) {
  const double pp1 = px.p() * (px.p() + 1.0);
  const PowerSeries sinc = revert_series(px, arcsin_series(px, order), order);
  PowerSeries scaled(order);
  double f = 1.0;
  for (std::size_t k = 0; k <= order; ++k) {
    scaled.coefs[k] = sinc[k] * f;
    f *= pp1;
  }
  PowerSeries expw(order);
  f = 1.0;
  for (std::size_t k = 0; k <= order; ++k) {
    expw.coefs[k] = f;
    f /= static_cast<double>(k + 1);
  }
  return mul(scaled, expw);
}

double QPolynomial::operator()(double q) const {
  double r = 0.0;
  for (std::size_t k = coefs.size(); k-- > 0;) r = r * q + coefs[k];
  return r;
}

int QPolynomial::degree() const {
  for (std::size_t k = coefs.size(); k-- > 0;) {
    if (coefs[k] != 0.0) return static_cast<int>(k);
  }
  return 0;
}

QPolynomial poly_add(const QPolynomial& a, const QPolynomial& b) {
  std::vector<double> c(std::max(a.coefs.size(), b.coefs.size()), 0.0);
  for (std::size_t k = 0; k < a.coefs.size(); ++k) c[k] += a.coefs[k];
  for (std::size_t k = 0; k < b.coefs.size(); ++k) c[k] += b.coefs[k];
  return QPolynomial(std::move(c));
}

QPolynomial poly_scale(const QPolynomial& a, double s) {
  QPolynomial r = a;
  for (double& c : r.coefs) c *= s;
  return r;
}

QPolynomial poly_mul(const QPolynomial& a, const QPolynomial& b) {
  std::vector<double> c(a.coefs.size() + b.coefs.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coefs.size(); ++i) {
    for (std::size_t j = 0; j < b.coefs.size(); ++j) {
      c[i + j] += a.coefs[i] * b.coefs[j];
    }
  }
  return QPolynomial(std::move(c));
}

std::vector<QPolynomial> c_coefficients(const PExponent& px,
                                        std::size_t order) {
  PowerSeries b = b_coefficients(px, order);
  if (std::fabs(b.coefs[1]) > 1e-14) {
    std::ostringstream os;
    os << "c_coefficients: b_1 must vanish identically, got " << b.coefs[1];
    throw std::runtime_error(os.str());
  }
  // b_1 is an exact zero of the algebra; drop the rounding residue before
  // exponentiating so the degree structure deg c_j = floor(j/2) is exact.
  b.coefs[1] = 0.0;
  PowerSeries t = b;
  t.coefs[0] = 0.0;

  std::vector<QPolynomial> c(order + 1);
  c[0] = QPolynomial({1.0});
  QPolynomial binom({1.0});  // binom(q, m), built up one factor at a time
  PowerSeries tm(order, 1.0);
  for (std::size_t m = 1; 2 * m <= order; ++m) {
    binom = poly_scale(
        poly_mul(binom, QPolynomial({-(static_cast<double>(m) - 1.0), 1.0})),
        1.0 / static_cast<double>(m));
    tm = mul(tm, t);
    for (std::size_t j = 2 * m; j <= order; ++j) {
      if (tm[j] != 0.0) c[j] = poly_add(c[j], poly_scale(binom, tm[j]));
    }
  }
  return c;
}

double AsymptoticExpansion::term(std::size_t j, double q) const {
  return prefactor * std::tgamma(static_cast<double>(j) + 1.0 / p) *
         c[j](q) / std::pow(q, static_cast<double>(j));
}

AsymptoticExpansion assemble_expansion(const PExponent& px,
                                       std::size_t order) {
  if (order < 2 || order > 40) {
    throw std::domain_error("assemble_expansion: order must lie in [2, 40]");
  }
  const double p = px.p();
  const double pp1 = p * (p + 1.0);
  AsymptoticExpansion e;
  e.p = p;
  e.order = order;
  e.prefactor = std::pow(pp1, 1.0 / p) / p;
  e.c = c_coefficients(px, order);
  e.g.assign(order / 2 + 1, 0.0);
  // Regroup by powers of 1/q: the q^m part of c_j(q)/q^j lands in g_{j-m}.
  // g_n is final once every j <= 2n is present, i.e. for n <= order/2.
  for (std::size_t j = 0; j <= order; ++j) {
    const double gj = std::tgamma(static_cast<double>(j) + 1.0 / p);
    for (std::size_t m = 0; m < e.c[j].coefs.size(); ++m) {
      const std::size_t n = j - m;
      if (2 * n <= order) e.g[n] += e.prefactor * gj * e.c[j].coefs[m];
    }
  }

  // Closed forms for the first two regrouped constants.
  const double g0 = std::tgamma(1.0 / p) / p * std::pow(pp1, 1.0 / p);
  const double g1 = std::pow(pp1, 1.0 / p) * std::tgamma(1.0 / p) *
                    (p + 1.0) * (-p * p + p + 1.0) /
                    (2.0 * p * p * (2.0 * p + 1.0));
  if (std::fabs(e.g[0] - g0) > 1e-12 * std::fabs(g0) ||
      std::fabs(e.g[1] - g1) > 1e-12 * std::fabs(g1)) {
    std::ostringstream os;
    os << "assemble_expansion: regrouped constants disagree with closed forms"
       << " (g0=" << e.g[0] << " vs " << g0 << ", g1=" << e.g[1] << " vs "
       << g1 << ")";
    throw std::runtime_error(os.str());
  }
  return e;
}

double evaluate_expansion(const AsymptoticExpansion& e, double q,
                          std::size_t m_max) {
  if (m_max >= e.g.size()) {
    throw std::domain_error(
        "evaluate_expansion: m_max exceeds the stable range order/2");
  }
  if (!(q > 1.0)) {
    throw std::domain_error("evaluate_expansion: q must exceed 1");
  }
  const double iq = 1.0 / q;
  double r = 0.0;
  for (std::size_t m = m_max + 1; m-- > 0;) r = r * iq + e.g[m];
  return r;
}

}  // namespace pball
