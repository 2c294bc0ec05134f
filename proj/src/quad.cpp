#include "pball/quad.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

namespace pball {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
// Abscissae are symmetric; only the nonnegative half is tabulated.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr long kPanelCap = 10000;
constexpr int kMaxDepth = 64;
constexpr int kTruncationCap = 22;

struct PanelEstimate {
  double value;
  double error;
};

// One Gauss-Kronrod 7/15 application on [a, b]. The error estimate follows
// the usual embedded-rule recipe: |K15 - G7| damped by the panel's scaled
// deviation resasc, floored at the rounding noise of the magnitudes seen.
PanelEstimate gk15(const Integrand& f, double a, double b) {
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  constexpr double kUflow = std::numeric_limits<double>::min();

  const double centr = 0.5 * (a + b);
  const double hlgth = 0.5 * (b - a);

  double fv1[7];
  double fv2[7];
  const double fc = f(centr);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::fabs(resk);
  for (int j = 0; j < 3; ++j) {
    const int jtw = 2 * j + 1;  // Kronrod index of the j-th Gauss node
    const double absc = hlgth * kXgk[jtw];
    const double f1 = f(centr - absc);
    const double f2 = f(centr + absc);
    fv1[jtw] = f1;
    fv2[jtw] = f2;
    resg += kWg[j] * (f1 + f2);
    resk += kWgk[jtw] * (f1 + f2);
    resabs += kWgk[jtw] * (std::fabs(f1) + std::fabs(f2));
  }
  for (int j = 0; j < 4; ++j) {
    const int jtwm1 = 2 * j;
    const double absc = hlgth * kXgk[jtwm1];
    const double f1 = f(centr - absc);
    const double f2 = f(centr + absc);
    fv1[jtwm1] = f1;
    fv2[jtwm1] = f2;
    resk += kWgk[jtwm1] * (f1 + f2);
    resabs += kWgk[jtwm1] * (std::fabs(f1) + std::fabs(f2));
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::fabs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc +=
        kWgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));
  }

  const double value = resk * hlgth;
  resabs *= std::fabs(hlgth);
  resasc *= std::fabs(hlgth);
  double error = std::fabs((resk - resg) * hlgth);
  if (resasc != 0.0 && error != 0.0) {
    error = resasc * std::min(1.0, std::pow(200.0 * error / resasc, 1.5));
  }
  if (resabs > kUflow / (50.0 * kEps)) {
    error = std::max(50.0 * kEps * resabs, error);
  }
  if (!std::isfinite(value)) {
    std::ostringstream os;
    os << "integrate: integrand produced a non-finite value on [" << a << ", "
       << b << "]";
    throw QuadratureError(os.str());
  }
  return {value, error};
}

struct Segment {
  double a;
  double b;
  double value;
  double error;
  int depth;
};

}  // namespace

QuadResult integrate(const Integrand& f, double a, double b, double tol) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    std::ostringstream os;
    os << "integrate: invalid interval [" << a << ", " << b << "]";
    throw std::domain_error(os.str());
  }
  if (!(tol > 0.0)) {
    throw std::domain_error("integrate: tolerance must be positive");
  }

  // Greedy refinement: always split the panel with the largest error
  // estimate, so effort concentrates where the integrand is hardest and an
  // integrable endpoint singularity refines geometrically instead of being
  // held to a uniform per-length error share it can never meet.
  const auto worse = [](const Segment& x, const Segment& y) {
    if (x.error != y.error) return x.error < y.error;
    if (x.a != y.a) return x.a > y.a;  // ties: leftmost panel first
    return x.depth > y.depth;
  };
  std::priority_queue<Segment, std::vector<Segment>, decltype(worse)> work(
      worse);
  std::vector<Segment> accepted;

  PanelEstimate root = gk15(f, a, b);
  work.push({a, b, root.value, root.error, 0});
  double pending_err = root.error;
  long panels = 1;

  while (!work.empty()) {
    if (pending_err <= tol) break;
    Segment s = work.top();
    work.pop();
    pending_err -= s.error;
    const double mid = 0.5 * (s.a + s.b);
    // The innermost nodes sit 0.43% of the width from the panel ends, so a
    // child narrower than ~512 ulp would round nodes onto an endpoint --
    // fatal when the endpoint is singular. Such panels are irreducible.
    const double width_floor = 512.0 * std::numeric_limits<double>::epsilon() *
                               std::max(std::fabs(s.a), std::fabs(s.b));
    const bool splittable = s.depth < kMaxDepth && mid - s.a > width_floor &&
                            s.b - mid > width_floor && panels + 2 <= kPanelCap;
    if (!splittable) {
      // Irreducible: retire it, but keep its error in the running total so
      // the remaining budget for the others stays honest.
      accepted.push_back(s);
      pending_err += s.error;
      continue;
    }
    const PanelEstimate left = gk15(f, s.a, mid);
    const PanelEstimate right = gk15(f, mid, s.b);
    panels += 2;
    work.push({s.a, mid, left.value, left.error, s.depth + 1});
    work.push({mid, s.b, right.value, right.error, s.depth + 1});
    pending_err += left.error + right.error;
  }
  while (!work.empty()) {
    accepted.push_back(work.top());
    work.pop();
  }

  // Deterministic summation: accumulate left to right regardless of the
  // order in which panels were accepted.
  std::sort(accepted.begin(), accepted.end(),
            [](const Segment& x, const Segment& y) { return x.a < y.a; });
  QuadResult result;
  for (const Segment& s : accepted) {
    result.value += s.value;
    result.err_est += s.error;
  }
  result.subdivisions = panels;
  result.converged = result.err_est <= tol + 1e-14 * std::fabs(result.value);
  return result;
}

TailBound tail_bound(const PExponent& px, double alpha, double q) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    std::ostringstream os;
    os << "tail_bound: alpha must be positive and finite, got " << alpha;
    throw std::domain_error(os.str());
  }
  if (!(q > 1.0)) {
    std::ostringstream os;
    os << "tail_bound: q must exceed 1, got " << q;
    throw std::domain_error(os.str());
  }
  double bound;
  if (alpha >= 1.0) {
    // |sinc_p x| <= 1/x beyond the first hump.
    bound = std::pow(alpha, 1.0 - q) / (q - 1.0);
  } else {
    // Monotonicity of sinc_p on (0, alpha] covers [alpha, 1); the power
    // bound covers [1, infinity).
    const double s = sinc_p(px, alpha);
    bound = std::exp(q * std::log(s)) * (1.0 - alpha) + 1.0 / (q - 1.0);
  }
  return {alpha, q, bound};
}

QuadResult integrate_to_infinity(const Integrand& f, double a, double tol,
                                 const TailFn& tail, double step, Exec exec) {
  if (!std::isfinite(a)) {
    throw std::domain_error("integrate_to_infinity: lower limit must be finite");
  }
  if (!(tol > 0.0)) {
    throw std::domain_error("integrate_to_infinity: tolerance must be positive");
  }
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::domain_error("integrate_to_infinity: step must be positive");
  }

  // Double the truncation point until the certified tail fits in half the
  // budget; the other half is split evenly across the panels.
  long n = -1;
  double tail_rem = 0.0;
  for (int k = 0; k <= kTruncationCap; ++k) {
    const double alpha = a + std::ldexp(step, k);
    const double t = tail(alpha);
    if (t < 0.5 * tol) {
      n = 1L << k;
      tail_rem = t;
      break;
    }
  }
  if (n < 0) {
    std::ostringstream os;
    os << "integrate_to_infinity: tail bound still exceeds tol/2 at a + step*2^"
       << kTruncationCap << " (tol=" << tol
       << "); loosen the tolerance or supply a sharper tail bound";
    throw QuadratureError(os.str());
  }

  const double panel_tol = 0.5 * tol / static_cast<double>(n);
  QuadResult total;
  total.tail_remainder = tail_rem;

  constexpr long kChunk = 4096;
  std::vector<QuadResult> buf(static_cast<std::size_t>(std::min(n, kChunk)));
  for (long base = 0; base < n; base += kChunk) {
    const long m = std::min(kChunk, n - base);
    std::exception_ptr fail = nullptr;
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
      for (long j = 0; j < m; ++j) {
        try {
          buf[j] = integrate(f, a + (base + j) * step,
                             a + (base + j + 1) * step, panel_tol);
        } catch (...) {
#pragma omp critical
          if (!fail) fail = std::current_exception();
        }
      }
    } else {
      for (long j = 0; j < m; ++j) {
        try {
          buf[j] = integrate(f, a + (base + j) * step,
                             a + (base + j + 1) * step, panel_tol);
        } catch (...) {
          if (!fail) fail = std::current_exception();
        }
      }
    }
    if (fail) std::rethrow_exception(fail);
    for (long j = 0; j < m; ++j) {
      total.value += buf[j].value;
      total.err_est += buf[j].err_est;
      total.subdivisions += buf[j].subdivisions;
      total.converged = total.converged && buf[j].converged;
    }
  }
  return total;
}

}  // namespace pball
