#pragma once

// Adaptive Gauss-Kronrod (G7,K15) quadrature used as an independent oracle in
// tests. Deliberately self-contained: it evaluates integrands directly and
// shares no code with the library paths it checks.

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

namespace testsupport {

namespace detail {

// K15 nodes/weights on [-1,1]; G7 uses the odd-indexed nodes.
inline constexpr double kNodes[15] = {
    -0.991455371120812639206854697526329,
    -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926,
    -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730,
    -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245,
    0.0,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};

inline constexpr double kWeightsK[15] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};

inline constexpr double kWeightsG[7] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

struct Interval {
  double a, b, value, error;
  bool operator<(const Interval& other) const { return error < other.error; }
};

template <class F>
Interval gk15(const F& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum_k = 0.0, sum_g = 0.0;
  for (int i = 0; i < 15; ++i) {
    const double y = f(mid + half * kNodes[i]);
    sum_k += kWeightsK[i] * y;
    if (i % 2 == 1) sum_g += kWeightsG[i / 2] * y;
  }
  const double value = sum_k * half;
  return Interval{a, b, value, std::abs((sum_k - sum_g) * half)};
}

}  // namespace detail

/// Globally adaptive integration of f over the finite interval [a, b].
template <class F>
double integrate(F&& f, double a, double b, double abs_tol = 1e-12, double rel_tol = 1e-12,
                 int max_intervals = 20000) {
  std::priority_queue<detail::Interval> heap;
  heap.push(detail::gk15(f, a, b));
  double total = heap.top().value;
  double error = heap.top().error;
  int n = 1;
  while (n < max_intervals) {
    if (error <= std::max(abs_tol, rel_tol * std::abs(total))) break;
    const detail::Interval worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const detail::Interval left = detail::gk15(f, worst.a, mid);
    const detail::Interval right = detail::gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++n;
  }
  return total;
}

/// Integration of f over [a, inf) via the substitution t = a + u/(1-u).
template <class F>
double integrate_to_inf(F&& f, double a, double abs_tol = 1e-12, double rel_tol = 1e-12) {
  auto g = [&](double u) {
    const double one_minus = 1.0 - u;
    const double t = a + u / one_minus;
    return f(t) / (one_minus * one_minus);
  };
  return integrate(g, 0.0, 1.0, abs_tol, rel_tol);
}

/// Integration of f over the whole real line (split at zero).
template <class F>
double integrate_real_line(F&& f, double abs_tol = 1e-12, double rel_tol = 1e-12) {
  auto reflected = [&](double t) { return f(-t); };
  return integrate_to_inf(f, 0.0, abs_tol / 2, rel_tol) +
         integrate_to_inf(reflected, 0.0, abs_tol / 2, rel_tol);
}

/// Reference upper incomplete gamma by quadrature of the defining integral
/// int_x^inf t^(s-1) e^(-t) dt. The s < 1 endpoint singularity at 0 is tamed
/// with the substitution w = t^s.
inline double upper_gamma_quadrature(double s, double x) {
  if (s <= 0.0 || x < 0.0) throw std::invalid_argument("bad incomplete gamma arguments");
  auto integrand = [s](double t) { return std::pow(t, s - 1.0) * std::exp(-t); };
  if (s >= 1.0 || x >= 1.0) {
    return integrate_to_inf(integrand, x);
  }
  // int_x^1 t^(s-1) e^(-t) dt = (1/s) int_{x^s}^{1} exp(-w^(1/s)) dw
  auto smooth = [s](double w) { return std::exp(-std::pow(w, 1.0 / s)); };
  const double head = integrate(smooth, std::pow(x, s), 1.0) / s;
  return head + integrate_to_inf(integrand, 1.0);
}

}  // namespace testsupport
