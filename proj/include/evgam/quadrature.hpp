#ifndef EVGAM_QUADRATURE_HPP
#define EVGAM_QUADRATURE_HPP

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "evgam/errors.hpp"

namespace evgam {

// Interior margin used when integrating angular densities: the families can be
// unbounded (but integrable) at the simplex edges, so integration runs over
// (kEdgeEps, 1 - kEdgeEps) and the adaptive rule zooms into the edge layers.
inline constexpr double kEdgeEps = 1e-10;

// Adaptive Gauss-Kronrod (G7,K15) on (a, b).
template <class F>
double integrate_gk(F&& f, double a, double b, double tol = 1e-9,
                    unsigned max_depth = 40) {
  double err = 0.0;
  double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      std::forward<F>(f), a, b, max_depth, tol, &err);
  if (!std::isfinite(v)) throw QuadratureError("gauss-kronrod returned non-finite value");
  return v;
}

// Integral of f over the interior of (0,1) with edge margin kEdgeEps.
template <class F>
double integrate_unit_interior(F&& f, double tol = 1e-9) {
  return integrate_gk(std::forward<F>(f), kEdgeEps, 1.0 - kEdgeEps, tol);
}

// Gauss-Legendre nodes/weights on [0,1] by Golub-Welsch (symmetric tridiagonal
// Jacobi matrix). Cached per order; orders used here are a handful.
inline const std::pair<std::vector<double>, std::vector<double>>&
gauss_legendre_unit(int n) {
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    double b = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = b;
    jacobi(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  std::vector<double> x(n), w(n);
  for (int k = 0; k < n; ++k) {
    // nodes on [-1,1] -> [0,1]; weight = 2 * (first eigenvector component)^2
    x[k] = 0.5 * (es.eigenvalues()[k] + 1.0);
    double v0 = es.eigenvectors()(0, k);
    w[k] = v0 * v0;  // the factor 2 and the 1/2 interval scaling cancel
  }
  return cache.emplace(n, std::make_pair(std::move(x), std::move(w))).first->second;
}

namespace detail {
// Smootherstep map [0,1]->[0,1] with vanishing first derivatives at both ends;
// clusters tensor nodes at the simplex edges so that integrable power
// singularities (exponents > -1/2) become quadrature-friendly.
inline double sstep(double s) { return s * s * (3.0 - 2.0 * s); }
inline double sstep_d(double s) { return 6.0 * s * (1.0 - s); }
}  // namespace detail

// Integral of f(w1, w2) over the 2-simplex {w1,w2 >= 0, w1+w2 <= 1} using a
// tensorized Gauss-Legendre rule in graded barycentric (Duffy) coordinates,
// refined until two successive node counts agree below tol.
template <class F>
double integrate_simplex3(F&& f, double tol = 1e-7) {
  double prev = std::numeric_limits<double>::quiet_NaN();
  for (int n : {128, 256, 512, 1024}) {
    const auto& [xs, ws] = gauss_legendre_unit(n);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      double t = detail::sstep(xs[i]);
      double jt = detail::sstep_d(xs[i]) * ws[i];
      double row = 0.0;
      for (int j = 0; j < n; ++j) {
        double s = detail::sstep(xs[j]);
        double js = detail::sstep_d(xs[j]) * ws[j];
        double w1 = s * (1.0 - t);
        double w2 = t;
        if (w1 <= 0.0 || w2 <= 0.0 || 1.0 - w1 - w2 <= 0.0) continue;
        row += js * f(w1, w2);
      }
      total += jt * row * (1.0 - t);
    }
    if (std::isfinite(prev) && std::abs(total - prev) < tol * (1.0 + std::abs(total)))
      return total;
    prev = total;
  }
  throw QuadratureError("simplex quadrature did not converge to tolerance");
}

// Composite trapezoid on an explicit grid.
inline double trapezoid(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i)
    s += 0.5 * (y[i] + y[i - 1]) * (x[i] - x[i - 1]);
  return s;
}

inline std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1.0);
  return v;
}

}  // namespace evgam

#endif
