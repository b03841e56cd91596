#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "eegswt/wavelet.hpp"

namespace eegswt {
namespace {

using std::numbers::pi;
using std::numbers::sqrt2;

// Meyer's auxiliary function nu(x) = x^4 (35 - 84x + 70x^2 - 20x^3) on [0, 1].
double meyer_nu(double x) {
  x = std::clamp(x, 0.0, 1.0);
  return x * x * x * x * (35.0 - 84.0 * x + 70.0 * x * x - 20.0 * x * x * x);
}

// Frequency response of the Meyer scaling filter on [0, pi]. It satisfies
// |H(w)|^2 + |H(w + pi)|^2 = 2 exactly.
double meyer_response(double w) {
  w = std::abs(w);
  if (w <= pi / 3.0) return sqrt2;
  if (w >= 2.0 * pi / 3.0) return 0.0;
  return sqrt2 * std::cos(pi / 2.0 * meyer_nu(3.0 * w / pi - 1.0));
}

// h[n] = (1/pi) * integral_0^pi H(w) cos(w t) dw with t = n - centre.
double meyer_tap(double t) {
  // Flat part in closed form; t is never zero for an even tap count.
  double value = sqrt2 * std::sin(pi / 3.0 * t) / (pi * t);
  // Composite Simpson over the transition band.
  constexpr int kPanels = 16384;
  const double a = pi / 3.0;
  const double b = 2.0 * pi / 3.0;
  const double h = (b - a) / kPanels;
  double sum = 0.0;
  for (int i = 0; i <= kPanels; ++i) {
    const double w = a + i * h;
    const double weight = (i == 0 || i == kPanels) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    sum += weight * meyer_response(w) * std::cos(w * t);
  }
  value += sum * h / 3.0 / pi;
  return value;
}

// Constraints of an orthonormal lowpass filter: sum_n h[n] h[n+2k] = delta(k)
// for k = 0..L/2-1, plus H(pi) = 0.
Eigen::VectorXd constraints(const Eigen::VectorXd& h) {
  const Eigen::Index n = h.size();
  const Eigen::Index half = n / 2;
  Eigen::VectorXd c(half + 1);
  for (Eigen::Index k = 0; k < half; ++k) {
    double s = 0.0;
    for (Eigen::Index i = 0; i + 2 * k < n; ++i) s += h[i] * h[i + 2 * k];
    c[k] = s - (k == 0 ? 1.0 : 0.0);
  }
  double alt = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) alt += (i % 2 == 0 ? h[i] : -h[i]);
  c[half] = alt;
  return c;
}

Eigen::MatrixXd constraint_jacobian(const Eigen::VectorXd& h) {
  const Eigen::Index n = h.size();
  const Eigen::Index half = n / 2;
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(half + 1, n);
  for (Eigen::Index k = 0; k < half; ++k) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i - 2 * k >= 0) jac(k, i) += h[i - 2 * k];
      if (i + 2 * k < n) jac(k, i) += h[i + 2 * k];
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) jac(half, i) = (i % 2 == 0 ? 1.0 : -1.0);
  return jac;
}

}  // namespace

std::vector<double> meyer_lowpass(std::size_t taps) {
  if (taps < 4 || taps % 2 != 0) throw std::invalid_argument("meyer_lowpass: taps must be even and >= 4");

  const double centre = (static_cast<double>(taps) - 1.0) / 2.0;
  Eigen::VectorXd h(static_cast<Eigen::Index>(taps));
  for (std::size_t i = 0; i < taps; ++i) h[static_cast<Eigen::Index>(i)] = meyer_tap(i - centre);

  // Damped Gauss-Newton projection onto the constraint manifold. Constraints
  // coupling the tiny tail taps make J J^T nearly singular, so the plain
  // minimum-norm step overshoots; the damping keeps each step local.
  double damping = 1e-6;
  double residual = constraints(h).cwiseAbs().maxCoeff();
  for (int iter = 0; iter < 300 && residual > 1e-15; ++iter) {
    const Eigen::VectorXd c = constraints(h);
    const Eigen::MatrixXd jac = constraint_jacobian(h);
    Eigen::MatrixXd normal = jac * jac.transpose();
    normal.diagonal().array() += damping;
    const Eigen::VectorXd trial = h - jac.transpose() * normal.ldlt().solve(c);
    const double trial_residual = constraints(trial).cwiseAbs().maxCoeff();
    if (trial_residual < residual) {
      h = trial;
      residual = trial_residual;
      damping = std::max(damping / 10.0, 1e-30);
    } else {
      damping *= 10.0;
      if (damping > 1e6) break;
    }
  }
  return {h.data(), h.data() + h.size()};
}

}  // namespace eegswt
