#include "numrad/radius.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "numrad/detail/golden.hpp"
#include "numrad/eig.hpp"

namespace numrad {

namespace {

constexpr double kPi = 3.14159265358979323846;

double wrap_angle(double t) {
  const double tau = 2.0 * kPi;
  double r = std::fmod(t, tau);
  if (r < 0.0) r += tau;
  return r;
}

}  // namespace

RadiusResult numerical_radius(const ComplexMatrix& a, const OptimizerConfig& cfg) {
  const int n = a.dim();
  const ComplexMatrix c = hermitian_part(a);
  const ComplexMatrix d = skew_part_rotated(a);
  const size_t nn = static_cast<size_t>(n) * n;

  CVector work(nn);
  auto lam_max_at = [&](double theta) {
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    for (size_t k = 0; k < nn; ++k) work[k] = ct * c.entries()[k] + st * d.entries()[k];
    return detail::lambda_max_inplace(work.data(), n);
  };

  const int m = cfg.theta_samples;
  const double step = 2.0 * kPi / m;
  std::vector<double> grid(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) grid[static_cast<size_t>(i)] = lam_max_at(i * step);

  // Circular local maxima, strongest first (grid order breaks value ties).
  std::vector<int> peaks;
  for (int i = 0; i < m; ++i) {
    const double fi = grid[static_cast<size_t>(i)];
    const double fl = grid[static_cast<size_t>((i + m - 1) % m)];
    const double fr = grid[static_cast<size_t>((i + 1) % m)];
    if (fi >= fl && fi >= fr) peaks.push_back(i);
  }
  std::stable_sort(peaks.begin(), peaks.end(), [&](int x, int y) {
    return grid[static_cast<size_t>(x)] > grid[static_cast<size_t>(y)];
  });
  if (static_cast<int>(peaks.size()) > cfg.refine_peaks) peaks.resize(static_cast<size_t>(cfg.refine_peaks));

  std::vector<std::pair<double, double>> candidates;  // (theta in [0, 2pi), value)
  for (int i : peaks) {
    candidates.emplace_back(wrap_angle(i * step), grid[static_cast<size_t>(i)]);
    auto [t, v] = detail::golden_max(lam_max_at, (i - 1) * step, (i + 1) * step, cfg.refine_width);
    candidates.emplace_back(wrap_angle(t), v);
  }

  double best = candidates.front().second;
  for (const auto& cand : candidates) best = std::max(best, cand.second);
  // Among near-ties, report the smallest maximizing angle.
  double theta_star = 4.0 * kPi;
  const double tie = 1e-12 * std::max(1.0, std::abs(best));
  for (const auto& cand : candidates) {
    if (cand.second >= best - tie) theta_star = std::min(theta_star, cand.first);
  }

  RadiusResult out;
  out.value = best;
  out.theta_star = theta_star;

  // Witness: top eigenvector of the pencil at theta_star, phase-normalized so
  // its first nonzero component is real positive.
  ComplexMatrix h = ComplexMatrix::zero(n);
  {
    const double ct = std::cos(theta_star);
    const double st = std::sin(theta_star);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) h(i, j) = ct * c(i, j) + st * d(i, j);
  }
  const HermitianEig eig = hermitian_eig(h);
  CVector x(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<size_t>(i)] = eig.eigenvectors(i, n - 1);
  for (const cxd& v : x) {
    if (std::abs(v) > 1e-14) {
      const cxd phase = v / std::abs(v);
      for (cxd& w : x) w /= phase;
      break;
    }
  }
  out.witness = normalized(x);
  return out;
}

double triangular2x2_radius(cxd a1, cxd a2, cxd b) {
  return 0.5 * std::abs(a1 + a2) + 0.5 * std::sqrt(std::norm(a1 - a2) + std::norm(b));
}

namespace {

double ipow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

double power_gap(const ComplexMatrix& a, int n, const OptimizerConfig& cfg) {
  if (n < 1) throw DomainError("power_gap: exponent must be >= 1");
  const double w = numerical_radius(a, cfg).value;
  const double wn = numerical_radius(matpow(a, n), cfg).value;
  return ipow(w, n) - wn;
}

}  // namespace numrad
