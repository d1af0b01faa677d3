#pragma once

#include <utility>

namespace numrad::detail {

// Golden-section minimize f over [a, b] until the bracket is narrower than
// width; returns the best probed (x, f(x)).
template <typename F>
std::pair<double, double> golden_min(F&& f, double a, double b, double width) {
  const double invphi = 0.6180339887498949;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > width) {
    if (f1 > f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    }
  }
  return f1 <= f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

template <typename F>
std::pair<double, double> golden_max(F&& f, double a, double b, double width) {
  auto neg = [&](double x) { return -f(x); };
  auto [x, v] = golden_min(neg, a, b, width);
  return {x, -v};
}

}  // namespace numrad::detail
