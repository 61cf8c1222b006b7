#include "noncentral/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace noncentral {

namespace {

// G7/K15 nodes and weights on [-1, 1] (QUADPACK values).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Segment {
  double a, b;
  double value;
  double error;
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXgk[i];
    const double fs = f(c - dx) + f(c + dx);
    kronrod += kWgk[i] * fs;
    if (i % 2 == 1) gauss += kWg[i / 2] * fs;
  }
  kronrod *= h;
  gauss *= h;
  // QUADPACK-style inflated error estimate (200 |K - G|)^{3/2}.
  double err = 200.0 * std::abs(kronrod - gauss);
  err *= std::sqrt(err);
  return Segment{a, b, kronrod, err + 1e-300};
}

QuadratureResult run_adaptive(const std::function<double(double)>& f,
                              std::vector<Segment> segs, double rel_tol, long max_evals,
                              double abs_floor, long evals) {
  for (;;) {
    double total = 0.0, err = 0.0;
    for (const Segment& s : segs) {
      total += s.value;
      err += s.error;
    }
    if (err <= rel_tol * std::abs(total) || err <= abs_floor)
      return QuadratureResult{total, err, evals};
    if (evals + 30 > max_evals)
      throw ConvergenceError("adaptive quadrature: error " + std::to_string(err) +
                             " above tolerance after " + std::to_string(evals) +
                             " evaluations");
    auto worst = std::max_element(segs.begin(), segs.end(),
                                  [](const Segment& x, const Segment& y) {
                                    return x.error < y.error;
                                  });
    const Segment split = *worst;
    const double mid = 0.5 * (split.a + split.b);
    if (!(split.a < mid && mid < split.b))
      throw ConvergenceError("adaptive quadrature: interval underflow near " +
                             std::to_string(split.a));
    *worst = gk15(f, split.a, mid);
    segs.push_back(gk15(f, mid, split.b));
    evals += 30;
  }
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol, long max_evals, double abs_floor) {
  return integrate_adaptive_segmented(f, {a, b}, rel_tol, max_evals, abs_floor);
}

QuadratureResult integrate_adaptive_segmented(const std::function<double(double)>& f,
                                              const std::vector<double>& breakpoints,
                                              double rel_tol, long max_evals, double abs_floor) {
  if (breakpoints.size() < 2) throw DomainError("quadrature: need at least two breakpoints");
  std::vector<Segment> segs;
  long evals = 0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i] < breakpoints[i + 1]))
      throw DomainError("quadrature: breakpoints must be strictly increasing");
    segs.push_back(gk15(f, breakpoints[i], breakpoints[i + 1]));
    evals += 15;
  }
  return run_adaptive(f, std::move(segs), rel_tol, max_evals, abs_floor, evals);
}

}  // namespace noncentral
