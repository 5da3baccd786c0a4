#include "qfb/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qfb {

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& m) {
  using Mx = Eigen::MatrixXcd;
  const Eigen::Index n = m.rows();
  const Mx id = Mx::Identity(n, n);

  // Pade-13 coefficients (Higham 2005).
  static const double b[] = {64764752532480000.0, 32382376266240000.0,
                             7771770303897600.0,  1187353796428800.0,
                             129060195264000.0,   10559470521600.0,
                             670442572800.0,      33522128640.0,
                             1323241920.0,        40840800.0,
                             960960.0,            16380.0,
                             182.0,               1.0};
  const double theta13 = 5.371920351148152;

  const double norm1 = m.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > theta13)
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));
  const Mx a = m / std::pow(2.0, squarings);

  const Mx a2 = a * a;
  const Mx a4 = a2 * a2;
  const Mx a6 = a2 * a4;
  const Mx u = a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 +
                    b[5] * a4 + b[3] * a2 + b[1] * id);
  const Mx v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 +
               b[4] * a4 + b[2] * a2 + b[0] * id;

  Mx r = (v - u).partialPivLu().solve(v + u);
  for (int i = 0; i < squarings; ++i) r = r * r;
  return r;
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kA21 = 1.0 / 5;
constexpr double kA31 = 3.0 / 40, kA32 = 9.0 / 40;
constexpr double kA41 = 44.0 / 45, kA42 = -56.0 / 15, kA43 = 32.0 / 9;
constexpr double kA51 = 19372.0 / 6561, kA52 = -25360.0 / 2187,
                 kA53 = 64448.0 / 6561, kA54 = -212.0 / 729;
constexpr double kA61 = 9017.0 / 3168, kA62 = -355.0 / 33,
                 kA63 = 46732.0 / 5247, kA64 = 49.0 / 176,
                 kA65 = -5103.0 / 18656;
constexpr double kB1 = 35.0 / 384, kB3 = 500.0 / 1113, kB4 = 125.0 / 192,
                 kB5 = -2187.0 / 6784, kB6 = 11.0 / 84;
// Difference between the 5th- and 4th-order weights (error estimator).
constexpr double kE1 = kB1 - 5179.0 / 57600, kE3 = kB3 - 7571.0 / 16695,
                 kE4 = kB4 - 393.0 / 640, kE5 = kB5 + 92097.0 / 339200,
                 kE6 = kB6 - 187.0 / 2100, kE7 = -1.0 / 40;

}  // namespace

Vec16 ode_integrate(const OdeRhs& f, double t0, const Vec16& y0, double t1,
                    const OdeOptions& opt) {
  if (t1 == t0) return y0;
  const double dir = t1 > t0 ? 1.0 : -1.0;
  double t = t0;
  Vec16 y = y0;
  double h = dir * std::min(opt.h_init, std::abs(t1 - t0));

  Vec16 k1 = f(t, y);  // FSAL: reused across accepted steps
  while (dir * (t1 - t) > 0) {
    if (dir * (t + h - t1) > 0) h = t1 - t;
    if (std::abs(h) < 1e-14 * std::max(1.0, std::abs(t)))
      throw Error("step_underflow",
                  strfmt("step size underflow at t = %.12g", t));

    const Vec16 k2 = f(t + kA21 * h, y + h * (kA21 * k1));
    const Vec16 k3 = f(t + 0.3 * h, y + h * (kA31 * k1 + kA32 * k2));
    const Vec16 k4 = f(t + 0.8 * h, y + h * (kA41 * k1 + kA42 * k2 + kA43 * k3));
    const Vec16 k5 = f(t + 8.0 / 9 * h,
                       y + h * (kA51 * k1 + kA52 * k2 + kA53 * k3 + kA54 * k4));
    const Vec16 k6 =
        f(t + h, y + h * (kA61 * k1 + kA62 * k2 + kA63 * k3 + kA64 * k4 +
                          kA65 * k5));
    const Vec16 ynew =
        y + h * (kB1 * k1 + kB3 * k3 + kB4 * k4 + kB5 * k5 + kB6 * k6);
    const Vec16 k7 = f(t + h, ynew);
    const Vec16 err_vec =
        h * (kE1 * k1 + kE3 * k3 + kE4 * k4 + kE5 * k5 + kE6 * k6 + kE7 * k7);

    double err = 0;
    for (int i = 0; i < 16; ++i) {
      const double sc =
          opt.atol + opt.rtol * std::max(std::abs(y(i)), std::abs(ynew(i)));
      const double e = std::abs(err_vec(i)) / sc;
      err += e * e;
    }
    err = std::sqrt(err / 16.0);

    if (err <= 1.0) {
      t += h;
      y = ynew;
      k1 = k7;
    }
    const double factor =
        err == 0 ? 5.0
                 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
    h *= factor;
  }
  return y;
}

ScalarMax golden_max(const std::function<double(double)>& f, double lo,
                     double hi, double xtol, int grid_points) {
  if (hi < lo) std::swap(lo, hi);
  if (hi - lo < xtol) {
    const double x = 0.5 * (lo + hi);
    return {x, f(x)};
  }

  // Dense scan to bracket the global maximum, then golden-section refine.
  const int n = std::max(grid_points, 3);
  int best = 0;
  double best_val = -std::numeric_limits<double>::infinity();
  const double step = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) {
    const double v = f(lo + i * step);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  double a = lo + std::max(0, best - 1) * step;
  double b = lo + std::min(n - 1, best + 1) * step;

  const double invphi = (std::sqrt(5.0) - 1) / 2;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > xtol) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

}  // namespace qfb
