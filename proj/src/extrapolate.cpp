#include "homonym/extrapolate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "homonym/error.hpp"

namespace homonym {

std::string_view transform_name(Transform t) noexcept {
  return t == Transform::Logit ? "logit" : "probit";
}

std::optional<Transform> parse_transform(std::string_view name) noexcept {
  if (name == "logit") return Transform::Logit;
  if (name == "probit") return Transform::Probit;
  return std::nullopt;
}

namespace {

void require_unit_open(double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw Error(Errc::OutOfDomain, "expected 0 < u < 1, got " + std::to_string(u));
  }
}

double normal_pdf(double x) noexcept {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

// Lower-tail quantile for 0 < p <= 0.5.
double lower_quantile(double p) {
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double kLow = 0.02425;

  double x;
  if (p < kLow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  }
  // Halley refinement.
  const double e = normal_cdf(x) - p;
  const double u = e / normal_pdf(x);
  return x - u / (1.0 + 0.5 * x * u);
}

}  // namespace

double logit(double u) {
  require_unit_open(u);
  return std::log(u / (1.0 - u));
}

double inverse_logit(double x) noexcept {
  return x >= 0.0 ? 1.0 / (1.0 + std::exp(-x)) : std::exp(x) / (1.0 + std::exp(x));
}

double normal_cdf(double x) noexcept { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double probit(double u) {
  require_unit_open(u);
  if (u == 0.5) return 0.0;
  // 1 - u is exact for u in [0.5, 1), so the upper tail loses nothing.
  return u < 0.5 ? lower_quantile(u) : -lower_quantile(1.0 - u);
}

double apply_transform(Transform t, double u) {
  return t == Transform::Logit ? logit(u) : probit(u);
}

double inverse_transform(Transform t, double x) noexcept {
  return t == Transform::Logit ? inverse_logit(x) : normal_cdf(x);
}

TransformFit fit_transformed(const CollisionCurve& curve, Transform transform, FitWindow window,
                             FitOptions options) {
  if (!(window.n_min < window.n_max)) {
    throw Error(Errc::InvalidArgument, "fit window requires n_min < n_max");
  }
  struct Obs {
    double x, y, w;
  };
  std::vector<Obs> obs;
  std::size_t saturated = 0;
  double clamp_epsilon = 0.0;
  for (const auto& p : curve.points) {
    const double n = static_cast<double>(p.n);
    if (n < window.n_min || n > window.n_max) continue;
    const double reps = static_cast<double>(std::max<std::size_t>(p.replicates, 1));
    const double eps = 1.0 / (2.0 * reps);
    clamp_epsilon = std::max(clamp_epsilon, eps);
    const double floor = eps / n;
    double u = p.mean;
    if (u <= floor || u >= 1.0 - floor) {
      ++saturated;
      u = std::clamp(u, floor, 1.0 - floor);
    }
    const double y = apply_transform(transform, u);
    double w = 1.0;
    if (options.weighted) {
      const double slope =
          transform == Transform::Logit ? 1.0 / (u * (1.0 - u)) : 1.0 / normal_pdf(y);
      const double se = std::max(p.std_error, floor) * slope;
      w = 1.0 / (se * se);
    }
    obs.push_back({std::log(n), y, w});
  }
  if (obs.size() < 3) {
    throw Error(Errc::InsufficientPoints,
                std::to_string(obs.size()) + " grid points in window [" +
                    std::to_string(window.n_min) + ", " + std::to_string(window.n_max) + "]");
  }
  if (saturated == obs.size()) {
    throw Error(Errc::AllSaturated, "every in-window estimate is 0 or 1");
  }

  double sw = 0, sx = 0, sy = 0;
  for (const auto& o : obs) {
    sw += o.w;
    sx += o.w * o.x;
    sy += o.w * o.y;
  }
  const double mx = sx / sw, my = sy / sw;
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& o : obs) {
    sxx += o.w * (o.x - mx) * (o.x - mx);
    sxy += o.w * (o.x - mx) * (o.y - my);
    syy += o.w * (o.y - my) * (o.y - my);
  }
  if (!(sxx > 0.0)) throw Error(Errc::InsufficientPoints, "in-window points share one n");

  TransformFit fit;
  fit.transform = transform;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.window = window;
  fit.points_used = obs.size();
  fit.clamp_epsilon = clamp_epsilon;
  if (syy > 0.0) {
    double ss_res = 0.0;
    for (const auto& o : obs) {
      const double r = o.y - (fit.intercept + fit.slope * o.x);
      ss_res += o.w * r * r;
    }
    fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  } else {
    fit.r_squared = 1.0;
  }
  return fit;
}

double predict(const TransformFit& fit, double n) {
  if (!(n >= 1.0)) throw Error(Errc::InvalidArgument, "n must be >= 1");
  const double p = inverse_transform(fit.transform, fit.intercept + fit.slope * std::log(n));
  return std::clamp(p, std::numeric_limits<double>::min(), std::nextafter(1.0, 0.0));
}

}  // namespace homonym
