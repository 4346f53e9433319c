#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "homonym/collision.hpp"

namespace homonym {

enum class Transform { Logit, Probit };

std::string_view transform_name(Transform t) noexcept;
std::optional<Transform> parse_transform(std::string_view name) noexcept;

// log(u / (1 - u)); OutOfDomain unless 0 < u < 1.
double logit(double u);
double inverse_logit(double x) noexcept;

// Standard normal CDF.
double normal_cdf(double x) noexcept;

/// Standard normal quantile. Acklam's rational approximation followed by one
/// Halley step against the erfc-based CDF; absolute error well below 1e-9.
double probit(double u);

double apply_transform(Transform t, double u);
double inverse_transform(Transform t, double x) noexcept;

struct FitWindow {
  double n_min = 5000.0;
  double n_max = 50000.0;
};

struct TransformFit {
  Transform transform = Transform::Probit;
  double intercept = 0.0;  // a
  double slope = 0.0;      // b, per unit of natural log n
  FitWindow window;
  double r_squared = 0.0;
  std::size_t points_used = 0;
  // A point at group size n estimated from R replicates is clamped into
  // [eps/n, 1 - eps/n] with eps = clamp_epsilon = 1/(2R), i.e. half of one
  // draw out of the n*R drawn at that point. Stored for the smallest R seen.
  double clamp_epsilon = 0.0;
};

struct FitOptions {
  // Weights each point by the inverse delta-method variance on the
  // transformed scale instead of uniformly.
  bool weighted = false;
};

/// Least squares of transform(mean) on log n over the points with
/// n_min <= n <= n_max. Uses means only, so replicate order is irrelevant.
TransformFit fit_transformed(const CollisionCurve& curve, Transform transform, FitWindow window,
                             FitOptions options = {});

// inverse_transform(a + b log n), always strictly inside (0, 1).
double predict(const TransformFit& fit, double n);

}  // namespace homonym
