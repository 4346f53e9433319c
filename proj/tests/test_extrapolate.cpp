#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>

#include "fixtures.hpp"
#include "homonym/collision.hpp"
#include "homonym/error.hpp"
#include "homonym/extrapolate.hpp"

using namespace homonym;
using namespace homonym::testing;

namespace {

CollisionCurve planted_curve(Transform t, double a, double b, std::vector<std::uint64_t> grid) {
  CollisionCurve curve;
  for (auto n : grid) {
    CurvePoint p;
    p.n = n;
    p.mean = inverse_transform(t, a + b * std::log(static_cast<double>(n)));
    p.replicates = 100;
    p.std_error = 0.001;
    curve.points.push_back(p);
  }
  return curve;
}

}  // namespace

TEST_CASE("logit") {
  CHECK(logit(0.5) == 0.0);
  CHECK(logit(0.75) == doctest::Approx(1.0986122886681098).epsilon(1e-14));
  CHECK(logit(0.1) == doctest::Approx(-logit(0.9)).epsilon(1e-14));
  CHECK(error_code_of([] { logit(0.0); }) == Errc::OutOfDomain);
  CHECK(error_code_of([] { logit(1.0); }) == Errc::OutOfDomain);
  CHECK(error_code_of([] { logit(std::nan("")); }) == Errc::OutOfDomain);
}

TEST_CASE("probit") {
  CHECK(probit(0.5) == 0.0);
  // Reference quantile from a 50-digit evaluation of sqrt(2) erfinv(0.95).
  CHECK(std::fabs(probit(0.975) - 1.959963984540054) <= 1e-9);
  CHECK(std::fabs(probit(0.025) + 1.959963984540054) <= 1e-9);
  for (double u : {1e-6, 0.3, 1 - 1e-6}) CHECK(std::fabs(normal_cdf(probit(u)) - u) <= 1e-9);
  CHECK(error_code_of([] { probit(-0.1); }) == Errc::OutOfDomain);
  CHECK(error_code_of([] { probit(1.0); }) == Errc::OutOfDomain);
}

TEST_CASE("transforms round-trip across the unit interval") {
  for (Transform t : {Transform::Logit, Transform::Probit}) {
    for (double lu = -6.0; lu <= 0.0; lu += 0.05) {
      for (double u : {std::pow(10.0, lu) * 0.999999, 1.0 - std::pow(10.0, lu) * 0.999999}) {
        if (u < 1e-6 || u > 1 - 1e-6) continue;
        CHECK(std::fabs(inverse_transform(t, apply_transform(t, u)) - u) <= 1e-9);
      }
    }
  }
}

TEST_CASE("noiseless probit curve is recovered exactly") {
  std::vector<std::uint64_t> grid;
  for (double x = 3.0; x <= 5.0; x += 0.1) grid.push_back(static_cast<std::uint64_t>(std::llround(std::pow(10.0, x))));
  const auto curve = planted_curve(Transform::Probit, -3.0, 0.4, grid);
  const auto fit = fit_transformed(curve, Transform::Probit, {1000, 100000});
  CHECK(std::fabs(fit.intercept + 3.0) <= 1e-6);
  CHECK(std::fabs(fit.slope - 0.4) <= 1e-6);
  CHECK(fit.r_squared >= 1 - 1e-9);
  CHECK(fit.points_used == grid.size());
  CHECK(predict(fit, 1e6) == doctest::Approx(0.99423487834551).epsilon(1e-6));
}

TEST_CASE("noiseless logit curve is recovered exactly, weighted or not") {
  const auto curve = planted_curve(Transform::Logit, -5.0, 0.6, {100, 300, 1000, 3000, 10000});
  for (bool weighted : {false, true}) {
    const auto fit = fit_transformed(curve, Transform::Logit, {50, 20000}, {.weighted = weighted});
    CHECK(fit.intercept == doctest::Approx(-5.0).epsilon(1e-9));
    CHECK(fit.slope == doctest::Approx(0.6).epsilon(1e-9));
  }
}

TEST_CASE("fit window bookkeeping and errors") {
  const auto curve = planted_curve(Transform::Probit, -3.0, 0.4, {10, 100, 1000, 10000});
  CHECK(error_code_of([&] { fit_transformed(curve, Transform::Probit, {50, 5000}); }) ==
        Errc::InsufficientPoints);
  CHECK(error_code_of([&] { fit_transformed(curve, Transform::Probit, {5000, 50}); }) ==
        Errc::InvalidArgument);

  CollisionCurve flat;
  for (std::uint64_t n : {10, 20, 40}) flat.points.push_back({n, {}, 0.0, 0.0, 50});
  CHECK(error_code_of([&] { fit_transformed(flat, Transform::Probit, {1, 100}); }) == Errc::AllSaturated);
}

TEST_CASE("saturated points are clamped, not dropped") {
  CollisionCurve curve = planted_curve(Transform::Probit, -3.0, 0.4, {100, 1000, 10000});
  curve.points.insert(curve.points.begin(), CurvePoint{10, {}, 0.0, 0.0, 20});
  const auto fit = fit_transformed(curve, Transform::Probit, {10, 10000});
  CHECK(fit.points_used == 4);
  CHECK(fit.clamp_epsilon == doctest::Approx(1.0 / 40.0));
  CHECK(std::isfinite(fit.intercept));
}

TEST_CASE("fitting ignores point order and replicate order") {
  const auto dist = std::make_shared<const CategoricalDist>(zipf_pmf(1.0, 10000));
  const CategoricalSource src(dist, "zipf");
  auto curve = estimate_curve({{1000, 2000, 4000, 7000, 10000}, 30, 4}, src, 0);
  const auto base = fit_transformed(curve, Transform::Probit, {1000, 10000});

  std::mt19937 rng(1);
  std::shuffle(curve.points.begin(), curve.points.end(), rng);
  for (auto& p : curve.points) std::shuffle(p.values.begin(), p.values.end(), rng);
  const auto shuffled = fit_transformed(curve, Transform::Probit, {1000, 10000});
  CHECK(shuffled.intercept == doctest::Approx(base.intercept).epsilon(1e-12));
  CHECK(shuffled.slope == doctest::Approx(base.slope).epsilon(1e-12));
}

TEST_CASE("simulated Zipf curve is close to linear on the probit scale") {
  const auto dist = std::make_shared<const CategoricalDist>(zipf_pmf(1.0, 10000));
  const CategoricalSource src(dist, "zipf");
  SimulationPlan plan;
  for (double x = 3.0; x <= 4.0 + 1e-9; x += 0.1) plan.n_grid.push_back(std::llround(std::pow(10.0, x)));
  plan.replicates = 50;
  plan.seed = 99;
  const auto curve = estimate_curve(plan, src, 0);
  const auto fit = fit_transformed(curve, Transform::Probit, {1000, 10000});
  CHECK(fit.r_squared >= 0.99);
}

TEST_CASE("predict") {
  TransformFit flat;
  flat.transform = Transform::Probit;
  for (double n : {1.0, 10.0, 1e9}) CHECK(predict(flat, n) == 0.5);

  TransformFit steep;
  steep.transform = Transform::Probit;
  steep.intercept = 0.0;
  steep.slope = 10.0;
  const double big = predict(steep, 1e12);
  CHECK(big > 0.0);
  CHECK(big < 1.0);
  steep.slope = -10.0;
  const double small = predict(steep, 1e12);
  CHECK(small > 0.0);
  CHECK(small < 1.0);

  TransformFit rising;
  rising.slope = 0.3;
  rising.intercept = -2.0;
  double prev = 0.0;
  for (double n = 1; n < 1e9; n *= 3) {
    const double p = predict(rising, n);
    CHECK(p >= prev);
    prev = p;
  }
}
