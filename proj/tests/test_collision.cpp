#include <doctest.h>

#include <cmath>
#include <memory>

#include "fixtures.hpp"
#include "homonym/collision.hpp"
#include "homonym/error.hpp"

using namespace homonym;
using namespace homonym::testing;

namespace {

CategoricalSource source_of(CategoricalDist dist, std::string name = "test") {
  return CategoricalSource(std::make_shared<const CategoricalDist>(std::move(dist)), std::move(name));
}

// Fixed list of keys replayed in order; lets the counter be checked exactly.
class ScriptedSource final : public LabelSource {
 public:
  explicit ScriptedSource(std::vector<std::uint64_t> keys) : keys_(std::move(keys)) {}
  void fill(std::span<std::uint64_t> out, Stream&) const override {
    for (auto& k : out) k = keys_[pos_++ % keys_.size()];
  }
  std::string describe() const override { return "scripted"; }

 private:
  std::vector<std::uint64_t> keys_;
  mutable std::size_t pos_ = 0;
};

CategoricalDist random_small_dist(Stream& s) {
  const std::size_t k = 1 + s.next_u64() % 4;
  std::vector<std::string> labels;
  std::vector<double> weights;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(std::to_string(i));
    weights.push_back(0.05 + s.next_unit());
  }
  return build_dist(labels, weights);
}

}  // namespace

TEST_CASE("multiplicity counter counts items in repeated keys") {
  MultiplicityCounter c;
  c.reset(6);
  for (std::uint64_t k : {1, 2, 1, 3, 1, 2}) c.insert(k);
  CHECK(c.colliding() == 5);
  CHECK(c.distinct() == 3);
  c.reset(3);
  for (std::uint64_t k : {7, 8, 9}) c.insert(k);
  CHECK(c.colliding() == 0);
  CHECK(c.distinct() == 3);
}

TEST_CASE("multiplicity counter survives heavy probing") {
  MultiplicityCounter c;
  c.reset(100000);
  // Keys congruent modulo the table size still spread through the hash.
  for (std::uint64_t i = 0; i < 100000; ++i) c.insert(i << 20);
  for (std::uint64_t i = 0; i < 100; ++i) c.insert(i << 20);
  CHECK(c.distinct() == 100000);
  CHECK(c.colliding() == 200);
}

TEST_CASE("homonym_proportion_once on forced cases") {
  Stream s(3);
  CHECK(homonym_proportion_once(source_of(zipf_pmf(1.0, 100)), 1, s) == 0.0);
  CHECK(homonym_proportion_once(source_of(build_dist({"x"}, {1.0})), 5, s) == 1.0);
  CHECK(homonym_proportion_once(ScriptedSource({4, 5, 4, 6}), 4, s) == 0.5);
  CHECK(error_code_of([&] { homonym_proportion_once(source_of(uniform_dist(2)), 0, s); }) ==
        Errc::InvalidArgument);
}

TEST_CASE("uniform k=2, n=2 averages to one half") {
  const auto src = source_of(uniform_dist(2));
  constexpr int runs = 100000;
  double sum = 0.0;
  const Stream root(17);
  for (int r = 0; r < runs; ++r) {
    Stream s = root.derive({static_cast<std::uint64_t>(r)});
    sum += homonym_proportion_once(src, 2, s);
  }
  // Each run is 0 or 1 with p = 1/2, so the standard error is 0.5/sqrt(runs).
  CHECK(std::fabs(sum / runs - 0.5) <= 5.0 * 0.5 / std::sqrt(runs));
}

TEST_CASE("summarize uses the unbiased variance") {
  const auto p = summarize(10, {0.1, 0.2, 0.3, 0.4});
  CHECK(p.mean == doctest::Approx(0.25));
  const double sd = std::sqrt((0.0225 + 0.0025 + 0.0025 + 0.0225) / 3.0);
  CHECK(p.std_error == doctest::Approx(sd / 2.0));
  CHECK(p.replicates == 4);
}

TEST_CASE("simulation plan validation") {
  SimulationPlan plan;
  plan.n_grid = {10, 10};
  CHECK(error_code_of([&] { plan.validate(); }) == Errc::InvalidArgument);
  plan.n_grid = {0, 10};
  CHECK(error_code_of([&] { plan.validate(); }) == Errc::InvalidArgument);
  plan.n_grid = {5, 10};
  plan.replicates = 0;
  CHECK(error_code_of([&] { plan.validate(); }) == Errc::InvalidArgument);
}

TEST_CASE("estimate_curve at n = 1 is identically zero") {
  const auto curve = estimate_curve({{1}, 10, 5}, source_of(zipf_pmf(1.0, 10)), 2);
  REQUIRE(curve.points.size() == 1);
  for (double v : curve.points[0].values) CHECK(v == 0.0);
  CHECK(curve.points[0].mean == 0.0);
  CHECK(curve.points[0].std_error == 0.0);
}

TEST_CASE("estimate_curve matches the analytic expectation for the birthday problem") {
  const auto dist = uniform_dist(365);
  const auto curve = estimate_curve({{50}, 10000, 8}, source_of(dist), 0);
  const auto& p = curve.points[0];
  CHECK(std::fabs(p.mean - analytic_expected_proportion(dist, 50)) <= 3.0 * p.std_error);
  for (double v : p.values) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("Zipf curve is non-decreasing up to noise") {
  const auto curve = estimate_curve({{100, 1000, 10000, 100000}, 40, 21}, source_of(zipf_pmf(1.0, 10000)), 0);
  for (std::size_t i = 1; i < curve.points.size(); ++i) {
    const auto& a = curve.points[i - 1];
    const auto& b = curve.points[i];
    CHECK(b.mean + 3.0 * std::hypot(a.std_error, b.std_error) >= a.mean);
  }
}

TEST_CASE("estimate_curve does not depend on the worker count") {
  const auto src = source_of(zipf_pmf(1.1, 5000));
  const SimulationPlan plan{{10, 100, 1000, 5000}, 37, 123};
  const auto one = estimate_curve(plan, src, 1);
  for (unsigned workers : {2u, 3u, 8u}) {
    const auto many = estimate_curve(plan, src, workers);
    for (std::size_t g = 0; g < plan.n_grid.size(); ++g) {
      CHECK(one.points[g].values == many.points[g].values);
    }
  }
}

TEST_CASE("analytic expectation on forced values") {
  CHECK(analytic_expected_proportion(zipf_pmf(1.0, 10), 1) == 0.0);
  CHECK(analytic_expected_proportion(uniform_dist(365), 2) == doctest::Approx(1.0 / 365).epsilon(1e-12));
  CHECK(analytic_expected_proportion(uniform_dist(2), 3) == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(analytic_expected_proportion(build_dist({"x"}, {1.0}), 4) == 1.0);
}

TEST_CASE("brute force expectation on hand-computed values") {
  CHECK(std::fabs(brute_force_expected_proportion(uniform_dist(2), 2) - 0.5) <= 1e-15);
  CHECK(std::fabs(brute_force_expected_proportion(build_dist({"a", "b"}, {2, 1}), 2) - 5.0 / 9) <= 1e-15);
  // p = (1/2, 1/2), n = 3: 2 of 8 outcomes are all-equal (proportion 1), the
  // other 6 have exactly two matching (proportion 2/3).
  CHECK(std::fabs(brute_force_expected_proportion(uniform_dist(2), 3) - 0.75) <= 1e-15);
  CHECK(error_code_of([] { brute_force_expected_proportion(uniform_dist(10), 8); }) == Errc::TooLarge);
}

TEST_CASE("brute force and analytic agree on random small distributions") {
  Stream s(2718);
  for (int trial = 0; trial < 50; ++trial) {
    const auto dist = random_small_dist(s);
    const std::uint64_t n = 1 + s.next_u64() % 6;
    CHECK(std::fabs(brute_force_expected_proportion(dist, n) - analytic_expected_proportion(dist, n)) <=
          1e-12);
  }
}

TEST_CASE("analytic expectation is non-decreasing in n") {
  for (const auto& dist : {zipf_pmf(1.0, 1000), uniform_dist(365), build_dist({"a", "b"}, {0.99, 0.01})}) {
    double prev = 0.0;
    for (std::uint64_t n = 1; n < 5000; n = n * 3 / 2 + 1) {
      const double e = analytic_expected_proportion(dist, n);
      CHECK(e >= prev);
      prev = e;
    }
  }
}

TEST_CASE("uniform all-distinct probability") {
  CHECK(std::fabs(uniform_all_distinct_exact(365, 23) - 0.492703) <= 1e-6);
  CHECK(std::fabs(uniform_all_distinct_exact(365, 25) - 0.4313) <= 1e-4);
  CHECK(uniform_all_distinct_exact(5, 6) == 0.0);
  CHECK(uniform_all_distinct_exact(5, 1) == 1.0);
  // Independent route through log-gamma: k!/(k-n)!/k^n.
  for (auto [k, n] : {std::pair<int, int>{365, 10}, {365, 60}, {1000, 200}, {10, 10}}) {
    const double lg = std::lgamma(k + 1.0) - std::lgamma(k - n + 1.0) - n * std::log(static_cast<double>(k));
    CHECK(uniform_all_distinct_exact(k, n) == doctest::Approx(std::exp(lg)).epsilon(1e-10));
  }
  for (std::uint64_t n = 1; n < 400; ++n) {
    const double p = uniform_all_distinct_exact(365, n);
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);
  }
}

TEST_CASE("exponential approximation") {
  CHECK(uniform_all_distinct_approx(365, 23) == doctest::Approx(std::exp(-529.0 / 730.0)).epsilon(1e-15));
  CHECK(uniform_all_distinct_approx(365, 23) == doctest::Approx(0.484490).epsilon(1e-5));
  CHECK(uniform_all_distinct_approx(1000, 0) == 1.0);
  const double exact = uniform_all_distinct_exact(365, 23);
  CHECK(std::fabs(uniform_all_distinct_approx(365, 23) - exact) / exact <= 0.02);
}
