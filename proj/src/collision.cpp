#include "homonym/collision.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <thread>

#include "homonym/error.hpp"

namespace homonym {

void MultiplicityCounter::reset(std::size_t expected) {
  const std::size_t want = std::bit_ceil(std::max<std::size_t>(16, expected * 2));
  if (keys_.size() < want) {
    keys_.assign(want, kEmpty);
    counts_.assign(want, 0);
    used_.clear();
  } else {
    for (std::uint32_t slot : used_) keys_[slot] = kEmpty;
    used_.clear();
  }
  // Small rounds on a large table keep the large mask; probing stays short.
  mask_ = keys_.size() - 1;
  used_.reserve(expected);
  colliding_ = 0;
}

namespace {

constexpr std::size_t kChunk = 4096;

}  // namespace

double homonym_proportion_once(const LabelSource& source, std::size_t n, Stream& stream,
                               MultiplicityCounter& counter, std::vector<std::uint64_t>& buffer) {
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be >= 1");
  counter.reset(n);
  buffer.resize(std::min(n, kChunk));
  for (std::size_t done = 0; done < n;) {
    const std::size_t m = std::min(kChunk, n - done);
    std::span<std::uint64_t> chunk(buffer.data(), m);
    source.fill(chunk, stream);
    for (std::uint64_t key : chunk) counter.insert(key);
    done += m;
  }
  return static_cast<double>(counter.colliding()) / static_cast<double>(n);
}

double homonym_proportion_once(const LabelSource& source, std::size_t n, Stream& stream) {
  MultiplicityCounter counter;
  std::vector<std::uint64_t> buffer;
  return homonym_proportion_once(source, n, stream, counter, buffer);
}

void SimulationPlan::validate() const {
  if (n_grid.empty()) throw Error(Errc::InvalidArgument, "empty n grid");
  if (replicates == 0) throw Error(Errc::InvalidArgument, "replicates must be >= 1");
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    if (n_grid[i] == 0) throw Error(Errc::InvalidArgument, "group sizes must be >= 1");
    if (i > 0 && n_grid[i] <= n_grid[i - 1]) {
      throw Error(Errc::InvalidArgument, "n grid must be strictly ascending");
    }
  }
}

CurvePoint summarize(std::uint64_t n, std::vector<double> values) {
  CurvePoint p;
  p.n = n;
  p.replicates = values.size();
  if (values.empty()) return p;
  long double sum = 0.0L;
  for (double v : values) sum += v;
  p.mean = static_cast<double>(sum / values.size());
  if (values.size() > 1) {
    long double ss = 0.0L;
    for (double v : values) ss += (v - p.mean) * static_cast<long double>(v - p.mean);
    const double var = static_cast<double>(ss / (values.size() - 1));
    p.std_error = std::sqrt(var / static_cast<double>(values.size()));
  }
  p.values = std::move(values);
  return p;
}

CollisionCurve estimate_curve(const SimulationPlan& plan, const LabelSource& source,
                              unsigned workers) {
  plan.validate();
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

  const std::size_t reps = plan.replicates;
  const std::size_t tasks = plan.n_grid.size() * reps;
  std::vector<double> results(tasks);
  const Stream root(plan.seed);

  // Largest n first so stragglers are small.
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    MultiplicityCounter counter;
    std::vector<std::uint64_t> buffer;
    while (true) {
      const std::size_t t = next.fetch_add(1, std::memory_order_relaxed);
      if (t >= tasks) return;
      const std::size_t g = plan.n_grid.size() - 1 - t / reps;
      const std::size_t r = t % reps;
      Stream stream = root.derive({g, r});
      results[g * reps + r] =
          homonym_proportion_once(source, plan.n_grid[g], stream, counter, buffer);
    }
  };

  workers = static_cast<unsigned>(std::min<std::size_t>(workers, tasks));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  CollisionCurve curve;
  curve.source = source.describe();
  curve.points.reserve(plan.n_grid.size());
  for (std::size_t g = 0; g < plan.n_grid.size(); ++g) {
    auto first = results.begin() + static_cast<std::ptrdiff_t>(g * reps);
    curve.points.push_back(
        summarize(plan.n_grid[g], std::vector<double>(first, first + static_cast<std::ptrdiff_t>(reps))));
  }
  return curve;
}

double analytic_expected_proportion(const CategoricalDist& dist, std::uint64_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be >= 1");
  if (n == 1) return 0.0;
  const double m = static_cast<double>(n - 1);
  long double no_match = 0.0L;
  for (double p : dist.probs()) {
    if (p <= 0.0 || p >= 1.0) continue;
    no_match += p * std::exp(m * std::log1p(-p));
  }
  return std::clamp(static_cast<double>(1.0L - no_match), 0.0, 1.0);
}

double brute_force_expected_proportion(const CategoricalDist& dist, std::uint64_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be >= 1");
  const std::size_t k = dist.size();
  constexpr double kLimit = 1e7;
  if (static_cast<double>(n) * std::log(static_cast<double>(k)) > std::log(kLimit) + 1e-12) {
    throw Error(Errc::TooLarge, "k^n exceeds 1e7");
  }
  const auto& probs = dist.probs();
  std::vector<std::size_t> outcome(n, 0);
  std::vector<std::size_t> mult(k, 0);
  long double expected = 0.0L;
  while (true) {
    long double weight = 1.0L;
    std::fill(mult.begin(), mult.end(), 0);
    for (std::size_t x : outcome) {
      weight *= probs[x];
      ++mult[x];
    }
    std::size_t colliding = 0;
    for (std::size_t c : mult) {
      if (c >= 2) colliding += c;
    }
    expected += weight * static_cast<long double>(colliding) / static_cast<long double>(n);

    std::size_t pos = 0;
    while (pos < n && ++outcome[pos] == k) outcome[pos++] = 0;
    if (pos == n) break;
  }
  return static_cast<double>(expected);
}

double uniform_all_distinct_exact(std::uint64_t k, std::uint64_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be >= 1");
  if (k == 0) throw Error(Errc::EmptySupport, "k must be >= 1");
  if (n > k) return 0.0;
  // Factors 1 - i/k decrease in i, so this runs in descending magnitude.
  double product = 1.0;
  const double kd = static_cast<double>(k);
  for (std::uint64_t i = 1; i < n && product > 0.0; ++i) {
    product *= 1.0 - static_cast<double>(i) / kd;
  }
  return product;
}

double uniform_all_distinct_approx(std::uint64_t k, std::uint64_t n) {
  if (k == 0) throw Error(Errc::EmptySupport, "k must be >= 1");
  const double nd = static_cast<double>(n);
  return std::exp(-nd * nd / (2.0 * static_cast<double>(k)));
}

}  // namespace homonym
