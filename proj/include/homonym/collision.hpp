#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homonym/distcore.hpp"
#include "homonym/random.hpp"
#include "homonym/source.hpp"

namespace homonym {

/// Open-addressing multiset of 64-bit keys that tracks, as keys arrive, how
/// many inserted items share their key with at least one other item.
///
/// Storage is reused between rounds; clear() only touches occupied slots.
class MultiplicityCounter {
 public:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

  // Sizes the table for up to `expected` items at load factor <= 1/2.
  void reset(std::size_t expected);

  void insert(std::uint64_t key) {
    std::size_t slot = static_cast<std::size_t>(mix64(key)) & mask_;
    while (true) {
      if (keys_[slot] == key) {
        const std::uint32_t c = ++counts_[slot];
        colliding_ += (c == 2) ? 2 : 1;
        return;
      }
      if (keys_[slot] == kEmpty) {
        keys_[slot] = key;
        counts_[slot] = 1;
        used_.push_back(static_cast<std::uint32_t>(slot));
        return;
      }
      slot = (slot + 1) & mask_;
    }
  }

  std::uint64_t colliding() const noexcept { return colliding_; }
  std::size_t distinct() const noexcept { return used_.size(); }

 private:
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::uint32_t> used_;
  std::size_t mask_ = 0;
  std::uint64_t colliding_ = 0;
};

// Fraction of n draws whose label occurs at least twice among the n.
double homonym_proportion_once(const LabelSource& source, std::size_t n, Stream& stream);

// Reusable-scratch variant used by the curve estimator.
double homonym_proportion_once(const LabelSource& source, std::size_t n, Stream& stream,
                               MultiplicityCounter& counter, std::vector<std::uint64_t>& buffer);

struct SimulationPlan {
  std::vector<std::uint64_t> n_grid;  // strictly ascending, all >= 1
  std::size_t replicates = 200;
  std::uint64_t seed = 1;

  void validate() const;
};

struct CurvePoint {
  std::uint64_t n = 0;
  std::vector<double> values;  // per-replicate; empty when loaded from a summary
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t replicates = 0;
};

struct CollisionCurve {
  std::vector<CurvePoint> points;
  std::string source;
};

// Sample mean and sample standard deviation / sqrt(count).
CurvePoint summarize(std::uint64_t n, std::vector<double> values);

/// Monte Carlo curve. Replicate r at grid index g uses the stream derived
/// from (seed, g, r), and results are stored by index, so the output does not
/// depend on `workers` (0 = hardware concurrency).
CollisionCurve estimate_curve(const SimulationPlan& plan, const LabelSource& source,
                              unsigned workers = 0);

// E[P_n] = 1 - sum_i p_i (1 - p_i)^(n-1).
double analytic_expected_proportion(const CategoricalDist& dist, std::uint64_t n);

// Exact enumeration over all k^n outcomes; guarded to k^n <= 1e7.
double brute_force_expected_proportion(const CategoricalDist& dist, std::uint64_t n);

/// Probability that n uniform draws on k values are all distinct,
/// prod_{i<n} (1 - i/k).
///
/// This is the falling factorial k!/(k-n)! / k^n. Forms written as
/// C(k, n) / k^n drop the n! factor and are off by that much.
double uniform_all_distinct_exact(std::uint64_t k, std::uint64_t n);

// exp(-n^2 / 2k)
double uniform_all_distinct_approx(std::uint64_t k, std::uint64_t n);

}  // namespace homonym
