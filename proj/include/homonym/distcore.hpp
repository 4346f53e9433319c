#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "homonym/random.hpp"

namespace homonym {

// Walker/Vose alias table: O(k) build, O(1) per draw.
class AliasTable {
 public:
  AliasTable() = default;
  explicit AliasTable(std::span<const double> probs);

  std::uint32_t draw(Stream& stream) const {
    const double u = stream.next_unit() * static_cast<double>(accept_.size());
    auto slot = static_cast<std::uint32_t>(u);
    if (slot >= accept_.size()) slot = static_cast<std::uint32_t>(accept_.size() - 1);
    return (u - slot) < accept_[slot] ? slot : alias_[slot];
  }

  std::size_t size() const noexcept { return accept_.size(); }

 private:
  std::vector<double> accept_;
  std::vector<std::uint32_t> alias_;
};

// Cumulative-inversion sampler, O(log k) per draw. Kept as an independent
// reference for the alias table.
class InversionSampler {
 public:
  explicit InversionSampler(std::span<const double> probs);

  std::uint32_t draw(Stream& stream) const;

 private:
  std::vector<double> cdf_;
};

/// A finite categorical distribution over distinct string labels.
///
/// Immutable after construction; safe to share across threads.
class CategoricalDist {
 public:
  CategoricalDist(std::vector<std::string> labels, std::vector<double> weights);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  const std::vector<double>& probs() const noexcept { return probs_; }

  std::uint32_t draw(Stream& stream) const { return sampler_.draw(stream); }

 private:
  std::vector<std::string> labels_;
  std::vector<double> weights_;
  std::vector<double> probs_;
  AliasTable sampler_;
};

CategoricalDist build_dist(std::vector<std::string> labels, std::vector<double> weights);

// n i.i.d. label indices.
std::vector<std::uint32_t> sample_n(const CategoricalDist& dist, std::size_t n, Stream& stream);

// Labels are the ranks "1".."k". alpha = 0 gives the uniform law.
CategoricalDist zipf_pmf(double alpha, std::size_t k);

CategoricalDist uniform_dist(std::size_t k);

struct ZipfFit {
  double alpha = 0.0;
  std::size_t k = 0;
  double log_likelihood = 0.0;
  double normalizer = 0.0;

  double pmf(std::size_t rank) const;
};

/// Discrete maximum-likelihood Zipf fit over the observed support.
///
/// `counts` must be sorted in descending order; rank i is position i + 1.
/// Trailing zeros are outside the observed support and are ignored. The
/// estimate is the root of the score function on alpha in [0.01, 10],
/// located by bisection to 1e-6; a boundary is returned when the score does
/// not change sign.
ZipfFit fit_zipf(std::span<const std::uint64_t> counts);

// Multinomial log-likelihood sum_i counts[i] * log(i^-alpha / H_k(alpha)).
double zipf_log_likelihood(std::span<const std::uint64_t> counts, double alpha);

struct LogLogFit {
  double alpha = 0.0;  // negated slope of log(count) on log(rank)
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Least squares on the log-log rank-frequency plot. Diagnostic only.
LogLogFit fit_zipf_loglog(std::span<const std::uint64_t> counts);

// Share of the total held by the m largest counts.
double top_share(std::span<const std::uint64_t> counts, std::size_t m);

}  // namespace homonym
