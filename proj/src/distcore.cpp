#include "homonym/distcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_set>

#include "homonym/error.hpp"

namespace homonym {

AliasTable::AliasTable(std::span<const double> probs)
    : accept_(probs.size(), 1.0), alias_(probs.size()) {
  const std::size_t k = probs.size();
  std::iota(alias_.begin(), alias_.end(), std::uint32_t{0});
  std::vector<double> scaled(k);
  std::vector<std::uint32_t> small, large;
  small.reserve(k);
  large.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    scaled[i] = probs[i] * static_cast<double>(k);
    (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
  }
  while (!small.empty() && !large.empty()) {
    const std::uint32_t s = small.back();
    small.pop_back();
    const std::uint32_t l = large.back();
    accept_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] = (scaled[l] + scaled[s]) - 1.0;
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  // Whatever remains is 1 up to rounding.
  for (std::uint32_t i : large) accept_[i] = 1.0;
  for (std::uint32_t i : small) accept_[i] = 1.0;
}

InversionSampler::InversionSampler(std::span<const double> probs) : cdf_(probs.size()) {
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cdf_[i] = acc;
  }
  if (!cdf_.empty()) cdf_.back() = std::numeric_limits<double>::infinity();
}

std::uint32_t InversionSampler::draw(Stream& stream) const {
  const double u = stream.next_unit();
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  return static_cast<std::uint32_t>(it - cdf_.begin());
}

CategoricalDist::CategoricalDist(std::vector<std::string> labels, std::vector<double> weights)
    : labels_(std::move(labels)), weights_(std::move(weights)) {
  if (labels_.size() != weights_.size()) {
    throw Error(Errc::LengthMismatch, std::to_string(labels_.size()) + " labels vs " +
                                          std::to_string(weights_.size()) + " weights");
  }
  if (labels_.size() >= std::numeric_limits<std::uint32_t>::max()) {
    throw Error(Errc::TooLarge, "support exceeds 32-bit index range");
  }
  long double total = 0.0L;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const double w = weights_[i];
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(Errc::NegativeWeight, "weight of '" + labels_[i] + "' is " + std::to_string(w));
    }
    total += w;
  }
  if (!(total > 0.0L)) throw Error(Errc::EmptySupport, "all weights are zero");

  std::unordered_set<std::string_view> seen;
  seen.reserve(labels_.size());
  for (const auto& label : labels_) {
    if (!seen.insert(label).second) throw Error(Errc::DuplicateLabel, "'" + label + "'");
  }

  probs_.resize(weights_.size());
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    probs_[i] = static_cast<double>(static_cast<long double>(weights_[i]) / total);
  }
  sampler_ = AliasTable(probs_);
}

CategoricalDist build_dist(std::vector<std::string> labels, std::vector<double> weights) {
  return CategoricalDist(std::move(labels), std::move(weights));
}

std::vector<std::uint32_t> sample_n(const CategoricalDist& dist, std::size_t n, Stream& stream) {
  std::vector<std::uint32_t> out(n);
  for (auto& x : out) x = dist.draw(stream);
  return out;
}

namespace {

std::vector<std::string> rank_labels(std::size_t k) {
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) labels[i] = std::to_string(i + 1);
  return labels;
}

}  // namespace

CategoricalDist zipf_pmf(double alpha, std::size_t k) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw Error(Errc::InvalidAlpha, "alpha = " + std::to_string(alpha));
  }
  if (k == 0) throw Error(Errc::EmptySupport, "k = 0");
  std::vector<double> weights(k);
  for (std::size_t i = 0; i < k; ++i) weights[i] = std::pow(static_cast<double>(i + 1), -alpha);
  return CategoricalDist(rank_labels(k), std::move(weights));
}

CategoricalDist uniform_dist(std::size_t k) {
  if (k == 0) throw Error(Errc::EmptySupport, "k = 0");
  return CategoricalDist(rank_labels(k), std::vector<double>(k, 1.0));
}

double ZipfFit::pmf(std::size_t rank) const {
  if (rank < 1 || rank > k) return 0.0;
  return std::pow(static_cast<double>(rank), -alpha) / normalizer;
}

namespace {

std::span<const std::uint64_t> observed_support(std::span<const std::uint64_t> counts) {
  for (std::size_t i = 1; i < counts.size(); ++i) {
    if (counts[i] > counts[i - 1]) {
      throw Error(Errc::UnsortedInput, "counts must be sorted in descending order (position " +
                                           std::to_string(i) + ")");
    }
  }
  std::size_t k = counts.size();
  while (k > 0 && counts[k - 1] == 0) --k;
  return counts.first(k);
}

struct ScoreTerms {
  double log_normalizer;
  double mean_log_rank;  // E_alpha[log rank]
};

ScoreTerms score_terms(std::span<const double> log_rank, double alpha) {
  // Weights are i^-alpha scaled by 1 (rank 1), so the sum never underflows.
  double z = 0.0;
  double zl = 0.0;
  for (double lr : log_rank) {
    const double w = std::exp(-alpha * lr);
    z += w;
    zl += w * lr;
  }
  return {std::log(z), zl / z};
}

}  // namespace

double zipf_log_likelihood(std::span<const std::uint64_t> counts, double alpha) {
  auto support = observed_support(counts);
  std::vector<double> log_rank(support.size());
  double total = 0.0;
  double weighted = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    log_rank[i] = std::log(static_cast<double>(i + 1));
    total += static_cast<double>(support[i]);
    weighted += static_cast<double>(support[i]) * log_rank[i];
  }
  return -alpha * weighted - total * score_terms(log_rank, alpha).log_normalizer;
}

ZipfFit fit_zipf(std::span<const std::uint64_t> counts) {
  auto support = observed_support(counts);
  if (support.size() < 2 || support.front() == support.back()) {
    throw Error(Errc::DegenerateInput, "need at least two distinct positive counts");
  }
  std::vector<double> log_rank(support.size());
  double total = 0.0;
  double weighted = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    log_rank[i] = std::log(static_cast<double>(i + 1));
    total += static_cast<double>(support[i]);
    weighted += static_cast<double>(support[i]) * log_rank[i];
  }
  const double observed_mean_log = weighted / total;

  // The log-likelihood is concave in alpha; its derivative is
  // total * (E_alpha[log rank] - observed mean log rank), decreasing in alpha.
  auto score = [&](double alpha) {
    return score_terms(log_rank, alpha).mean_log_rank - observed_mean_log;
  };
  constexpr double kLo = 0.01;
  constexpr double kHi = 10.0;
  constexpr double kTol = 1e-6;
  double alpha;
  if (score(kLo) <= 0.0) {
    alpha = kLo;
  } else if (score(kHi) >= 0.0) {
    alpha = kHi;
  } else {
    double lo = kLo, hi = kHi;
    while (hi - lo > kTol) {
      const double mid = 0.5 * (lo + hi);
      (score(mid) > 0.0 ? lo : hi) = mid;
    }
    alpha = 0.5 * (lo + hi);
  }

  ZipfFit fit;
  fit.alpha = alpha;
  fit.k = support.size();
  const double log_z = score_terms(log_rank, alpha).log_normalizer;
  fit.normalizer = std::exp(log_z);
  fit.log_likelihood = -alpha * weighted - total * log_z;
  return fit;
}

LogLogFit fit_zipf_loglog(std::span<const std::uint64_t> counts) {
  auto support = observed_support(counts);
  if (support.size() < 2) throw Error(Errc::DegenerateInput, "need at least two positive counts");
  const double n = static_cast<double>(support.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    sx += std::log(static_cast<double>(i + 1));
    sy += std::log(static_cast<double>(support[i]));
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    const double dx = std::log(static_cast<double>(i + 1)) - mx;
    const double dy = std::log(static_cast<double>(support[i])) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  LogLogFit fit;
  const double slope = sxy / sxx;
  fit.alpha = -slope;
  fit.intercept = my - slope * mx;
  fit.r_squared = syy > 0.0 ? std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0) : 1.0;
  return fit;
}

double top_share(std::span<const std::uint64_t> counts, std::size_t m) {
  if (m == 0) throw Error(Errc::InvalidArgument, "m must be >= 1");
  if (counts.empty()) throw Error(Errc::EmptyInput, "no counts");
  const long double total = std::accumulate(counts.begin(), counts.end(), 0.0L);
  if (total == 0.0L) throw Error(Errc::EmptyInput, "all counts are zero");
  if (m >= counts.size()) return 1.0;
  std::vector<std::uint64_t> sorted(counts.begin(), counts.end());
  std::partial_sort(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(m), sorted.end(),
                    std::greater<>());
  const long double top = std::accumulate(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(m), 0.0L);
  return static_cast<double>(top / total);
}

}  // namespace homonym
