#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "homonym/distcore.hpp"
#include "homonym/source.hpp"

namespace homonym {

struct PairCell {
  std::uint32_t first = 0;
  std::uint32_t last = 0;
  std::uint64_t count = 0;
};

/// Sparse (first, last) contingency counts.
///
/// Label indices and cell order follow first appearance in the input.
class JointDist {
 public:
  const std::vector<std::string>& first_labels() const noexcept { return first_labels_; }
  const std::vector<std::string>& last_labels() const noexcept { return last_labels_; }
  const std::vector<PairCell>& cells() const noexcept { return cells_; }
  const std::vector<std::uint64_t>& first_totals() const noexcept { return first_totals_; }
  const std::vector<std::uint64_t>& last_totals() const noexcept { return last_totals_; }
  std::uint64_t total() const noexcept { return total_; }

  // 0 when the pair was never observed.
  std::uint64_t count(std::uint32_t first, std::uint32_t last) const;

 private:
  friend class JointBuilder;

  std::vector<std::string> first_labels_;
  std::vector<std::string> last_labels_;
  std::vector<PairCell> cells_;
  std::unordered_map<std::uint64_t, std::size_t> cell_index_;
  std::vector<std::uint64_t> first_totals_;
  std::vector<std::uint64_t> last_totals_;
  std::uint64_t total_ = 0;
};

// Streaming aggregation of (first, last) records.
class JointBuilder {
 public:
  void add(std::string_view first, std::string_view last, std::uint64_t count = 1);

  std::uint64_t total() const noexcept { return joint_.total_; }

  // Throws EmptyInput when nothing was added.
  JointDist finish() &&;

 private:
  static std::uint32_t intern(std::string_view label, std::vector<std::string>& labels,
                              std::unordered_map<std::string, std::uint32_t>& index,
                              std::vector<std::uint64_t>& totals);

  JointDist joint_;
  std::unordered_map<std::string, std::uint32_t> first_index_;
  std::unordered_map<std::string, std::uint32_t> last_index_;
};

JointDist from_records(std::span<const std::pair<std::string, std::string>> records);

struct Marginals {
  std::shared_ptr<const CategoricalDist> first;
  std::shared_ptr<const CategoricalDist> last;
};

Marginals marginals(const JointDist& joint);

// Draws (first, last) with probability p_{i.} * p_{.j}.
std::unique_ptr<LabelSource> independent_product_sampler(const JointDist& joint);

// Draws (first, last) with probability count / total.
std::unique_ptr<LabelSource> empirical_pair_sampler(const JointDist& joint);

struct ResidualEntry {
  std::uint32_t first = 0;  // index into JointDist::first_labels
  std::uint32_t last = 0;
  std::uint64_t observed = 0;
  double expected = 0.0;
  double residual = 0.0;
};

struct ResidualTable {
  std::vector<ResidualEntry> entries;  // row-major over the restricted table
  std::vector<std::uint32_t> rows;     // first-name indices, most frequent first
  std::vector<std::uint32_t> cols;     // last-name indices, most frequent first
  double chi_square = 0.0;
  std::size_t dof = 0;
};

/// Pearson residuals on the top_first x top_last restriction to the most
/// frequent labels. Expected counts use the restricted margins. Ties in
/// frequency keep first-appearance order.
ResidualTable pearson_residuals(const JointDist& joint, std::size_t top_first,
                                std::size_t top_last);

}  // namespace homonym
