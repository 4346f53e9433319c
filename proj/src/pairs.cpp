#include "homonym/pairs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "homonym/error.hpp"

namespace homonym {

std::uint64_t JointDist::count(std::uint32_t first, std::uint32_t last) const {
  auto it = cell_index_.find(pack_pair(first, last));
  return it == cell_index_.end() ? 0 : cells_[it->second].count;
}

std::uint32_t JointBuilder::intern(std::string_view label, std::vector<std::string>& labels,
                                   std::unordered_map<std::string, std::uint32_t>& index,
                                   std::vector<std::uint64_t>& totals) {
  auto [it, inserted] = index.try_emplace(std::string(label), 0);
  if (inserted) {
    if (labels.size() >= std::numeric_limits<std::uint32_t>::max()) {
      throw Error(Errc::TooLarge, "too many distinct labels");
    }
    it->second = static_cast<std::uint32_t>(labels.size());
    labels.emplace_back(label);
    totals.push_back(0);
  }
  return it->second;
}

void JointBuilder::add(std::string_view first, std::string_view last, std::uint64_t count) {
  if (count == 0) return;
  const std::uint32_t f = intern(first, joint_.first_labels_, first_index_, joint_.first_totals_);
  const std::uint32_t l = intern(last, joint_.last_labels_, last_index_, joint_.last_totals_);
  auto [it, inserted] = joint_.cell_index_.try_emplace(pack_pair(f, l), joint_.cells_.size());
  if (inserted) joint_.cells_.push_back({f, l, 0});
  joint_.cells_[it->second].count += count;
  joint_.first_totals_[f] += count;
  joint_.last_totals_[l] += count;
  joint_.total_ += count;
}

JointDist JointBuilder::finish() && {
  if (joint_.total_ == 0) throw Error(Errc::EmptyInput, "no records");
  first_index_.clear();
  last_index_.clear();
  return std::move(joint_);
}

JointDist from_records(std::span<const std::pair<std::string, std::string>> records) {
  JointBuilder builder;
  for (const auto& [first, last] : records) builder.add(first, last);
  return std::move(builder).finish();
}

namespace {

std::vector<double> as_weights(const std::vector<std::uint64_t>& counts) {
  return {counts.begin(), counts.end()};
}

class PairCellSource final : public LabelSource {
 public:
  explicit PairCellSource(const JointDist& joint) {
    keys_.reserve(joint.cells().size());
    std::vector<double> probs;
    probs.reserve(joint.cells().size());
    const double total = static_cast<double>(joint.total());
    for (const auto& cell : joint.cells()) {
      keys_.push_back(pack_pair(cell.first, cell.last));
      probs.push_back(static_cast<double>(cell.count) / total);
    }
    table_ = AliasTable(probs);
    description_ = "pairs(cells=" + std::to_string(keys_.size()) +
                   ",total=" + std::to_string(joint.total()) + ")";
  }

  void fill(std::span<std::uint64_t> out, Stream& stream) const override {
    for (auto& key : out) key = keys_[table_.draw(stream)];
  }

  std::string describe() const override { return description_; }

 private:
  std::vector<std::uint64_t> keys_;
  AliasTable table_;
  std::string description_;
};

}  // namespace

Marginals marginals(const JointDist& joint) {
  return {
      std::make_shared<const CategoricalDist>(joint.first_labels(), as_weights(joint.first_totals())),
      std::make_shared<const CategoricalDist>(joint.last_labels(), as_weights(joint.last_totals())),
  };
}

std::unique_ptr<LabelSource> independent_product_sampler(const JointDist& joint) {
  auto m = marginals(joint);
  std::string description = "independent(firsts=" + std::to_string(m.first->size()) +
                            ",lasts=" + std::to_string(m.last->size()) + ")";
  return std::make_unique<ProductSource>(std::move(m.first), std::move(m.last),
                                         std::move(description));
}

std::unique_ptr<LabelSource> empirical_pair_sampler(const JointDist& joint) {
  return std::make_unique<PairCellSource>(joint);
}

namespace {

std::vector<std::uint32_t> top_indices(const std::vector<std::uint64_t>& totals, std::size_t m) {
  std::vector<std::uint32_t> order(totals.size());
  std::iota(order.begin(), order.end(), std::uint32_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return totals[a] > totals[b]; });
  order.resize(m);
  return order;
}

}  // namespace

ResidualTable pearson_residuals(const JointDist& joint, std::size_t top_first,
                                std::size_t top_last) {
  const std::size_t k1 = joint.first_labels().size();
  const std::size_t k2 = joint.last_labels().size();
  if (top_first == 0 || top_last == 0 || top_first > k1 || top_last > k2) {
    throw Error(Errc::InvalidArgument, "restriction " + std::to_string(top_first) + "x" +
                                           std::to_string(top_last) + " outside support " +
                                           std::to_string(k1) + "x" + std::to_string(k2));
  }
  ResidualTable table;
  table.rows = top_indices(joint.first_totals(), top_first);
  table.cols = top_indices(joint.last_totals(), top_last);

  const std::size_t r = table.rows.size(), c = table.cols.size();
  std::vector<std::uint64_t> observed(r * c);
  std::vector<double> row_total(r, 0.0), col_total(c, 0.0);
  double grand = 0.0;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      const std::uint64_t o = joint.count(table.rows[i], table.cols[j]);
      observed[i * c + j] = o;
      row_total[i] += static_cast<double>(o);
      col_total[j] += static_cast<double>(o);
      grand += static_cast<double>(o);
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (row_total[i] == 0.0) {
      throw Error(Errc::DegenerateTable,
                  "row '" + joint.first_labels()[table.rows[i]] + "' is empty in the restriction");
    }
  }
  for (std::size_t j = 0; j < c; ++j) {
    if (col_total[j] == 0.0) {
      throw Error(Errc::DegenerateTable,
                  "column '" + joint.last_labels()[table.cols[j]] + "' is empty in the restriction");
    }
  }

  table.entries.reserve(r * c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      ResidualEntry e;
      e.first = table.rows[i];
      e.last = table.cols[j];
      e.observed = observed[i * c + j];
      e.expected = row_total[i] * col_total[j] / grand;
      const double diff = static_cast<double>(e.observed) - e.expected;
      e.residual = diff / std::sqrt(e.expected);
      table.chi_square += diff * diff / e.expected;
      table.entries.push_back(e);
    }
  }
  table.dof = (r - 1) * (c - 1);
  return table;
}

}  // namespace homonym
