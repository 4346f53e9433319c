#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>

#include "homonym/distcore.hpp"
#include "homonym/random.hpp"

namespace homonym {

// Anything that yields i.i.d. labels encoded as 64-bit keys. Two draws are
// the same identity iff their keys are equal. The all-ones key is reserved.
class LabelSource {
 public:
  virtual ~LabelSource() = default;

  virtual void fill(std::span<std::uint64_t> out, Stream& stream) const = 0;

  // Short human-readable description, e.g. "zipf(alpha=1,k=10000)".
  virtual std::string describe() const = 0;
};

class CategoricalSource final : public LabelSource {
 public:
  CategoricalSource(std::shared_ptr<const CategoricalDist> dist, std::string description);

  void fill(std::span<std::uint64_t> out, Stream& stream) const override;
  std::string describe() const override { return description_; }

  const CategoricalDist& dist() const noexcept { return *dist_; }

 private:
  std::shared_ptr<const CategoricalDist> dist_;
  std::string description_;
};

// Draws a first and a last label independently and packs them as
// (first << 32) | last. Never materializes the product table.
class ProductSource final : public LabelSource {
 public:
  ProductSource(std::shared_ptr<const CategoricalDist> first,
                std::shared_ptr<const CategoricalDist> last, std::string description);

  void fill(std::span<std::uint64_t> out, Stream& stream) const override;
  std::string describe() const override { return description_; }

 private:
  std::shared_ptr<const CategoricalDist> first_;
  std::shared_ptr<const CategoricalDist> last_;
  std::string description_;
};

constexpr std::uint64_t pack_pair(std::uint32_t first, std::uint32_t last) noexcept {
  return (static_cast<std::uint64_t>(first) << 32) | last;
}
constexpr std::uint32_t pair_first(std::uint64_t key) noexcept {
  return static_cast<std::uint32_t>(key >> 32);
}
constexpr std::uint32_t pair_last(std::uint64_t key) noexcept {
  return static_cast<std::uint32_t>(key);
}

}  // namespace homonym
