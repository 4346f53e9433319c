#include "homonym/source.hpp"

#include <utility>

namespace homonym {

CategoricalSource::CategoricalSource(std::shared_ptr<const CategoricalDist> dist,
                                     std::string description)
    : dist_(std::move(dist)), description_(std::move(description)) {}

void CategoricalSource::fill(std::span<std::uint64_t> out, Stream& stream) const {
  for (auto& key : out) key = dist_->draw(stream);
}

ProductSource::ProductSource(std::shared_ptr<const CategoricalDist> first,
                             std::shared_ptr<const CategoricalDist> last, std::string description)
    : first_(std::move(first)), last_(std::move(last)), description_(std::move(description)) {}

void ProductSource::fill(std::span<std::uint64_t> out, Stream& stream) const {
  for (auto& key : out) {
    const std::uint32_t f = first_->draw(stream);
    key = pack_pair(f, last_->draw(stream));
  }
}

}  // namespace homonym
