#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <unistd.h>

#include <boost/math/distributions/chi_squared.hpp>

#include "homonym/distcore.hpp"
#include "homonym/error.hpp"
#include "homonym/pairs.hpp"
#include "homonym/random.hpp"

namespace homonym::testing {

// Code of the homonym::Error thrown by fn, or nullopt when nothing is thrown.
template <typename Fn>
std::optional<Errc> error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("homonym_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Tally of n draws, indexed by label.
inline std::vector<std::uint64_t> tally(const CategoricalDist& dist, std::size_t n, std::uint64_t seed) {
  std::vector<std::uint64_t> counts(dist.size(), 0);
  Stream stream(seed);
  for (std::size_t i = 0; i < n; ++i) ++counts[dist.draw(stream)];
  return counts;
}

inline std::vector<std::uint64_t> sorted_desc(std::vector<std::uint64_t> counts) {
  std::sort(counts.begin(), counts.end(), std::greater<>());
  return counts;
}

// Two-sample chi-square for equal sample sizes: sum (a-b)^2/(a+b), with
// degrees of freedom = occupied cells - 1.
struct TwoSample {
  double statistic = 0.0;
  double dof = 0.0;
};

inline TwoSample two_sample_chi_square(const std::vector<std::uint64_t>& a,
                                       const std::vector<std::uint64_t>& b) {
  TwoSample t;
  std::size_t cells = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double s = static_cast<double>(a[i] + b[i]);
    if (s == 0) continue;
    const double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
    t.statistic += d * d / s;
    ++cells;
  }
  t.dof = static_cast<double>(cells - 1);
  return t;
}

inline double chi_square_quantile(double dof, double level) {
  return boost::math::quantile(boost::math::chi_squared(dof), level);
}

// c(i, j) = row[i] * col[j].
inline JointDist product_joint(const std::vector<std::uint64_t>& row, const std::vector<std::uint64_t>& col) {
  JointBuilder b;
  for (std::size_t i = 0; i < row.size(); ++i) {
    for (std::size_t j = 0; j < col.size(); ++j) {
      b.add("F" + std::to_string(i), "L" + std::to_string(j), row[i] * col[j]);
    }
  }
  return std::move(b).finish();
}

// 10 x 10 table with mass concentrated on the diagonal.
inline JointDist dependent_joint() {
  JointBuilder b;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      b.add("F" + std::to_string(i), "L" + std::to_string(j), i == j ? 100 : 10);
    }
  }
  return std::move(b).finish();
}

inline std::string pairs_csv(const JointDist& joint) {
  std::string csv = "first,last,birth\n";
  for (const auto& c : joint.cells()) {
    for (std::uint64_t r = 0; r < c.count; ++r) {
      csv += joint.first_labels()[c.first] + "," + joint.last_labels()[c.last] + ",1970-01-01\n";
    }
  }
  return csv;
}

}  // namespace homonym::testing
