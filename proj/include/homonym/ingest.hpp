#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "homonym/pairs.hpp"

namespace homonym {

struct IngestReport {
  std::uint64_t rows_read = 0;
  std::uint64_t rows_kept = 0;
  std::uint64_t rows_rejected = 0;
  std::map<std::string, std::uint64_t> rejection_reasons;

  void keep() {
    ++rows_read;
    ++rows_kept;
  }
  void reject(std::string_view reason) {
    ++rows_read;
    ++rows_rejected;
    ++rejection_reasons[std::string(reason)];
  }
};

/// Canonical form of a personal name: NFD decomposition with combining marks
/// removed, uppercased, trimmed, and internal whitespace runs collapsed to a
/// single space. Hyphens and apostrophes are kept. May return "".
std::string normalize_name(std::string_view raw);

struct FrequencyTable {
  std::vector<std::string> labels;  // first-appearance order after normalization
  std::vector<std::uint64_t> counts;
  IngestReport report;
};

// CSV with header `label,count`. Labels that coincide after normalization
// are merged. Rejected rows: MalformedRow, EmptyLabel, NonIntegerCount,
// NegativeCount.
FrequencyTable load_frequency_table(const std::filesystem::path& path);

struct PairRecords {
  JointDist joint;
  IngestReport report;
};

// CSV whose header contains `first` and `last`; other columns are ignored.
// Rejected rows: MalformedRow, EmptyField.
PairRecords load_pair_records(const std::filesystem::path& path);

// RFC 4180 field splitting for one physical line (no embedded newlines).
// Returns false on an unterminated quote.
bool split_csv_line(std::string_view line, std::vector<std::string>& fields);

}  // namespace homonym
