#include "homonym/ingest.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/locid.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <unordered_map>

#include "homonym/error.hpp"

namespace homonym {

std::string normalize_name(std::string_view raw) {
  icu::UnicodeString text = icu::UnicodeString::fromUTF8(
      icu::StringPiece(raw.data(), static_cast<std::int32_t>(raw.size())));
  // Uppercasing first: full case mapping can itself emit combining marks.
  text.toUpper(icu::Locale::getRoot());

  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfd = icu::Normalizer2::getNFDInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFD normalizer unavailable");
  icu::UnicodeString decomposed = nfd->normalize(text, status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU normalization failed");

  icu::UnicodeString out;
  bool pending_space = false;
  for (std::int32_t i = 0; i < decomposed.length();) {
    const UChar32 c = decomposed.char32At(i);
    i += U16_LENGTH(c);
    if (U_GET_GC_MASK(c) & U_GC_M_MASK) continue;
    if (u_isUWhiteSpace(c)) {
      pending_space = !out.isEmpty();
      continue;
    }
    if (pending_space) {
      out.append(static_cast<UChar>(u' '));
      pending_space = false;
    }
    out.append(c);
  }
  std::string result;
  out.toUTF8String(result);
  return result;
}

bool split_csv_line(std::string_view line, std::vector<std::string>& fields) {
  fields.clear();
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(ch);
      }
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
      was_quoted = false;
    } else if (ch == '"' && field.empty() && !was_quoted) {
      quoted = was_quoted = true;
    } else {
      field.push_back(ch);
    }
  }
  if (quoted) return false;
  fields.push_back(std::move(field));
  return true;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// Line reader that strips CR and a leading UTF-8 BOM and skips blank lines.
class CsvLines {
 public:
  explicit CsvLines(const std::filesystem::path& path) : in_(path, std::ios::binary) {
    if (!in_) throw Error(Errc::FileUnreadable, path.string());
  }

  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (first_) {
        first_ = false;
        if (line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
      }
      if (!trim(line).empty()) return true;
    }
    if (in_.bad()) throw Error(Errc::FileUnreadable, "read error");
    return false;
  }

 private:
  std::ifstream in_;
  bool first_ = true;
};

struct Header {
  std::vector<std::size_t> positions;
  std::size_t width = 0;
};

Header read_header(CsvLines& lines, const std::filesystem::path& path,
                   std::initializer_list<std::string_view> required) {
  std::string line;
  std::vector<std::string> fields;
  if (!lines.next(line) || !split_csv_line(line, fields)) {
    throw Error(Errc::MissingHeader, path.string() + " has no header line");
  }
  Header header;
  header.width = fields.size();
  for (std::string_view name : required) {
    auto it = std::find_if(fields.begin(), fields.end(),
                           [&](const std::string& f) { return lower_ascii(trim(f)) == name; });
    if (it == fields.end()) {
      throw Error(Errc::MissingHeader, path.string() + " lacks column '" + std::string(name) + "'");
    }
    header.positions.push_back(static_cast<std::size_t>(it - fields.begin()));
  }
  return header;
}

enum class CountParse { Ok, Negative, NonInteger };

CountParse parse_count(std::string_view text, std::uint64_t& value) {
  text = trim(text);
  if (text.empty()) return CountParse::NonInteger;
  const char* end = text.data() + text.size();
  if (auto [p, ec] = std::from_chars(text.data(), end, value); ec == std::errc() && p == end) {
    return CountParse::Ok;
  }
  double d = 0.0;
  if (auto [p, ec] = std::from_chars(text.data(), end, d); ec == std::errc() && p == end && d < 0.0) {
    return CountParse::Negative;
  }
  return CountParse::NonInteger;
}

// Raw spellings repeat heavily in real files; normalize each once.
class NameCache {
 public:
  const std::string& operator()(const std::string& raw) {
    auto it = cache_.find(raw);
    if (it == cache_.end()) it = cache_.emplace(raw, normalize_name(raw)).first;
    return it->second;
  }

 private:
  std::unordered_map<std::string, std::string> cache_;
};

}  // namespace

FrequencyTable load_frequency_table(const std::filesystem::path& path) {
  CsvLines lines(path);
  const Header header = read_header(lines, path, {"label", "count"});
  const std::size_t label_col = header.positions[0];
  const std::size_t count_col = header.positions[1];

  FrequencyTable table;
  std::unordered_map<std::string, std::size_t> index;
  NameCache normalize;
  std::string line;
  std::vector<std::string> fields;
  while (lines.next(line)) {
    if (!split_csv_line(line, fields) || fields.size() != header.width) {
      table.report.reject("MalformedRow");
      continue;
    }
    std::uint64_t count = 0;
    switch (parse_count(fields[count_col], count)) {
      case CountParse::Negative: table.report.reject("NegativeCount"); continue;
      case CountParse::NonInteger: table.report.reject("NonIntegerCount"); continue;
      case CountParse::Ok: break;
    }
    const std::string& label = normalize(fields[label_col]);
    if (label.empty()) {
      table.report.reject("EmptyLabel");
      continue;
    }
    auto [it, inserted] = index.try_emplace(label, table.labels.size());
    if (inserted) {
      table.labels.push_back(label);
      table.counts.push_back(0);
    }
    table.counts[it->second] += count;
    table.report.keep();
  }
  return table;
}

PairRecords load_pair_records(const std::filesystem::path& path) {
  CsvLines lines(path);
  const Header header = read_header(lines, path, {"first", "last"});
  const std::size_t first_col = header.positions[0];
  const std::size_t last_col = header.positions[1];

  JointBuilder builder;
  IngestReport report;
  NameCache normalize;
  std::string line;
  std::vector<std::string> fields;
  while (lines.next(line)) {
    if (!split_csv_line(line, fields) || fields.size() != header.width) {
      report.reject("MalformedRow");
      continue;
    }
    const std::string& first = normalize(fields[first_col]);
    const std::string& last = normalize(fields[last_col]);
    if (first.empty() || last.empty()) {
      report.reject("EmptyField");
      continue;
    }
    builder.add(first, last);
    report.keep();
  }
  if (report.rows_kept == 0) {
    throw Error(Errc::EmptyAfterCleaning,
                path.string() + ": no usable rows out of " + std::to_string(report.rows_read));
  }
  return {std::move(builder).finish(), std::move(report)};
}

}  // namespace homonym
