#include "homonym/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>

#include <json.hpp>

#include "homonym/error.hpp"
#include "homonym/extrapolate.hpp"

namespace homonym {

std::string format_double(double value) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string report_json(const IngestReport& report) {
  nlohmann::ordered_json j;
  j["rows_read"] = report.rows_read;
  j["rows_kept"] = report.rows_kept;
  j["rows_rejected"] = report.rows_rejected;
  j["rejection_reasons"] = report.rejection_reasons;
  return j.dump(2) + "\n";
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::FileUnreadable, path.string());
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  std::array<char, 1 << 16> buf{};
  while (in) {
    in.read(buf.data(), buf.size());
    EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), md.data(), &len);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex.push_back(kHex[md[i] >> 4]);
    hex.push_back(kHex[md[i] & 15]);
  }
  return hex;
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::FileUnreadable, "cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

std::string curve_csv(const CollisionCurve& curve) {
  std::string out = "n,mean,stderr,replicates,logit,probit\n";
  for (const auto& p : curve.points) {
    const double eps =
        1.0 / (2.0 * static_cast<double>(p.n) * static_cast<double>(std::max<std::size_t>(p.replicates, 1)));
    const double u = std::clamp(p.mean, eps, 1.0 - eps);
    out += std::to_string(p.n) + ',' + format_double(p.mean) + ',' + format_double(p.std_error) +
           ',' + std::to_string(p.replicates) + ',' + format_double(logit(u)) + ',' +
           format_double(probit(u)) + '\n';
  }
  return out;
}

std::string curve_long_csv(const CollisionCurve& curve) {
  std::string out = "n,replicate,value\n";
  for (const auto& p : curve.points) {
    for (std::size_t r = 0; r < p.values.size(); ++r) {
      out += std::to_string(p.n) + ',' + std::to_string(r) + ',' + format_double(p.values[r]) + '\n';
    }
  }
  return out;
}

namespace {

template <typename T>
T parse_number(const std::string& text, const std::filesystem::path& path, std::size_t line_no) {
  T value{};
  const char* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || p != end) {
    throw Error(Errc::InvalidArgument,
                path.string() + ":" + std::to_string(line_no) + ": bad number '" + text + "'");
  }
  return value;
}

}  // namespace

CollisionCurve read_curve_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::FileUnreadable, path.string());
  std::string line;
  std::vector<std::string> fields;
  if (!std::getline(in, line)) throw Error(Errc::MissingHeader, path.string() + " is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  split_csv_line(line, fields);

  const std::array<std::string_view, 4> names{"n", "mean", "stderr", "replicates"};
  std::array<std::size_t, 4> col{};
  for (std::size_t i = 0; i < names.size(); ++i) {
    auto it = std::find(fields.begin(), fields.end(), names[i]);
    if (it == fields.end()) {
      throw Error(Errc::MissingHeader, path.string() + " lacks column '" + std::string(names[i]) + "'");
    }
    col[i] = static_cast<std::size_t>(it - fields.begin());
  }
  const std::size_t width = fields.size();

  CollisionCurve curve;
  curve.source = path.filename().string();
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!split_csv_line(line, fields) || fields.size() != width) {
      throw Error(Errc::InvalidArgument, path.string() + ":" + std::to_string(line_no) + ": malformed row");
    }
    CurvePoint p;
    const double n = parse_number<double>(fields[col[0]], path, line_no);
    if (!(n >= 1.0) || n != std::floor(n)) {
      throw Error(Errc::InvalidArgument,
                  path.string() + ":" + std::to_string(line_no) + ": n must be a positive integer");
    }
    p.n = static_cast<std::uint64_t>(n);
    p.mean = parse_number<double>(fields[col[1]], path, line_no);
    p.std_error = parse_number<double>(fields[col[2]], path, line_no);
    p.replicates = parse_number<std::size_t>(fields[col[3]], path, line_no);
    curve.points.push_back(std::move(p));
  }
  return curve;
}

}  // namespace homonym
