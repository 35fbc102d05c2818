#include "chiy/fixed_point_cache.hpp"

#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <system_error>

namespace chiy {

namespace {

constexpr const char* kMagic = "# chiy fixed-point cache v1";

std::string header(const std::string& family, int r, int k, int n, std::size_t count) {
  std::ostringstream out;
  out << kMagic << "\n# family=" << family << " r=" << r << " k=" << k << " n=" << n << "\ncount " << count << "\n";
  return out.str();
}

std::string kvec_string(const LatticeVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.entries.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v.entries[i]);
  }
  return out;
}

LatticeVector parse_kvec(const std::string& text, int r) {
  LatticeVector v;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) v.entries.push_back(std::stoi(item));
  if (v.rank() != r) throw std::invalid_argument("lattice vector has wrong length");
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(' ');
  const auto e = s.find_last_not_of(' ');
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

// Returns the data rows after validating the header, or nullopt.
std::optional<std::vector<std::string>> read_rows(const std::filesystem::path& file, const std::string& expected_header) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto count_pos = expected_header.rfind("count ");
  // Compare the two comment lines; the count line is checked below.
  if (text.compare(0, count_pos, expected_header, 0, count_pos) != 0) return std::nullopt;
  std::istringstream lines(text.substr(count_pos));
  std::string line;
  std::getline(lines, line);
  std::size_t count = 0;
  try {
    count = std::stoul(line.substr(6));
  } catch (const std::exception&) {
    return std::nullopt;
  }
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  if (rows.size() != count) return std::nullopt;
  return rows;
}

}  // namespace

FixedPointCache::FixedPointCache(std::filesystem::path directory) : dir_(std::move(directory)) {}

std::filesystem::path FixedPointCache::file_for(const std::string& family, int r, int k, int n) const {
  return dir_ / (family + "_r" + std::to_string(r) + "_k" + std::to_string(k) + "_n" + std::to_string(n) + ".txt");
}

void FixedPointCache::store(const std::filesystem::path& file, const std::string& text) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  // Write then rename so concurrent readers never see a partial file.
  std::random_device rd;
  const auto tmp = file.string() + ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << text;
    if (!out) return;
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

std::string FixedPointCache::serialize(int r, int n, const std::vector<PartitionTuple>& points) {
  std::string out = header("p2", r, 0, n, points.size());
  for (const auto& t : points) out += to_string(t) + "\n";
  return out;
}

std::string FixedPointCache::serialize(int r, int k, int n, const std::vector<BlowupFixedPoint>& points) {
  std::string out = header("blowup", r, k, n, points.size());
  for (const auto& fp : points)
    out += to_string(fp.y_tuple) + " | " + to_string(fp.z_tuple) + " | " + kvec_string(fp.kvec) + "\n";
  return out;
}

std::vector<PartitionTuple> FixedPointCache::p2_fixed_points(int r, int n) const {
  const auto file = file_for("p2", r, 0, n);
  if (auto rows = read_rows(file, header("p2", r, 0, n, 0))) {
    try {
      std::vector<PartitionTuple> out;
      out.reserve(rows->size());
      for (const auto& row : *rows) {
        auto t = parse_partition_tuple(row, r);
        if (total_size(t) != n) throw std::invalid_argument("wrong size");
        out.push_back(std::move(t));
      }
      return out;
    } catch (const std::exception&) {
      // fall through and rebuild
    }
  }
  auto points = enumerate_tuples(r, n);
  store(file, serialize(r, n, points));
  return points;
}

std::vector<BlowupFixedPoint> FixedPointCache::blowup_fixed_points(int r, int k, int n) const {
  const auto file = file_for("blowup", r, k, n);
  if (auto rows = read_rows(file, header("blowup", r, k, n, 0))) {
    try {
      std::vector<BlowupFixedPoint> out;
      out.reserve(rows->size());
      for (const auto& row : *rows) {
        const auto bar1 = row.find('|');
        const auto bar2 = row.find('|', bar1 + 1);
        if (bar1 == std::string::npos || bar2 == std::string::npos) throw std::invalid_argument("malformed row");
        BlowupFixedPoint fp;
        fp.y_tuple = parse_partition_tuple(trim(row.substr(0, bar1)), r);
        fp.z_tuple = parse_partition_tuple(trim(row.substr(bar1 + 1, bar2 - bar1 - 1)), r);
        fp.kvec = parse_kvec(trim(row.substr(bar2 + 1)), r);
        if (fp.k() != k || fp.instanton_number() != n) throw std::invalid_argument("row violates constraint");
        out.push_back(std::move(fp));
      }
      return out;
    } catch (const std::exception&) {
      // fall through and rebuild
    }
  }
  auto points = enumerate_blowup_fixed_points(r, k, n);
  store(file, serialize(r, k, n, points));
  return points;
}

std::vector<PartitionTuple> p2_fixed_points(int r, int n, const FixedPointCache* cache) {
  return cache ? cache->p2_fixed_points(r, n) : enumerate_tuples(r, n);
}

std::vector<BlowupFixedPoint> blowup_fixed_points(int r, int k, int n, const FixedPointCache* cache) {
  return cache ? cache->blowup_fixed_points(r, k, n) : enumerate_blowup_fixed_points(r, k, n);
}

}  // namespace chiy
