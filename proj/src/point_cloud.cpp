#include "fermat/point_cloud.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fermat {

double euclidean(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double cloud_diameter(const PointCloud& cloud) {
  const std::size_t n = cloud.size();
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = euclidean(cloud.point(i), cloud.point(j));
      if (d > best) best = d;
    }
  return best;
}

std::size_t nearest_index(const PointCloud& cloud, std::span<const double> x) {
  const std::size_t n = cloud.size();
  if (n == 0) throw std::invalid_argument("nearest_index: empty cloud");
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double d = euclidean(cloud.point(i), x);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& tok, std::size_t line_no,
                    const std::string& path) {
  double value = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw std::runtime_error(path + ": line " + std::to_string(line_no) +
                             ": not a number: '" + tok + "'");
  }
  return value;
}

int parse_label(const std::string& tok, std::size_t line_no,
                const std::string& path) {
  int value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw std::runtime_error(path + ": line " + std::to_string(line_no) +
                             ": not an integer label: '" + tok + "'");
  }
  return value;
}

}  // namespace

PointCloud load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);

  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error(path + ": no points (empty file)");

  const auto header = split_csv_line(line);
  const bool has_labels = !header.empty() && header.back() == "label";
  const int dim =
      static_cast<int>(header.size()) - (has_labels ? 1 : 0);
  if (dim < 1)
    throw std::runtime_error(path + ": header defines no coordinate columns");

  PointCloud cloud;
  cloud.dim = dim;
  std::size_t line_no = 1;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    const std::size_t expected = header.size();
    if (fields.size() != expected) {
      throw std::runtime_error(
          path + ": line " + std::to_string(line_no) + ": expected " +
          std::to_string(expected) + " fields, got " +
          std::to_string(fields.size()));
    }
    for (int k = 0; k < dim; ++k)
      cloud.coords.push_back(parse_double(fields[k], line_no, path));
    if (has_labels)
      cloud.labels.push_back(parse_label(fields.back(), line_no, path));
    ++rows;
  }
  if (rows == 0) throw std::runtime_error(path + ": no points");
  return cloud;
}

void save_csv(const PointCloud& cloud, const std::string& path) {
  const std::size_t n = cloud.size();
  if (cloud.has_labels() && cloud.labels.size() != n)
    throw std::invalid_argument("save_csv: labels length mismatch");

  std::ofstream out(path, std::ios::binary);  // binary: keep LF endings
  if (!out) throw std::runtime_error("cannot write " + path);

  for (int k = 0; k < cloud.dim; ++k) {
    if (k) out << ',';
    out << 'x' << (k + 1);
  }
  if (cloud.has_labels()) out << ",label";
  out << '\n';

  char buf[40];
  for (std::size_t i = 0; i < n; ++i) {
    const auto p = cloud.point(i);
    for (int k = 0; k < cloud.dim; ++k) {
      if (k) out << ',';
      std::snprintf(buf, sizeof buf, "%.17g", p[k]);
      out << buf;
    }
    if (cloud.has_labels()) out << ',' << cloud.labels[i];
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace fermat
