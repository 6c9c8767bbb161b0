#include "fermat/matrix_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace fermat {

namespace {

const char* graph_kind_name(GraphKind g) {
  return g == GraphKind::complete ? "complete" : "knn";
}

GraphKind graph_kind_from(const std::string& s) {
  if (s == "complete") return GraphKind::complete;
  if (s == "knn") return GraphKind::knn;
  throw std::runtime_error("matrix sidecar: unknown graph_kind '" + s + "'");
}

}  // namespace

void save_matrix(const FermatMatrix& matrix, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  char buf[40];
  for (std::size_t i = 0; i < matrix.n; ++i) {
    for (std::size_t j = 0; j < matrix.n; ++j) {
      if (j) out << ',';
      std::snprintf(buf, sizeof buf, "%.17g", matrix.at(i, j));
      out << buf;
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);

  nlohmann::json meta;
  meta["n"] = matrix.n;
  meta["alpha"] = matrix.alpha;
  if (matrix.intrinsic_dim)
    meta["d"] = *matrix.intrinsic_dim;
  else
    meta["d"] = nullptr;
  meta["scale_factor"] = matrix.scale_factor;
  meta["normalized"] = matrix.normalized;
  meta["graph_kind"] = graph_kind_name(matrix.graph);
  meta["knn_k"] = matrix.knn_k;
  meta["seed"] = matrix.seed;
  meta["root_variant"] = matrix.root_variant;

  std::ofstream side(path + ".json", std::ios::binary);
  if (!side) throw std::runtime_error("cannot write " + path + ".json");
  side << meta.dump(2) << '\n';
}

FermatMatrix load_matrix(const std::string& path) {
  std::ifstream side_in(path + ".json");
  if (!side_in)
    throw std::runtime_error("cannot open matrix sidecar " + path + ".json");
  nlohmann::json meta;
  side_in >> meta;

  FermatMatrix m;
  m.n = meta.at("n").get<std::size_t>();
  m.alpha = meta.at("alpha").get<double>();
  if (!meta.at("d").is_null()) m.intrinsic_dim = meta.at("d").get<int>();
  m.scale_factor = meta.at("scale_factor").get<double>();
  m.normalized = meta.at("normalized").get<bool>();
  m.graph = graph_kind_from(meta.at("graph_kind").get<std::string>());
  m.knn_k = meta.value("knn_k", 0);
  m.seed = meta.value("seed", std::uint64_t{0});
  m.root_variant = meta.value("root_variant", false);

  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  m.values.reserve(m.n * m.n);
  std::string line;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++rows;
    std::size_t start = 0;
    std::size_t cols = 0;
    while (start <= line.size()) {
      std::size_t end = line.find(',', start);
      if (end == std::string::npos) end = line.size();
      double v = 0.0;
      auto [ptr, ec] =
          std::from_chars(line.data() + start, line.data() + end, v);
      if (ec != std::errc() || ptr != line.data() + end)
        throw std::runtime_error(path + ": row " + std::to_string(rows) +
                                 ": bad entry");
      m.values.push_back(v);
      ++cols;
      start = end + 1;
      if (end == line.size()) break;
    }
    if (cols != m.n)
      throw std::runtime_error(path + ": row " + std::to_string(rows) +
                               " has " + std::to_string(cols) +
                               " entries, expected " + std::to_string(m.n));
  }
  if (rows != m.n)
    throw std::runtime_error(path + ": expected " + std::to_string(m.n) +
                             " rows, got " + std::to_string(rows));
  return m;
}

}  // namespace fermat
