#include "zeit/io.hpp"

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace zeit::io {

namespace {

using nlohmann::json;

json parse_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open " + file.string());
  json j;
  in >> j;
  return j;
}

void write_file(const json& j, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + file.string());
  out << j.dump() << '\n';
}

json complex_pair(const Complex& v) { return json::array({v.real(), v.imag()}); }

Complex pair_complex(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

int get_order(const json& j) {
  const int M = j.at("M").get<int>();
  if (M < 1) throw std::invalid_argument("M must be >= 1");
  return M;
}

}  // namespace

FileKind peek_kind(const std::filesystem::path& file) {
  const json j = parse_file(file);
  if (!j.is_object()) return FileKind::unknown;
  if (j.contains("p") && j.contains("coeffs")) return FileKind::solution;
  if (j.contains("coeffs")) return FileKind::coefficients;
  if (j.contains("rows")) return FileKind::data_matrix;
  if (j.contains("diagonals")) return FileKind::diagonal_data;
  if (j.contains("samples")) return FileKind::boundary_samples;
  return FileKind::unknown;
}

namespace {

json coeffs_to_json(const ZernikeCoefficients& coeffs) {
  const int M = coeffs.order();
  json list = json::array();
  for (int j = -(M - 1); j <= M - 1; ++j)
    for (int k = 0; k < coeffs.size(j); ++k) {
      const Complex v = coeffs.at(j, k);
      list.push_back({{"j", j}, {"k", k}, {"re", v.real()}, {"im", v.imag()}});
    }
  return {{"M", M}, {"coeffs", std::move(list)}};
}

ZernikeCoefficients coeffs_from_json(const json& j) {
  const int M = get_order(j);
  ZernikeCoefficients coeffs(M);
  const auto& list = j.at("coeffs");
  if (static_cast<int>(list.size()) != M * M)
    throw std::invalid_argument("coefficient file must list exactly M^2 entries");
  std::vector<bool> seen(static_cast<std::size_t>(M) * M, false);
  for (const auto& e : list) {
    const int jj = e.at("j").get<int>();
    const int kk = e.at("k").get<int>();
    coeffs.at(jj, kk) = {e.at("re").get<double>(), e.at("im").get<double>()};
    // flat position for duplicate detection
    int off = 0;
    for (int b = -(M - 1); b < jj; ++b) off += M - std::abs(b);
    if (seen[off + kk]) throw std::invalid_argument("duplicate coefficient entry");
    seen[off + kk] = true;
  }
  return coeffs;
}

}  // namespace

void save(const ZernikeCoefficients& coeffs, const std::filesystem::path& file) {
  write_file(coeffs_to_json(coeffs), file);
}

ZernikeCoefficients load_coefficients(const std::filesystem::path& file) {
  return coeffs_from_json(parse_file(file));
}

void save(const DataMatrix& data, const std::filesystem::path& file) {
  json rows = json::array();
  for (int r = 0; r < 2 * data.M; ++r) {
    json row = json::array();
    for (int c = 0; c < 2 * data.M; ++c)
      row.push_back(complex_pair(data.entries[static_cast<std::size_t>(r) * 2 * data.M + c]));
    rows.push_back(std::move(row));
  }
  write_file(json{{"M", data.M}, {"rows", std::move(rows)}}, file);
}

DataMatrix load_data_matrix(const std::filesystem::path& file) {
  const json j = parse_file(file);
  const int M = get_order(j);
  const auto& rows = j.at("rows");
  if (static_cast<int>(rows.size()) != 2 * M)
    throw std::invalid_argument("data matrix must have 2M rows");
  DataMatrix data(M);
  for (int r = 0; r < 2 * M; ++r) {
    const auto& row = rows[r];
    if (static_cast<int>(row.size()) != 2 * M)
      throw std::invalid_argument("data matrix rows must have 2M entries");
    for (int c = 0; c < 2 * M; ++c)
      data.entries[static_cast<std::size_t>(r) * 2 * M + c] = pair_complex(row[c]);
  }
  return data;
}

void save(const DiagonalData& diag, const std::filesystem::path& file) {
  const int M = diag.order();
  json table = json::object();
  for (int j = -(M - 1); j <= M - 1; ++j) {
    json vec = json::array();
    for (const Complex& v : diag.angular(j)) vec.push_back(complex_pair(v));
    table[std::to_string(j)] = std::move(vec);
  }
  write_file(json{{"M", M}, {"diagonals", std::move(table)}}, file);
}

DiagonalData load_diagonal_data(const std::filesystem::path& file) {
  const json j = parse_file(file);
  const int M = get_order(j);
  DiagonalData diag(M);
  const auto& table = j.at("diagonals");
  if (static_cast<int>(table.size()) != 2 * M - 1)
    throw std::invalid_argument("diagonal data must carry 2M-1 vectors");
  for (int jj = -(M - 1); jj <= M - 1; ++jj) {
    const auto& vec = table.at(std::to_string(jj));
    auto dst = diag.angular(jj);
    if (vec.size() != dst.size())
      throw std::invalid_argument("diagonal vector length mismatch for j=" + std::to_string(jj));
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = pair_complex(vec[i]);
  }
  return diag;
}

void save(const BoundarySamples& samples, const std::filesystem::path& file) {
  json table = json::object();
  for (int m = -samples.M; m <= samples.M; ++m) {
    if (m == 0) continue;
    json vec = json::array();
    for (const Complex& v : samples.row(m)) vec.push_back(complex_pair(v));
    table[std::to_string(m)] = std::move(vec);
  }
  write_file(json{{"M", samples.M}, {"N", samples.N}, {"samples", std::move(table)}}, file);
}

BoundarySamples load_boundary_samples(const std::filesystem::path& file) {
  const json j = parse_file(file);
  const int M = get_order(j);
  const int N = j.at("N").get<int>();
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  BoundarySamples samples(M, N);
  const auto& table = j.at("samples");
  if (static_cast<int>(table.size()) != 2 * M)
    throw std::invalid_argument("boundary samples must carry 2M rows");
  for (int m = -M; m <= M; ++m) {
    if (m == 0) continue;
    const auto& vec = table.at(std::to_string(m));
    auto dst = samples.row(m);
    if (vec.size() != dst.size())
      throw std::invalid_argument("sample row length mismatch for m=" + std::to_string(m));
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = pair_complex(vec[i]);
  }
  return samples;
}

void save(const RegularizedSolution& sol, const std::filesystem::path& file) {
  json j = coeffs_to_json(sol.coeffs);
  j["p"] = sol.p;
  j["residual"] = sol.residual;
  j["method"] = to_string(sol.method);
  j["attained"] = sol.attained;
  write_file(j, file);
}

RegularizedSolution load_solution(const std::filesystem::path& file) {
  const json j = parse_file(file);
  RegularizedSolution sol;
  sol.coeffs = coeffs_from_json(j);
  sol.p = j.at("p").get<int>();
  sol.residual = j.at("residual").get<double>();
  sol.method = method_from_string(j.at("method").get<std::string>());
  sol.attained = j.at("attained").get<bool>();
  return sol;
}

void save_noise_meta(double delta, double sigma, std::uint64_t seed,
                     const std::filesystem::path& file) {
  write_file(json{{"delta", delta}, {"sigma", sigma}, {"seed", seed}}, file);
}

double load_delta(const std::filesystem::path& file) {
  return parse_file(file).at("delta").get<double>();
}

void write_csv(const RasterGrid& grid, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + file.string());
  char buf[48];
  for (int r = 0; r < grid.resolution; ++r) {
    for (int c = 0; c < grid.resolution; ++c) {
      if (c) out << ',';
      if (grid.absent(r, c)) {
        out << "nan";
      } else {
        std::snprintf(buf, sizeof buf, "%.17g", grid.at(r, c));
        out << buf;
      }
    }
    out << '\n';
  }
}

void write_pgm(const RasterGrid& grid, RasterPart part, const std::filesystem::path& pgm_file,
               const std::filesystem::path& sidecar_file) {
  const auto [lo, hi] = grid.finite_range();
  std::ofstream out(pgm_file, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + pgm_file.string());
  out << "P5\n" << grid.resolution << ' ' << grid.resolution << "\n255\n";
  for (int r = 0; r < grid.resolution; ++r)
    for (int c = 0; c < grid.resolution; ++c) {
      unsigned char byte = 0;  // absent
      if (!grid.absent(r, c)) {
        const double v = grid.at(r, c);
        byte = hi > lo
                   ? static_cast<unsigned char>(1 + std::lround(254.0 * (v - lo) / (hi - lo)))
                   : static_cast<unsigned char>(255);
      }
      out.put(static_cast<char>(byte));
    }
  write_file(json{{"resolution", grid.resolution},
                  {"part", to_string(part)},
                  {"min", lo},
                  {"max", hi},
                  {"absent_byte", 0}},
             sidecar_file);
}

}  // namespace zeit::io
