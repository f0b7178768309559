#include "pocket/resistance.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <thread>
#include <vector>

namespace pocket {

double resistance_from_one_inverse(const Matrix& x, Vertex u, Vertex v) {
  if (u >= x.rows() || v >= x.rows()) {
    throw std::out_of_range("resistance_from_one_inverse: vertex out of range");
  }
  if (u == v) return 0.0;
  return x(u, u) + x(v, v) - x(u, v) - x(v, u);
}

double ResistanceMatrix::pair_sum() const {
  double s = 0.0;
  for (std::size_t u = 0; u < order(); ++u)
    for (std::size_t v = u + 1; v < order(); ++v) s += values_(u, v);
  return s;
}

MetricCheck ResistanceMatrix::check_metric() const {
  MetricCheck c;
  const std::size_t n = order();
  for (std::size_t u = 0; u < n; ++u) {
    c.max_abs_diagonal = std::max(c.max_abs_diagonal, std::abs(values_(u, u)));
    for (std::size_t v = 0; v < n; ++v) {
      c.max_asymmetry = std::max(c.max_asymmetry, std::abs(values_(u, v) - values_(v, u)));
      c.most_negative = std::min(c.most_negative, values_(u, v));
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u = 0; u < n; ++u) {
      const double ruv = values_(u, v);
      const auto row_u = values_.row(u);
      const auto row_v = values_.row(v);
      for (std::size_t w = 0; w < n; ++w) {
        c.worst_triangle_excess = std::max(c.worst_triangle_excess, row_u[w] - ruv - row_v[w]);
      }
    }
  }
  return c;
}

ResistanceMatrix resistance_matrix(const Matrix& x, unsigned threads) {
  if (!x.square()) throw std::invalid_argument("resistance_matrix: not square");
  const std::size_t n = x.rows();
  Matrix r(n, n);
  auto fill_rows = [&](std::size_t begin, std::size_t end) {
    for (std::size_t u = begin; u < end; ++u)
      for (std::size_t v = 0; v < n; ++v) r(u, v) = resistance_from_one_inverse(x, u, v);
  };
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
  if (workers == 1) {
    fill_rows(0, n);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t begin = 0; begin < n; begin += chunk) {
      pool.emplace_back(fill_rows, begin, std::min(n, begin + chunk));
    }
  }
  return ResistanceMatrix(std::move(r));
}

std::string_view to_string(KirchhoffMethod m) {
  switch (m) {
    case KirchhoffMethod::Oracle: return "oracle";
    case KirchhoffMethod::Structured: return "structured";
    case KirchhoffMethod::Spectral: return "spectral";
    case KirchhoffMethod::Printed: return "printed";
  }
  return "?";
}

KirchhoffResult kirchhoff_from_one_inverse(const Matrix& x, KirchhoffMethod tag) {
  if (!x.square()) throw std::invalid_argument("kirchhoff_from_one_inverse: not square");
  const double n = static_cast<double>(x.rows());
  return {n * x.trace() - x.sum(), tag};
}

KirchhoffResult kirchhoff_spectral(const Spectrum& spectrum, std::size_t n) {
  constexpr double kZeroTol = 1e-9;
  if (spectrum.size() != n) throw std::invalid_argument("kirchhoff_spectral: spectrum size != n");
  double reciprocal_sum = 0.0;
  std::size_t zeros = 0;
  for (double mu : spectrum.eigenvalues) {
    if (std::abs(mu) <= kZeroTol) {
      ++zeros;
      continue;
    }
    reciprocal_sum += 1.0 / mu;
  }
  if (n > 0 && zeros != 1) {
    throw DisconnectedError("kirchhoff_spectral: " + std::to_string(zeros) +
                            " eigenvalues near zero; expected exactly one");
  }
  return {static_cast<double>(n) * reciprocal_sum, KirchhoffMethod::Spectral};
}

OracleResult oracle_resistance(const Graph& g, unsigned threads) {
  if (!is_connected(g)) throw DisconnectedError("oracle_resistance: graph is disconnected");
  OracleResult out;
  out.pseudo_inverse = pseudo_inverse_laplacian(laplacian(g));
  out.resistances = resistance_matrix(out.pseudo_inverse, threads);
  out.kirchhoff = kirchhoff_from_one_inverse(out.pseudo_inverse, KirchhoffMethod::Oracle);
  return out;
}

unsigned worker_count_from_env() {
  const char* raw = std::getenv("POCKET_KIRCH_THREADS");
  if (raw == nullptr || *raw == '\0') return 1;
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(raw, raw + std::strlen(raw), value);
  if (ec != std::errc{} || *ptr != '\0' || value == 0) return 1;
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  return std::min(value, hw);
}

}  // namespace pocket
