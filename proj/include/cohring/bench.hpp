#pragma once

// Timing of univariate multiplication across representations.

#include <cstdint>
#include <string>
#include <vector>

#include "cohring/poly.hpp"

namespace cohring {

enum class Workload { Sparse, Dense };

std::string_view to_string(Workload w) noexcept;
std::string_view to_string(UniRepr r) noexcept;

struct BenchConfig {
  std::vector<std::uint64_t> sizes{100, 1000};  // polynomial degree
  std::size_t terms = 2;                          // terms per operand in the sparse workload
  std::size_t trials = 5;
  std::vector<UniRepr> reprs{UniRepr::Sparse, UniRepr::Dense, UniRepr::Normal};
  std::vector<Workload> workloads{Workload::Sparse, Workload::Dense};
  std::uint64_t seed = 1;
};

inline constexpr std::uint64_t kMaxBenchDegree = 100'000;
inline constexpr std::size_t kMaxBenchTrials = 1000;

struct BenchRow {
  Workload workload;
  std::uint64_t size;
  UniRepr repr;
  double median_seconds;
  std::uint64_t multiplications;  // coefficient products in one run
  std::uint64_t positions;        // output slots in one run
  std::size_t result_terms;
};

struct BenchReport {
  std::vector<BenchRow> rows;
};

/// One warm-up run per case is discarded; every case's products are
/// compared across representations before any timing is taken. Throws
/// ConfigError for invalid settings or a cross-check mismatch.
BenchReport run_bench(const BenchConfig& config);

/// Plain-text table.
std::string render(const BenchReport& report);

}  // namespace cohring
