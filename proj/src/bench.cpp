#include "cohring/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>

namespace cohring {

std::string_view to_string(Workload w) noexcept { return w == Workload::Sparse ? "sparse" : "dense"; }

std::string_view to_string(UniRepr r) noexcept {
  switch (r) {
    case UniRepr::Sparse: return "sparse";
    case UniRepr::Dense: return "dense";
    case UniRepr::Normal: return "normal";
  }
  return "?";
}

namespace {

UniSparse workload_poly(Workload w, std::uint64_t degree, std::size_t terms, std::mt19937_64& rng) {
  Ring z = Ring::integers();
  std::uniform_int_distribution<std::int64_t> coeff(1, 100);
  std::vector<std::pair<std::uint64_t, RingElem>> t;
  if (w == Workload::Dense) {
    for (std::uint64_t i = 0; i <= degree; ++i) t.emplace_back(i, coeff(rng));
  } else {
    std::set<std::uint64_t> exps{degree};
    std::uniform_int_distribution<std::uint64_t> pick(0, degree);
    while (exps.size() < std::min<std::uint64_t>(terms, degree + 1)) exps.insert(pick(rng));
    for (auto e : exps) t.emplace_back(e, coeff(rng));
  }
  return uni_sparse(z, std::move(t));
}

UniPoly multiply(const UniPoly& a, const UniPoly& b, OpCounter* counter) {
  return std::visit(
      [&](const auto& x) -> UniPoly {
        using T = std::decay_t<decltype(x)>;
        return mul(x, std::get<T>(b), counter);
      },
      a);
}

}  // namespace

BenchReport run_bench(const BenchConfig& config) {
  if (config.trials == 0 || config.trials > kMaxBenchTrials) {
    throw Error(ErrorKind::ConfigError, "trials must be between 1 and " + std::to_string(kMaxBenchTrials));
  }
  if (config.sizes.empty() || config.reprs.empty() || config.workloads.empty()) {
    throw Error(ErrorKind::ConfigError, "nothing to benchmark");
  }
  if (config.terms == 0) throw Error(ErrorKind::ConfigError, "terms must be positive");
  for (auto s : config.sizes) {
    if (s > kMaxBenchDegree) {
      throw Error(ErrorKind::ConfigError, "size " + std::to_string(s) + " exceeds " + std::to_string(kMaxBenchDegree));
    }
  }

  BenchReport report;
  std::mt19937_64 rng(config.seed);
  for (Workload w : config.workloads) {
    for (std::uint64_t size : config.sizes) {
      UniSparse a = workload_poly(w, size, config.terms, rng);
      UniSparse b = workload_poly(w, size, config.terms, rng);

      std::optional<UniSparse> reference;
      for (UniRepr r : config.reprs) {
        UniPoly product = multiply(convert(a, r), convert(b, r), nullptr);
        UniSparse as_sparse = std::get<UniSparse>(convert(product, UniRepr::Sparse));
        if (!reference) {
          reference = as_sparse;
        } else if (!(*reference == as_sparse)) {
          throw Error(ErrorKind::ConfigError, "representations disagree on a " + std::string(to_string(w)) +
                                                  " product of size " + std::to_string(size));
        }
      }

      for (UniRepr r : config.reprs) {
        UniPoly x = convert(a, r);
        UniPoly y = convert(b, r);
        OpCounter counter;
        multiply(x, y, &counter);  // warm-up, discarded
        std::vector<double> times;
        for (std::size_t t = 0; t < config.trials; ++t) {
          auto start = std::chrono::steady_clock::now();
          UniPoly p = multiply(x, y, nullptr);
          auto stop = std::chrono::steady_clock::now();
          times.push_back(std::chrono::duration<double>(stop - start).count());
        }
        std::sort(times.begin(), times.end());
        double median = times.size() % 2 ? times[times.size() / 2]
                                         : (times[times.size() / 2 - 1] + times[times.size() / 2]) / 2;
        report.rows.push_back({w, size, r, median, counter.multiplications, counter.positions, reference->size()});
      }
    }
  }
  return report;
}

std::string render(const BenchReport& report) {
  std::string out = "workload  size      repr    median_ms     mults        positions    terms\n";
  char line[160];
  for (const auto& row : report.rows) {
    std::snprintf(line, sizeof line, "%-9s %-9llu %-7s %-13.4f %-12llu %-12llu %zu\n",
                  std::string(to_string(row.workload)).c_str(), static_cast<unsigned long long>(row.size),
                  std::string(to_string(row.repr)).c_str(), row.median_seconds * 1e3,
                  static_cast<unsigned long long>(row.multiplications),
                  static_cast<unsigned long long>(row.positions), row.result_terms);
    out += line;
  }
  return out;
}

}  // namespace cohring
