#pragma once

#include "switchopt/solver.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace switchopt {

struct GridCell {
  std::size_t n = 2;
  std::size_t m = 2;
  std::size_t K = 20;
  std::size_t reps = 1;
  std::uint64_t seed_base = 1;
};

/// "n,m,Kxreps[@seed];..." (for example "2,2,500x10;5,5,100x3@7"), or a JSON
/// array of {"n","m","K","reps","seed"} objects. Empty text is an empty grid.
std::vector<GridCell> parse_grid(std::string_view text);

struct BenchOptions {
  double time_limit_seconds = 600;
  /// Float instances are rescaled per layer; the generated objective is l2sq.
  bool rescale = true;
  bool integer = false;  // exact integer instances instead of U[-1,1]
  Engine engine = Engine::automatic;
  bool parallel = true;
};

enum class BenchStatus { solved, timeout, error };

std::string_view to_string(BenchStatus status);

struct BenchEntry {
  std::string id;
  std::size_t n = 0, m = 0, K = 0;
  std::uint64_t seed = 0;
  BenchStatus status = BenchStatus::solved;
  double seconds = 0;
  std::size_t max_nk = 0;
  std::size_t final_nk = 0;
  std::string value;
  double log10_value = 0;
  std::string engine;
  std::string backend;
  std::string message;
};

struct BenchReport {
  std::vector<BenchEntry> entries;  // sorted by id

  std::string to_csv() const;
  /// One line per grid cell: solved count and mean time.
  std::string summary() const;
};

/// Instance i of a cell uses seed seed_base + i. Timeouts and failures are
/// recorded in the entry, never thrown.
BenchReport run_bench(const std::vector<GridCell>& grid, const BenchOptions& options = {});

}  // namespace switchopt
