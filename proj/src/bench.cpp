#include "switchopt/bench.hpp"

#include "switchopt/generate.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

namespace switchopt {

namespace {

std::size_t parse_size(std::string_view s, std::string_view what) {
  std::size_t pos = 0;
  std::string str(s);
  unsigned long long v = 0;
  try {
    if (str.empty() || str[0] == '-')
      throw std::invalid_argument("negative");
    v = std::stoull(str, &pos);
  } catch (const std::exception&) {
    throw InvalidArgument("grid: bad " + std::string(what) + " '" + str + "'");
  }
  if (pos != str.size())
    throw InvalidArgument("grid: bad " + std::string(what) + " '" + str + "'");
  return static_cast<std::size_t>(v);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

GridCell parse_cell(std::string_view item) {
  GridCell cell;
  auto at = item.find('@');
  if (at != std::string_view::npos) {
    cell.seed_base = parse_size(trim(item.substr(at + 1)), "seed");
    item = item.substr(0, at);
  }
  auto x = item.find('x');
  if (x != std::string_view::npos) {
    cell.reps = parse_size(trim(item.substr(x + 1)), "repetition count");
    item = item.substr(0, x);
  }
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto comma = item.find(',', start);
    parts.push_back(trim(item.substr(start, comma - start)));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  if (parts.size() != 3)
    throw InvalidArgument("grid: expected n,m,K in '" + std::string(item) + "'");
  cell.n = parse_size(parts[0], "n");
  cell.m = parse_size(parts[1], "m");
  cell.K = parse_size(parts[2], "K");
  if (cell.n == 0 || cell.m == 0)
    throw InvalidArgument("grid: n and m must be positive");
  return cell;
}

}  // namespace

std::vector<GridCell> parse_grid(std::string_view text) {
  text = trim(text);
  std::vector<GridCell> grid;
  if (text.empty())
    return grid;
  if (text.front() == '[') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::exception& e) {
      throw InvalidArgument(std::string("grid: ") + e.what());
    }
    for (const auto& item : doc) {
      GridCell cell;
      try {
        cell.n = item.at("n").get<std::size_t>();
        cell.m = item.at("m").get<std::size_t>();
        cell.K = item.at("K").get<std::size_t>();
        cell.reps = item.value("reps", std::size_t{1});
        cell.seed_base = item.value("seed", std::uint64_t{1});
      } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("grid: ") + e.what());
      }
      if (cell.n == 0 || cell.m == 0)
        throw InvalidArgument("grid: n and m must be positive");
      grid.push_back(cell);
    }
    return grid;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    auto semi = text.find(';', start);
    auto item = trim(text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start));
    if (!item.empty())
      grid.push_back(parse_cell(item));
    if (semi == std::string_view::npos)
      break;
    start = semi + 1;
  }
  return grid;
}

std::string_view to_string(BenchStatus status) {
  switch (status) {
  case BenchStatus::solved: return "solved";
  case BenchStatus::timeout: return "timeout";
  case BenchStatus::error: return "error";
  }
  return "unknown";
}

namespace {

template <Scalar T>
void run_one(const Instance<T>& inst, const BenchOptions& options, BenchEntry& e) {
  SolverOptions opt;
  opt.engine = options.engine;
  opt.rescale = options.rescale && !is_exact_v<T>;
  opt.hull.parallel = options.parallel;
  auto start = std::chrono::steady_clock::now();
  opt.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                             std::chrono::duration<double>(options.time_limit_seconds));
  try {
    SolveResult<T> r = solve(inst, opt);
    e.status = BenchStatus::solved;
    e.max_nk = *std::max_element(r.nk_trace.begin(), r.nk_trace.end());
    e.final_nk = r.nk_trace.back();
    e.value = to_string(r.value);
    e.log10_value = r.log10_value;
    e.engine = std::string(to_string(r.engine));
  } catch (const Timeout& ex) {
    e.status = BenchStatus::timeout;
    e.message = ex.what();
  } catch (const Error& ex) {
    e.status = BenchStatus::error;
    e.message = ex.what();
  }
  e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (e.status == BenchStatus::solved && e.seconds > options.time_limit_seconds) {
    e.status = BenchStatus::timeout;
    e.message = "finished after the time limit";
  }
  e.backend = std::string(is_exact_v<T> ? "exact" : "float64") + (options.parallel ? "+openmp" : "+serial");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s)
    out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

BenchReport run_bench(const std::vector<GridCell>& grid, const BenchOptions& options) {
  BenchReport report;
  for (const auto& cell : grid)
    for (std::size_t r = 0; r < cell.reps; ++r) {
      BenchEntry e;
      e.n = cell.n;
      e.m = cell.m;
      e.K = cell.K;
      e.seed = cell.seed_base + r;
      char id[96];
      std::snprintf(id, sizeof id, "n%zu-m%zu-K%04zu-s%llu", cell.n, cell.m, cell.K,
                    static_cast<unsigned long long>(e.seed));
      e.id = id;
      GenSpec spec = options.integer ? GenSpec::integer_mode(cell.n, cell.m, cell.K, e.seed)
                                     : GenSpec::float_mode(cell.n, cell.m, cell.K, e.seed);
      AnyInstance inst = gen_random(spec);
      std::visit([&](const auto& i) { run_one(i, options, e); }, inst);
      report.entries.push_back(std::move(e));
    }
  std::stable_sort(report.entries.begin(), report.entries.end(),
                   [](const BenchEntry& a, const BenchEntry& b) { return a.id < b.id; });
  return report;
}

std::string BenchReport::to_csv() const {
  std::ostringstream out;
  out << "id,n,m,K,seed,status,seconds,max_nk,final_nk,value,log10_value,engine,backend,message\n";
  for (const auto& e : entries) {
    char secs[32], lv[32];
    std::snprintf(secs, sizeof secs, "%.6f", e.seconds);
    std::snprintf(lv, sizeof lv, "%.6f", e.log10_value);
    out << e.id << ',' << e.n << ',' << e.m << ',' << e.K << ',' << e.seed << ',' << to_string(e.status) << ','
        << secs << ',' << e.max_nk << ',' << e.final_nk << ',' << csv_field(e.value) << ',' << lv << ','
        << e.engine << ',' << e.backend << ',' << csv_field(e.message) << '\n';
  }
  return out.str();
}

std::string BenchReport::summary() const {
  struct Acc {
    std::size_t total = 0, solved = 0;
    double seconds = 0;
  };
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Acc> cells;
  for (const auto& e : entries) {
    auto& a = cells[{e.n, e.m, e.K}];
    ++a.total;
    if (e.status == BenchStatus::solved) {
      ++a.solved;
      a.seconds += e.seconds;
    }
  }
  std::ostringstream out;
  for (const auto& [key, a] : cells) {
    char line[160];
    std::snprintf(line, sizeof line, "(%zu,%zu,%zu)  solved %zu/%zu  mean %.3f s\n", std::get<0>(key),
                  std::get<1>(key), std::get<2>(key), a.solved, a.total,
                  a.solved ? a.seconds / static_cast<double>(a.solved) : 0.0);
    out << line;
  }
  return out.str();
}

}  // namespace switchopt
