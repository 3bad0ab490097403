#include "strrec/experiment.hpp"

#include <bit>
#include <chrono>
#include <exception>
#include <istream>
#include <ostream>
#include <optional>
#include <random>
#include <sstream>

#include "strrec/bounds.hpp"
#include "strrec/measures.hpp"
#include "strrec/oracle.hpp"
#include "strrec/reconstruct.hpp"

namespace strrec {

namespace {

struct FamilyName {
  std::string base;
  std::optional<std::size_t> param;
};

FamilyName parse_family(std::string_view family) {
  FamilyName f;
  const auto open = family.find('(');
  if (open == std::string_view::npos) {
    f.base = std::string(family);
    return f;
  }
  if (family.back() != ')') {
    throw Error("malformed family '" + std::string(family) + "'");
  }
  f.base = std::string(family.substr(0, open));
  const std::string arg(family.substr(open + 1, family.size() - open - 2));
  try {
    std::size_t used = 0;
    f.param = std::stoul(arg, &used);
    if (used != arg.size() || *f.param == 0) throw Error("");
  } catch (const std::exception&) {
    throw Error("bad parameter in family '" + std::string(family) + "'");
  }
  return f;
}

void require_binary(const std::string& family, Symbol sigma) {
  if (sigma < 2) throw Error(family + " needs sigma >= 2");
}

Text random_text(std::mt19937_64& rng, std::size_t n, Symbol sigma) {
  std::uniform_int_distribution<Symbol> pick(1, sigma);
  Text t(n);
  for (Symbol& c : t) c = pick(rng);
  return t;
}

}  // namespace

Text generate(std::string_view family, std::size_t n, Symbol sigma,
              std::uint64_t seed) {
  if (n == 0) throw Error("cannot generate an empty string");
  if (sigma == 0) throw Error("sigma must be at least 1");
  const FamilyName f = parse_family(family);
  std::mt19937_64 rng(seed);

  if (f.base == "random") return random_text(rng, n, sigma);
  if (f.base == "unary") return Text(n, 1);
  if (f.base == "periodic") {
    const std::size_t period = f.param.value_or(7);
    const Text block = random_text(rng, period, sigma);
    Text t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = block[i % period];
    return t;
  }
  if (f.base == "fibonacci") {
    require_binary(f.base, sigma);
    Text prev{1};
    Text cur{1, 2};
    while (cur.size() < n) {
      Text next = cur;
      next.insert(next.end(), prev.begin(), prev.end());
      prev = std::move(cur);
      cur = std::move(next);
    }
    cur.resize(n);
    return cur;
  }
  if (f.base == "thue-morse") {
    require_binary(f.base, sigma);
    Text t(n);
    for (std::size_t i = 0; i < n; ++i) {
      t[i] = 1 + static_cast<Symbol>(std::popcount(i) & 1);
    }
    return t;
  }
  if (f.base == "runs") {
    // Run lengths uniform in [1, 2k-1]; neighbouring runs differ.
    const std::size_t k = f.param.value_or(4);
    std::uniform_int_distribution<std::size_t> length(1, 2 * k - 1);
    std::uniform_int_distribution<Symbol> other(1, sigma > 1 ? sigma - 1 : 1);
    Text t;
    t.reserve(n);
    Symbol c = std::uniform_int_distribution<Symbol>(1, sigma)(rng);
    while (t.size() < n) {
      t.insert(t.end(), std::min(length(rng), n - t.size()), c);
      if (sigma > 1) {
        const Symbol d = other(rng);
        c = d >= c ? d + 1 : d;
      }
    }
    return t;
  }
  if (f.base == "copy-paste") {
    // A short random seed, then r pastes of earlier material.
    const std::size_t pastes = f.param.value_or(8);
    const std::size_t seed_len = std::min<std::size_t>(n, 2 * sigma + 4);
    Text t = random_text(rng, seed_len, sigma);
    t.reserve(n);
    for (std::size_t left = pastes; t.size() < n && left > 0; --left) {
      const std::size_t len = (n - t.size() + left - 1) / left;
      std::uniform_int_distribution<std::size_t> start(0, t.size() - 1);
      const std::size_t from = start(rng);
      // Symbol by symbol, so a source running into the paste repeats.
      for (std::size_t k = 0; k < len; ++k) t.push_back(t[from + k]);
    }
    return t;
  }
  throw Error("unknown family '" + std::string(family) +
              "' (expected random, unary, periodic, fibonacci, thue-morse, "
              "runs, copy-paste)");
}

void emit_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << kCsvHeader << '\n';
  for (const ExperimentRow& r : rows) {
    out << r.algo << ',' << r.family << ',' << r.n << ',' << r.sigma << ','
        << r.rle << ',' << r.z << ',' << r.z_no << ',' << r.phrases << ','
        << r.sub_q << ',' << r.pre_q << ',' << r.sym_total << ',' << r.ms
        << ',' << (r.exact ? 1 : 0) << ',' << (r.bound_ok ? 1 : 0) << '\n';
  }
}

std::vector<ExperimentRow> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw Error("missing or unexpected CSV header");
  }
  std::vector<ExperimentRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 14) throw Error("CSV row with wrong arity: " + line);
    auto num = [&](std::size_t i) -> std::uint64_t {
      return std::stoull(cells[i]);
    };
    ExperimentRow r;
    r.algo = cells[0];
    r.family = cells[1];
    r.n = num(2);
    r.sigma = num(3);
    r.rle = num(4);
    r.z = num(5);
    r.z_no = num(6);
    r.phrases = num(7);
    r.sub_q = num(8);
    r.pre_q = num(9);
    r.sym_total = num(10);
    r.ms = num(11);
    r.exact = num(12) != 0;
    r.bound_ok = num(13) != 0;
    rows.push_back(std::move(r));
  }
  return rows;
}

ExperimentRow run_one(std::string_view algo, std::string_view family,
                      const Text& hidden, Symbol sigma,
                      bool prefix_via_sentinel) {
  const MeasureReport m = measure(hidden);
  ExperimentRow row;
  row.algo = std::string(algo);
  row.family = std::string(family);
  row.n = m.n;
  row.sigma = sigma;
  row.rle = m.rle;
  row.z = m.z;
  row.z_no = m.z_no;

  const auto start = std::chrono::steady_clock::now();
  Oracle oracle(hidden);
  Text recovered;
  QueryStats stats;
  double bound = 0.0;

  if (algo.starts_with("universal-")) {
    const auto compressor = make_compressor(algo.substr(10));
    const CandidateUniverse universe(hidden.size(), *compressor,
                                     kDefaultEnumerationCap, Execution::kSerial);
    const UniversalReport r =
        reconstruct_universal(oracle, universe, Execution::kSerial);
    recovered = r.recovered;
    stats = r.stats;
    row.phrases = r.rounds;
    bound = bounds::universal(compressor->compress(hidden).size());
  } else {
    const auto a = parse_algorithm(algo);
    if (!a) throw Error("unknown algorithm '" + std::string(algo) + "'");
    ReconstructionReport r;
    if (*a == Algorithm::kLzPrefix && prefix_via_sentinel) {
      SentinelPrefixView view = oracle.sentinel_view();
      r = reconstruct(*a, view, sigma);
    } else {
      r = reconstruct(*a, oracle, sigma);
    }
    recovered = std::move(r.recovered);
    stats = r.stats;
    row.phrases = r.units();
    switch (*a) {
      case Algorithm::kNaive:
        bound = bounds::naive(m.n, sigma);
        break;
      case Algorithm::kRle:
        bound = bounds::rle(m.n, m.rle, sigma);
        break;
      case Algorithm::kLzPrefix:
      case Algorithm::kLzSubstring:
        bound = bounds::lz(m.n, sigma, row.phrases);
        break;
    }
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;

  row.sub_q = stats.substring_queries;
  row.pre_q = stats.prefix_queries;
  row.sym_total = stats.total_queried_symbols;
  row.ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
  row.exact = recovered == hidden;
  row.bound_ok = static_cast<double>(stats.total_queries()) <= bound;
  return row;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto comma = s.find(',', pos);
    const auto end = comma == std::string_view::npos ? s.size() : comma;
    std::string item = trim(s.substr(pos, end - pos));
    if (!item.empty()) out.push_back(std::move(item));
    pos = end + 1;
  }
  return out;
}

std::uint64_t to_count(const std::string& s, const std::string& key) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error("bad number '" + s + "' for key " + key);
}

}  // namespace

SweepSpec parse_sweep(std::istream& in) {
  SweepSpec spec;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error("sweep line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "algos") {
      spec.algos = split_list(value);
    } else if (key == "families") {
      spec.families = split_list(value);
    } else if (key == "n") {
      spec.lengths.clear();
      for (const auto& v : split_list(value)) {
        spec.lengths.push_back(to_count(v, key));
      }
    } else if (key == "sigma") {
      spec.sigmas.clear();
      for (const auto& v : split_list(value)) {
        spec.sigmas.push_back(static_cast<Symbol>(to_count(v, key)));
      }
    } else if (key == "reps") {
      spec.reps = to_count(value, key);
    } else if (key == "seed") {
      spec.seed = to_count(value, key);
    } else if (key == "prefix_source") {
      if (value != "direct" && value != "sentinel") {
        throw Error("prefix_source must be direct or sentinel");
      }
      spec.prefix_via_sentinel = value == "sentinel";
    } else {
      throw Error("sweep line " + std::to_string(line_no) + ": unknown key '" +
                  key + "'");
    }
  }
  if (spec.algos.empty() || spec.families.empty() || spec.lengths.empty() ||
      spec.sigmas.empty()) {
    throw Error("sweep needs algos, families, n and sigma");
  }
  for (const auto& a : spec.algos) {
    if (!parse_algorithm(a) && a != "universal-identity" &&
        a != "universal-rle-bits") {
      throw Error("unknown algorithm '" + a + "' in sweep");
    }
  }
  return spec;
}

std::vector<ExperimentRow> run_experiments(const SweepSpec& spec,
                                           Execution exec) {
  struct Job {
    std::string algo;
    std::string family;
    std::size_t n;
    Symbol sigma;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (const auto& family : spec.families) {
    for (std::size_t n : spec.lengths) {
      for (Symbol sigma : spec.sigmas) {
        for (std::size_t rep = 0; rep < spec.reps; ++rep) {
          for (const auto& algo : spec.algos) {
            jobs.push_back({algo, family, n, sigma, spec.seed + rep});
          }
        }
      }
    }
  }

  std::vector<ExperimentRow> rows(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  const auto run = [&](std::size_t i) {
    try {
      const Job& j = jobs[i];
      const Text hidden = generate(j.family, j.n, j.sigma, j.seed);
      rows[i] = run_one(j.algo, j.family, hidden, j.sigma,
                        spec.prefix_via_sentinel);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  const auto count = static_cast<std::int64_t>(jobs.size());
  if (exec == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) run(static_cast<std::size_t>(i));
  } else {
    for (std::int64_t i = 0; i < count; ++i) run(static_cast<std::size_t>(i));
  }

  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    if (!rows[i].exact) {
      const Job& j = jobs[i];
      throw Error("inexact reconstruction: algo=" + j.algo +
                  " family=" + j.family + " n=" + std::to_string(j.n) +
                  " sigma=" + std::to_string(j.sigma) +
                  " seed=" + std::to_string(j.seed));
    }
  }
  return rows;
}

}  // namespace strrec
