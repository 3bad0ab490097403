#ifndef STRREC_EXPERIMENT_HPP_
#define STRREC_EXPERIMENT_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "strrec/text.hpp"
#include "strrec/universal.hpp"

namespace strrec {

// Families: random, unary, periodic(p), fibonacci, thue-morse, runs(k),
// copy-paste(r). The parameter in parentheses is optional. Output depends
// only on the arguments.
Text generate(std::string_view family, std::size_t n, Symbol sigma,
              std::uint64_t seed);

struct ExperimentRow {
  std::string algo;
  std::string family;
  std::uint64_t n = 0;
  std::uint64_t sigma = 0;
  std::uint64_t rle = 0;
  std::uint64_t z = 0;
  std::uint64_t z_no = 0;
  std::uint64_t phrases = 0;
  std::uint64_t sub_q = 0;
  std::uint64_t pre_q = 0;
  std::uint64_t sym_total = 0;
  std::uint64_t ms = 0;
  bool exact = false;
  bool bound_ok = false;

  friend bool operator==(const ExperimentRow&, const ExperimentRow&) = default;
};

inline constexpr std::string_view kCsvHeader =
    "algo,family,n,sigma,rle,z,z_no,phrases,sub_q,pre_q,sym_total,ms,exact,"
    "bound_ok";

void emit_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);
std::vector<ExperimentRow> parse_csv(std::istream& in);

// Algorithms accepted by run_one: the four reconstructors plus
// universal-identity and universal-rle-bits (binary, short inputs only).
ExperimentRow run_one(std::string_view algo, std::string_view family,
                      const Text& hidden, Symbol sigma,
                      bool prefix_via_sentinel = false);

// Line-oriented key=value sweep description. Keys: algos, families, n,
// sigma (comma-separated lists), reps, seed, prefix_source
// (direct|sentinel). '#' starts a comment.
struct SweepSpec {
  std::vector<std::string> algos;
  std::vector<std::string> families;
  std::vector<std::size_t> lengths;
  std::vector<Symbol> sigmas;
  std::size_t reps = 1;
  std::uint64_t seed = 1;
  bool prefix_via_sentinel = false;
};

SweepSpec parse_sweep(std::istream& in);

// One row per (family, n, sigma, rep, algo) in that nesting order, each
// with a fresh oracle. Runs may execute in parallel; rows come back in
// input order. Throws if any reconstruction is not exact.
std::vector<ExperimentRow> run_experiments(
    const SweepSpec& spec, Execution exec = Execution::kParallel);

}  // namespace strrec

#endif  // STRREC_EXPERIMENT_HPP_
