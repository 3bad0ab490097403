// strrec: reconstruct hidden strings from substring and prefix queries.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "strrec/bounds.hpp"
#include "strrec/experiment.hpp"
#include "strrec/measures.hpp"
#include "strrec/oracle.hpp"
#include "strrec/reconstruct.hpp"
#include "strrec/suffix_tree.hpp"
#include "strrec/universal.hpp"

namespace {

using namespace strrec;

struct InputOptions {
  std::string file;
  std::string letters;
  std::string family;
  std::size_t n = 0;
  Symbol sigma = 0;
  std::uint64_t seed = 1;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("file", in.file, "Raw byte file, remapped to 1..sigma");
  cmd->add_option("--text", in.letters, "Letters a-z/A-Z, a=1");
  cmd->add_option("--family", in.family,
                  "Generated family: random, unary, periodic(p), fibonacci, "
                  "thue-morse, runs(k), copy-paste(r)");
  cmd->add_option("--n", in.n, "Generated length");
  cmd->add_option("--seed", in.seed, "Generator seed");
}

Text load_input(const InputOptions& in) {
  const int given = !in.file.empty() + !in.letters.empty() + !in.family.empty();
  if (given != 1) {
    throw Error("give exactly one of a file, --text or --family");
  }
  if (!in.letters.empty()) return from_letters(in.letters);
  if (!in.family.empty()) {
    if (in.n == 0 || in.sigma == 0) throw Error("--family needs --n and --sigma");
    return generate(in.family, in.n, in.sigma, in.seed);
  }
  std::ifstream f(in.file, std::ios::binary);
  if (!f) throw Error("cannot open " + in.file);
  const std::string bytes((std::istreambuf_iterator<char>(f)),
                          std::istreambuf_iterator<char>());
  return from_bytes_dense(bytes);
}

std::string family_tag(const InputOptions& in) {
  if (!in.family.empty()) return in.family;
  return in.file.empty() ? "text" : "file";
}

int cmd_measure(const InputOptions& in) {
  const Text s = load_input(in);
  const MeasureReport m = measure(s);
  std::cout << "n=" << m.n << "\nsigma=" << m.sigma << "\nrle=" << m.rle
            << "\nz=" << m.z << "\nz_no=" << m.z_no
            << "\ngrammar_upper_reference=" << m.grammar_upper_reference()
            << "\nlower_reference_worst_case="
            << bounds::worst_case_lower(m.n, m.sigma)
            << "\nlower_reference_lz="
            << bounds::lz_lower_shape(m.n, m.sigma, m.z_no) << '\n';
  return 0;
}

int cmd_reconstruct(const InputOptions& in, const std::string& algo,
                    bool via_sentinel) {
  const Text s = load_input(in);
  Symbol sigma = in.sigma;
  if (sigma == 0) {
    Oracle probe_oracle(s);
    sigma = discover_alphabet(probe_oracle);
    std::cerr << "discovered sigma=" << sigma << " with "
              << probe_oracle.stats().substring_queries << " queries\n";
  }
  const ExperimentRow row = run_one(algo, family_tag(in), s, sigma,
                                    via_sentinel);
  emit_csv(std::cout, {row});
  if (!row.exact) std::cerr << "reconstruction was not exact\n";
  if (!row.bound_ok) std::cerr << "query bound exceeded\n";
  return row.exact && row.bound_ok ? 0 : 1;
}

int cmd_universal(const std::string& compressor_name, std::size_t n,
                  const std::string& hidden, bool all, std::size_t cap) {
  const auto compressor = make_compressor(compressor_name);
  const CandidateUniverse universe(n, *compressor, cap);
  std::vector<Mask> targets;
  if (all) {
    for (Mask m = 0; m < (Mask{1} << n); ++m) targets.push_back(m);
  } else {
    const Text t = from_letters(hidden);
    if (t.size() != n) throw Error("--hidden must have length --n");
    targets.push_back(text_to_mask(t));
  }
  std::cout << "hidden,code_bits,sub_q,rounds,splits,flagged,exact,bound_ok\n";
  bool ok = true;
  for (Mask m : targets) {
    const Text t = mask_to_text(m, n);
    Oracle oracle(t);
    const UniversalReport r = reconstruct_universal(oracle, universe);
    const std::size_t bits = universe.code_length(m);
    std::size_t flagged = 0;
    for (const SplitRecord& s : r.splits) flagged += s.flagged ? 1 : 0;
    const bool exact = r.recovered == t;
    const bool bound_ok = static_cast<double>(r.stats.substring_queries) <=
                          bounds::universal(bits);
    ok = ok && exact && bound_ok;
    std::cout << to_letters(t) << ',' << bits << ','
              << r.stats.substring_queries << ',' << r.rounds << ','
              << r.splits.size() << ',' << flagged << ',' << (exact ? 1 : 0)
              << ',' << (bound_ok ? 1 : 0) << '\n';
  }
  return ok ? 0 : 1;
}

int cmd_bench(const std::string& sweep_file, bool serial) {
  std::ifstream f(sweep_file);
  if (!f) throw Error("cannot open " + sweep_file);
  const SweepSpec spec = parse_sweep(f);
  const auto rows = run_experiments(
      spec, serial ? Execution::kSerial : Execution::kParallel);
  emit_csv(std::cout, rows);
  bool ok = true;
  for (const ExperimentRow& r : rows) {
    if (!r.bound_ok) {
      std::cerr << "bound exceeded: " << r.algo << ' ' << r.family
                << " n=" << r.n << " sigma=" << r.sigma << '\n';
      ok = false;
    }
  }
  return ok ? 0 : 1;
}

int cmd_suffix_tree(const std::string& letters) {
  const Text t = from_letters(letters);
  SuffixTree st(max_symbol(t));
  for (Symbol c : t) st.append(c);
  std::cout << st.dump();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"String reconstruction from substring and prefix queries"};
  app.require_subcommand(1);

  InputOptions measure_in;
  auto* measure_cmd = app.add_subcommand("measure", "Print rle, z and z_no");
  add_input_options(measure_cmd, measure_in);
  measure_cmd->add_option("--sigma", measure_in.sigma, "Generated alphabet");

  InputOptions rec_in;
  std::string algo;
  bool via_sentinel = false;
  auto* rec_cmd =
      app.add_subcommand("reconstruct", "Reconstruct one hidden string");
  add_input_options(rec_cmd, rec_in);
  rec_cmd->add_option("--algo", algo)
      ->required()
      ->check(CLI::IsMember({"naive", "rle", "lz-prefix", "lz-substring"}));
  rec_cmd->add_option("--sigma", rec_in.sigma,
                      "Alphabet size; discovered by queries if omitted");
  rec_cmd->add_flag("--via-sentinel", via_sentinel,
                    "Answer prefix queries as substring queries on $S");

  std::string compressor;
  std::size_t uni_n = 0;
  std::string hidden;
  bool all = false;
  std::size_t cap = kDefaultEnumerationCap;
  auto* uni_cmd = app.add_subcommand(
      "universal", "Compressor-driven reconstruction of binary strings");
  uni_cmd->add_option("--compressor", compressor)
      ->required()
      ->check(CLI::IsMember({"identity", "rle-bits"}));
  uni_cmd->add_option("--n", uni_n)->required();
  auto* hidden_opt =
      uni_cmd->add_option("--hidden", hidden, "Hidden string over {a,b}");
  auto* all_opt = uni_cmd->add_flag("--all", all, "Every string of length n");
  hidden_opt->excludes(all_opt);
  uni_cmd->add_option("--cap", cap, "Largest n to enumerate")
      ->check(CLI::Range(std::size_t{1}, kHardEnumerationCap));

  std::string sweep_file;
  bool serial = false;
  auto* bench_cmd = app.add_subcommand("bench", "Run a sweep and print CSV");
  bench_cmd->add_option("--sweep", sweep_file)->required();
  bench_cmd->add_flag("--serial", serial, "Run the sweep on one thread");

  std::string tree_text;
  auto* tree_cmd =
      app.add_subcommand("suffix-tree", "Print the suffix tree of a text");
  tree_cmd->add_option("text", tree_text)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*measure_cmd) return cmd_measure(measure_in);
    if (*rec_cmd) return cmd_reconstruct(rec_in, algo, via_sentinel);
    if (*uni_cmd) {
      if (hidden.empty() && !all) throw Error("give --hidden or --all");
      return cmd_universal(compressor, uni_n, hidden, all, cap);
    }
    if (*bench_cmd) return cmd_bench(sweep_file, serial);
    if (*tree_cmd) return cmd_suffix_tree(tree_text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
