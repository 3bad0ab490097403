#include <sstream>

#include "doctest.h"
#include "strrec/experiment.hpp"
#include "strrec/measures.hpp"

using namespace strrec;

TEST_CASE("generators") {
  CHECK(to_letters(generate("unary", 5, 1, 0)) == "aaaaa");
  CHECK(to_letters(generate("fibonacci", 8, 2, 0)) == "abaababa");
  CHECK(to_letters(generate("thue-morse", 8, 2, 0)) == "abbabaab");
  CHECK(generate("random", 100, 4, 7) == generate("random", 100, 4, 7));
  CHECK(generate("random", 100, 4, 7) != generate("random", 100, 4, 8));
  const Text p = generate("periodic(3)", 12, 4, 1);
  for (std::size_t i = 3; i < p.size(); ++i) CHECK(p[i] == p[i - 3]);
  for (const char* f : {"random", "periodic", "runs(2)", "copy-paste(3)"}) {
    const Text t = generate(f, 500, 3, 2);
    CHECK(t.size() == 500);
    CHECK_NOTHROW(check_alphabet(t, 3));
  }
  CHECK(measure(generate("runs(5)", 1000, 2, 1)).rle < 400);
  CHECK_THROWS_AS(generate("zigzag", 5, 2, 0), Error);
  CHECK_THROWS_AS(generate("random", 0, 2, 0), Error);
  CHECK_THROWS_AS(generate("fibonacci", 5, 1, 0), Error);
  CHECK_THROWS_AS(generate("runs(x)", 5, 2, 0), Error);
  CHECK_THROWS_AS(generate("runs(2", 5, 2, 0), Error);
}

TEST_CASE("fibonacci prefix matches the morphism") {
  // a -> ab, b -> a, iterated from a.
  std::string w = "a";
  while (w.size() < 300) {
    std::string next;
    for (char c : w) next += c == 'a' ? "ab" : "a";
    w = next;
  }
  CHECK(to_letters(generate("fibonacci", 300, 2, 0)) == w.substr(0, 300));
}

TEST_CASE("csv emission") {
  std::ostringstream empty;
  emit_csv(empty, {});
  CHECK(empty.str() == std::string(kCsvHeader) + "\n");

  const ExperimentRow row =
      run_one("naive", "unary", generate("unary", 100, 1, 0), 2);
  CHECK(row.exact);
  CHECK(row.bound_ok);
  CHECK(row.sub_q <= 2 * 102);
  std::ostringstream one;
  emit_csv(one, {row});
  std::size_t lines = 0;
  for (char c : one.str()) lines += c == '\n' ? 1 : 0;
  CHECK(lines == 2);
}

TEST_CASE("sweep rows round-trip through csv") {
  std::istringstream in(
      "# twelve runs\n"
      "algos = naive, rle, lz-prefix, lz-substring\n"
      "families = random, thue-morse, copy-paste(3)\n"
      "n = 64\n"
      "sigma = 2\n"
      "seed = 5\n");
  const SweepSpec spec = parse_sweep(in);
  const auto rows = run_experiments(spec);
  REQUIRE(rows.size() == 12);
  std::stringstream csv;
  emit_csv(csv, rows);
  std::size_t lines = 0;
  for (char c : csv.str()) lines += c == '\n' ? 1 : 0;
  CHECK(lines == 13);
  CHECK(parse_csv(csv) == rows);
  // Input order: family-major, algorithm-minor.
  CHECK(rows[0].algo == "naive");
  CHECK(rows[0].family == "random");
  CHECK(rows[5].algo == "rle");
  CHECK(rows[5].family == "thue-morse");
  for (const auto& r : rows) {
    CHECK(r.exact);
    CHECK(r.bound_ok);
  }
  // Serial and parallel execution agree apart from timing.
  auto serial = run_experiments(spec, Execution::kSerial);
  auto parallel = rows;
  for (auto* v : {&serial, &parallel}) {
    for (auto& r : *v) r.ms = 0;
  }
  CHECK(serial == parallel);
}

TEST_CASE("sweep parsing errors") {
  std::istringstream missing("algos = naive\n");
  CHECK_THROWS_AS(parse_sweep(missing), Error);
  std::istringstream bad_key("algos=naive\nfamilies=random\nn=5\nsigma=2\ncolour=red\n");
  CHECK_THROWS_AS(parse_sweep(bad_key), Error);
  std::istringstream bad_algo("algos=magic\nfamilies=random\nn=5\nsigma=2\n");
  CHECK_THROWS_AS(parse_sweep(bad_algo), Error);
  std::istringstream bad_num("algos=naive\nfamilies=random\nn=five\nsigma=2\n");
  CHECK_THROWS_AS(parse_sweep(bad_num), Error);
  std::istringstream bad_line("algos naive\n");
  CHECK_THROWS_AS(parse_sweep(bad_line), Error);
}

TEST_CASE("universal rows and the sentinel prefix source") {
  std::istringstream in(
      "algos = universal-identity, universal-rle-bits, lz-prefix\n"
      "families = runs(3)\n"
      "n = 10\n"
      "sigma = 2\n"
      "reps = 3\n"
      "prefix_source = sentinel\n");
  const auto rows = run_experiments(parse_sweep(in));
  REQUIRE(rows.size() == 9);
  for (const auto& r : rows) {
    CHECK(r.exact);
    CHECK(r.bound_ok);
    CHECK(r.pre_q == 0);
  }
}

TEST_CASE("rle beats naive on long unary strings") {
  const Text u = generate("unary", 10000, 1, 0);
  const auto naive = run_one("naive", "unary", u, 2);
  const auto rle = run_one("rle", "unary", u, 2);
  CHECK(rle.sub_q * 100 < naive.sub_q);
}

TEST_CASE("lz queries track phrases rather than length") {
  std::uint64_t small_q = 0;
  std::uint64_t large_q = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    small_q += run_one("lz-substring", "copy-paste(8)",
                       generate("copy-paste(8)", 1000, 2, seed), 2)
                   .sub_q;
    large_q += run_one("lz-substring", "copy-paste(8)",
                       generate("copy-paste(8)", 10000, 2, seed), 2)
                   .sub_q;
  }
  // Ten times longer, far less than ten times the queries.
  CHECK(large_q < 3 * small_q);
}
