#include "strrec/reconstruct.hpp"

#include <algorithm>
#include <memory>

#include "strrec/gallop.hpp"

namespace strrec {

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kNaive:
      return "naive";
    case Algorithm::kRle:
      return "rle";
    case Algorithm::kLzPrefix:
      return "lz-prefix";
    case Algorithm::kLzSubstring:
      return "lz-substring";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : kAllAlgorithms) {
    if (algorithm_name(a) == name) return a;
  }
  return std::nullopt;
}

std::size_t ReconstructionReport::units() const {
  std::size_t total = 0;
  for (const Phase& p : phases) total += p.units;
  return total;
}

std::size_t ReconstructionReport::units(Direction d) const {
  std::size_t total = 0;
  for (const Phase& p : phases) {
    if (p.direction == d) total += p.units;
  }
  return total;
}

Symbol discover_alphabet(QuerySource& source) {
  auto probe = source.open(QueryKind::kSubstring, Orientation::kForward, {});
  auto present = [&](std::size_t c) {
    const Symbol q[] = {static_cast<Symbol>(c)};
    return probe->extends(q);
  };
  if (!present(1)) return 0;
  return static_cast<Symbol>(gallop_search(1, std::nullopt, false, present));
}

namespace {

// Working state of one direction. In the backward phase `known` holds the
// reversed reconstruction and units are recorded reversed back.
struct Phaser {
  QuerySource& source;
  ReconstructionReport& report;
  Direction direction = Direction::kForward;
  Text known;
  std::unique_ptr<Probe> probe;

  Phaser(QuerySource& src, ReconstructionReport& rep, QueryKind kind)
      : source(src), report(rep) {
    probe = source.open(kind, Orientation::kForward, {});
    report.phases.push_back({Direction::kForward, 0});
  }

  void turn_around() {
    direction = Direction::kBackward;
    std::reverse(known.begin(), known.end());
    probe = source.open(QueryKind::kSubstring, Orientation::kReverse, known);
    report.phases.push_back({Direction::kBackward, 0});
  }

  void commit(TextView unit) {
    probe->append(unit);
    known.insert(known.end(), unit.begin(), unit.end());
    ++report.phases.back().units;
    Unit u{direction, Text(unit.begin(), unit.end())};
    if (direction == Direction::kBackward) {
      std::reverse(u.symbols.begin(), u.symbols.end());
    }
    report.trace.push_back(std::move(u));
  }

  Text finish() const {
    return direction == Direction::kBackward ? reversed(known) : known;
  }
};

ReconstructionReport start_report(Algorithm a) {
  ReconstructionReport r;
  r.algorithm = a;
  return r;
}

void require_sigma(Symbol sigma) {
  if (sigma < 1) throw Error("sigma must be at least 1");
}

void naive_phase(Phaser& ph, Symbol sigma) {
  for (;;) {
    bool extended = false;
    for (Symbol c = 1; c <= sigma; ++c) {
      const Symbol q[] = {c};
      if (ph.probe->extends(q)) {
        ph.commit(q);
        extended = true;
        break;
      }
    }
    if (!extended) return;
  }
}

void rle_phase(Phaser& ph, Symbol sigma) {
  // The symbol of the last maximal run cannot follow it again.
  std::optional<Symbol> blocked;
  Text run;
  for (;;) {
    std::optional<Symbol> next;
    for (Symbol c = 1; c <= sigma; ++c) {
      if (blocked && *blocked == c) continue;
      const Symbol q[] = {c};
      if (ph.probe->extends(q)) {
        next = c;
        break;
      }
    }
    if (!next) return;
    const Symbol c = *next;
    const std::size_t length = gallop_search(
        1, std::nullopt, false, [&](std::size_t r) {
          run.assign(r, c);
          return ph.probe->extends(run);
        });
    run.assign(length, c);
    ph.commit(run);
    blocked = next;
  }
}

}  // namespace

ReconstructionReport reconstruct_naive(QuerySource& source, Symbol sigma) {
  require_sigma(sigma);
  const QueryStats before = source.stats();
  ReconstructionReport report = start_report(Algorithm::kNaive);
  Phaser ph(source, report, QueryKind::kSubstring);
  naive_phase(ph, sigma);
  ph.turn_around();
  naive_phase(ph, sigma);
  report.recovered = ph.finish();
  report.stats = source.stats() - before;
  return report;
}

ReconstructionReport reconstruct_rle(QuerySource& source, Symbol sigma) {
  require_sigma(sigma);
  const QueryStats before = source.stats();
  ReconstructionReport report = start_report(Algorithm::kRle);
  Phaser ph(source, report, QueryKind::kSubstring);
  rle_phase(ph, sigma);
  ph.turn_around();
  rle_phase(ph, sigma);
  report.recovered = ph.finish();
  report.stats = source.stats() - before;
  return report;
}

PhraseSearchResult lz_phrase_search(const SuffixTree& st,
                                    CentroidNavigator& nav, Probe& probe) {
  PhraseSearchResult result;
  NodeId best = st.root();
  NodeId best_child = kNoNode;
  std::vector<NodeId> failed;

  NodeId u = nav.start();
  while (u != kNoNode) {
    ++result.visits;
    const TextView loc = st.locus(u);
    // The empty locus extends trivially; R itself is already known.
    if (!loc.empty() && !probe.extends(loc)) {
      failed.push_back(u);
      u = nav.toward_parent(u);
      continue;
    }
    best = u;
    best_child = kNoNode;
    if (u == st.root()) result.root_probed = true;
    const std::size_t d = st.depth(u);
    for (const auto& [first, v] : st.children(u)) {
      if (probe.extends(st.locus(v).first(d + 1))) {
        best_child = v;
        break;
      }
    }
    if (best_child == kNoNode) break;
    u = nav.toward_child(u, best_child);
  }

  if (best_child == kNoNode) {
    const TextView loc = st.locus(best);
    result.phrase.assign(loc.begin(), loc.end());
    return result;
  }
  // Continue into the edge toward best_child; its first symbol is verified.
  const std::size_t base = st.depth(best);
  const TextView target = st.locus(best_child);
  const std::size_t edge = target.size() - base;
  const bool child_failed =
      std::find(failed.begin(), failed.end(), best_child) != failed.end();
  const std::size_t length =
      gallop_search(1, edge, child_failed, [&](std::size_t l) {
        return probe.extends(target.first(base + l));
      });
  const TextView phrase = target.first(base + length);
  result.phrase.assign(phrase.begin(), phrase.end());
  return result;
}

namespace {

void lz_phase(Phaser& ph, Symbol sigma, const LzOptions& options) {
  SuffixTree st(sigma);
  st.append(ph.known);
  const TreeIndex tree(st);
  for (;;) {
    PhraseSearchResult found;
    if (options.full_decomposition) {
      const CentroidTree ct(tree);
      if (options.audit != nullptr) {
        ++options.audit->decompositions;
        if (check_decomposition(tree, ct)) {
          ++options.audit->decomposition_violations;
        }
      }
      FullNavigator nav(tree, ct);
      found = lz_phrase_search(st, nav, *ph.probe);
    } else {
      LazyNavigator nav(tree, options.audit);
      found = lz_phrase_search(st, nav, *ph.probe);
    }

    if (found.phrase.empty()) {
      // Symbols already heading a root edge were probed by the search.
      for (Symbol c = 1; c <= sigma; ++c) {
        if (found.root_probed && st.child(st.root(), c) != kNoNode) continue;
        const Symbol q[] = {c};
        if (ph.probe->extends(q)) {
          found.phrase.assign(q, q + 1);
          break;
        }
      }
    }
    if (found.phrase.empty()) return;
    ph.commit(found.phrase);
    st.append(found.phrase);
  }
}

}  // namespace

ReconstructionReport reconstruct_lz_prefix(QuerySource& source, Symbol sigma,
                                           const LzOptions& options) {
  require_sigma(sigma);
  const QueryStats before = source.stats();
  ReconstructionReport report = start_report(Algorithm::kLzPrefix);
  Phaser ph(source, report, QueryKind::kPrefix);
  lz_phase(ph, sigma, options);
  report.recovered = ph.finish();
  report.stats = source.stats() - before;
  return report;
}

ReconstructionReport reconstruct_lz_substring(QuerySource& source,
                                              Symbol sigma,
                                              const LzOptions& options) {
  require_sigma(sigma);
  const QueryStats before = source.stats();
  ReconstructionReport report = start_report(Algorithm::kLzSubstring);
  Phaser ph(source, report, QueryKind::kSubstring);
  lz_phase(ph, sigma, options);
  ph.turn_around();
  lz_phase(ph, sigma, options);
  report.recovered = ph.finish();
  report.stats = source.stats() - before;
  return report;
}

ReconstructionReport reconstruct(Algorithm algorithm, QuerySource& source,
                                 Symbol sigma, const LzOptions& options) {
  switch (algorithm) {
    case Algorithm::kNaive:
      return reconstruct_naive(source, sigma);
    case Algorithm::kRle:
      return reconstruct_rle(source, sigma);
    case Algorithm::kLzPrefix:
      return reconstruct_lz_prefix(source, sigma, options);
    case Algorithm::kLzSubstring:
      return reconstruct_lz_substring(source, sigma, options);
  }
  throw Error("unknown algorithm");
}

}  // namespace strrec
