#include "strrec/universal.hpp"

#include <algorithm>

namespace strrec {

Text mask_to_text(Mask mask, std::size_t n) {
  Text t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = ((mask >> i) & 1U) != 0 ? 2 : 1;
  return t;
}

Mask text_to_mask(TextView text) {
  if (text.size() > kHardEnumerationCap) throw Error("text too long for mask");
  Mask m = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 2) {
      m |= Mask{1} << i;
    } else if (text[i] != 1) {
      throw Error("not a binary text");
    }
  }
  return m;
}

namespace {

void check_cap(std::size_t n, std::size_t cap) {
  if (n < 1) throw Error("length must be at least 1");
  if (cap > kHardEnumerationCap) cap = kHardEnumerationCap;
  if (n > cap) {
    throw Error("length " + std::to_string(n) + " exceeds the enumeration cap " +
                std::to_string(cap) +
                "; the universal algorithm enumerates all 2^n strings, so "
                "raise the cap only if 2^n candidates fit in time and memory");
  }
}

}  // namespace

CandidateUniverse::CandidateUniverse(std::size_t n, const Compressor& c,
                                     std::size_t cap, Execution exec)
    : n_(n) {
  check_cap(n, cap);
  lengths_ = exec == Execution::kParallel ? kernels::code_lengths_parallel(n, c)
                                          : kernels::code_lengths_serial(n, c);
  max_length_ = *std::max_element(lengths_.begin(), lengths_.end());
}

CandidateSet CandidateUniverse::members(std::size_t budget) const {
  CandidateSet set;
  set.n = n_;
  set.budget = budget;
  for (Mask m = 0; m < lengths_.size(); ++m) {
    if (lengths_[m] <= budget) set.members.push_back(m);
  }
  return set;
}

CandidateSet enumerate_candidates(std::size_t n, std::size_t budget,
                                  const Compressor& c, std::size_t cap) {
  return CandidateUniverse(n, c, cap).members(budget);
}

bool splitter_in_window(std::size_t hits, std::size_t set_size) {
  const std::size_t lo = (set_size + 4) / 5;
  const std::size_t hi = 4 * set_size / 5;
  return lo <= hits && hits <= hi;
}

Splitter find_splitter(const CandidateSet& m, Execution exec) {
  if (m.size() < 2) throw Error("a splitter needs at least two candidates");
  const std::size_t total = m.size();
  Splitter fallback;
  std::size_t fallback_gap = static_cast<std::size_t>(-1);
  for (std::size_t len = 1; len <= m.n; ++len) {
    const auto counts =
        exec == Execution::kParallel
            ? kernels::substring_counts_parallel(m.members, m.n, len)
            : kernels::substring_counts_serial(m.members, m.n, len);
    for (std::uint32_t p = 0; p < counts.size(); ++p) {
      const std::size_t hits = counts[p];
      if (hits == 0) continue;
      const bool in_window = splitter_in_window(hits, total);
      const std::size_t gap =
          2 * hits > total ? 2 * hits - total : total - 2 * hits;
      if (!in_window && gap >= fallback_gap) continue;
      Splitter s;
      s.pattern.resize(len);
      for (std::size_t k = 0; k < len; ++k) {
        s.pattern[k] = ((p >> (len - 1 - k)) & 1U) != 0 ? 2 : 1;
      }
      s.hits = hits;
      if (in_window) return s;
      s.flagged = true;
      fallback = std::move(s);
      fallback_gap = gap;
    }
  }
  return fallback;
}

namespace {

bool contains(Mask m, std::size_t n, TextView pattern) {
  const Text t = mask_to_text(m, n);
  return std::search(t.begin(), t.end(), pattern.begin(), pattern.end()) !=
         t.end();
}

}  // namespace

UniversalReport reconstruct_universal(Oracle& oracle,
                                      const CandidateUniverse& universe,
                                      Execution exec) {
  const QueryStats before = oracle.stats();
  UniversalReport report;
  const std::size_t n = universe.n();
  for (std::size_t budget = 1;; budget *= 2) {
    ++report.rounds;
    report.final_budget = budget;
    CandidateSet m = universe.members(budget);
    while (m.size() > kDirectQueryThreshold) {
      const Splitter s = find_splitter(m, exec);
      report.splits.push_back({m.size(), s.hits, s.flagged});
      const bool present = oracle.contains_substring(s.pattern);
      std::erase_if(m.members, [&](Mask x) {
        return contains(x, n, s.pattern) != present;
      });
    }
    for (Mask candidate : m.members) {
      const Text t = mask_to_text(candidate, n);
      // A length-n substring query is an equality test.
      if (oracle.contains_substring(t)) {
        report.recovered = t;
        report.stats = oracle.stats() - before;
        return report;
      }
    }
    if (budget >= universe.max_code_length()) {
      throw Error("hidden string matched no candidate of length " +
                  std::to_string(n) + "; is it binary with that length?");
    }
  }
}

UniversalReport reconstruct_universal(Oracle& oracle, std::size_t n,
                                      const Compressor& c, std::size_t cap) {
  const CandidateUniverse universe(n, c, cap);
  return reconstruct_universal(oracle, universe);
}

// Answer recording and replay.

namespace {

class RecordingProbe : public Probe {
 public:
  RecordingProbe(std::unique_ptr<Probe> inner, Bits& answers)
      : inner_(std::move(inner)), answers_(answers) {}
  bool extends(TextView t) override {
    const bool answer = inner_->extends(t);
    answers_.push_back(answer);
    return answer;
  }
  void append(TextView t) override { inner_->append(t); }

 private:
  std::unique_ptr<Probe> inner_;
  Bits& answers_;
};

}  // namespace

std::unique_ptr<Probe> RecordingSource::open(QueryKind kind,
                                             Orientation orientation,
                                             TextView known) {
  return std::make_unique<RecordingProbe>(
      inner_.open(kind, orientation, known), answers_);
}

class ReplaySource::ReplayProbe : public Probe {
 public:
  ReplayProbe(ReplaySource& source, QueryKind kind, std::size_t known)
      : source_(source), kind_(kind), known_(known) {}
  bool extends(TextView t) override {
    return source_.next(kind_, known_ + t.size());
  }
  void append(TextView t) override { known_ += t.size(); }

 private:
  ReplaySource& source_;
  QueryKind kind_;
  std::size_t known_;
};

bool ReplaySource::next(QueryKind kind, std::size_t length) {
  if (position_ >= answers_.size()) {
    throw Error("answer stream exhausted during replay");
  }
  if (kind == QueryKind::kSubstring) {
    ++stats_.substring_queries;
  } else {
    ++stats_.prefix_queries;
  }
  stats_.total_queried_symbols += length;
  stats_.max_query_length = std::max<std::uint64_t>(stats_.max_query_length,
                                                    length);
  return answers_[position_++];
}

std::unique_ptr<Probe> ReplaySource::open(QueryKind kind,
                                          Orientation orientation,
                                          TextView known) {
  (void)orientation;
  return std::make_unique<ReplayProbe>(*this, kind, known.size());
}

std::string ReconstructorCompressor::name() const {
  return "answers-of-" + std::string(algorithm_name(algorithm_));
}

Bits ReconstructorCompressor::compress(TextView s) const {
  Oracle oracle(Text(s.begin(), s.end()));
  RecordingSource recorder(oracle);
  const ReconstructionReport r = reconstruct(algorithm_, recorder, sigma_);
  if (!std::equal(r.recovered.begin(), r.recovered.end(), s.begin(),
                  s.end())) {
    throw Error("reconstructor failed to recover its input");
  }
  return recorder.answers();
}

Text ReconstructorCompressor::decompress(const Bits& code) const {
  ReplaySource replay(code);
  ReconstructionReport r = reconstruct(algorithm_, replay, sigma_);
  if (!replay.exhausted()) {
    throw Error("replay finished with unread answers; is the "
                "reconstructor deterministic?");
  }
  return std::move(r.recovered);
}

}  // namespace strrec
