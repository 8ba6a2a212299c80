#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cdlat/cd.hpp"
#include "cdlat/corpus.hpp"
#include "cdlat/spec.hpp"

namespace cdlat {

enum class Verdict { pass, fail, not_applicable };
std::string_view verdict_token(Verdict v);  // "pass" / "FAIL" / "n/a"

// Outcome of matching one classification statement against one concrete
// group. A pass verdict always rests on exact member-set equality between
// the predicted and the computed lattice, never on a count or shape proxy.
struct TheoremReport {
  std::string theorem_id;  // statement + branch, e.g. "thm2.1-4b"
  std::string subject;     // group name or spec text
  bool hypothesis_matched = false;
  std::string prediction;  // what the matched branch asserts
  Verdict verdict = Verdict::not_applicable;
  std::string details;     // computed quantities; diff on mismatch
  bool corpus_limited = false;  // negative direction checked on corpus only
};

// A corpus entry together with its realized table and full analysis.
struct AnalyzedEntry {
  CorpusEntry entry;
  std::shared_ptr<const GroupTable> table;
  std::shared_ptr<const GroupAnalysis> analysis;
};

// Per-group checks. `an` must be the analysis of `g`.
TheoremReport check_theorem_2_1(const GroupTable& g, const GroupAnalysis& an);
TheoremReport check_corollary_2_2(const GroupTable& g, const GroupAnalysis& an);
TheoremReport check_theorem_4_1(const GroupTable& g, const GroupAnalysis& an);

// Self-contained checks that build their own (small) instances.
TheoremReport check_theorem_3_1(const AbelianSpec& a, Elem t);
TheoremReport check_theorem_3_3(const AbelianSpec& a, const AbelianSpec& b,
                                const std::vector<std::vector<Elem>>& actions);
TheoremReport check_proposition_3_5(const GroupTable& h,
                                    const AbelianSpec& zext);

// Constructive sweep over every abelian type of order 2..bound; the three
// exceptional types are checked negatively against the supplied corpus and
// flagged corpus_limited.
TheoremReport check_corollary_3_4(std::uint32_t bound,
                                  std::span<const AnalyzedEntry> corpus);

// Order-p^4 abelian-subgroup existence, maximal-class structure constants
// with unique-normal-subgroup counts, and the order-p^5 member-list shape;
// one report per applicable (lemma, group) pair.
std::vector<TheoremReport> check_lemmas(std::span<const AnalyzedEntry> corpus);

struct SuiteOptions {
  CorpusConfig corpus;
  BuildLimits build;
  EnumLimits limits;
  std::uint32_t cor34_bound = 24;
  int threads = 0;       // corpus-level parallelism; 0 = library default
  bool progress = false; // per-entry phase notes on stderr
};

struct SuiteResult {
  std::string suite;
  std::vector<TheoremReport> reports;
  std::size_t count(Verdict v) const;
  bool ok() const;  // no fail verdicts
};

// Canonical suite names in "all" run order.
std::vector<std::string> suite_names();
// Resolves aliases (cor3.2 = thm3.2, cor4.2 folds into thm4.1); throws
// std::invalid_argument for unknown names.
std::string resolve_suite_name(const std::string& name);

// Builds and analyzes corpus entries (parallel across entries, deterministic
// output order).
std::vector<AnalyzedEntry> analyze_corpus(
    const std::vector<CorpusEntry>& entries, const SuiteOptions& opts);

// Runs the named suites ("all" = every suite) over a shared corpus; each
// corpus entry is analyzed once and reused across suites.
std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    const SuiteOptions& opts);

}  // namespace cdlat
