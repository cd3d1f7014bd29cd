#ifndef GIS_SUITE_HPP_
#define GIS_SUITE_HPP_

#include "gis/classify.hpp"
#include "gis/semigroup.hpp"

namespace gis {

struct CorpusEntry {
  std::string name;        // "n3#17" for enumerated members
  std::string provenance;  // enumerated | fixture | file
  FiniteSemigroup sg;
  Classification cls;
};

struct Corpus {
  std::vector<CorpusEntry> members;
};

// Every semigroup of order <= max_order up to isomorphism, classified.
// bands_only restricts the backtracking to idempotent diagonals.
Corpus build_corpus(int max_order, bool bands_only = false);

struct CheckResult {
  std::string subject;
  std::string status;   // pass | fail | skipped
  std::string witness;  // nonempty exactly when status == fail
};

struct RunReport {
  std::string suite;
  int order_cap = 0;
  std::vector<CheckResult> checks;
  int passed = 0, failed = 0, skipped = 0;
  double seconds = 0.0;

  bool all_passed() const { return failed == 0; }
  // Deterministic except for the timing field; with_timing=false drops it.
  std::string to_json(bool with_timing = true) const;
};

const std::vector<std::string>& suite_names();

// Runs one named suite over the enumerated corpus up to max_order.
// Throws UnknownSuite.
RunReport run_suite(const std::string& name, int max_order = 4);

}  // namespace gis

#endif  // GIS_SUITE_HPP_
