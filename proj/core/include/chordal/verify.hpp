#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace chordal {

// Bounds and sample counts for the verification harness.  The defaults are
// the shipped acceptance bounds; every knob maps to a CLI flag.
struct VerifyOptions {
  int max_chordal_n = 7;    // exhaustive connected chordal graphs up to this n
  int max_allgraph_n = 6;   // exhaustive connected graphs up to this n
  int cutset_samples = 2000;  // random connected graphs on 7..9 vertices
  int ktree_samples = 1000;   // random chordal/k-tree population, n <= max_random_n
  int split_samples = 500;
  int max_random_n = 12;
  int max_oracle_n = 16;  // enumeration-oracle bound
  std::uint64_t seed = 42;
};

struct CriterionResult {
  std::string name;
  bool assertion = true;  // assertion criteria flip the exit status; others report
  bool passed = false;
  long long checked = 0;   // graphs (or edges, see detail) examined
  long long failures = 0;
  std::string detail;
};

struct Observation {
  std::string name;
  std::string detail;
};

struct Counterexample {
  std::string criterion;
  int n = 0;
  std::string edges;  // edge-list serialization
  std::string hash;
  std::string detail;
};

struct VerifyResult {
  std::vector<CriterionResult> criteria;
  std::vector<Observation> observations;
  std::vector<Counterexample> counterexamples;

  bool ok() const {
    for (const CriterionResult& c : criteria)
      if (c.assertion && !c.passed) return false;
    return true;
  }
};

// Runs the property suite (cut-set and separator equivalences, corollaries,
// fixed witnesses) over the exhaustive and seeded populations.  Progress
// lines go to `log` when non-null.  Deterministic for fixed options.
VerifyResult run_verify(const VerifyOptions& opts, std::ostream* log = nullptr);

// Deterministic JSON report: same options in, identical bytes out.
std::string verify_report_json(const VerifyResult& result, const VerifyOptions& opts,
                               int indent = 2);

std::string verify_report_text(const VerifyResult& result);

}  // namespace chordal
