#ifndef STALLINGS_VERIFY_HPP
#define STALLINGS_VERIFY_HPP

#include <string>
#include <vector>

#include "stallings/bounds.hpp"
#include "stallings/sample.hpp"

namespace stallings {

struct PropertyResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<PropertyResult> properties;
  // Every bound comparison computed along the way (for CSV / SVG output).
  std::vector<BoundReport> bound_samples;

  bool all_pass() const;
};

// Runs the full property suite: the realization example, rank identities,
// checker counts, Nielsen-Schreier, the rank bound on random pairs, the
// tight witness, the separation family, the double-coset oracle, finite
// completions, Galois/escape checks and lattice excision.  cfg.seed pins
// every sample; cfg.count scales the random corpora (defaults match the
// shipped acceptance suite).
VerifyReport run_verification(const RunConfig& cfg);

// Spanning tree of g containing the given subtree (used by the completion
// free-factor check).
Subgraph extend_to_spanning_tree(const Graph& g, const Subgraph& subtree,
                                 VertexId root);

}  // namespace stallings

#endif
