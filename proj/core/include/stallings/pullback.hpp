#ifndef STALLINGS_PULLBACK_HPP
#define STALLINGS_PULLBACK_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "stallings/based_core.hpp"
#include "stallings/covering.hpp"

namespace stallings {

struct PullbackComponent {
  Subgraph part;
  int rank = 0;
  bool simply_connected = true;
  // Lowest-identifier vertex of the component in the product graph.
  VertexId base_vertex = 0;
  // reduce(word(u1 -> p) · word(u2 -> q)^-1) for (p, q) = base_vertex.
  Word rep;
  // Spine invariants of the intersection core at base_vertex
  // (non-simply-connected components over a rank-2 base only).
  std::optional<SpineInvariants> invariants;
};

// The fiber product of two cores over the bouquet: vertices are all vertex
// pairs, darts all equal-label dart pairs.
struct PullbackReport {
  LabeledGraph product;
  int base_rank = 0;
  // product vertex id -> (vertex of c1, vertex of c2)
  std::vector<std::pair<VertexId, VertexId>> vertex_pairs;
  // product dart id -> (dart of c1, dart of c2); the projections t1, t2.
  std::map<DartId, std::pair<DartId, DartId>> dart_pairs;
  std::vector<PullbackComponent> components;

  VertexId product_vertex(VertexId p, VertexId q) const;
};

PullbackReport fiber_product(const BasedCore& c1, const BasedCore& c2);

// The based component of (u1, u2) trimmed to its spine: the core of the
// intersection A1 ∩ A2 (no conjugation).  A trivial intersection yields the
// one-vertex core.
BasedCore pointed_intersection(const BasedCore& c1, const BasedCore& c2);

// One representative word per non-simply-connected component, paired with
// the component's index in the report.  Representatives lie in distinct
// double cosets and each verifies A1 ∩ A2^g non-trivial.
std::vector<std::pair<Word, std::size_t>> double_coset_reps(
    const PullbackReport& report, const BasedCore& c1, const BasedCore& c2);

// Σ (rank - 1) over the non-simply-connected components.
int intersection_rank_sum(const PullbackReport& report);

// Core of the subgroup join <A1, A2>: fold of the wedge at the basepoints.
BasedCore join(const BasedCore& c1, const BasedCore& c2);

// Test oracle: scans all reduced words up to max_len, keeps those with
// non-trivial conjugate intersection A1 ∩ A2^g, and groups them by the
// product component they connect to; returns the shortest representative
// of each class.
std::vector<Word> brute_force_double_cosets(const BasedCore& c1,
                                            const BasedCore& c2, int max_len);

// The grouping underlying brute_force_double_cosets: component index of the
// report -> shortest word found for that double coset.
std::map<std::size_t, Word> brute_force_double_coset_map(
    const BasedCore& c1, const BasedCore& c2, const PullbackReport& report,
    int max_len);

namespace detail {

// First non-trivial closed word at the pointed product of two folded based
// graphs, or nullopt when that component is a tree.  This decides
// non-triviality of the intersection without materializing the product.
std::optional<Word> pointed_product_witness(const LabeledGraph& lg1, VertexId b1,
                                            const LabeledGraph& lg2, VertexId b2,
                                            int base_rank);

// Component index (in report) of the full-pullback component associated
// with the double coset of g; requires A1 ∩ A2^g non-trivial.
std::size_t component_of_coset(const PullbackReport& report, const BasedCore& c1,
                               const BasedCore& c2, const Word& g);

}  // namespace detail

}  // namespace stallings

#endif
