#ifndef STALLINGS_LABELED_GRAPH_HPP
#define STALLINGS_LABELED_GRAPH_HPP

#include <map>
#include <optional>
#include <string>

#include "stallings/graph.hpp"
#include "stallings/word.hpp"

namespace stallings {

// A graph labeled over the rank-r bouquet: each dart carries a signed label
// in {±1, ..., ±r} with label(inv(d)) = -label(d).  The labeling is the
// combinatorial form of the map to the bouquet.
struct LabeledGraph {
  Graph graph;
  std::map<DartId, int> labels;

  int label(DartId d) const;
  // Adds an arc whose from->to dart carries `lab` (and the inverse -lab).
  std::pair<DartId, DartId> add_labeled_arc(VertexId from, VertexId to, int lab);
  void remove_arc(DartId d);

  bool operator==(const LabeledGraph& other) const;
};

std::optional<std::string> validate(const LabeledGraph& lg, int rank);

// Signed labels ordered +1 < -1 < +2 < -2 < ...; this is the canonical
// scanning order everywhere a label order is needed.
int label_key(int label);
int label_from_key(int key);

// The canonical single-vertex graph with r labeled loops.
struct Bouquet {
  int rank = 0;
  LabeledGraph graph;
  VertexId vertex = 0;

  static Bouquet of_rank(int r);
};

}  // namespace stallings

#endif
