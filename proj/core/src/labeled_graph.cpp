#include "stallings/labeled_graph.hpp"

#include <cstdlib>
#include <stdexcept>

namespace stallings {

int LabeledGraph::label(DartId d) const {
  auto it = labels.find(d);
  if (it == labels.end()) throw std::invalid_argument("dart has no label");
  return it->second;
}

std::pair<DartId, DartId> LabeledGraph::add_labeled_arc(VertexId from, VertexId to,
                                                        int lab) {
  if (lab == 0) throw std::invalid_argument("label must be nonzero");
  auto [d, di] = graph.add_arc(from, to);
  labels[d] = lab;
  labels[di] = -lab;
  return {d, di};
}

void LabeledGraph::remove_arc(DartId d) {
  DartId di = graph.inv(d);
  graph.remove_arc(d);
  labels.erase(d);
  labels.erase(di);
}

bool LabeledGraph::operator==(const LabeledGraph& other) const {
  return graph == other.graph && labels == other.labels;
}

std::optional<std::string> validate(const LabeledGraph& lg, int rank) {
  if (auto why = validate(lg.graph)) return why;
  for (DartId d : lg.graph.darts()) {
    auto it = lg.labels.find(d);
    if (it == lg.labels.end()) return "dart has no label";
    int lab = it->second;
    if (lab == 0 || std::abs(lab) > rank) return "label out of range";
    if (lg.labels.at(lg.graph.inv(d)) != -lab) {
      return "labels not antisymmetric under inv";
    }
  }
  if (lg.labels.size() != lg.graph.num_darts()) return "stray labels";
  return std::nullopt;
}

int label_key(int label) {
  if (label == 0) throw std::invalid_argument("label must be nonzero");
  return 2 * (std::abs(label) - 1) + (label < 0 ? 1 : 0);
}

int label_from_key(int key) {
  int index = key / 2 + 1;
  return (key % 2 == 0) ? index : -index;
}

Bouquet Bouquet::of_rank(int r) {
  if (r < 1) throw std::invalid_argument("bouquet rank must be >= 1");
  Bouquet b;
  b.rank = r;
  b.vertex = b.graph.graph.add_vertex();
  for (int i = 1; i <= r; ++i) {
    b.graph.add_labeled_arc(b.vertex, b.vertex, i);
  }
  return b;
}

}  // namespace stallings
