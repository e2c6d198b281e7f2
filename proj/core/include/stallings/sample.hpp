#ifndef STALLINGS_SAMPLE_HPP
#define STALLINGS_SAMPLE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "stallings/based_core.hpp"

namespace stallings {

// Configuration shared by the samplers, the verification runner and the
// CLI.  The seed fully determines every sampled object.
struct RunConfig {
  std::uint64_t seed = 1;
  int count = 1000;    // size of the random-core and random-pair corpora
  int max_words = 5;   // generators per sampled subgroup
  int max_len = 12;    // letters per sampled generator
  int rank = 2;
  std::string out;
  std::string csv;
  std::string svg;
};

// Complete core over the rank-r bouquet built from one permutation per
// label: arcs v -> perms[i][v] labeled i+1.  The permutations must act
// transitively (the graph must be connected); basepoint 0.
BasedCore complete_core_from_permutations(const std::vector<std::vector<int>>& perms);

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }
  // Uniform in [0, n).  Engine output is consumed deterministically; the
  // mt19937_64 stream is identical across platforms.
  int below(int n);

  // Uniform reduced word: length uniform in [1, max_len], first letter
  // uniform over the 2r letters, each further letter uniform over the
  // 2r - 1 non-cancelling ones.
  Word reduced_word(int rank, int max_len);
  std::vector<Word> generator_set(int rank, int max_words, int max_len);
  BasedCore random_core(int rank, int max_words, int max_len);

  std::vector<int> permutation(int n);
  // Complete core of index exactly n from random label permutations;
  // resamples non-transitive pairs (bounded retries, then error).
  BasedCore random_complete_core(int n, int rank);

  // Connected rank-2 graph on nv vertices: a random tree plus two extra
  // arcs with random endpoints.
  Graph random_rank2_base(int nv);
  // Spanning tree grown in randomized dart order.
  Subgraph random_spanning_tree(const Graph& g, VertexId root);
  // Closed path at v: random walk of `steps` darts, then back to v through
  // the tree.
  Path random_closed_path(const Graph& g, const Subgraph& tree, VertexId v,
                          int steps);

 private:
  std::mt19937_64 eng_;
};

}  // namespace stallings

#endif
