#include "stallings/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace stallings {

ClassicalEps classical_bounds(int rk1, int rk2) {
  if (rk1 < 1 || rk2 < 1) {
    throw std::invalid_argument("classical_bounds: ranks must be >= 1");
  }
  ClassicalEps eps;
  eps.neumann = (rk1 - 1) * (rk2 - 1);
  eps.burns = std::max((rk1 - 2) * (rk2 - 1), (rk1 - 1) * (rk2 - 2));
  eps.tardos = std::max((rk1 - 2) * (rk2 - 2) - 1, 0);
  // (rk-3)(rk-3) turns spuriously positive from double negatives when a
  // rank-1 factor is present; there the whole sum is <= 0 and every error
  // term is 0.
  eps.dicks = (rk1 == 1 || rk2 == 1) ? 0 : std::max((rk1 - 3) * (rk2 - 3), 0);
  return eps;
}

int paper_bound(const SpineInvariants& inv1, const SpineInvariants& inv2, int i) {
  if (i != 1 && i != 2) throw std::invalid_argument("paper_bound: i must be 1 or 2");
  for (const SpineInvariants& inv : {inv1, inv2}) {
    if (inv.rank < 1 || inv.H < 1) {
      throw std::invalid_argument("paper_bound: trivial-subgroup invariants");
    }
  }
  int n1i = (i == 1) ? inv1.n1 : inv1.n2;
  int n2i = (i == 1) ? inv2.n1 : inv2.n2;
  return (inv1.rank - 1) * (inv2.rank - 1) + inv1.H * inv2.H -
         (inv1.H - n1i) * (inv2.H - n2i);
}

BoundReport compare(const BasedCore& c1, const BasedCore& c2) {
  BoundReport r;
  r.inv1 = spine_invariants(c1);
  r.inv2 = spine_invariants(c2);
  r.exact_sum = intersection_rank_sum(fiber_product(c1, c2));
  r.paper_bound_i1 = paper_bound(r.inv1, r.inv2, 1);
  r.paper_bound_i2 = paper_bound(r.inv1, r.inv2, 2);
  r.paper_bound_best = std::min(r.paper_bound_i1, r.paper_bound_i2);

  ClassicalEps eps = classical_bounds(r.inv1.rank, r.inv2.rank);
  int prod = (r.inv1.rank - 1) * (r.inv2.rank - 1);
  r.eps_neumann = eps.neumann;
  r.eps_burns = eps.burns;
  r.eps_tardos = eps.tardos;
  r.eps_dicks = eps.dicks;
  r.total_neumann = prod + eps.neumann;
  r.total_burns = prod + eps.burns;
  r.total_tardos = prod + eps.tardos;
  r.total_dicks = prod + eps.dicks;

  r.satisfied_paper_i1 = r.exact_sum <= r.paper_bound_i1;
  r.satisfied_paper_i2 = r.exact_sum <= r.paper_bound_i2;
  r.satisfied_neumann = r.exact_sum <= r.total_neumann;
  r.satisfied_burns = r.exact_sum <= r.total_burns;
  r.satisfied_tardos = r.exact_sum <= r.total_tardos;
  r.satisfied_dicks = r.exact_sum <= r.total_dicks;

  if (!r.satisfied_paper_i1 || !r.satisfied_paper_i2) {
    throw std::logic_error("rank bound violated: implementation bug");
  }
  return r;
}

std::pair<BasedCore, BasedCore> family_pair(int k) {
  if (k < 2) throw std::invalid_argument("family_pair: k must be >= 2");
  LabeledGraph lg;
  for (int v = 0; v < k; ++v) lg.graph.add_vertex(v);
  for (int v = 0; v < k; ++v) lg.add_labeled_arc(v, v, 1);
  for (int v = 0; v + 1 < k; ++v) lg.add_labeled_arc(v, v + 1, 2);
  BasedCore core = canonical(BasedCore::from_graph(std::move(lg), 0, 2));
  return {core, core};
}

bool rank_identity_check(const BasedCore& core) {
  if (core.base_rank() != 2) {
    throw std::invalid_argument("rank_identity_check: base rank must be 2");
  }
  if (core.is_trivial()) {
    throw std::invalid_argument("rank_identity_check: trivial subgroup");
  }
  int H = static_cast<int>(core.graph().num_vertices());
  int n1 = H - core.arcs_with_label(1);
  int n2 = H - core.arcs_with_label(2);
  int rk = static_cast<int>(core.graph().num_arcs()) - H + 1;
  return rk == H - (n1 + n2) + 1;
}

}  // namespace stallings
