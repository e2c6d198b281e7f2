#ifndef STALLINGS_BOUNDS_HPP
#define STALLINGS_BOUNDS_HPP

#include <utility>

#include "stallings/covering.hpp"
#include "stallings/pullback.hpp"

namespace stallings {

// The classical error terms for the strengthened Hanna Neumann sum,
// in chronological order.  All exact integers.
struct ClassicalEps {
  int neumann = 0;
  int burns = 0;
  int tardos = 0;
  int dicks = 0;
};

ClassicalEps classical_bounds(int rk1, int rk2);

// (rk1-1)(rk2-1) + H1·H2 - (H1-n1i)(H2-n2i) for i in {1, 2}.
int paper_bound(const SpineInvariants& inv1, const SpineInvariants& inv2, int i);

struct BoundReport {
  SpineInvariants inv1, inv2;
  // Σ (rk(A1 ∩ A2^g) - 1) over double coset representatives, computed from
  // the fiber product.
  int exact_sum = 0;
  int paper_bound_i1 = 0;
  int paper_bound_i2 = 0;
  int paper_bound_best = 0;
  int eps_neumann = 0, eps_burns = 0, eps_tardos = 0, eps_dicks = 0;
  // Classical totals: (rk1-1)(rk2-1) + ε.
  int total_neumann = 0, total_burns = 0, total_tardos = 0, total_dicks = 0;
  bool satisfied_paper_i1 = false, satisfied_paper_i2 = false;
  bool satisfied_neumann = false, satisfied_burns = false;
  bool satisfied_tardos = false, satisfied_dicks = false;
};

// Assembles the full comparison for two non-trivial subgroups over the
// rank-2 bouquet.  Throws std::logic_error if the exact sum ever exceeded
// the bound (that would be an implementation bug, not data).
BoundReport compare(const BasedCore& c1, const BasedCore& c2);

// The witness family: k vertices on an x2-labeled path, an x1-loop at every
// vertex, basepoint at an end.  Invariants (H, n1, n2, rank) = (k, 0, 1, k).
// Both returned cores are equal.  Requires k >= 2.
std::pair<BasedCore, BasedCore> family_pair(int k);

// Tripwire: rank == H - (n1 + n2) + 1, recomputed from scratch.
bool rank_identity_check(const BasedCore& core);

}  // namespace stallings

#endif
