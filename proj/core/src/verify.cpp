#include "stallings/verify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace stallings {

bool VerifyReport::all_pass() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.pass; });
}

Subgraph extend_to_spanning_tree(const Graph& g, const Subgraph& subtree,
                                 VertexId root) {
  Subgraph tree = subtree;
  tree.vertices.insert(root);
  std::deque<VertexId> queue(tree.vertices.begin(), tree.vertices.end());
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (DartId d : g.out_darts(v)) {
      VertexId w = g.dst(d);
      if (tree.vertices.count(w)) continue;
      tree.vertices.insert(w);
      tree.darts.insert(d);
      tree.darts.insert(g.inv(d));
      queue.push_back(w);
    }
  }
  return tree;
}

namespace {

struct Runner {
  const RunConfig& cfg;
  VerifyReport& report;

  void check(const std::string& name, bool pass, const std::string& detail) {
    report.properties.push_back({name, pass, detail});
  }

  template <typename F>
  void guarded(const std::string& name, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(name, false, std::string("exception: ") + e.what());
    }
  }
};

std::string show(const SpineInvariants& inv) {
  std::ostringstream out;
  out << "(H=" << inv.H << ",n1=" << inv.n1 << ",n2=" << inv.n2
      << ",rk=" << inv.rank << ")";
  return out.str();
}

void realization_example(Runner& r) {
  r.guarded("realization-example", [&] {
    Substitution phi1{{parse_word("a", 2), parse_word("b", 2)}};
    Substitution phi2{{parse_word("a", 2), parse_word("Ab", 2)}};
    // The subgroup <xy> of F(x,y), with x,y as generators 1,2.
    std::vector<Word> xy{{1, 2}};
    SpineInvariants i1 = spine_invariants(core_from_words(apply_substitution(xy, phi1), 2));
    SpineInvariants i2 = spine_invariants(core_from_words(apply_substitution(xy, phi2), 2));
    bool ok = i1 == SpineInvariants{2, 1, 1, 1} && i2 == SpineInvariants{1, 1, 0, 1} &&
              is_basis(phi1) && is_basis(phi2);
    r.check("realization-example", ok, show(i1) + " " + show(i2));
  });
}

void rank_identity_and_checkers(Runner& r) {
  r.guarded("rank-identity+checkers", [&] {
    Sampler sampler(r.cfg.seed);
    int identity_fail = 0, lemma_fail = 0, checker_fail = 0;
    for (int i = 0; i < r.cfg.count; ++i) {
      BasedCore core = sampler.random_core(2, r.cfg.max_words, r.cfg.max_len);
      SpineInvariants inv = spine_invariants(core);
      if (!rank_identity_check(core)) ++identity_fail;
      ExtendedSpine es = extended_spine(core);
      if (static_cast<int>(es.interior.size()) < inv.n1 + inv.n2) ++lemma_fail;
      if (checker_count(es) != inv.rank - 1) ++checker_fail;
    }
    std::ostringstream detail;
    detail << r.cfg.count << " cores, identity fails=" << identity_fail
           << ", interior-count fails=" << lemma_fail
           << ", checker fails=" << checker_fail;
    r.check("rank-identity", identity_fail == 0,
            std::to_string(r.cfg.count) + " cores checked");
    r.check("interior-vs-pairs", lemma_fail == 0, detail.str());
    r.check("checker-count", checker_fail == 0, detail.str());
  });
}

void nielsen_schreier(Runner& r) {
  r.guarded("nielsen-schreier", [&] {
    Sampler sampler(r.cfg.seed + 1);
    int fails = 0;
    const int cases = 200;
    for (int i = 0; i < cases; ++i) {
      int n = 1 + sampler.below(50);
      BasedCore core = sampler.random_complete_core(n, 2);
      std::vector<Word> basis = schreier_basis(core);
      bool ok = core.rank() == n + 1 &&
                static_cast<int>(basis.size()) == n + 1 &&
                core_from_words(basis, 2) == canonical(core);
      if (!ok) ++fails;
    }
    r.check("nielsen-schreier", fails == 0,
            std::to_string(cases) + " complete cores of index <= 50");
  });
}

void random_pair_bounds(Runner& r) {
  r.guarded("rank-bound-random-pairs", [&] {
    Sampler sampler(r.cfg.seed + 2);
    int fails = 0;
    for (int i = 0; i < r.cfg.count; ++i) {
      BasedCore a = sampler.random_core(2, r.cfg.max_words, r.cfg.max_len);
      BasedCore b = sampler.random_core(2, r.cfg.max_words, r.cfg.max_len);
      BoundReport br = compare(a, b);
      if (!br.satisfied_paper_i1 || !br.satisfied_paper_i2) ++fails;
      if (br.exact_sum > br.total_neumann) ++fails;  // classical sanity
      if (0 > br.inv1.H * br.inv2.H -
                  (br.inv1.H - br.inv1.n1) * (br.inv2.H - br.inv2.n1)) {
        ++fails;
      }
      r.report.bound_samples.push_back(br);
    }
    r.check("rank-bound-random-pairs", fails == 0,
            std::to_string(r.cfg.count) + " pairs, both i");
  });
}

void tight_witness(Runner& r) {
  r.guarded("tight-witness", [&] {
    BasedCore c = core_from_words({parse_word("a", 2), parse_word("baB", 2)}, 2);
    BoundReport br = compare(c, c);
    bool ok = br.exact_sum == 1 && br.paper_bound_i1 == 1 && br.paper_bound_i2 == 4 &&
              br.paper_bound_best == 1;
    r.report.bound_samples.push_back(br);
    std::ostringstream detail;
    detail << "exact=" << br.exact_sum << " i1=" << br.paper_bound_i1
           << " i2=" << br.paper_bound_i2;
    r.check("tight-witness", ok, detail.str());
  });
}

void family_separation(Runner& r) {
  r.guarded("family-separation", [&] {
    int fails = 0;
    for (int k = 2; k <= 50; ++k) {
      auto [a, b] = family_pair(k);
      SpineInvariants inv = spine_invariants(a);
      if (!(inv == SpineInvariants{k, 0, 1, k})) ++fails;
      BoundReport br = compare(a, b);
      int eps_paper_i1 = br.paper_bound_i1 - (k - 1) * (k - 1);
      if (eps_paper_i1 != 0) ++fails;
      if (br.exact_sum > (k - 1) * (k - 1)) ++fails;
      if (br.eps_neumann != (k - 1) * (k - 1)) ++fails;
      if (br.eps_burns != (k - 2) * (k - 1)) ++fails;
      if (br.eps_tardos != std::max((k - 2) * (k - 2) - 1, 0)) ++fails;
      if (br.eps_dicks != (k - 3) * (k - 3)) ++fails;
      r.report.bound_samples.push_back(br);
    }
    r.check("family-separation", fails == 0, "k = 2..50");
  });
}

void double_coset_oracle(Runner& r) {
  r.guarded("double-coset-oracle", [&] {
    Sampler sampler(r.cfg.seed + 3);
    std::vector<BasedCore> corpus;
    for (int i = 0; i < 100; ++i) {
      BasedCore c = sampler.random_core(2, 2, 5);
      if (c.graph().num_vertices() <= 6) corpus.push_back(std::move(c));
    }
    int fails = 0, pairs = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      for (std::size_t j = i; j < corpus.size(); ++j) {
        ++pairs;
        PullbackReport rep = fiber_product(corpus[i], corpus[j]);
        auto from_product = double_coset_reps(rep, corpus[i], corpus[j]);
        auto oracle = brute_force_double_coset_map(corpus[i], corpus[j], rep, 6);
        std::set<std::size_t> got, want;
        for (const auto& [w, comp] : from_product) got.insert(comp);
        for (const auto& [comp, w] : oracle) want.insert(comp);
        if (got != want) ++fails;
        for (const auto& [w, comp] : from_product) {
          if (detail::component_of_coset(rep, corpus[i], corpus[j], w) != comp) {
            ++fails;
          }
        }
      }
    }
    r.check("double-coset-oracle", fails == 0,
            std::to_string(pairs) + " pairs of small cores, maxLen 6");
  });
}

void hall_completion(Runner& r) {
  r.guarded("hall-completion", [&] {
    Sampler sampler(r.cfg.seed + 4);
    int fails = 0;
    const int cases = 200;
    for (int i = 0; i < cases; ++i) {
      std::vector<Word> gens;
      BasedCore core = core_from_words({}, 2);
      for (int tries = 0; tries < 100; ++tries) {
        gens = sampler.generator_set(2, 3, 6);
        core = core_from_words(gens, 2);
        if (core.graph().num_vertices() <= 8) break;
        if (tries == 99) {
          gens = {Word{1}};
          core = core_from_words(gens, 2);
        }
      }
      std::vector<Word> avoid;
      for (int tries = 0; tries < 200 && avoid.size() < 3; ++tries) {
        Word x = sampler.reduced_word(2, 6);
        if (!trace(core, x).closed()) avoid.push_back(x);
      }
      BasedCore complete = complete_to_finite_cover(core, avoid);
      bool ok = index(complete).has_value();
      for (const Word& g : gens) ok = ok && is_member(complete, g);
      for (const Word& x : avoid) ok = ok && !is_member(complete, x);
      // Free-factor check: the core's Schreier words extend to the
      // completion's along an extended spanning tree.
      Subgraph tree_a = spanning_tree(core.graph(), core.basepoint());
      Subgraph tree_g = extend_to_spanning_tree(complete.graph(), tree_a,
                                                complete.basepoint());
      std::vector<Word> basis_a = detail::schreier_words(core, tree_a);
      std::vector<Word> basis_g = schreier_basis(complete, tree_g);
      std::set<Word> all(basis_g.begin(), basis_g.end());
      for (const Word& w : basis_a) ok = ok && all.count(w) > 0;
      if (!ok) ++fails;
    }
    r.check("hall-completion", fails == 0, std::to_string(cases) + " instances");
  });
}

void galois_and_escape(Runner& r) {
  r.guarded("galois-true-kernels", [&] {
    int fails = 0, cases = 0;
    // Regular actions: stabilizer = kernel, always normal.
    for (int n = 2; n <= 7; ++n) {
      std::vector<int> shift(n), id(n);
      for (int v = 0; v < n; ++v) {
        shift[v] = (v + 1) % n;
        id[v] = v;
      }
      ++cases;
      if (!is_galois(complete_core_from_permutations({shift, id})).galois) ++fails;
      ++cases;
      if (!is_galois(complete_core_from_permutations({shift, shift})).galois) ++fails;
    }
    {
      // Klein four group: a = xor 1, b = xor 2.
      std::vector<int> xa{1, 0, 3, 2}, xb{2, 3, 0, 1};
      ++cases;
      if (!is_galois(complete_core_from_permutations({xa, xb})).galois) ++fails;
    }
    r.check("galois-true-kernels", fails == 0, std::to_string(cases) + " kernels");
  });

  r.guarded("galois-false-witnesses", [&] {
    Sampler sampler(r.cfg.seed + 5);
    int found = 0, fails = 0, attempts = 0;
    while (found < 20 && attempts < 2000) {
      ++attempts;
      BasedCore core = sampler.random_complete_core(3 + sampler.below(6), 2);
      GaloisResult g = is_galois(core);
      if (g.galois) continue;
      ++found;
      bool ok = trace_from(core.labeled(), core.basepoint(), g.witness).closed() &&
                !trace_from(core.labeled(), g.fiber_vertex, g.witness).closed();
      if (!ok) ++fails;
    }
    r.check("galois-false-witnesses", found >= 20 && fails == 0,
            std::to_string(found) + " non-normal cores, witnesses verified");
  });

  r.guarded("escape-witness", [&] {
    Sampler sampler(r.cfg.seed + 6);
    int fails = 0, cases = 0, attempts = 0;
    while (cases < 100 && attempts < 10000) {
      ++attempts;
      BasedCore core = sampler.random_core(2, r.cfg.max_words, r.cfg.max_len);
      if (index(core)) continue;  // witness may not exist at finite index
      Word w = sampler.reduced_word(2, r.cfg.max_len);
      ++cases;
      Word g = escape_witness(core, w);
      if (trace(core, conjugate_word(g, w)).closed()) ++fails;
    }
    r.check("escape-witness", cases == 100 && fails == 0,
            std::to_string(cases) + " infinite-index instances");
  });
}

void excision(Runner& r) {
  r.guarded("lattice-excision", [&] {
    Sampler sampler(r.cfg.seed + 7);
    int fails = 0;
    const int cases = 50;
    for (int i = 0; i < cases; ++i) {
      Graph base = sampler.random_rank2_base(2 + sampler.below(5));
      Subgraph tree = sampler.random_spanning_tree(base, 0);
      VertexId v = sampler.below(static_cast<int>(base.vertices().size()));
      std::vector<Path> loops;
      int nloops = 1 + sampler.below(3);
      for (int l = 0; l < nloops; ++l) {
        loops.push_back(sampler.random_closed_path(base, tree, v, sampler.below(8)));
      }
      ExcisionResult ex = lattice_excision(base, tree, loops);
      int excised_rank = core_from_words(ex.words, 2).rank();

      // Direct oracle: fold the loops over the alphabet of all base arcs.
      std::map<DartId, int> arc_index;
      int next = 1;
      for (DartId d : base.darts()) {
        if (d < base.inv(d)) arc_index[d] = next++;
      }
      std::vector<Word> direct;
      for (const Path& p : loops) {
        Word w;
        for (DartId d : p.darts) {
          auto it = arc_index.find(d);
          if (it != arc_index.end()) {
            w.push_back(it->second);
          } else {
            w.push_back(-arc_index.at(base.inv(d)));
          }
        }
        direct.push_back(reduce_word(w));
      }
      int direct_rank = core_from_words(direct, next - 1).rank();
      if (excised_rank != direct_rank) ++fails;
    }
    r.check("lattice-excision", fails == 0, std::to_string(cases) + " base graphs");
  });
}

}  // namespace

VerifyReport run_verification(const RunConfig& cfg) {
  VerifyReport report;
  Runner r{cfg, report};
  realization_example(r);
  rank_identity_and_checkers(r);
  nielsen_schreier(r);
  random_pair_bounds(r);
  tight_witness(r);
  family_separation(r);
  double_coset_oracle(r);
  hall_completion(r);
  galois_and_escape(r);
  excision(r);
  return report;
}

}  // namespace stallings
