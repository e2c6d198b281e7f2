#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stallings/covering.hpp"
#include "stallings/sample.hpp"
#include "stallings/verify.hpp"
#include "support/oracles.hpp"

using namespace stallings;

namespace {

BasedCore core_of(std::initializer_list<const char*> gens) {
  std::vector<Word> words;
  for (const char* g : gens) words.push_back(parse_word(g, 2));
  return core_from_words(words, 2);
}

}  // namespace

TEST_CASE("index") {
  CHECK(index(core_of({"a", "b"})) == 1);
  CHECK(!index(core_of({"ab"})));
  SUBCASE("index-2 subgroup <a^2, b, aba^-1>") {
    BasedCore c = core_of({"aa", "b", "abA"});
    CHECK(index(c) == 2);
    CHECK(c.graph().num_vertices() == 2);
  }
}

TEST_CASE("spine invariants") {
  CHECK(spine_invariants(core_of({"ab"})) == SpineInvariants{2, 1, 1, 1});
  CHECK(spine_invariants(core_of({"b"})) == SpineInvariants{1, 1, 0, 1});
  CHECK(spine_invariants(core_of({"a", "baB"})) == SpineInvariants{2, 0, 1, 2});
  // The literal word bab (no inversion) folds to a three-vertex core.
  CHECK(spine_invariants(core_of({"a", "bab"})) == SpineInvariants{3, 1, 1, 2});
  CHECK_THROWS_AS(spine_invariants(core_from_words({}, 2)), std::invalid_argument);
  CHECK_THROWS_AS(spine_invariants(core_from_words({Word{1}}, 1)),
                  std::invalid_argument);
}

TEST_CASE("extended spine") {
  SUBCASE("<a>: one interior vertex, two tips, one x2-pair") {
    ExtendedSpine es = extended_spine(core_of({"a"}));
    CHECK(es.interior.size() == 1);
    CHECK(es.boundary.size() == 2);
    REQUIRE(es.pairs.size() == 1);
    CHECK(es.pairs[0].label == 2);
    CHECK(es.pairs[0].gamma.size() == 1);
    CHECK(checker_count(es) == 0);
  }
  SUBCASE("<ab>: two interior, four tips, one pair per label") {
    ExtendedSpine es = extended_spine(core_of({"ab"}));
    CHECK(es.interior.size() == 2);
    CHECK(es.boundary.size() == 4);
    int n1 = 0, n2 = 0;
    for (const XiPair& p : es.pairs) (p.label == 1 ? n1 : n2)++;
    CHECK(n1 == 1);
    CHECK(n2 == 1);
    CHECK(checker_count(es) == 0);
  }
  SUBCASE("<a, bab^-1>: one checker") {
    ExtendedSpine es = extended_spine(core_of({"a", "baB"}));
    CHECK(checker_count(es) == 1);
  }
  SUBCASE("every vertex sees 0 or 3 missing directions") {
    ExtendedSpine es = extended_spine(core_of({"a", "baB", "bbb"}));
    for (VertexId v : es.interior) {
      CHECK(es.graph.graph.out_darts(v).size() == 4);
    }
    for (VertexId v : es.boundary) {
      CHECK(es.graph.graph.out_darts(v).size() == 1);
    }
  }
  SUBCASE("boundary vertices pair up exactly once") {
    ExtendedSpine es = extended_spine(core_of({"ab", "ba"}));
    std::set<VertexId> seen;
    for (const XiPair& p : es.pairs) {
      CHECK(seen.insert(p.tip_in).second);
      CHECK(seen.insert(p.tip_out).second);
    }
    CHECK(seen == es.boundary);
  }
  SUBCASE("same-label gamma paths are vertex disjoint") {
    Sampler sampler(43);
    for (int i = 0; i < 200; ++i) {
      ExtendedSpine es = extended_spine(sampler.random_core(2, 4, 10));
      for (int lab = 1; lab <= 2; ++lab) {
        std::set<VertexId> seen;
        for (const XiPair& p : es.pairs) {
          if (p.label != lab) continue;
          for (VertexId v : p.gamma) CHECK(seen.insert(v).second);
        }
      }
    }
  }
}

TEST_CASE("rank identity and checker lemmas on a random corpus") {
  Sampler sampler(47);
  for (int i = 0; i < 1000; ++i) {
    BasedCore c = sampler.random_core(2, 5, 12);
    SpineInvariants inv = spine_invariants(c);
    CHECK(inv.rank == inv.H - (inv.n1 + inv.n2) + 1);
    ExtendedSpine es = extended_spine(c);
    CHECK(static_cast<int>(es.interior.size()) >= inv.n1 + inv.n2);
    CHECK(checker_count(es) == inv.rank - 1);
  }
}

TEST_CASE("is_galois") {
  SUBCASE("the whole group") {
    CHECK(is_galois(core_of({"a", "b"})).galois);
  }
  SUBCASE("mod-2 kernel: crossing a-arcs, b-loops") {
    BasedCore c = complete_core_from_permutations({{1, 0}, {0, 1}});
    CHECK(c.graph().num_vertices() == 2);
    CHECK(is_galois(c).galois);
  }
  SUBCASE("an index-3 non-normal stabilizer") {
    // sigma_a = (0 1), sigma_b = (0 2): transitive, stabilizers differ.
    BasedCore c = complete_core_from_permutations({{1, 0, 2}, {2, 1, 0}});
    GaloisResult g = is_galois(c);
    REQUIRE(!g.galois);
    CHECK(trace_from(c.labeled(), c.basepoint(), g.witness).closed());
    CHECK(!trace_from(c.labeled(), g.fiber_vertex, g.witness).closed());
  }
  SUBCASE("a normal index-3 stabilizer is Galois") {
    // sigma_a = 3-cycle, sigma_b = identity: kernel of a -> 1, b -> 0 mod 3.
    BasedCore c = complete_core_from_permutations({{1, 2, 0}, {0, 1, 2}});
    CHECK(is_galois(c).galois);
  }
  SUBCASE("infinite index is rejected") {
    CHECK_THROWS_AS(is_galois(core_of({"ab"})), std::invalid_argument);
  }
  SUBCASE("negative answers violate all-or-none lifting directly") {
    Sampler sampler(53);
    int negatives = 0;
    while (negatives < 20) {
      BasedCore c = sampler.random_complete_core(3 + sampler.below(5), 2);
      GaloisResult g = is_galois(c);
      if (g.galois) continue;
      ++negatives;
      // The witness lifts closed at the basepoint, non-closed at the
      // reported fiber vertex.
      CHECK(trace_from(c.labeled(), c.basepoint(), g.witness).closed());
      CHECK(!trace_from(c.labeled(), g.fiber_vertex, g.witness).closed());
    }
  }
  SUBCASE("positive answers satisfy all-or-none lifting on sampled words") {
    Sampler sampler(59);
    int positives = 0;
    int attempts = 0;
    while (positives < 8 && attempts < 4000) {
      ++attempts;
      BasedCore c = sampler.random_complete_core(2 + sampler.below(4), 2);
      if (!is_galois(c).galois) continue;
      ++positives;
      for (int j = 0; j < 50; ++j) {
        Word w = sampler.reduced_word(2, 8);
        int closed = 0;
        for (VertexId v : c.graph().vertices()) {
          if (trace_from(c.labeled(), v, w).closed()) ++closed;
        }
        bool all_or_none =
            closed == 0 || closed == static_cast<int>(c.graph().num_vertices());
        CHECK(all_or_none);
      }
    }
    CHECK(positives == 8);
  }
}

TEST_CASE("complete_to_finite_cover") {
  SUBCASE("<a> avoiding b") {
    BasedCore c = core_of({"a"});
    BasedCore g = complete_to_finite_cover(c, {parse_word("b", 2)});
    CHECK(index(g) == 2);
    CHECK(is_member(g, parse_word("a", 2)));
    CHECK(!is_member(g, parse_word("b", 2)));
  }
  SUBCASE("<ab> with nothing to avoid completes at index 2") {
    BasedCore g = complete_to_finite_cover(core_of({"ab"}), {});
    CHECK(index(g) == 2);
    CHECK(is_member(g, parse_word("ab", 2)));
  }
  SUBCASE("trivial avoided word is an error") {
    CHECK_THROWS_AS(complete_to_finite_cover(core_of({"ab"}), {parse_word("aA", 2)}),
                    std::invalid_argument);
  }
  SUBCASE("member avoided word is an error") {
    CHECK_THROWS_AS(complete_to_finite_cover(core_of({"ab"}), {parse_word("ab", 2)}),
                    std::invalid_argument);
  }
  SUBCASE("the original core embeds identically") {
    BasedCore c = core_of({"ab", "ba"});
    BasedCore g = complete_to_finite_cover(c, {parse_word("aab", 2)});
    for (DartId d : c.graph().darts()) {
      CHECK(g.graph().has_dart(d));
      CHECK(g.graph().src(d) == c.graph().src(d));
      CHECK(g.labeled().label(d) == c.labeled().label(d));
    }
    CHECK(g.basepoint() == c.basepoint());
  }
  SUBCASE("Schreier extension on random instances") {
    Sampler sampler(61);
    for (int i = 0; i < 100; ++i) {
      std::vector<Word> gens = sampler.generator_set(2, 3, 6);
      BasedCore core = core_from_words(gens, 2);
      std::vector<Word> avoid;
      for (int tries = 0; tries < 100 && avoid.size() < 3; ++tries) {
        Word x = sampler.reduced_word(2, 6);
        if (!trace(core, x).closed()) avoid.push_back(x);
      }
      BasedCore complete = complete_to_finite_cover(core, avoid);
      REQUIRE(index(complete).has_value());
      for (const Word& g : gens) CHECK(is_member(complete, reduce_word(g)));
      for (const Word& x : avoid) CHECK(!is_member(complete, x));
      Subgraph tree_a = spanning_tree(core.graph(), core.basepoint());
      Subgraph tree_g =
          extend_to_spanning_tree(complete.graph(), tree_a, complete.basepoint());
      std::vector<Word> basis_a = detail::schreier_words(core, tree_a);
      std::vector<Word> basis_g = schreier_basis(complete, tree_g);
      std::set<Word> all(basis_g.begin(), basis_g.end());
      for (const Word& w : basis_a) CHECK(all.count(w) == 1);
    }
  }
}

TEST_CASE("schreier_basis") {
  SUBCASE("whole group core gives the generators") {
    std::vector<Word> basis = schreier_basis(core_of({"a", "b"}));
    CHECK(basis == std::vector<Word>{Word{1}, Word{2}});
  }
  SUBCASE("index-2 kernel core gives 3 words") {
    BasedCore c = complete_core_from_permutations({{1, 0}, {0, 1}});
    CHECK(schreier_basis(c).size() == 3);
  }
  SUBCASE("index-3 complete core gives 4 words") {
    BasedCore c = complete_core_from_permutations({{1, 2, 0}, {0, 1, 2}});
    CHECK(schreier_basis(c).size() == 4);
  }
  SUBCASE("infinite index throws") {
    CHECK_THROWS_AS(schreier_basis(core_of({"ab"})), std::invalid_argument);
  }
  SUBCASE("Nielsen-Schreier rank and canonical refold") {
    Sampler sampler(67);
    for (int i = 0; i < 100; ++i) {
      int n = 1 + sampler.below(50);
      BasedCore c = sampler.random_complete_core(n, 2);
      std::vector<Word> basis = schreier_basis(c);
      CHECK(c.rank() == n + 1);
      CHECK(static_cast<int>(basis.size()) == n + 1);
      CHECK(core_from_words(basis, 2) == canonical(c));
    }
  }
}

TEST_CASE("escape_witness") {
  SUBCASE("<a> with w = a is escaped by b") {
    Word g = escape_witness(core_of({"a"}), parse_word("a", 2));
    CHECK(g == parse_word("b", 2));
  }
  SUBCASE("<ab> with w = ab verifies by trace") {
    BasedCore c = core_of({"ab"});
    Word w = parse_word("ab", 2);
    Word g = escape_witness(c, w);
    CHECK(!trace(c, conjugate_word(g, w)).closed());
  }
  SUBCASE("trivial word is an error") {
    CHECK_THROWS_AS(escape_witness(core_of({"a"}), Word{}), std::invalid_argument);
  }
  SUBCASE("finite index is an error") {
    BasedCore c = complete_core_from_permutations({{1, 0}, {0, 1}});
    CHECK_THROWS_AS(escape_witness(c, parse_word("aa", 2)), std::invalid_argument);
  }
  SUBCASE("random instances verify") {
    Sampler sampler(71);
    int cases = 0;
    while (cases < 100) {
      BasedCore c = sampler.random_core(2, 5, 12);
      if (index(c)) continue;
      Word w = sampler.reduced_word(2, 12);
      ++cases;
      Word g = escape_witness(c, w);
      CHECK(!trace(c, conjugate_word(g, w)).closed());
    }
  }
}
