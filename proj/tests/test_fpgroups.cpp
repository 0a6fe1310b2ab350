#include "doctest.h"

#include <random>

#include "coverkit/fpgroup.hpp"
#include "coverkit/snf.hpp"

using namespace coverkit;

TEST_CASE("free reduction and word algebra") {
  CHECK(free_reduce({1, -1}) == Word{});
  CHECK(free_reduce({1, 2, -2, -1, 3}) == Word{3});
  CHECK(free_reduce({1, 2, -1}) == Word({1, 2, -1}));
  CHECK(invert_word({1, 2, -3}) == Word({3, -2, -1}));
  CHECK(concat({1, 2}, {-2, 3}) == Word({1, 3}));
  CHECK(cyclic_reduce({1, 2, 3, -2, -1}) == Word{3});
  CHECK(cyclic_reduce({1, -1}) == Word{});
}

TEST_CASE("word evaluation folds left to right") {
  std::vector<Permutation> imgs = {parse_cycles("(1 2)", 3), parse_cycles("(2 3)", 3)};
  // "a b" means a then b.
  CHECK(evaluate_word({1, 2}, imgs, 3) == imgs[0] * imgs[1]);
  CHECK(evaluate_word({}, imgs, 3).is_identity());
  CHECK(evaluate_word({2, -2}, imgs, 3).is_identity());
  CHECK(evaluate_word({1, 1}, imgs, 3).is_identity());
}

TEST_CASE("presentation text round-trip") {
  FpGroup g = parse_fpgroup("gens: a b; rels: a b A B, b b b");
  CHECK(g.rank() == 2);
  REQUIRE(g.relators.size() == 2);
  CHECK(g.relators[0] == Word({1, 2, -1, -2}));
  CHECK(g.relators[1] == Word({2, 2, 2}));
  CHECK(fpgroup_str(g) == "gens: a b; rels: a b A B, b b b");

  FpGroup free1 = parse_fpgroup("gens: a; rels:");
  CHECK(free1.rank() == 1);
  CHECK(free1.relators.empty());

  FpGroup named = parse_fpgroup("gens: x1 x2; rels: x1 x2 X1");
  CHECK(named.relators[0] == Word({1, 2, -1}));
  CHECK(word_str(named, {1, -2}) == "x1 X2");

  CHECK_THROWS_AS(parse_fpgroup("gens: a a; rels:"), Error);
  CHECK_THROWS_AS(parse_fpgroup("gens: a; rels: b"), Error);
  CHECK_THROWS_AS(parse_fpgroup("no sections here"), Error);
}

TEST_CASE("determinant is exact") {
  CHECK(det({}) == 1);
  CHECK(det({{5}}) == 5);
  CHECK(det({{1, 2}, {3, 4}}) == -2);
  CHECK(det({{0, 1}, {1, 0}}) == -1);
  CHECK(det({{2, 0, 0}, {0, 3, 0}, {0, 0, 4}}) == 24);
  CHECK(det({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
}

TEST_CASE("smith normal form on fixed examples") {
  SmithResult s = smith_normal_form({{2, 0}, {0, 3}});
  CHECK(s.d[0][0] == 1);
  CHECK(s.d[1][1] == 6);

  SmithResult id3 = smith_normal_form(identity_mat(3));
  for (int i = 0; i < 3; ++i) CHECK(id3.d[i][i] == 1);

  SmithResult z = smith_normal_form({{0}});
  CHECK(z.d[0][0] == 0);
}

TEST_CASE("smith certificate on random matrices") {
  std::mt19937 rng(123);
  std::uniform_int_distribution<int> entry(-5, 5), dim(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t m = dim(rng), n = dim(rng);
    IntMat a(m, std::vector<Int>(n));
    for (auto& row : a)
      for (auto& x : row) x = entry(rng);
    SmithResult s = smith_normal_form(a);
    CHECK(mat_mul(mat_mul(s.u, a), s.v) == s.d);
    CHECK(abs(det(s.u)) == 1);
    CHECK(abs(det(s.v)) == 1);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) CHECK(s.d[i][j] == 0);
    Int prev = 0;
    for (std::size_t k = 0; k < m && k < n; ++k) {
      const Int& cur = s.d[k][k];
      CHECK(cur >= 0);
      if (k > 0) {
        if (prev == 0)
          CHECK(cur == 0);
        else
          CHECK(cur % prev == 0);
      }
      prev = cur;
    }
  }
}

TEST_CASE("abelian invariants from matrices") {
  // One generator, no relations.
  CHECK(abelian_invariants_of_matrix({}, 1) == AbelianInvariants{1, {}});
  // <a | a^3> abelianized.
  CHECK(abelian_invariants_of_matrix({{3}}, 1) == AbelianInvariants{0, {3}});
  CHECK(abelian_invariants_of_matrix({{0}}, 1) == AbelianInvariants{1, {}});
  CHECK(abelian_invariants_of_matrix({{2, 0}, {0, 3}}, 2).trivial() ==
        false);
  CHECK(abelian_invariants_of_matrix({{2, 0}, {0, 3}}, 2).str() == "Z/6");
  CHECK(abelian_invariants_of_matrix({{1, 0}, {0, 1}}, 2).trivial());
  CHECK(abelian_invariants_of_matrix({{4, 0}, {0, 8}}, 2).str() == "Z/4 + Z/8");
  CHECK(abelian_invariants_of_matrix({{4, 0}, {0, 8}}, 2).order() == 32);
  CHECK(abelian_invariants_of_matrix({{2, 0}}, 2).order() == 0);
  CHECK(AbelianInvariants{2, {Int(4)}}.str() == "Z^2 + Z/4");
}

#include "coverkit/fpgroups.hpp"

namespace {

Monodromy all_arcs(const LinkDiagram& d, const Permutation& p) {
  std::map<int, Permutation> a;
  for (int arc : d.arcs()) a.emplace(arc, p);
  return make_monodromy(d, p.degree(), a);
}

Permutation full_cycle(int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = (i + 1) % n + 1;
  return Permutation(im);
}

}  // namespace

TEST_CASE("coset tables from monodromies act by the arc images") {
  Monodromy m = all_arcs(builtin_diagram("trefoil"), parse_cycles("(1 2)", 2));
  CosetTable t = coset_table_from_monodromy(m);
  CHECK(t.n == 2);
  CHECK(t.rank() == 3);
  CHECK(t.act(1, 1) == 2);
  CHECK(t.act(2, -1) == 1);
  CHECK_THROWS_AS(t.act(1, 0), Error);
  CHECK_THROWS_AS(t.act(1, 4), Error);
  CHECK_THROWS_AS(t.act(3, 1), Error);

  std::map<int, Permutation> split = {{1, Permutation::identity(2)},
                                      {2, Permutation::identity(2)},
                                      {3, Permutation::identity(2)}};
  Monodromy bad = make_monodromy(builtin_diagram("trefoil"), 2, split);
  CHECK_THROWS_AS(coset_table_from_monodromy(bad), NotTransitive);
}

TEST_CASE("index-n subgroups of free groups have rank n(r-1)+1") {
  // Nielsen-Schreier via the subgroup presentation: no relators survive.
  FpGroup f2 = parse_fpgroup("gens: a b; rels:");
  for (int n : {2, 3, 5}) {
    CosetTable t{n, {full_cycle(n), Permutation::identity(n)}};
    FpGroup sub = reidemeister_schreier(f2, t);
    CHECK(sub.rank() == n + 1);
    CHECK(sub.relators.empty());
  }
  CosetTable mismatched{2, {full_cycle(2)}};
  CHECK_THROWS_AS(SchreierSystem(f2, mismatched), IncompleteTable);
  CosetTable stuck{3, {Permutation::identity(3), Permutation::identity(3)}};
  CHECK_THROWS_AS(SchreierSystem(f2, stuck), NotTransitive);
}

TEST_CASE("rewriting traces cosets and rejects open paths") {
  FpGroup f1 = parse_fpgroup("gens: a; rels:");
  CosetTable t{3, {full_cycle(3)}};
  SchreierSystem sys(f1, t);
  CHECK(sys.cosets() == 3);
  CHECK(sys.sub_rank() == 1);
  // a^3 stabilizes every coset; a alone does not.
  CHECK(free_reduce(sys.rewrite({1, 1, 1}, 1)).size() == 1);
  CHECK_THROWS_AS(sys.rewrite({1}, 1), Error);
}

TEST_CASE("tietze simplification examples") {
  // A length-2 relator identifies two generators.
  FpGroup g = tietze_simplify(parse_fpgroup("gens: a b; rels: a b, a a a"));
  CHECK(g.rank() == 1);
  REQUIRE(g.relators.size() == 1);
  CHECK(g.relators[0].size() == 3);
  // Length-1 relators kill generators outright.
  CHECK(tietze_simplify(parse_fpgroup("gens: a b c; rels: b, a c")).rank() == 1);
  CHECK(tietze_simplify(parse_fpgroup("gens: a; rels: a")).rank() == 0);
  // A generator occurring exactly once goes away with its relator.
  FpGroup once = tietze_simplify(parse_fpgroup("gens: a b; rels: a a b"));
  CHECK(once.rank() == 1);
  CHECK(once.relators.empty());
}

TEST_CASE("branched covers of the unknot are spheres") {
  LinkDiagram d = builtin_diagram("unknot");
  for (int n : {2, 3, 6}) {
    Monodromy m = all_arcs(d, full_cycle(n));
    FpGroup pi1 = branched_cover_pi1(m);
    CHECK(pi1.rank() == 0);
    CHECK(cover_h1(m).trivial());
  }
}

TEST_CASE("cyclic branched covers of the trefoil") {
  LinkDiagram d = builtin_diagram("trefoil");
  // Double cover: the lens space L(3,1).
  CHECK(cover_h1(all_arcs(d, full_cycle(2))).str() == "Z/3");
  // Triple cover: the quaternion space.
  AbelianInvariants h3 = cover_h1(all_arcs(d, full_cycle(3)));
  CHECK(h3.rank == 0);
  CHECK(h3.order() == 4);
  // Degrees 4 and 5: orders 3 and 1.
  CHECK(cover_h1(all_arcs(d, full_cycle(4))).order() == 3);
  CHECK(cover_h1(all_arcs(d, full_cycle(5))).trivial());
}

TEST_CASE("cyclic double covers of figure-eight and whitehead") {
  CHECK(cover_h1(all_arcs(builtin_diagram("figure8"), parse_cycles("(1 2)", 2))).str() ==
        "Z/5");
  CHECK(cover_h1(all_arcs(whitehead_diagram(), parse_cycles("(1 2)", 2))).str() == "Z/8");
}

TEST_CASE("the three-fold simple cover of the trefoil is a sphere") {
  LinkDiagram d = builtin_diagram("trefoil");
  std::map<int, Permutation> a = {{1, parse_cycles("(1 2)", 3)},
                                  {2, parse_cycles("(1 3)", 3)},
                                  {3, parse_cycles("(2 3)", 3)}};
  Monodromy m = make_monodromy(d, 3, a);
  CHECK(cover_h1(m).trivial());
  CHECK(try_trivialize(branched_cover_pi1(m)).verdict == Triviality::Trivial);
}

TEST_CASE("boundary tori bound the unbranched cover's first betti number") {
  // Half of the boundary homology survives in the manifold, so the rank of
  // the exterior cover's H1 is at least the number of meridian cycles.
  LinkDiagram d = builtin_diagram("trefoil");
  std::map<int, Permutation> a = {{1, parse_cycles("(1 2)", 3)},
                                  {2, parse_cycles("(1 3)", 3)},
                                  {3, parse_cycles("(2 3)", 3)}};
  Monodromy m = make_monodromy(d, 3, a);
  WirtingerData w = wirtinger(d);
  FpGroup ext = reidemeister_schreier(w.group, coset_table_from_monodromy(m));
  int tori = preimage_components(m, 0);
  CHECK(abelianization(ext).rank >= tori);
}

TEST_CASE("full reports carry homology") {
  Monodromy m = all_arcs(whitehead_diagram(), parse_cycles("(1 2)", 2));
  CoverReport r = full_report(m);
  REQUIRE(r.h1.has_value());
  CHECK(r.h1->str() == "Z/8");
  CHECK(r.transitive);
}

TEST_CASE("orbifold groups abelianize to the cyclic data") {
  OrbifoldGroupSpec unknot{builtin_diagram("unknot"), {5}};
  CHECK(abelianization(orbifold_group(unknot)).str() == "Z/5");

  OrbifoldGroupSpec wh{whitehead_diagram(), {4, 8}};
  FpGroup u = orbifold_group(wh);
  AbelianInvariants inv = abelianization(u);
  CHECK(inv.rank == 0);
  CHECK(inv.torsion == std::vector<Int>{4, 8});

  CHECK_THROWS_AS(orbifold_group({whitehead_diagram(), {4}}), Error);
  CHECK_THROWS_AS(orbifold_group({whitehead_diagram(), {4, 0}}), Error);
}

TEST_CASE("try_trivialize reaches all three verdicts") {
  TrivialityReport t = try_trivialize(parse_fpgroup("gens: a b; rels: a b, b"));
  CHECK(t.verdict == Triviality::Trivial);
  CHECK(triviality_name(t.verdict) == "trivial");

  TrivialityReport ab = try_trivialize(parse_fpgroup("gens: a; rels: a a a"));
  CHECK(ab.verdict == Triviality::NonTrivial);
  CHECK(ab.witness.find("Z/3") != std::string::npos);

  // The icosahedral group: perfect, so only the quotient search can see it.
  TrivialityReport icosa =
      try_trivialize(parse_fpgroup("gens: a b; rels: a a, b b b, a b a b a b a b a b"));
  CHECK(icosa.verdict == Triviality::NonTrivial);
  CHECK(icosa.witness.find("order 60") != std::string::npos);

  // Two disjoint icosahedral factors push the rank past the quotient-search
  // budget, and nothing else can decide.
  TrivialityReport wide = try_trivialize(parse_fpgroup(
      "gens: a b c d; rels: a a, b b b, a b a b a b a b a b, c c, d d d, c d c d c d c d c d"));
  CHECK(wide.verdict == Triviality::Unknown);
}
