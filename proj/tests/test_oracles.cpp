#include "coverkit/oracles.hpp"

#include <random>

#include "doctest.h"

using namespace coverkit;

TEST_CASE("laurent polynomial algebra") {
  LaurentPoly t = LaurentPoly::monomial(1, 1);
  LaurentPoly one = LaurentPoly::monomial(1, 0);
  LaurentPoly p = t * t - t + one;
  CHECK(p.str() == "t^2 - t + 1");
  CHECK(p.min_exp() == 0);
  CHECK(p.max_exp() == 2);
  CHECK(p.eval_at_unit(1) == 1);
  CHECK(p.eval_at_unit(-1) == 3);
  CHECK((p - p).is_zero());
  CHECK((p - p).str() == "0");

  // Units multiply away under normalization.
  LaurentPoly shifted = p * LaurentPoly::monomial(-1, -3);
  CHECK(shifted.min_exp() == -3);
  CHECK(shifted.normalized() == p);
  CHECK(LaurentPoly::monomial(-5, 2).normalized().str() == "5");
}

TEST_CASE("alexander polynomials of the builtin knots") {
  CHECK(alexander_polynomial(builtin_diagram("unknot")).str() == "1");
  CHECK(alexander_polynomial(builtin_diagram("trefoil")).str() == "t^2 - t + 1");
  CHECK(alexander_polynomial(builtin_diagram("figure8")).str() == "t^2 - 3*t + 1");
  CHECK_THROWS_AS(alexander_polynomial(builtin_diagram("hopf")), NotAKnot);
  CHECK_THROWS_AS(alexander_polynomial(whitehead_diagram()), NotAKnot);
}

TEST_CASE("alexander polynomials evaluate to a unit at 1") {
  for (const char* name : {"unknot", "trefoil", "figure8"}) {
    Int at_one = alexander_polynomial(builtin_diagram(name)).eval_at_unit(1);
    CHECK(abs(at_one) == 1);
  }
  // A reversed-orientation trefoil gives the same normalized polynomial.
  LinkDiagram mirror = parse_braid({-1, -1, -1}, 2);
  CHECK(alexander_polynomial(mirror) == alexander_polynomial(builtin_diagram("trefoil")));
}

TEST_CASE("cyclic branched cover orders from the resultant") {
  LinkDiagram tref = builtin_diagram("trefoil");
  CHECK(cyclic_cover_h1_order(tref, 2) == 3);
  CHECK(cyclic_cover_h1_order(tref, 3) == 4);
  CHECK(cyclic_cover_h1_order(tref, 4) == 3);
  CHECK(cyclic_cover_h1_order(tref, 5) == 1);
  // At n = 6 the sixth root of unity is a zero of the polynomial: infinite H1.
  CHECK(cyclic_cover_h1_order(tref, 6) == 0);

  LinkDiagram fig8 = builtin_diagram("figure8");
  CHECK(cyclic_cover_h1_order(fig8, 2) == 5);
  CHECK(cyclic_cover_h1_order(fig8, 3) == 16);
  CHECK(cyclic_cover_h1_order(fig8, 4) == 45);
  CHECK(cyclic_cover_h1_order(fig8, 5) == 121);
  CHECK(cyclic_cover_h1_order(fig8, 6) == 320);

  CHECK(cyclic_cover_h1_order(builtin_diagram("unknot"), 4) == 1);
  CHECK_THROWS_AS(cyclic_cover_h1_order(tref, 1), Error);
}

TEST_CASE("checkerboard double-cover homology") {
  CHECK(goeritz_h1_double_cover(builtin_diagram("hopf")).str() == "Z/2");
  CHECK(goeritz_h1_double_cover(builtin_diagram("trefoil")).str() == "Z/3");
  CHECK(goeritz_h1_double_cover(builtin_diagram("figure8")).str() == "Z/5");
  CHECK(goeritz_h1_double_cover(whitehead_diagram()).str() == "Z/8");
  // The face bookkeeping reads braid columns, so provenance is required.
  LinkDiagram bare = parse_pd(pd_str(builtin_diagram("trefoil")));
  CHECK_THROWS_AS(goeritz_h1_double_cover(bare), Error);
}

TEST_CASE("minor-gcd invariants on fixed matrices") {
  CHECK(invariants_from_minor_gcds({}, 1) == AbelianInvariants{1, {}});
  CHECK(invariants_from_minor_gcds({{3}}, 1) == AbelianInvariants{0, {3}});
  CHECK(invariants_from_minor_gcds({{2, 0}, {0, 3}}, 2) == AbelianInvariants{0, {6}});
  CHECK(invariants_from_minor_gcds({{4, 0}, {0, 8}}, 2).str() == "Z/4 + Z/8");
  CHECK(invariants_from_minor_gcds({{0, 0}}, 2) == AbelianInvariants{2, {}});
  CHECK(invariants_from_minor_gcds({{2, 4}, {1, 2}}, 2).str() == "Z");
  CHECK(invariants_from_minor_gcds({{2, 0}, {0, 0}}, 2).str() == "Z + Z/2");
}

TEST_CASE("minor-gcd invariants agree with elimination on random matrices") {
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> entry(-5, 5), dim(1, 5);
  for (int trial = 0; trial < 150; ++trial) {
    int rows = dim(rng), cols = dim(rng);
    IntMat a(rows, std::vector<Int>(cols));
    for (auto& row : a)
      for (auto& x : row) x = entry(rng);
    CHECK(invariants_from_minor_gcds(a, cols) == abelian_invariants_of_matrix(a, cols));
  }
}
