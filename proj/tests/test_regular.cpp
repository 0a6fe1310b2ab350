#include "coverkit/regular.hpp"

#include <algorithm>

#include "doctest.h"

using namespace coverkit;

namespace {

Monodromy all_arcs(const LinkDiagram& d, const Permutation& p) {
  std::map<int, Permutation> a;
  for (int arc : d.arcs()) a.emplace(arc, p);
  return make_monodromy(d, p.degree(), a);
}

Monodromy trefoil_coloring() {
  LinkDiagram d = builtin_diagram("trefoil");
  std::map<int, Permutation> a = {{1, parse_cycles("(1 2)", 3)},
                                  {2, parse_cycles("(1 3)", 3)},
                                  {3, parse_cycles("(2 3)", 3)}};
  return make_monodromy(d, 3, a);
}

}  // namespace

TEST_CASE("regular cover of the whitehead double cover is itself") {
  Monodromy m = all_arcs(whitehead_diagram(), parse_cycles("(1 2)", 2));
  RegularCoverData rc = associated_regular(m);
  CHECK(rc.image_group.order() == 2);
  CHECK(rc.regular.degree == 2);
  // Right translation by an involution in Z/2 is again an involution.
  for (int arc : rc.regular.diagram.arcs())
    CHECK(rc.regular.at(arc).is_transposition());
  CHECK(is_regular(m));
  CHECK(is_regular(rc.regular));
}

TEST_CASE("cyclic covers are already regular") {
  LinkDiagram d = builtin_diagram("trefoil");
  std::vector<int> im = {2, 3, 4, 5, 6, 7, 8, 1};
  Monodromy m = all_arcs(d, Permutation(im));
  CHECK(is_regular(m));
  RegularCoverData rc = associated_regular(m);
  CHECK(rc.image_group.order() == 8);
  CHECK(rc.regular.degree == 8);
  RegularIndexReport rep = verify_regular_indices(rc);
  CHECK(rep.group_order == 8);
  REQUIRE(rep.components.size() == 1);
  CHECK(rep.components[0].index == 8);
  CHECK(rep.components[0].sheets == 1);
}

TEST_CASE("the trefoil coloring generates the full symmetric group") {
  Monodromy m = trefoil_coloring();
  CHECK_FALSE(is_regular(m));
  RegularCoverData rc = associated_regular(m);
  CHECK(rc.image_group.order() == 6);
  CHECK(rc.regular.degree == 6);
  CoverReport r = validate(rc.regular);
  CHECK(r.transitive);
  RegularIndexReport rep = verify_regular_indices(rc);
  CHECK(rep.group_order == 6);
  REQUIRE(rep.components.size() == 1);
  // Meridians are transpositions, so the regular cover branches uniformly
  // with index 2 over three preimage circles.
  CHECK(rep.components[0].index == 2);
  CHECK(rep.components[0].sheets == 3);
  CHECK(branching_indices(rc.regular, 0) == CycleType({2, 2, 2}));
}

TEST_CASE("regular cover indices are the meridian orders per component") {
  // A degree-4 cover of the whitehead link with meridian orders 4 and 2.
  LinkDiagram d = whitehead_diagram();
  SearchOptions opts;
  opts.degree = 4;
  opts.meridian_order = {{0, 4}, {1, 2}};
  std::vector<Monodromy> hits = search_monodromies(d, opts);
  REQUIRE(!hits.empty());
  for (const Monodromy& m : hits) {
    RegularCoverData rc = associated_regular(m);
    RegularIndexReport rep = verify_regular_indices(rc);
    REQUIRE(rep.components.size() == 2);
    CHECK(rep.components[0].label == "W1");
    CHECK(rep.components[0].index == 4);
    CHECK(rep.components[1].index == 2);
    CHECK(rep.components[0].sheets * 4 == rep.group_order);
    CHECK(rep.components[1].sheets * 2 == rep.group_order);
  }
}

TEST_CASE("translation intertwines the two covers") {
  // Sheet s of the source cover corresponds to the coset of elements sending
  // 1 to s; the regular action must project onto the source action.
  Monodromy m = trefoil_coloring();
  RegularCoverData rc = associated_regular(m);
  const GroupTable& g = rc.image_group;
  for (int arc : m.diagram.arcs()) {
    const Permutation& src = m.at(arc);
    const Permutation& reg = rc.regular.at(arc);
    for (int pos = 1; pos <= g.order(); ++pos) {
      int moved = reg(pos);
      CHECK(g.at(moved - 1)(1) == src(g.at(pos - 1)(1)));
    }
  }
}

TEST_CASE("non-transitive and oversized inputs are rejected") {
  LinkDiagram d = builtin_diagram("trefoil");
  Monodromy split = all_arcs(d, Permutation::identity(2));
  CHECK_THROWS_AS(associated_regular(split), NotTransitive);
  CHECK_THROWS_AS(is_regular(split), NotTransitive);

  // The coloring generates all of S_3, which a cap of 4 cannot hold.
  CHECK_THROWS_AS(associated_regular(trefoil_coloring(), 4), CapExceeded);
  CHECK_THROWS_AS(is_regular(trefoil_coloring(), 4), CapExceeded);
}
