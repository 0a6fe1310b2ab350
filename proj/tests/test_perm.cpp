#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "coverkit/perm.hpp"

using namespace coverkit;

namespace {

Permutation random_perm(std::mt19937& rng, int t) {
  std::vector<int> im(t);
  std::iota(im.begin(), im.end(), 1);
  std::shuffle(im.begin(), im.end(), rng);
  return Permutation(std::move(im));
}

}  // namespace

TEST_CASE("compose applies the right factor first") {
  Permutation id = Permutation::identity(2);
  Permutation s = parse_cycles("(1 2)", 2);
  CHECK(compose(id, s) == s);
  CHECK(compose(s, s) == id);

  Permutation p = parse_cycles("(1 2)(3 4)", 4);
  Permutation q = parse_cycles("(2 4)", 4);
  CHECK(one_line_str(compose(p, q)) == "[2,3,4,1]");
  CHECK(compose(p, q) == parse_cycles("(1 2 3 4)", 4));

  // Order matters: p first vs q first give different products here.
  Permutation a = parse_one_line("[2,3,1]");
  Permutation b = parse_one_line("[2,1,3]");
  CHECK(compose(a, b)(1) == 3);
  CHECK(compose(b, a)(1) == 1);
}

TEST_CASE("word product a*b is a-then-b") {
  Permutation a = parse_one_line("[2,3,1]");
  Permutation b = parse_one_line("[2,1,3]");
  for (int i = 1; i <= 3; ++i) CHECK((a * b)(i) == b(a(i)));
  CHECK(a * b == compose(b, a));
}

TEST_CASE("compose is associative and inverse cancels") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int t = 1 + static_cast<int>(rng() % 9);
    Permutation p = random_perm(rng, t), q = random_perm(rng, t), r = random_perm(rng, t);
    CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
    CHECK(compose(p.inverse(), p) == Permutation::identity(t));
    CHECK(compose(p, p.inverse()) == Permutation::identity(t));
  }
}

TEST_CASE("degree mismatch is an error") {
  Permutation p = Permutation::identity(3);
  Permutation q = Permutation::identity(4);
  CHECK_THROWS_AS(compose(p, q), DegreeMismatch);
}

TEST_CASE("cycle decomposition and types") {
  CHECK(Permutation::identity(3).cycle_type() == CycleType({1, 1, 1}));
  Permutation p = parse_cycles("(1 2)(3 4 5 6)", 7);
  CHECK(p.cycle_type() == CycleType({1, 2, 4}));
  CHECK(p.cycle_type().str() == "{1,2,4}");
  CHECK(parse_cycles("(1 2 3 4 5 6 7 8)", 8).cycle_type() == CycleType({8}));

  auto cs = p.cycles();
  REQUIRE(cs.size() == 3);
  CHECK(cs[0] == std::vector<int>{1, 2});
  CHECK(cs[1] == std::vector<int>{3, 4, 5, 6});
  CHECK(cs[2] == std::vector<int>{7});
}

TEST_CASE("cycle type lengths sum to degree, order is the lcm") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int t = 1 + static_cast<int>(rng() % 10);
    Permutation p = random_perm(rng, t);
    CHECK(p.cycle_type().sum() == t);
    CHECK(power(p, p.order()).is_identity());
    for (long long k = 1; k < p.order(); ++k) CHECK(!power(p, k).is_identity());
  }
  CHECK(parse_cycles("(1 2)(3 4 5)", 5).order() == 6);
}

TEST_CASE("parsing and printing round-trip") {
  Permutation p = parse_one_line("[2,1,4,5,6,3]");
  CHECK(p.degree() == 6);
  CHECK(cycle_str(p) == "(1 2)(3 4 5 6)");
  CHECK(parse_one_line(one_line_str(p)) == p);
  CHECK(parse_cycles(cycle_str(p), 6) == p);

  CHECK(parse_cycles("()", 4) == Permutation::identity(4));
  CHECK(cycle_str(Permutation::identity(4)) == "()");
  CHECK(parse_cycles("(1 2)", 5).degree() == 5);
  CHECK(parse_permutation("[2,1]", 2) == parse_permutation("(1 2)", 2));

  CHECK_THROWS_AS(parse_one_line("[2,2]"), Error);
  CHECK_THROWS_AS(parse_one_line("[1,2"), Error);
  CHECK_THROWS_AS(parse_cycles("(1 9)", 3), Error);
  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 3), Error);
  CHECK_THROWS_AS(parse_permutation("(1 2)", 0), Error);
  CHECK_THROWS_AS(parse_permutation("[2,1,3]", 2), DegreeMismatch);
}

TEST_CASE("group generation") {
  GroupTable z2 = generate_group({parse_cycles("(1 2)", 2)});
  CHECK(z2.order() == 2);

  GroupTable s3 = generate_group({parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)});
  CHECK(s3.order() == 6);
  CHECK(s3.at(0).is_identity());
  CHECK(std::is_sorted(s3.elements.begin(), s3.elements.end()));
  for (const auto& a : s3.elements)
    for (const auto& b : s3.elements) CHECK(s3.contains(a * b));
  for (int i = 0; i < s3.order(); ++i) CHECK(s3.index_of(s3.at(i)) == i);

  GroupTable c8 = generate_group({parse_cycles("(1 2 3 4 5 6 7 8)", 8)});
  CHECK(c8.order() == 8);

  CHECK_THROWS_AS(generate_group({parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)}, 5),
                  CapExceeded);
}

TEST_CASE("transitivity by orbit closure") {
  CHECK(is_transitive({parse_cycles("(1 2)", 2)}, 2));
  CHECK(!is_transitive({parse_cycles("(1 2)", 3)}, 3));
  CHECK(!is_transitive({parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)}, 4));
  CHECK(is_transitive({parse_cycles("(1 2)", 4), parse_cycles("(2 3 4)", 4)}, 4));
}

TEST_CASE("regular representation basics") {
  GroupTable z2 = generate_group({parse_cycles("(1 2)", 2)});
  CHECK(regular_representation(z2, Permutation::identity(2)).is_identity());
  CHECK(regular_representation(z2, parse_cycles("(1 2)", 2)) == parse_cycles("(1 2)", 2));

  Permutation y = parse_cycles("(1 2 3 4 5 6 7 8)", 8);
  GroupTable c8 = generate_group({y});
  CHECK(regular_representation(c8, y).cycle_type() == CycleType({8}));

  GroupTable s3 = generate_group({parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)});
  CHECK(regular_representation(s3, parse_cycles("(1 2)", 3)).cycle_type() ==
        CycleType({2, 2, 2}));
}

TEST_CASE("regular representation is an injective homomorphism") {
  std::vector<GroupTable> groups;
  groups.push_back(generate_group({parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)}));
  groups.push_back(generate_group({parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 3)", 4)}));
  groups.push_back(generate_group({parse_cycles("(1 2 3)", 4), parse_cycles("(1 2)(3 4)", 4)}));
  groups.push_back(generate_group({parse_cycles("(1 2)", 4), parse_cycles("(1 2 3 4)", 4)}));
  for (const auto& g : groups) {
    REQUIRE(g.order() <= 24);
    std::set<std::vector<int>> images;
    for (const auto& y : g.elements) {
      Permutation ey = regular_representation(g, y);
      images.insert(ey.images());
      // Cycle structure: |G|/k cycles of length k, k the order of y.
      long long k = y.order();
      CycleType expect(std::vector<int>(g.order() / k, static_cast<int>(k)));
      CHECK(ey.cycle_type() == expect);
      for (const auto& z : g.elements)
        CHECK(regular_representation(g, y * z) == ey * regular_representation(g, z));
    }
    CHECK(static_cast<int>(images.size()) == g.order());
  }
}

TEST_CASE("centralizer matches brute force") {
  Permutation p = parse_cycles("(1 2)(3 4)", 4);
  auto cent = centralizer_elements(p, 1000);
  CHECK(cent.size() == 8);
  for (const auto& c : cent) CHECK(c * p == p * c);

  std::set<std::vector<int>> brute;
  GroupTable s4 = generate_group({parse_cycles("(1 2)", 4), parse_cycles("(1 2 3 4)", 4)});
  for (const auto& g : s4.elements)
    if (g * p == p * g) brute.insert(g.images());
  std::set<std::vector<int>> ours;
  for (const auto& c : cent) ours.insert(c.images());
  CHECK(ours == brute);

  CHECK(centralizer_elements(Permutation::identity(3), 1000).size() == 6);
  CHECK(centralizer_elements(parse_cycles("(1 2 3 4 5)", 5), 1000).size() == 5);
}

TEST_CASE("canonical type representatives") {
  Permutation p = canonical_of_type(CycleType({4, 2, 1}));
  CHECK(p.degree() == 7);
  CHECK(cycle_str(p) == "(2 3)(4 5 6 7)");
  CHECK(p.cycle_type() == CycleType({1, 2, 4}));
}

TEST_CASE("type enumeration is complete and duplicate-free") {
  auto count_of = [](int t, std::vector<int> ls) {
    std::set<std::vector<int>> seen;
    CycleType type(std::move(ls));
    for_each_of_type(t, type, [&](const Permutation& p) {
      CHECK(p.cycle_type() == type);
      CHECK(seen.insert(p.images()).second);
    });
    return seen.size();
  };
  CHECK(count_of(4, {2, 2}) == 3);
  CHECK(count_of(5, {1, 4}) == 30);
  CHECK(count_of(6, {2, 2, 2}) == 15);
  CHECK(count_of(6, {3, 3}) == 40);
  CHECK(count_of(10, {4, 4, 2}) == 56700);
}

TEST_CASE("extend and restrict") {
  Permutation p = parse_cycles("(1 2 3)", 3);
  Permutation q = extended(p, 5);
  CHECK(q.degree() == 5);
  CHECK(q(4) == 4);
  CHECK(restricted(q, 3) == p);
  CHECK_THROWS_AS(restricted(parse_cycles("(2 3)", 3), 2), Error);
}
