#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace coverkit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A closure blew past its cap. Recoverable: callers report and move on.
struct CapExceeded : Error {
  using Error::Error;
};

struct DegreeMismatch : Error {
  using Error::Error;
};

// Sorted multiset of cycle lengths. For a meridian image these are the
// branching indices of the component, so they show up in every report.
struct CycleType {
  std::vector<int> lengths;

  CycleType() = default;
  explicit CycleType(std::vector<int> ls);

  int sum() const;
  bool within(const std::set<int>& allowed) const;
  std::string str() const;

  bool operator==(const CycleType&) const = default;
  auto operator<=>(const CycleType&) const = default;
};

std::ostream& operator<<(std::ostream& os, const CycleType& t);

// Bijection of {1..t} in one-line storage. Points are 1-based throughout.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(imgs_.size()); }
  int operator()(int i) const { return imgs_[i - 1]; }
  const std::vector<int>& images() const { return imgs_; }

  bool is_identity() const;
  bool is_transposition() const;
  Permutation inverse() const;
  long long order() const;

  // Disjoint cycles covering {1..t}, fixed points included, each cycle
  // written from its smallest point, cycles ordered by smallest point.
  std::vector<std::vector<int>> cycles() const;
  CycleType cycle_type() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> imgs_;
};

// compose(p, q) applies q first: result(i) = p(q(i)). This convention is
// fixed repo-wide; a dedicated unit test pins it.
Permutation compose(const Permutation& p, const Permutation& q);

// Word product: a * b means "a, then b", i.e. compose(b, a). Words evaluate
// by folding * left to right, which keeps every induced map in this codebase
// (monodromy, regular representation) an honest homomorphism.
Permutation operator*(const Permutation& a, const Permutation& b);

Permutation power(const Permutation& p, long long k);

// Relabeling action: conjugate(x, c) applies c to both sides, i.e. the word
// product c^-1 x c. Relabeling sheets by c sends every image through this.
Permutation conjugate(const Permutation& x, const Permutation& c);

// Degree changes: extended() appends fixed points, restricted() drops
// trailing points provided p never moves anything across the boundary.
Permutation extended(const Permutation& p, int degree);
Permutation restricted(const Permutation& p, int degree);

// Text forms. one_line_str gives "[2,1,4]"; cycle_str gives "(1 2)(3 4)"
// with fixed points omitted and "()" for the identity. Cycle input needs an
// explicit degree since trailing fixed points are invisible.
Permutation parse_one_line(const std::string& text);
Permutation parse_cycles(const std::string& text, int degree);
Permutation parse_permutation(const std::string& text, int degree);
std::string one_line_str(const Permutation& p);
std::string cycle_str(const Permutation& p);
std::ostream& operator<<(std::ostream& os, const Permutation& p);

// Finite group as an explicit element list, sorted lexicographically on the
// image sequences so the identity sits at index 0 and all downstream
// numbering is reproducible bit for bit.
struct GroupTable {
  std::vector<Permutation> elements;
  std::map<std::vector<int>, int> index;

  int order() const { return static_cast<int>(elements.size()); }
  const Permutation& at(int i) const { return elements[i]; }
  int index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const;
};

inline constexpr std::size_t kGroupCap = 100000;

GroupTable generate_group(const std::vector<Permutation>& generators,
                          std::size_t cap = kGroupCap);

// Orbit closure of point 1; never enumerates the group.
bool is_transitive(const std::vector<Permutation>& generators, int t);

// Right regular representation eta(y): sends the position of g to the
// position of g*y. Positions are 1-based, so position = table index + 1.
Permutation regular_representation(const GroupTable& g, const Permutation& y);

// Full centralizer of p inside S_degree, assembled from cycle rotations and
// aligned swaps of equal-length cycles; order is prod over k of k^m_k * m_k!.
std::vector<Permutation> centralizer_elements(const Permutation& p, std::size_t cap);

// Canonical representative of a cycle type: cycles laid out on consecutive
// points, shortest first.
Permutation canonical_of_type(const CycleType& type);

// Enumerates every permutation of S_t with the given cycle type, each
// exactly once, in a deterministic order.
void for_each_of_type(int t, const CycleType& type,
                      const std::function<void(const Permutation&)>& fn);

}  // namespace coverkit
