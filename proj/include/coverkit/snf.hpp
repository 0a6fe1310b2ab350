#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <ostream>
#include <string>
#include <vector>

namespace coverkit {

using Int = boost::multiprecision::cpp_int;
using IntMat = std::vector<std::vector<Int>>;

IntMat identity_mat(std::size_t n);
IntMat mat_mul(const IntMat& a, const IntMat& b);

// Exact determinant by fraction-free (Bareiss) elimination.
Int det(IntMat a);

// u*a*v = d with u, v unimodular and d diagonal, each diagonal entry
// nonnegative and dividing the next.
struct SmithResult {
  IntMat u, d, v;
};

SmithResult smith_normal_form(const IntMat& a);

// Invariants of the abelian group with num_generators generators and the
// rows of a as relations.
struct AbelianInvariants {
  int rank = 0;
  std::vector<Int> torsion;  // each > 1, divisibility chain

  bool trivial() const { return rank == 0 && torsion.empty(); }
  // Order of the group: 0 when infinite, 1 when trivial.
  Int order() const;
  std::string str() const;

  bool operator==(const AbelianInvariants&) const = default;
};

AbelianInvariants abelian_invariants_of_matrix(const IntMat& a, int num_generators);

std::ostream& operator<<(std::ostream& os, const AbelianInvariants& ab);

}  // namespace coverkit
