#pragma once

#include <map>
#include <string>

#include "coverkit/links.hpp"
#include "coverkit/snf.hpp"

namespace coverkit {

struct NotAKnot : Error {
  using Error::Error;
};

// Laurent polynomial in one variable with big-integer coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::map<int, Int> coeffs);
  static LaurentPoly monomial(const Int& coeff, int exp);

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<int, Int>& coeffs() const { return coeffs_; }
  int min_exp() const;
  int max_exp() const;

  LaurentPoly operator+(const LaurentPoly& other) const;
  LaurentPoly operator-(const LaurentPoly& other) const;
  LaurentPoly operator*(const LaurentPoly& other) const;

  // Value at t = 1 or t = -1 (the only integer units, so negative exponents
  // are fine).
  Int eval_at_unit(int t) const;

  // Multiplied by a unit so the lowest exponent is 0 and the leading
  // coefficient is positive.
  LaurentPoly normalized() const;

  std::string str() const;

 private:
  std::map<int, Int> coeffs_;  // exponent -> nonzero coefficient
};

bool operator==(const LaurentPoly& a, const LaurentPoly& b);

// Alexander polynomial of a knot from free-derivative columns of the
// crossing relators, normalized. Throws NotAKnot on links.
LaurentPoly alexander_polynomial(const LinkDiagram& diagram);

// Order of H1 of the n-fold cyclic branched cover of a knot, computed as
// |res((t^n - 1)/(t - 1), alexander)|. Returns 0 when the group is infinite.
Int cyclic_cover_h1_order(const LinkDiagram& diagram, int n);

// H1 of the double branched cover from the checkerboard form of a braid
// closure. Needs braid provenance: faces are read off the braid columns.
AbelianInvariants goeritz_h1_double_cover(const LinkDiagram& diagram);

// Cokernel invariants via greatest common divisors of k x k minors. Shares
// no code with the elimination-based Smith form.
AbelianInvariants invariants_from_minor_gcds(const IntMat& a, int num_generators);

}  // namespace coverkit
