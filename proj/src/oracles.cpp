#include "coverkit/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

namespace coverkit {

LaurentPoly::LaurentPoly(std::map<int, Int> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();)
    it = it->second == 0 ? coeffs_.erase(it) : std::next(it);
}

LaurentPoly LaurentPoly::monomial(const Int& coeff, int exp) {
  LaurentPoly p;
  if (coeff != 0) p.coeffs_[exp] = coeff;
  return p;
}

int LaurentPoly::min_exp() const {
  if (is_zero()) throw Error("zero polynomial has no exponents");
  return coeffs_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (is_zero()) throw Error("zero polynomial has no exponents");
  return coeffs_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
  std::map<int, Int> out = coeffs_;
  for (const auto& [exp, c] : other.coeffs_) out[exp] += c;
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
  std::map<int, Int> out = coeffs_;
  for (const auto& [exp, c] : other.coeffs_) out[exp] -= c;
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  std::map<int, Int> out;
  for (const auto& [ea, ca] : coeffs_)
    for (const auto& [eb, cb] : other.coeffs_) out[ea + eb] += ca * cb;
  return LaurentPoly(std::move(out));
}

Int LaurentPoly::eval_at_unit(int t) const {
  if (t != 1 && t != -1) throw Error("only units can be substituted into a Laurent polynomial");
  Int sum = 0;
  for (const auto& [exp, c] : coeffs_) {
    bool odd = exp % 2 != 0;
    sum += (t == -1 && odd) ? -c : c;
  }
  return sum;
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return *this;
  int shift = min_exp();
  bool flip = coeffs_.rbegin()->second < 0;
  std::map<int, Int> out;
  for (const auto& [exp, c] : coeffs_) out[exp - shift] = flip ? -c : c;
  return LaurentPoly(std::move(out));
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    Int c = it->second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Int mag = c < 0 ? Int(-c) : c;
    int exp = it->first;
    if (mag != 1 || exp == 0) os << mag.str();
    if (exp != 0) {
      if (mag != 1) os << "*";
      os << "t";
      if (exp != 1) os << "^" << exp;
    }
    first = false;
  }
  return os.str();
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeffs() == b.coeffs(); }

namespace {

// Cofactor-expansion determinant over Laurent polynomials; the matrices here
// stay small (one row and column per arc, minus one).
LaurentPoly poly_det(std::vector<std::vector<LaurentPoly>> m) {
  std::size_t n = m.size();
  if (n == 0) return LaurentPoly::monomial(1, 0);
  if (n == 1) return m[0][0];
  LaurentPoly sum;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][0].is_zero()) continue;
    std::vector<std::vector<LaurentPoly>> minor;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      minor.emplace_back(m[r].begin() + 1, m[r].end());
    }
    LaurentPoly term = m[i][0] * poly_det(std::move(minor));
    sum = (i % 2 == 0) ? sum + term : sum - term;
  }
  return sum;
}

// Integer determinant by cofactor expansion. Deliberately separate from the
// fraction-free elimination used elsewhere, so the two can check each other.
Int int_det(const IntMat& m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][0] == 0) continue;
    IntMat minor;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      minor.emplace_back(m[r].begin() + 1, m[r].end());
    }
    Int term = m[i][0] * int_det(minor);
    sum += (i % 2 == 0) ? term : -term;
  }
  return sum;
}

Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// Advances `sel` to the next k-subset of {0..limit-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& sel, std::size_t limit) {
  std::size_t k = sel.size();
  for (std::size_t i = k; i-- > 0;) {
    if (sel[i] < limit - (k - i)) {
      ++sel[i];
      for (std::size_t t = i + 1; t < k; ++t) sel[t] = sel[t - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

LaurentPoly alexander_polynomial(const LinkDiagram& diagram) {
  if (diagram.num_components() != 1)
    throw NotAKnot("alexander polynomial here is for knots; got " +
                   std::to_string(diagram.num_components()) + " components");
  WirtingerData w = wirtinger(diagram);
  const int gens = w.group.rank();
  std::vector<std::vector<LaurentPoly>> mat(
      w.group.relators.size(), std::vector<LaurentPoly>(static_cast<std::size_t>(gens)));
  for (std::size_t r = 0; r < w.group.relators.size(); ++r) {
    // Free derivative of the relator, with every generator abelianized to t.
    int exp = 0;
    for (int letter : w.group.relators[r]) {
      int k = std::abs(letter);
      if (letter > 0) {
        mat[r][static_cast<std::size_t>(k) - 1] =
            mat[r][static_cast<std::size_t>(k) - 1] + LaurentPoly::monomial(1, exp);
        ++exp;
      } else {
        --exp;
        mat[r][static_cast<std::size_t>(k) - 1] =
            mat[r][static_cast<std::size_t>(k) - 1] - LaurentPoly::monomial(1, exp);
      }
    }
  }
  // Any single row and column can be struck; we drop the last of each.
  std::size_t keep = static_cast<std::size_t>(gens) - 1;
  std::vector<std::vector<LaurentPoly>> minor;
  for (std::size_t r = 0; r < keep && r < mat.size(); ++r)
    minor.emplace_back(mat[r].begin(), mat[r].begin() + static_cast<std::ptrdiff_t>(keep));
  return poly_det(std::move(minor)).normalized();
}

Int cyclic_cover_h1_order(const LinkDiagram& diagram, int n) {
  if (n < 2) throw Error("cyclic cover order must be at least 2");
  LaurentPoly alex = alexander_polynomial(diagram);
  // Shift to an ordinary polynomial; resultants with unit monomials only
  // change sign, which the absolute value ignores.
  LaurentPoly p = alex.normalized();
  int dp = p.is_zero() ? 0 : p.max_exp();
  if (p.is_zero()) return 0;
  // g(t) = 1 + t + ... + t^(n-1).
  int dg = n - 1;
  if (dg == 0) return 1;
  std::vector<Int> pc(static_cast<std::size_t>(dp) + 1, 0);
  for (const auto& [exp, c] : p.coeffs()) pc[static_cast<std::size_t>(exp)] = c;
  std::vector<Int> gc(static_cast<std::size_t>(dg) + 1, 1);

  // Sylvester matrix, (dp + dg) square.
  std::size_t size = static_cast<std::size_t>(dp + dg);
  IntMat sylvester(size, std::vector<Int>(size, 0));
  for (int row = 0; row < dp; ++row)
    for (int k = 0; k <= dg; ++k)
      sylvester[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + k)] =
          gc[static_cast<std::size_t>(dg - k)];
  for (int row = 0; row < dg; ++row)
    for (int k = 0; k <= dp; ++k)
      sylvester[static_cast<std::size_t>(dp + row)][static_cast<std::size_t>(row + k)] =
          pc[static_cast<std::size_t>(dp - k)];
  Int res = int_det(sylvester);
  return res < 0 ? Int(-res) : res;
}

AbelianInvariants goeritz_h1_double_cover(const LinkDiagram& diagram) {
  if (!diagram.braid())
    throw Error("checkerboard homology needs a diagram built as a braid closure");
  const BraidData& braid = *diagram.braid();
  const int n = braid.strands;

  // Crossings of column j are the letters with absolute value j; faces of a
  // column are the gaps between its crossings, top and bottom gap merged by
  // the closure.
  std::vector<std::vector<int>> heights(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < braid.word.size(); ++i)
    heights[static_cast<std::size_t>(std::abs(braid.word[i]))].push_back(static_cast<int>(i) + 1);
  for (int j = 1; j <= n - 1; ++j)
    if (heights[static_cast<std::size_t>(j)].empty())
      throw Error("braid word skips position " + std::to_string(j) +
                  "; the closure is disconnected");

  std::vector<int> faces_in(static_cast<std::size_t>(n) + 1);
  std::vector<int> offset(static_cast<std::size_t>(n) + 2, 0);
  for (int j = 0; j <= n; ++j) {
    faces_in[static_cast<std::size_t>(j)] =
        std::max<int>(1, static_cast<int>(heights[static_cast<std::size_t>(j)].size()));
    offset[static_cast<std::size_t>(j) + 1] =
        offset[static_cast<std::size_t>(j)] + faces_in[static_cast<std::size_t>(j)];
  }
  auto face = [&](int column, int segment) { return offset[static_cast<std::size_t>(column)] + segment; };
  auto segment_at = [&](int column, int h) {
    const std::vector<int>& ps = heights[static_cast<std::size_t>(column)];
    if (ps.empty()) return 0;
    int below = static_cast<int>(std::lower_bound(ps.begin(), ps.end(), h) - ps.begin());
    return below % static_cast<int>(ps.size());
  };

  // White faces are the even columns; the first white face (leftmost, outer)
  // is the one struck from the Goeritz matrix.
  std::vector<int> white_index(static_cast<std::size_t>(offset[static_cast<std::size_t>(n) + 1]), -1);
  int whites = 0;
  for (int j = 0; j <= n; j += 2)
    for (int s = 0; s < faces_in[static_cast<std::size_t>(j)]; ++s)
      white_index[static_cast<std::size_t>(face(j, s))] = whites++;

  IntMat goeritz(static_cast<std::size_t>(whites), std::vector<Int>(static_cast<std::size_t>(whites), 0));
  std::vector<int> seen_in_column(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < braid.word.size(); ++i) {
    int letter = braid.word[i];
    int j = std::abs(letter);
    int h = static_cast<int>(i) + 1;
    int sign = letter > 0 ? 1 : -1;
    // Incidence sign convention fixed by the figure-eight determinant (5)
    // and cross-checked on the trefoil (3) and Hopf link (2).
    int eta = (j % 2 == 1) ? -sign : sign;
    int u, v;
    if (j % 2 == 0) {
      int q = seen_in_column[static_cast<std::size_t>(j)];
      int k = static_cast<int>(heights[static_cast<std::size_t>(j)].size());
      u = face(j, q);
      v = face(j, (q + 1) % k);
    } else {
      u = face(j - 1, segment_at(j - 1, h));
      v = face(j + 1, segment_at(j + 1, h));
    }
    ++seen_in_column[static_cast<std::size_t>(j)];
    int wu = white_index[static_cast<std::size_t>(u)];
    int wv = white_index[static_cast<std::size_t>(v)];
    if (wu < 0 || wv < 0) throw Error("internal: quadrant face is not white");
    if (wu == wv) continue;
    goeritz[static_cast<std::size_t>(wu)][static_cast<std::size_t>(wv)] -= eta;
    goeritz[static_cast<std::size_t>(wv)][static_cast<std::size_t>(wu)] -= eta;
  }
  for (int u = 0; u < whites; ++u) {
    Int total = 0;
    for (int v = 0; v < whites; ++v)
      if (v != u) total += goeritz[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    goeritz[static_cast<std::size_t>(u)][static_cast<std::size_t>(u)] = -total;
  }

  IntMat struck;
  for (int u = 1; u < whites; ++u)
    struck.emplace_back(goeritz[static_cast<std::size_t>(u)].begin() + 1,
                        goeritz[static_cast<std::size_t>(u)].end());
  return invariants_from_minor_gcds(struck, whites - 1);
}

AbelianInvariants invariants_from_minor_gcds(const IntMat& a, int num_generators) {
  std::size_t rows = a.size();
  std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (const auto& row : a)
    if (row.size() != cols) throw Error("ragged matrix");
  if (cols > static_cast<std::size_t>(num_generators))
    throw Error("matrix has more columns than generators");

  std::size_t bound = std::min(rows, cols);
  // d[k] = gcd of all k x k minors; d[0] = 1 by convention.
  std::vector<Int> d(bound + 1, 0);
  d[0] = 1;
  std::vector<std::size_t> rsel, csel;
  for (std::size_t k = 1; k <= bound; ++k) {
    Int g = 0;
    rsel.resize(k);
    std::iota(rsel.begin(), rsel.end(), 0);
    do {
      csel.resize(k);
      std::iota(csel.begin(), csel.end(), 0);
      do {
        IntMat minor(k, std::vector<Int>(k));
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = 0; c < k; ++c) minor[r][c] = a[rsel[r]][csel[c]];
        g = gcd_int(g, int_det(minor));
      } while (g != 1 && next_combination(csel, cols));
    } while (g != 1 && next_combination(rsel, rows));
    d[k] = g;
  }

  std::size_t rank = 0;
  for (std::size_t k = 1; k <= bound; ++k)
    if (d[k] != 0) rank = k;
  AbelianInvariants out;
  out.rank = num_generators - static_cast<int>(rank);
  for (std::size_t k = 1; k <= rank; ++k) {
    Int factor = d[k] / d[k - 1];
    if (factor < 0) factor = -factor;
    if (factor > 1) out.torsion.push_back(factor);
  }
  return out;
}

}  // namespace coverkit
