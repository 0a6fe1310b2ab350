#include "coverkit/snf.hpp"

#include <sstream>

#include "coverkit/perm.hpp"

namespace coverkit {

IntMat identity_mat(std::size_t n) {
  IntMat m(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  std::size_t m = a.size(), k = m ? a[0].size() : 0, n = b.empty() ? 0 : b[0].size();
  if (k != b.size()) throw Error("mat_mul: shape mismatch");
  IntMat c(m, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

Int det(IntMat a) {
  std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw Error("det: matrix not square");
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

namespace {

struct SmithWork {
  IntMat d, u, v;
  std::size_t m, n;

  void row_swap(std::size_t i, std::size_t j) {
    std::swap(d[i], d[j]);
    std::swap(u[i], u[j]);
  }
  void col_swap(std::size_t i, std::size_t j) {
    for (auto& row : d) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
  }
  // row i -= q * row k
  void row_sub(std::size_t i, std::size_t k, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < n; ++j) d[i][j] -= q * d[k][j];
    for (std::size_t j = 0; j < m; ++j) u[i][j] -= q * u[k][j];
  }
  // col j -= q * col k
  void col_sub(std::size_t j, std::size_t k, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < m; ++i) d[i][j] -= q * d[i][k];
    for (std::size_t i = 0; i < n; ++i) v[i][j] -= q * v[i][k];
  }
  void row_negate(std::size_t i) {
    for (auto& x : d[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMat& a) {
  std::size_t m = a.size(), n = m ? a[0].size() : 0;
  for (const auto& row : a)
    if (row.size() != n) throw Error("smith_normal_form: ragged matrix");

  SmithWork w{a, identity_mat(m), identity_mat(n), m, n};

  for (std::size_t k = 0; k < m && k < n; ++k) {
    // Smallest nonzero entry of the trailing submatrix becomes the pivot.
    std::size_t pi = k, pj = k;
    bool found = false;
    for (std::size_t i = k; i < m; ++i)
      for (std::size_t j = k; j < n; ++j) {
        if (w.d[i][j] == 0) continue;
        if (!found || abs(w.d[i][j]) < abs(w.d[pi][pj])) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    if (pi != k) w.row_swap(pi, k);
    if (pj != k) w.col_swap(pj, k);

    // Clear row and column k. A nonzero remainder is strictly smaller than
    // the pivot, so swapping it in and retrying terminates.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = k + 1; i < m && !dirty; ++i) {
        if (w.d[i][k] == 0) continue;
        w.row_sub(i, k, w.d[i][k] / w.d[k][k]);
        if (w.d[i][k] != 0) {
          w.row_swap(i, k);
          dirty = true;
        }
      }
      if (dirty) continue;
      for (std::size_t j = k + 1; j < n && !dirty; ++j) {
        if (w.d[k][j] == 0) continue;
        w.col_sub(j, k, w.d[k][j] / w.d[k][k]);
        if (w.d[k][j] != 0) {
          w.col_swap(j, k);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Pivot must divide the whole trailing submatrix for the chain.
      for (std::size_t i = k + 1; i < m && !dirty; ++i)
        for (std::size_t j = k + 1; j < n && !dirty; ++j)
          if (w.d[i][j] % w.d[k][k] != 0) {
            w.row_sub(k, i, Int(-1));
            dirty = true;
          }
    }
    if (w.d[k][k] < 0) w.row_negate(k);
  }

  return SmithResult{std::move(w.u), std::move(w.d), std::move(w.v)};
}

Int AbelianInvariants::order() const {
  if (rank > 0) return 0;
  Int o = 1;
  for (const Int& t : torsion) o *= t;
  return o;
}

std::string AbelianInvariants::str() const {
  if (trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  auto sep = [&]() {
    if (!first) os << " + ";
    first = false;
  };
  if (rank == 1) {
    sep();
    os << "Z";
  } else if (rank > 1) {
    sep();
    os << "Z^" << rank;
  }
  for (const Int& t : torsion) {
    sep();
    os << "Z/" << t;
  }
  return os.str();
}

AbelianInvariants abelian_invariants_of_matrix(const IntMat& a, int num_generators) {
  std::size_t n = a.empty() ? static_cast<std::size_t>(num_generators) : a[0].size();
  if (n != static_cast<std::size_t>(num_generators))
    throw Error("abelian_invariants_of_matrix: column count disagrees with generator count");
  SmithResult s = smith_normal_form(a);
  AbelianInvariants ab;
  int nonzero = 0;
  for (std::size_t k = 0; k < a.size() && k < n; ++k) {
    if (s.d[k][k] == 0) break;
    ++nonzero;
    if (s.d[k][k] > 1) ab.torsion.push_back(s.d[k][k]);
  }
  ab.rank = num_generators - nonzero;
  return ab;
}

std::ostream& operator<<(std::ostream& os, const AbelianInvariants& ab) {
  return os << ab.str();
}

}  // namespace coverkit
