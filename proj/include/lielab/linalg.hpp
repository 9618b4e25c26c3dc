#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "lielab/poly.hpp"
#include "lielab/scalar.hpp"

namespace lielab {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class S>
bool is_zero(const Matrix<S>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

template <class S>
bool is_zero(const Vector<S>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

template <class S>
bool equal(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <class S>
bool equal(const Vector<S>& a, const Vector<S>& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

template <class S>
Matrix<S> identity(const Field<S>& F, int n) {
  Matrix<S> m = Matrix<S>::Constant(n, n, F.zero());
  for (int i = 0; i < n; ++i) m(i, i) = F.one();
  return m;
}

template <class S>
Matrix<S> zeros(const Field<S>& F, int rows, int cols) {
  return Matrix<S>::Constant(rows, cols, F.zero());
}

template <class S>
Vector<S> zero_vector(const Field<S>& F, int n) {
  return Vector<S>::Constant(n, F.zero());
}

template <class S>
Vector<S> unit_vector(const Field<S>& F, int n, int i) {
  Vector<S> v = zero_vector(F, n);
  v(i) = F.one();
  return v;
}

/// Reduced row echelon form: the nonzero rows of the reduced matrix and
/// their pivot columns (strictly increasing).
template <class S>
struct Echelon {
  Matrix<S> rows;
  std::vector<int> pivots;
};

template <class S>
Echelon<S> rref(Matrix<S> m);

template <class S>
int matrix_rank(const Matrix<S>& m) {
  return static_cast<int>(rref(m).pivots.size());
}

/// A linear subspace of S^n, stored canonically as the reduced row echelon
/// matrix of a basis. Two subspaces are equal iff their representations are.
template <class S>
class Subspace {
public:
  explicit Subspace(int ambient = 0) : ambient_(ambient), rows_(0, ambient) {}

  /// Span of the rows of `rows`.
  static Subspace from_rows(const Matrix<S>& rows);
  static Subspace span(int ambient, const std::vector<Vector<S>>& vs);
  static Subspace whole(const Field<S>& F, int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(pivots_.size()); }
  bool is_zero() const { return pivots_.empty(); }
  const Matrix<S>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  std::vector<Vector<S>> basis() const;
  Vector<S> basis_vector(int i) const { return rows_.row(i).transpose(); }

  /// v minus its projection along the pivot coordinates; zero iff v lies in
  /// the subspace.
  Vector<S> reduce(const Vector<S>& v) const;
  bool contains(const Vector<S>& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of a member v in the echelon basis (read off the pivots).
  std::vector<S> coordinates(const Vector<S>& v) const;
  /// Indices of the non-pivot coordinates; the matching standard basis
  /// vectors represent the cosets of the quotient S^n / this.
  std::vector<int> non_pivots() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && equal<S>(a.rows_, b.rows_);
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  int ambient_;
  Matrix<S> rows_;
  std::vector<int> pivots_;
};

template <class S>
Subspace<S> sum(const Subspace<S>& a, const Subspace<S>& b);
template <class S>
Subspace<S> intersection(const Subspace<S>& a, const Subspace<S>& b);
/// Rows spanning {y : <v, y> = 0 for all v in a} under the standard dot product.
template <class S>
Subspace<S> annihilator(const Subspace<S>& a);

/// Null space of m (ambient = column count).
template <class S>
Subspace<S> kernel(const Matrix<S>& m);
/// Column space of m (ambient = row count).
template <class S>
Subspace<S> image(const Matrix<S>& m);
/// One solution of m x = b, or nothing when the system is inconsistent.
template <class S>
std::optional<Vector<S>> solve(const Matrix<S>& m, const Vector<S>& b);
template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& m);

/// Division-free characteristic polynomial (Berkowitz). `entry(i, j)` yields
/// matrix entries in any commutative ring; returns det(t - A) low degree
/// first.
template <class Ring, class Entry>
std::vector<Ring> berkowitz(int n, Entry&& entry, const Ring& zero, const Ring& one) {
  if (n == 0) return {one};
  // coefficients high degree first
  std::vector<Ring> c{one, zero - entry(0, 0)};
  for (int r = 1; r < n; ++r) {
    std::vector<Ring> toe(static_cast<std::size_t>(r) + 2, zero);
    toe[0] = one;
    toe[1] = zero - entry(r, r);
    std::vector<Ring> v(static_cast<std::size_t>(r), zero);
    for (int i = 0; i < r; ++i) v[i] = entry(i, r);
    for (int k = 0; k < r; ++k) {
      Ring dot = zero;
      for (int i = 0; i < r; ++i) dot = dot + entry(r, i) * v[i];
      toe[static_cast<std::size_t>(k) + 2] = zero - dot;
      if (k + 1 < r) {
        std::vector<Ring> w(static_cast<std::size_t>(r), zero);
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) w[i] = w[i] + entry(i, j) * v[j];
        v = std::move(w);
      }
    }
    std::vector<Ring> next(static_cast<std::size_t>(r) + 2, zero);
    for (std::size_t i = 0; i < next.size(); ++i)
      for (std::size_t j = 0; j <= i && j < c.size(); ++j) next[i] = next[i] + toe[i - j] * c[j];
    c = std::move(next);
  }
  std::reverse(c.begin(), c.end());
  return c;
}

/// det(t*Id - m). Over Q: denominators cleared, then Berkowitz on the integer
/// matrix; over F_p: Hessenberg reduction.
template <class S>
UniPoly<S> char_poly(const Matrix<S>& m);
template <class S>
UniPoly<S> char_poly_hessenberg(const Matrix<S>& m);
template <class S>
UniPoly<S> char_poly_berkowitz(const Matrix<S>& m);

/// Least-degree monic annihilating polynomial, by Krylov spinning of each
/// standard basis vector and lcm of the local annihilators.
template <class S>
UniPoly<S> min_poly(const Matrix<S>& m);

/// a * b, skipping zero terms; faster than the generic product for exact
/// scalars, whose operations allocate.
template <class S>
Matrix<S> product(const Matrix<S>& a, const Matrix<S>& b);
template <class S>
Vector<S> product(const Matrix<S>& a, const Vector<S>& v);

template <class S>
Matrix<S> eval_poly(const UniPoly<S>& p, const Matrix<S>& m);

template <class S>
Matrix<S> matrix_power(const Matrix<S>& m, int k);

template <class S>
struct JordanChevalley {
  Matrix<S> semisimple;
  Matrix<S> nilpotent;
};

/// m = S + N with S semisimple, N nilpotent, SN = NS, via Newton iteration on
/// the squarefree part of the characteristic polynomial. Postconditions are
/// rechecked before returning.
template <class S>
JordanChevalley<S> jordan_chevalley(const Matrix<S>& m);

/// Diagonal of a form congruent to the symmetric matrix g (symmetric
/// Gaussian elimination with symmetric pivoting).
template <class S>
std::vector<S> diagonalize_quadratic(const Matrix<S>& g);

template <class S>
bool is_symmetric(const Matrix<S>& g) {
  if (g.rows() != g.cols()) return false;
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = i + 1; j < g.cols(); ++j)
      if (g(i, j) != g(j, i)) return false;
  return true;
}

}  // namespace lielab
