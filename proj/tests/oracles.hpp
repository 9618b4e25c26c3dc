#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's elimination or characteristic polynomial code.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lielab/lielab.hpp"

namespace oracle {

using namespace lielab;

/// Laplace expansion along the first row; exponential, fine for n <= 7.
template <class R>
R cofactor_det(const std::vector<std::vector<R>>& m, const R& zero, const R& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  if (n == 1) return m[0][0];
  R acc = zero;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<R>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<R> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const R term = m[0][c] * cofactor_det(minor, zero, one);
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

/// det(t - M) by cofactor expansion over polynomial entries.
template <class S>
UniPoly<S> char_poly(const Matrix<S>& m) {
  const auto n = static_cast<std::size_t>(m.rows());
  std::vector<std::vector<UniPoly<S>>> a(n, std::vector<UniPoly<S>>(n));
  const S one = m.rows() > 0 ? m(0, 0) * S(0) + S(1) : S(1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = UniPoly<S>({-m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))});
      if (i == j) a[i][j] += UniPoly<S>::monomial(one, 1);
    }
  return cofactor_det(a, UniPoly<S>(), UniPoly<S>({one}));
}

template <class S>
S det(const Matrix<S>& m) {
  const auto n = static_cast<std::size_t>(m.rows());
  std::vector<std::vector<S>> a(n, std::vector<S>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return cofactor_det(a, S(0), S(1));
}

template <class S>
Matrix<S> random_matrix(const Field<S>& F, int n, std::mt19937_64& rng, long h = 9, bool fractions = false) {
  std::uniform_int_distribution<long> d(-h, h), den(1, 4);
  Matrix<S> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      S v = F.from_int(d(rng));
      if constexpr (Field<S>::kind == FieldKind::Q)
        if (fractions) v = v / Rational(den(rng));
      m(i, j) = v;
    }
  return m;
}

/// Rank by plain Gaussian elimination on a copy.
template <class S>
int rank(Matrix<S> m) {
  int r = 0;
  for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Eigen::Index p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.row(p).swap(m.row(r));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (i != r && !m(i, c).is_zero()) {
        const S f = m(i, c) / m(r, c);
        for (Eigen::Index k = 0; k < m.cols(); ++k) m(i, k) = m(i, k) - f * m(r, k);
      }
    ++r;
  }
  return r;
}

/// Matrix with the given rows (all of equal length).
template <class S>
Matrix<S> stack(const std::vector<std::vector<S>>& rows, int cols) {
  Matrix<S> m(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < cols; ++c) m(static_cast<Eigen::Index>(r), c) = rows[r][static_cast<std::size_t>(c)];
  return m;
}

/// c_ij^k read straight off the bracket of basis vectors.
template <class S>
S structure_constant(const LieAlgebra<S>& L, int i, int j, int k) {
  return bracket(L, L.basis_vector(i), L.basis_vector(j))(k);
}

/// dim Der L: unknowns D_ab (D b_b = sum_a D_ab b_a), one equation per
/// (i, j, k) from D[b_i, b_j] = [D b_i, b_j] + [b_i, D b_j].
template <class S>
int derivation_dim(const LieAlgebra<S>& L) {
  const int n = L.dim();
  const S zero = L.field().zero();
  std::vector<std::vector<S>> rows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        std::vector<S> row(static_cast<std::size_t>(n * n), zero);
        auto at = [&](int a, int b) -> S& { return row[static_cast<std::size_t>(a * n + b)]; };
        for (int m = 0; m < n; ++m) {
          at(k, m) += structure_constant(L, i, j, m);
          at(m, i) -= structure_constant(L, m, j, k);
          at(m, j) -= structure_constant(L, i, m, k);
        }
        rows.push_back(std::move(row));
      }
  return n * n - rank(stack(rows, n * n));
}

/// dim H^2(L, K) = dim Z^2 - dim B^2 with omega_ij (i < j) as unknowns.
template <class S>
int h2_dim(const LieAlgebra<S>& L) {
  const int n = L.dim();
  const S zero = L.field().zero();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  const int u = static_cast<int>(pairs.size());
  auto index = [&](int i, int j) {
    for (int t = 0; t < u; ++t)
      if (pairs[static_cast<std::size_t>(t)] == std::pair<int, int>{i, j}) return t;
    return -1;
  };
  // omega(b_m, b_c) with sign for m > c
  auto add = [&](std::vector<S>& row, int m, int c, const S& coef) {
    if (m == c) return;
    if (m < c) row[static_cast<std::size_t>(index(m, c))] += coef;
    else row[static_cast<std::size_t>(index(c, m))] -= coef;
  };
  std::vector<std::vector<S>> cocycle_rows;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        std::vector<S> row(static_cast<std::size_t>(u), zero);
        for (int m = 0; m < n; ++m) {
          add(row, m, c, structure_constant(L, a, b, m));
          add(row, m, a, structure_constant(L, b, c, m));
          add(row, m, b, structure_constant(L, c, a, m));
        }
        cocycle_rows.push_back(std::move(row));
      }
  const int z2 = u - (cocycle_rows.empty() ? 0 : rank(stack(cocycle_rows, u)));
  std::vector<std::vector<S>> boundary_rows;
  for (int k = 0; k < n; ++k) {
    std::vector<S> row(static_cast<std::size_t>(u), zero);
    for (int t = 0; t < u; ++t) row[static_cast<std::size_t>(t)] = structure_constant(L, pairs[t].first, pairs[t].second, k);
    boundary_rows.push_back(std::move(row));
  }
  const int b2 = (u == 0) ? 0 : rank(stack(boundary_rows, u));
  return z2 - b2;
}

/// Product in the quaternion algebra (a, b): i^2 = a, j^2 = b, k = ij = -ji.
template <class S>
Vector<S> quat_mul(const S& a, const S& b, const Vector<S>& x, const Vector<S>& y) {
  Vector<S> r(4);
  r(0) = x(0) * y(0) + a * x(1) * y(1) + b * x(2) * y(2) - a * b * x(3) * y(3);
  r(1) = x(0) * y(1) + x(1) * y(0) - b * x(2) * y(3) + b * x(3) * y(2);
  r(2) = x(0) * y(2) + x(2) * y(0) + a * x(1) * y(3) - a * x(3) * y(1);
  r(3) = x(0) * y(3) + x(3) * y(0) + x(1) * y(2) - x(2) * y(1);
  return r;
}

/// Rational algebras from the catalog used by the invariant suites.
inline std::vector<std::pair<std::string, LieAlgebra<Rational>>> rational_catalog() {
  const Q q;
  return {{"abelian3", abelian(q, 3)},
          {"h3", heisenberg(q, 1)},
          {"h5", heisenberg(q, 2)},
          {"r2", r2(q)},
          {"sl2", sl(q, 2)},
          {"gl2", gl(q, 2)},
          {"sl3", sl(q, 3)},
          {"upper4", upper_nilpotent(q, 4)},
          {"su2q", su2q()},
          {"sl2+sl2", direct_sum(sl(q, 2), sl(q, 2))},
          {"su2q+K", std::get<LieAlgebra<Rational>>(make(q, "su2q+K", {}))},
          {"quaternion-lie(-1,3)", std::get<LieAlgebra<Rational>>(make(q, "quaternion-lie", {-1, 3}))}};
}

inline std::vector<std::pair<std::string, LieAlgebra<Zp>>> modular_catalog() {
  const Fp f2(2), f3(3), f5(5);
  return {{"h3/F5", heisenberg(f5, 1)},
          {"r2/F3", r2(f3)},
          {"sl2/F5", sl(f5, 2)},
          {"gl2/F3", gl(f3, 2)},
          {"sl3/F3", sl(f3, 3)},
          {"psl3/F3", psl(f3, 3)},
          {"pgl3/F3", pgl(f3, 3)},
          {"upper3/F2", upper_nilpotent(f2, 3)},
          {"sl2*O1/F3", std::get<LieAlgebra<Zp>>(make(f3, "sl2*O1", {}))}};
}

}  // namespace oracle
