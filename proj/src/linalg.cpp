#include "lielab/linalg.hpp"

#include <cmath>
#include <string>

namespace lielab {

namespace {

template <class S>
void require_square(const Matrix<S>& m, const char* what) {
  if (m.rows() != m.cols())
    throw DimensionMismatch(std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", not square");
}

// A bound 1 when the matrix has any bound entry (matters only for F_p).
template <class S>
S one_like(const Matrix<S>& m) {
  if constexpr (std::is_same_v<S, Zp>) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      for (Eigen::Index i = 0; i < m.rows(); ++i)
        if (m(i, j).bound()) return Zp(1, m(i, j).modulus());
  }
  return S(1);
}

template <class S>
S one_like(const Vector<S>& v) {
  if constexpr (std::is_same_v<S, Zp>) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (v(i).bound()) return Zp(1, v(i).modulus());
  }
  return S(1);
}

}  // namespace

template <class S>
Echelon<S> rref(Matrix<S> m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const S inv = m(r, c).inverse();
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const S f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return {m.topRows(r), std::move(pivots)};
}

template <class S>
Subspace<S> Subspace<S>::from_rows(const Matrix<S>& rows) {
  Subspace s(static_cast<int>(rows.cols()));
  auto e = rref<S>(rows);
  s.rows_ = std::move(e.rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

template <class S>
Subspace<S> Subspace<S>::span(int ambient, const std::vector<Vector<S>>& vs) {
  Matrix<S> m(static_cast<Eigen::Index>(vs.size()), ambient);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].size() != ambient) throw DimensionMismatch("span: vector length differs from ambient dimension");
    m.row(static_cast<Eigen::Index>(i)) = vs[i].transpose();
  }
  return from_rows(m);
}

template <class S>
Subspace<S> Subspace<S>::whole(const Field<S>& F, int ambient) {
  return from_rows(identity(F, ambient));
}

template <class S>
std::vector<Vector<S>> Subspace<S>::basis() const {
  std::vector<Vector<S>> out;
  for (int i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
  return out;
}

template <class S>
Vector<S> Subspace<S>::reduce(const Vector<S>& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length differs from ambient dimension");
  Vector<S> r = v;
  for (int i = 0; i < dim(); ++i) {
    const S c = r(pivots_[i]);
    if (c.is_zero()) continue;
    for (int j = 0; j < ambient_; ++j) r(j) -= c * rows_(i, j);
  }
  return r;
}

template <class S>
bool Subspace<S>::contains(const Vector<S>& v) const {
  return lielab::is_zero<S>(reduce(v));
}

template <class S>
bool Subspace<S>::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces in different ambient spaces");
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

template <class S>
std::vector<S> Subspace<S>::coordinates(const Vector<S>& v) const {
  if (!contains(v)) throw std::invalid_argument("vector is not in the subspace");
  std::vector<S> c;
  for (int p : pivots_) c.push_back(v(p));
  return c;
}

template <class S>
std::vector<int> Subspace<S>::non_pivots() const {
  std::vector<int> out;
  std::size_t k = 0;
  for (int j = 0; j < ambient_; ++j) {
    if (k < pivots_.size() && pivots_[k] == j) {
      ++k;
      continue;
    }
    out.push_back(j);
  }
  return out;
}

template <class S>
Subspace<S> sum(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.ambient() != b.ambient()) throw DimensionMismatch("sum of subspaces in different ambient spaces");
  Matrix<S> m(a.dim() + b.dim(), a.ambient());
  m << a.rows(), b.rows();
  return Subspace<S>::from_rows(m);
}

template <class S>
Subspace<S> annihilator(const Subspace<S>& a) {
  if (a.dim() == 0) {
    Matrix<S> id = Matrix<S>::Identity(a.ambient(), a.ambient());
    return Subspace<S>::from_rows(id);
  }
  return kernel<S>(a.rows());
}

template <class S>
Subspace<S> intersection(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.ambient() != b.ambient())
    throw DimensionMismatch("intersection of subspaces in different ambient spaces");
  const Subspace<S> na = annihilator(a), nb = annihilator(b);
  Matrix<S> m(na.dim() + nb.dim(), a.ambient());
  m << na.rows(), nb.rows();
  return kernel<S>(m);
}

template <class S>
Subspace<S> kernel(const Matrix<S>& m) {
  const int n = static_cast<int>(m.cols());
  const Echelon<S> e = rref<S>(m);
  const S one = one_like<S>(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<Vector<S>> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector<S> v = Vector<S>::Constant(n, S(0));
    v(f) = one;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v(e.pivots[r]) = -e.rows(static_cast<Eigen::Index>(r), f);
    basis.push_back(std::move(v));
  }
  return Subspace<S>::span(n, basis);
}

template <class S>
Subspace<S> image(const Matrix<S>& m) {
  return Subspace<S>::from_rows(m.transpose());
}

template <class S>
std::optional<Vector<S>> solve(const Matrix<S>& m, const Vector<S>& b) {
  if (m.rows() != b.size())
    throw DimensionMismatch("solve: right-hand side has " + std::to_string(b.size()) + " entries for " +
                            std::to_string(m.rows()) + " equations");
  Matrix<S> aug(m.rows(), m.cols() + 1);
  aug << m, b;
  const Echelon<S> e = rref<S>(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector<S> x = Vector<S>::Constant(m.cols(), S(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x(e.pivots[r]) = e.rows(static_cast<Eigen::Index>(r), m.cols());
  return x;
}

template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& m) {
  require_square(m, "inverse");
  const Eigen::Index n = m.rows();
  Matrix<S> aug(n, 2 * n);
  Matrix<S> id = Matrix<S>::Constant(n, n, S(0));
  const S one = one_like<S>(m);
  for (Eigen::Index i = 0; i < n; ++i) id(i, i) = one;
  aug << m, id;
  const Echelon<S> e = rref<S>(aug);
  if (static_cast<Eigen::Index>(e.pivots.size()) < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return Matrix<S>(e.rows.rightCols(n));
}

template <class S>
Matrix<S> matrix_power(const Matrix<S>& m, int k) {
  require_square(m, "matrix_power");
  Matrix<S> r = Matrix<S>::Constant(m.rows(), m.cols(), S(0));
  const S one = one_like<S>(m);
  for (Eigen::Index i = 0; i < m.rows(); ++i) r(i, i) = one;
  Matrix<S> base = m;
  for (; k > 0; k >>= 1) {
    if (k & 1) r = product(r, base);
    if (k > 1) base = product(base, base);
  }
  return r;
}

template <class S>
UniPoly<S> char_poly_berkowitz(const Matrix<S>& m) {
  require_square(m, "char_poly");
  const int n = static_cast<int>(m.rows());
  const S one = one_like<S>(m);
  auto c = berkowitz<S>(n, [&](int i, int j) { return m(i, j); }, S(0), one);
  return UniPoly<S>(std::move(c));
}

template <class S>
UniPoly<S> char_poly_hessenberg(const Matrix<S>& m) {
  require_square(m, "char_poly");
  const int n = static_cast<int>(m.rows());
  Matrix<S> h = m;
  for (int col = 1; col + 1 < n; ++col) {
    int i = col;
    while (i < n && h(i, col - 1).is_zero()) ++i;
    if (i == n) continue;
    if (i != col) {
      h.row(i).swap(h.row(col));
      h.col(i).swap(h.col(col));
    }
    const S inv = h(col, col - 1).inverse();
    for (int j = col + 1; j < n; ++j) {
      if (h(j, col - 1).is_zero()) continue;
      const S u = h(j, col - 1) * inv;
      for (int k = 0; k < n; ++k) h(j, k) -= u * h(col, k);
      for (int k = 0; k < n; ++k) h(k, col) += u * h(k, j);
    }
  }
  // p_k is the characteristic polynomial of the leading k x k block.
  const S one = one_like<S>(m);
  std::vector<UniPoly<S>> p;
  p.push_back(UniPoly<S>({one}));
  const UniPoly<S> t = UniPoly<S>::monomial(one, 1);
  for (int k = 1; k <= n; ++k) {
    UniPoly<S> pk = (t - UniPoly<S>({h(k - 1, k - 1)})) * p[k - 1];
    S prod = one;
    for (int i = 1; i < k; ++i) {
      prod *= h(k - i, k - i - 1);
      pk -= (prod * h(k - i - 1, k - 1)) * p[k - i - 1];
    }
    p.push_back(std::move(pk));
  }
  return p[n];
}

template <class S>
UniPoly<S> char_poly(const Matrix<S>& m) {
  if constexpr (std::is_same_v<S, Rational>) {
    require_square(m, "char_poly");
    mpz_class den = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      for (Eigen::Index i = 0; i < m.rows(); ++i)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).denominator().get_mpz_t());
    const Rational d{mpq_class(den)};
    Matrix<S> scaled = m;
    if (!d.is_one())
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) scaled(i, j) *= d;
    UniPoly<S> pi = char_poly_berkowitz(scaled);
    if (d.is_one()) return pi;
    // det(t - dM) = d^n det(t/d - M)
    std::vector<S> c = pi.coeffs();
    const int n = static_cast<int>(m.rows());
    Rational scale(1);
    for (int i = n; i >= 0; --i) {
      c[i] /= scale;
      scale *= d;
    }
    return UniPoly<S>(std::move(c));
  } else {
    return char_poly_hessenberg(m);
  }
}

template <class S>
Matrix<S> product(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("product: inner dimensions differ");
  Matrix<S> r = Matrix<S>::Constant(a.rows(), b.cols(), S(0));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

template <class S>
Vector<S> product(const Matrix<S>& a, const Vector<S>& v) {
  if (a.cols() != v.size()) throw DimensionMismatch("product: inner dimensions differ");
  Vector<S> r = Vector<S>::Constant(a.rows(), S(0));
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    if (v(k).is_zero()) continue;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!a(i, k).is_zero()) r(i) += a(i, k) * v(k);
  }
  return r;
}

template <class S>
Matrix<S> eval_poly(const UniPoly<S>& p, const Matrix<S>& m) {
  require_square(m, "eval_poly");
  Matrix<S> acc = Matrix<S>::Constant(m.rows(), m.cols(), S(0));
  for (int i = p.degree(); i >= 0; --i) {
    acc = product(acc, m);
    for (Eigen::Index k = 0; k < m.rows(); ++k) acc(k, k) += p.coeffs()[i];
  }
  return acc;
}

template <class S>
UniPoly<S> min_poly(const Matrix<S>& m) {
  require_square(m, "min_poly");
  const int n = static_cast<int>(m.rows());
  const S one = one_like<S>(m);
  const S zero = one - one;
  UniPoly<S> acc({one});
  // echelon rows of everything spun so far; a basis vector inside their span
  // adds no new factor
  std::vector<std::pair<int, Vector<S>>> seen;
  auto reduce_seen = [&](Vector<S> v) {
    for (const auto& [p, r] : seen)
      if (!v(p).is_zero()) v -= (v(p) / r(p)) * r;
    return v;
  };
  auto first_nonzero = [](const Vector<S>& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (!v(i).is_zero()) return static_cast<int>(i);
    return -1;
  };
  for (int b = 0; b < n; ++b) {
    Vector<S> v = Vector<S>::Constant(n, zero);
    v(b) = one;
    if (first_nonzero(reduce_seen(v)) < 0) continue;
    // local echelon rows r_i = q_i(m) e_b with pivots p_i
    std::vector<int> piv;
    std::vector<Vector<S>> rows;
    std::vector<UniPoly<S>> polys;
    UniPoly<S> q({one});
    while (true) {
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (v(piv[i]).is_zero()) continue;
        const S f = v(piv[i]) / rows[i](piv[i]);
        v -= f * rows[i];
        q = q - f * polys[i];
      }
      const int p = first_nonzero(v);
      if (p < 0) break;
      piv.push_back(p);
      rows.push_back(v);
      polys.push_back(q);
      const Vector<S> g = reduce_seen(v);
      if (const int gp = first_nonzero(g); gp >= 0) seen.push_back({gp, g});
      v = product(m, v);
      q = q * UniPoly<S>({zero, one});
    }
    acc = poly_lcm(acc, q);
  }
  return acc.monic();
}

template <class S>
JordanChevalley<S> jordan_chevalley(const Matrix<S>& m) {
  require_square(m, "jordan_chevalley");
  const int n = static_cast<int>(m.rows());
  if (n == 0) return {m, m};
  const UniPoly<S> g = squarefree_part(char_poly(m));
  const UniPoly<S> dg = g.derivative();
  Matrix<S> s = m;
  // Newton converges quadratically: the nilpotency index is at most n.
  const int max_iter = static_cast<int>(std::ceil(std::log2(static_cast<double>(n) + 1))) + 2;
  for (int it = 0;; ++it) {
    const Matrix<S> gs = eval_poly(g, s);
    if (is_zero<S>(gs)) break;
    if (it == max_iter) throw std::logic_error("jordan_chevalley: Newton iteration did not converge");
    auto inv = inverse<S>(eval_poly(dg, s));
    if (!inv) throw std::logic_error("jordan_chevalley: g'(S) singular");
    s = s - product(gs, *inv);
  }
  JordanChevalley<S> out{s, m - s};
  if (!equal<S>(product(out.semisimple, out.nilpotent), product(out.nilpotent, out.semisimple)))
    throw std::logic_error("jordan_chevalley: parts do not commute");
  if (!is_zero<S>(matrix_power(out.nilpotent, n)))
    throw std::logic_error("jordan_chevalley: nilpotent part is not nilpotent");
  if (!is_zero<S>(eval_poly(squarefree_part(char_poly(out.semisimple)), out.semisimple)))
    throw std::logic_error("jordan_chevalley: semisimple part has repeated factors");
  return out;
}

template <class S>
std::vector<S> diagonalize_quadratic(const Matrix<S>& g) {
  if (!is_symmetric<S>(g)) throw std::invalid_argument("diagonalize_quadratic: matrix is not symmetric");
  const Eigen::Index n = g.rows();
  Matrix<S> a = g;
  std::vector<S> diag;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (a(k, k).is_zero()) {
      Eigen::Index j = k + 1;
      while (j < n && a(j, j).is_zero()) ++j;
      if (j < n) {
        a.row(k).swap(a.row(j));
        a.col(k).swap(a.col(j));
      } else {
        j = k + 1;
        while (j < n && a(k, j).is_zero()) ++j;
        if (j < n) {
          // x_k += x_j makes the pivot 2 a_kj (nonzero outside characteristic 2)
          a.row(k) += a.row(j);
          a.col(k) += a.col(j);
        }
      }
    }
    const S pivot = a(k, k);
    if (!pivot.is_zero()) {
      const S inv = pivot.inverse();
      for (Eigen::Index i = k + 1; i < n; ++i) {
        if (a(i, k).is_zero()) continue;
        const S f = a(i, k) * inv;
        a.row(i) -= f * a.row(k);
        a.col(i) -= f * a.col(k);
      }
    }
    diag.push_back(pivot);
  }
  return diag;
}

#define LIELAB_INSTANTIATE(S)                                                                  \
  template Echelon<S> rref<S>(Matrix<S>);                                                      \
  template class Subspace<S>;                                                                  \
  template Subspace<S> sum<S>(const Subspace<S>&, const Subspace<S>&);                         \
  template Subspace<S> intersection<S>(const Subspace<S>&, const Subspace<S>&);                \
  template Subspace<S> annihilator<S>(const Subspace<S>&);                                     \
  template Subspace<S> kernel<S>(const Matrix<S>&);                                            \
  template Subspace<S> image<S>(const Matrix<S>&);                                             \
  template std::optional<Vector<S>> solve<S>(const Matrix<S>&, const Vector<S>&);              \
  template std::optional<Matrix<S>> inverse<S>(const Matrix<S>&);                              \
  template Matrix<S> matrix_power<S>(const Matrix<S>&, int);                                   \
  template Matrix<S> product<S>(const Matrix<S>&, const Matrix<S>&);                           \
  template Vector<S> product<S>(const Matrix<S>&, const Vector<S>&);                           \
  template UniPoly<S> char_poly<S>(const Matrix<S>&);                                          \
  template UniPoly<S> char_poly_hessenberg<S>(const Matrix<S>&);                               \
  template UniPoly<S> char_poly_berkowitz<S>(const Matrix<S>&);                                \
  template UniPoly<S> min_poly<S>(const Matrix<S>&);                                           \
  template Matrix<S> eval_poly<S>(const UniPoly<S>&, const Matrix<S>&);                        \
  template JordanChevalley<S> jordan_chevalley<S>(const Matrix<S>&);                           \
  template std::vector<S> diagonalize_quadratic<S>(const Matrix<S>&);

LIELAB_INSTANTIATE(Rational)
LIELAB_INSTANTIATE(Zp)

#undef LIELAB_INSTANTIATE

}  // namespace lielab
