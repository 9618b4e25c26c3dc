#include "lielab/catalog.hpp"

#include <algorithm>

#include "lielab/points.hpp"

namespace lielab {

namespace {

std::string matrix_label(const char* stem, int i, int j, int n) {
  if (n < 10) return stem + std::to_string(i) + std::to_string(j);
  return stem + std::to_string(i) + "_" + std::to_string(j);
}

template <class S>
Matrix<S> elementary(const Field<S>& F, int n, int i, int j) {
  Matrix<S> m = zeros(F, n, n);
  m(i, j) = F.one();
  return m;
}

// Lie algebra spanned by the given matrices, with `coords` expressing a
// member matrix in that basis.
template <class S, class Coords>
LieAlgebra<S> matrix_algebra(const Field<S>& F, std::vector<std::string> labels, const std::vector<Matrix<S>>& basis,
                             Coords&& coords) {
  return LieAlgebra<S>::from_bracket(F, std::move(labels), [&](int a, int b) {
    return coords(Matrix<S>(basis[a] * basis[b] - basis[b] * basis[a]));
  });
}

void require_positive(long n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + " must be positive");
}

template <class S>
void require_char_divides(const Field<S>& F, int n, const char* name) {
  const std::uint32_t p = F.characteristic();
  if (p == 0 || n % static_cast<int>(p) != 0)
    throw std::invalid_argument(std::string(name) + "(" + std::to_string(n) + ") needs a field whose characteristic divides " +
                                std::to_string(n) + ", got " + F.name());
}

}  // namespace

template <class S>
LieAlgebra<S> abelian(const Field<S>& F, int n) {
  if (n < 0) throw std::invalid_argument("abelian: negative dimension");
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("a" + std::to_string(i));
  return LieAlgebra<S>(F, labels, {});
}

template <class S>
LieAlgebra<S> heisenberg(const Field<S>& F, int m) {
  require_positive(m, "heisenberg: m");
  std::vector<std::string> labels;
  for (int i = 1; i <= m; ++i) labels.push_back("x" + std::to_string(i));
  for (int i = 1; i <= m; ++i) labels.push_back("y" + std::to_string(i));
  labels.push_back("z");
  std::vector<typename LieAlgebra<S>::Bracket> br;
  for (int i = 0; i < m; ++i) br.push_back({i, m + i, {{2 * m, F.one()}}});
  return LieAlgebra<S>(F, labels, br);
}

template <class S>
LieAlgebra<S> r2(const Field<S>& F) {
  return LieAlgebra<S>(F, {"x", "y"}, {{0, 1, {{1, F.one()}}}});
}

template <class S>
LieAlgebra<S> gl(const Field<S>& F, int n) {
  require_positive(n, "gl: n");
  std::vector<std::string> labels;
  std::vector<Matrix<S>> basis;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      labels.push_back(matrix_label("E", i + 1, j + 1, n));
      basis.push_back(elementary(F, n, i, j));
    }
  return matrix_algebra(F, labels, basis, [&](const Matrix<S>& m) {
    Vector<S> v(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v(i * n + j) = m(i, j);
    return v;
  });
}

template <class S>
LieAlgebra<S> sl(const Field<S>& F, int n) {
  if (n < 2) throw std::invalid_argument("sl: n must be at least 2");
  std::vector<std::string> labels;
  std::vector<Matrix<S>> basis;
  std::vector<std::pair<int, int>> upper, lower;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i < j) upper.push_back({i, j});
      if (i > j) lower.push_back({i, j});
    }
  for (auto [i, j] : upper) {
    labels.push_back(matrix_label("E", i + 1, j + 1, n));
    basis.push_back(elementary(F, n, i, j));
  }
  for (int k = 0; k + 1 < n; ++k) {
    labels.push_back("H" + std::to_string(k + 1));
    basis.push_back(Matrix<S>(elementary(F, n, k, k) - elementary(F, n, k + 1, k + 1)));
  }
  for (auto [i, j] : lower) {
    labels.push_back(matrix_label("E", i + 1, j + 1, n));
    basis.push_back(elementary(F, n, i, j));
  }
  if (n == 2) labels = {"e", "h", "f"};
  const int nu = static_cast<int>(upper.size());
  return matrix_algebra(F, labels, basis, [&](const Matrix<S>& m) {
    Vector<S> v = zero_vector(F, n * n - 1);
    for (int s = 0; s < nu; ++s) v(s) = m(upper[s].first, upper[s].second);
    S acc = F.zero();
    for (int k = 0; k + 1 < n; ++k) {
      acc += m(k, k);
      v(nu + k) = acc;
    }
    for (int s = 0; s < nu; ++s) v(nu + n - 1 + s) = m(lower[s].first, lower[s].second);
    return v;
  });
}

template <class S>
Vector<S> sl_identity(const Field<S>& F, int n) {
  require_char_divides(F, n, "sl_identity");
  const int nu = n * (n - 1) / 2;
  Vector<S> v = zero_vector(F, n * n - 1);
  for (int k = 0; k + 1 < n; ++k) v(nu + k) = F.from_int(k + 1);
  return v;
}

template <class S>
Vector<S> gl_identity(const Field<S>& F, int n) {
  Vector<S> v = zero_vector(F, n * n);
  for (int i = 0; i < n; ++i) v(i * n + i) = F.one();
  return v;
}

template <class S>
LieAlgebra<S> psl(const Field<S>& F, int n) {
  require_char_divides(F, n, "psl");
  const LieAlgebra<S> L = sl(F, n);
  return quotient(L, Subspace<S>::span(L.dim(), {sl_identity(F, n)}));
}

template <class S>
LieAlgebra<S> pgl(const Field<S>& F, int n) {
  require_char_divides(F, n, "pgl");
  const LieAlgebra<S> L = gl(F, n);
  return quotient(L, Subspace<S>::span(L.dim(), {gl_identity(F, n)}));
}

template <class S>
LieAlgebra<S> upper_nilpotent(const Field<S>& F, int n) {
  if (n < 2) throw std::invalid_argument("upper_nilpotent: n must be at least 2");
  std::vector<std::string> labels;
  std::vector<Matrix<S>> basis;
  std::vector<std::pair<int, int>> idx;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      labels.push_back(matrix_label("E", i + 1, j + 1, n));
      basis.push_back(elementary(F, n, i, j));
      idx.push_back({i, j});
    }
  return matrix_algebra(F, labels, basis, [&](const Matrix<S>& m) {
    Vector<S> v(static_cast<Eigen::Index>(idx.size()));
    for (std::size_t s = 0; s < idx.size(); ++s) v(static_cast<Eigen::Index>(s)) = m(idx[s].first, idx[s].second);
    return v;
  });
}

LieAlgebra<Rational> su2q() {
  const Q F;
  const Rational two(2), m2(-2);
  return LieAlgebra<Rational>(F, {"i", "j", "k"}, {{0, 1, {{2, two}}}, {0, 2, {{1, m2}}}, {1, 2, {{0, two}}}});
}

template <class S>
QuaternionAlgebra<S> quaternion(const Field<S>& F, const S& a, const S& b) {
  if (F.characteristic() == 2) throw std::invalid_argument("quaternion algebras need characteristic other than 2");
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("quaternion parameters must be nonzero");
  const S one = F.one();
  const S z = F.zero();
  auto vec = [&](S c0, S c1, S c2, S c3) {
    Vector<S> v(4);
    v << c0, c1, c2, c3;
    return v;
  };
  // rows: 1, i, j, k times columns 1, i, j, k
  std::vector<Vector<S>> t = {
      vec(one, z, z, z), vec(z, one, z, z), vec(z, z, one, z), vec(z, z, z, one),
      vec(z, one, z, z), vec(a, z, z, z),   vec(z, z, z, one), vec(z, z, a, z),
      vec(z, z, one, z), vec(z, z, z, -one), vec(b, z, z, z),  vec(z, -b, z, z),
      vec(z, z, z, one), vec(z, z, -a, z),  vec(z, b, z, z),   vec(-(a * b), z, z, z),
  };
  return {AssocAlgebra<S>(F, {"1", "i", "j", "k"}, std::move(t), vec(one, z, z, z)), a, b};
}

template <class S>
S reduced_trace(const QuaternionAlgebra<S>& Q, const Vector<S>& x) {
  if (x.size() != 4) throw DimensionMismatch("quaternion has 4 coordinates");
  return Q.algebra.field().from_int(2) * x(0);
}

template <class S>
Vector<S> conjugate(const QuaternionAlgebra<S>&, const Vector<S>& x) {
  if (x.size() != 4) throw DimensionMismatch("quaternion has 4 coordinates");
  Vector<S> c = -x;
  c(0) = x(0);
  return c;
}

template <class S>
Verdict<S> is_division(const QuaternionAlgebra<S>& Q, Mode mode, const Budget& budget) {
  const Field<S>& F = Q.algebra.field();
  auto zero_divisor = [&](const Vector<S>& u) {
    return !is_zero<S>(u) && is_zero<S>(Q.algebra.multiply(u, conjugate(Q, u)));
  };
  auto refute = [&](const Vector<S>& u, Proof p, Evidence ev) {
    const Vector<S> v = conjugate(Q, u);
    if (!is_zero<S>(Q.algebra.multiply(u, v))) throw std::logic_error("zero divisor witness failed recheck");
    return Verdict<S>::refute(p, {u, v}, "u * v = 0 with u, v nonzero", ev);
  };
  if (mode == Mode::Exhaustive) {
    if constexpr (Field<S>::kind == FieldKind::Q) {
      throw std::invalid_argument("exhaustive mode requires a finite field");
    } else {
      if (fp_space_size(F.size(), 4) > budget.exhaustive_cap) throw BudgetExceeded("quaternion scan exceeds the cap");
      Evidence ev;
      FpScan scan(F, 4);
      while (scan.next()) {
        ++ev.checked;
        if (zero_divisor(scan.vector())) return refute(scan.vector(), Proof::Exhaustive, ev);
      }
      return Verdict<S>::certify(Proof::Exhaustive, "no zero divisors", ev);
    }
  }
  if (mode == Mode::Certificate) {
    if constexpr (Field<S>::kind == FieldKind::Q) {
      if (Q.a.sign() < 0 && Q.b.sign() < 0)
        return Verdict<S>::certify(Proof::DefiniteForm, "norm form x0^2 - a x1^2 - b x2^2 + ab x3^2 is positive definite");
      // a square parameter gives (r - e)(r + e) = r^2 - e^2 = 0
      const std::pair<S, int> squares[] = {{Q.a, 1}, {Q.b, 2}, {-(Q.a * Q.b), 3}};
      for (const auto& [s, idx] : squares) {
        if (s.sign() <= 0) continue;
        mpz_class num = s.numerator(), den = s.denominator();
        if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) continue;
        Vector<S> u = zero_vector(F, 4);
        u(0) = S(mpq_class(mpz_class(sqrt(num)), mpz_class(sqrt(den))));
        u(idx) = F.one();
        Vector<S> v = u;
        v(idx) = -F.one();
        if (!is_zero<S>(Q.algebra.multiply(u, v))) throw std::logic_error("zero divisor witness failed recheck");
        return Verdict<S>::refute(Proof::Structural, {u, v}, "u * v = 0 with u, v nonzero");
      }
    } else {
      if (fp_space_size(F.size(), 4) <= budget.exhaustive_cap) return is_division(Q, Mode::Exhaustive, budget);
    }
  }
  Evidence ev;
  HeightGrid grid(4, budget.search_height);
  while (ev.checked < budget.search_cap && grid.next()) {
    ++ev.checked;
    ev.height = grid.height();
    const Vector<S> u = grid.vector(F);
    if (zero_divisor(u)) return refute(u, Proof::Search, ev);
  }
  return Verdict<S>::inconclusive("no zero divisor among small quaternions", ev);
}

AssocAlgebra<Zp> reduced_polynomial_algebra(const Field<Zp>& F, int n) {
  require_positive(n, "reduced polynomial algebra: n");
  const std::uint32_t p = F.size();
  if (fp_space_size(p, n) > 4096) throw std::invalid_argument("reduced polynomial algebra larger than 4096");
  std::vector<std::vector<int>> mons;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  do {
    mons.push_back(e);
    int k = 0;
    while (k < n && ++e[k] == static_cast<int>(p)) e[k++] = 0;
    if (k == n) break;
  } while (true);
  std::sort(mons.begin(), mons.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    int da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da < db;
    return a > b;
  });
  const int d = static_cast<int>(mons.size());
  std::vector<std::string> labels;
  for (const auto& m : mons) {
    std::string s;
    for (int i = 0; i < n; ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += "x" + std::to_string(i + 1);
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    labels.push_back(s.empty() ? "1" : s);
  }
  std::vector<Vector<Zp>> prod;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Vector<Zp> v = zero_vector(F, d);
      std::vector<int> s(static_cast<std::size_t>(n));
      bool vanishes = false;
      for (int i = 0; i < n; ++i) {
        s[i] = mons[a][i] + mons[b][i];
        vanishes = vanishes || s[i] >= static_cast<int>(p);
      }
      if (!vanishes) v(std::find(mons.begin(), mons.end(), s) - mons.begin()) = F.one();
      prod.push_back(std::move(v));
    }
  return AssocAlgebra<Zp>(F, labels, std::move(prod), unit_vector(F, d, 0));
}

template <class S>
LieAlgebra<S> quotient_by_unit_line(const AssocAlgebra<S>& A) {
  const LieAlgebra<S> L = minus_algebra(A);
  if (!center(L).contains(A.unit())) throw std::invalid_argument("unit line is not central in the minus algebra");
  return quotient(L, Subspace<S>::span(L.dim(), {A.unit()}));
}

EnumStats enumerate_tables(const Field<Zp>& F, int dim,
                           const std::function<void(const EnumTable&, const LieAlgebra<Zp>&)>& consumer,
                           const Budget& budget) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("enumerate_tables: dimension must be 1, 2 or 3");
  const int pairs = dim * (dim - 1) / 2;
  const int len = pairs * dim;
  const std::uint32_t p = F.size();
  if (fp_space_size(p, len) > budget.exhaustive_cap)
    throw BudgetExceeded("enumeration of " + std::to_string(p) + "^" + std::to_string(len) + " tables exceeds the cap");
  std::vector<std::pair<int, int>> idx;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) idx.push_back({i, j});
  std::vector<std::string> labels;
  for (int i = 1; i <= dim; ++i) labels.push_back("b" + std::to_string(i));

  EnumStats stats;
  EnumTable t;
  t.dim = dim;
  t.p = p;
  t.coeffs.assign(static_cast<std::size_t>(len), 0);
  while (true) {
    ++stats.generated;
    std::vector<LieAlgebra<Zp>::Bracket> br;
    for (int s = 0; s < pairs; ++s) {
      SparseVec<Zp> c;
      for (int k = 0; k < dim; ++k)
        if (t.coeffs[s * dim + k] != 0) c.push_back({k, F.element(t.coeffs[s * dim + k])});
      if (!c.empty()) br.push_back({idx[s].first, idx[s].second, std::move(c)});
    }
    const auto L = LieAlgebra<Zp>::unchecked(F, labels, std::move(br));
    t.jacobi_valid = validate(L).empty();
    if (t.jacobi_valid) {
      ++stats.valid;
      consumer(t, L);
    }
    // lexicographic successor: last coefficient fastest
    int k = len - 1;
    while (k >= 0 && ++t.coeffs[k] == p) t.coeffs[k--] = 0;
    if (k < 0) break;
  }
  return stats;
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"abelian", "n", "Q, Fp", "abelian algebra of dimension n"},
      {"heisenberg", "m", "Q, Fp", "Heisenberg algebra of dimension 2m+1"},
      {"r2", "", "Q, Fp", "two-dimensional nonabelian algebra, [x,y] = y"},
      {"sl", "n", "Q, Fp", "trace-zero n x n matrices"},
      {"gl", "n", "Q, Fp", "all n x n matrices"},
      {"psl", "n", "Fp with p | n", "sl(n) modulo scalars"},
      {"pgl", "n", "Fp with p | n", "gl(n) modulo scalars"},
      {"upper", "n", "Q, Fp", "strictly upper triangular n x n matrices"},
      {"su2q", "", "Q", "trace-zero quaternions with i^2 = j^2 = -1"},
      {"quaternion", "a b", "Q, Fp", "associative quaternion algebra (a, b)"},
      {"quaternion-lie", "a b", "Q, Fp", "minus algebra of (a, b) modulo the unit line"},
      {"reduced-poly", "n", "Fp", "associative K[x1..xn]/(xi^p)"},
      {"sl2+sl2", "", "Q, Fp", "direct sum of two copies of sl(2)"},
      {"su2q+K", "", "Q", "su2q plus a one-dimensional center"},
      {"sl2*O1", "", "Fp", "sl(2) tensor K[x]/(x^p)"},
  };
  return entries;
}

namespace {

void arity(const std::string& name, const std::vector<long>& params, std::size_t k) {
  if (params.size() != k)
    throw std::invalid_argument(name + " takes " + std::to_string(k) + " parameter(s), got " + std::to_string(params.size()));
}

int small(long v, const char* what) {
  if (v < 0 || v > 64) throw std::invalid_argument(std::string(what) + " out of range");
  return static_cast<int>(v);
}

}  // namespace

template <class S>
AnyAlgebra<S> make(const Field<S>& F, const std::string& name, const std::vector<long>& params) {
  constexpr bool rational = Field<S>::kind == FieldKind::Q;
  auto only_q = [&] {
    if (!rational) throw std::invalid_argument(name + " is defined over Q only");
  };
  if (name == "abelian") return arity(name, params, 1), abelian(F, small(params[0], "n"));
  if (name == "heisenberg") return arity(name, params, 1), heisenberg(F, small(params[0], "m"));
  if (name == "r2") return arity(name, params, 0), r2(F);
  if (name == "sl") return arity(name, params, 1), sl(F, small(params[0], "n"));
  if (name == "gl") return arity(name, params, 1), gl(F, small(params[0], "n"));
  if (name == "psl") return arity(name, params, 1), psl(F, small(params[0], "n"));
  if (name == "pgl") return arity(name, params, 1), pgl(F, small(params[0], "n"));
  if (name == "upper") return arity(name, params, 1), upper_nilpotent(F, small(params[0], "n"));
  if (name == "quaternion" || name == "quaternion-lie") {
    arity(name, params, 2);
    const auto Qa = quaternion(F, F.from_int(params[0]), F.from_int(params[1]));
    if (name == "quaternion") return Qa.algebra;
    return quotient_by_unit_line(Qa.algebra);
  }
  if (name == "sl2+sl2") return arity(name, params, 0), direct_sum(sl(F, 2), sl(F, 2));
  if constexpr (rational) {
    if (name == "su2q") return arity(name, params, 0), su2q();
    if (name == "su2q+K") {
      arity(name, params, 0);
      const auto s = su2q();
      return LieAlgebra<S>(F, {"i", "j", "k", "c"}, s.brackets());
    }
  } else {
    if (name == "reduced-poly") return arity(name, params, 1), reduced_polynomial_algebra(F, small(params[0], "n"));
    if (name == "sl2*O1") return arity(name, params, 0), tensor_commutative(sl(F, 2), reduced_polynomial_algebra(F, 1));
  }
  for (const auto& e : catalog_entries())
    if (e.name == name) {
      if (name == "su2q" || name == "su2q+K") only_q();
      throw std::invalid_argument(name + " is not defined over " + F.name());
    }
  throw std::invalid_argument("unknown catalog algebra '" + name + "'");
}

#define LIELAB_INSTANTIATE(S)                                                                \
  template LieAlgebra<S> abelian<S>(const Field<S>&, int);                                   \
  template LieAlgebra<S> heisenberg<S>(const Field<S>&, int);                                \
  template LieAlgebra<S> r2<S>(const Field<S>&);                                             \
  template LieAlgebra<S> gl<S>(const Field<S>&, int);                                        \
  template LieAlgebra<S> sl<S>(const Field<S>&, int);                                        \
  template LieAlgebra<S> psl<S>(const Field<S>&, int);                                       \
  template LieAlgebra<S> pgl<S>(const Field<S>&, int);                                       \
  template Vector<S> sl_identity<S>(const Field<S>&, int);                                   \
  template Vector<S> gl_identity<S>(const Field<S>&, int);                                   \
  template LieAlgebra<S> upper_nilpotent<S>(const Field<S>&, int);                           \
  template QuaternionAlgebra<S> quaternion<S>(const Field<S>&, const S&, const S&);          \
  template S reduced_trace<S>(const QuaternionAlgebra<S>&, const Vector<S>&);                \
  template Vector<S> conjugate<S>(const QuaternionAlgebra<S>&, const Vector<S>&);            \
  template Verdict<S> is_division<S>(const QuaternionAlgebra<S>&, Mode, const Budget&);      \
  template LieAlgebra<S> quotient_by_unit_line<S>(const AssocAlgebra<S>&);                   \
  template AnyAlgebra<S> make<S>(const Field<S>&, const std::string&, const std::vector<long>&);

LIELAB_INSTANTIATE(Rational)
LIELAB_INSTANTIATE(Zp)

#undef LIELAB_INSTANTIATE

}  // namespace lielab
