#include "lielab/lie_algebra.hpp"

#include <algorithm>
#include <set>

namespace lielab {

namespace {

template <class S>
Vector<S> dense(const Field<S>& F, int n, const SparseVec<S>& sv) {
  Vector<S> v = zero_vector(F, n);
  for (const auto& [k, c] : sv) v(k) += c;
  return v;
}

template <class S>
SparseVec<S> sparse(const Vector<S>& v) {
  SparseVec<S> out;
  for (Eigen::Index k = 0; k < v.size(); ++k)
    if (!v(k).is_zero()) out.push_back({static_cast<int>(k), v(k)});
  return out;
}

// [v, b_k] for a vector v
template <class S>
Vector<S> bracket_with_basis(const LieAlgebra<S>& L, const Vector<S>& v, int k) {
  Vector<S> out = L.zero();
  for (int m = 0; m < L.dim(); ++m)
    if (!v(m).is_zero()) out += v(m) * L.ad_basis(m).col(k);
  return out;
}

std::string pair_name(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::vector<std::string> disambiguate(std::vector<std::string> a, const std::vector<std::string>& b) {
  std::set<std::string> seen(a.begin(), a.end());
  for (std::string l : b) {
    while (seen.count(l)) l += "'";
    seen.insert(l);
    a.push_back(l);
  }
  return a;
}

}  // namespace

// ---- LieAlgebra ------------------------------------------------------------

template <class S>
LieAlgebra<S>::LieAlgebra(Field<S> field, std::vector<std::string> labels, std::vector<Bracket> brackets)
    : LieAlgebra(std::move(field), std::move(labels), std::move(brackets), true) {}

template <class S>
LieAlgebra<S> LieAlgebra<S>::unchecked(Field<S> field, std::vector<std::string> labels,
                                       std::vector<Bracket> brackets) {
  return LieAlgebra(std::move(field), std::move(labels), std::move(brackets), false);
}

template <class S>
LieAlgebra<S>::LieAlgebra(Field<S> field, std::vector<std::string> labels, std::vector<Bracket> brackets, bool check)
    : field_(std::move(field)), labels_(std::move(labels)) {
  const int n = dim();
  std::set<std::string> unique(labels_.begin(), labels_.end());
  if (static_cast<int>(unique.size()) != n) throw std::invalid_argument("basis labels must be distinct");
  std::sort(brackets.begin(), brackets.end(),
            [](const Bracket& a, const Bracket& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });
  for (std::size_t t = 0; t < brackets.size(); ++t) {
    const Bracket& br = brackets[t];
    if (br.i < 0 || br.j >= n || br.i >= br.j)
      throw std::invalid_argument("bracket entry " + pair_name(br.i, br.j) + " needs 0 <= i < j < dim");
    if (t > 0 && brackets[t - 1].i == br.i && brackets[t - 1].j == br.j)
      throw std::invalid_argument("bracket entry " + pair_name(br.i, br.j) + " listed twice");
    for (const auto& [k, c] : br.coeffs)
      if (k < 0 || k >= n)
        throw std::invalid_argument("bracket entry " + pair_name(br.i, br.j) + " has coefficient index " +
                                    std::to_string(k) + " out of range");
  }
  ad_.assign(static_cast<std::size_t>(n), zeros(field_, n, n));
  for (const Bracket& br : brackets) {
    Vector<S> v = dense(field_, n, br.coeffs);
    if (lielab::is_zero<S>(v)) continue;
    ad_[br.i].col(br.j) = v;
    ad_[br.j].col(br.i) = -v;
    table_.push_back({br.i, br.j, sparse(v)});
  }
  if (check) {
    auto violations = validate(*this);
    if (!violations.empty()) {
      const auto& v = violations.front();
      throw ValidationError("Jacobi identity fails on (" + labels_[v.i] + ", " + labels_[v.j] + ", " +
                                labels_[v.k] + ")",
                            std::move(violations));
    }
  }
}

template <class S>
LieAlgebra<S> LieAlgebra<S>::from_bracket(Field<S> field, std::vector<std::string> labels,
                                          const std::function<Vector<S>(int, int)>& br, bool check) {
  const int n = static_cast<int>(labels.size());
  std::vector<Bracket> table;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      SparseVec<S> sv = sparse<S>(br(i, j));
      if (!sv.empty()) table.push_back({i, j, std::move(sv)});
    }
  return LieAlgebra(std::move(field), std::move(labels), std::move(table), check);
}

template <class S>
Vector<S> LieAlgebra<S>::element(const std::vector<long>& coords) const {
  if (static_cast<int>(coords.size()) != dim()) throw DimensionMismatch("element: wrong number of coordinates");
  Vector<S> v = zero();
  for (int i = 0; i < dim(); ++i) v(i) = field_.from_int(coords[i]);
  return v;
}

template <class S>
bool LieAlgebra<S>::same_table(const LieAlgebra& other) const {
  if (dim() != other.dim() || !(field_ == other.field_)) return false;
  for (int i = 0; i < dim(); ++i)
    if (!equal<S>(ad_[i], other.ad_[i])) return false;
  return true;
}

// ---- AssocAlgebra ----------------------------------------------------------

template <class S>
AssocAlgebra<S>::AssocAlgebra(Field<S> field, std::vector<std::string> labels, std::vector<Vector<S>> products,
                              Vector<S> unit)
    : field_(std::move(field)), labels_(std::move(labels)), prod_(std::move(products)), unit_(std::move(unit)) {
  const int n = dim();
  if (static_cast<int>(prod_.size()) != n * n) throw std::invalid_argument("multiplication table must list dim^2 products");
  for (const auto& p : prod_)
    if (p.size() != n) throw DimensionMismatch("product vector has wrong length");
  if (unit_.size() != n) throw DimensionMismatch("unit vector has wrong length");
  std::vector<Violation> bad;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Vector<S> left = multiply(product_basis(i, j), unit_vector(field_, n, k));
        const Vector<S> right = multiply(unit_vector(field_, n, i), product_basis(j, k));
        if (!equal<S>(left, right)) bad.push_back({i, j, k, "associativity"});
      }
  for (int i = 0; i < n; ++i) {
    const Vector<S> e = unit_vector(field_, n, i);
    if (!equal<S>(multiply(unit_, e), e) || !equal<S>(multiply(e, unit_), e)) bad.push_back({i, i, i, "unit"});
  }
  if (!bad.empty()) {
    const auto& v = bad.front();
    throw ValidationError(v.what + " fails at (" + labels_[v.i] + ", " + labels_[v.j] + ", " + labels_[v.k] + ")",
                          std::move(bad));
  }
}

template <class S>
Vector<S> AssocAlgebra<S>::multiply(const Vector<S>& x, const Vector<S>& y) const {
  const int n = dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("multiply: wrong vector length");
  Vector<S> out = zero_vector(field_, n);
  for (int i = 0; i < n; ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y(j).is_zero()) continue;
      out += (x(i) * y(j)) * product_basis(i, j);
    }
  }
  return out;
}

template <class S>
bool AssocAlgebra<S>::is_commutative() const {
  for (int i = 0; i < dim(); ++i)
    for (int j = i + 1; j < dim(); ++j)
      if (!equal<S>(product_basis(i, j), product_basis(j, i))) return false;
  return true;
}

// ---- BilinearForm ----------------------------------------------------------

template <class S>
BilinearForm<S>::BilinearForm(const LieAlgebra<S>& L, Matrix<S> gram) : gram_(std::move(gram)) {
  if (gram_.rows() != L.dim() || gram_.cols() != L.dim()) throw DimensionMismatch("Gram matrix size differs from dim L");
  if (!is_symmetric<S>(gram_)) throw std::invalid_argument("bilinear form is not symmetric");
  invariant_ = is_invariant(L, gram_);
  rank_ = matrix_rank<S>(gram_);
}

// ---- elements --------------------------------------------------------------

template <class S>
Matrix<S> ad(const LieAlgebra<S>& L, const Vector<S>& x) {
  if (x.size() != L.dim())
    throw DimensionMismatch("element has " + std::to_string(x.size()) + " coordinates, algebra has dim " +
                            std::to_string(L.dim()));
  Matrix<S> m = zeros(L.field(), L.dim(), L.dim());
  for (int i = 0; i < L.dim(); ++i)
    if (!x(i).is_zero()) m += x(i) * L.ad_basis(i);
  return m;
}

template <class S>
Vector<S> bracket(const LieAlgebra<S>& L, const Vector<S>& x, const Vector<S>& y) {
  if (y.size() != L.dim()) throw DimensionMismatch("bracket: wrong vector length");
  return ad(L, x) * y;
}

template <class S>
std::vector<Violation> validate(const LieAlgebra<S>& L) {
  std::vector<Violation> out;
  const int n = L.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vector<S> jac = bracket_with_basis(L, L.bracket_basis(i, j), k) +
                        bracket_with_basis(L, L.bracket_basis(j, k), i) +
                        bracket_with_basis(L, L.bracket_basis(k, i), j);
        if (!lielab::is_zero<S>(jac)) out.push_back({i, j, k, "jacobi"});
      }
  return out;
}

// ---- subspaces -------------------------------------------------------------

template <class S>
Subspace<S> bracket_span(const LieAlgebra<S>& L, const Subspace<S>& A, const Subspace<S>& B) {
  std::vector<Vector<S>> vs;
  for (int a = 0; a < A.dim(); ++a) {
    const Matrix<S> ada = ad(L, A.basis_vector(a));
    for (int b = 0; b < B.dim(); ++b) vs.push_back(ada * B.basis_vector(b));
  }
  return Subspace<S>::span(L.dim(), vs);
}

template <class S>
Subspace<S> center(const LieAlgebra<S>& L) {
  const int n = L.dim();
  // x central iff ad(b_i) x = 0 for every i
  Matrix<S> m(static_cast<Eigen::Index>(n) * n, n);
  for (int i = 0; i < n; ++i) m.middleRows(static_cast<Eigen::Index>(i) * n, n) = L.ad_basis(i);
  if (n == 0) return Subspace<S>(0);
  return kernel<S>(m);
}

template <class S>
Subspace<S> commutant(const LieAlgebra<S>& L) {
  std::vector<Vector<S>> vs;
  for (const auto& br : L.brackets()) vs.push_back(L.bracket_basis(br.i, br.j));
  return Subspace<S>::span(L.dim(), vs);
}

template <class S>
Subspace<S> centralizer(const LieAlgebra<S>& L, const Vector<S>& x) {
  return kernel<S>(ad(L, x));
}

template <class S>
Subspace<S> normalizer(const LieAlgebra<S>& L, const Subspace<S>& sub) {
  if (sub.ambient() != L.dim()) throw DimensionMismatch("normalizer: subspace in wrong ambient space");
  const int n = L.dim();
  const Subspace<S> ann = annihilator(sub);
  if (ann.dim() == 0) return whole(L);
  Matrix<S> m(static_cast<Eigen::Index>(sub.dim()) * ann.dim(), n);
  for (int s = 0; s < sub.dim(); ++s)
    m.middleRows(static_cast<Eigen::Index>(s) * ann.dim(), ann.dim()) = ann.rows() * ad(L, sub.basis_vector(s));
  if (sub.dim() == 0) return whole(L);
  return kernel<S>(m);
}

template <class S>
Subspace<S> ideal_generated(const LieAlgebra<S>& L, const std::vector<Vector<S>>& gens) {
  Subspace<S> cur = Subspace<S>::span(L.dim(), gens);
  const Subspace<S> all = whole(L);
  while (true) {
    Subspace<S> next = sum(cur, bracket_span(L, all, cur));
    if (next.dim() == cur.dim()) return cur;
    cur = std::move(next);
  }
}

template <class S>
Subspace<S> subalgebra_generated(const LieAlgebra<S>& L, const std::vector<Vector<S>>& gens) {
  Subspace<S> cur = Subspace<S>::span(L.dim(), gens);
  while (true) {
    Subspace<S> next = sum(cur, bracket_span(L, cur, cur));
    if (next.dim() == cur.dim()) return cur;
    cur = std::move(next);
  }
}

template <class S>
bool is_subalgebra(const LieAlgebra<S>& L, const Subspace<S>& sub) {
  return sub.contains(bracket_span(L, sub, sub));
}

template <class S>
bool is_ideal(const LieAlgebra<S>& L, const Subspace<S>& sub) {
  return sub.contains(bracket_span(L, whole(L), sub));
}

template <class S>
std::vector<Subspace<S>> lower_central_series(const LieAlgebra<S>& L) {
  std::vector<Subspace<S>> out{whole(L)};
  while (true) {
    Subspace<S> next = bracket_span(L, whole(L), out.back());
    if (next == out.back()) return out;
    out.push_back(std::move(next));
  }
}

template <class S>
std::vector<Subspace<S>> derived_series(const LieAlgebra<S>& L) {
  std::vector<Subspace<S>> out{whole(L)};
  while (true) {
    Subspace<S> next = bracket_span(L, out.back(), out.back());
    if (next == out.back()) return out;
    out.push_back(std::move(next));
  }
}

template <class S>
StructureReport structure_report(const LieAlgebra<S>& L) {
  StructureReport r;
  const auto lcs = lower_central_series(L);
  const auto ds = derived_series(L);
  r.nilpotent = lcs.back().is_zero();
  r.solvable = ds.back().is_zero();
  if (r.nilpotent) r.nilpotency_class = static_cast<int>(lcs.size()) - 1;
  if (r.solvable) r.derived_length = static_cast<int>(ds.size()) - 1;
  const Subspace<S> comm = commutant(L);
  r.commutant_dim = comm.dim();
  r.abelian = comm.is_zero();
  r.center_dim = center(L).dim();
  const BilinearForm<S> kf = killing_form(L);
  r.killing_rank = kf.rank();
  if constexpr (Field<S>::kind == FieldKind::Q) {
    r.radical_dim = orthogonal_complement(kf, comm).dim();
    r.semisimple = kf.nondegenerate();
  }
  return r;
}

// ---- forms -----------------------------------------------------------------

template <class S>
BilinearForm<S> killing_form(const LieAlgebra<S>& L) {
  const int n = L.dim();
  Matrix<S> g = zeros(L.field(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      S t = L.field().zero();
      const Matrix<S>& a = L.ad_basis(i);
      const Matrix<S>& b = L.ad_basis(j);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) t += a(r, c) * b(c, r);
      g(i, j) = t;
      g(j, i) = t;
    }
  return BilinearForm<S>(L, g);
}

template <class S>
bool is_invariant(const LieAlgebra<S>& L, const Matrix<S>& gram) {
  const int n = L.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // <[b_i, b_j], b_k> = <b_i, [b_j, b_k]> for all k at once
      const Vector<S> lhs = gram.transpose() * L.bracket_basis(i, j);
      const Vector<S> rhs = (gram.row(i) * L.ad_basis(j)).transpose();
      if (!equal<S>(lhs, rhs)) return false;
    }
  return true;
}

template <class S>
std::vector<Matrix<S>> invariant_forms(const LieAlgebra<S>& L) {
  const int n = L.dim();
  // unknowns: G(a, b) for a <= b
  std::vector<std::vector<int>> idx(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  int u = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) idx[a][b] = idx[b][a] = u++;
  Matrix<S> sys = zeros(L.field(), n * n * n, u);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vector<S> cij = L.bracket_basis(i, j);
      for (int k = 0; k < n; ++k, ++row) {
        const Vector<S> cjk = L.bracket_basis(j, k);
        for (int m = 0; m < n; ++m) {
          sys(row, idx[m][k]) += cij(m);
          sys(row, idx[i][m]) -= cjk(m);
        }
      }
    }
  std::vector<Matrix<S>> out;
  if (u == 0) return out;
  const Subspace<S> sol = kernel<S>(sys);
  for (int s = 0; s < sol.dim(); ++s) {
    Matrix<S> g = zeros(L.field(), n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) g(a, b) = sol.rows()(s, idx[a][b]);
    out.push_back(std::move(g));
  }
  return out;
}

template <class S>
Subspace<S> orthogonal_complement(const BilinearForm<S>& form, const Subspace<S>& sub) {
  if (sub.ambient() != form.dim()) throw DimensionMismatch("orthogonal complement: ambient mismatch");
  if (sub.dim() == 0) return Subspace<S>::from_rows(Matrix<S>::Identity(form.dim(), form.dim()));
  return kernel<S>(Matrix<S>(sub.rows() * form.gram()));
}

// ---- constructions ---------------------------------------------------------

template <class S>
LieAlgebra<S> subalgebra(const LieAlgebra<S>& L, const Subspace<S>& sub) {
  if (!is_subalgebra(L, sub)) throw std::invalid_argument("subspace is not a subalgebra");
  std::vector<std::string> labels;
  for (int s = 0; s < sub.dim(); ++s) {
    // standard basis vectors keep their label
    const Vector<S> v = sub.basis_vector(s);
    int nonzero = 0;
    for (int k = 0; k < L.dim(); ++k) nonzero += v(k).is_zero() ? 0 : 1;
    labels.push_back(nonzero == 1 ? L.label(sub.pivots()[s]) : "v" + std::to_string(s));
  }
  return LieAlgebra<S>::from_bracket(L.field(), labels, [&](int a, int b) {
    const Vector<S> br = bracket(L, sub.basis_vector(a), sub.basis_vector(b));
    const std::vector<S> c = sub.coordinates(br);
    Vector<S> out = zero_vector(L.field(), sub.dim());
    for (int k = 0; k < sub.dim(); ++k) out(k) = c[k];
    return out;
  });
}

template <class S>
Vector<S> project_to_quotient(const Subspace<S>& ideal, const Vector<S>& x) {
  const Vector<S> r = ideal.reduce(x);
  const std::vector<int> reps = ideal.non_pivots();
  Vector<S> out(static_cast<Eigen::Index>(reps.size()));
  for (std::size_t k = 0; k < reps.size(); ++k) out(static_cast<Eigen::Index>(k)) = r(reps[k]);
  return out;
}

template <class S>
LieAlgebra<S> quotient(const LieAlgebra<S>& L, const Subspace<S>& I) {
  if (I.ambient() != L.dim()) throw DimensionMismatch("quotient: subspace in wrong ambient space");
  if (!is_ideal(L, I)) throw std::invalid_argument("quotient: subspace is not an ideal");
  const std::vector<int> reps = I.non_pivots();
  std::vector<std::string> labels;
  for (int r : reps) labels.push_back(L.label(r));
  return LieAlgebra<S>::from_bracket(L.field(), labels, [&](int a, int b) {
    return project_to_quotient(I, L.bracket_basis(reps[a], reps[b]));
  });
}

template <class S>
LieAlgebra<S> direct_sum(const LieAlgebra<S>& a, const LieAlgebra<S>& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("direct sum of algebras over different fields");
  const int na = a.dim(), nb = b.dim();
  return LieAlgebra<S>::from_bracket(a.field(), disambiguate(a.labels(), b.labels()), [&](int i, int j) {
    Vector<S> v = zero_vector(a.field(), na + nb);
    if (j < na) v.head(na) = a.bracket_basis(i, j);
    else if (i >= na) v.tail(nb) = b.bracket_basis(i - na, j - na);
    return v;
  });
}

template <class S>
LieAlgebra<S> tensor_commutative(const LieAlgebra<S>& L, const AssocAlgebra<S>& A) {
  if (!(L.field() == A.field())) throw FieldMismatch("tensor product over different fields");
  if (!A.is_commutative()) throw std::invalid_argument("tensor_commutative: associative factor is not commutative");
  const int n = L.dim(), m = A.dim();
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int s = 0; s < m; ++s) labels.push_back(L.label(i) + "*" + A.labels()[s]);
  return LieAlgebra<S>::from_bracket(L.field(), labels, [&](int p, int q) {
    const int i = p / m, s = p % m, j = q / m, t = q % m;
    const Vector<S> lb = L.bracket_basis(i, j);
    const Vector<S>& ab = A.product_basis(s, t);
    Vector<S> v = zero_vector(L.field(), n * m);
    for (int k = 0; k < n; ++k) {
      if (lb(k).is_zero()) continue;
      for (int u = 0; u < m; ++u) v(k * m + u) += lb(k) * ab(u);
    }
    return v;
  });
}

template <class S>
LieAlgebra<S> minus_algebra(const AssocAlgebra<S>& A) {
  return LieAlgebra<S>::from_bracket(A.field(), A.labels(), [&](int i, int j) {
    return Vector<S>(A.product_basis(i, j) - A.product_basis(j, i));
  });
}

#define LIELAB_INSTANTIATE(S)                                                                        \
  template class LieAlgebra<S>;                                                                      \
  template class AssocAlgebra<S>;                                                                    \
  template class BilinearForm<S>;                                                                    \
  template Matrix<S> ad<S>(const LieAlgebra<S>&, const Vector<S>&);                                  \
  template Vector<S> bracket<S>(const LieAlgebra<S>&, const Vector<S>&, const Vector<S>&);           \
  template std::vector<Violation> validate<S>(const LieAlgebra<S>&);                                 \
  template Subspace<S> bracket_span<S>(const LieAlgebra<S>&, const Subspace<S>&, const Subspace<S>&); \
  template Subspace<S> center<S>(const LieAlgebra<S>&);                                              \
  template Subspace<S> commutant<S>(const LieAlgebra<S>&);                                           \
  template Subspace<S> centralizer<S>(const LieAlgebra<S>&, const Vector<S>&);                       \
  template Subspace<S> normalizer<S>(const LieAlgebra<S>&, const Subspace<S>&);                      \
  template Subspace<S> ideal_generated<S>(const LieAlgebra<S>&, const std::vector<Vector<S>>&);      \
  template Subspace<S> subalgebra_generated<S>(const LieAlgebra<S>&, const std::vector<Vector<S>>&);  \
  template bool is_subalgebra<S>(const LieAlgebra<S>&, const Subspace<S>&);                          \
  template bool is_ideal<S>(const LieAlgebra<S>&, const Subspace<S>&);                               \
  template std::vector<Subspace<S>> lower_central_series<S>(const LieAlgebra<S>&);                   \
  template std::vector<Subspace<S>> derived_series<S>(const LieAlgebra<S>&);                         \
  template StructureReport structure_report<S>(const LieAlgebra<S>&);                                \
  template BilinearForm<S> killing_form<S>(const LieAlgebra<S>&);                                    \
  template bool is_invariant<S>(const LieAlgebra<S>&, const Matrix<S>&);                             \
  template std::vector<Matrix<S>> invariant_forms<S>(const LieAlgebra<S>&);                          \
  template Subspace<S> orthogonal_complement<S>(const BilinearForm<S>&, const Subspace<S>&);         \
  template LieAlgebra<S> subalgebra<S>(const LieAlgebra<S>&, const Subspace<S>&);                    \
  template Vector<S> project_to_quotient<S>(const Subspace<S>&, const Vector<S>&);                   \
  template LieAlgebra<S> quotient<S>(const LieAlgebra<S>&, const Subspace<S>&);                      \
  template LieAlgebra<S> direct_sum<S>(const LieAlgebra<S>&, const LieAlgebra<S>&);                  \
  template LieAlgebra<S> tensor_commutative<S>(const LieAlgebra<S>&, const AssocAlgebra<S>&);        \
  template LieAlgebra<S> minus_algebra<S>(const AssocAlgebra<S>&);

LIELAB_INSTANTIATE(Rational)
LIELAB_INSTANTIATE(Zp)

#undef LIELAB_INSTANTIATE

}  // namespace lielab
