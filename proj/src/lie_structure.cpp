#include <algorithm>
#include <random>

#include "lielab/lie_algebra.hpp"

namespace lielab {

namespace {

template <class S>
Matrix<S> unflatten(const Field<S>& F, const Vector<S>& v, int n) {
  Matrix<S> m = zeros(F, n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = v(r * n + c);
  return m;
}

template <class S>
Vector<S> flatten(const Matrix<S>& m) {
  const Eigen::Index n = m.rows();
  Vector<S> v(n * m.cols());
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) v(r * m.cols() + c) = m(r, c);
  return v;
}

// Index of the unknown omega(i, j), i < j, in the list of pairs.
struct PairIndex {
  explicit PairIndex(int n) : n(n) {}
  int operator()(int i, int j) const { return i * n - i * (i + 1) / 2 + (j - i - 1); }
  int count() const { return n * (n - 1) / 2; }
  int n;
};

// Iterates all vectors of F_p^n in the order (1,0,..,0), (2,0,..,0), ...
// i.e. the first coordinate is the fastest digit.
template <class F>
void for_each_nonzero(const Field<Zp>& field, int n, F&& fn) {
  const std::uint32_t p = field.size();
  std::vector<std::uint32_t> digits(static_cast<std::size_t>(n), 0);
  while (true) {
    int k = 0;
    while (k < n && ++digits[k] == p) digits[k++] = 0;
    if (k == n) return;
    Vector<Zp> v(n);
    for (int i = 0; i < n; ++i) v(i) = field.element(digits[i]);
    if (!fn(v)) return;
  }
}

}  // namespace

template <class S>
DerivationAlgebra<S> derivation_algebra(const LieAlgebra<S>& L, const Budget& budget) {
  const int n = L.dim();
  if (Field<S>::kind == FieldKind::Fp && n > budget.derivation_dim)
    throw BudgetExceeded("derivation_algebra: dim " + std::to_string(n) + " exceeds the modular budget of " +
                         std::to_string(budget.derivation_dim));
  // unknown D(a, b) at a * n + b
  const int pairs = n * (n - 1) / 2;
  Matrix<S> sys = zeros(L.field(), pairs * n, n * n);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Vector<S> cij = L.bracket_basis(i, j);
      for (int k = 0; k < n; ++k, ++row) {
        // (D [b_i, b_j])_k - ([D b_i, b_j])_k - ([b_i, D b_j])_k
        for (int m = 0; m < n; ++m) {
          sys(row, k * n + m) += cij(m);
          sys(row, m * n + i) -= L.ad_basis(m)(k, j);
          sys(row, m * n + j) -= L.ad_basis(i)(k, m);
        }
      }
    }
  const Subspace<S> sol = n == 0 ? Subspace<S>(0) : (pairs == 0 ? Subspace<S>::whole(L.field(), n * n) : kernel<S>(sys));
  std::vector<Matrix<S>> maps;
  for (int s = 0; s < sol.dim(); ++s) maps.push_back(unflatten(L.field(), sol.basis_vector(s), n));
  std::vector<std::string> labels;
  for (int s = 0; s < sol.dim(); ++s) labels.push_back("D" + std::to_string(s));
  auto alg = LieAlgebra<S>::from_bracket(L.field(), labels, [&](int a, int b) {
    const Matrix<S> c = maps[a] * maps[b] - maps[b] * maps[a];
    const std::vector<S> coords = sol.coordinates(flatten<S>(c));
    Vector<S> v = zero_vector(L.field(), sol.dim());
    for (int k = 0; k < sol.dim(); ++k) v(k) = coords[k];
    return v;
  });
  return {std::move(maps), std::move(alg)};
}

template <class S>
std::vector<Matrix<S>> centroid(const LieAlgebra<S>& L) {
  const int n = L.dim();
  if (n == 0) return {};
  // phi ad(b_y) = ad(b_y) phi for every y
  Matrix<S> sys = zeros(L.field(), n * n * n, n * n);
  int row = 0;
  for (int y = 0; y < n; ++y) {
    const Matrix<S>& a = L.ad_basis(y);
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l, ++row)
        for (int m = 0; m < n; ++m) {
          sys(row, k * n + m) += a(m, l);
          sys(row, m * n + l) -= a(k, m);
        }
  }
  const Subspace<S> sol = kernel<S>(sys);
  std::vector<Matrix<S>> out;
  for (int s = 0; s < sol.dim(); ++s) out.push_back(unflatten(L.field(), sol.basis_vector(s), n));
  return out;
}

template <class S>
Verdict<S> is_simple(const LieAlgebra<S>& L, const Budget& budget) {
  const int n = L.dim();
  if (n == 0) throw std::invalid_argument("is_simple: zero-dimensional algebra");
  const Subspace<S> comm = commutant(L);
  if (comm.is_zero()) {
    std::vector<Vector<S>> w;
    if (n > 1) w.push_back(L.basis_vector(0));
    return Verdict<S>::refute(Proof::Structural, w, "abelian");
  }
  if (comm.dim() < n) return Verdict<S>::refute(Proof::Structural, comm.basis(), "commutant is a proper ideal");
  const Subspace<S> z = center(L);
  if (!z.is_zero()) return Verdict<S>::refute(Proof::Structural, z.basis(), "center is a proper ideal");

  if constexpr (Field<S>::kind == FieldKind::Fp) {
    double total = 1;
    for (int i = 0; i < n; ++i) total *= L.field().size();
    if (total > static_cast<double>(budget.exhaustive_cap))
      return Verdict<S>::inconclusive("perfect and centerless; exhaustive ideal scan exceeds budget");
    Evidence ev;
    Verdict<S> result = Verdict<S>::certify(Proof::Exhaustive);
    for_each_nonzero(L.field(), n, [&](const Vector<Zp>& v) {
      // one representative per line: first nonzero coordinate equal to 1
      int lead = 0;
      while (v(lead).is_zero()) ++lead;
      if (!v(lead).is_one()) return true;
      ++ev.checked;
      const Subspace<S> id = ideal_generated(L, {v});
      if (id.dim() < n) {
        result = Verdict<S>::refute(Proof::Exhaustive, id.basis(), "proper ideal generated by a nonzero element");
        return false;
      }
      return true;
    });
    result.evidence = ev;
    return result;
  } else {
    const BilinearForm<S> kf = killing_form(L);
    if (!kf.nondegenerate()) {
      const Subspace<S> rad = orthogonal_complement(kf, comm);
      return Verdict<S>::refute(Proof::Structural, rad.basis(), "solvable radical is a nonzero proper ideal");
    }
    const auto cen = centroid(L);
    const int d = static_cast<int>(cen.size());
    if (d == 1) return Verdict<S>::certify(Proof::Structural, "Killing form nondegenerate, centroid is the ground field");
    if (d > 4) return Verdict<S>::inconclusive("centroid dimension above 4");
    std::mt19937_64 rng(budget.seed);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int attempt = 0; attempt < 16; ++attempt) {
      Matrix<S> phi = zeros(L.field(), n, n);
      for (const auto& c : cen) phi += L.field().from_int(coef(rng)) * c;
      const UniPoly<S> mp = min_poly(phi);
      const FactorProbe probe = probe_irreducible(mp);
      if (probe.result == Irreducibility::Reducible) {
        // kernel of f(phi) is an ideal: phi commutes with every ad x
        const Subspace<S> id = kernel<S>(eval_poly(probe.factor, phi));
        if (id.dim() > 0 && id.dim() < n)
          return Verdict<S>::refute(Proof::Structural, id.basis(), "centroid has zero divisors");
      }
      if (probe.result == Irreducibility::Irreducible && mp.degree() == d)
        return Verdict<S>::certify(Proof::Structural, "centroid is a field of degree " + std::to_string(d));
    }
    return Verdict<S>::inconclusive("centroid structure undecided");
  }
}

template <class S>
bool is_cocycle(const LieAlgebra<S>& L, const Matrix<S>& omega) {
  const int n = L.dim();
  if (omega.rows() != n || omega.cols() != n) throw DimensionMismatch("cocycle: wrong matrix size");
  for (int i = 0; i < n; ++i) {
    if (!omega(i, i).is_zero()) return false;
    for (int j = i + 1; j < n; ++j)
      if (omega(i, j) != -omega(j, i)) return false;
  }
  auto w = [&](const Vector<S>& a, int k) { return a.dot(omega.col(k)); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const S s = w(L.bracket_basis(i, j), k) + w(L.bracket_basis(j, k), i) + w(L.bracket_basis(k, i), j);
        if (!s.is_zero()) return false;
      }
  return true;
}

template <class S>
H2Result<S> h2_trivial(const LieAlgebra<S>& L) {
  const int n = L.dim();
  const PairIndex idx(n);
  const int u = idx.count();
  H2Result<S> out;
  if (u == 0) return out;
  // coefficient of omega(m, k) as a signed unknown
  auto add = [&](Matrix<S>& sys, int row, int m, int k, const S& c) {
    if (m == k || c.is_zero()) return;
    if (m < k) sys(row, idx(m, k)) += c;
    else sys(row, idx(k, m)) -= c;
  };
  const int triples = n * (n - 1) * (n - 2) / 6;
  Matrix<S> sys = zeros(L.field(), std::max(triples, 1), u);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k, ++row) {
        const Vector<S> cij = L.bracket_basis(i, j), cjk = L.bracket_basis(j, k), cki = L.bracket_basis(k, i);
        for (int m = 0; m < n; ++m) {
          add(sys, row, m, k, cij(m));
          add(sys, row, m, i, cjk(m));
          add(sys, row, m, j, cki(m));
        }
      }
  const Subspace<S> z2 = kernel<S>(sys);
  // coboundaries: (i, j) -> f([b_i, b_j]) for f running over the dual basis
  std::vector<Vector<S>> bvecs;
  for (int m = 0; m < n; ++m) {
    Vector<S> v = zero_vector(L.field(), u);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) v(idx(i, j)) = L.bracket_basis(i, j)(m);
    bvecs.push_back(std::move(v));
  }
  Subspace<S> acc = Subspace<S>::span(u, bvecs);
  out.cocycles = z2.dim();
  out.coboundaries = acc.dim();
  out.dim = out.cocycles - out.coboundaries;
  for (int s = 0; s < z2.dim(); ++s) {
    const Vector<S> z = z2.basis_vector(s);
    if (acc.contains(z)) continue;
    acc = sum(acc, Subspace<S>::span(u, {z}));
    Matrix<S> w = zeros(L.field(), n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        w(i, j) = z(idx(i, j));
        w(j, i) = -z(idx(i, j));
      }
    out.representatives.push_back(std::move(w));
  }
  return out;
}

template <class S>
LieAlgebra<S> central_extension(const LieAlgebra<S>& L, const Matrix<S>& omega) {
  if (!is_cocycle(L, omega)) throw std::invalid_argument("central_extension: form is not an alternating 2-cocycle");
  const int n = L.dim();
  std::vector<std::string> labels = L.labels();
  std::string c = "c";
  while (std::find(labels.begin(), labels.end(), c) != labels.end()) c += "'";
  labels.push_back(c);
  return LieAlgebra<S>::from_bracket(L.field(), labels, [&](int i, int j) {
    Vector<S> v = zero_vector(L.field(), n + 1);
    if (j < n) {
      v.head(n) = L.bracket_basis(i, j);
      v(n) = omega(i, j);
    }
    return v;
  });
}

template <class S>
Matrix<S> extension_cocycle(const LieAlgebra<S>& L, const Vector<S>& c) {
  if (c.size() != L.dim() || is_zero<S>(c)) throw std::invalid_argument("extension_cocycle: need a nonzero element");
  if (!center(L).contains(c)) throw std::invalid_argument("extension_cocycle: element is not central");
  const Subspace<S> I = Subspace<S>::span(L.dim(), {c});
  const std::vector<int> reps = I.non_pivots();
  const int p0 = I.pivots()[0];
  const int d = static_cast<int>(reps.size());
  Matrix<S> w = zeros(L.field(), d, d);
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      const Vector<S> v = L.bracket_basis(reps[a], reps[b]);
      const Vector<S> q = project_to_quotient(I, v);
      Vector<S> lift = v;
      for (int k = 0; k < d; ++k) lift(reps[k]) -= q(k);
      // what remains is a multiple of the echelon vector of I, which is 1 at p0
      w(a, b) = lift(p0);
      w(b, a) = -lift(p0);
    }
  return w;
}

#define LIELAB_INSTANTIATE(S)                                                          \
  template DerivationAlgebra<S> derivation_algebra<S>(const LieAlgebra<S>&, const Budget&);           \
  template std::vector<Matrix<S>> centroid<S>(const LieAlgebra<S>&);                   \
  template Verdict<S> is_simple<S>(const LieAlgebra<S>&, const Budget&);               \
  template bool is_cocycle<S>(const LieAlgebra<S>&, const Matrix<S>&);                 \
  template H2Result<S> h2_trivial<S>(const LieAlgebra<S>&);                            \
  template LieAlgebra<S> central_extension<S>(const LieAlgebra<S>&, const Matrix<S>&);       \
  template Matrix<S> extension_cocycle<S>(const LieAlgebra<S>&, const Vector<S>&);

LIELAB_INSTANTIATE(Rational)
LIELAB_INSTANTIATE(Zp)

#undef LIELAB_INSTANTIATE

}  // namespace lielab
