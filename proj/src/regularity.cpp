#include "lielab/regularity.hpp"

#include <random>

#include "lielab/points.hpp"

namespace lielab {

const char* to_string(RankMethod m) {
  switch (m) {
    case RankMethod::Trivial: return "trivial";
    case RankMethod::Symbolic: return "symbolic";
    case RankMethod::Grid: return "grid";
    case RankMethod::Exhaustive: return "exhaustive";
    case RankMethod::Sampled: return "sampled";
  }
  return "?";
}

const char* to_string(Mode m) {
  switch (m) {
    case Mode::Exhaustive: return "exhaustive";
    case Mode::Search: return "search";
    case Mode::Certificate: return "certificate";
  }
  return "?";
}

Mode parse_mode(const std::string& s) {
  if (s == "exhaustive") return Mode::Exhaustive;
  if (s == "search") return Mode::Search;
  if (s == "certificate") return Mode::Certificate;
  throw std::invalid_argument("unknown mode '" + s + "' (expected exhaustive, search or certificate)");
}

namespace {

template <class S>
void check_length(const LieAlgebra<S>& L, const Vector<S>& x) {
  if (x.size() != L.dim())
    throw DimensionMismatch("element has " + std::to_string(x.size()) + " coordinates, algebra has dimension " +
                            std::to_string(L.dim()));
}

template <class S>
bool is_central(const LieAlgebra<S>& L, const Vector<S>& x) {
  return is_zero<S>(ad(L, x));
}

template <class S>
bool ad_nilpotent(const LieAlgebra<S>& L, const Vector<S>& x) {
  return null_multiplicity(L, x) == L.dim();
}

// Runs `bad` over the grid and then over random points; the first element
// for which it holds is returned as a refutation.
template <class S, class Pred>
Verdict<S> search(const LieAlgebra<S>& L, const Budget& budget, const std::string& what, Pred&& bad) {
  const int n = L.dim();
  Evidence ev;
  HeightGrid grid(n, budget.search_height);
  while (ev.checked < budget.search_cap && grid.next()) {
    ++ev.checked;
    ev.height = grid.height();
    const Vector<S> x = grid.vector(L.field());
    if (is_zero<S>(x)) continue;  // possible over F_p
    if (bad(x)) return Verdict<S>::refute(Proof::Search, {x}, what, ev);
  }
  std::mt19937_64 rng(budget.seed);
  for (std::uint64_t t = 0; t < budget.trials; ++t) {
    const Vector<S> x = random_vector(L.field(), n, rng);
    ++ev.trials;
    if (is_zero<S>(x)) continue;
    if (bad(x)) return Verdict<S>::refute(Proof::Search, {x}, what, ev);
  }
  return Verdict<S>::inconclusive("no counterexample found", ev);
}

template <class S, class Pred>
Verdict<S> exhaustive(const LieAlgebra<S>& L, const Budget& budget, const std::string& what, Pred&& bad) {
  if constexpr (Field<S>::kind == FieldKind::Q) {
    throw std::invalid_argument("exhaustive mode requires a finite field");
  } else {
    const int n = L.dim();
    const std::uint64_t total = fp_space_size(L.field().size(), n);
    if (total > budget.exhaustive_cap)
      throw BudgetExceeded("exhaustive scan of " + L.field().name() + "^" + std::to_string(n) + " exceeds the cap of " +
                           std::to_string(budget.exhaustive_cap));
    Evidence ev;
    FpScan scan(L.field(), n);
    while (scan.next()) {
      ++ev.checked;
      const Vector<Zp> x = scan.vector();
      if (bad(x)) return Verdict<S>::refute(Proof::Exhaustive, {x}, what, ev);
    }
    return Verdict<S>::certify(Proof::Exhaustive, "all " + std::to_string(ev.checked) + " nonzero elements checked",
                               ev);
  }
}

template <class S>
bool exhaustive_feasible(const LieAlgebra<S>& L, const Budget& budget) {
  if constexpr (Field<S>::kind == FieldKind::Q) {
    return false;
  } else {
    return fp_space_size(L.field().size(), L.dim()) <= budget.exhaustive_cap;
  }
}

}  // namespace

template <class S>
std::vector<S> ad_char_coeffs(const LieAlgebra<S>& L, const Vector<S>& x) {
  check_length(L, x);
  const UniPoly<S> chi = char_poly(ad(L, x));
  std::vector<S> out(static_cast<std::size_t>(L.dim()) + 1, L.field().zero());
  for (int i = 0; i <= chi.degree(); ++i) out[i] = chi.coeffs()[i];
  return out;
}

template <class S>
GenericCharPoly<S> generic_char_poly(const LieAlgebra<S>& L, const Budget& budget) {
  const int n = L.dim();
  if (n > budget.symbolic_dim || n > Monomial::kMaxVars)
    throw BudgetExceeded("symbolic characteristic polynomial: dimension " + std::to_string(n) +
                         " exceeds the symbolic budget of " + std::to_string(budget.symbolic_dim));
  const MultiPoly<S> zero(n);
  const MultiPoly<S> one = MultiPoly<S>::constant(n, L.field().one());
  std::vector<MultiPoly<S>> entries(static_cast<std::size_t>(n * n), zero);
  for (int m = 0; m < n; ++m) {
    const MultiPoly<S> xm = MultiPoly<S>::variable(n, m, L.field().one());
    const Matrix<S>& a = L.ad_basis(m);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (!a(r, c).is_zero()) entries[r * n + c] += a(r, c) * xm;
  }
  GenericCharPoly<S> out;
  out.dim = n;
  out.coeffs = berkowitz(n, [&](int r, int c) -> const MultiPoly<S>& { return entries[r * n + c]; }, zero, one);
  if (out.coeffs.back() != one) throw std::logic_error("generic characteristic polynomial is not monic");
  if (n > 0 && !out.coeffs[0].is_zero()) throw std::logic_error("generic characteristic polynomial: a_0 is nonzero");
  for (int i = 0; i <= n; ++i)
    if (!out.coeffs[i].is_homogeneous(n - i))
      throw std::logic_error("generic characteristic polynomial: a_" + std::to_string(i) + " is not homogeneous");
  return out;
}

template <class S>
int null_multiplicity(const LieAlgebra<S>& L, const Vector<S>& x) {
  check_length(L, x);
  const UniPoly<S> chi = char_poly(ad(L, x));
  int i = 0;
  while (i < chi.degree() && chi.coeffs()[i].is_zero()) ++i;
  return i;
}

template <class S>
RankInfo rank_info(const LieAlgebra<S>& L, const Budget& budget) {
  const int n = L.dim();
  if (n == 0) return {0, RankMethod::Trivial, true};
  if (commutant(L).is_zero()) return {n, RankMethod::Trivial, true};
  if (n <= budget.symbolic_dim && n <= Monomial::kMaxVars) {
    const GenericCharPoly<S> g = generic_char_poly(L, budget);
    int r = 0;
    while (g[r].is_zero()) ++r;
    return {r, RankMethod::Symbolic, true};
  }
  // Smallest null multiplicity over a deterministic sample; an upper bound.
  int best = n;
  HeightGrid grid(n, 1);
  std::uint64_t seen = 0;
  while (best > 0 && seen < std::min<std::uint64_t>(budget.search_cap, 2000) && grid.next()) {
    ++seen;
    const Vector<S> x = grid.vector(L.field());
    if (!is_zero<S>(x)) best = std::min(best, null_multiplicity(L, x));
  }
  std::mt19937_64 rng(budget.seed);
  for (int t = 0; t < 16; ++t) best = std::min(best, null_multiplicity(L, random_vector(L.field(), n, rng)));
  // a_i for i < best has degree n - i <= n; it vanishes identically iff it
  // vanishes on {0..n}^n.
  const std::uint64_t grid_size = fp_space_size(static_cast<std::uint32_t>(n + 1), n);
  if constexpr (Field<S>::kind == FieldKind::Q) {
    if (grid_size <= budget.exhaustive_cap) {
      std::vector<long> digits(static_cast<std::size_t>(n), 0);
      while (true) {
        int k = 0;
        while (k < n && ++digits[k] == n + 1) digits[k++] = 0;
        if (k == n) break;
        best = std::min(best, null_multiplicity(L, L.element(digits)));
      }
      return {best, RankMethod::Grid, true};
    }
  }
  return {best, RankMethod::Sampled, false};
}

template <class S>
bool is_regular_element(const LieAlgebra<S>& L, const Vector<S>& x, int r) {
  check_length(L, x);
  if (is_zero<S>(x)) throw std::invalid_argument("regularity of the zero element");
  const int m = null_multiplicity(L, x);
  const int fit = kernel<S>(matrix_power(ad(L, x), L.dim())).dim();
  if (fit != m) throw std::logic_error("Fitting null component disagrees with the characteristic polynomial");
  if (m < r) throw std::logic_error("element with null multiplicity below the rank");
  return m == r;
}

template <class S>
bool almost_commuting(const LieAlgebra<S>& L, const Vector<S>& x, const Vector<S>& y) {
  return is_zero<S>(Vector<S>(matrix_power(ad(L, x), L.dim()) * y));
}

template <class S>
FittingDecomposition<S> fitting_set(const LieAlgebra<S>& L, const std::vector<Vector<S>>& X) {
  const int n = L.dim();
  if (X.empty()) throw std::invalid_argument("Fitting decomposition of an empty set");
  for (const auto& x : X) {
    check_length(L, x);
    if (is_zero<S>(x)) throw std::invalid_argument("Fitting decomposition with respect to the zero element");
  }
  for (std::size_t a = 0; a < X.size(); ++a)
    for (std::size_t b = 0; b < X.size(); ++b)
      if (a != b && !almost_commuting(L, X[a], X[b]))
        throw std::invalid_argument("elements " + std::to_string(a) + " and " + std::to_string(b) +
                                    " are not almost commuting");
  FittingDecomposition<S> fd{Subspace<S>::whole(L.field(), n), Subspace<S>(n), X};
  for (const auto& x : X) {
    const Matrix<S> pw = matrix_power(ad(L, x), n);
    fd.L0 = intersection(fd.L0, kernel<S>(pw));
    fd.L1 = sum(fd.L1, image<S>(pw));
  }
  if (fd.L0.dim() + fd.L1.dim() != n || !intersection(fd.L0, fd.L1).is_zero())
    throw std::logic_error("Fitting components do not form a direct sum");
  if (!is_subalgebra(L, fd.L0)) throw std::logic_error("Fitting null component is not a subalgebra");
  if (!fd.L1.contains(bracket_span(L, fd.L0, fd.L1)))
    throw std::logic_error("Fitting one component is not a module over the null component");
  if (X.size() == 1 && fd.L1.dim() > 0) {
    const Matrix<S> a = ad(L, X[0]);
    std::vector<Vector<S>> imgs;
    for (int i = 0; i < fd.L1.dim(); ++i) imgs.push_back(a * fd.L1.basis_vector(i));
    if (Subspace<S>::span(n, imgs) != fd.L1) throw std::logic_error("ad x is not invertible on the Fitting one component");
  }
  return fd;
}

template <class S>
FittingDecomposition<S> fitting(const LieAlgebra<S>& L, const Vector<S>& x) {
  return fitting_set(L, std::vector<Vector<S>>{x});
}

template <class S>
Matrix<S> ad_on_subspace(const LieAlgebra<S>& L, const Subspace<S>& I, const Vector<S>& x) {
  check_length(L, x);
  const int d = I.dim();
  Matrix<S> m = zeros(L.field(), d, d);
  for (int s = 0; s < d; ++s) {
    const Vector<S> img = bracket(L, x, I.basis_vector(s));
    if (!I.contains(img)) throw std::invalid_argument("subspace is not invariant under ad x");
    const std::vector<S> c = I.coordinates(img);
    for (int r = 0; r < d; ++r) m(r, s) = c[r];
  }
  return m;
}

template <class S>
Matrix<S> quadratic_form_gram(const Field<S>& F, const MultiPoly<S>& q) {
  const int n = q.nvars();
  if (!q.is_homogeneous(2)) throw std::invalid_argument("not a quadratic form");
  if (F.characteristic() == 2) throw std::invalid_argument("Gram matrix of a quadratic form in characteristic 2");
  const S half = F.from_int(2).inverse();
  Matrix<S> g = zeros(F, n, n);
  for (const auto& [m, c] : q.terms()) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < m.e[i]; ++k) idx.push_back(i);
    if (idx[0] == idx[1]) {
      g(idx[0], idx[0]) = c;
    } else {
      g(idx[0], idx[1]) = c * half;
      g(idx[1], idx[0]) = c * half;
    }
  }
  return g;
}

template <class S>
Verdict<S> is_regular_algebra(const LieAlgebra<S>& L, Mode mode, const Budget& budget) {
  const int n = L.dim();
  if (n == 0) return Verdict<S>::certify(Proof::Structural, "zero-dimensional");
  const RankInfo ri = rank_info(L, budget);
  const int r = ri.value;
  if (ri.certified && r == n) return Verdict<S>::certify(Proof::Structural, "rank equals dimension, so the algebra is nilpotent");
  auto bad = [&](const Vector<S>& x) { return null_multiplicity(L, x) > r; };
  const std::string what = "a_" + std::to_string(r) + " vanishes at the witness";
  if (mode == Mode::Exhaustive) return exhaustive(L, budget, what, bad);
  if (mode == Mode::Certificate) {
    if constexpr (Field<S>::kind == FieldKind::Q) {
      if (ri.certified && r == 1 && n == 3) {
        const GenericCharPoly<S> g = generic_char_poly(L, budget);
        const std::vector<S> diag = diagonalize_quadratic(quadratic_form_gram(L.field(), g[1]));
        bool pos = true, neg = true;
        for (const auto& d : diag) {
          pos = pos && d.sign() > 0;
          neg = neg && d.sign() < 0;
        }
        if (pos || neg)
          return Verdict<S>::certify(Proof::DefiniteForm, "a_1 = " + g[1].to_string() + " is definite");
      }
    } else {
      if (exhaustive_feasible(L, budget)) return exhaustive(L, budget, what, bad);
    }
  }
  return search(L, budget, what, bad);
}

template <class S>
bool is_semisimple_ad(const LieAlgebra<S>& L, const Vector<S>& x) {
  check_length(L, x);
  return is_squarefree(min_poly(ad(L, x)));
}

template <class S>
Verdict<S> is_anisotropic(const LieAlgebra<S>& L, Mode mode, const Budget& budget) {
  const int n = L.dim();
  if (n == 0 || commutant(L).is_zero()) return Verdict<S>::certify(Proof::Structural, "abelian: every ad x is zero");
  auto bad = [&](const Vector<S>& x) { return !is_semisimple_ad(L, x); };
  const std::string what = "ad of the witness has a repeated factor in its minimal polynomial";
  if (mode == Mode::Exhaustive) return exhaustive(L, budget, what, bad);
  if (mode == Mode::Certificate) {
    if constexpr (Field<S>::kind == FieldKind::Q) {
      const Verdict<S> reg = is_regular_algebra(L, Mode::Certificate, budget);
      if (reg.certified() && reg.proof == Proof::DefiniteForm)
        return Verdict<S>::certify(Proof::DefiniteForm,
                                   "min poly of every nonzero ad x is t(t^2 + a_1(x)) with a_1 definite; " + reg.detail);
      if (reg.refuted()) {
        for (const auto& w : reg.witness)
          if (bad(w)) return Verdict<S>::refute(reg.proof, {w}, what, reg.evidence);
      }
    } else {
      if (exhaustive_feasible(L, budget)) return exhaustive(L, budget, what, bad);
    }
  }
  return search(L, budget, what, bad);
}

template <class S>
Verdict<S> is_nilpotent_free(const LieAlgebra<S>& L, Mode mode, const Budget& budget) {
  const int n = L.dim();
  if (n == 0 || commutant(L).is_zero()) return Verdict<S>::certify(Proof::Structural, "abelian: every element is central");
  auto bad = [&](const Vector<S>& x) { return ad_nilpotent(L, x) && !is_central(L, x); };
  const std::string what = "ad of the witness is nilpotent but nonzero";
  if (mode == Mode::Exhaustive) return exhaustive(L, budget, what, bad);
  if (mode == Mode::Certificate) {
    if constexpr (Field<S>::kind == FieldKind::Q) {
      const Verdict<S> an = is_anisotropic(L, Mode::Certificate, budget);
      if (an.certified())
        return Verdict<S>::certify(an.proof, "anisotropic, and a semisimple nilpotent map is zero; " + an.detail);
    } else {
      if (exhaustive_feasible(L, budget)) return exhaustive(L, budget, what, bad);
    }
  }
  return search(L, budget, what, bad);
}

#define LIELAB_INSTANTIATE(S)                                                                      \
  template std::vector<S> ad_char_coeffs<S>(const LieAlgebra<S>&, const Vector<S>&);               \
  template GenericCharPoly<S> generic_char_poly<S>(const LieAlgebra<S>&, const Budget&);           \
  template int null_multiplicity<S>(const LieAlgebra<S>&, const Vector<S>&);                       \
  template RankInfo rank_info<S>(const LieAlgebra<S>&, const Budget&);                             \
  template bool is_regular_element<S>(const LieAlgebra<S>&, const Vector<S>&, int);                \
  template bool almost_commuting<S>(const LieAlgebra<S>&, const Vector<S>&, const Vector<S>&);     \
  template FittingDecomposition<S> fitting<S>(const LieAlgebra<S>&, const Vector<S>&);             \
  template FittingDecomposition<S> fitting_set<S>(const LieAlgebra<S>&, const std::vector<Vector<S>>&); \
  template Matrix<S> ad_on_subspace<S>(const LieAlgebra<S>&, const Subspace<S>&, const Vector<S>&);  \
  template Matrix<S> quadratic_form_gram<S>(const Field<S>&, const MultiPoly<S>&);                 \
  template Verdict<S> is_regular_algebra<S>(const LieAlgebra<S>&, Mode, const Budget&);            \
  template bool is_semisimple_ad<S>(const LieAlgebra<S>&, const Vector<S>&);                       \
  template Verdict<S> is_anisotropic<S>(const LieAlgebra<S>&, Mode, const Budget&);                \
  template Verdict<S> is_nilpotent_free<S>(const LieAlgebra<S>&, Mode, const Budget&);

LIELAB_INSTANTIATE(Rational)
LIELAB_INSTANTIATE(Zp)

#undef LIELAB_INSTANTIATE

}  // namespace lielab
