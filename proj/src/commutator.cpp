#include "lielab/commutator.hpp"

#include <algorithm>
#include <limits>

#include "lielab/points.hpp"

namespace lielab {

const char* to_string(WitnessSource s) {
  switch (s) {
    case WitnessSource::Rank1Solver: return "rank1-solver";
    case WitnessSource::Search: return "search";
    case WitnessSource::Trivial: return "trivial";
  }
  return "?";
}

const char* to_string(MinProperty p) {
  switch (p) {
    case MinProperty::Abelian: return "abelian";
    case MinProperty::Nilpotent: return "nilpotent";
    case MinProperty::Regular: return "regular";
  }
  return "?";
}

MinProperty parse_min_property(const std::string& s) {
  if (s == "abelian") return MinProperty::Abelian;
  if (s == "nilpotent") return MinProperty::Nilpotent;
  if (s == "regular") return MinProperty::Regular;
  throw std::invalid_argument("unknown property '" + s + "' (expected abelian, nilpotent or regular)");
}

template <class S>
CommutatorWitness<S> CommutatorWitness<S>::make(const LieAlgebra<S>& L, Vector<S> target, Vector<S> z, Vector<S> y,
                                                WitnessSource source) {
  if (!equal<S>(bracket(L, z, y), target)) throw std::logic_error("commutator witness failed recheck");
  return {std::move(target), std::move(z), std::move(y), source};
}

namespace {

template <class S>
void require_good_form(const LieAlgebra<S>& L, const BilinearForm<S>& form) {
  if (form.dim() != L.dim()) throw DimensionMismatch("form and algebra have different dimensions");
  if (!form.invariant()) throw std::invalid_argument("form is not invariant");
  if (!form.nondegenerate()) throw std::invalid_argument("form is degenerate");
}

// z with [z, y] = x, i.e. ad(y) z = -x.
template <class S>
std::optional<Vector<S>> solve_bracket(const LieAlgebra<S>& L, const Vector<S>& y, const Vector<S>& x) {
  return solve<S>(ad(L, y), Vector<S>(-x));
}

}  // namespace

template <class S>
bool check_fitting_orthogonality(const LieAlgebra<S>& L, const BilinearForm<S>& form, const std::vector<Vector<S>>& X) {
  require_good_form(L, form);
  const FittingDecomposition<S> fd = fitting_set(L, X);
  return orthogonal_complement(form, fd.L0) == fd.L1;
}

template <class S>
CommutatorWitness<S> rank1_commutator(const LieAlgebra<S>& L, const BilinearForm<S>& form, const Vector<S>& x,
                                      const Budget& budget) {
  require_good_form(L, form);
  if (x.size() != L.dim()) throw DimensionMismatch("target has wrong length");
  if (is_zero<S>(x)) throw std::invalid_argument("rank1_commutator: target is zero");
  if (rank(L, budget) != 1) throw std::invalid_argument("rank1_commutator: algebra does not have rank 1");
  const Subspace<S> perp = orthogonal_complement(form, Subspace<S>::span(L.dim(), {x}));
  for (int s = 0; s < perp.dim(); ++s) {
    const Vector<S> y = perp.basis_vector(s);
    if (auto z = solve_bracket(L, y, x)) return CommutatorWitness<S>::make(L, x, *z, y, WitnessSource::Rank1Solver);
  }
  throw std::invalid_argument("rank1_commutator: no solution; the algebra is not rank-one regular with this form");
}

template <class S>
LieAlgebra<S> trace_zero_algebra(const QuaternionAlgebra<S>& Q) {
  const LieAlgebra<S> M = minus_algebra(Q.algebra);
  const Field<S>& F = Q.algebra.field();
  return subalgebra(M, Subspace<S>::span(4, {unit_vector(F, 4, 1), unit_vector(F, 4, 2), unit_vector(F, 4, 3)}));
}

template <class S>
QuaternionCommutator<S> quaternion_commutator(const QuaternionAlgebra<S>& Q, const Vector<S>& x, const Budget& budget) {
  if (x.size() != 4) throw DimensionMismatch("quaternion has 4 coordinates");
  if (is_zero<S>(x)) throw std::invalid_argument("quaternion_commutator: x is zero");
  if (!reduced_trace(Q, x).is_zero()) throw std::invalid_argument("quaternion_commutator: reduced trace is nonzero");
  if (!is_division(Q, Mode::Certificate, budget).certified())
    throw std::invalid_argument("quaternion_commutator: algebra is not certified to be a division algebra");
  const LieAlgebra<S> T = trace_zero_algebra(Q);
  const CommutatorWitness<S> w = rank1_commutator(T, killing_form(T), Vector<S>(x.tail(3)), budget);
  const Field<S>& F = Q.algebra.field();
  auto embed = [&](const Vector<S>& t) {
    Vector<S> q(4);
    q << F.zero(), t;
    return q;
  };
  QuaternionCommutator<S> out{x, embed(w.z), embed(w.y)};
  const Vector<S> c = Q.algebra.multiply(out.u, out.v) - Q.algebra.multiply(out.v, out.u);
  if (!equal<S>(c, x)) throw std::logic_error("quaternion commutator failed the associative recheck");
  return out;
}

template <class S>
std::optional<CommutatorWitness<S>> commutator_search(const LieAlgebra<S>& L, const Vector<S>& target,
                                                      const Budget& budget) {
  const int n = L.dim();
  if (target.size() != n) throw DimensionMismatch("target has wrong length");
  if (!commutant(L).contains(target)) throw std::invalid_argument("commutator_search: target is outside the commutant");
  if (is_zero<S>(target)) return CommutatorWitness<S>::make(L, target, L.zero(), L.zero(), WitnessSource::Trivial);
  for (int i = 0; i < n; ++i)
    if (auto z = solve_bracket(L, L.basis_vector(i), target))
      return CommutatorWitness<S>::make(L, target, *z, L.basis_vector(i), WitnessSource::Search);
  HeightGrid grid(n, budget.search_height);
  std::uint64_t seen = 0;
  while (seen++ < budget.search_cap && grid.next()) {
    const Vector<S> y = grid.vector(L.field());
    if (auto z = solve_bracket(L, y, target)) return CommutatorWitness<S>::make(L, target, *z, y, WitnessSource::Search);
  }
  return std::nullopt;
}

std::uint64_t proper_subspace_count(std::uint32_t p, int n) {
  // Gaussian binomials [n, k]_p by the recurrence [n, k] = [n-1, k-1] + p^k [n-1, k]
  const std::uint64_t sat = std::numeric_limits<std::uint64_t>::max();
  auto add = [&](std::uint64_t a, std::uint64_t b) { return a > sat - b ? sat : a + b; };
  auto mul = [&](std::uint64_t a, std::uint64_t b) { return (b != 0 && a > sat / b) ? sat : a * b; };
  std::vector<std::uint64_t> row{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(m) + 1, 0);
    std::uint64_t pk = 1;
    for (int k = 0; k <= m; ++k) {
      const std::uint64_t left = k > 0 ? row[k - 1] : 0;
      const std::uint64_t right = k < m ? mul(pk, row[k]) : 0;
      next[k] = add(left, right);
      pk = mul(pk, p);
    }
    row = std::move(next);
  }
  std::uint64_t total = 0;
  for (int k = 1; k < n; ++k) total = add(total, row[k]);
  return total;
}

template <class S>
bool has_property(MinProperty property, const LieAlgebra<S>& L, const Budget& budget) {
  switch (property) {
    case MinProperty::Abelian: return commutant(L).is_zero();
    case MinProperty::Nilpotent: return structure_report(L).nilpotent;
    case MinProperty::Regular: {
      const Verdict<S> v = is_regular_algebra(L, Field<S>::kind == FieldKind::Fp ? Mode::Exhaustive : Mode::Certificate, budget);
      if (v.status == Status::Inconclusive) throw std::runtime_error("regularity undecided for a subalgebra");
      return v.certified();
    }
  }
  return false;
}

template <class S>
Verdict<S> is_minimal_non(MinProperty property, const LieAlgebra<S>& L, const Budget& budget) {
  if constexpr (Field<S>::kind == FieldKind::Q) {
    throw std::invalid_argument("minimal-non checks are only supported over finite fields");
  } else {
    const int n = L.dim();
    const std::string name = to_string(property);
    if (has_property(property, L, budget))
      return Verdict<S>::refute(Proof::Structural, whole(L).basis(), "the algebra itself is " + name);
    const std::uint64_t count = proper_subspace_count(L.field().size(), n);
    if (count > budget.subspace_cap)
      return Verdict<S>::inconclusive(std::to_string(count) + " proper subspaces exceed the cap of " +
                                      std::to_string(budget.subspace_cap));
    Evidence ev;
    const std::uint32_t p = L.field().size();
    for (int k = 1; k < n; ++k) {
      // pivot columns in lexicographic order
      std::vector<int> piv(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) piv[i] = i;
      while (true) {
        // free entries: row r, columns after piv[r] that are not pivots
        std::vector<std::pair<int, int>> free;
        for (int r = 0; r < k; ++r)
          for (int c = piv[r] + 1; c < n; ++c)
            if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.push_back({r, c});
        std::vector<std::uint32_t> digits(free.size(), 0);
        while (true) {
          Matrix<S> rows = zeros(L.field(), k, n);
          for (int r = 0; r < k; ++r) rows(r, piv[r]) = L.field().one();
          for (std::size_t f = 0; f < free.size(); ++f) rows(free[f].first, free[f].second) = L.field().element(digits[f]);
          const Subspace<S> sub = Subspace<S>::from_rows(rows);
          ++ev.checked;
          if (is_subalgebra(L, sub) && !has_property(property, subalgebra(L, sub), budget))
            return Verdict<S>::refute(Proof::Exhaustive, sub.basis(), "proper subalgebra that is not " + name, ev);
          std::size_t f = 0;
          while (f < digits.size() && ++digits[f] == p) digits[f++] = 0;
          if (f == digits.size()) break;
        }
        int i = k - 1;
        while (i >= 0 && piv[i] == n - k + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
      }
    }
    return Verdict<S>::certify(Proof::Exhaustive,
                               "not " + name + ", and all " + std::to_string(ev.checked) + " proper subspaces checked", ev);
  }
}

#define LIELAB_INSTANTIATE(S)                                                                                   \
  template struct CommutatorWitness<S>;                                                                         \
  template bool check_fitting_orthogonality<S>(const LieAlgebra<S>&, const BilinearForm<S>&,                    \
                                               const std::vector<Vector<S>>&);                                  \
  template CommutatorWitness<S> rank1_commutator<S>(const LieAlgebra<S>&, const BilinearForm<S>&,               \
                                                    const Vector<S>&, const Budget&);                           \
  template LieAlgebra<S> trace_zero_algebra<S>(const QuaternionAlgebra<S>&);                                    \
  template QuaternionCommutator<S> quaternion_commutator<S>(const QuaternionAlgebra<S>&, const Vector<S>&,      \
                                                            const Budget&);                                     \
  template std::optional<CommutatorWitness<S>> commutator_search<S>(const LieAlgebra<S>&, const Vector<S>&,     \
                                                                    const Budget&);                             \
  template bool has_property<S>(MinProperty, const LieAlgebra<S>&, const Budget&);                              \
  template Verdict<S> is_minimal_non<S>(MinProperty, const LieAlgebra<S>&, const Budget&);

LIELAB_INSTANTIATE(Rational)
LIELAB_INSTANTIATE(Zp)

#undef LIELAB_INSTANTIATE

}  // namespace lielab
