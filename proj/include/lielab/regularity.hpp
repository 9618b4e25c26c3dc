#pragma once

#include <string>
#include <vector>

#include "lielab/lie_algebra.hpp"
#include "lielab/poly.hpp"
#include "lielab/verdict.hpp"

namespace lielab {

/// chi_{ad x}(t) = sum_i a_i(x) t^i for x = sum_m x_m b_m, with a_i in
/// dim L variables.
template <class S>
struct GenericCharPoly {
  int dim = 0;
  std::vector<MultiPoly<S>> coeffs;  // a_0 .. a_dim

  const MultiPoly<S>& operator[](int i) const { return coeffs.at(static_cast<std::size_t>(i)); }
};

template <class S>
struct FittingDecomposition {
  Subspace<S> L0;
  Subspace<S> L1;
  std::vector<Vector<S>> against;
};

/// How the rank was decided.
enum class RankMethod { Trivial, Symbolic, Grid, Exhaustive, Sampled };

const char* to_string(RankMethod m);

struct RankInfo {
  int value = 0;
  RankMethod method = RankMethod::Trivial;
  /// False only for Sampled: the value is an upper bound attained at a
  /// sample point, without a proof that lower coefficients vanish.
  bool certified = true;
};

enum class Mode { Exhaustive, Search, Certificate };

const char* to_string(Mode m);
/// Throws std::invalid_argument on an unknown name.
Mode parse_mode(const std::string& s);

/// a_0(x) .. a_n(x).
template <class S>
std::vector<S> ad_char_coeffs(const LieAlgebra<S>& L, const Vector<S>& x);

/// Symbolic coefficients by a division-free determinant over the polynomial
/// ring. Throws BudgetExceeded when dim L > budget.symbolic_dim.
template <class S>
GenericCharPoly<S> generic_char_poly(const LieAlgebra<S>& L, const Budget& budget = {});

template <class S>
RankInfo rank_info(const LieAlgebra<S>& L, const Budget& budget = {});

template <class S>
int rank(const LieAlgebra<S>& L, const Budget& budget = {}) {
  return rank_info(L, budget).value;
}

/// Multiplicity of 0 as a root of chi_{ad x}.
template <class S>
int null_multiplicity(const LieAlgebra<S>& L, const Vector<S>& x);

/// a_r(x) != 0 where r = rank; cross-checked against dim L^0(x) = r.
template <class S>
bool is_regular_element(const LieAlgebra<S>& L, const Vector<S>& x, int r);
template <class S>
bool is_regular_element(const LieAlgebra<S>& L, const Vector<S>& x, const Budget& budget = {}) {
  return is_regular_element(L, x, rank(L, budget));
}

/// L^0 = ker (ad x)^n, L^1 = im (ad x)^n with n = dim L.
template <class S>
FittingDecomposition<S> fitting(const LieAlgebra<S>& L, const Vector<S>& x);

/// Decomposition with respect to a set of pairwise almost commuting elements.
template <class S>
FittingDecomposition<S> fitting_set(const LieAlgebra<S>& L, const std::vector<Vector<S>>& X);

template <class S>
bool almost_commuting(const LieAlgebra<S>& L, const Vector<S>& x, const Vector<S>& y);

template <class S>
Verdict<S> is_regular_algebra(const LieAlgebra<S>& L, Mode mode, const Budget& budget = {});

/// min_poly(ad x) squarefree.
template <class S>
bool is_semisimple_ad(const LieAlgebra<S>& L, const Vector<S>& x);

template <class S>
Verdict<S> is_anisotropic(const LieAlgebra<S>& L, Mode mode, const Budget& budget = {});

template <class S>
Verdict<S> is_nilpotent_free(const LieAlgebra<S>& L, Mode mode, const Budget& budget = {});

/// Matrix of ad x restricted to an ad x invariant subspace, in its echelon
/// basis.
template <class S>
Matrix<S> ad_on_subspace(const LieAlgebra<S>& L, const Subspace<S>& I, const Vector<S>& x);

/// Gram matrix of a homogeneous quadratic polynomial.
template <class S>
Matrix<S> quadratic_form_gram(const Field<S>& F, const MultiPoly<S>& q);

}  // namespace lielab
