#pragma once

#include <optional>
#include <vector>

#include "lielab/catalog.hpp"
#include "lielab/lie_algebra.hpp"
#include "lielab/regularity.hpp"

namespace lielab {

enum class WitnessSource { Rank1Solver, Search, Trivial };

const char* to_string(WitnessSource s);

/// [z, y] = target, rechecked on construction.
template <class S>
struct CommutatorWitness {
  Vector<S> target;
  Vector<S> z;
  Vector<S> y;
  WitnessSource source = WitnessSource::Search;

  /// Throws std::logic_error unless [z, y] = target in L.
  static CommutatorWitness make(const LieAlgebra<S>& L, Vector<S> target, Vector<S> z, Vector<S> y, WitnessSource source);
};

/// u v - v u = x in the associative algebra.
template <class S>
struct QuaternionCommutator {
  Vector<S> x;
  Vector<S> u;
  Vector<S> v;
};

/// orth(L^0(X)) == L^1(X) under a nondegenerate invariant symmetric form.
template <class S>
bool check_fitting_orthogonality(const LieAlgebra<S>& L, const BilinearForm<S>& form, const std::vector<Vector<S>>& X);

/// For rank-one L with a nondegenerate invariant form: y is the first echelon
/// basis vector of orth(span x) for which [z, y] = x is solvable.
template <class S>
CommutatorWitness<S> rank1_commutator(const LieAlgebra<S>& L, const BilinearForm<S>& form, const Vector<S>& x,
                                      const Budget& budget = {});

/// The trace-zero part of a division quaternion algebra as a Lie algebra
/// (basis i, j, k of the minus algebra).
template <class S>
LieAlgebra<S> trace_zero_algebra(const QuaternionAlgebra<S>& Q);

/// x of reduced trace zero written as u v - v u, checked with the
/// associative multiplication table.
template <class S>
QuaternionCommutator<S> quaternion_commutator(const QuaternionAlgebra<S>& Q, const Vector<S>& x,
                                              const Budget& budget = {});

/// Tries y over the basis and then small integer combinations; never claims
/// that no witness exists.
template <class S>
std::optional<CommutatorWitness<S>> commutator_search(const LieAlgebra<S>& L, const Vector<S>& target,
                                                      const Budget& budget = {});

enum class MinProperty { Abelian, Nilpotent, Regular };

const char* to_string(MinProperty p);
MinProperty parse_min_property(const std::string& s);

/// Number of nonzero proper subspaces of F_p^n, saturating.
std::uint64_t proper_subspace_count(std::uint32_t p, int n);

/// L fails the property and every proper subalgebra has it. Finite fields
/// only; Inconclusive when the subspace count exceeds budget.subspace_cap.
template <class S>
Verdict<S> is_minimal_non(MinProperty property, const LieAlgebra<S>& L, const Budget& budget = {});

/// Whether L has the property (regularity decided exhaustively).
template <class S>
bool has_property(MinProperty property, const LieAlgebra<S>& L, const Budget& budget = {});

}  // namespace lielab
