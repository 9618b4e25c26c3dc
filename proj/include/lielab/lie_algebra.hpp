#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lielab/linalg.hpp"
#include "lielab/scalar.hpp"
#include "lielab/verdict.hpp"

namespace lielab {

template <class S>
using SparseVec = std::vector<std::pair<int, S>>;

/// A failed identity on basis elements (i, j, k), e.g. the Jacobi identity.
struct Violation {
  int i = 0, j = 0, k = 0;
  std::string what;
};

/// Thrown by validating constructors; `violations` names the offending
/// basis triples.
struct ValidationError : std::invalid_argument {
  ValidationError(const std::string& msg, std::vector<Violation> v)
      : std::invalid_argument(msg), violations(std::move(v)) {}
  std::vector<Violation> violations;
};

/// Finite-dimensional Lie algebra given by structure constants
/// [b_i, b_j] = sum_k c_ij^k b_k, stored for i < j only. Immutable.
template <class S>
class LieAlgebra {
public:
  struct Bracket {
    int i;
    int j;
    SparseVec<S> coeffs;
  };

  /// Validates index ranges and the Jacobi identity on all basis triples.
  LieAlgebra(Field<S> field, std::vector<std::string> labels, std::vector<Bracket> brackets);

  /// No Jacobi check; used by the table enumerator.
  static LieAlgebra unchecked(Field<S> field, std::vector<std::string> labels, std::vector<Bracket> brackets);

  /// Builds the table from a dense bracket callback evaluated for i < j.
  static LieAlgebra from_bracket(Field<S> field, std::vector<std::string> labels,
                                 const std::function<Vector<S>(int, int)>& bracket, bool check = true);

  const Field<S>& field() const { return field_; }
  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  /// Nonzero brackets, ordered by (i, j).
  const std::vector<Bracket>& brackets() const { return table_; }

  /// ad(b_i): column j holds [b_i, b_j].
  const Matrix<S>& ad_basis(int i) const { return ad_.at(static_cast<std::size_t>(i)); }
  Vector<S> bracket_basis(int i, int j) const { return ad_basis(i).col(j); }

  Vector<S> zero() const { return zero_vector(field_, dim()); }
  Vector<S> basis_vector(int i) const { return unit_vector(field_, dim(), i); }
  Vector<S> element(const std::vector<long>& coords) const;

  /// Structure constants agree entry for entry (labels ignored).
  bool same_table(const LieAlgebra& other) const;

private:
  LieAlgebra(Field<S> field, std::vector<std::string> labels, std::vector<Bracket> brackets, bool check);

  Field<S> field_;
  std::vector<std::string> labels_;
  std::vector<Bracket> table_;
  std::vector<Matrix<S>> ad_;
};

/// Unital associative algebra by its full multiplication table.
template <class S>
class AssocAlgebra {
public:
  /// `products[i * dim + j]` is b_i b_j. Validates associativity on basis
  /// triples and that `unit` is a two-sided identity.
  AssocAlgebra(Field<S> field, std::vector<std::string> labels, std::vector<Vector<S>> products, Vector<S> unit);

  const Field<S>& field() const { return field_; }
  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vector<S>& product_basis(int i, int j) const { return prod_.at(static_cast<std::size_t>(i * dim() + j)); }
  const Vector<S>& unit() const { return unit_; }
  Vector<S> multiply(const Vector<S>& x, const Vector<S>& y) const;
  bool is_commutative() const;

private:
  Field<S> field_;
  std::vector<std::string> labels_;
  std::vector<Vector<S>> prod_;
  Vector<S> unit_;
};

/// Symmetric bilinear form on a Lie algebra. The invariance flag is set only
/// after <[x,y],z> = <x,[y,z]> has been verified on all basis triples.
template <class S>
class BilinearForm {
public:
  BilinearForm(const LieAlgebra<S>& L, Matrix<S> gram);

  const Matrix<S>& gram() const { return gram_; }
  int dim() const { return static_cast<int>(gram_.rows()); }
  bool invariant() const { return invariant_; }
  bool nondegenerate() const { return rank_ == dim(); }
  int rank() const { return rank_; }
  S operator()(const Vector<S>& x, const Vector<S>& y) const { return x.dot(gram_ * y); }

private:
  Matrix<S> gram_;
  bool invariant_ = false;
  int rank_ = 0;
};

struct StructureReport {
  bool abelian = false;
  bool nilpotent = false;
  bool solvable = false;
  std::optional<int> nilpotency_class;  // steps of the lower central series to reach 0
  std::optional<int> derived_length;    // steps of the derived series to reach 0
  int center_dim = 0;
  int commutant_dim = 0;
  std::optional<int> radical_dim;       // characteristic zero only
  std::optional<bool> semisimple;       // characteristic zero only
  int killing_rank = 0;
};

// ---- elements ---------------------------------------------------------------

template <class S>
Vector<S> bracket(const LieAlgebra<S>& L, const Vector<S>& x, const Vector<S>& y);
template <class S>
Matrix<S> ad(const LieAlgebra<S>& L, const Vector<S>& x);

/// Empty iff the Jacobi identity holds on all basis triples.
template <class S>
std::vector<Violation> validate(const LieAlgebra<S>& L);

// ---- subspaces --------------------------------------------------------------

template <class S>
Subspace<S> whole(const LieAlgebra<S>& L) {
  return Subspace<S>::whole(L.field(), L.dim());
}
/// span{[a, b] : a in A, b in B}
template <class S>
Subspace<S> bracket_span(const LieAlgebra<S>& L, const Subspace<S>& A, const Subspace<S>& B);
template <class S>
Subspace<S> center(const LieAlgebra<S>& L);
template <class S>
Subspace<S> commutant(const LieAlgebra<S>& L);
template <class S>
Subspace<S> centralizer(const LieAlgebra<S>& L, const Vector<S>& x);
/// Largest N with [S, N] contained in S.
template <class S>
Subspace<S> normalizer(const LieAlgebra<S>& L, const Subspace<S>& sub);
template <class S>
Subspace<S> ideal_generated(const LieAlgebra<S>& L, const std::vector<Vector<S>>& gens);
template <class S>
Subspace<S> subalgebra_generated(const LieAlgebra<S>& L, const std::vector<Vector<S>>& gens);
template <class S>
bool is_subalgebra(const LieAlgebra<S>& L, const Subspace<S>& sub);
template <class S>
bool is_ideal(const LieAlgebra<S>& L, const Subspace<S>& sub);

template <class S>
std::vector<Subspace<S>> lower_central_series(const LieAlgebra<S>& L);
template <class S>
std::vector<Subspace<S>> derived_series(const LieAlgebra<S>& L);
template <class S>
StructureReport structure_report(const LieAlgebra<S>& L);

// ---- forms ------------------------------------------------------------------

template <class S>
BilinearForm<S> killing_form(const LieAlgebra<S>& L);
template <class S>
bool is_invariant(const LieAlgebra<S>& L, const Matrix<S>& gram);
/// Canonical basis of the space of symmetric invariant bilinear forms.
template <class S>
std::vector<Matrix<S>> invariant_forms(const LieAlgebra<S>& L);
/// {y : <s, y> = 0 for all s in sub}
template <class S>
Subspace<S> orthogonal_complement(const BilinearForm<S>& form, const Subspace<S>& sub);

// ---- constructions ----------------------------------------------------------

/// Algebra on the echelon basis of a subalgebra.
template <class S>
LieAlgebra<S> subalgebra(const LieAlgebra<S>& L, const Subspace<S>& sub);
/// L / I with the standard basis vectors at the non-pivot columns of I as
/// coset representatives. Throws unless I is an ideal.
template <class S>
LieAlgebra<S> quotient(const LieAlgebra<S>& L, const Subspace<S>& ideal);
/// Coordinates of the image of x in quotient(L, ideal).
template <class S>
Vector<S> project_to_quotient(const Subspace<S>& ideal, const Vector<S>& x);
template <class S>
LieAlgebra<S> direct_sum(const LieAlgebra<S>& a, const LieAlgebra<S>& b);
/// L tensor A with [x (x) a, y (x) b] = [x, y] (x) ab; A commutative.
/// Basis b_i (x) a_s at index i * dim A + s.
template <class S>
LieAlgebra<S> tensor_commutative(const LieAlgebra<S>& L, const AssocAlgebra<S>& A);
/// A with [a, b] = ab - ba.
template <class S>
LieAlgebra<S> minus_algebra(const AssocAlgebra<S>& A);

// ---- derivations, centroid, cohomology ---------------------------------------

template <class S>
struct DerivationAlgebra {
  std::vector<Matrix<S>> maps;  // canonical basis of Der(L)
  LieAlgebra<S> algebra;        // commutator bracket on that basis
};

/// Throws BudgetExceeded over F_p when dim L > budget.derivation_dim.
template <class S>
DerivationAlgebra<S> derivation_algebra(const LieAlgebra<S>& L, const Budget& budget = {});

/// Linear maps phi with phi [x,y] = [phi x, y] = [x, phi y]; contains Id.
template <class S>
std::vector<Matrix<S>> centroid(const LieAlgebra<S>& L);

template <class S>
Verdict<S> is_simple(const LieAlgebra<S>& L, const Budget& budget = {});

template <class S>
struct H2Result {
  int dim = 0;                          // dim Z^2 - dim B^2
  int cocycles = 0;                     // dim Z^2
  int coboundaries = 0;                 // dim B^2
  std::vector<Matrix<S>> representatives;  // alternating Gram matrices, independent mod B^2
};

/// Second cohomology with trivial coefficients.
template <class S>
H2Result<S> h2_trivial(const LieAlgebra<S>& L);

template <class S>
bool is_cocycle(const LieAlgebra<S>& L, const Matrix<S>& omega);

/// For a central line K c of L: the cocycle presenting L as a central
/// extension of quotient(L, K c), on the quotient's basis.
template <class S>
Matrix<S> extension_cocycle(const LieAlgebra<S>& L, const Vector<S>& c);

/// L + K c with [x, y]' = [x, y] + omega(x, y) c and c central.
template <class S>
LieAlgebra<S> central_extension(const LieAlgebra<S>& L, const Matrix<S>& omega);

}  // namespace lielab
