#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "lielab/lie_algebra.hpp"
#include "lielab/regularity.hpp"

namespace lielab {

/// Abelian algebra with basis a1..an.
template <class S>
LieAlgebra<S> abelian(const Field<S>& F, int n);

/// Basis x1..xm, y1..ym, z with [xi, yi] = z.
template <class S>
LieAlgebra<S> heisenberg(const Field<S>& F, int m);

/// Basis x, y with [x, y] = y.
template <class S>
LieAlgebra<S> r2(const Field<S>& F);

/// Basis E_ij (i, j = 1..n) row-major.
template <class S>
LieAlgebra<S> gl(const Field<S>& F, int n);

/// Basis E_ij (i < j) row-major, H_1..H_{n-1} with H_i = E_ii - E_{i+1,i+1},
/// then E_ij (i > j) row-major. For n = 2 the labels are e, h, f.
template <class S>
LieAlgebra<S> sl(const Field<S>& F, int n);

/// sl(n) and gl(n) modulo the scalar matrices; the characteristic must
/// divide n.
template <class S>
LieAlgebra<S> psl(const Field<S>& F, int n);
template <class S>
LieAlgebra<S> pgl(const Field<S>& F, int n);

/// The scalar matrix as an element of sl(n) (needs char | n) or gl(n).
template <class S>
Vector<S> sl_identity(const Field<S>& F, int n);
template <class S>
Vector<S> gl_identity(const Field<S>& F, int n);

/// Strictly upper triangular n x n matrices, basis E_ij (i < j) row-major.
template <class S>
LieAlgebra<S> upper_nilpotent(const Field<S>& F, int n);

/// Trace-zero quaternions over Q with i^2 = j^2 = -1, basis i, j, k:
/// [i, j] = 2k, [j, k] = 2i, [k, i] = 2j.
LieAlgebra<Rational> su2q();

/// The quaternion algebra (a, b) with basis 1, i, j, k.
template <class S>
struct QuaternionAlgebra {
  AssocAlgebra<S> algebra;
  S a;
  S b;
};

template <class S>
QuaternionAlgebra<S> quaternion(const Field<S>& F, const S& a, const S& b);

/// tr(x0 + x1 i + x2 j + x3 k) = 2 x0.
template <class S>
S reduced_trace(const QuaternionAlgebra<S>& Q, const Vector<S>& x);

/// x0 - x1 i - x2 j - x3 k.
template <class S>
Vector<S> conjugate(const QuaternionAlgebra<S>& Q, const Vector<S>& x);

/// Certificate (Q): definite norm form, or a zero divisor from a square
/// parameter. Exhaustive (F_p): scan for u with u * conj(u) = 0. Search:
/// grid of small integer quaternions.
template <class S>
Verdict<S> is_division(const QuaternionAlgebra<S>& Q, Mode mode, const Budget& budget = {});

/// K[x1..xn]/(xi^p) over F_p; monomial basis by degree, then
/// lexicographically with x1 first.
AssocAlgebra<Zp> reduced_polynomial_algebra(const Field<Zp>& F, int n);

/// Minus algebra of A modulo the line through the unit.
template <class S>
LieAlgebra<S> quotient_by_unit_line(const AssocAlgebra<S>& A);

struct EnumTable {
  int dim = 0;
  std::uint32_t p = 0;
  /// c_ij^k for (i, j) lexicographic with i < j, k ascending.
  std::vector<std::uint32_t> coeffs;
  bool jacobi_valid = false;
};

struct EnumStats {
  std::uint64_t generated = 0;
  std::uint64_t valid = 0;
};

/// Every structure-constant table of dimension <= 3 over F_p, in
/// lexicographic order of the coefficient sequence. The consumer sees only
/// tables passing the Jacobi identity.
EnumStats enumerate_tables(const Field<Zp>& F, int dim,
                           const std::function<void(const EnumTable&, const LieAlgebra<Zp>&)>& consumer,
                           const Budget& budget = {});

// ---- registry ----------------------------------------------------------------

struct CatalogEntry {
  std::string name;
  std::string params;
  std::string fields;
  std::string description;
};

const std::vector<CatalogEntry>& catalog_entries();

template <class S>
using AnyAlgebra = std::variant<LieAlgebra<S>, AssocAlgebra<S>>;

/// Builds a named catalog algebra. Throws std::invalid_argument on an
/// unknown name or invalid parameters.
template <class S>
AnyAlgebra<S> make(const Field<S>& F, const std::string& name, const std::vector<long>& params);

}  // namespace lielab
