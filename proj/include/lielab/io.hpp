#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "lielab/commutator.hpp"
#include "lielab/lie_algebra.hpp"
#include "lielab/regularity.hpp"

namespace lielab {

using json = nlohmann::json;

/// Malformed algebra file or command argument.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// "Q", "F5", "Fp:5" or "5".
struct FieldSpec {
  FieldKind kind = FieldKind::Q;
  std::uint32_t p = 0;

  static FieldSpec parse(const std::string& s);
  std::string name() const { return kind == FieldKind::Q ? "Q" : "F" + std::to_string(p); }
};

using Algebra = std::variant<LieAlgebra<Rational>, LieAlgebra<Zp>, AssocAlgebra<Rational>, AssocAlgebra<Zp>>;

template <class S>
json to_json(const Field<S>& F);
template <class S>
json to_json(const LieAlgebra<S>& L);
template <class S>
json to_json(const AssocAlgebra<S>& A);
json to_json(const Algebra& a);

template <class S>
json vector_json(const Vector<S>& v);
template <class S>
json matrix_json(const Matrix<S>& m);
template <class S>
json subspace_json(const Subspace<S>& s);
template <class S>
json verdict_json(const Verdict<S>& v);
json rank_json(const RankInfo& r);

/// Parses and validates; Jacobi and associativity failures raise
/// ValidationError naming the offending basis triple.
Algebra parse_algebra(const json& j);
Algebra parse_algebra_file(const std::filesystem::path& path);

/// The table without the Jacobi check (for the `validate` command).
Algebra parse_algebra_unchecked(const json& j);

/// Comma separated scalar strings.
template <class S>
Vector<S> parse_vector(const Field<S>& F, const std::string& s, int expected);

/// 2-space indented canonical JSON (sorted keys) with a trailing newline.
std::string canonical(const json& j);

/// FNV-1a hash of the canonical table, as 16 hex digits.
std::string table_hash(const Algebra& a);

}  // namespace lielab
