#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lielab/linalg.hpp"

namespace lielab {

enum class Status { Certified, Refuted, Inconclusive };

/// How a Certified verdict was obtained (or, for Refuted, how the witness
/// was found).
enum class Proof { None, Exhaustive, DefiniteForm, Structural, Search };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Certified: return "Certified";
    case Status::Refuted: return "Refuted";
    case Status::Inconclusive: return "Inconclusive";
  }
  return "?";
}

inline const char* to_string(Proof p) {
  switch (p) {
    case Proof::None: return "none";
    case Proof::Exhaustive: return "exhaustive";
    case Proof::DefiniteForm: return "definite-quadratic-form";
    case Proof::Structural: return "structural";
    case Proof::Search: return "search";
  }
  return "?";
}

struct Evidence {
  std::uint64_t checked = 0;  // elements (or subspaces) examined
  int height = 0;             // largest coordinate height searched
  std::uint64_t trials = 0;   // random trials performed
};

/// Three-valued answer to a question quantifying over a field. A Refuted
/// verdict is only ever built after its witness has been rechecked.
template <class S>
struct Verdict {
  Status status = Status::Inconclusive;
  Proof proof = Proof::None;
  std::vector<Vector<S>> witness;
  std::string detail;
  Evidence evidence;

  bool certified() const { return status == Status::Certified; }
  bool refuted() const { return status == Status::Refuted; }

  static Verdict certify(Proof p, std::string detail = {}, Evidence ev = {}) {
    return {Status::Certified, p, {}, std::move(detail), ev};
  }
  static Verdict refute(Proof p, std::vector<Vector<S>> witness, std::string detail = {}, Evidence ev = {}) {
    return {Status::Refuted, p, std::move(witness), std::move(detail), ev};
  }
  static Verdict inconclusive(std::string detail, Evidence ev = {}) {
    return {Status::Inconclusive, Proof::Search, {}, std::move(detail), ev};
  }
};

/// Raised when an exhaustive computation would exceed its configured size.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Resource limits shared by the decision procedures.
struct Budget {
  std::uint64_t exhaustive_cap = 1'000'000;  // max field elements scanned (p^dim)
  int search_height = 5;                     // deterministic integer points up to this height
  std::uint64_t search_cap = 20'000;         // at most this many grid points
  std::uint64_t trials = 1000;               // seeded random trials after the grid
  std::uint64_t seed = 20200620;
  int symbolic_dim = 8;                      // generic char poly computed symbolically up to this dim
  std::uint64_t subspace_cap = 100'000;      // subspaces enumerated by minimal-non checks
  int derivation_dim = 12;                   // largest modular algebra for derivation_algebra
};

}  // namespace lielab
