#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lielab/linalg.hpp"
#include "lielab/scalar.hpp"

namespace lielab {

/// Integer vectors of height exactly h = 1, 2, ..., up to a maximum height,
/// one per projective line up to sign (first nonzero coordinate positive).
/// Within a height the order is colexicographic with the first coordinate
/// varying fastest over the digits 0, 1, -1, 2, -2, ...
class HeightGrid {
public:
  HeightGrid(int n, int max_height) : n_(n), max_(max_height), digits_(static_cast<std::size_t>(n), 0) {}

  /// Advances to the next point; false once the grid is exhausted.
  bool next();
  int height() const { return h_; }
  /// Current point as integers.
  std::vector<long> point() const;

  template <class S>
  Vector<S> vector(const Field<S>& F) const {
    Vector<S> v(n_);
    const auto p = point();
    for (int i = 0; i < n_; ++i) v(i) = F.from_int(p[i]);
    return v;
  }

private:
  static long digit_value(int d) { return d == 0 ? 0 : ((d % 2) ? (d + 1) / 2 : -(d / 2)); }
  bool advance();
  bool admissible() const;

  int n_;
  int max_;
  int h_ = 0;
  bool started_ = false;
  std::vector<int> digits_;
};

/// All nonzero vectors of F_p^n, first coordinate fastest.
class FpScan {
public:
  FpScan(const Field<Zp>& F, int n) : F_(F), digits_(static_cast<std::size_t>(n), 0) {}
  bool next();
  Vector<Zp> vector() const;

private:
  Field<Zp> F_;
  std::vector<std::uint32_t> digits_;
};

/// Total number of vectors in F_p^n, saturating at UINT64_MAX.
std::uint64_t fp_space_size(std::uint32_t p, int n);

/// Seeded random vectors: 64-bit integer coordinates over Q, uniform
/// residues over F_p.
template <class S>
Vector<S> random_vector(const Field<S>& F, int n, std::mt19937_64& rng);

/// Random vector with integer coordinates in [-h, h].
template <class S>
Vector<S> random_small_vector(const Field<S>& F, int n, std::mt19937_64& rng, long h);

}  // namespace lielab
