#include "lielab/points.hpp"

#include <cstdlib>
#include <limits>

namespace lielab {

bool HeightGrid::advance() {
  const int base = 2 * h_ + 1;
  int k = 0;
  while (k < n_ && ++digits_[k] == base) digits_[k++] = 0;
  return k < n_;
}

bool HeightGrid::admissible() const {
  long top = 0;
  long first = 0;
  for (int i = 0; i < n_; ++i) {
    const long v = digit_value(digits_[i]);
    if (first == 0) first = v;
    top = std::max(top, std::labs(v));
  }
  return top == h_ && first > 0;
}

bool HeightGrid::next() {
  if (n_ == 0) return false;
  if (!started_) {
    started_ = true;
    h_ = 1;
    if (h_ > max_) return false;
  }
  while (true) {
    if (!advance()) {
      if (++h_ > max_) return false;
      std::fill(digits_.begin(), digits_.end(), 0);
      continue;
    }
    if (admissible()) return true;
  }
}

std::vector<long> HeightGrid::point() const {
  std::vector<long> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) out[i] = digit_value(digits_[i]);
  return out;
}

bool FpScan::next() {
  const std::uint32_t p = F_.size();
  std::size_t k = 0;
  while (k < digits_.size() && ++digits_[k] == p) digits_[k++] = 0;
  return k < digits_.size();
}

Vector<Zp> FpScan::vector() const {
  Vector<Zp> v(static_cast<Eigen::Index>(digits_.size()));
  for (std::size_t i = 0; i < digits_.size(); ++i) v(static_cast<Eigen::Index>(i)) = F_.element(digits_[i]);
  return v;
}

std::uint64_t fp_space_size(std::uint32_t p, int n) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
    total *= p;
  }
  return total;
}

template <>
Vector<Rational> random_vector(const Field<Rational>&, int n, std::mt19937_64& rng) {
  Vector<Rational> v(n);
  for (int i = 0; i < n; ++i) {
    const auto bits = static_cast<std::int64_t>(rng());
    v(i) = Rational(mpq_class(mpz_class(std::to_string(bits))));
  }
  return v;
}

template <>
Vector<Zp> random_vector(const Field<Zp>& F, int n, std::mt19937_64& rng) {
  Vector<Zp> v(n);
  for (int i = 0; i < n; ++i) v(i) = F.element(static_cast<std::uint32_t>(rng() % F.size()));
  return v;
}

template <class S>
Vector<S> random_small_vector(const Field<S>& F, int n, std::mt19937_64& rng, long h) {
  std::uniform_int_distribution<long> d(-h, h);
  Vector<S> v(n);
  for (int i = 0; i < n; ++i) v(i) = F.from_int(d(rng));
  return v;
}

template Vector<Rational> random_small_vector(const Field<Rational>&, int, std::mt19937_64&, long);
template Vector<Zp> random_small_vector(const Field<Zp>&, int, std::mt19937_64&, long);

}  // namespace lielab
