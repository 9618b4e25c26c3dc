#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <Eigen/Core>
#include <gmpxx.h>

namespace lielab {

/// Raised when two scalars from different fields meet in one operation.
struct FieldMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

/// Exact rational number. Always stored in lowest terms with positive
/// denominator (mpq_class canonicalizes after every operation).
class Rational {
public:
  Rational() = default;
  Rational(long v) : v_(v) {}
  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Rational parse(const std::string& s);

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rational inverse() const;
  Rational times(long k) const { return Rational(mpq_class(v_ * k)); }

  std::string to_string() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Residue modulo a prime p < 2^31.
///
/// A residue normally carries its modulus. Values built without one
/// (`Zp(0)`, `Zp(1)`, the constants Eigen manufactures internally) are
/// unbound integers that adopt the modulus of whatever bound value they meet.
/// Combining residues with two different moduli throws FieldMismatch.
/// Deciding equality or zeroness of an unbound integer other than -1, 0, 1
/// throws, since the answer depends on p.
class Zp {
public:
  Zp() = default;
  Zp(long v) : v_(v), p_(0) {}
  Zp(long v, std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  bool bound() const { return p_ != 0; }
  /// Representative in [0, p). Only valid for bound values.
  std::int64_t residue() const;

  bool is_zero() const;
  bool is_one() const;
  Zp inverse() const;
  Zp times(long k) const;
  std::string to_string() const;

  Zp& operator+=(const Zp& o);
  Zp& operator-=(const Zp& o);
  Zp& operator*=(const Zp& o);
  Zp& operator/=(const Zp& o) { return *this *= o.inverse(); }

  friend Zp operator+(Zp a, const Zp& b) { return a += b; }
  friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
  friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
  friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
  friend Zp operator-(const Zp& a);

  friend bool operator==(const Zp& a, const Zp& b);
  friend bool operator!=(const Zp& a, const Zp& b) { return !(a == b); }

private:
  static std::uint32_t common_modulus(const Zp& a, const Zp& b);
  void rebind(std::uint32_t p);

  std::int64_t v_ = 0;
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Zp& z);

bool is_prime(std::uint64_t n);

enum class FieldKind { Q, Fp };

/// Field descriptor: knows how to make scalars of type S from integers and
/// strings. Specialized for Rational (the rationals) and Zp (prime fields).
template <class S>
class Field;

template <>
class Field<Rational> {
public:
  using Scalar = Rational;
  static constexpr FieldKind kind = FieldKind::Q;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(long v) const { return Rational(v); }
  Rational parse(const std::string& s) const { return Rational::parse(s); }
  std::uint32_t characteristic() const { return 0; }
  bool finite() const { return false; }
  std::string name() const { return "Q"; }

  friend bool operator==(const Field&, const Field&) { return true; }
};

template <>
class Field<Zp> {
public:
  using Scalar = Zp;
  static constexpr FieldKind kind = FieldKind::Fp;

  explicit Field(std::uint32_t p);

  Zp zero() const { return Zp(0, p_); }
  Zp one() const { return Zp(1, p_); }
  Zp from_int(long v) const { return Zp(v, p_); }
  Zp parse(const std::string& s) const;
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t size() const { return p_; }
  bool finite() const { return true; }
  std::string name() const { return "F" + std::to_string(p_); }
  /// The i-th element in the canonical order 0, 1, ..., p-1.
  Zp element(std::uint32_t i) const { return Zp(static_cast<long>(i), p_); }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

private:
  std::uint32_t p_;
};

using Q = Field<Rational>;
using Fp = Field<Zp>;

template <class S>
bool operator!=(const Field<S>& a, const Field<S>& b) {
  return !(a == b);
}

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const Zp& z) { return z.is_zero(); }

}  // namespace lielab

namespace Eigen {

template <>
struct NumTraits<lielab::Rational> : GenericNumTraits<lielab::Rational> {
  using Real = lielab::Rational;
  using NonInteger = lielab::Rational;
  using Nested = lielab::Rational;
  using Literal = lielab::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 100
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<lielab::Zp> : GenericNumTraits<lielab::Zp> {
  using Real = lielab::Zp;
  using NonInteger = lielab::Zp;
  using Nested = lielab::Zp;
  using Literal = lielab::Zp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
