#include "lielab/scalar.hpp"

#include <charconv>
#include <ostream>

namespace lielab {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class v;
  const std::string body = (s.front() == '+') ? s.substr(1) : s;
  if (v.set_str(body, 10) != 0) throw std::invalid_argument("bad rational literal '" + s + "'");
  if (v.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  v.canonicalize();
  return Rational(v);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::to_string() const {
  // mpq prints "a" for integers and "a/b" otherwise, sign on the numerator
  return v_.get_str(10);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::int64_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return r < 0 ? r + p : r;
}

bool small_unbound(std::int64_t v) { return v >= -1 && v <= 1; }

}  // namespace

Zp::Zp(long v, std::uint32_t p) : v_(0), p_(p) {
  if (p == 0) {
    v_ = v;
  } else {
    v_ = reduce(v, p);
  }
}

std::int64_t Zp::residue() const {
  if (!bound()) throw std::logic_error("residue of an unbound modular integer");
  return v_;
}

std::uint32_t Zp::common_modulus(const Zp& a, const Zp& b) {
  if (a.p_ && b.p_ && a.p_ != b.p_)
    throw FieldMismatch("modular arithmetic mixes F" + std::to_string(a.p_) + " and F" +
                        std::to_string(b.p_));
  return a.p_ ? a.p_ : b.p_;
}

void Zp::rebind(std::uint32_t p) {
  if (p_ == 0 && p != 0) {
    v_ = reduce(v_, p);
    p_ = p;
  }
}

bool Zp::is_zero() const {
  if (!bound() && !small_unbound(v_))
    throw std::logic_error("zero test on unbound modular integer " + std::to_string(v_));
  return v_ == 0;
}

bool Zp::is_one() const {
  if (!bound()) {
    if (!small_unbound(v_)) throw std::logic_error("unit test on unbound modular integer");
    return v_ == 1;
  }
  return v_ == 1 % static_cast<std::int64_t>(p_);
}

Zp Zp::inverse() const {
  if (!bound()) {
    if (v_ == 1 || v_ == -1) return *this;
    throw std::logic_error("inverse of unbound modular integer");
  }
  if (v_ == 0) throw std::domain_error("inverse of zero");
  // extended Euclid on (v, p)
  std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return Zp(x0, p_);
}

Zp Zp::times(long k) const {
  if (!bound()) {
    if (v_ == 0) return *this;
    throw std::logic_error("scaling an unbound modular integer");
  }
  return Zp(static_cast<long>((v_ * reduce(k, p_)) % p_), p_);
}

std::string Zp::to_string() const {
  if (!bound() && !small_unbound(v_)) throw std::logic_error("printing unbound modular integer");
  return std::to_string(v_);
}

Zp& Zp::operator+=(const Zp& o) {
  std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    if (__builtin_add_overflow(v_, o.v_, &v_)) throw std::overflow_error("unbound modular overflow");
    return *this;
  }
  rebind(p);
  v_ = (v_ + reduce(o.v_, p)) % p;
  return *this;
}

Zp& Zp::operator-=(const Zp& o) {
  std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    if (__builtin_sub_overflow(v_, o.v_, &v_)) throw std::overflow_error("unbound modular overflow");
    return *this;
  }
  rebind(p);
  v_ = reduce(v_ - reduce(o.v_, p), p);
  return *this;
}

Zp& Zp::operator*=(const Zp& o) {
  std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    if (__builtin_mul_overflow(v_, o.v_, &v_)) throw std::overflow_error("unbound modular overflow");
    return *this;
  }
  rebind(p);
  v_ = (v_ * reduce(o.v_, p)) % p;
  return *this;
}

Zp operator-(const Zp& a) {
  if (!a.bound()) return Zp(-a.v_);
  return Zp(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_);
}

bool operator==(const Zp& a, const Zp& b) {
  std::uint32_t p = Zp::common_modulus(a, b);
  if (p == 0) {
    if (!small_unbound(a.v_) || !small_unbound(b.v_))
      throw std::logic_error("equality of unbound modular integers");
    return a.v_ == b.v_;
  }
  return reduce(a.v_, p) == reduce(b.v_, p);
}

std::ostream& operator<<(std::ostream& os, const Zp& z) { return os << z.to_string(); }

Field<Zp>::Field(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^31");
}

Zp Field<Zp>::parse(const std::string& s) const {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("bad residue literal '" + s + "'");
  return Zp(v, p_);
}

}  // namespace lielab
