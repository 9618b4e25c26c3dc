#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <cstdint>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "lielab/scalar.hpp"

namespace lielab {

/// Dense univariate polynomial, coefficients indexed by degree. The zero
/// polynomial has no coefficients; otherwise the leading one is nonzero.
template <class S>
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly monomial(const S& c, int degree) {
    std::vector<S> v(static_cast<std::size_t>(degree) + 1, S(0));
    v.back() = c;
    return UniPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  S coeff(int i) const { return (i >= 0 && i <= degree()) ? c_[i] : S(0); }
  const S& lead() const { return c_.back(); }
  const std::vector<S>& coeffs() const { return c_; }

  UniPoly monic() const {
    if (is_zero()) return *this;
    S inv = lead().inverse();
    UniPoly r = *this;
    for (auto& c : r.c_) c *= inv;
    return r;
  }

  UniPoly derivative() const {
    std::vector<S> d;
    for (int i = 1; i <= degree(); ++i) d.push_back(c_[i].times(i));
    return UniPoly(std::move(d));
  }

  S operator()(const S& x) const {
    S acc(0);
    for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
    return acc;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(const UniPoly& a) { return UniPoly() - a; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> r(a.c_.size() + b.c_.size() - 1, S(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const S& s, UniPoly a) {
    for (auto& c : a.c_) c *= s;
    a.trim();
    return a;
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  std::string to_string(const std::string& var = "t") const;

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<S> c_;
};

/// Quotient and remainder of Euclidean division; divisor must be nonzero.
template <class S>
std::pair<UniPoly<S>, UniPoly<S>> divmod(const UniPoly<S>& a, const UniPoly<S>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly<S>(), a};
  std::vector<S> rem = a.coeffs();
  std::vector<S> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, S(0));
  const S inv = b.lead().inverse();
  for (int d = a.degree(); d >= b.degree(); --d) {
    const S q = rem[d] * inv;
    if (q.is_zero()) continue;
    quo[d - b.degree()] = q;
    for (int i = 0; i <= b.degree(); ++i) rem[d - b.degree() + i] -= q * b.coeffs()[i];
  }
  return {UniPoly<S>(std::move(quo)), UniPoly<S>(std::move(rem))};
}

/// a / b, throwing when the division leaves a remainder.
template <class S>
UniPoly<S> exact_div(const UniPoly<S>& a, const UniPoly<S>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

namespace detail {

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b; stays integral for
// integral inputs.
template <class S>
UniPoly<S> pseudo_rem(const UniPoly<S>& a, const UniPoly<S>& b) {
  std::vector<S> rem = a.coeffs();
  const int db = b.degree();
  const S lb = b.lead();
  for (int d = a.degree(); d >= db; --d) {
    const S top = rem[d];
    for (auto& c : rem) c *= lb;
    for (int i = 0; i <= db; ++i) rem[d - db + i] -= top * b.coeffs()[i];
  }
  return UniPoly<S>(std::move(rem));
}

inline UniPoly<Rational> primitive_integral(const UniPoly<Rational>& p) {
  if (p.is_zero()) return p;
  mpz_class den = 1, content = 0;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : p.coeffs()) {
    ints.push_back(c.numerator() * (den / c.denominator()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints.back().get_mpz_t());
  }
  std::vector<Rational> out;
  for (auto& v : ints) out.emplace_back(mpq_class(v / content));
  return UniPoly<Rational>(std::move(out));
}

inline Rational rat_pow(const Rational& b, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Subresultant remainder sequence on primitive integral polynomials.
inline UniPoly<Rational> subresultant_gcd(UniPoly<Rational> a, UniPoly<Rational> b) {
  a = primitive_integral(a);
  b = primitive_integral(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  Rational g(1), h(1);
  while (true) {
    const int delta = a.degree() - b.degree();
    UniPoly<Rational> r = pseudo_rem(a, b);
    if (r.is_zero()) return b;
    if (r.degree() == 0) return UniPoly<Rational>({Rational(1)});
    a = b;
    b = (g * rat_pow(h, delta)).inverse() * r;
    g = a.lead();
    if (delta > 0) h = rat_pow(g, delta) / rat_pow(h, delta - 1);
  }
}

}  // namespace detail

/// Monic greatest common divisor; gcd(0, 0) = 0. Over Q the remainder
/// sequence is the fraction-free subresultant one.
template <class S>
UniPoly<S> poly_gcd(const UniPoly<S>& p, const UniPoly<S>& q) {
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  if constexpr (std::is_same_v<S, Rational>) {
    return detail::subresultant_gcd(p, q).monic();
  } else {
    UniPoly<S> a = p, b = q;
    while (!b.is_zero()) {
      UniPoly<S> r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }
}

template <class S>
UniPoly<S> poly_lcm(const UniPoly<S>& p, const UniPoly<S>& q) {
  if (p.is_zero() || q.is_zero()) return {};
  return exact_div(p * q, poly_gcd(p, q)).monic();
}

/// Monic product of the distinct irreducible factors of p, over Q or F_p.
/// In characteristic p a vanishing derivative means p(t) = h(t^p) = h(t)^p,
/// so the radical is that of h.
template <class S>
UniPoly<S> squarefree_part(const UniPoly<S>& p) {
  if (p.is_zero()) throw std::domain_error("squarefree part of the zero polynomial");
  if (p.degree() == 0) return p.monic();
  const UniPoly<S> d = p.derivative();
  if (d.is_zero()) {
    if constexpr (std::is_same_v<S, Zp>) {
      const std::uint32_t ch = p.lead().modulus();
      std::vector<S> root;
      for (int i = 0; i <= p.degree(); i += static_cast<int>(ch)) root.push_back(p.coeffs()[i]);
      return squarefree_part(UniPoly<S>(std::move(root)));
    } else {
      throw std::logic_error("vanishing derivative in characteristic zero");
    }
  }
  const UniPoly<S> g = poly_gcd(p, d);
  const UniPoly<S> w = exact_div(p, g).monic();
  if (g.degree() == 0) return w;
  return poly_lcm(w, squarefree_part(g));
}

template <class S>
bool is_squarefree(const UniPoly<S>& p) {
  if (p.is_zero()) return false;
  return poly_gcd(p, p.derivative()).degree() == 0;
}

enum class Irreducibility { Irreducible, Reducible, Unknown };

struct FactorProbe {
  Irreducibility result = Irreducibility::Unknown;
  UniPoly<Rational> factor;  // a proper monic factor when Reducible
};

/// Irreducibility over Q for degree at most 4 (rational roots, then
/// quadratic splittings of quartics). Higher degrees, or constants too large
/// to enumerate divisors of, report Unknown.
FactorProbe probe_irreducible(const UniPoly<Rational>& p);

template <class S>
std::string UniPoly<S>::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const S& c = c_[i];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs.erase(0, 1);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool unit = (cs == "1");
    if (i == 0) {
      os << cs;
    } else {
      if (!unit) os << cs << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

/// Exponent vector of a monomial; at most kMaxVars variables with exponents
/// below 256.
struct Monomial {
  static constexpr int kMaxVars = 16;
  std::array<std::uint8_t, kMaxVars> e{};

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) {
      const int s = a.e[i] + b.e[i];
      if (s > 255) throw std::overflow_error("monomial exponent overflow");
      m.e[i] = static_cast<std::uint8_t>(s);
    }
    return m;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

/// Graded lexicographic order, x1 > x2 > ... within a degree.
inline bool grlex_less(const Monomial& a, const Monomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (int i = 0; i < Monomial::kMaxVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  return false;
}

/// Sparse multivariate polynomial; terms kept ascending in grlex order with
/// no zero coefficients.
template <class S>
class MultiPoly {
public:
  using Term = std::pair<Monomial, S>;

  MultiPoly() = default;
  explicit MultiPoly(int nvars) : n_(nvars) {
    if (nvars < 0 || nvars > Monomial::kMaxVars) throw std::invalid_argument("too many variables");
  }

  static MultiPoly constant(int nvars, const S& c) {
    MultiPoly p(nvars);
    if (!c.is_zero()) p.t_.push_back({Monomial{}, c});
    return p;
  }
  static MultiPoly variable(int nvars, int i, const S& one) {
    MultiPoly p(nvars);
    Monomial m;
    m.e.at(static_cast<std::size_t>(i)) = 1;
    p.t_.push_back({m, one});
    return p;
  }
  /// Builds from arbitrary terms; merges duplicates and drops zeros.
  static MultiPoly from_terms(int nvars, std::vector<Term> terms) {
    MultiPoly p(nvars);
    p.t_ = std::move(terms);
    p.normalize();
    return p;
  }

  int nvars() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  const std::vector<Term>& terms() const { return t_; }
  int total_degree() const { return t_.empty() ? -1 : t_.back().first.degree(); }
  bool is_homogeneous(int d) const {
    return std::all_of(t_.begin(), t_.end(), [d](const Term& t) { return t.first.degree() == d; });
  }
  S coeff(const Monomial& m) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), m,
                               [](const Term& t, const Monomial& k) { return grlex_less(t.first, k); });
    return (it != t_.end() && it->first == m) ? it->second : S(0);
  }

  MultiPoly& operator+=(const MultiPoly& o) { return merge(o, false); }
  MultiPoly& operator-=(const MultiPoly& o) { return merge(o, true); }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) {
    for (auto& t : a.t_) t.second = -t.second;
    return a;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_arity(a, b);
    std::vector<Term> out;
    out.reserve(a.t_.size() * b.t_.size());
    for (const auto& x : a.t_)
      for (const auto& y : b.t_) out.push_back({x.first * y.first, x.second * y.second});
    return from_terms(std::max(a.n_, b.n_), std::move(out));
  }
  friend MultiPoly operator*(const S& s, MultiPoly a) {
    if (s.is_zero()) return MultiPoly(a.n_);
    for (auto& t : a.t_) t.second *= s;
    return a;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
      if (!(a.t_[i].first == b.t_[i].first) || a.t_[i].second != b.t_[i].second) return false;
    return true;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  /// Terms printed leading-first; variables named x1..xn.
  std::string to_string() const;

private:
  static void check_arity(const MultiPoly& a, const MultiPoly& b) {
    // constants built with arity 0 mix with anything
    if (a.n_ != b.n_ && a.n_ != 0 && b.n_ != 0) throw std::invalid_argument("polynomial arity mismatch");
  }
  MultiPoly& merge(const MultiPoly& o, bool negate) {
    check_arity(*this, o);
    std::vector<Term> out;
    out.reserve(t_.size() + o.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
      if (j == o.t_.size() || (i < t_.size() && grlex_less(t_[i].first, o.t_[j].first))) {
        out.push_back(t_[i++]);
      } else if (i == t_.size() || grlex_less(o.t_[j].first, t_[i].first)) {
        out.push_back({o.t_[j].first, negate ? -o.t_[j].second : o.t_[j].second});
        ++j;
      } else {
        S c = negate ? t_[i].second - o.t_[j].second : t_[i].second + o.t_[j].second;
        if (!c.is_zero()) out.push_back({t_[i].first, std::move(c)});
        ++i;
        ++j;
      }
    }
    t_ = std::move(out);
    n_ = std::max(n_, o.n_);
    return *this;
  }
  void normalize() {
    std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return grlex_less(a.first, b.first); });
    std::vector<Term> out;
    for (auto& t : t_) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second += t.second;
      } else {
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    t_ = std::move(out);
  }

  int n_ = 0;
  std::vector<Term> t_;
};

/// Exact evaluation at a point; the point length must equal the arity.
template <class S>
S mv_eval(const MultiPoly<S>& f, std::span<const S> point) {
  if (static_cast<int>(point.size()) != f.nvars())
    throw std::invalid_argument("evaluation point has " + std::to_string(point.size()) +
                                " coordinates, polynomial has " + std::to_string(f.nvars()) + " variables");
  S acc(0);
  for (const auto& [m, c] : f.terms()) {
    S v = c;
    for (int i = 0; i < f.nvars(); ++i)
      for (int k = 0; k < m.e[i]; ++k) v *= point[i];
    acc += v;
  }
  return acc;
}

template <class S>
std::string MultiPoly<S>::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    std::string cs = it->second.to_string();
    const bool neg = cs[0] == '-';
    if (neg) cs.erase(0, 1);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (int i = 0; i < n_; ++i) {
      const int e = it->first.e[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      os << cs;
    } else if (cs == "1") {
      os << mono;
    } else {
      os << cs << "*" << mono;
    }
  }
  return os.str();
}

}  // namespace lielab
