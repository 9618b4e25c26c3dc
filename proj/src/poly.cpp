#include "lielab/poly.hpp"

namespace lielab {

namespace {

// Divisors of |n| (n != 0), or nothing when |n| is too large to factor by
// trial division.
std::optional<std::vector<mpz_class>> divisors(const mpz_class& n) {
  mpz_class a = abs(n);
  if (a > mpz_class("1000000000000")) return std::nullopt;
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d != 0) continue;
    out.push_back(d);
    if (d * d != a) out.push_back(a / d);
  }
  return out;
}

UniPoly<Rational> from_ints(const std::vector<mpz_class>& c) {
  std::vector<Rational> v;
  for (const auto& x : c) v.emplace_back(mpq_class(x));
  return UniPoly<Rational>(std::move(v));
}

}  // namespace

FactorProbe probe_irreducible(const UniPoly<Rational>& p) {
  if (p.degree() < 1) throw std::invalid_argument("irreducibility of a constant");
  const int n = p.degree();
  if (n == 1) return {Irreducibility::Irreducible, {}};
  if (n > 4) return {Irreducibility::Unknown, {}};

  // q(t) = D^n p(t / D) is monic with integer coefficients.
  const UniPoly<Rational> m = p.monic();
  mpz_class den = 1;
  for (const auto& c : m.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> q(static_cast<std::size_t>(n) + 1);
  mpz_class scale = 1;
  for (int i = n; i >= 0; --i) {
    q[i] = mpq_class(m.coeffs()[i].value() * scale).get_num();
    scale *= den;
  }
  // factor of q(t) -> factor of p(t) = q(D t) / D^n
  auto back = [&](const UniPoly<Rational>& f) {
    std::vector<Rational> c;
    mpz_class s = 1;
    for (int i = 0; i <= f.degree(); ++i) {
      c.push_back(f.coeffs()[i] * Rational(mpq_class(s)));
      s *= den;
    }
    return UniPoly<Rational>(std::move(c)).monic();
  };

  if (q[0] == 0) return {Irreducibility::Reducible, back(from_ints({0, 1}))};
  auto divs = divisors(q[0]);
  if (!divs) return {Irreducibility::Unknown, {}};
  // monic integral: rational roots are integer divisors of q0
  for (const auto& d : *divs)
    for (const mpz_class& r : {d, mpz_class(-d)}) {
      mpz_class acc = 0;
      for (int i = n; i >= 0; --i) acc = acc * r + q[i];
      if (acc == 0) return {Irreducibility::Reducible, back(from_ints({-r, 1}))};
    }
  if (n <= 3) return {Irreducibility::Irreducible, {}};

  // q = (t^2 + a t + b)(t^2 + c t + e) with b e = q0
  for (const auto& d : *divs)
    for (const mpz_class& b : {d, mpz_class(-d)}) {
      const mpz_class e = q[0] / b;
      if (b != e) {
        const mpz_class num = q[1] - b * q[3];
        const mpz_class dd = e - b;
        if (num % dd != 0) continue;
        const mpz_class a = num / dd;
        const mpz_class c = q[3] - a;
        if (a * c + b + e == q[2]) return {Irreducibility::Reducible, back(from_ints({b, a, 1}))};
      } else {
        if (q[1] != b * q[3]) continue;
        // a + c = q3, a c = q2 - 2b
        const mpz_class disc = q[3] * q[3] - 4 * (q[2] - 2 * b);
        if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) continue;
        const mpz_class root = sqrt(disc);
        if ((q[3] + root) % 2 != 0) continue;
        const mpz_class a = (q[3] + root) / 2;
        return {Irreducibility::Reducible, back(from_ints({b, a, 1}))};
      }
    }
  return {Irreducibility::Irreducible, {}};
}

}  // namespace lielab
