#include <doctest.h>

#include "lielab/lielab.hpp"

using namespace lielab;

TEST_CASE("rational arithmetic is exact and canonical") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK((a - a).is_zero());
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(-3, 2).denominator() == 2);
  CHECK(Rational::parse("-12/8") == Rational(-3, 2));
  CHECK(Rational::parse("7").is_integer());
  CHECK(Rational(2, 3).inverse() == Rational(3, 2));
  CHECK(Rational(-5, 7).to_string() == "-5/7");
  CHECK_THROWS(Rational(0).inverse());
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
}

TEST_CASE("prime field arithmetic") {
  const Fp f7(7);
  const Zp x = f7.from_int(3);
  CHECK(x * x.inverse() == f7.one());
  CHECK(f7.from_int(-1) == f7.from_int(6));
  CHECK(f7.parse("-8") == f7.from_int(6));
  CHECK(f7.parse("15").residue() == 1);
  CHECK((f7.from_int(5) + f7.from_int(4)).residue() == 2);
  CHECK(x.times(5).residue() == 1);
  CHECK_THROWS(f7.zero().inverse());
  CHECK_THROWS_AS(Fp(5).one() + f7.one(), FieldMismatch);
  CHECK_THROWS(Fp(6));
  // every nonzero element is invertible
  for (std::uint32_t i = 1; i < 7; ++i) CHECK((f7.element(i) * f7.element(i).inverse()).is_one());
}

TEST_CASE("univariate gcd and squarefree part") {
  using P = UniPoly<Rational>;
  const P a({Rational(1), Rational(0), Rational(1)});   // t^2 + 1
  const P b({Rational(-1), Rational(0), Rational(1)});  // t^2 - 1
  CHECK(poly_gcd(a, b) == P({Rational(1)}));
  const P t1({Rational(-1), Rational(1)});
  CHECK(poly_gcd(b, t1 * t1) == t1);
  CHECK(squarefree_part(t1 * t1 * a) == t1 * a);
  CHECK_FALSE(is_squarefree(t1 * t1));
  auto [q, r] = divmod(a, t1);
  CHECK(q * t1 + r == a);
  CHECK(r == P({Rational(2)}));
  CHECK_THROWS(divmod(a, P()));
}

TEST_CASE("squarefree over a prime field uses p-th roots") {
  const Fp f3(3);
  using P = UniPoly<Zp>;
  // t^3 - 1 = (t - 1)^3 in characteristic 3
  const P p({f3.from_int(-1), f3.zero(), f3.zero(), f3.one()});
  CHECK(squarefree_part(p) == P({f3.from_int(-1), f3.one()}));
}

TEST_CASE("irreducibility probe up to degree four") {
  using P = UniPoly<Rational>;
  CHECK(probe_irreducible(P({Rational(1), Rational(0), Rational(1)})).result == Irreducibility::Irreducible);
  CHECK(probe_irreducible(P({Rational(-2), Rational(0), Rational(1)})).result == Irreducibility::Irreducible);
  // t^4 + 4 = (t^2 + 2t + 2)(t^2 - 2t + 2)
  const auto r = probe_irreducible(P({Rational(4), Rational(0), Rational(0), Rational(0), Rational(1)}));
  CHECK(r.result == Irreducibility::Reducible);
  CHECK(r.factor.degree() == 2);
}

TEST_CASE("multivariate polynomials") {
  using M = MultiPoly<Rational>;
  const M x = M::variable(2, 0, Rational(1)), y = M::variable(2, 1, Rational(1));
  const M f = x * x - y * y;
  CHECK(f == (x + y) * (x - y));
  CHECK(f.is_homogeneous(2));
  CHECK_FALSE((f + x).is_homogeneous(2));
  const std::vector<Rational> pt{Rational(3), Rational(2)};
  CHECK(mv_eval(f, std::span<const Rational>(pt)) == Rational(5));
  CHECK((f - f).is_zero());
  CHECK(f.to_string() == "x1^2 - x2^2");
}
