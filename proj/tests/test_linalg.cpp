#include <doctest.h>

#include "oracles.hpp"

using namespace lielab;

namespace {

template <class S>
void char_poly_matches_oracle(const Field<S>& F, bool fractions) {
  std::mt19937_64 rng(7);
  for (int n = 0; n <= 6; ++n)
    for (int t = 0; t < 6; ++t) {
      const Matrix<S> m = oracle::random_matrix(F, n, rng, 9, fractions);
      const UniPoly<S> want = oracle::char_poly(m);
      CHECK(char_poly(m) == want);
      CHECK(char_poly_berkowitz(m) == want);
      CHECK(char_poly_hessenberg(m) == want);
    }
}

}  // namespace

TEST_CASE("characteristic polynomial agrees with the cofactor oracle") {
  char_poly_matches_oracle(Q{}, false);
  char_poly_matches_oracle(Q{}, true);
  char_poly_matches_oracle(Fp(5), false);
  char_poly_matches_oracle(Fp(7), false);
  char_poly_matches_oracle(Fp(2), false);
}

TEST_CASE("constant term is (-1)^n det") {
  std::mt19937_64 rng(11);
  const Q q;
  for (int n = 1; n <= 5; ++n) {
    const auto m = oracle::random_matrix(q, n, rng, 5, true);
    const Rational sign = (n % 2) ? Rational(-1) : Rational(1);
    CHECK(char_poly(m).coeff(0) == sign * oracle::det(m));
  }
}

TEST_CASE("Cayley-Hamilton and the minimal polynomial") {
  std::mt19937_64 rng(3);
  const Fp f3(3);
  for (int t = 0; t < 30; ++t) {
    const auto m = oracle::random_matrix(f3, 4, rng, 1);
    const auto chi = char_poly(m);
    CHECK(is_zero<Zp>(eval_poly(chi, m)));
    const auto mu = min_poly(m);
    CHECK(is_zero<Zp>(eval_poly(mu, m)));
    CHECK(divmod(chi, mu).second.is_zero());
    CHECK(mu.lead().is_one());
  }
  // a scalar matrix has a linear minimal polynomial
  const Q q;
  const Matrix<Rational> s = Rational(3) * identity(q, 3);
  CHECK(min_poly(s) == UniPoly<Rational>({Rational(-3), Rational(1)}));
  // a nilpotent Jordan block of size 3
  Matrix<Rational> j = zeros(q, 3, 3);
  j(0, 1) = Rational(1);
  j(1, 2) = Rational(1);
  CHECK(min_poly(j) == UniPoly<Rational>::monomial(Rational(1), 3));
}

TEST_CASE("rank, kernel and image against plain elimination") {
  std::mt19937_64 rng(5);
  const Q q;
  for (int t = 0; t < 20; ++t) {
    Matrix<Rational> m = oracle::random_matrix(q, 5, rng, 3);
    m.row(4) = m.row(0) + m.row(1);  // force a dependency
    const int r = oracle::rank(m);
    CHECK(matrix_rank(m) == r);
    const auto k = kernel(m);
    CHECK(k.dim() == 5 - r);
    for (const auto& v : k.basis()) CHECK(is_zero<Rational>(Vector<Rational>(m * v)));
    CHECK(image(m).dim() == r);
  }
}

TEST_CASE("solve and inverse") {
  const Q q;
  Matrix<Rational> m(2, 2);
  m << Rational(1), Rational(2), Rational(3), Rational(4);
  Vector<Rational> b(2);
  b << Rational(5), Rational(6);
  const auto x = solve(m, b);
  REQUIRE(x);
  CHECK(equal<Rational>(Vector<Rational>(m * *x), b));
  const auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(equal<Rational>(Matrix<Rational>(m * *inv), identity(q, 2)));
  Matrix<Rational> sing(2, 2);
  sing << Rational(1), Rational(2), Rational(2), Rational(4);
  CHECK_FALSE(inverse(sing));
  Vector<Rational> off(2);
  off << Rational(1), Rational(0);
  CHECK_FALSE(solve(sing, off));
  CHECK_THROWS_AS(solve(m, Vector<Rational>(3)), DimensionMismatch);
}

TEST_CASE("subspaces are canonical") {
  const Q q;
  const auto e = [&](int i) { return unit_vector(q, 3, i); };
  const auto a = Subspace<Rational>::span(3, {e(0) + e(1), e(1)});
  const auto b = Subspace<Rational>::span(3, {e(0), Vector<Rational>(e(0) - e(1))});
  CHECK(a == b);
  CHECK(a.dim() == 2);
  CHECK(a.contains(Vector<Rational>(e(0) + e(1).eval() * Rational(5))));
  CHECK_FALSE(a.contains(e(2)));
  const auto c = Subspace<Rational>::span(3, {e(1), e(2)});
  CHECK(intersection(a, c) == Subspace<Rational>::span(3, {e(1)}));
  CHECK(sum(a, c).dim() == 3);
  CHECK(a.non_pivots() == std::vector<int>{2});
  const auto coords = a.coordinates(Vector<Rational>(e(0).eval() * Rational(2) + e(1).eval() * Rational(3)));
  CHECK(coords == std::vector<Rational>{Rational(2), Rational(3)});
}

TEST_CASE("Jordan-Chevalley postconditions") {
  std::mt19937_64 rng(17);
  const Q q;
  for (int t = 0; t < 20; ++t) {
    // similar to a block with a repeated eigenvalue and a nilpotent part
    Matrix<Rational> d = zeros(q, 4, 4);
    d(0, 0) = d(1, 1) = Rational(2);
    d(0, 1) = Rational(1);
    d(2, 2) = Rational(-1);
    d(3, 3) = Rational(5);
    Matrix<Rational> p = oracle::random_matrix(q, 4, rng, 3);
    auto pinv = inverse(p);
    if (!pinv) continue;
    const Matrix<Rational> m = p * d * *pinv;
    const auto jc = jordan_chevalley(m);
    CHECK(equal<Rational>(Matrix<Rational>(jc.semisimple + jc.nilpotent), m));
    CHECK(equal<Rational>(Matrix<Rational>(jc.semisimple * jc.nilpotent), Matrix<Rational>(jc.nilpotent * jc.semisimple)));
    CHECK(is_zero<Rational>(matrix_power(jc.nilpotent, 4)));
    CHECK(is_squarefree(min_poly(jc.semisimple)));
    CHECK_FALSE(is_zero<Rational>(jc.nilpotent));
  }
}

TEST_CASE("diagonalizing a quadratic form keeps the determinant class") {
  const Q q;
  Matrix<Rational> g(3, 3);
  g << Rational(0), Rational(1), Rational(0), Rational(1), Rational(0), Rational(0), Rational(0), Rational(0), Rational(3);
  const auto d = diagonalize_quadratic(g);
  REQUIRE(d.size() == 3);
  Rational prod(1);
  for (const auto& x : d) prod *= x;
  // congruent forms have determinants differing by a nonzero square
  const Rational ratio = prod / oracle::det(g);
  CHECK(ratio.sign() > 0);
  int negatives = 0;
  for (const auto& x : d) negatives += x.sign() < 0;
  CHECK(negatives == 1);
}
