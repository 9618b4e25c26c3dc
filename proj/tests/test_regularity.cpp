#include <doctest.h>

#include "oracles.hpp"

using namespace lielab;

namespace {

template <class S>
std::vector<S> coords(const Vector<S>& x) {
  return std::vector<S>(x.data(), x.data() + x.size());
}

}  // namespace

TEST_CASE("generic coefficients evaluate to the pointwise characteristic polynomial") {
  std::mt19937_64 rng(2);
  for (const auto& [name, L] : oracle::rational_catalog()) {
    if (L.dim() > 8) continue;
    CAPTURE(name);
    const auto g = generic_char_poly(L);
    for (int t = 0; t < 5; ++t) {
      const auto x = random_small_vector(L.field(), L.dim(), rng, 7);
      const auto chi = oracle::char_poly(Matrix<Rational>(ad(L, x)));
      const auto pt = coords(x);
      for (int i = 0; i <= L.dim(); ++i) CHECK(mv_eval(g[i], std::span<const Rational>(pt)) == chi.coeff(i));
    }
  }
}

TEST_CASE("homogeneity a_i(cx) = c^(n-i) a_i(x) and a_0 = 0") {
  std::mt19937_64 rng(4);
  for (const auto& [name, L] : oracle::rational_catalog()) {
    CAPTURE(name);
    const int n = L.dim();
    for (int t = 0; t < 200 / 12 + 1; ++t) {
      const auto x = random_small_vector(L.field(), n, rng, 50);
      const Rational c(static_cast<long>(t % 5) - 2, 3);
      const auto a = ad_char_coeffs(L, x);
      const auto b = ad_char_coeffs(L, Vector<Rational>(x * c));
      CHECK(a[0].is_zero());
      Rational pw(1);
      for (int i = n; i >= 0; --i) {
        CHECK(b[i] == a[i] * pw);
        pw *= c;
      }
    }
  }
}

TEST_CASE("explicit generic coefficients") {
  using M = MultiPoly<Rational>;
  const auto x = [](int n, int i) { return M::variable(n, i, Rational(1)); };
  const auto su = generic_char_poly(su2q());
  CHECK(su[1] == Rational(4) * (x(3, 0) * x(3, 0) + x(3, 1) * x(3, 1) + x(3, 2) * x(3, 2)));
  CHECK(su[2].is_zero());
  CHECK(su[0].is_zero());
  const auto r = generic_char_poly(r2(Q{}));
  CHECK(r[1] == -x(2, 0));
  const auto s = generic_char_poly(sl(Q{}, 2));
  // det-like form 4(h^2 + e f) up to sign convention: a_1 = -(4 h^2 + 4 e f)
  CHECK(s[1] == Rational(-4) * (x(3, 1) * x(3, 1) + x(3, 0) * x(3, 2)));
}

TEST_CASE("ranks") {
  const Q q;
  CHECK(rank(sl(q, 2)) == 1);
  CHECK(rank(gl(q, 2)) == 2);
  CHECK(rank(heisenberg(q, 1)) == 3);
  CHECK(rank(sl(q, 3)) == 2);
  CHECK(rank(r2(q)) == 1);
  CHECK(rank(su2q()) == 1);
  CHECK(rank(abelian(q, 0)) == 0);
  CHECK(rank(sl(Fp(5), 2)) == 1);
  CHECK(rank(upper_nilpotent(Fp(2), 3)) == 3);
  const auto info = rank_info(sl(q, 2));
  CHECK(info.certified);
  CHECK(info.method == RankMethod::Symbolic);
  CHECK(rank_info(abelian(q, 4)).method == RankMethod::Trivial);
}

TEST_CASE("regular elements and the Fitting null component") {
  const auto L = sl(Q{}, 2);
  CHECK(is_regular_element(L, L.basis_vector(1)));
  CHECK_FALSE(is_regular_element(L, L.basis_vector(0)));
  CHECK(null_multiplicity(L, L.basis_vector(0)) == 3);
  CHECK(null_multiplicity(L, L.basis_vector(1)) == 1);
  CHECK_THROWS(is_regular_element(L, L.zero()));
}

TEST_CASE("Fitting invariants over the catalog") {
  std::mt19937_64 rng(6);
  for (const auto& [name, L] : oracle::rational_catalog()) {
    CAPTURE(name);
    for (int t = 0; t < 200 / 12 + 1; ++t) {
      const auto x = random_small_vector(L.field(), L.dim(), rng, 10);
      if (is_zero<Rational>(x)) continue;
      const auto fd = fitting(L, x);
      CHECK(fd.L0.dim() + fd.L1.dim() == L.dim());
      CHECK(intersection(fd.L0, fd.L1).dim() == 0);
      CHECK(is_subalgebra(L, fd.L0));
      CHECK(fd.L0.dim() == null_multiplicity(L, x));
      // ad x is invertible on L1
      std::vector<Vector<Rational>> imgs;
      for (const auto& v : fd.L1.basis()) imgs.push_back(bracket(L, x, v));
      CHECK(Subspace<Rational>::span(L.dim(), imgs) == fd.L1);
    }
  }
}

TEST_CASE("Fitting decomposition for a set requires almost commuting elements") {
  const auto L = sl(Q{}, 2);
  CHECK(almost_commuting(L, L.basis_vector(1), Vector<Rational>(L.basis_vector(1) * Rational(3))));
  CHECK(almost_commuting(L, L.basis_vector(0), L.basis_vector(2)));  // ad e is nilpotent
  CHECK_FALSE(almost_commuting(L, L.basis_vector(1), L.basis_vector(0)));
  CHECK_THROWS(fitting_set(L, {L.basis_vector(1), L.basis_vector(0)}));
  const auto h = heisenberg(Q{}, 1);
  // in a nilpotent algebra everything is in the null component
  CHECK(fitting_set(h, {h.basis_vector(0), h.basis_vector(1)}).L0.dim() == 3);
}

TEST_CASE("regularity verdicts") {
  const Q q;
  const Budget b;
  const auto su = is_regular_algebra(su2q(), Mode::Certificate, b);
  CHECK(su.certified());
  CHECK(su.proof == Proof::DefiniteForm);

  const auto s = is_regular_algebra(sl(q, 2), Mode::Search, b);
  REQUIRE(s.refuted());
  CHECK(ad_char_coeffs(sl(q, 2), s.witness[0])[1].is_zero());

  const auto f = is_regular_algebra(sl(Fp(5), 2), Mode::Exhaustive, b);
  CHECK(f.refuted());
  CHECK(f.proof == Proof::Exhaustive);

  const auto h = is_regular_algebra(heisenberg(q, 2), Mode::Search, b);
  CHECK(h.certified());
  CHECK(h.proof == Proof::Structural);

  // y has a_1(y) = 0 in r2
  CHECK(is_regular_algebra(r2(Fp(3)), Mode::Exhaustive, b).refuted());
  CHECK_THROWS(is_regular_algebra(sl(q, 2), Mode::Exhaustive, b));

  // search alone never certifies a non-nilpotent algebra
  const auto srch = is_regular_algebra(su2q(), Mode::Search, b);
  CHECK(srch.status == Status::Inconclusive);
  CHECK(srch.evidence.trials == b.trials);
}

TEST_CASE("witnesses recheck") {
  const Budget b;
  for (const auto& [name, L] : oracle::rational_catalog()) {
    CAPTURE(name);
    const auto v = is_regular_algebra(L, Mode::Certificate, b);
    if (!v.refuted()) continue;
    REQUIRE(v.witness.size() == 1);
    CHECK_FALSE(is_zero<Rational>(v.witness[0]));
    CHECK_FALSE(is_regular_element(L, v.witness[0]));
  }
}

TEST_CASE("anisotropic and nilpotent-free") {
  const Q q;
  CHECK(is_anisotropic(su2q(), Mode::Certificate).certified());
  CHECK(is_nilpotent_free(su2q(), Mode::Certificate).certified());
  CHECK(is_anisotropic(abelian(q, 2), Mode::Search).certified());
  const auto s = is_anisotropic(sl(q, 2), Mode::Search);
  REQUIRE(s.refuted());
  CHECK_FALSE(is_semisimple_ad(sl(q, 2), s.witness[0]));
  CHECK(is_nilpotent_free(heisenberg(q, 1), Mode::Search).refuted());
  CHECK(is_anisotropic(sl(Fp(5), 2), Mode::Exhaustive).refuted());
  CHECK(is_semisimple_ad(sl(q, 2), sl(q, 2).basis_vector(1)));
}

TEST_CASE("height grid order") {
  HeightGrid g(2, 2);
  std::vector<std::vector<long>> pts;
  while (g.next()) pts.push_back(g.point());
  // height 1 then height 2, first nonzero coordinate positive
  REQUIRE(pts.size() >= 4);
  CHECK(pts[0] == std::vector<long>{1, 0});
  CHECK(pts[1] == std::vector<long>{0, 1});
  for (const auto& p : pts) {
    const long first = p[0] != 0 ? p[0] : p[1];
    CHECK(first > 0);
  }
  FpScan scan(Fp(3), 2);
  int count = 0;
  while (scan.next()) ++count;
  CHECK(count == 8);
  CHECK(fp_space_size(3, 4) == 81);
}

TEST_CASE("quadratic form Gram matrix") {
  using M = MultiPoly<Rational>;
  const M x = M::variable(2, 0, Rational(1)), y = M::variable(2, 1, Rational(1));
  const auto g = quadratic_form_gram(Q{}, x * x + Rational(3) * x * y);
  CHECK(g(0, 0) == Rational(1));
  CHECK(g(0, 1) == Rational(3, 2));
  CHECK(g(1, 0) == Rational(3, 2));
  CHECK(g(1, 1) == Rational(0));
}
