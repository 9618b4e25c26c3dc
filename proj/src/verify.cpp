#include "lielab/verify.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "lielab/catalog.hpp"
#include "lielab/commutator.hpp"
#include "lielab/points.hpp"

namespace lielab {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

bool SuiteResult::all_pass() const { return count(CheckStatus::Fail) == 0; }

int SuiteResult::count(CheckStatus s) const {
  int n = 0;
  for (const auto& c : checks) n += c.status == s;
  return n;
}

json suite_json(const SuiteResult& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"anchor", c.anchor}, {"status", to_string(c.status)}, {"detail", c.detail}});
  return json{{"checks", checks},
              {"summary",
               {{"pass", r.count(CheckStatus::Pass)}, {"fail", r.count(CheckStatus::Fail)}, {"skip", r.count(CheckStatus::Skip)}}}};
}

namespace {

struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Mismatch(what);
}

template <class T>
std::string str(const T& v) {
  return std::to_string(v);
}

template <class S>
std::string vstr(const Vector<S>& v) {
  return vector_json(v).dump();
}

template <class S>
Vector<S> vec(const Field<S>& F, std::initializer_list<long> xs) {
  Vector<S> v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = F.from_int(x);
  return v;
}

template <class S>
int zero_multiplicity(const UniPoly<S>& chi) {
  int m = 0;
  while (m <= chi.degree() && chi.coeff(m).is_zero()) ++m;
  return m;
}

// chi_L(x) = chi_I(x) chi_{L/I}(x) for seeded random x. The rank of I here is
// the generic multiplicity of 0 for ad x restricted to I, x ranging over L.
template <class S>
void check_factorization(const LieAlgebra<S>& L, const Subspace<S>& I, int samples, std::uint64_t seed) {
  const LieAlgebra<S> quo = quotient(L, I);
  std::mt19937_64 rng(seed);
  int rank_I = I.dim();
  for (int t = 0; t < samples; ++t) {
    const Vector<S> x = random_small_vector(L.field(), L.dim(), rng, 1000);
    const UniPoly<S> whole_chi = char_poly(ad(L, x));
    const UniPoly<S> chi_I = char_poly(ad_on_subspace(L, I, x));
    const UniPoly<S> part = chi_I * char_poly(ad(quo, project_to_quotient(I, x)));
    expect(whole_chi == part, "factorization fails at x = " + vstr(x));
    rank_I = std::min(rank_I, zero_multiplicity(chi_I));
  }
  expect(rank(L) == rank_I + rank(quo),
         "rank " + str(rank(L)) + " != " + str(rank_I) + " + " + str(rank(quo)));
}

template <class S>
void check_nilpotent_regular(const LieAlgebra<S>& L, const std::string& name) {
  expect(rank(L) == L.dim(), name + ": rank " + str(rank(L)) + " != dim " + str(L.dim()));
  const Verdict<S> v = is_regular_algebra(L, Mode::Search);
  expect(v.certified() && v.proof == Proof::Structural, name + ": not certified regular by the structural shortcut");
}

struct Entry {
  const char* name;
  const char* anchor;
  std::function<void()> run;
};

}  // namespace

SuiteResult run_verify(const Budget& budget) {
  const Q q;
  const Fp f2(2), f3(3), f5(5);
  std::vector<Entry> entries = {
      {"nilpotent-regular-heisenberg", "nilpotent Lie algebras are regular",
       [&] {
         check_nilpotent_regular(heisenberg(q, 1), "h3/Q");
         check_nilpotent_regular(heisenberg(q, 2), "h5/Q");
         check_nilpotent_regular(heisenberg(f5, 1), "h3/F5");
         check_nilpotent_regular(heisenberg(f5, 2), "h5/F5");
       }},
      {"nilpotent-regular-upper4", "nilpotent Lie algebras are regular",
       [&] {
         check_nilpotent_regular(upper_nilpotent(q, 4), "n4/Q");
         check_nilpotent_regular(upper_nilpotent(f5, 4), "n4/F5");
       }},
      {"subalgebra-heredity-su2q", "subalgebras of regular algebras are regular",
       [&] {
         const auto L = su2q();
         std::mt19937_64 rng(budget.seed);
         for (int t = 0; t < 10; ++t) {
           const auto a = random_small_vector(q, 3, rng, 5), b = random_small_vector(q, 3, rng, 5);
           const auto sub = subalgebra(L, subalgebra_generated(L, {a, b}));
           if (sub.dim() == 0) continue;
           expect(is_regular_algebra(sub, Mode::Certificate, budget).certified(),
                  "subalgebra generated by " + vstr(a) + ", " + vstr(b) + " not certified regular");
         }
       }},
      {"quotient-regular-heisenberg", "quotients of regular algebras by ideals are regular",
       [&] {
         const auto L = heisenberg(q, 1);
         const auto quo = quotient(L, center(L));
         expect(is_regular_algebra(quo, Mode::Search, budget).certified(), "h3 / center not certified regular");
       }},
      {"chi-factorization-r2", "chi_L(x) = chi_I(x) chi_{L/I}(x) and rk L = rk I + rk L/I with rk I taken for ad x restricted to I",
       [&] {
         const auto L = r2(q);
         check_factorization(L, Subspace<Rational>::span(2, {vec(q, {0, 1})}), 50, budget.seed);
       }},
      {"chi-factorization-sl2+sl2", "chi_L(x) = chi_I(x) chi_{L/I}(x) and rk L = rk I + rk L/I with rk I taken for ad x restricted to I",
       [&] {
         const auto L = direct_sum(sl(q, 2), sl(q, 2));
         check_factorization(L, Subspace<Rational>::span(6, {L.basis_vector(0), L.basis_vector(1), L.basis_vector(2)}), 50,
                             budget.seed);
       }},
      {"regular-certificate-su2q", "trace-zero quaternions of a division algebra form a regular algebra",
       [&] {
         const auto L = su2q();
         const auto g = generic_char_poly(L, budget);
         const MultiPoly<Rational> x1 = MultiPoly<Rational>::variable(3, 0, 1), x2 = MultiPoly<Rational>::variable(3, 1, 1),
                                   x3 = MultiPoly<Rational>::variable(3, 2, 1);
         const MultiPoly<Rational> want = Rational(4) * (x1 * x1 + x2 * x2 + x3 * x3);
         expect(g[1] == want, "a_1 = " + g[1].to_string());
         const auto v = is_regular_algebra(L, Mode::Certificate, budget);
         expect(v.certified() && v.proof == Proof::DefiniteForm, "su2q not certified by the definite form");
       }},
      {"nonregular-sl2-Q", "sl2 has non-regular nonzero elements",
       [&] {
         const auto v = is_regular_algebra(sl(q, 2), Mode::Search, budget);
         expect(v.refuted(), "sl2/Q not refuted");
         expect(equal<Rational>(v.witness.at(0), vec(q, {1, 0, 0})), "witness " + vstr(v.witness.at(0)) + " is not e");
         expect(ad_char_coeffs(sl(q, 2), v.witness[0])[1].is_zero(), "a_1(e) != 0");
       }},
      {"nonregular-sl2-F5", "sl2 has non-regular nonzero elements",
       [&] {
         const auto v = is_regular_algebra(sl(f5, 2), Mode::Exhaustive, budget);
         expect(v.refuted() && v.proof == Proof::Exhaustive, "sl2/F5 not refuted exhaustively");
         expect(equal<Zp>(v.witness.at(0), vec(f5, {1, 0, 0})), "witness " + vstr(v.witness.at(0)) + " is not e");
       }},
      {"split-quaternions-F5", "quaternion algebras over finite fields split",
       [&] {
         const auto Q5 = quaternion(f5, f5.from_int(-1), f5.from_int(-1));
         const auto v = is_division(Q5, Mode::Exhaustive, budget);
         expect(v.refuted() && v.witness.size() == 2, "(-1,-1)/F5 not refuted");
         expect(is_zero<Zp>(Q5.algebra.multiply(v.witness[0], v.witness[1])), "witness product is nonzero");
       }},
      {"division-quaternions-Q", "(-1,-1) over Q is a division algebra and (1,1) is split",
       [&] {
         expect(is_division(quaternion(q, Rational(-1), Rational(-1)), Mode::Certificate, budget).certified(),
                "(-1,-1)/Q not certified");
         expect(is_division(quaternion(q, Rational(1), Rational(1)), Mode::Certificate, budget).refuted(), "(1,1)/Q not refuted");
       }},
      {"fitting-orthogonality-sl2-killing", "orth(L^0(X)) = L^1(X) under a nondegenerate invariant form",
       [&] {
         const auto L = sl(q, 2);
         const auto k = killing_form(L);
         for (int i = 0; i < 3; ++i)
           expect(check_fitting_orthogonality(L, k, {L.basis_vector(i)}), "fails at " + L.label(i));
         std::mt19937_64 rng(budget.seed);
         for (int t = 0; t < 100; ++t) {
           const auto x = random_small_vector(q, 3, rng, 50);
           if (!is_zero<Rational>(x)) expect(check_fitting_orthogonality(L, k, {x}), "fails at " + vstr(x));
         }
       }},
      {"fitting-orthogonality-su2q-killing", "orth(L^0(X)) = L^1(X) under a nondegenerate invariant form",
       [&] {
         const auto L = su2q();
         const auto k = killing_form(L);
         for (int i = 0; i < 3; ++i)
           expect(check_fitting_orthogonality(L, k, {L.basis_vector(i)}), "fails at " + L.label(i));
         std::mt19937_64 rng(budget.seed + 1);
         for (int t = 0; t < 100; ++t) {
           const auto x = random_small_vector(q, 3, rng, 50);
           if (!is_zero<Rational>(x)) expect(check_fitting_orthogonality(L, k, {x}), "fails at " + vstr(x));
         }
       }},
      {"rank1-commutator-su2q", "in a simple regular algebra of rank one every element is a commutator",
       [&] {
         const auto L = su2q();
         const auto k = killing_form(L);
         const auto w = rank1_commutator(L, k, vec(q, {1, 0, 0}), budget);
         Vector<Rational> z(3);
         z << Rational(0), Rational(0), Rational(-1, 2);
         expect(equal<Rational>(w.y, vec(q, {0, 1, 0})) && equal<Rational>(w.z, z),
                "x = i gives y = " + vstr(w.y) + ", z = " + vstr(w.z));
         std::mt19937_64 rng(budget.seed);
         for (int t = 0; t < 100; ++t) {
           const auto x = random_small_vector(q, 3, rng, 1000);
           if (is_zero<Rational>(x)) continue;
           const auto r = rank1_commutator(L, k, x, budget);
           expect(equal<Rational>(bracket(L, r.z, r.y), x), "unverified pair for " + vstr(x));
         }
       }},
      {"rank1-commutator-sl2", "in a simple regular algebra of rank one every element is a commutator",
       [&] {
         const auto L = sl(q, 2);
         const auto w = rank1_commutator(L, killing_form(L), vec(q, {0, 1, 0}), budget);
         expect(equal<Rational>(w.y, vec(q, {1, 0, 0})) && equal<Rational>(w.z, vec(q, {0, 0, -1})),
                "x = h gives y = " + vstr(w.y) + ", z = " + vstr(w.z));
       }},
      {"quaternion-commutator", "in a quaternion division algebra every element of reduced trace zero is a commutator",
       [&] {
         const auto H = quaternion(q, Rational(-1), Rational(-1));
         const auto w = quaternion_commutator(H, vec(q, {0, 1, 0, 0}), budget);
         Vector<Rational> u(4);
         u << Rational(0), Rational(0), Rational(0), Rational(-1, 2);
         expect(equal<Rational>(w.u, u) && equal<Rational>(w.v, vec(q, {0, 0, 1, 0})),
                "x = i gives u = " + vstr(w.u) + ", v = " + vstr(w.v));
         std::mt19937_64 rng(budget.seed);
         for (int t = 0; t < 100; ++t) {
           Vector<Rational> x = random_small_vector(q, 4, rng, 1000);
           x(0) = Rational(0);
           if (is_zero<Rational>(x)) continue;
           const auto r = quaternion_commutator(H, x, budget);
           expect(equal<Rational>(Vector<Rational>(H.algebra.multiply(r.u, r.v) - H.algebra.multiply(r.v, r.u)), x),
                  "uv - vu != x for x = " + vstr(x));
         }
       }},
      {"psl3-F3-dimensions", "dim psl = n^2 - 2, dim pgl = n^2 - 1, [pgl, pgl] = psl",
       [&] {
         const auto P = psl(f3, 3), G = pgl(f3, 3);
         expect(P.dim() == 7, "dim psl3 = " + str(P.dim()));
         expect(G.dim() == 8, "dim pgl3 = " + str(G.dim()));
         // image of sl3 in pgl3 = gl3 / KE
         const auto I = Subspace<Zp>::span(9, {gl_identity(f3, 3)});
         std::vector<Vector<Zp>> sl_in_pgl;
         for (int i = 0; i < 3; ++i)
           for (int j = 0; j < 3; ++j) {
             Vector<Zp> m = zero_vector(f3, 9);
             if (i != j) m(i * 3 + j) = f3.one();
             else if (i < 2) {
               m(i * 3 + i) = f3.one();
               m((i + 1) * 3 + i + 1) = -f3.one();
             } else continue;
             sl_in_pgl.push_back(project_to_quotient(I, m));
           }
         const auto image = Subspace<Zp>::span(8, sl_in_pgl);
         expect(image.dim() == 7, "image of sl3 in pgl3 has dim " + str(image.dim()));
         expect(commutant(G) == image, "[pgl3, pgl3] != psl3");
       }},
      {"der-psl3-F3", "Der(psl_n) = pgl_n when the characteristic divides n",
       [&] {
         const auto d = derivation_algebra(psl(f3, 3), budget).maps.size();
         expect(d == 8, "dim Der(psl3(F3)) = " + str(d) + ", expected dim pgl3 = 8");
       }},
      {"der-psl5-F5", "Der(psl_n) = pgl_n when the characteristic divides n",
       [&] {
         Budget b = budget;
         b.derivation_dim = std::max(b.derivation_dim, 23);
         const auto d = derivation_algebra(psl(f5, 5), b).maps.size();
         expect(d == 24, "dim Der(psl5(F5)) = " + str(d) + ", expected dim pgl5 = 24");
       }},
      {"h2-psl3-F3", "H^2(psl_n, K) is one-dimensional",
       [&] {
         const int d = h2_trivial(psl(f3, 3)).dim;
         expect(d == 1, "dim H^2(psl3(F3)) = " + str(d) + ", expected 1");
       }},
      {"h2-psl5-F5", "H^2(psl_n, K) is one-dimensional",
       [&] {
         const int d = h2_trivial(psl(f5, 5)).dim;
         expect(d == 1, "dim H^2(psl5(F5)) = " + str(d) + ", expected 1");
       }},
      {"central-extension-psl3-F3", "the nonsplit central extension of psl_n is sl_n: perfect with 1-dim center",
       [&] {
         const auto w = extension_cocycle(sl(f3, 3), sl_identity(f3, 3));
         const auto P = psl(f3, 3);
         const auto h2 = h2_trivial(P);
         // nontrivial class: not a coboundary
         const auto ext = central_extension(P, w);
         expect(commutant(ext).dim() == ext.dim(), "extension is not perfect");
         expect(center(ext).dim() == 1, "extension center has dim " + str(center(ext).dim()));
         expect(h2.dim >= 1, "H^2 vanishes");
       }},
      {"h2-sl2-Q", "H^2(sl2, Q) = 0", [&] { expect(h2_trivial(sl(q, 2)).dim == 0, "nonzero"); }},
      {"h2-heisenberg", "H^2(h3, K) has dimension 2",
       [&] {
         const int d = h2_trivial(heisenberg(q, 1)).dim;
         expect(d == 2, "dim = " + str(d));
       }},
      {"minimal-nonregular-r2-F3", "solvable minimal non-regular algebras are minimal non-nilpotent",
       [&] {
         const auto L = r2(f3);
         expect(is_minimal_non(MinProperty::Regular, L, budget).certified(), "r2/F3 not minimal non-regular");
         expect(is_minimal_non(MinProperty::Nilpotent, L, budget).certified(), "r2/F3 not minimal non-nilpotent");
         expect(structure_report(L).solvable, "r2/F3 not solvable");
       }},
      {"minimal-nonabelian-sl2-F5", "sl2 contains a nonabelian Borel subalgebra",
       [&] {
         const auto v = is_minimal_non(MinProperty::Abelian, sl(f5, 2), budget);
         expect(v.refuted(), "sl2/F5 reported minimal non-abelian");
         expect(Subspace<Zp>::span(3, v.witness) == Subspace<Zp>::span(3, {vec(f5, {1, 0, 0}), vec(f5, {0, 1, 0})}),
                "witness is not span(e, h)");
       }},
      {"central-extension-su2q-nonregular", "a split one-dimensional central extension of a regular algebra is not regular",
       [&] {
         const auto L = std::get<LieAlgebra<Rational>>(make(q, "su2q+K", {}));
         const auto v = is_regular_algebra(L, Mode::Search, budget);
         expect(v.refuted(), "su2q+K not refuted");
         expect(center(L).contains(v.witness.at(0)), "witness " + vstr(v.witness[0]) + " is not central");
         const auto sub = subalgebra(L, Subspace<Rational>::span(4, {L.basis_vector(0), L.basis_vector(1), L.basis_vector(2)}));
         expect(is_regular_algebra(sub, Mode::Certificate, budget).certified(), "su2q summand not certified");
       }},
      {"simple-sl2-su2q", "sl2 and su2q are simple; sl2 + sl2 is not",
       [&] {
         expect(is_simple(sl(q, 2), budget).certified(), "sl2/Q not certified simple");
         expect(is_simple(su2q(), budget).certified(), "su2q not certified simple");
         expect(is_simple(direct_sum(sl(q, 2), sl(q, 2)), budget).refuted(), "sl2 + sl2 not refuted");
       }},
      {"anisotropic-su2q", "regular rank-one algebras with definite a_1 are anisotropic; sl2 is not",
       [&] {
         expect(is_anisotropic(su2q(), Mode::Certificate, budget).certified(), "su2q not certified anisotropic");
         expect(is_nilpotent_free(su2q(), Mode::Certificate, budget).certified(), "su2q not certified nilpotent-free");
         const auto v = is_anisotropic(sl(q, 2), Mode::Search, budget);
         expect(v.refuted() && equal<Rational>(v.witness.at(0), vec(q, {1, 0, 0})), "sl2 not refuted with witness e");
       }},
      {"enumerate-F2-dim2", "all 4 two-dimensional tables over F2, exactly one regular",
       [&] {
         int regular = 0;
         const auto st = enumerate_tables(f2, 2, [&](const EnumTable&, const LieAlgebra<Zp>& L) {
           regular += is_regular_algebra(L, Mode::Exhaustive, budget).certified();
         }, budget);
         expect(st.generated == 4 && st.valid == 4, str(st.generated) + " tables, " + str(st.valid) + " valid");
         expect(regular == 1, str(regular) + " regular tables");
       }},
      {"enumerate-F2-dim3-rank-nilpotent", "rank = dim exactly for nilpotent tables",
       [&] {
         std::string bad;
         enumerate_tables(f2, 3, [&](const EnumTable& t, const LieAlgebra<Zp>& L) {
           if ((rank(L) == L.dim()) != structure_report(L).nilpotent && bad.empty()) {
             json c = t.coeffs;
             bad = c.dump();
           }
         }, budget);
         expect(bad.empty(), "table " + bad);
       }},
  };

  SuiteResult result;
  for (const auto& e : entries) {
    CheckResult c{e.name, e.anchor, CheckStatus::Pass, "", 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      e.run();
    } catch (const Mismatch& m) {
      c.status = CheckStatus::Fail;
      c.detail = m.what();
    } catch (const BudgetExceeded& b) {
      c.status = CheckStatus::Skip;
      c.detail = b.what();
    } catch (const std::exception& ex) {
      c.status = CheckStatus::Fail;
      c.detail = std::string("error: ") + ex.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    result.checks.push_back(std::move(c));
  }
  return result;
}

}  // namespace lielab
