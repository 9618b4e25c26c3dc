#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

#include "oracles.hpp"

using namespace lielab;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void need(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

template <class S>
std::string show(const Vector<S>& v) {
  return vector_json(v).dump();
}

std::string n(long v) { return std::to_string(v); }

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void()> run;
};

const Q q;
const Fp f2(2), f3(3), f5(5);

// ---- 1 ------------------------------------------------------------------------

template <class S>
void nilpotent_is_regular(const std::string& name, const LieAlgebra<S>& L) {
  need(structure_report(L).nilpotent, name + " is not nilpotent");
  need(rank(L) == L.dim(), name + ": rank " + n(rank(L)) + " != dim " + n(L.dim()));
  const auto v = is_regular_algebra(L, Mode::Search);
  need(v.certified() && v.proof == Proof::Structural, name + ": no structural certificate");
}

void criterion1() {
  nilpotent_is_regular("h3/Q", heisenberg(q, 1));
  nilpotent_is_regular("h5/Q", heisenberg(q, 2));
  nilpotent_is_regular("n4/Q", upper_nilpotent(q, 4));
  nilpotent_is_regular("h3/F5", heisenberg(f5, 1));
  nilpotent_is_regular("h5/F5", heisenberg(f5, 2));
  nilpotent_is_regular("n4/F5", upper_nilpotent(f5, 4));
}

// ---- 2 ------------------------------------------------------------------------

int zero_multiplicity(const UniPoly<Rational>& p) {
  int m = 0;
  while (m <= p.degree() && p.coeff(m).is_zero()) ++m;
  return m;
}

void factorization(const std::string& name, const LieAlgebra<Rational>& L, const Subspace<Rational>& I) {
  need(is_ideal(L, I), name + ": not an ideal");
  const auto quo = quotient(L, I);
  std::mt19937_64 rng(20200620);
  int rank_I = I.dim();
  for (int t = 0; t < 50; ++t) {
    const auto x = random_small_vector(q, L.dim(), rng, 1000);
    const auto whole = oracle::char_poly(Matrix<Rational>(ad(L, x)));
    const auto part_I = oracle::char_poly(ad_on_subspace(L, I, x));
    const auto part_Q = oracle::char_poly(Matrix<Rational>(ad(quo, project_to_quotient(I, x))));
    need(whole == part_I * part_Q, name + ": factorization fails at " + show(x));
    rank_I = std::min(rank_I, zero_multiplicity(part_I));
  }
  need(rank(L) == rank_I + rank(quo),
       name + ": rank " + n(rank(L)) + " != " + n(rank_I) + " + " + n(rank(quo)));
}

void criterion2() {
  const auto R = r2(q);
  factorization("r2", R, Subspace<Rational>::span(2, {R.basis_vector(1)}));
  const auto D = direct_sum(sl(q, 2), sl(q, 2));
  factorization("sl2+sl2", D, Subspace<Rational>::span(6, {D.basis_vector(0), D.basis_vector(1), D.basis_vector(2)}));
}

// ---- 3 ------------------------------------------------------------------------

void criterion3() {
  const auto L = su2q();
  const auto g = generic_char_poly(L);
  using M = MultiPoly<Rational>;
  const M x1 = M::variable(3, 0, Rational(1)), x2 = M::variable(3, 1, Rational(1)), x3 = M::variable(3, 2, Rational(1));
  need(g[1] == Rational(4) * (x1 * x1 + x2 * x2 + x3 * x3), "a_1 = " + g[1].to_string());
  // the symbolic result agrees with cofactor expansion at sample points
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const auto x = random_small_vector(q, 3, rng, 100);
    const auto chi = oracle::char_poly(Matrix<Rational>(ad(L, x)));
    need(chi.coeff(1) == Rational(4) * x.squaredNorm(), "cofactor a_1 disagrees at " + show(x));
  }
  const auto v = is_regular_algebra(L, Mode::Certificate);
  need(v.certified() && v.proof == Proof::DefiniteForm, "su2q not certified by the definite form");
  need(is_division(quaternion(q, Rational(-1), Rational(-1)), Mode::Certificate).certified(),
       "the underlying quaternion algebra is not certified division");
}

// ---- 4 ------------------------------------------------------------------------

void criterion4() {
  const auto L = sl(q, 2);
  const auto v = is_regular_algebra(L, Mode::Search);
  need(v.refuted(), "sl2/Q not refuted");
  need(equal<Rational>(v.witness.at(0), L.basis_vector(0)), "witness " + show(v.witness[0]) + " is not e");
  need(oracle::char_poly(Matrix<Rational>(ad(L, L.basis_vector(0)))).coeff(1).is_zero(), "a_1(e) != 0");

  const auto F = sl(f5, 2);
  const auto w = is_regular_algebra(F, Mode::Exhaustive);
  need(w.refuted() && w.proof == Proof::Exhaustive, "sl2/F5 not refuted exhaustively");
  // full scan: a_1 = -4(h^2 + ef) vanishes on 24 nonzero vectors (q^2 - 1 for q = 5)
  FpScan scan(f5, 3);
  int scanned = 0, singular = 0;
  while (scan.next()) {
    const auto x = scan.vector();
    ++scanned;
    const bool zero_a1 = oracle::char_poly(Matrix<Zp>(ad(F, x))).coeff(1).is_zero();
    singular += zero_a1;
    need(is_regular_element(F, x, 1) == !zero_a1, "regularity disagrees with the oracle at " + show(x));
  }
  need(scanned == 124, "scanned " + n(scanned) + " nonzero vectors");
  need(singular == 24, n(singular) + " non-regular nonzero vectors, expected 24");

  const auto H = quaternion(f5, f5.from_int(-1), f5.from_int(-1));
  const auto d = is_division(H, Mode::Exhaustive);
  need(d.refuted() && d.witness.size() == 2, "(-1,-1)/F5 not refuted with a pair");
  const auto prod = oracle::quat_mul(H.a, H.b, d.witness[0], d.witness[1]);
  need(!is_zero<Zp>(d.witness[0]) && !is_zero<Zp>(d.witness[1]) && is_zero<Zp>(prod),
       "witness " + show(d.witness[0]) + " * " + show(d.witness[1]) + " is not a zero divisor pair");
}

// ---- 5 ------------------------------------------------------------------------

void orthogonality(const std::string& name, const LieAlgebra<Rational>& L, const Vector<Rational>& x) {
  const auto k = killing_form(L);
  const int dim = L.dim();
  const Matrix<Rational> p = matrix_power(ad(L, x), dim);
  const auto L0 = kernel(p), L1 = image(p);
  need(L0.dim() + L1.dim() == dim, name + ": components do not add up");
  need(orthogonal_complement(k, L0) == L1, name + ": orth(L0) != L1 at " + show(x));
  // every L0 vector pairs to zero with every L1 vector
  for (const auto& a : L0.basis())
    for (const auto& b : L1.basis()) need(k(a, b).is_zero(), name + ": nonzero pairing at " + show(x));
  need(check_fitting_orthogonality(L, k, {x}), name + ": library check disagrees at " + show(x));
}

void criterion5() {
  std::mt19937_64 rng(20200620);
  for (const auto& [name, L] : {std::pair{std::string("sl2"), sl(q, 2)}, std::pair{std::string("su2q"), su2q()}}) {
    for (int i = 0; i < 3; ++i) orthogonality(name, L, L.basis_vector(i));
    for (int t = 0; t < 100; ++t) {
      const auto x = random_small_vector(q, 3, rng, 1000);
      if (!is_zero<Rational>(x)) orthogonality(name, L, x);
    }
  }
}

// ---- 6 ------------------------------------------------------------------------

void criterion6() {
  const auto H = quaternion(q, Rational(-1), Rational(-1));
  std::mt19937_64 rng(20200620);
  int done = 0;
  while (done < 100) {
    Vector<Rational> x = random_small_vector(q, 4, rng, 1000);
    x(0) = Rational(0);
    if (is_zero<Rational>(x)) continue;
    const auto w = quaternion_commutator(H, x);
    const Vector<Rational> table = H.algebra.multiply(w.u, w.v) - H.algebra.multiply(w.v, w.u);
    const Vector<Rational> direct = oracle::quat_mul(H.a, H.b, w.u, w.v) - oracle::quat_mul(H.a, H.b, w.v, w.u);
    need(equal<Rational>(table, x), "uv - vu != x through the table for x = " + show(x));
    need(equal<Rational>(direct, x), "uv - vu != x through the product formula for x = " + show(x));
    ++done;
  }
}

// ---- 7 ------------------------------------------------------------------------

void criterion7() {
  const auto P = psl(f3, 3), G = pgl(f3, 3);
  need(P.dim() == 7, "dim psl3(F3) = " + n(P.dim()));
  need(G.dim() == 8, "dim pgl3(F3) = " + n(G.dim()));
  // [pgl, pgl] inside the image of sl3: cosets of trace-zero matrices modulo the identity
  const auto I = Subspace<Zp>::span(9, {gl_identity(f3, 3)});
  std::vector<Vector<Zp>> traceless;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Vector<Zp> m = zero_vector(f3, 9);
      if (i != j) m(i * 3 + j) = f3.one();
      else if (i < 2) {
        m(i * 3 + i) = f3.one();
        m((i + 1) * 3 + i + 1) = -f3.one();
      } else continue;
      traceless.push_back(project_to_quotient(I, m));
    }
  const auto image_sl = Subspace<Zp>::span(8, traceless);
  need(image_sl.dim() == 7, "image of sl3 in pgl3 has dim " + n(image_sl.dim()));
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      need(image_sl.contains(G.bracket_basis(i, j)), "[" + G.label(i) + ", " + G.label(j) + "] leaves psl3");
  const int der = static_cast<int>(derivation_algebra(P).maps.size());
  const int der_oracle = oracle::derivation_dim(P);
  need(der == der_oracle, "library Der dim " + n(der) + " != oracle " + n(der_oracle));
  need(der == 8, "dim Der(psl3(F3)) = " + n(der) + " (oracle agrees), expected dim pgl3 = 8");
}

// ---- 8 ------------------------------------------------------------------------

void criterion8() {
  need(h2_trivial(sl(q, 2)).dim == 0 && oracle::h2_dim(sl(q, 2)) == 0, "H^2(sl2/Q) != 0");
  const int h3 = h2_trivial(heisenberg(q, 1)).dim;
  need(h3 == 2 && oracle::h2_dim(heisenberg(q, 1)) == 2, "H^2(h3) = " + n(h3));
  const auto P = psl(f3, 3);
  // the cocycle of sl3 -> psl3 is nontrivial and gives a perfect extension with 1-dim center
  const auto w = extension_cocycle(sl(f3, 3), sl_identity(f3, 3));
  need(is_cocycle(P, w), "sl3 cocycle is not a cocycle");
  const auto E = central_extension(P, w);
  need(commutant(E).dim() == E.dim(), "extension is not perfect");
  need(center(E).dim() == 1, "extension center has dim " + n(center(E).dim()));
  const int h = h2_trivial(P).dim;
  const int h_oracle = oracle::h2_dim(P);
  need(h == h_oracle, "library H^2 dim " + n(h) + " != oracle " + n(h_oracle));
  need(h == 1, "dim H^2(psl3(F3)) = " + n(h) + " (oracle agrees), expected 1");
}

// ---- 9 ------------------------------------------------------------------------

void criterion9() {
  const auto R = r2(f3);
  need(is_minimal_non(MinProperty::Regular, R).certified(), "r2/F3 not certified minimal non-regular");
  need(is_minimal_non(MinProperty::Nilpotent, R).certified(), "r2/F3 not certified minimal non-nilpotent");
  need(structure_report(R).solvable, "r2/F3 not solvable");
  const auto L = std::get<LieAlgebra<Rational>>(make(q, "su2q+K", {}));
  const auto v = is_regular_algebra(L, Mode::Certificate);
  need(v.refuted(), "su2q + K not refuted");
  need(center(L).contains(v.witness.at(0)) && !is_zero<Rational>(v.witness[0]),
       "witness " + show(v.witness[0]) + " is not a nonzero central element");
  const auto S = subalgebra(L, Subspace<Rational>::span(4, {L.basis_vector(0), L.basis_vector(1), L.basis_vector(2)}));
  need(is_regular_algebra(S, Mode::Certificate).certified(), "su2q summand not certified regular");
}

// ---- 10 -----------------------------------------------------------------------

void criterion10() {
  int regular = 0;
  const auto st = enumerate_tables(f2, 2, [&](const EnumTable&, const LieAlgebra<Zp>& L) {
    const bool reg = is_regular_algebra(L, Mode::Exhaustive).certified();
    regular += reg;
    if (reg) need(structure_report(L).abelian, "a regular dim-2 table is not abelian");
  });
  need(st.generated == 4 && st.valid == 4, n(static_cast<long>(st.generated)) + " generated, " +
                                                n(static_cast<long>(st.valid)) + " valid");
  need(regular == 1, n(regular) + " regular dim-2 tables");
  for (int dim = 1; dim <= 3; ++dim) {
    std::uint64_t seen = 0;
    enumerate_tables(f2, dim, [&](const EnumTable& t, const LieAlgebra<Zp>& L) {
      ++seen;
      need(validate(L).empty(), "enumerated table fails Jacobi");
      const bool full = rank(L) == L.dim();
      if (full != structure_report(L).nilpotent) {
        std::ostringstream s;
        for (auto c : t.coeffs) s << c;
        throw Failure("dim " + n(dim) + " table " + s.str() + ": rank = dim is " + (full ? "true" : "false"));
      }
    });
    need(seen > 0, "no tables of dim " + n(dim));
  }
}

// ---- 11 -----------------------------------------------------------------------

template <class S>
void invariant_suite(const std::string& name, const LieAlgebra<S>& L, std::mt19937_64& rng) {
  const int dim = L.dim();
  const auto k = killing_form(L);
  need(k.invariant(), name + ": Killing form not invariant");
  for (int t = 0; t < 200; ++t) {
    const auto x = random_small_vector(L.field(), dim, rng, 30);
    const auto y = random_small_vector(L.field(), dim, rng, 30);
    const auto z = random_small_vector(L.field(), dim, rng, 30);
    const S c = L.field().from_int(static_cast<long>(t % 7) - 3);
    const auto a = ad_char_coeffs(L, x);
    const auto b = ad_char_coeffs(L, Vector<S>(x * c));
    need(a[0].is_zero(), name + ": a_0 != 0 at " + show(x));
    S pw = L.field().one();
    for (int i = dim; i >= 0; --i) {
      need(b[i] == a[i] * pw, name + ": a_" + n(i) + " not homogeneous at " + show(x));
      pw *= c;
    }
    need(k(bracket(L, x, y), z) == k(x, bracket(L, y, z)), name + ": Killing invariance fails");
    const Matrix<S> adx = ad(L, x);
    need(is_zero<S>(eval_poly(char_poly(adx), adx)), name + ": Cayley-Hamilton fails at " + show(x));
    const auto jc = jordan_chevalley(adx);
    need(equal<S>(Matrix<S>(jc.semisimple + jc.nilpotent), adx), name + ": S + N != ad x");
    need(equal<S>(Matrix<S>(jc.semisimple * jc.nilpotent), Matrix<S>(jc.nilpotent * jc.semisimple)),
         name + ": S and N do not commute");
    need(is_zero<S>(matrix_power(jc.nilpotent, dim)), name + ": N not nilpotent");
    if (is_zero<S>(x)) continue;
    const auto fd = fitting(L, x);
    need(fd.L0.dim() + fd.L1.dim() == dim && intersection(fd.L0, fd.L1).is_zero(), name + ": Fitting not a direct sum");
    need(is_subalgebra(L, fd.L0), name + ": L0 not a subalgebra");
    std::vector<Vector<S>> imgs;
    for (const auto& v : fd.L1.basis()) imgs.push_back(bracket(L, x, v));
    need(Subspace<S>::span(dim, imgs) == fd.L1, name + ": ad x not invertible on L1");
  }
}

void criterion11() {
  std::mt19937_64 rng(20200620);
  for (const auto& [name, L] : oracle::rational_catalog()) invariant_suite(name, L, rng);
  for (const auto& [name, L] : oracle::modular_catalog()) invariant_suite(name, L, rng);
}

// ---- 12 -----------------------------------------------------------------------

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(LIELAB_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw Failure("cannot start " + cmd);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void criterion12() {
  for (const std::string spec : {"sl 3", "su2q", "heisenberg 2", "psl 3 --field F3", "sl2*O1 --field F3",
                                 "quaternion -1 -1", "reduced-poly 2 --field F3"}) {
    const auto emitted = run_cli("catalog emit " + spec);
    need(emitted.code == 0, "catalog emit " + spec + " exited " + n(emitted.code));
    const auto parsed = parse_algebra(json::parse(emitted.out));
    need(canonical(to_json(parsed)) == emitted.out, "emit -> parse not byte-identical for " + spec);
  }
  const auto a = run_cli("verify"), b = run_cli("verify");
  need(!a.out.empty() && a.out == b.out, "verify output differs between runs");
  need(json::parse(a.out)["checks"].size() == run_verify().checks.size(), "CLI verify lists a different suite");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "nilpotent algebras are regular (h3, h5, n4 over Q and F5)", 1, criterion1},
      {2, "characteristic polynomial factorization and rank additivity", 1, criterion2},
      {3, "su2q generic a_1 and definite-form certificate", 1, criterion3},
      {4, "negative controls: sl2 over Q and F5, split quaternions over F5", 2, criterion4},
      {5, "orth(L0(X)) = L1(X) under the Killing form", 1, criterion5},
      {6, "trace-zero quaternions are commutators", 1, criterion6},
      {7, "psl3/pgl3 over F3: dimensions, [pgl, pgl] in psl, Der(psl3) = pgl3", 10, criterion7},
      {8, "second cohomology and the central extension of psl3(F3)", 5, criterion8},
      {9, "minimal non-regular r2(F3) and the split central extension of su2q", 2, criterion9},
      {10, "enumeration of small tables over F2", 30, criterion10},
      {11, "invariant suites over the catalog", 10, criterion11},
      {12, "CLI round trip and deterministic verify", 5, criterion12},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::string detail;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run();
    } catch (const std::exception& e) {
      detail = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (detail.empty() && secs > c.limit_seconds)
      detail = "took longer than the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
    failed += !detail.empty();
    std::cout << (detail.empty() ? "PASS" : "FAIL") << " [" << std::setw(2) << c.id << "] " << c.title << " ("
              << std::fixed << std::setprecision(3) << secs << " s)";
    if (!detail.empty()) std::cout << ": " << detail;
    std::cout << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
