#include <CLI11.hpp>

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>

#include "lielab/lielab.hpp"

using namespace lielab;

namespace {

// 0 success or Certified, 1 Refuted or FAIL, 2 Inconclusive, 3 bad input
enum Exit { kOk = 0, kRefuted = 1, kInconclusive = 2, kInput = 3, kInternal = 4 };

struct Report {
  json body;
  int code = kOk;
};

int code_of(Status s) {
  switch (s) {
    case Status::Certified: return kOk;
    case Status::Refuted: return kRefuted;
    case Status::Inconclusive: return kInconclusive;
  }
  return kInternal;
}

template <class T>
constexpr bool is_lie_v = false;
template <class S>
constexpr bool is_lie_v<LieAlgebra<S>> = true;

template <class Fn>
Report on_lie(const Algebra& a, Fn&& fn) {
  return std::visit(
      [&](const auto& alg) -> Report {
        using T = std::decay_t<decltype(alg)>;
        if constexpr (is_lie_v<T>) return fn(alg);
        else throw ParseError("this command needs a Lie algebra; the file holds an associative algebra");
      },
      a);
}

template <class Fn>
Report on_assoc(const Algebra& a, Fn&& fn) {
  return std::visit(
      [&](const auto& alg) -> Report {
        using T = std::decay_t<decltype(alg)>;
        if constexpr (!is_lie_v<T>) return fn(alg);
        else throw ParseError("this command needs an associative algebra; the file holds a Lie algebra");
      },
      a);
}

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  if (std::strspn(v, "0123456789") != std::strlen(v) || std::strlen(v) > 18)
    throw ParseError(std::string(name) + " must be a nonnegative integer");
  return std::stoull(v);
}

template <class S>
QuaternionAlgebra<S> as_quaternion(const AssocAlgebra<S>& A) {
  if (A.dim() != 4) throw ParseError("expected a quaternion algebra with basis 1, i, j, k");
  const auto& F = A.field();
  if (!equal<S>(A.unit(), unit_vector(F, 4, 0))) throw ParseError("quaternion basis must start with the unit");
  const S a = A.product_basis(1, 1)(0), b = A.product_basis(2, 2)(0);
  if (a.is_zero() || b.is_zero()) throw ParseError("i^2 and j^2 must be nonzero scalars");
  QuaternionAlgebra<S> Q = quaternion(F, a, b);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!equal<S>(Q.algebra.product_basis(i, j), A.product_basis(i, j)))
        throw ParseError("table is not the quaternion algebra (" + a.to_string() + ", " + b.to_string() + ")");
  return Q;
}

json opt(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

json structure_json(const StructureReport& r) {
  return json{{"abelian", r.abelian},
              {"nilpotent", r.nilpotent},
              {"solvable", r.solvable},
              {"nilpotency_class", opt(r.nilpotency_class)},
              {"derived_length", opt(r.derived_length)},
              {"center_dim", r.center_dim},
              {"commutant_dim", r.commutant_dim},
              {"radical_dim", opt(r.radical_dim)},
              {"semisimple", r.semisimple ? json(*r.semisimple) : json(nullptr)},
              {"killing_rank", r.killing_rank}};
}

// BudgetExceeded inside a sub-report becomes an Inconclusive entry
template <class S, class Fn>
json verdict_or_budget(Fn&& fn) {
  try {
    return verdict_json<S>(fn());
  } catch (const BudgetExceeded& e) {
    return verdict_json<S>(Verdict<S>::inconclusive(e.what()));
  }
}

template <class Fn>
json count_or_budget(Fn&& fn) {
  try {
    return json(fn());
  } catch (const BudgetExceeded&) {
    return json(nullptr);
  }
}

template <class S>
Report analyze(const Algebra& a, const LieAlgebra<S>& L, const Budget& b) {
  json body;
  body["hash"] = table_hash(a);
  body["field"] = L.field().name();
  body["dim"] = L.dim();
  body["structure"] = structure_json(structure_report(L));
  try {
    body["rank"] = rank_json(rank_info(L, b));
  } catch (const BudgetExceeded&) {
    body["rank"] = nullptr;
  }
  body["regular"] = verdict_or_budget<S>([&] { return is_regular_algebra(L, Mode::Certificate, b); });
  body["anisotropic"] = verdict_or_budget<S>([&] { return is_anisotropic(L, Mode::Certificate, b); });
  body["centroid_dim"] = centroid(L).size();
  body["h2_dim"] = h2_trivial(L).dim;
  body["derivation_dim"] = count_or_budget([&] { return derivation_algebra(L, b).maps.size(); });
  return {body, kOk};
}

// ---- human output -------------------------------------------------------------

bool scalar_array(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  if (j.is_boolean()) return j.get<bool>() ? "yes" : "no";
  if (scalar_array(j)) {
    std::string s = "(";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar_text(j[i]);
    return s + ")";
  }
  return j.dump();
}

void print_human(const json& j, const std::string& indent, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !scalar_array(v) && !v.empty()) {
        os << indent << k << ":\n";
        print_human(v, indent + "  ", os);
      } else {
        os << indent << k << ": " << scalar_text(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (j[i].is_structured() && !scalar_array(j[i])) {
        os << indent << "[" << i << "]\n";
        print_human(j[i], indent + "  ", os);
      } else {
        os << indent << scalar_text(j[i]) << "\n";
      }
    }
  } else {
    os << indent << scalar_text(j) << "\n";
  }
}

void print_suite(const SuiteResult& r, std::ostream& os) {
  for (const auto& c : r.checks) {
    os << std::left << std::setw(5) << to_string(c.status) << " " << std::setw(40) << c.name << " " << std::right
       << std::fixed << std::setprecision(3) << std::setw(8) << c.seconds << "s";
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
  }
  os << r.count(CheckStatus::Pass) << " pass, " << r.count(CheckStatus::Fail) << " fail, " << r.count(CheckStatus::Skip)
     << " skip\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic laboratory for finite-dimensional Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  bool human = false;
  std::uint64_t seed = Budget{}.seed;
  app.add_flag("--human", human, "Readable tables instead of JSON");
  app.add_option("--seed", seed, "Seed for randomized searches");

  std::string file, mode_name = "certificate", form, target, property, field_name = "Q", out_path, name;
  std::vector<std::string> elements;
  std::vector<long> params;
  int enum_dim = 2;
  bool list_tables = false;

  auto with_file = [&](CLI::App* sub) { sub->add_option("file", file, "Algebra JSON file")->required(); };
  auto with_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", mode_name, "exhaustive, search or certificate")->capture_default_str();
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check the Jacobi (or associativity) identity");
  with_file(validate_cmd);
  auto* analyze_cmd = app.add_subcommand("analyze", "Structure, rank, regularity and cohomology summary");
  with_file(analyze_cmd);
  auto* rank_cmd = app.add_subcommand("rank", "Rank of the algebra");
  with_file(rank_cmd);
  auto* regular_cmd = app.add_subcommand("regular", "Decide whether every nonzero element is regular");
  with_file(regular_cmd);
  with_mode(regular_cmd);
  auto* fitting_cmd = app.add_subcommand("fitting", "Fitting decomposition for almost commuting elements");
  with_file(fitting_cmd);
  fitting_cmd->add_option("--element", elements, "Comma separated coordinates; repeat for several")->required();
  auto* aniso_cmd = app.add_subcommand("anisotropic", "Decide whether every ad x is semisimple");
  with_file(aniso_cmd);
  with_mode(aniso_cmd);
  auto* nilfree_cmd = app.add_subcommand("nilpotent-free", "Decide whether ad-nilpotent elements are central");
  with_file(nilfree_cmd);
  with_mode(nilfree_cmd);
  auto* comm_cmd = app.add_subcommand("commutator", "Write a target element as a commutator");
  with_file(comm_cmd);
  comm_cmd->add_option("--target", target, "Comma separated coordinates")->required();
  comm_cmd->add_option("--form", form, "killing: rank-one solver with the Killing form")
      ->check(CLI::IsMember({"killing"}));
  auto* der_cmd = app.add_subcommand("derivations", "Derivation algebra");
  with_file(der_cmd);
  auto* centroid_cmd = app.add_subcommand("centroid", "Centroid");
  with_file(centroid_cmd);
  auto* h2_cmd = app.add_subcommand("h2", "Second cohomology with trivial coefficients");
  with_file(h2_cmd);
  auto* simple_cmd = app.add_subcommand("simple", "Decide simplicity");
  with_file(simple_cmd);
  auto* minnon_cmd = app.add_subcommand("minimal-non", "Minimal non-P check over a finite field");
  with_file(minnon_cmd);
  minnon_cmd->add_option("--property", property, "abelian, nilpotent or regular")->required();
  auto* division_cmd = app.add_subcommand("division", "Decide whether a quaternion algebra is a division algebra");
  with_file(division_cmd);
  with_mode(division_cmd);

  auto* catalog_cmd = app.add_subcommand("catalog", "Built-in algebras");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "List catalog names");
  auto* emit_cmd = catalog_cmd->add_subcommand("emit", "Write a catalog algebra as JSON");
  emit_cmd->add_option("name", name, "Catalog name")->required();
  emit_cmd->add_option("params", params, "Integer parameters");
  emit_cmd->add_option("--field", field_name, "Q or F<p>")->capture_default_str();
  emit_cmd->add_option("-o,--output", out_path, "Write to this file instead of standard output");

  auto* enum_cmd = app.add_subcommand("enumerate", "Every Lie table of a small dimension over F_p");
  enum_cmd->add_option("--dim", enum_dim, "Dimension (1 to 3)")->required();
  enum_cmd->add_option("--field", field_name, "F<p>")->required();
  enum_cmd->add_flag("--tables", list_tables, "Include every valid table in the report");

  auto* verify_cmd = app.add_subcommand("verify", "Run the instance checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInput;
  }

  try {
    Budget budget;
    budget.seed = seed;
    budget.search_height = static_cast<int>(env_u64("LIELAB_SEARCH_HEIGHT", static_cast<std::uint64_t>(budget.search_height)));
    budget.trials = env_u64("LIELAB_TRIALS", budget.trials);
    const Mode mode = parse_mode(mode_name);

    Report report;
    auto load = [&] { return parse_algebra_file(file); };

    if (app.got_subcommand(validate_cmd)) {
      try {
        const Algebra a = load();
        report.body = {{"valid", true}, {"hash", table_hash(a)}, {"violations", json::array()}};
      } catch (const ValidationError& e) {
        json v = json::array();
        for (const auto& x : e.violations) v.push_back({{"i", x.i}, {"j", x.j}, {"k", x.k}, {"identity", x.what}});
        report = {{{"valid", false}, {"detail", e.what()}, {"violations", v}}, kRefuted};
      }
    } else if (app.got_subcommand(analyze_cmd)) {
      const Algebra a = load();
      report = on_lie(a, [&](const auto& L) { return analyze(a, L, budget); });
    } else if (app.got_subcommand(rank_cmd)) {
      report = on_lie(load(), [&](const auto& L) {
        const RankInfo r = rank_info(L, budget);
        return Report{rank_json(r), r.certified ? kOk : kInconclusive};
      });
    } else if (app.got_subcommand(regular_cmd)) {
      report = on_lie(load(), [&](const auto& L) {
        const auto v = is_regular_algebra(L, mode, budget);
        return Report{verdict_json(v), code_of(v.status)};
      });
    } else if (app.got_subcommand(fitting_cmd)) {
      report = on_lie(load(), [&](const auto& L) {
        using S = std::decay_t<decltype(L.field().zero())>;
        std::vector<Vector<S>> X;
        for (const auto& e : elements) X.push_back(parse_vector(L.field(), e, L.dim()));
        const auto fd = fitting_set(L, X);
        return Report{json{{"L0", subspace_json(fd.L0)}, {"L1", subspace_json(fd.L1)}}, kOk};
      });
    } else if (app.got_subcommand(aniso_cmd)) {
      report = on_lie(load(), [&](const auto& L) {
        const auto v = is_anisotropic(L, mode, budget);
        return Report{verdict_json(v), code_of(v.status)};
      });
    } else if (app.got_subcommand(nilfree_cmd)) {
      report = on_lie(load(), [&](const auto& L) {
        const auto v = is_nilpotent_free(L, mode, budget);
        return Report{verdict_json(v), code_of(v.status)};
      });
    } else if (app.got_subcommand(comm_cmd)) {
      const Algebra a = load();
      if (std::holds_alternative<AssocAlgebra<Rational>>(a) || std::holds_alternative<AssocAlgebra<Zp>>(a)) {
        report = on_assoc(a, [&](const auto& A) {
          const auto Q = as_quaternion(A);
          const auto w = quaternion_commutator(Q, parse_vector(A.field(), target, 4), budget);
          return Report{json{{"x", vector_json(w.x)}, {"u", vector_json(w.u)}, {"v", vector_json(w.v)},
                             {"identity", "u v - v u = x"}},
                        kOk};
        });
      } else {
        report = on_lie(a, [&](const auto& L) {
          const auto x = parse_vector(L.field(), target, L.dim());
          if (form == "killing") {
            const auto w = rank1_commutator(L, killing_form(L), x, budget);
            return Report{json{{"target", vector_json(w.target)}, {"z", vector_json(w.z)}, {"y", vector_json(w.y)},
                               {"source", to_string(w.source)}},
                          kOk};
          }
          const auto w = commutator_search(L, x, budget);
          if (!w) return Report{json{{"target", vector_json(x)}, {"found", false}}, kInconclusive};
          return Report{json{{"target", vector_json(w->target)}, {"z", vector_json(w->z)}, {"y", vector_json(w->y)},
                             {"source", to_string(w->source)}, {"found", true}},
                        kOk};
        });
      }
    } else if (app.got_subcommand(der_cmd)) {
      report = on_lie(load(), [&](const auto& L) {
        const auto d = derivation_algebra(L, budget);
        json maps = json::array();
        for (const auto& m : d.maps) maps.push_back(matrix_json(m));
        return Report{json{{"dim", d.maps.size()}, {"basis", maps}}, kOk};
      });
    } else if (app.got_subcommand(centroid_cmd)) {
      report = on_lie(load(), [&](const auto& L) {
        const auto c = centroid(L);
        json maps = json::array();
        for (const auto& m : c) maps.push_back(matrix_json(m));
        return Report{json{{"dim", c.size()}, {"basis", maps}}, kOk};
      });
    } else if (app.got_subcommand(h2_cmd)) {
      report = on_lie(load(), [&](const auto& L) {
        const auto h = h2_trivial(L);
        json reps = json::array();
        for (const auto& m : h.representatives) reps.push_back(matrix_json(m));
        return Report{json{{"dim", h.dim}, {"cocycles", h.cocycles}, {"coboundaries", h.coboundaries},
                           {"representatives", reps}},
                      kOk};
      });
    } else if (app.got_subcommand(simple_cmd)) {
      report = on_lie(load(), [&](const auto& L) {
        const auto v = is_simple(L, budget);
        return Report{verdict_json(v), code_of(v.status)};
      });
    } else if (app.got_subcommand(minnon_cmd)) {
      const MinProperty p = parse_min_property(property);
      report = on_lie(load(), [&](const auto& L) {
        const auto v = is_minimal_non(p, L, budget);
        return Report{verdict_json(v), code_of(v.status)};
      });
    } else if (app.got_subcommand(division_cmd)) {
      report = on_assoc(load(), [&](const auto& A) {
        const auto v = is_division(as_quaternion(A), mode, budget);
        return Report{verdict_json(v), code_of(v.status)};
      });
    } else if (app.got_subcommand(catalog_cmd)) {
      if (catalog_cmd->got_subcommand(list_cmd)) {
        json entries = json::array();
        for (const auto& e : catalog_entries())
          entries.push_back({{"name", e.name}, {"params", e.params}, {"fields", e.fields}, {"description", e.description}});
        report.body = entries;
      } else {
        const FieldSpec fs = FieldSpec::parse(field_name);
        json alg = fs.kind == FieldKind::Q
                       ? std::visit([](const auto& x) { return to_json(x); }, make(Q{}, name, params))
                       : std::visit([](const auto& x) { return to_json(x); }, make(Fp(fs.p), name, params));
        if (!out_path.empty()) {
          std::ofstream out(out_path);
          if (!out) throw ParseError("cannot write " + out_path);
          out << canonical(alg);
          report.body = {{"written", out_path}, {"hash", table_hash(parse_algebra(alg))}};
        } else {
          report.body = alg;
        }
      }
    } else if (app.got_subcommand(enum_cmd)) {
      const FieldSpec fs = FieldSpec::parse(field_name);
      if (fs.kind == FieldKind::Q) throw ParseError("enumerate needs a finite field");
      Budget eb = budget;
      eb.exhaustive_cap = env_u64("LIELAB_ENUM_CAP", budget.exhaustive_cap);
      const Fp F(fs.p);
      std::uint64_t regular = 0, nilpotent = 0, agree = 0;
      json tables = json::array();
      const EnumStats st = enumerate_tables(F, enum_dim, [&](const EnumTable& t, const LieAlgebra<Zp>& L) {
        const bool nil = structure_report(L).nilpotent;
        const int r = rank(L, eb);
        const bool reg = is_regular_algebra(L, Mode::Exhaustive, eb).certified();
        regular += reg;
        nilpotent += nil;
        agree += (r == L.dim()) == nil;
        if (list_tables)
          tables.push_back({{"coeffs", t.coeffs}, {"rank", r}, {"nilpotent", nil}, {"regular", reg}});
      }, eb);
      report.body = {{"field", F.name()},       {"dim", enum_dim},      {"generated", st.generated},
                     {"valid", st.valid},       {"regular", regular},   {"nilpotent", nilpotent},
                     {"rank_equals_dim_iff_nilpotent", agree == st.valid}};
      if (list_tables) report.body["tables"] = tables;
    } else if (app.got_subcommand(verify_cmd)) {
      const SuiteResult r = run_verify(budget);
      if (human) {
        print_suite(r, std::cout);
        return r.all_pass() ? kOk : kRefuted;
      }
      report = {suite_json(r), r.all_pass() ? kOk : kRefuted};
    }

    if (human) print_human(report.body, "", std::cout);
    else std::cout << canonical(report.body);
    return report.code;
  } catch (const ValidationError& e) {
    std::cerr << "invalid algebra: " << e.what() << "\n";
    for (const auto& v : e.violations) std::cerr << "  (" << v.i << ", " << v.j << ", " << v.k << "): " << v.what << "\n";
    return kInput;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kInconclusive;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
