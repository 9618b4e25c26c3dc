#include "lielab/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace lielab {

FieldSpec FieldSpec::parse(const std::string& s) {
  if (s == "Q" || s == "q") return {FieldKind::Q, 0};
  std::string digits = s;
  if (digits.rfind("Fp:", 0) == 0) digits = digits.substr(3);
  else if (!digits.empty() && (digits[0] == 'F' || digits[0] == 'f')) digits = digits.substr(1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10)
    throw ParseError("unknown field '" + s + "' (expected Q or F<p>)");
  const unsigned long long p = std::stoull(digits);
  if (p >= (1ull << 31) || !is_prime(p)) throw ParseError("field size " + digits + " is not a prime below 2^31");
  return {FieldKind::Fp, static_cast<std::uint32_t>(p)};
}

template <class S>
json to_json(const Field<S>& F) {
  if constexpr (Field<S>::kind == FieldKind::Q) return json{{"kind", "Q"}};
  else return json{{"kind", "Fp"}, {"p", F.size()}};
}

namespace {

template <class S>
json coeffs_json(const Vector<S>& v) {
  json c = json::object();
  for (Eigen::Index k = 0; k < v.size(); ++k)
    if (!v(k).is_zero()) c[std::to_string(k)] = v(k).to_string();
  return c;
}

}  // namespace

template <class S>
json vector_json(const Vector<S>& v) {
  json a = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) a.push_back(v(k).to_string());
  return a;
}

template <class S>
json matrix_json(const Matrix<S>& m) {
  json a = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) a.push_back(vector_json<S>(m.row(r).transpose()));
  return a;
}

template <class S>
json subspace_json(const Subspace<S>& s) {
  json a = json::array();
  for (int i = 0; i < s.dim(); ++i) a.push_back(vector_json(s.basis_vector(i)));
  return json{{"dim", s.dim()}, {"basis", a}};
}

template <class S>
json verdict_json(const Verdict<S>& v) {
  json w = json::array();
  for (const auto& x : v.witness) w.push_back(vector_json(x));
  return json{{"status", to_string(v.status)},
              {"proof", to_string(v.proof)},
              {"witness", w},
              {"detail", v.detail},
              {"evidence", {{"checked", v.evidence.checked}, {"height", v.evidence.height}, {"trials", v.evidence.trials}}}};
}

json rank_json(const RankInfo& r) {
  return json{{"rank", r.value}, {"method", to_string(r.method)}, {"certified", r.certified}};
}

template <class S>
json to_json(const LieAlgebra<S>& L) {
  json br = json::array();
  for (const auto& b : L.brackets()) {
    json c = json::object();
    for (const auto& [k, v] : b.coeffs) c[std::to_string(k)] = v.to_string();
    br.push_back({{"i", b.i}, {"j", b.j}, {"coeffs", c}});
  }
  return json{{"field", to_json(L.field())}, {"dim", L.dim()}, {"basis", L.labels()}, {"brackets", br}};
}

template <class S>
json to_json(const AssocAlgebra<S>& A) {
  json pr = json::array();
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) {
      const Vector<S>& v = A.product_basis(i, j);
      if (!is_zero<S>(v)) pr.push_back({{"i", i}, {"j", j}, {"coeffs", coeffs_json(v)}});
    }
  return json{{"field", to_json(A.field())},
              {"dim", A.dim()},
              {"basis", A.labels()},
              {"products", pr},
              {"unit", vector_json(A.unit())}};
}

json to_json(const Algebra& a) {
  return std::visit([](const auto& x) { return to_json(x); }, a);
}

std::string canonical(const json& j) { return j.dump(2) + "\n"; }

std::string table_hash(const Algebra& a) {
  const std::string s = to_json(a).dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

const json& field_of(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

int int_of(const json& j, const char* key, const std::string& where) {
  const json& v = field_of(j, key, where);
  if (!v.is_number_integer()) throw ParseError(where + ": \"" + key + "\" must be an integer");
  return v.get<int>();
}

template <class S>
S scalar_of(const Field<S>& F, const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + ": scalars must be strings");
  try {
    return F.parse(v.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
}

template <class S>
SparseVec<S> coeffs_of(const Field<S>& F, const json& c, int dim, const std::string& where) {
  if (!c.is_object()) throw ParseError(where + ": \"coeffs\" must be an object");
  SparseVec<S> out;
  for (const auto& [key, val] : c.items()) {
    if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos || key.size() > 6)
      throw ParseError(where + ": coefficient key \"" + key + "\" is not a basis index");
    const int k = std::stoi(key);
    if (k >= dim) throw ParseError(where + ": coefficient index " + key + " out of range");
    const S s = scalar_of(F, val, where + ".coeffs." + key);
    if (!s.is_zero()) out.push_back({k, s});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

struct Header {
  int dim;
  std::vector<std::string> labels;
};

Header header_of(const json& j) {
  const int dim = int_of(j, "dim", "algebra");
  if (dim < 0) throw ParseError("algebra: negative dimension");
  const json& b = field_of(j, "basis", "algebra");
  if (!b.is_array()) throw ParseError("algebra: \"basis\" must be an array of strings");
  std::vector<std::string> labels;
  for (const auto& x : b) {
    if (!x.is_string()) throw ParseError("algebra: basis labels must be strings");
    labels.push_back(x.get<std::string>());
  }
  if (static_cast<int>(labels.size()) != dim)
    throw ParseError("algebra: \"dim\" is " + std::to_string(dim) + " but " + std::to_string(labels.size()) +
                     " basis labels are given");
  return {dim, labels};
}

template <class S>
LieAlgebra<S> lie_of(const Field<S>& F, const json& j, bool check) {
  const Header h = header_of(j);
  const json& br = field_of(j, "brackets", "algebra");
  if (!br.is_array()) throw ParseError("algebra: \"brackets\" must be an array");
  std::vector<typename LieAlgebra<S>::Bracket> table;
  std::map<std::pair<int, int>, std::size_t> seen;
  for (std::size_t t = 0; t < br.size(); ++t) {
    const std::string where = "brackets[" + std::to_string(t) + "]";
    const int i = int_of(br[t], "i", where), jj = int_of(br[t], "j", where);
    if (i < 0 || jj >= h.dim) throw ParseError(where + ": index out of range");
    if (i >= jj)
      throw ParseError(where + ": entry (i=" + std::to_string(i) + ", j=" + std::to_string(jj) + ") must have i < j");
    if (seen.count({i, jj})) throw ParseError(where + ": duplicate entry for (" + std::to_string(i) + ", " + std::to_string(jj) + ")");
    seen[{i, jj}] = t;
    auto c = coeffs_of(F, field_of(br[t], "coeffs", where), h.dim, where);
    if (!c.empty()) table.push_back({i, jj, std::move(c)});
  }
  if (check) return LieAlgebra<S>(F, h.labels, std::move(table));
  return LieAlgebra<S>::unchecked(F, h.labels, std::move(table));
}

template <class S>
AssocAlgebra<S> assoc_of(const Field<S>& F, const json& j) {
  const Header h = header_of(j);
  const json& pr = field_of(j, "products", "algebra");
  if (!pr.is_array()) throw ParseError("algebra: \"products\" must be an array");
  std::vector<Vector<S>> prod(static_cast<std::size_t>(h.dim * h.dim), zero_vector(F, h.dim));
  std::vector<bool> seen(prod.size(), false);
  for (std::size_t t = 0; t < pr.size(); ++t) {
    const std::string where = "products[" + std::to_string(t) + "]";
    const int i = int_of(pr[t], "i", where), jj = int_of(pr[t], "j", where);
    if (i < 0 || jj < 0 || i >= h.dim || jj >= h.dim) throw ParseError(where + ": index out of range");
    if (seen[i * h.dim + jj]) throw ParseError(where + ": duplicate entry");
    seen[i * h.dim + jj] = true;
    for (const auto& [k, s] : coeffs_of(F, field_of(pr[t], "coeffs", where), h.dim, where)) prod[i * h.dim + jj](k) = s;
  }
  const json& u = field_of(j, "unit", "algebra");
  if (!u.is_array() || static_cast<int>(u.size()) != h.dim) throw ParseError("algebra: \"unit\" must list dim scalars");
  Vector<S> unit(h.dim);
  for (int k = 0; k < h.dim; ++k) unit(k) = scalar_of(F, u[k], "unit");
  return AssocAlgebra<S>(F, h.labels, std::move(prod), std::move(unit));
}

Algebra parse_impl(const json& j, bool check) {
  if (!j.is_object()) throw ParseError("algebra: top level must be an object");
  const json& f = field_of(j, "field", "algebra");
  const std::string kind = field_of(f, "kind", "field").is_string() ? f.at("kind").get<std::string>() : "";
  const bool assoc = j.contains("products");
  if (kind == "Q") {
    const Q F;
    if (assoc) return assoc_of(F, j);
    return lie_of(F, j, check);
  }
  if (kind == "Fp") {
    const int p = int_of(f, "p", "field");
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw ParseError("field: p = " + std::to_string(p) + " is not prime");
    const Fp F(static_cast<std::uint32_t>(p));
    if (assoc) return assoc_of(F, j);
    return lie_of(F, j, check);
  }
  throw ParseError("field: kind must be \"Q\" or \"Fp\"");
}

}  // namespace

Algebra parse_algebra(const json& j) { return parse_impl(j, true); }
Algebra parse_algebra_unchecked(const json& j) { return parse_impl(j, false); }

Algebra parse_algebra_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return parse_algebra(j);
}

template <class S>
Vector<S> parse_vector(const Field<S>& F, const std::string& s, int expected) {
  std::vector<S> vals;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty coordinate in '" + s + "'");
    try {
      vals.push_back(F.parse(item.substr(b, e - b + 1)));
    } catch (const std::exception& ex) {
      throw ParseError("bad coordinate '" + item + "': " + ex.what());
    }
  }
  if (static_cast<int>(vals.size()) != expected)
    throw ParseError("vector '" + s + "' has " + std::to_string(vals.size()) + " coordinates, expected " +
                     std::to_string(expected));
  Vector<S> v(expected);
  for (int i = 0; i < expected; ++i) v(i) = vals[i];
  return v;
}

#define LIELAB_INSTANTIATE(S)                                              \
  template json to_json<S>(const Field<S>&);                               \
  template json to_json<S>(const LieAlgebra<S>&);                          \
  template json to_json<S>(const AssocAlgebra<S>&);                        \
  template json vector_json<S>(const Vector<S>&);                          \
  template json matrix_json<S>(const Matrix<S>&);                          \
  template json subspace_json<S>(const Subspace<S>&);                      \
  template json verdict_json<S>(const Verdict<S>&);                        \
  template Vector<S> parse_vector<S>(const Field<S>&, const std::string&, int);

LIELAB_INSTANTIATE(Rational)
LIELAB_INSTANTIATE(Zp)

#undef LIELAB_INSTANTIATE

}  // namespace lielab
