#ifndef ANOLIE_IO_HPP
#define ANOLIE_IO_HPP

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "anolie/certificate.hpp"
#include "anolie/lie_algebra.hpp"
#include "anolie/matrix.hpp"
#include "anolie/rational.hpp"

// File formats. All indices are 1-based; every rational is a string "n" or
// "p/q", never a JSON float. Object keys come out sorted, so serialization is
// byte-for-byte deterministic.
//
// Algebra:     {"name", "dim", "degrees"?, "brackets": [{"i", "j", "k", "c"}]}  (i < j)
// Matrix:      {"matrix": [["a11", ...], ...]}
// Certificate: {"algebra", "matrix", "char_poly" (constant first), "flags",
//               "expanding_dim", "contracting_dim", "classification_mode",
//               "parameters", "failure_witnesses"}

namespace anolie::io {

using Json = nlohmann::json;

namespace detail {

inline Rational rational_field(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError(where + ": expected a rational as a string like \"3/5\"");
}

inline long integer_field(const Json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw InputError(where + ": missing \"" + key + "\"");
  const Json& j = obj.at(key);
  if (!j.is_number_integer()) throw InputError(where + "." + key + ": expected an integer");
  return j.get<long>();
}

inline const Json& array_field(const Json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw InputError(where + ": missing \"" + key + "\"");
  const Json& j = obj.at(key);
  if (!j.is_array()) throw InputError(where + "." + key + ": expected an array");
  return j;
}

inline Json rational_row(const Vector<Rational>& v) {
  Json row = Json::array();
  for (const auto& q : v) row.push_back(to_string(q));
  return row;
}

}  // namespace detail

inline Json to_json(const RationalLieAlgebra& alg) {
  Json j;
  j["name"] = alg.name();
  j["dim"] = alg.dim();
  if (alg.degrees()) j["degrees"] = *alg.degrees();
  Json brackets = Json::array();
  for (const auto& sc : alg.constants())
    brackets.push_back({{"i", sc.i + 1}, {"j", sc.j + 1}, {"k", sc.k + 1}, {"c", to_string(sc.c)}});
  j["brackets"] = std::move(brackets);
  return j;
}

inline RationalLieAlgebra algebra_from_json(const Json& j, const std::string& where = "algebra") {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  const long dim = detail::integer_field(j, "dim", where);
  if (dim < 1) throw InputError(where + ".dim: must be positive");
  std::string name;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw InputError(where + ".name: expected a string");
    name = j.at("name").get<std::string>();
  }
  std::optional<std::vector<int>> degrees;
  if (j.contains("degrees") && !j.at("degrees").is_null()) {
    const Json& dj = detail::array_field(j, "degrees", where);
    if (static_cast<long>(dj.size()) != dim) throw InputError(where + ".degrees: length differs from dim");
    degrees.emplace();
    for (std::size_t n = 0; n < dj.size(); ++n) {
      if (!dj[n].is_number_integer() || dj[n].get<long>() < 1)
        throw InputError(where + ".degrees[" + std::to_string(n) + "]: expected an integer >= 1");
      degrees->push_back(dj[n].get<int>());
    }
  }
  std::vector<StructureConstant<Rational>> constants;
  const Json& bj = detail::array_field(j, "brackets", where);
  for (std::size_t n = 0; n < bj.size(); ++n) {
    const std::string at = where + ".brackets[" + std::to_string(n) + "]";
    if (!bj[n].is_object()) throw InputError(at + ": expected an object {i, j, k, c}");
    const long i = detail::integer_field(bj[n], "i", at);
    const long jj = detail::integer_field(bj[n], "j", at);
    const long k = detail::integer_field(bj[n], "k", at);
    for (long idx : {i, jj, k})
      if (idx < 1 || idx > dim) throw InputError(at + ": index " + std::to_string(idx) + " outside 1.." + std::to_string(dim));
    if (i >= jj) throw InputError(at + ": need i < j");
    if (!bj[n].contains("c")) throw InputError(at + ": missing \"c\"");
    constants.push_back({static_cast<std::size_t>(i - 1), static_cast<std::size_t>(jj - 1), static_cast<std::size_t>(k - 1),
                         detail::rational_field(bj[n].at("c"), at + ".c")});
  }
  return RationalLieAlgebra(static_cast<std::size_t>(dim), constants, std::move(degrees), std::move(name));
}

inline Json to_json(const Matrix<Rational>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Accepts either a bare array of rows or {"matrix": rows}. Must be square.
inline Matrix<Rational> matrix_from_json(const Json& j, const std::string& where = "matrix") {
  const Json& rows = j.is_object() ? detail::array_field(j, "matrix", where) : j;
  if (!rows.is_array() || rows.empty()) throw InputError(where + ": expected a nonempty array of rows");
  const std::size_t n = rows.size();
  Matrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != n) throw InputError(at + ": expected a row of length " + std::to_string(n));
    for (std::size_t c = 0; c < n; ++c) m(i, c) = detail::rational_field(rows[i][c], at + "[" + std::to_string(c) + "]");
  }
  return m;
}

inline Json to_json(const AnosovCertificate& cert) {
  Json j;
  j["algebra"] = to_json(cert.algebra);
  j["matrix"] = to_json(cert.matrix);
  j["char_poly"] = detail::rational_row(cert.char_poly.coefficients());
  j["flags"] = {{"automorphism", cert.automorphism}, {"integral", cert.integral}, {"unimodular", cert.unimodular},
                {"hyperbolic", cert.hyperbolic},     {"anosov", cert.anosov}};
  if (cert.splitting) {
    j["expanding_dim"] = cert.splitting->expanding;
    j["contracting_dim"] = cert.splitting->contracting;
    j["classification_mode"] = to_string(cert.splitting->mode);
  } else {
    j["expanding_dim"] = nullptr;
    j["contracting_dim"] = nullptr;
    j["classification_mode"] = nullptr;
  }
  Json params;
  params["construction"] = cert.parameters.construction;
  params["a"] = cert.parameters.a ? Json(*cert.parameters.a) : Json(nullptr);
  params["catalog_name"] = cert.parameters.catalog_name;
  if (!cert.parameters.degree_grouped_order.empty()) {
    Json order = Json::array();
    for (auto m : cert.parameters.degree_grouped_order) order.push_back(m + 1);
    params["degree_grouped_order"] = std::move(order);
  }
  j["parameters"] = std::move(params);
  Json witnesses = Json::array();
  for (const auto& w : cert.failure_witnesses) witnesses.push_back({{"kind", w.kind}, {"detail", w.detail}});
  j["failure_witnesses"] = std::move(witnesses);
  return j;
}

/// Reads the stored certificate verbatim (no checks are re-run).
inline AnosovCertificate certificate_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("certificate: expected an object");
  AnosovCertificate cert;
  if (!j.contains("algebra")) throw InputError("certificate: missing \"algebra\"");
  cert.algebra = algebra_from_json(j.at("algebra"), "certificate.algebra");
  if (!j.contains("matrix")) throw InputError("certificate: missing \"matrix\"");
  cert.matrix = matrix_from_json(j.at("matrix"), "certificate.matrix");
  std::vector<Rational> cp;
  const Json& cj = detail::array_field(j, "char_poly", "certificate");
  for (std::size_t n = 0; n < cj.size(); ++n) cp.push_back(detail::rational_field(cj[n], "certificate.char_poly[" + std::to_string(n) + "]"));
  cert.char_poly = RatPolynomial(std::move(cp));
  if (!j.contains("flags") || !j.at("flags").is_object()) throw InputError("certificate: missing \"flags\" object");
  const Json& f = j.at("flags");
  const auto flag = [&](const char* key) {
    if (!f.contains(key) || !f.at(key).is_boolean()) throw InputError(std::string("certificate.flags.") + key + ": expected a boolean");
    return f.at(key).get<bool>();
  };
  cert.automorphism = flag("automorphism");
  cert.integral = flag("integral");
  cert.unimodular = flag("unimodular");
  cert.hyperbolic = flag("hyperbolic");
  cert.anosov = flag("anosov");
  if (j.contains("classification_mode") && j.at("classification_mode").is_string()) {
    Splitting s;
    s.expanding = detail::integer_field(j, "expanding_dim", "certificate");
    s.contracting = detail::integer_field(j, "contracting_dim", "certificate");
    const auto mode = j.at("classification_mode").get<std::string>();
    if (mode == "exact") s.mode = ClassificationMode::exact;
    else if (mode == "numeric-fallback") s.mode = ClassificationMode::numeric_fallback;
    else throw InputError("certificate.classification_mode: unknown mode \"" + mode + "\"");
    cert.splitting = s;
  }
  if (j.contains("parameters") && j.at("parameters").is_object()) {
    const Json& p = j.at("parameters");
    if (p.contains("construction") && p.at("construction").is_string()) cert.parameters.construction = p.at("construction").get<std::string>();
    if (p.contains("a") && p.at("a").is_number_integer()) cert.parameters.a = p.at("a").get<long>();
    if (p.contains("catalog_name") && p.at("catalog_name").is_string()) cert.parameters.catalog_name = p.at("catalog_name").get<std::string>();
    if (p.contains("degree_grouped_order")) {
      for (const auto& m : detail::array_field(p, "degree_grouped_order", "certificate.parameters")) {
        if (!m.is_number_integer() || m.get<long>() < 1) throw InputError("certificate.parameters.degree_grouped_order: bad index");
        cert.parameters.degree_grouped_order.push_back(m.get<std::size_t>() - 1);
      }
    }
  }
  if (j.contains("failure_witnesses")) {
    for (const auto& w : detail::array_field(j, "failure_witnesses", "certificate")) {
      if (!w.is_object() || !w.contains("kind") || !w.contains("detail")) throw InputError("certificate.failure_witnesses: bad entry");
      cert.failure_witnesses.push_back({w.at("kind").get<std::string>(), w.at("detail").get<std::string>()});
      if (cert.failure_witnesses.back().kind == "classification" && cert.splitting) cert.splitting->consistent = false;
    }
  }
  return cert;
}

/// Canonical text: two-space indent, sorted keys, trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

/// Parses JSON text; syntax errors become InputError carrying `source` and the
/// parser's position.
inline Json parse_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(source + ": " + e.what());
  }
}

inline Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path.string());
}

/// Writes via a temporary file in the same directory and renames it into place.
inline void write_atomic(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(tmp.string() + ": cannot open for writing");
    out << contents;
    if (!out.flush()) throw std::runtime_error(tmp.string() + ": write failed");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace anolie::io

#endif  // ANOLIE_IO_HPP
