#ifndef ANOLIE_CLI_HPP
#define ANOLIE_CLI_HPP

#include <CLI11.hpp>

#include <filesystem>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "anolie/catalog.hpp"
#include "anolie/certificate.hpp"
#include "anolie/doubling.hpp"
#include "anolie/io.hpp"
#include "anolie/lie_algebra.hpp"

// Command-line front end. Exit codes: 0 success (or anosov), 1 semantic
// failure, 2 input error.

namespace anolie::cli {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInputError = 2;

namespace detail {

namespace fs = std::filesystem;
using io::Json;

inline std::string index_list(const std::vector<std::size_t>& idx) {
  std::string s;
  for (auto i : idx) s += (s.empty() ? "" : ",") + std::to_string(i + 1);
  return s;
}

inline std::string dims_text(const std::vector<std::size_t>& dims) {
  std::string s;
  for (auto d : dims) s += (s.empty() ? "" : " ") + std::to_string(d);
  return s;
}

struct ValidationReport {
  Json json;
  std::vector<std::string> lines;
  bool pass = true;
};

inline ValidationReport validate(const RationalLieAlgebra& alg) {
  ValidationReport r;
  Json& j = r.json;
  j["name"] = alg.name();
  j["dim"] = alg.dim();
  r.lines.push_back("algebra: " + (alg.name().empty() ? std::string("(unnamed)") : alg.name()) + ", dim " +
                    std::to_string(alg.dim()));

  if (auto bad = jacobi_check(alg)) {
    r.pass = false;
    j["jacobi"] = {{"pass", false},
                   {"triple", {bad->i + 1, bad->j + 1, bad->k + 1}},
                   {"residual", io::detail::rational_row(bad->residual)}};
    r.lines.push_back("jacobi: FAIL at (" + index_list({bad->i, bad->j, bad->k}) +
                      "), residual " + anolie::detail::format_vector(bad->residual));
    r.lines.push_back("result: FAIL (not a Lie algebra)");
    return r;
  }
  j["jacobi"] = {{"pass", true}};
  r.lines.push_back("jacobi: pass");

  std::string summary;
  if (alg.degrees()) {
    if (auto bad = grading_check(alg)) {
      r.pass = false;
      j["grading"] = {{"pass", false}, {"triple", {bad->i + 1, bad->j + 1, bad->k + 1}}};
      r.lines.push_back("grading: FAIL at (" + index_list({bad->i, bad->j, bad->k}) + "): [e" + std::to_string(bad->i + 1) +
                        ", e" + std::to_string(bad->j + 1) + "] has a component on e" + std::to_string(bad->k + 1) +
                        " but deg " + std::to_string((*alg.degrees())[bad->k]) + " != " +
                        std::to_string((*alg.degrees())[bad->i]) + " + " + std::to_string((*alg.degrees())[bad->j]));
    } else {
      j["grading"] = {{"pass", true}};
      r.lines.push_back("grading: pass");
    }
  } else {
    j["grading"] = nullptr;
    r.lines.push_back("grading: none given");
  }

  const auto series = lower_central_series(alg);
  j["lower_central_series"] = series.dims;
  j["nilpotent"] = series.nilpotent;
  if (series.nilpotent) {
    j["step"] = series.step();
    r.lines.push_back("lower central series: " + dims_text(series.dims) + " (nilpotent, step " + std::to_string(series.step()) + ")");
    summary = "step " + std::to_string(series.step());
  } else {
    r.pass = false;
    j["step"] = nullptr;
    r.lines.push_back("lower central series: " + dims_text(series.dims) + " (not nilpotent)");
    summary = "not nilpotent";
  }
  if (alg.degrees()) summary += j["grading"]["pass"].get<bool>() ? ", graded" : ", grading invalid";
  else summary += ", ungraded";

  if (series.nilpotent) {
    const auto factor = has_abelian_factor(alg);
    j["abelian_factor"] = factor.present;
    if (factor.present) {
      j["abelian_factor_witness"] = io::detail::rational_row(*factor.witness);
      r.lines.push_back("abelian factor: yes, central vector outside [n,n]: " + anolie::detail::format_vector(*factor.witness));
      summary += ", has abelian factor";
    } else {
      r.lines.push_back("abelian factor: none");
      summary += ", no abelian factor";
    }
  }

  const auto lint = min_dimension_lint(alg);
  j["lint"] = lint.warning ? Json(lint.message) : Json(nullptr);
  if (lint.warning) r.lines.push_back("lint: warning: " + lint.message);

  j["pass"] = r.pass;
  r.lines.push_back(std::string("result: ") + (r.pass ? "pass" : "FAIL") + " (" + summary + ")");
  return r;
}

inline std::string cert_summary(const AnosovCertificate& c) {
  std::ostringstream s;
  s << "dim " << c.algebra.dim() << ": automorphism=" << c.automorphism << " integral=" << c.integral
    << " unimodular=" << c.unimodular << " hyperbolic=" << c.hyperbolic << " anosov=" << c.anosov;
  if (c.splitting)
    s << " expanding=" << c.splitting->expanding << " contracting=" << c.splitting->contracting
      << " mode=" << to_string(c.splitting->mode);
  return s.str();
}

/// Doubling followed by certification, with the two quadratic-field
/// cross-checks recorded as failure witnesses should they ever disagree.
inline AnosovCertificate double_and_certify(const RationalLieAlgebra& alg, long a) {
  const auto result = double_construction(alg, a);
  Provenance prov{"doubling", a, alg.name(), result.degree_grouped_order};
  auto cert = certify(result.doubled, result.matrix, prov);
  if (!quadext_conjugation_check(result)) {
    cert.failure_witnesses.push_back({"automorphism", "matrix differs from P^-1 diag(lambda^deg) P"});
    cert.automorphism = cert.anosov = false;
  }
  if (!doubled_bracket_check(alg, result)) {
    cert.failure_witnesses.push_back({"automorphism", "doubled brackets differ from the change of basis of n+n"});
    cert.automorphism = cert.anosov = false;
  }
  return cert;
}

struct RecheckOutcome {
  bool consistent = true;
  std::vector<std::string> mismatches;
  AnosovCertificate recomputed;
};

/// Re-runs every check from the certificate's own algebra and matrix and
/// compares the result with what the file claims.
inline RecheckOutcome recheck(const Json& stored) {
  const auto claimed = io::certificate_from_json(stored);
  RecheckOutcome out;
  out.recomputed = certify(claimed.algebra, claimed.matrix, claimed.parameters);
  if (claimed.parameters.construction == "doubling") {
    // The matrix must be block diagonal with B^deg blocks on the degree pairs.
    bool ok = claimed.parameters.a && *claimed.parameters.a >= 2 && claimed.algebra.degrees() && claimed.algebra.dim() % 2 == 0;
    if (ok) {
      DoublingResult dr;
      dr.a = *claimed.parameters.a;
      dr.matrix = claimed.matrix;
      for (std::size_t i = 0; i < claimed.algebra.dim(); i += 2) dr.block_exponents.push_back((*claimed.algebra.degrees())[i]);
      std::vector<Matrix<Rational>> blocks;
      for (int d : dr.block_exponents) blocks.push_back(power(hyperbolic_block(dr.a), d));
      ok = block_diagonal(blocks) == claimed.matrix && quadext_conjugation_check(dr);
    }
    if (!ok) {
      out.recomputed.failure_witnesses.push_back({"automorphism", "matrix is not the doubling matrix for the stated a and degrees"});
      out.recomputed.automorphism = out.recomputed.anosov = false;
    }
  }
  const Json again = io::to_json(out.recomputed);
  for (const auto& [key, value] : again.items()) {
    if (!stored.contains(key) || stored.at(key) != value) {
      out.consistent = false;
      out.mismatches.push_back(key);
    }
  }
  for (const auto& [key, value] : stored.items())
    if (!again.contains(key)) {
      out.consistent = false;
      out.mismatches.push_back(key);
    }
  return out;
}

inline std::string stem_for(const std::string& name, std::optional<long> param) {
  if (name == "heisenberg3") return name;
  const char* letter = name == "free_two_step" ? "_r" : name == "eight_dim" ? "_a" : "_k";
  return name + letter + std::to_string(param.value_or(name == "free_two_step" ? 1 : 2));
}

struct BatchItem {
  std::string stem;
  std::string name;
  std::optional<long> param;
};

inline std::vector<BatchItem> batch_items(long a) {
  std::vector<BatchItem> items{{"heisenberg3", "heisenberg3", std::nullopt}};
  for (long k = 2; k <= 10; ++k) items.push_back({stem_for("filiform", k), "filiform", k});
  for (long k = 2; k <= 6; ++k) items.push_back({stem_for("seven_dim_family", k), "seven_dim_family", k});
  items.push_back({stem_for("eight_dim", a), "eight_dim", a});
  for (long r = 1; r <= 4; ++r) items.push_back({stem_for("free_two_step", r), "free_two_step", r});
  return items;
}

struct BatchOutput {
  std::vector<std::pair<std::string, std::string>> files;  // relative path, contents
  std::vector<std::string> lines;
  bool all_anosov = true;
};

inline BatchOutput run_batch_item(const BatchItem& item, long a) {
  BatchOutput out;
  const auto entry = catalog::make(item.name, item.param);
  out.files.emplace_back(item.stem + ".json", io::dump(io::to_json(entry.algebra)));
  if (entry.automorphism) {
    out.files.emplace_back(item.stem + ".matrix.json", io::dump(Json{{"matrix", io::to_json(*entry.automorphism)}}));
    const auto cert = certify(entry.algebra, *entry.automorphism, {"catalog", std::nullopt, entry.algebra.name(), {}});
    out.files.emplace_back(item.stem + ".cert.json", io::dump(io::to_json(cert)));
    out.lines.push_back(item.stem + " [catalog automorphism] " + cert_summary(cert));
    out.all_anosov = out.all_anosov && cert.anosov;
  }
  if (entry.algebra.degrees()) {
    const auto scaled = scale_basis_to_integer(entry.algebra).first;
    const auto cert = double_and_certify(scaled, a);
    const std::string stem = item.stem + "_doubled_a" + std::to_string(a);
    out.files.emplace_back(stem + ".json", io::dump(io::to_json(cert.algebra)));
    out.files.emplace_back(stem + ".cert.json", io::dump(io::to_json(cert)));
    out.lines.push_back(item.stem + " [doubling a=" + std::to_string(a) + "] " + cert_summary(cert));
    out.all_anosov = out.all_anosov && cert.anosov;
  }
  return out;
}

inline void emit(std::ostream& out, const std::vector<std::string>& lines) {
  for (const auto& l : lines) out << l << "\n";
}

}  // namespace detail

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  using io::Json;

  CLI::App app{"Exact construction and certification of Anosov automorphisms of nilpotent Lie algebras"};
  app.require_subcommand(1);

  bool json_output = false;
  long a = 2;
  bool scale = false;
  std::string out_path;
  std::string path, path2;
  std::string name;
  std::optional<long> k, r;
  bool list = false;

  auto* validate = app.add_subcommand("validate", "Check Jacobi, grading, nilpotency and abelian factors of an algebra file");
  validate->add_option("algebra", path, "Algebra JSON file")->required();
  validate->add_flag("--json", json_output, "Machine-readable report");

  auto* dbl = app.add_subcommand("double", "Build n+n in its integer basis with the hyperbolic automorphism, and certify it");
  dbl->add_option("algebra", path, "Graded algebra JSON file")->required();
  dbl->add_option("--a", a, "Integer parameter a >= 2")->capture_default_str();
  dbl->add_flag("--scale", scale, "Rescale the basis to integer structure constants first");
  dbl->add_option("--out", out_path, "Output directory for the doubled algebra and its certificate");

  auto* cert_cmd = app.add_subcommand("certify", "Certify a user-supplied automorphism candidate");
  cert_cmd->add_option("algebra", path, "Algebra JSON file")->required();
  cert_cmd->add_option("matrix", path2, "Matrix JSON file")->required();
  cert_cmd->add_option("--out", out_path, "Write the certificate here instead of stdout");

  auto* example = app.add_subcommand("example", "Emit a catalog algebra (and its automorphism, when it has one)");
  example->add_option("name", name, "Catalog name");
  example->add_option("--k", k, "Family parameter k (filiform, seven_dim_family)");
  example->add_option("--r", r, "Number of Z^3 copies (free_two_step)");
  example->add_option("--a", a, "Integer parameter a >= 2 (eight_dim)");
  example->add_option("--out", out_path, "Output directory");
  example->add_flag("--list", list, "List catalog names and parameters");

  auto* recheck_cmd = app.add_subcommand("recheck", "Re-run every exact check stored in a certificate");
  recheck_cmd->add_option("certificate", path, "Certificate JSON file")->required();
  recheck_cmd->add_flag("--json", json_output, "Print the recomputed certificate");

  auto* report = app.add_subcommand("report", "Summarize a certificate, or certify the whole catalog with --out");
  report->add_option("certificate", path, "Certificate JSON file");
  report->add_option("--a", a, "Doubling parameter for the catalog batch")->capture_default_str();
  report->add_option("--out", out_path, "Write every catalog algebra, matrix and certificate here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (validate->parsed()) {
      const auto alg = io::algebra_from_json(io::read_json_file(path), path);
      const auto rep = detail::validate(alg);
      if (json_output) out << io::dump(rep.json);
      else detail::emit(out, rep.lines);
      return rep.pass ? kOk : kFailure;
    }

    if (dbl->parsed()) {
      if (a < 2) throw InputError("--a must be >= 2");
      auto alg = io::algebra_from_json(io::read_json_file(path), path);
      if (auto bad = jacobi_check(alg)) {
        err << "error: not a Lie algebra (Jacobi fails at (" << bad->i + 1 << "," << bad->j + 1 << "," << bad->k + 1 << "))\n";
        return kFailure;
      }
      if (!alg.degrees()) {
        err << "error: doubling requires a graded algebra: give \"degrees\" with [n_i, n_j] inside n_(i+j)\n";
        return kFailure;
      }
      if (auto bad = grading_check(alg)) {
        err << "error: doubling requires a valid grading; it fails at (" << bad->i + 1 << "," << bad->j + 1 << ","
            << bad->k + 1 << ")\n";
        return kFailure;
      }
      if (!has_integer_constants(alg)) {
        if (!scale) {
          err << "error: structure constants are not integers; rerun with --scale to apply scale_basis_to_integer\n";
          return kFailure;
        }
        const auto [scaled, factor] = scale_basis_to_integer(alg);
        err << "note: basis rescaled by L = " << factor << " to make the structure constants integers\n";
        alg = scaled;
      }
      const auto cert = detail::double_and_certify(alg, a);
      const std::string text = io::dump(io::to_json(cert));
      if (out_path.empty()) {
        out << text;
      } else {
        const std::string stem = fs::path(path).stem().string() + "_doubled";
        io::write_atomic(fs::path(out_path) / (stem + ".json"), io::dump(io::to_json(cert.algebra)));
        io::write_atomic(fs::path(out_path) / (stem + ".cert.json"), text);
        out << detail::cert_summary(cert) << "\n";
      }
      return cert.anosov ? kOk : kFailure;
    }

    if (cert_cmd->parsed()) {
      const auto alg = io::algebra_from_json(io::read_json_file(path), path);
      const auto m = io::matrix_from_json(io::read_json_file(path2), path2);
      if (m.rows() != alg.dim())
        throw InputError(path2 + ": matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.rows()) +
                         " but the algebra has dimension " + std::to_string(alg.dim()));
      const auto cert = certify(alg, m, {"user", std::nullopt, alg.name(), {}});
      const std::string text = io::dump(io::to_json(cert));
      if (out_path.empty()) out << text;
      else {
        io::write_atomic(out_path, text);
        out << detail::cert_summary(cert) << "\n";
      }
      return cert.anosov ? kOk : kFailure;
    }

    if (example->parsed()) {
      if (list) {
        for (const auto& d : catalog::listing()) out << d.name << "  [" << d.parameters << "]  " << d.summary << "\n";
        return kOk;
      }
      if (name.empty()) throw InputError("example: give a catalog name or --list");
      std::optional<long> param;
      if (name == "filiform" || name == "seven_dim_family") param = k;
      else if (name == "free_two_step") param = r;
      else if (name == "eight_dim") param = a;
      const auto entry = catalog::make(name, param);
      for (const auto& w : entry.warnings) err << "warning: " << w << "\n";
      const std::string alg_text = io::dump(io::to_json(entry.algebra));
      if (out_path.empty()) {
        out << alg_text;
        return kOk;
      }
      const std::string stem = detail::stem_for(name, param);
      io::write_atomic(fs::path(out_path) / (stem + ".json"), alg_text);
      out << (fs::path(out_path) / (stem + ".json")).string() << "\n";
      if (entry.automorphism) {
        io::write_atomic(fs::path(out_path) / (stem + ".matrix.json"), io::dump(Json{{"matrix", io::to_json(*entry.automorphism)}}));
        out << (fs::path(out_path) / (stem + ".matrix.json")).string() << "\n";
      }
      return kOk;
    }

    if (recheck_cmd->parsed()) {
      const auto outcome = detail::recheck(io::read_json_file(path));
      if (json_output) out << io::dump(io::to_json(outcome.recomputed));
      else {
        out << "recomputed: " << detail::cert_summary(outcome.recomputed) << "\n";
        if (outcome.consistent) out << "stored certificate: consistent\n";
        else {
          out << "stored certificate: MISMATCH in";
          for (const auto& key : outcome.mismatches) out << " " << key;
          out << "\n";
        }
      }
      return outcome.consistent && outcome.recomputed.anosov ? kOk : kFailure;
    }

    if (report->parsed()) {
      if (!path.empty()) {
        const auto c = io::certificate_from_json(io::read_json_file(path));
        out << "algebra: " << c.algebra.name() << " (dim " << c.algebra.dim() << ")\n";
        out << "construction: " << c.parameters.construction;
        if (c.parameters.a) out << ", a = " << *c.parameters.a;
        out << "\ncharacteristic polynomial: " << c.char_poly << "\n";
        out << detail::cert_summary(c) << "\n";
        for (const auto& w : c.failure_witnesses) out << "witness [" << w.kind << "]: " << w.detail << "\n";
        return c.anosov ? kOk : kFailure;
      }
      if (a < 2) throw InputError("--a must be >= 2");
      const auto items = detail::batch_items(a);
      std::vector<std::future<detail::BatchOutput>> jobs;
      for (const auto& item : items) jobs.push_back(std::async(std::launch::async, detail::run_batch_item, item, a));
      bool all = true;
      for (auto& job : jobs) {
        const auto res = job.get();
        if (!out_path.empty())
          for (const auto& [file, text] : res.files) io::write_atomic(fs::path(out_path) / file, text);
        detail::emit(out, res.lines);
        all = all && res.all_anosov;
      }
      out << (all ? "all certificates anosov\n" : "some certificates FAILED\n");
      return all ? kOk : kFailure;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace anolie::cli

#endif  // ANOLIE_CLI_HPP
