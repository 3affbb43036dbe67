#include "diaop/io.hpp"

#include "diaop/error.hpp"

#include <fstream>
#include <sstream>

namespace diaop::io {

json to_json(const Rational &r) { return to_string(r); }

json to_json(const Polynomial &p) {
  json arr = json::array();
  for (const auto &c : p.coefficients()) {
    arr.push_back(to_string(c));
  }
  return arr;
}

Rational rational_from_json(const json &j) {
  if (j.is_number_integer()) {
    return Rational(j.get<long long>());
  }
  if (!j.is_string()) {
    throw SchemaError("expected a rational string, got " + j.dump());
  }
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError &e) {
    throw SchemaError(std::string("bad rational: ") + e.what());
  }
}

Polynomial polynomial_from_json(const json &j) {
  if (!j.is_array()) {
    throw SchemaError("expected a polynomial coefficient array, got " + j.dump());
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(j.size());
  for (const auto &c : j) {
    coeffs.push_back(rational_from_json(c));
  }
  return Polynomial(std::move(coeffs));
}

json to_json(const OperatorFile &file) {
  json q = json::array();
  for (const auto &p : file.op.coefficients()) {
    q.push_back(to_json(p));
  }
  return json{{"max_order", file.op.max_order()},
              {"q", std::move(q)},
              {"meta", {{"basis", file.basis}, {"eigen", file.eigen}}}};
}

OperatorFile operator_from_json(const json &j) {
  if (!j.is_object()) {
    throw SchemaError("operator file must be a JSON object");
  }
  if (!j.contains("max_order") || !j["max_order"].is_number_unsigned()) {
    throw SchemaError("operator file: 'max_order' must be a nonnegative integer");
  }
  if (!j.contains("q") || !j["q"].is_array()) {
    throw SchemaError("operator file: 'q' must be an array");
  }
  const auto order = j["max_order"].get<std::size_t>();
  if (j["q"].size() != order + 1) {
    throw SchemaError("operator file: 'q' has " + std::to_string(j["q"].size()) +
                      " entries, expected max_order + 1 = " + std::to_string(order + 1));
  }
  std::vector<Polynomial> q;
  for (const auto &p : j["q"]) {
    q.push_back(polynomial_from_json(p));
  }
  OperatorFile file{OperatorRep(std::move(q)), "", ""};
  if (j.contains("meta")) {
    const auto &meta = j["meta"];
    if (!meta.is_object()) {
      throw SchemaError("operator file: 'meta' must be an object");
    }
    if (meta.contains("basis") && meta["basis"].is_string()) {
      file.basis = meta["basis"].get<std::string>();
    }
    if (meta.contains("eigen") && meta["eigen"].is_string()) {
      file.eigen = meta["eigen"].get<std::string>();
    }
  }
  return file;
}

namespace {

json read_json(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw SchemaError("cannot open '" + path.string() + "'");
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error &e) {
    throw SchemaError("invalid JSON in '" + path.string() + "': " + e.what());
  }
}

} // namespace

OperatorFile read_operator_file(const std::filesystem::path &path) {
  return operator_from_json(read_json(path));
}

void write_operator_file(const std::filesystem::path &path, const OperatorFile &file) {
  std::ofstream out(path);
  if (!out) {
    throw SchemaError("cannot write '" + path.string() + "'");
  }
  out << dump(to_json(file));
}

Basis read_custom_basis(const std::filesystem::path &path) {
  const json j = read_json(path);
  if (!j.is_array()) {
    throw SchemaError("custom basis file must be a JSON array of polynomials");
  }
  std::vector<Polynomial> polys;
  for (const auto &p : j) {
    polys.push_back(polynomial_from_json(p));
  }
  return Basis::custom(std::move(polys), "custom:" + path.string());
}

Basis parse_basis(std::string_view name) {
  if (name == "monomial") {
    return Basis::monomial();
  }
  if (name == "hermite") {
    return Basis::hermite();
  }
  if (name == "legendre") {
    return Basis::legendre();
  }
  if (name == "laguerre") {
    return Basis::laguerre();
  }
  if (name == "chebyshev") {
    return Basis::chebyshev();
  }
  constexpr std::string_view prefix = "custom:";
  if (name.starts_with(prefix)) {
    if (name.size() == prefix.size()) {
      throw ParseError(std::string(name), prefix.size(), "custom basis needs a path");
    }
    return read_custom_basis(std::filesystem::path(name.substr(prefix.size())));
  }
  throw ParseError(std::string(name), 0,
                   "unknown basis (expected monomial, hermite, legendre, laguerre, "
                   "chebyshev or custom:<path>)");
}

json to_json(const VerifyReport &report) {
  json j{{"pass", report.pass}, {"checked", report.checked}};
  if (report.first_failure) {
    j["first_failure"] = *report.first_failure;
    j["got"] = to_json(*report.got);
    j["expected"] = to_json(*report.expected);
  } else {
    j["first_failure"] = nullptr;
  }
  return j;
}

namespace {

json degree_json(const Degree &d) {
  if (!d) {
    return "zero";
  }
  return *d;
}

} // namespace

json to_json(const ClassificationReport &report) {
  json diag = json::array();
  for (const auto &v : report.difference_diagonal) {
    diag.push_back(to_json(v));
  }
  json profile = json::array();
  for (const auto &d : report.degree_profile) {
    profile.push_back(degree_json(d));
  }
  return json{{"sequence_verdict", to_string(report.sequence_verdict)},
              {"operator_verdict", to_string(report.operator_verdict)},
              {"evidence",
               {{"difference_diagonal", std::move(diag)},
                {"degree_profile", std::move(profile)}}},
              {"notes", report.notes}};
}

json to_json(const Counterexample &cx) {
  return json{{"corpus_index", cx.corpus_index},
              {"input", to_json(cx.input)},
              {"image", to_json(cx.image)},
              {"image_real_roots", cx.image_real_roots},
              {"image_distinct_roots", cx.image_distinct_roots}};
}

json to_json(const MsReport &report) {
  json turan = json::array();
  for (const auto &v : report.turan_violations) {
    turan.push_back(json{{"k", v.k}, {"value", to_json(v.value)}});
  }
  json prefix = json::array();
  for (const auto &v : report.prefix) {
    prefix.push_back(to_json(v));
  }
  json increasing{{"status", to_string(report.increasing_check.status)}};
  increasing["first_violation"] =
      report.increasing_check.first_violation
          ? json(*report.increasing_check.first_violation)
          : json(nullptr);
  return json{{"eigen", report.eigen},
              {"basis", report.basis},
              {"max_order", report.max_order},
              {"seed", report.seed},
              {"corpus_size", report.corpus_size},
              {"prefix", std::move(prefix)},
              {"turan_violations", std::move(turan)},
              {"sign_pattern", to_string(report.sign_pattern)},
              {"increasing_check", std::move(increasing)},
              {"counterexample",
               report.counterexample ? to_json(*report.counterexample) : json(nullptr)},
              {"certified_not_multiplier_sequence",
               report.certified_not_multiplier_sequence()}};
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

} // namespace diaop::io
