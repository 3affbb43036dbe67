// diaop: command-line front end for the diagonal-operator workbench.
//
// Exit codes: 0 success (verdicts are data), 1 usage/parse error,
// 2 file/schema error, 3 mathematical precondition violation.

#include "diaop/classify.hpp"
#include "diaop/error.hpp"
#include "diaop/hyperbolicity.hpp"
#include "diaop/io.hpp"
#include "diaop/operator.hpp"
#include "diaop/render.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace diaop;

enum ExitCode { kOk = 0, kUsage = 1, kSchema = 2, kPrecondition = 3 };

struct CommandConfig {
  std::string basis = "monomial";
  std::string eigen;
  std::size_t max_order = 8;
  std::optional<std::size_t> max_order_override;
  std::string format = "table";
  std::string output;
  std::vector<std::string> ops;
  std::string poly;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::size_t prefix = 24;
};

void emit(const std::string &text) {
  std::cout << text;
  if (!text.empty() && text.back() != '\n') {
    std::cout << '\n';
  }
}

std::uint64_t effective_seed(const CommandConfig &cfg) {
  if (const char *env = std::getenv("DIAOP_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) {
        return v;
      }
    } catch (const std::exception &) {
    }
    throw ParseError(env, 0, "DIAOP_SEED must be a nonnegative integer");
  }
  return cfg.seed;
}

std::string operator_text(const CommandConfig &cfg, const io::OperatorFile &file) {
  if (cfg.format == "json") {
    return io::dump(io::to_json(file));
  }
  if (cfg.format == "latex") {
    return "T=" + render_latex(file.op);
  }
  std::string header;
  if (!file.basis.empty() || !file.eigen.empty()) {
    header = "basis: " + file.basis + "  eigen: " + file.eigen + "  max_order: " +
             std::to_string(file.op.max_order()) + "\n";
  }
  return header + render_table(file.op);
}

std::string polynomial_text(const CommandConfig &cfg, const Polynomial &p) {
  if (cfg.format == "json") {
    return io::dump(io::to_json(p));
  }
  if (cfg.format == "latex") {
    return to_latex(p);
  }
  return to_csv(p);
}

void maybe_write(const CommandConfig &cfg, const io::OperatorFile &file) {
  if (!cfg.output.empty()) {
    io::write_operator_file(cfg.output, file);
  }
}

int cmd_derive(const CommandConfig &cfg) {
  const Basis basis = io::parse_basis(cfg.basis);
  const SequenceSpec eigen = parse_sequence(cfg.eigen);
  const io::OperatorFile file{derive_diagonal({basis, eigen, cfg.max_order}), basis.name(),
                              eigen.expression()};
  maybe_write(cfg, file);
  emit(operator_text(cfg, file));
  return kOk;
}

int cmd_classify(const CommandConfig &cfg) {
  const Basis basis = io::parse_basis(cfg.basis);
  const SequenceSpec eigen = parse_sequence(cfg.eigen);
  const auto report = classify({basis, eigen, cfg.max_order});
  if (cfg.format == "json") {
    emit(io::dump(io::to_json(report)));
    return kOk;
  }
  std::string out = "sequence: " + to_string(report.sequence_verdict) + "\n" +
                    "operator: " + to_string(report.operator_verdict) + "\n" +
                    "differences (Delta^n a)_0:";
  for (const auto &v : report.difference_diagonal) {
    out += " " + to_string(v);
  }
  out += "\ndeg Q_k:";
  for (const auto &d : report.degree_profile) {
    out += " " + (d ? std::to_string(*d) : std::string("zero"));
  }
  out += "\n";
  for (const auto &note : report.notes) {
    out += "note: " + note + "\n";
  }
  emit(out);
  return kOk;
}

int cmd_check_ms(const CommandConfig &cfg) {
  if (cfg.prefix < 3) {
    throw ParseError(std::to_string(cfg.prefix), 0, "--prefix must be at least 3");
  }
  const Basis basis = io::parse_basis(cfg.basis);
  const SequenceSpec eigen = parse_sequence(cfg.eigen);
  const auto report =
      check_multiplier_sequence(eigen, basis, cfg.prefix, cfg.max_order, effective_seed(cfg));
  if (cfg.format == "json") {
    emit(io::dump(io::to_json(report)));
    return kOk;
  }
  std::string out = "eigen: " + report.eigen + "  basis: " + report.basis +
                    "  seed: " + std::to_string(report.seed) + "\n";
  out += "turan: ";
  if (report.turan_violations.empty()) {
    out += "no violations in " + std::to_string(report.prefix.size()) + " terms\n";
  } else {
    for (const auto &v : report.turan_violations) {
      out += "k=" + std::to_string(v.k) + " (" + to_string(v.value) + ") ";
    }
    out += "\n";
  }
  out += "sign pattern: " + to_string(report.sign_pattern) + "\n";
  out += "increasing check: " + to_string(report.increasing_check.status);
  if (report.increasing_check.first_violation) {
    out += " at k=" + std::to_string(*report.increasing_check.first_violation);
  }
  out += "\n";
  if (report.counterexample) {
    const auto &cx = *report.counterexample;
    out += "counterexample (corpus #" + std::to_string(cx.corpus_index) + "):\n";
    out += "  p    = " + to_string(cx.input) + "\n";
    out += "  T[p] = " + to_string(cx.image) + "  (" + std::to_string(cx.image_real_roots) +
           " of " + std::to_string(cx.image_distinct_roots) + " distinct roots real)\n";
  } else {
    out += "counterexample: none found in " + std::to_string(report.corpus_size) +
           " corpus polynomials\n";
  }
  out += report.certified_not_multiplier_sequence()
             ? "verdict: NOT a multiplier sequence\n"
             : "verdict: no violation found (necessary conditions only)\n";
  emit(out);
  return kOk;
}

int cmd_compose(const CommandConfig &cfg) {
  if (cfg.ops.size() < 2) {
    throw ParseError("--op", 0, "compose needs at least two --op files");
  }
  io::OperatorFile acc = io::read_operator_file(cfg.ops.front());
  std::string label = acc.basis;
  for (std::size_t i = 1; i < cfg.ops.size(); ++i) {
    const auto next = io::read_operator_file(cfg.ops[i]);
    acc.op = compose(acc.op, next.op);
    if (next.basis != label) {
      label.clear();
    }
  }
  acc.basis = label;
  acc.eigen.clear();
  maybe_write(cfg, acc);
  emit(operator_text(cfg, acc));
  return kOk;
}

Polynomial read_poly_argument(const std::string &text) {
  if (text != "-") {
    return parse_polynomial_csv(text);
  }
  std::string input(std::istreambuf_iterator<char>(std::cin), {});
  while (!input.empty() && std::isspace(static_cast<unsigned char>(input.back()))) {
    input.pop_back();
  }
  return parse_polynomial_csv(input);
}

int cmd_apply(const CommandConfig &cfg) {
  const auto file = io::read_operator_file(cfg.ops.front());
  const Polynomial p = read_poly_argument(cfg.poly);
  emit(polynomial_text(cfg, apply(file.op, p)));
  return kOk;
}

int cmd_verify(const CommandConfig &cfg) {
  const auto file = io::read_operator_file(cfg.ops.front());
  const Basis basis = io::parse_basis(cfg.basis);
  const SequenceSpec eigen = parse_sequence(cfg.eigen);
  const std::size_t order = cfg.max_order_override.value_or(file.op.max_order());
  const auto report = verify_diagonal(file.op, {basis, eigen, order});
  if (cfg.format == "json") {
    emit(io::dump(io::to_json(report)));
    return kOk;
  }
  if (report.pass) {
    emit("pass (n = 0.." + std::to_string(order) + ")");
  } else {
    emit("fail at n = " + std::to_string(*report.first_failure) +
                  "\n  T[B_n]   = " + to_string(*report.got) +
                  "\n  a_n B_n  = " + to_string(*report.expected));
  }
  return kOk;
}

int cmd_eigenvector(const CommandConfig &cfg) {
  const auto file = io::read_operator_file(cfg.ops.front());
  emit(polynomial_text(cfg, eigenvector_solve(file.op, cfg.m)));
  return kOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact differential-operator representations of diagonal operators"};
  app.require_subcommand(1);
  CommandConfig cfg;

  const auto add_format = [&](CLI::App *sub) {
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "latex"}))
        ->capture_default_str();
  };
  const auto add_basis = [&](CLI::App *sub) {
    sub->add_option("--basis", cfg.basis,
                    "monomial|hermite|legendre|laguerre|chebyshev|custom:<path>")
        ->capture_default_str();
  };
  const auto add_eigen = [&](CLI::App *sub) {
    sub->add_option("--eigen", cfg.eigen,
                    "Sequence expression: poly:..|list:..|geom:r[:c]|recip-factorial[:c]|alt:<expr>")
        ->required();
  };
  const auto add_order = [&](CLI::App *sub) {
    sub->add_option("--max-order", cfg.max_order, "Order window N")->capture_default_str();
  };
  const auto add_op = [&](CLI::App *sub) {
    sub->add_option("--op", cfg.ops, "Operator JSON file")->required()->expected(1);
  };

  auto *derive = app.add_subcommand("derive", "Derive Q_0..Q_N for a diagonal operator");
  add_basis(derive);
  add_eigen(derive);
  add_order(derive);
  add_format(derive);
  derive->add_option("-o,--output", cfg.output, "Write the operator JSON here");

  auto *cls = app.add_subcommand("classify", "Classify the eigenvalue sequence and operator order");
  add_basis(cls);
  add_eigen(cls);
  add_order(cls);
  add_format(cls);

  auto *ms = app.add_subcommand("check-ms", "Multiplier-sequence necessary-condition checks");
  add_basis(ms);
  add_eigen(ms);
  add_order(ms);
  add_format(ms);
  ms->add_option("--prefix", cfg.prefix, "Prefix length for sequence checks")
      ->capture_default_str();
  ms->add_option("--seed", cfg.seed, "Corpus seed (DIAOP_SEED overrides)")
      ->capture_default_str();

  auto *cmp = app.add_subcommand("compose", "Compose operator files left to right (a o b)");
  cmp->add_option("--op", cfg.ops, "Operator JSON files (two or more)")
      ->required()
      ->expected(2, 64);
  add_format(cmp);
  cmp->add_option("-o,--output", cfg.output, "Write the composed operator JSON here");

  auto *app_apply = app.add_subcommand("apply", "Apply an operator to a polynomial");
  add_op(app_apply);
  app_apply->add_option("--poly", cfg.poly, "Ascending coefficients, comma-separated, or - for stdin")
      ->required();
  add_format(app_apply);

  auto *ver = app.add_subcommand("verify", "Check T[B_n] = a_n B_n for n <= N");
  add_op(ver);
  add_basis(ver);
  add_eigen(ver);
  ver->add_option("--max-order", cfg.max_order_override,
                  "Window to verify (default: the operator's)");
  add_format(ver);

  auto *eig = app.add_subcommand("eigenvector", "Monic degree-m eigenvector of an operator");
  add_op(eig);
  eig->add_option("--m", cfg.m, "Degree")->required();
  add_format(eig);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*derive) return cmd_derive(cfg);
    if (*cls) return cmd_classify(cfg);
    if (*ms) return cmd_check_ms(cfg);
    if (*cmp) return cmd_compose(cfg);
    if (*app_apply) return cmd_apply(cfg);
    if (*ver) return cmd_verify(cfg);
    if (*eig) return cmd_eigenvector(cfg);
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SchemaError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSchema;
  } catch (const PreconditionError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  }
  return kUsage;
}
