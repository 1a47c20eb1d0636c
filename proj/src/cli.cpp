#include "qsl/cli.hpp"

#include <cmath>
#include <optional>
#include <set>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "qsl/error.hpp"
#include "qsl/evidence_io.hpp"
#include "qsl/likelihood.hpp"
#include "qsl/mass_function.hpp"
#include "qsl/owa.hpp"

namespace qsl::cli {

std::string format_fixed4(double x) {
  std::string s = fmt::format("{:.4f}", x);
  if (s == "-0.0000") s.erase(0, 1);
  return s;
}

std::string format_complex4(QuantumProbability p) {
  const std::string im = format_fixed4(p.im());
  if (im.front() == '-') return fmt::format("{}-{}i", format_fixed4(p.re()), im.substr(1));
  return fmt::format("{}+{}i", format_fixed4(p.re()), im);
}

std::string format_full(double x) { return fmt::format("{:.17g}", x); }

namespace {

// Engine errors caused by bad arguments are usage errors; errors caused by
// the content of an input file are validation failures.
int exit_status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ModulusExceedsOne:
    case ErrorCode::NegativeAmplitude:
    case ErrorCode::NonFinite:
    case ErrorCode::InvalidFrame:
    case ErrorCode::DuplicateLabel:
    case ErrorCode::EmptyEvidence:
    case ErrorCode::ValueOutOfRange:
      return kExitValidationFailure;
    default:
      return kExitUsage;
  }
}

int validate_evidence(const std::string& text, const std::string& path, std::ostream& out) {
  const auto records = parse_evidence_records(text, path);
  std::vector<std::string> violations;
  if (records.empty()) violations.emplace_back("no sources listed");

  std::set<std::string> labels;
  double max_modulus = 0.0;
  for (const auto& rec : records) {
    if (!labels.insert(rec.label).second) {
      violations.push_back(fmt::format("duplicate source label '{}'", rec.label));
    }
    try {
      max_modulus = std::max(max_modulus, rec.value.to_probability().modulus());
    } catch (const Error& e) {
      violations.push_back(fmt::format("{}: {}", to_string(e.code()), e.what()));
    }
  }

  if (violations.empty()) {
    fmt::print(out, "{}: valid evidence\n", path);
    fmt::print(out, "{} sources, all moduli ≤ 1 (largest {})\n", records.size(),
               format_fixed4(max_modulus));
    return kExitOk;
  }
  fmt::print(out, "{}: {} violation(s)\n", path, violations.size());
  for (const auto& v : violations) fmt::print(out, "  - {}\n", v);
  return kExitValidationFailure;
}

int validate_mass(const std::string& text, const std::string& path, std::ostream& out) {
  const MassDocument doc = parse_mass_document(text, path);
  std::vector<std::string> violations;

  std::optional<QuantumMassFunction> m;
  try {
    m.emplace(FrameOfDiscernment(doc.frame));
  } catch (const Error& e) {
    violations.push_back(fmt::format("{}: {}", to_string(e.code()), e.what()));
  }
  if (m) {
    for (const auto& rec : doc.masses) {
      try {
        m->assign(m->subset_of(rec.subset), rec.value.to_probability());
      } catch (const Error& e) {
        violations.push_back(fmt::format("{}: {}", to_string(e.code()), e.what()));
      }
    }
    const MassValidationReport report = validate_mass_function(*m);
    for (const auto& v : report.violations) {
      violations.push_back(fmt::format("{} (residual {})", v.message, format_fixed4(v.residual)));
    }
    if (violations.empty()) {
      fmt::print(out, "{}: valid mass function\n", path);
      fmt::print(out, "{} assigned subsets over {} events, squared moduli sum to {}\n",
                 m->assignments().size(), m->frame().size(),
                 format_fixed4(report.squared_modulus_sum));
      return kExitOk;
    }
  }
  fmt::print(out, "{}: {} violation(s)\n", path, violations.size());
  for (const auto& v : violations) fmt::print(out, "  - {}\n", v);
  return kExitValidationFailure;
}

int cmd_validate(const std::string& path, std::ostream& out) {
  const std::string text = read_text_file(path);
  if (detect_document_kind(text, path) == DocumentKind::MassFunction) {
    return validate_mass(text, path, out);
  }
  return validate_evidence(text, path, out);
}

int cmd_weights(std::size_t n, double alpha, bool csv, std::ostream& out) {
  const WeightVector w = attitudinal_weights(n, AttitudeParameter::of(alpha));
  if (csv) {
    fmt::print(out, "index,weight\n");
    for (std::size_t i = 0; i < w.size(); ++i) {
      fmt::print(out, "{},{}\n", i + 1, format_full(w[i]));
    }
    return kExitOk;
  }
  fmt::print(out, "attitudinal weights, n = {}, alpha = {}\n", n, alpha);
  for (std::size_t i = 0; i < w.size(); ++i) {
    fmt::print(out, "w{:<4} {}\n", i + 1, format_fixed4(w[i]));
  }
  if (n >= 2) {
    fmt::print(out, "orness     {}\n", format_fixed4(orness(w)));
  }
  fmt::print(out, "dispersion {}\n", format_fixed4(dispersion(w)));
  return kExitOk;
}

enum class Mode { Soft, Direct, Product };

void print_sorted(const EvidenceSet& e, const SortedEvidence& s, std::ostream& out) {
  fmt::print(out, "order  source  probability        modulus\n");
  for (std::size_t k = 0; k < s.ordered.size(); ++k) {
    fmt::print(out, "{:<6} {:<7} {:<18} {}\n", k + 1, e[s.permutation[k]].label,
               format_complex4(s.ordered[k]), format_fixed4(s.ordered[k].modulus()));
  }
}

void print_csv_trace(const EvidenceSet& e, const SortedEvidence& s,
                     const std::vector<QuantumProbability>* products,
                     const WeightVector* weights, QuantumProbability result,
                     std::ostream& out) {
  fmt::print(out, "row,source,re,im,modulus,prod_re,prod_im,prod_modulus,weight\n");
  for (std::size_t k = 0; k < s.ordered.size(); ++k) {
    const QuantumProbability p = s.ordered[k];
    fmt::print(out, "{},{},{},{},{}", k + 1, e[s.permutation[k]].label, format_full(p.re()),
               format_full(p.im()), format_full(p.modulus()));
    if (products) {
      const QuantumProbability q = (*products)[k];
      fmt::print(out, ",{},{},{}", format_full(q.re()), format_full(q.im()),
                 format_full(q.modulus()));
    } else {
      fmt::print(out, ",,,");
    }
    fmt::print(out, ",{}\n", weights ? format_full((*weights)[k]) : std::string());
  }
  fmt::print(out, "result,,{},{},{},,,,\n", format_full(result.re()), format_full(result.im()),
             format_full(result.modulus()));
}

int cmd_likelihood(const std::string& path, std::optional<double> alpha, Mode mode,
                   bool csv, std::ostream& out) {
  const EvidenceSet evidence = load_evidence(path);
  if (mode != Mode::Product && !alpha) {
    throw Error(ErrorCode::InvalidAlpha, "--alpha is required for soft and direct modes");
  }

  const SortedEvidence sorted = sort_by_modulus(evidence);
  std::optional<std::vector<QuantumProbability>> products;
  std::optional<WeightVector> weights;
  QuantumProbability result;
  switch (mode) {
    case Mode::Soft: {
      LikelihoodTrace t = quantum_soft_likelihood(evidence, AttitudeParameter::of(*alpha));
      products = std::move(t.cumulative_products);
      weights = std::move(t.weights);
      result = t.result;
      break;
    }
    case Mode::Direct:
      weights = attitudinal_weights(evidence.size(), AttitudeParameter::of(*alpha));
      result = quantum_owa_direct(evidence, AttitudeParameter::of(*alpha));
      break;
    case Mode::Product:
      products = cumulative_products(sorted);
      result = product_likelihood(evidence);
      break;
  }

  if (csv) {
    print_csv_trace(evidence, sorted, products ? &*products : nullptr,
                    weights ? &*weights : nullptr, result, out);
    return kExitOk;
  }

  print_sorted(evidence, sorted, out);
  if (products) {
    fmt::print(out, "\ncumulative products\n");
    for (std::size_t k = 0; k < products->size(); ++k) {
      fmt::print(out, "Prod({}) = {:<18} modulus {}\n", k + 1, format_complex4((*products)[k]),
                 format_fixed4((*products)[k].modulus()));
    }
  }
  if (weights) {
    fmt::print(out, "\nweights (alpha = {})\n", *alpha);
    for (std::size_t k = 0; k < weights->size(); ++k) {
      fmt::print(out, "w{:<4} {}\n", k + 1, format_fixed4((*weights)[k]));
    }
  }
  const char* label = mode == Mode::Soft     ? "soft likelihood"
                      : mode == Mode::Direct ? "quantum OWA"
                                             : "product likelihood";
  fmt::print(out, "\n{}: {}  modulus {}\n", label, format_complex4(result),
             format_fixed4(result.modulus()));
  return kExitOk;
}

int cmd_sweep(const std::string& path, double start, double end, double step,
              std::ostream& out) {
  const EvidenceSet evidence = load_evidence(path);
  const SweepResult sweep = alpha_sweep(evidence, start, end, step);
  fmt::print(out, "alpha,re,im,modulus\n");
  for (const auto& row : sweep.rows) {
    fmt::print(out, "{},{},{},{}\n", format_full(row.alpha), format_full(row.likelihood.re()),
               format_full(row.likelihood.im()), format_full(row.modulus));
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum soft likelihood over complex-valued evidence", "qsl"};
  app.require_subcommand(1);

  std::string file;
  std::size_t n = 0;
  double alpha = 0.0;
  std::optional<double> likelihood_alpha;
  std::string mode_name = "soft";
  bool csv = false;
  double start = 0.0, end = 0.0, step = 0.0;

  auto* validate = app.add_subcommand("validate", "Check an evidence or mass-function file");
  validate->add_option("file", file, "JSON document")->required();

  auto* weights = app.add_subcommand("weights", "Print attitudinal OWA weights");
  weights->add_option("-n,--n", n, "Number of weights")->required();
  weights->add_option("--alpha", alpha, "Attitude in (0, 1)")->required();
  weights->add_flag("--csv", csv, "Full-precision CSV output");

  auto* likelihood = app.add_subcommand("likelihood", "Evaluate one evidence file");
  likelihood->add_option("file", file, "Evidence document")->required();
  likelihood->add_option("--alpha", likelihood_alpha, "Attitude in (0, 1)");
  likelihood->add_option("--mode", mode_name, "soft, direct or product")
      ->check(CLI::IsMember({"soft", "direct", "product"}));
  likelihood->add_flag("--csv", csv, "Full-precision CSV trace");

  auto* sweep = app.add_subcommand("sweep", "CSV of the soft likelihood over an alpha grid");
  sweep->add_option("file", file, "Evidence document")->required();
  sweep->add_option("--start", start, "First alpha")->required();
  sweep->add_option("--end", end, "Last alpha (inclusive)")->required();
  sweep->add_option("--step", step, "Grid spacing")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(file, out);
    if (*weights) return cmd_weights(n, alpha, csv, out);
    if (*likelihood) {
      const Mode mode = mode_name == "direct"    ? Mode::Direct
                        : mode_name == "product" ? Mode::Product
                                                 : Mode::Soft;
      return cmd_likelihood(file, likelihood_alpha, mode, csv, out);
    }
    if (*sweep) return cmd_sweep(file, start, end, step, out);
  } catch (const Error& e) {
    fmt::print(err, "error [{}]: {}\n", to_string(e.code()), e.what());
    return exit_status_for(e.code());
  }
  return kExitUsage;
}

}  // namespace qsl::cli
