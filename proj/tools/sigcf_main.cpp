// Copyright (c) 2026 the sigcf authors.
// Licensed under the Apache License, Version 2.0; see LICENSE.
//
// Command-line surface: significand, digit, and continued-fraction pmf
// tables plus dataset analysis, sampling, and Pareto fitting.
//
// Exit codes: 0 success, 2 usage error, 3 data error, 4 numeric failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sigcf/contfrac.hpp"
#include "sigcf/empirical.hpp"
#include "sigcf/fraclog.hpp"
#include "sigcf/significand.hpp"
#include "sigcf/table_io.hpp"

namespace {

using nlohmann::json;
using namespace sigcf;

// Failures attributable to input data rather than flags or numerics.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelOpts {
  std::string model = "benford";
  int base = 10;
  double s = 0.0;
  double rho = 0.0;
  double xmin = 0.0;
  bool has_s = false;
  bool has_rho = false;
  bool has_xmin = false;
  std::string cdf_file;
};

void add_model_options(CLI::App* cmd, ModelOpts& m, bool with_custom) {
  std::string models = with_custom ? "benford,pareto,custom-cdf" : "benford,pareto";
  cmd->add_option("--model", m.model, "Distribution model")
      ->check(CLI::IsMember(with_custom
                                ? std::vector<std::string>{"benford", "pareto",
                                                           "custom-cdf"}
                                : std::vector<std::string>{"benford", "pareto"}))
      ->capture_default_str();
  cmd->add_option("-b,--base", m.base, "Positional base b")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  auto* so = cmd->add_option("-s,--shape", m.s, "Pareto shape parameter");
  so->check(CLI::PositiveNumber);
  auto* ro = cmd->add_option("--rho", m.rho, "Fractional log of the Pareto scale");
  ro->check(CLI::Range(0.0, 1.0));
  auto* xo = cmd->add_option("--xmin", m.xmin, "Pareto scale (minimum value)");
  xo->check(CLI::PositiveNumber);
  ro->excludes(xo);
  xo->excludes(ro);
  if (with_custom) {
    cmd->add_option("--cdf-file", m.cdf_file,
                    "Sampled fractional-log cdf table (custom-cdf model)");
  }
  cmd->callback([so, ro, xo, &m]() {
    m.has_s = so->count() > 0;
    m.has_rho = ro->count() > 0;
    m.has_xmin = xo->count() > 0;
  });
}

ParetoParams pareto_from_opts(const ModelOpts& m) {
  if (!m.has_s) throw CLI::ValidationError("--shape is required for --model pareto");
  if (m.has_xmin) return ParetoParams::from_xmin(m.s, m.xmin, m.base);
  return ParetoParams::from_rho(m.s, m.has_rho ? m.rho : 0.0, m.base);
}

FracLogDistribution fraclog_from_opts(const ModelOpts& m) {
  if (m.model == "benford") return benford_fraclog(m.base);
  if (m.model == "pareto") return pareto_fraclog(pareto_from_opts(m));
  if (m.cdf_file.empty()) {
    throw CLI::ValidationError("--cdf-file is required for --model custom-cdf");
  }
  std::ifstream in(m.cdf_file);
  if (!in) throw DataError("cannot open cdf table: " + m.cdf_file);
  try {
    return load_cdf_table(in);
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
}

Dataset load_dataset(const std::string& path, int column) {
  Dataset ds;
  if (path == "-") {
    ds = read_dataset(std::cin, column, "stdin");
  } else {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open dataset: " + path);
    ds = read_dataset(in, column, path);
  }
  return ds;
}

void emit_table(const std::string& fmt, json meta,
                const std::vector<std::string>& columns,
                const std::vector<json>& rows) {
  if (fmt == "json") {
    meta["columns"] = columns;
    meta["rows"] = rows;
    std::cout << meta.dump() << "\n";
    return;
  }
  std::cout << "#";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    std::cout << (i ? "\t" : "") << columns[i];
  }
  std::cout << "\n";
  for (const json& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) std::cout << "\t";
      const json& cell = row[i];
      if (cell.is_null()) {
        std::cout << "*";
      } else if (cell.is_number_float()) {
        std::cout << format_double(cell.get<double>());
      } else {
        std::cout << cell.dump();
      }
    }
    std::cout << "\n";
  }
}

json fit_to_json(const FitResult& f) {
  return json{{"s_hat", f.s_hat},
              {"x_m_hat", f.x_m_hat},
              {"rho_hat", f.rho_hat},
              {"p", f.p}};
}

json report_to_json(const EmpiricalReport& r) {
  return json{{"observed", r.observed},   {"expected", r.expected},
              {"statistic", r.statistic}, {"dof", r.dof},
              {"p_value", r.p_value},     {"bins_merged", r.bins_merged},
              {"n", r.n}};
}

// ---- pmf-significand ----------------------------------------------------

void run_pmf_significand(const ModelOpts& m, int k, bool with_asymptotic,
                         const std::string& fmt) {
  const SignificandSpec spec{m.base, k};
  SignificandPmf pmf;
  std::optional<FracLogDistribution> d;
  if (m.model == "benford") {
    pmf = benford_pmf(spec);
    if (with_asymptotic) d = benford_fraclog(m.base);
  } else if (m.model == "pareto") {
    const ParetoParams p = pareto_from_opts(m);
    pmf = pareto_pmf(p, spec);
    if (with_asymptotic) d = pareto_fraclog(p);
  } else {
    if (with_asymptotic) {
      throw CLI::ValidationError(
          "--asymptotic requires a model with a density (benford or pareto)");
    }
    pmf = general_pmf(fraclog_from_opts(m), spec);
  }
  std::vector<std::string> cols{"a", "probability"};
  if (with_asymptotic) cols.push_back("asymptotic");
  std::vector<json> rows;
  for (std::int64_t a = pmf.a_lo(); a <= pmf.a_hi(); ++a) {
    json row = json::array({a, pmf.prob(a)});
    if (with_asymptotic) row.push_back(asymptotic_prob_approx(*d, spec, a));
    rows.push_back(std::move(row));
  }
  emit_table(fmt, json{{"model", m.model}, {"base", m.base}, {"k", k}}, cols,
             rows);
}

// ---- pmf-digit ----------------------------------------------------------

void run_pmf_digit(const ModelOpts& m, int j, const std::string& fmt) {
  std::vector<json> rows;
  const int digit_lo = (j == 1) ? 1 : 0;
  if (m.model == "benford") {
    for (int a = digit_lo; a < m.base; ++a) {
      rows.push_back(json::array({a, benford_digit_pmf_closed_form(m.base, j, a)}));
    }
  } else if (m.model == "pareto") {
    const ParetoParams p = pareto_from_opts(m);
    for (int a = digit_lo; a < m.base; ++a) {
      rows.push_back(json::array({a, pareto_digit_pmf(p, j, a)}));
    }
  } else {
    throw CLI::ValidationError(
        "pmf-digit supports --model benford and --model pareto only");
  }
  emit_table(fmt, json{{"model", m.model}, {"base", m.base}, {"j", j}},
             {"a", "probability"}, rows);
}

// ---- pmf-cf -------------------------------------------------------------

void run_pmf_cf(const ModelOpts& m, int k, std::int64_t a_max,
                const std::string& approx, const std::string& law,
                const std::string& fmt) {
  std::vector<json> rows;
  json meta{{"model", m.model}, {"base", m.base}, {"k", k}, {"a_max", a_max},
            {"tail_marker", a_max + 1}};
  if (law == "gauss-kuzmin") {
    if (approx != "exact") {
      throw CLI::ValidationError("--law gauss-kuzmin cannot combine with --approx");
    }
    if (k != 1) {
      throw CLI::ValidationError("--law gauss-kuzmin is a first-coefficient law (k=1)");
    }
    meta["law"] = "gauss-kuzmin";
    for (std::int64_t a = 1; a <= a_max; ++a) {
      rows.push_back(json::array({a, gauss_kuzmin_pmf(a)}));
    }
    // The law telescopes; mass beyond a_max is log2(1 + 1/(a_max+1)).
    rows.push_back(json::array(
        {a_max + 1, std::log1p(1.0 / static_cast<double>(a_max + 1)) /
                        std::log(2.0)}));
    emit_table(fmt, std::move(meta), {"a", "probability"}, rows);
    return;
  }
  if (approx == "blachman" && m.model != "benford") {
    throw CLI::ValidationError("--approx blachman applies to --model benford only");
  }
  const FracLogDistribution d = fraclog_from_opts(m);
  if (approx == "asymptotic" && !d.has_pdf()) {
    throw CLI::ValidationError(
        "--approx asymptotic requires a model with a density");
  }
  const CfModel cm{d, a_max};
  meta["approx"] = approx;
  auto cell_value = [&](const CfVector& v, double exact) {
    if (approx == "asymptotic") return asymptotic_joint_approx(d, v);
    if (approx == "blachman") return blachman_approx(v);
    return exact;
  };
  if (k == 1) {
    const CfTable1 t = cf_table_k1(cm);
    for (std::int64_t a = 1; a <= a_max; ++a) {
      rows.push_back(json::array(
          {a, cell_value(CfVector{a}, t.probs[static_cast<std::size_t>(a - 1)])}));
    }
    rows.push_back(json::array({a_max + 1, t.tail}));
    emit_table(fmt, std::move(meta), {"a", "probability"}, rows);
    return;
  }
  const CfTable2 t = cf_table_k2(cm);
  for (std::int64_t a1 = 1; a1 <= a_max; ++a1) {
    for (std::int64_t a2 = 1; a2 <= a_max; ++a2) {
      rows.push_back(
          json::array({a1, a2, cell_value(CfVector{a1, a2}, t.cell(a1, a2))}));
    }
    rows.push_back(json::array(
        {a1, a_max + 1, t.row_tail[static_cast<std::size_t>(a1 - 1)]}));
  }
  rows.push_back(json::array({a_max + 1, nullptr, t.a1_tail}));
  emit_table(fmt, std::move(meta), {"a1", "a2", "probability"}, rows);
}

// ---- analyze ------------------------------------------------------------

void run_analyze(const ModelOpts& m, const std::string& path, int column,
                 int k, std::int64_t a_max, bool fit) {
  const Dataset ds = load_dataset(path, column);
  json out{{"source", ds.source},
           {"n", static_cast<std::int64_t>(ds.values.size())},
           {"dropped", ds.dropped}};
  FracLogDistribution d;
  std::optional<ParetoParams> pareto_p;
  int fitted_params = 0;
  if (fit) {
    if (m.model != "pareto") {
      throw CLI::ValidationError("--fit requires --model pareto");
    }
    FitResult fr;
    try {
      fr = fit_pareto(ds, m.base);
    } catch (const std::invalid_argument& e) {
      throw DataError(e.what());
    } catch (const std::domain_error& e) {
      throw DataError(e.what());
    }
    out["fit"] = fit_to_json(fr);
    pareto_p = ParetoParams::from_rho(fr.s_hat, fr.rho_hat, m.base);
    d = pareto_fraclog(*pareto_p);
    fitted_params = 2;  // shape and fractional scale both estimated
  } else {
    out["fit"] = nullptr;
    if (m.model == "pareto") pareto_p = pareto_from_opts(m);
    d = fraclog_from_opts(m);
  }
  const SignificandSpec spec{m.base, k};
  std::vector<double> probs;
  if (m.model == "benford") {
    probs = benford_pmf(spec).probs;
  } else if (pareto_p) {
    probs = pareto_pmf(*pareto_p, spec).probs;
  } else {
    probs = general_pmf(d, spec).probs;
  }
  try {
    const auto counts = empirical_significand_freqs(ds, spec);
    EmpiricalReport rep = chi_square_test(counts, probs, 5.0, fitted_params);
    json sig = report_to_json(rep);
    sig["k"] = k;
    out["significand"] = std::move(sig);
  } catch (const std::runtime_error& e) {
    throw DataError(e.what());
  }
  if (k <= 2) {
    const CfModel cm{d, a_max};
    const CfCounts cc = empirical_cf_freqs(ds, m.base, k, a_max);
    const std::vector<double> cf_probs =
        (k == 1) ? aligned_cf_probs(cf_table_k1(cm))
                 : aligned_cf_probs(cf_table_k2(cm));
    try {
      EmpiricalReport rep =
          chi_square_test(aligned_cf_counts(cc), cf_probs, 5.0, fitted_params);
      json cf = report_to_json(rep);
      cf["k"] = k;
      cf["a_max"] = a_max;
      cf["dropped"] = cc.dropped;
      out["cf"] = std::move(cf);
    } catch (const std::runtime_error& e) {
      throw DataError(e.what());
    }
  } else {
    out["cf"] = nullptr;  // joint tables exist for k <= 2 only
  }
  std::cout << out.dump() << "\n";
}

// ---- sample -------------------------------------------------------------

void run_sample(const ModelOpts& m, std::int64_t n, std::uint64_t seed,
                const std::string& out_path) {
  Dataset ds;
  if (m.model == "benford") {
    ds = sample_benford(n, m.base, seed);
  } else {
    ds = sample_pareto(n, pareto_from_opts(m), seed);
  }
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty() && out_path != "-") {
    file.open(out_path);
    if (!file) throw DataError("cannot open output file: " + out_path);
    out = &file;
  }
  for (const double x : ds.values) *out << format_double(x) << "\n";
}

// ---- fit-pareto ---------------------------------------------------------

void run_fit_pareto(const std::string& path, int column, int base,
                    const std::string& fmt) {
  const Dataset ds = load_dataset(path, column);
  FitResult fr;
  try {
    fr = fit_pareto(ds, base);
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  } catch (const std::domain_error& e) {
    throw DataError(e.what());
  }
  if (fmt == "json") {
    json out = fit_to_json(fr);
    out["source"] = ds.source;
    out["dropped"] = ds.dropped;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "s_hat\t" << format_double(fr.s_hat) << "\n"
              << "x_m_hat\t" << format_double(fr.x_m_hat) << "\n"
              << "rho_hat\t" << format_double(fr.rho_hat) << "\n"
              << "p\t" << fr.p << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Significand and continued-fraction digit laws"};
  app.require_subcommand(1);

  // pmf-significand
  auto* cmd_sig = app.add_subcommand(
      "pmf-significand", "Tabulate the k-digit significand pmf");
  ModelOpts m_sig;
  add_model_options(cmd_sig, m_sig, true);
  int sig_k = 1;
  bool sig_asym = false;
  std::string sig_fmt = "tsv";
  cmd_sig->add_option("-k", sig_k, "Significand order")
      ->check(CLI::Range(1, 18))
      ->capture_default_str();
  cmd_sig->add_flag("--asymptotic", sig_asym,
                    "Add the density-based approximation column");
  cmd_sig->add_option("--format", sig_fmt, "Output format")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();

  // pmf-digit
  auto* cmd_dig =
      app.add_subcommand("pmf-digit", "Tabulate the j-th digit pmf");
  ModelOpts m_dig;
  add_model_options(cmd_dig, m_dig, false);
  int dig_j = 1;
  std::string dig_fmt = "tsv";
  cmd_dig->add_option("-j", dig_j, "Digit position")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  cmd_dig->add_option("--format", dig_fmt, "Output format")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();

  // pmf-cf
  auto* cmd_cf = app.add_subcommand(
      "pmf-cf", "Tabulate continued-fraction coefficient pmfs");
  ModelOpts m_cf;
  add_model_options(cmd_cf, m_cf, true);
  int cf_k = 1;
  std::int64_t cf_amax = 50;
  std::string cf_approx = "exact";
  std::string cf_law;
  std::string cf_fmt = "tsv";
  cmd_cf->add_option("-k", cf_k, "Number of leading coefficients")
      ->check(CLI::Range(1, 2))
      ->capture_default_str();
  cmd_cf->add_option("--amax", cf_amax, "Tail bucket threshold")
      ->check(CLI::Range(static_cast<std::int64_t>(1),
                         static_cast<std::int64_t>(2000)))
      ->capture_default_str();
  cmd_cf->add_option("--approx", cf_approx, "Evaluation route")
      ->check(CLI::IsMember({"exact", "asymptotic", "blachman"}))
      ->capture_default_str();
  cmd_cf->add_option("--law", cf_law, "Asymptotic coefficient law")
      ->check(CLI::IsMember({"gauss-kuzmin"}));
  cmd_cf->add_option("--format", cf_fmt, "Output format")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();

  // analyze
  auto* cmd_an = app.add_subcommand(
      "analyze", "Chi-square conformance report for a dataset (JSON)");
  ModelOpts m_an;
  add_model_options(cmd_an, m_an, true);
  std::string an_path;
  int an_col = 1, an_k = 1;
  std::int64_t an_amax = 50;
  bool an_fit = false;
  cmd_an->add_option("path", an_path, "Dataset file, or - for stdin")
      ->required();
  cmd_an->add_option("--column", an_col, "1-based column to read")
      ->check(CLI::Range(1, 4096))
      ->capture_default_str();
  cmd_an->add_option("-k", an_k, "Significand order")
      ->check(CLI::Range(1, 18))
      ->capture_default_str();
  cmd_an->add_option("--amax", an_amax, "CF tail bucket threshold")
      ->check(CLI::Range(static_cast<std::int64_t>(1),
                         static_cast<std::int64_t>(2000)))
      ->capture_default_str();
  cmd_an->add_flag("--fit", an_fit, "Fit Pareto parameters before testing");

  // sample
  auto* cmd_sm =
      app.add_subcommand("sample", "Write pseudorandom samples of a model");
  ModelOpts m_sm;
  add_model_options(cmd_sm, m_sm, false);
  std::int64_t sm_n = 0;
  std::uint64_t sm_seed = 0;
  std::string sm_out;
  cmd_sm->add_option("-n", sm_n, "Sample count")
      ->required()
      ->check(CLI::Range(static_cast<std::int64_t>(0),
                         static_cast<std::int64_t>(1000000000)));
  cmd_sm->add_option("--seed", sm_seed, "RNG seed")->capture_default_str();
  cmd_sm->add_option("-o,--output", sm_out, "Output file (default stdout)");

  // fit-pareto
  auto* cmd_ft = app.add_subcommand(
      "fit-pareto", "Maximum-likelihood Pareto fit of a dataset");
  std::string ft_path, ft_fmt = "json";
  int ft_col = 1, ft_base = 10;
  cmd_ft->add_option("path", ft_path, "Dataset file, or - for stdin")
      ->required();
  cmd_ft->add_option("--column", ft_col, "1-based column to read")
      ->check(CLI::Range(1, 4096))
      ->capture_default_str();
  cmd_ft->add_option("-b,--base", ft_base, "Positional base b")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  cmd_ft->add_option("--format", ft_fmt, "Output format")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
    if (cmd_sig->parsed()) {
      run_pmf_significand(m_sig, sig_k, sig_asym, sig_fmt);
    } else if (cmd_dig->parsed()) {
      run_pmf_digit(m_dig, dig_j, dig_fmt);
    } else if (cmd_cf->parsed()) {
      run_pmf_cf(m_cf, cf_k, cf_amax, cf_approx, cf_law, cf_fmt);
    } else if (cmd_an->parsed()) {
      run_analyze(m_an, an_path, an_col, an_k, an_amax, an_fit);
    } else if (cmd_sm->parsed()) {
      run_sample(m_sm, sm_n, sm_seed, sm_out);
    } else if (cmd_ft->parsed()) {
      run_fit_pareto(ft_path, ft_col, ft_base, ft_fmt);
    }
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
