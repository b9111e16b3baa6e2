#include "dioph/cli/run.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dioph/acceptance.hpp"
#include "dioph/circle_method.hpp"
#include "dioph/constants.hpp"
#include "dioph/exp_sums.hpp"
#include "dioph/s0.hpp"
#include "dioph/search.hpp"
#include "dioph/singular_series.hpp"

namespace dioph::cli {

namespace {

using json = nlohmann::ordered_json;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  json doc;
  Table table;
  /// Set when the rows were already streamed to the output (search --format csv).
  bool streamed = false;
};

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

json paper_constants() {
  json j;
  j["C"] = std::string(kLiteralC);
  j["c4"] = kC4;
  j["D"] = std::string(kLiteralD);
  j["D1"] = std::string(kLiteralD1);
  j["nu"] = std::string(kLiteralNu);
  j["c5_upper_bound"] = std::string(kLiteralC5Bound);
  j["liwang_nu"] = std::string(kLiteralLiWangNu);
  return j;
}

json system_block(const CoefficientSystem& sys, unsigned digits) {
  json j;
  json lambda = json::array(), ratio = json::array(), mu = json::array();
  for (const auto& l : sys.lambda) lambda.push_back(l.to_string(digits));
  for (const auto& r : sys.ratio) ratio.push_back(r.to_string());
  for (const auto& m : sys.mu) mu.push_back(m.to_string(digits));
  j["lambda"] = lambda;
  j["ratio"] = ratio;
  j["mu"] = mu;
  j["varpi"] = sys.varpi.to_string(digits);
  j["eta"] = sys.eta.to_string(digits);
  j["eps"] = sys.eps.to_string(digits);
  j["eta_limit"] = sys.eta_limit.to_string(digits);
  j["eta_warning"] = sys.eta_warning;
  j["negated"] = sys.negated;
  j["swapped"] = sys.swapped;
  j["ratio_irrational"] = sys.ratio_irrational;
  return j;
}

Report cmd_s0(const RunConfig& cfg) {
  const auto sys = validate_system(cfg.raw_system());
  const auto r = build_s0_report(sys);
  const unsigned d = cfg.precision;
  Report rep;
  auto& j = rep.doc;
  j["command"] = "s0";
  j["system"] = system_block(sys, d);
  j["s0_ours"] = r.s0_ours;
  j["s0_liwang"] = r.s0_liwang;
  j["ceiling_argument"] = r.ceiling_argument.to_string(d);
  j["liwang_ceiling_argument"] = r.liwang_ceiling_argument.to_string(d);
  j["ours_near_integer"] = r.ours_near_integer;
  j["liwang_near_integer"] = r.liwang_near_integer;
  j["capital_C"] = r.capital_C.to_string(d);
  j["sum_abs_lambda"] = r.sum_abs_lambda.to_string(d);
  j["c1"] = r.c1.to_string(d);
  j["c2_at_s0"] = r.c2_at_s0.to_string(d);
  j["c2_at_s0_minus_1"] = r.c2_at_s0_minus_1.to_string(d);
  j["arc_condition_holds"] = r.arc_condition_holds;
  j["liwang_C1"] = r.C1_liwang.to_string(d);
  j["gain"] = r.gain.to_string(d);
  rep.table.header = {"quantity", "value"};
  rep.table.rows = {{"s0_ours", std::to_string(r.s0_ours)},
                    {"s0_liwang", std::to_string(r.s0_liwang)},
                    {"ceiling_argument", r.ceiling_argument.to_string(d)},
                    {"liwang_ceiling_argument", r.liwang_ceiling_argument.to_string(d)},
                    {"gain", r.gain.to_string(d)}};
  return rep;
}

Report cmd_constants(const RunConfig& cfg) {
  const unsigned d = cfg.precision;
  Report rep;
  auto& j = rep.doc;
  j["command"] = "constants";
  json list = json::array();
  rep.table.header = {"name", "value", "provenance"};
  for (const auto& c : all_named_constants(d)) {
    list.push_back({{"name", c.name}, {"value", c.value.to_string(d)}, {"provenance", std::string(to_string(c.provenance))}});
    rep.table.rows.push_back({c.name, c.value.to_string(d), std::string(to_string(c.provenance))});
  }
  j["constants"] = list;

  json series = json::array();
  for (const auto n : cfg.n_list) {
    if (n <= 0) throw ValidationError("constants: n = " + std::to_string(n) + " must be positive");
    const auto un = static_cast<std::uint64_t>(n);
    const auto sp = sigma_prime(un, d);
    const auto sdp = sigma_double_prime(un, d);
    json row{{"n", n},
             {"sigma_prime", sp.exact.to_string()},
             {"sigma_prime_decimal", sp.decimal.to_string(d)},
             {"sigma_double_prime", sdp.exact.to_string()},
             {"sigma_double_prime_decimal", sdp.decimal.to_string(d)}};
    std::vector<std::string> csv{std::to_string(n), sp.exact.to_string(), sdp.exact.to_string(), ""};
    if (n % 24 == 0) {
      const auto sm = sigma_minus(n, d);
      row["sigma_minus"] = sm.exact.to_string();
      row["sigma_minus_decimal"] = sm.decimal.to_string(d);
      csv[3] = sm.exact.to_string();
    }
    series.push_back(row);
    rep.table.rows.push_back({"sigma(" + csv[0] + ")", csv[1] + " | " + csv[2] + (csv[3].empty() ? "" : " | " + csv[3]),
                              "exact"});
  }
  j["singular_series"] = series;
  return rep;
}

Report cmd_search(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.X) throw ConfigError("search needs X (--X or [run] X)");
  const auto sys = validate_system(cfg.raw_system());
  SearchParams params;
  params.X = *cfg.X;
  params.s = cfg.s;
  params.range_eps = cfg.range_eps;
  params.L = cfg.L;
  SearchOptions opts;
  opts.workers = cfg.workers;
  opts.sample_limit = cfg.sample;
  Report rep;
  if (cfg.format == Format::csv) {
    rep.streamed = true;
    out << "p1,p2,p3,m,form_value,weight\n";
    opts.sink = [&](const SolutionRecord& r) {
      std::string m;
      for (std::size_t i = 0; i < r.m.size(); ++i) m += (i ? ";" : "") + std::to_string(r.m[i]);
      out << r.p1 << ',' << r.p2 << ',' << r.p3 << ',' << m << ',' << r.form_value.to_string(20) << ','
          << num(r.weight) << '\n';
    };
  }
  const auto c = count_solutions(sys, params, opts);
  auto& j = rep.doc;
  j["command"] = "search";
  j["system"] = system_block(sys, cfg.precision);
  j["X"] = c.X;
  j["range_eps"] = c.range_eps;
  j["s"] = c.s;
  j["L"] = c.L;
  j["count"] = c.count;
  j["weighted_sum"] = c.weighted_sum;
  j["linear_primes"] = c.linear_primes;
  j["square_primes"] = c.square_primes;
  j["borderline_checks"] = c.borderline_checks;
  json flags = json::array();
  if (c.empty_range) flags.push_back("empty-range");
  if (c.x_is_convergent_square) flags.push_back("x-is-convergent-square");
  if (sys.eta_warning) flags.push_back("eta-above-limit");
  j["flags"] = flags;
  json records = json::array();
  for (const auto& r : c.sample) {
    records.push_back({{"p1", r.p1},
                       {"p2", r.p2},
                       {"p3", r.p3},
                       {"m", r.m},
                       {"form_value", r.form_value.to_string(20)},
                       {"weight", r.weight}});
  }
  j["records"] = records;
  j["records_truncated"] = c.count > c.sample.size();
  rep.table.header = {"quantity", "value"};
  rep.table.rows = {{"count", std::to_string(c.count)}, {"weighted_sum", num(c.weighted_sum)}, {"L", std::to_string(c.L)}};
  return rep;
}

Report cmd_measure(const RunConfig& cfg) {
  std::vector<int> Ls = cfg.L ? std::vector<int>{*cfg.L} : std::vector<int>{8, 10, 12, 14, 16};
  MeasureOptions opts;
  opts.workers = cfg.workers;
  opts.markov_k = cfg.k;
  Report rep;
  auto& j = rep.doc;
  j["command"] = "measure";
  j["nu"] = cfg.nu;
  json rows = json::array();
  rep.table.header = {"L", "resolution", "measure", "markov_k", "markov_bound"};
  std::vector<double> xs, ys;
  for (int L : Ls) {
    const auto m = measure_exceed(cfg.nu, L, std::uint64_t{1} << (L + 6), opts);
    rows.push_back({{"L", m.L},
                    {"resolution", m.grid_resolution},
                    {"measure", m.estimated_measure},
                    {"refinement_depth", m.refinement_depth},
                    {"markov_k", m.markov_bound_k},
                    {"markov_bound", m.markov_bound_value}});
    rep.table.rows.push_back({std::to_string(m.L), std::to_string(m.grid_resolution), num(m.estimated_measure),
                              std::to_string(m.markov_bound_k), num(m.markov_bound_value)});
    if (m.estimated_measure > 0) {
      xs.push_back(L);
      ys.push_back(std::log2(m.estimated_measure));
    }
  }
  j["sweep"] = rows;
  if (xs.size() >= 2) {
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) mx += xs[i], my += ys[i];
    mx /= xs.size();
    my /= ys.size();
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) sxy += (xs[i] - mx) * (ys[i] - my), sxx += (xs[i] - mx) * (xs[i] - mx);
    j["log2_measure_slope"] = sxy / sxx;
  }
  return rep;
}

Report cmd_selberg(const RunConfig& cfg) {
  const double X = cfg.X.value_or(1e4);
  std::vector<double> hs = cfg.h;
  if (hs.empty()) {
    for (double h : {10.0, 100.0, 1000.0}) {
      if (h <= X) hs.push_back(h);
    }
  }
  Report rep;
  auto& j = rep.doc;
  j["command"] = "selberg";
  j["X"] = X;
  j["eps"] = cfg.range_eps;
  json rows = json::array();
  rep.table.header = {"h", "J", "Jstar", "J_over_hX"};
  for (double h : hs) {
    const double J = selberg_J(X, h, cfg.range_eps);
    const double Js = selberg_Jstar(X, h, cfg.range_eps);
    rows.push_back({{"h", h}, {"J", J}, {"Jstar", Js}, {"J_over_hX", J / (h * X)}});
    rep.table.rows.push_back({num(h), num(J), num(Js), num(J / (h * X))});
  }
  j["table"] = rows;
  return rep;
}

Report cmd_verify(const RunConfig& cfg, bool& passed) {
  acceptance::Options opts;
  opts.workers = cfg.workers;
  opts.only = cfg.only;
  const auto results = acceptance::run_all(opts);
  passed = acceptance::all_passed(results);
  Report rep;
  auto& j = rep.doc;
  j["command"] = "verify";
  json list = json::array();
  // Timings are left out so that reports stay byte-identical between runs.
  rep.table.header = {"id", "name", "outcome", "detail"};
  for (const auto& r : results) {
    list.push_back({{"id", r.id},
                    {"name", r.name},
                    {"outcome", std::string(acceptance::to_string(r.outcome))},
                    {"detail", r.detail}});
    rep.table.rows.push_back({std::to_string(r.id), r.name, std::string(acceptance::to_string(r.outcome)), r.detail});
  }
  j["criteria"] = list;
  j["passed"] = passed;
  return rep;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

void write_text(std::ostream& os, const json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) write_text(os, v, prefix.empty() ? k : prefix + "." + k);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) write_text(os, j[i], prefix + "[" + std::to_string(i) + "]");
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

void emit(const RunConfig& cfg, Report& rep, std::ostream& os) {
  rep.doc["paper_constants"] = paper_constants();
  switch (cfg.format) {
    case Format::json:
      os << rep.doc.dump(2) << '\n';
      break;
    case Format::text:
      write_text(os, rep.doc, "");
      break;
    case Format::csv:
      if (rep.streamed) break;
      for (const auto& [k, v] : rep.doc["paper_constants"].items()) {
        os << "# " << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      }
      for (std::size_t i = 0; i < rep.table.header.size(); ++i) os << (i ? "," : "") << rep.table.header[i];
      os << '\n';
      for (const auto& row : rep.table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
        os << '\n';
      }
      break;
  }
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* os = &out;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      err << "error: cannot write " << cfg.out << '\n';
      return kInvalidInput;
    }
    os = &file;
  }
  try {
    bool passed = true;
    Report rep;
    if (cfg.subcommand == "s0") {
      rep = cmd_s0(cfg);
    } else if (cfg.subcommand == "constants") {
      rep = cmd_constants(cfg);
    } else if (cfg.subcommand == "search") {
      rep = cmd_search(cfg, *os);
    } else if (cfg.subcommand == "measure") {
      rep = cmd_measure(cfg);
    } else if (cfg.subcommand == "selberg") {
      rep = cmd_selberg(cfg);
    } else if (cfg.subcommand == "verify") {
      rep = cmd_verify(cfg, passed);
    } else {
      err << "error: unknown subcommand '" << cfg.subcommand << "'\n";
      return kInvalidInput;
    }
    emit(cfg, rep, *os);
    os->flush();
    if (!passed) {
      err << "verification failed\n";
      return kVerificationFailed;
    }
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prime/power-of-two Diophantine inequality toolkit", "dioph"};
  app.set_help_flag("--help", "Print this help");
  app.require_subcommand(1, 1);

  std::string config_path, out_path, format;
  unsigned precision = 0, workers = 0, k = 0;
  double X = 0, nu = 0, range_eps = 0;
  std::size_t s = 0, sample = 0;
  int L = 0;
  std::string eta, eps;
  std::vector<std::string> lambda, ratio;
  std::vector<double> h;
  std::vector<std::int64_t> n_list;
  std::vector<int> only;

  auto* o_config = app.add_option("--config", config_path, "TOML file with [lambda], [mu], [run]");
  auto* o_out = app.add_option("--out", out_path, "Write the report here instead of stdout");
  auto* o_format = app.add_option("--format", format, "json, csv or text");
  auto* o_precision = app.add_option("--precision", precision, "Decimal digits (at least 30)");
  auto* o_workers = app.add_option("--workers", workers, "Worker threads; 1 is bitwise deterministic");
  auto* o_X = app.add_option("--X", X, "Size parameter");
  auto* o_s = app.add_option("--s", s, "Number of power-of-two terms searched");
  auto* o_L = app.add_option("--L", L, "Exponent range 1..L");
  auto* o_eta = app.add_option("--eta", eta, "Inequality width");
  auto* o_eps = app.add_option("--eps", eps, "Epsilon of the s0 formula");
  auto* o_range = app.add_option("--range-eps", range_eps, "Prime ranges are [range_eps X, X]");
  auto* o_nu = app.add_option("--nu", nu, "Threshold for the exceptional-set measure");
  auto* o_k = app.add_option("--k", k, "Moment used in the Markov bound");
  auto* o_h = app.add_option("--h", h, "Selberg interval lengths");
  auto* o_lambda = app.add_option("--lambda", lambda, "lambda_1 lambda_2 lambda_3")->expected(3);
  auto* o_ratio = app.add_option("--ratio", ratio, "lambda_i / mu_i as rationals")->expected(3);
  auto* o_n = app.add_option("--n", n_list, "n values for the singular-series table");
  auto* o_sample = app.add_option("--sample", sample, "Records kept in the JSON report");
  auto* o_only = app.add_option("--only", only, "Criterion ids for verify");

  for (const char* name : {"s0", "constants", "search", "measure", "selberg", "verify"}) {
    app.add_subcommand(name)->fallthrough();
  }
  app.get_subcommand("s0")->description("Sufficient number of powers of two, with the Li-Wang comparison");
  app.get_subcommand("constants")->description("Named constants and a singular-series table");
  app.get_subcommand("search")->description("Count solutions of the inequality up to X");
  app.get_subcommand("measure")->description("Exceptional-set measure sweep over L");
  app.get_subcommand("selberg")->description("Selberg integrals J and J* for a set of h");
  app.get_subcommand("verify")->description("Run the acceptance checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  RunConfig cfg;
  cfg.subcommand = app.get_subcommands().front()->get_name();
  try {
    if (o_config->count()) load_toml_file(config_path, cfg);
    if (o_out->count()) cfg.out = out_path;
    if (o_format->count()) cfg.format = parse_format(format);
    if (o_precision->count()) cfg.precision = precision;
    if (o_workers->count()) cfg.workers = workers;
    if (o_X->count()) cfg.X = X;
    if (o_s->count()) cfg.s = s;
    if (o_L->count()) cfg.L = L;
    if (o_eta->count()) cfg.eta = eta;
    if (o_eps->count()) cfg.eps = eps;
    if (o_range->count()) cfg.range_eps = range_eps;
    if (o_nu->count()) cfg.nu = nu;
    if (o_k->count()) cfg.k = k;
    if (o_h->count()) cfg.h = h;
    if (o_lambda->count()) cfg.lambda = std::array<std::string, 3>{lambda[0], lambda[1], lambda[2]};
    if (o_ratio->count()) cfg.ratio = std::array<std::string, 3>{ratio[0], ratio[1], ratio[2]};
    if (o_n->count()) cfg.n_list = n_list;
    if (o_sample->count()) cfg.sample = sample;
    if (o_only->count()) cfg.only = only;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return run(cfg, out, err);
}

}  // namespace dioph::cli
