#include "asadmm/io.hpp"

#include <yaml-cpp/yaml.h>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace asadmm {

ParseError::ParseError(const std::string& source, std::size_t line,
                       const std::string& what)
    : std::runtime_error(source + (line ? ":" + std::to_string(line) : "") +
                         ": " + what),
      line_(line) {}

namespace {

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t b = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

// from_chars rejects a leading '+', which LIBSVM labels commonly carry.
std::optional<double> to_double(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return v;
}

std::optional<std::uint64_t> to_u64(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return v;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return in;
}

}  // namespace

Dataset parse_libsvm(std::istream& in, const LibsvmOptions& opts,
                     const std::string& source, LibsvmStats* stats) {
  std::vector<std::size_t> row_ptr{0};
  std::vector<std::size_t> cols;
  std::vector<double> vals;
  std::vector<double> labels;
  std::size_t max_col = 0;
  std::size_t relabeled = 0;
  std::size_t zero_line = 0;
  std::size_t minus_line = 0;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = line;
    if (const auto hash = body.find('#'); hash != std::string_view::npos) {
      body = body.substr(0, hash);
    }
    const auto toks = tokens(body);
    if (toks.empty()) continue;

    const auto label = to_double(toks[0]);
    if (!label) {
      throw ParseError(source, lineno,
                       "bad label '" + std::string(toks[0]) + "'");
    }
    double y = *label;
    if (y == 0.0 && opts.normalize_01_labels) {
      y = -1.0;
      ++relabeled;
      zero_line = zero_line ? zero_line : lineno;
    } else if (y == -1.0) {
      minus_line = minus_line ? minus_line : lineno;
    } else if (y != 1.0) {
      throw ParseError(source, lineno,
                       "label " + std::string(toks[0]) + " is not +-1 or 0/1");
    }
    // A file mixing 0 and -1 labels has no consistent reading.
    if (zero_line && minus_line) {
      throw ParseError(source, lineno, "labels mix 0 and -1 (first at lines " +
                                           std::to_string(zero_line) + " and " +
                                           std::to_string(minus_line) + ")");
    }
    labels.push_back(y);

    std::size_t prev = 0;
    for (std::size_t t = 1; t < toks.size(); ++t) {
      const auto colon = toks[t].find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(source, lineno,
                         "expected idx:val, got '" + std::string(toks[t]) + "'");
      }
      const auto idx = to_u64(toks[t].substr(0, colon));
      const auto val = to_double(toks[t].substr(colon + 1));
      if (!idx || *idx == 0) {
        throw ParseError(source, lineno,
                         "bad feature index in '" + std::string(toks[t]) + "'");
      }
      if (!val || !std::isfinite(*val)) {
        throw ParseError(source, lineno,
                         "bad feature value in '" + std::string(toks[t]) + "'");
      }
      if (*idx <= prev) {
        throw ParseError(source, lineno, "feature indices must increase");
      }
      if (opts.num_features && *idx > opts.num_features) {
        throw ParseError(source, lineno,
                         "feature index " + std::to_string(*idx) +
                             " exceeds num_features " +
                             std::to_string(opts.num_features));
      }
      prev = *idx;
      max_col = std::max<std::size_t>(max_col, *idx);
      cols.push_back(*idx - 1);
      vals.push_back(*val);
    }
    row_ptr.push_back(cols.size());
  }
  if (in.bad()) throw IoError(source + ": read failure");

  Dataset ds;
  const std::size_t l = opts.num_features ? opts.num_features : max_col;
  ds.features = SparseMat::from_csr(labels.size(), l, std::move(row_ptr),
                                    std::move(cols), std::move(vals));
  ds.labels = std::move(labels);
  if (stats) {
    stats->samples = ds.labels.size();
    stats->relabeled = relabeled;
  }
  return ds;
}

Dataset parse_libsvm(const std::filesystem::path& path,
                     const LibsvmOptions& opts, LibsvmStats* stats) {
  auto in = open_in(path);
  return parse_libsvm(in, opts, path.string(), stats);
}

void write_libsvm(std::ostream& out, const Dataset& ds) {
  for (std::size_t j = 0; j < ds.num_samples(); ++j) {
    out << (ds.labels[j] > 0.0 ? "+1" : "-1");
    const auto row = ds.features.row(j);
    for (std::size_t k = 0; k < row.cols.size(); ++k) {
      out << ' ' << row.cols[k] + 1 << ':' << format_real(row.values[k]);
    }
    out << '\n';
  }
  if (!out) throw IoError("libsvm write failure");
}

void write_libsvm(const std::filesystem::path& path, const Dataset& ds) {
  auto out = open_out(path);
  write_libsvm(out, ds);
}

void write_metrics_csv(std::ostream& out,
                       const std::vector<MetricsRecord>& trace) {
  out << kMetricsHeader << '\n';
  for (const auto& r : trace) {
    out << r.k << ',' << format_real(r.obj_err) << ','
        << format_real(r.equ_err) << ',' << format_real(r.opt_err) << ','
        << r.grad_components << ',' << format_real(r.wall_seconds) << ','
        << (r.ergodic ? 1 : 0) << '\n';
  }
  if (!out) throw IoError("metrics write failure");
}

void write_metrics_csv(const std::filesystem::path& path,
                       const std::vector<MetricsRecord>& trace) {
  auto out = open_out(path);
  write_metrics_csv(out, trace);
}

namespace {

// from_chars does not accept "nan"/"inf" spellings from every printf, so
// handle them explicitly.
std::optional<double> csv_real(std::string_view s) {
  if (s == "nan" || s == "-nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  return to_double(s);
}

}  // namespace

std::vector<MetricsRecord> read_metrics_csv(std::istream& in,
                                            const std::string& source) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != kMetricsHeader) {
    throw ParseError(source, 1, "missing or unexpected header");
  }
  std::vector<MetricsRecord> trace;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto f = split(trim(line), ',');
    if (f.size() != 7) {
      throw ParseError(source, lineno, "expected 7 fields");
    }
    const auto k = to_u64(f[0]);
    const auto obj = csv_real(f[1]);
    const auto equ = csv_real(f[2]);
    const auto opt = csv_real(f[3]);
    const auto grads = to_u64(f[4]);
    const auto wall = csv_real(f[5]);
    if (!k || !obj || !equ || !opt || !grads || !wall ||
        (f[6] != "0" && f[6] != "1")) {
      throw ParseError(source, lineno, "malformed field");
    }
    trace.push_back({*k, *obj, *equ, *opt, *grads, *wall, f[6] == "1"});
  }
  return trace;
}

std::vector<MetricsRecord> read_metrics_csv(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_metrics_csv(in, path.string());
}

// ---------------------------------------------------------------------------
// Configuration

namespace {

[[noreturn]] void bad_value(const std::string& key, const std::string& value,
                            const std::string& expected) {
  throw ConfigError(key + ": cannot parse '" + value + "' as " + expected);
}

double parse_real(const std::string& key, const std::string& v) {
  const auto r = to_double(trim(v));
  if (!r || !std::isfinite(*r)) bad_value(key, v, "a finite number");
  return *r;
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  const auto r = to_u64(trim(v));
  if (!r) bad_value(key, v, "a non-negative integer");
  return *r;
}

bool parse_bool(const std::string& key, const std::string& v) {
  const auto t = trim(v);
  if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
  if (t == "false" || t == "0" || t == "no" || t == "off") return false;
  bad_value(key, v, "a boolean");
}

bool is_unset(const std::string& v) {
  const auto t = trim(v);
  return t.empty() || t == "~" || t == "null" || t == "auto";
}

template <class Enum, class FromString>
Enum parse_enum(const std::string& key, const std::string& v,
                FromString from_string) {
  try {
    return from_string(trim(v));
  } catch (const std::exception& e) {
    throw ConfigError(key + ": " + e.what());
  }
}

template <class Ref>
ConfigField real_field(std::string key, std::string help, Ref ref) {
  return {key, std::move(help),
          [ref, key](RunConfig& c, const std::string& v) {
            ref(c) = parse_real(key, v);
          },
          [ref](const RunConfig& c) -> std::optional<std::string> {
            return format_real(ref(c));
          }};
}

template <class Ref>
ConfigField opt_real_field(std::string key, std::string help, Ref ref) {
  return {key, std::move(help),
          [ref, key](RunConfig& c, const std::string& v) {
            if (is_unset(v)) {
              ref(c).reset();
            } else {
              ref(c) = parse_real(key, v);
            }
          },
          [ref](const RunConfig& c) -> std::optional<std::string> {
            if (!ref(c)) return std::nullopt;
            return format_real(*ref(c));
          }};
}

template <class Ref>
ConfigField count_field(std::string key, std::string help, Ref ref) {
  return {key, std::move(help),
          [ref, key](RunConfig& c, const std::string& v) {
            ref(c) = static_cast<std::remove_reference_t<decltype(ref(c))>>(
                parse_u64(key, v));
          },
          [ref](const RunConfig& c) -> std::optional<std::string> {
            return std::to_string(ref(c));
          }};
}

template <class Ref>
ConfigField opt_count_field(std::string key, std::string help, Ref ref) {
  return {key, std::move(help),
          [ref, key](RunConfig& c, const std::string& v) {
            if (is_unset(v)) {
              ref(c).reset();
            } else {
              ref(c) = parse_u64(key, v);
            }
          },
          [ref](const RunConfig& c) -> std::optional<std::string> {
            if (!ref(c)) return std::nullopt;
            return std::to_string(*ref(c));
          }};
}

template <class Ref>
ConfigField bool_field(std::string key, std::string help, Ref ref) {
  return {key, std::move(help),
          [ref, key](RunConfig& c, const std::string& v) {
            ref(c) = parse_bool(key, v);
          },
          [ref](const RunConfig& c) -> std::optional<std::string> {
            return ref(c) ? "true" : "false";
          }};
}

template <class Ref, class FromString>
ConfigField enum_field(std::string key, std::string help, Ref ref,
                       FromString from_string) {
  return {key, std::move(help),
          [ref, key, from_string](RunConfig& c, const std::string& v) {
            using E = std::remove_reference_t<decltype(ref(c))>;
            ref(c) = parse_enum<E>(key, v, from_string);
          },
          [ref](const RunConfig& c) -> std::optional<std::string> {
            return std::string(to_string(ref(c)));
          }};
}

std::vector<ConfigField> make_fields() {
  std::vector<ConfigField> f;
  // Problem
  f.push_back(enum_field(
      "problem", "synthetic | libsvm",
      [](auto& c) -> auto& { return c.problem.kind; },
      problem_kind_from_string));
  f.push_back({"data_path", "LIBSVM file for problem = libsvm",
               [](RunConfig& c, const std::string& v) {
                 c.problem.data_path = std::string(trim(v));
               },
               [](const RunConfig& c) -> std::optional<std::string> {
                 if (c.problem.data_path.empty()) return std::nullopt;
                 return c.problem.data_path;
               }});
  f.push_back(count_field("num_samples", "synthetic sample count N",
                          [](auto& c) -> auto& { return c.problem.num_samples; }));
  f.push_back(count_field("num_features", "synthetic feature count l",
                          [](auto& c) -> auto& { return c.problem.num_features; }));
  f.push_back(real_field("sparsity", "fraction of nonzero planted weights",
                         [](auto& c) -> auto& { return c.problem.sparsity; }));
  f.push_back(count_field("data_seed", "seed of the synthetic data",
                          [](auto& c) -> auto& { return c.problem.data_seed; }));
  f.push_back(real_field("mu", "l1 weight",
                         [](auto& c) -> auto& { return c.problem.mu; }));
  f.push_back(enum_field(
      "constraint", "identity | stacked_graph",
      [](auto& c) -> auto& { return c.problem.constraint; },
      constraint_kind_from_string));
  f.push_back(real_field(
      "graph_threshold", "correlation threshold for graph rows",
      [](auto& c) -> auto& { return c.problem.graph_threshold; }));
  // Runs
  f.push_back({"solvers", "comma separated: as_admm, ladmm, det_admm",
               [](RunConfig& c, const std::string& v) {
                 std::vector<SolverKind> out;
                 for (auto part : split(v, ',')) {
                   if (trim(part).empty()) continue;
                   out.push_back(parse_enum<SolverKind>(
                       "solvers", std::string(part), solver_kind_from_string));
                 }
                 c.solvers = std::move(out);
               },
               [](const RunConfig& c) -> std::optional<std::string> {
                 std::string s;
                 for (auto k : c.solvers) {
                   if (!s.empty()) s += ',';
                   s += to_string(k);
                 }
                 return s;
               }});
  f.push_back({"seeds", "comma separated sampler seeds",
               [](RunConfig& c, const std::string& v) {
                 std::vector<std::uint64_t> out;
                 for (auto part : split(v, ',')) {
                   if (trim(part).empty()) continue;
                   out.push_back(parse_u64("seeds", std::string(part)));
                 }
                 c.seeds = std::move(out);
               },
               [](const RunConfig& c) -> std::optional<std::string> {
                 std::string s;
                 for (auto k : c.seeds) {
                   if (!s.empty()) s += ',';
                   s += std::to_string(k);
                 }
                 return s;
               }});
  f.push_back({"output_dir", "directory for traces and aggregates",
               [](RunConfig& c, const std::string& v) {
                 c.output_dir = std::string(trim(v));
               },
               [](const RunConfig& c) -> std::optional<std::string> {
                 return c.output_dir;
               }});
  f.push_back(real_field("time_budget_seconds", "per-run wall limit, 0 = none",
                         [](auto& c) -> auto& { return c.time_budget_seconds; }));
  f.push_back(count_field("threads", "parallel runs, 0 = hardware count",
                          [](auto& c) -> auto& { return c.threads; }));
  f.push_back(enum_field(
      "plot_axis", "grad_components | wall_seconds",
      [](auto& c) -> auto& { return c.plot_axis; }, plot_axis_from_string));
  f.push_back(bool_field("plot_split", "raw for the first third, then ergodic",
                         [](auto& c) -> auto& { return c.plot_split; }));
  // AS-ADMM
  f.push_back(real_field("beta", "penalty parameter",
                         [](auto& c) -> auto& { return c.solver.beta; }));
  f.push_back(real_field("s", "dual step, in (0, 1.618]",
                         [](auto& c) -> auto& { return c.solver.s; }));
  f.push_back(real_field("sigma", "H = sigma I",
                         [](auto& c) -> auto& { return c.solver.sigma; }));
  f.push_back(enum_field(
      "schedule", "power | constant | geometric",
      [](auto& c) -> auto& { return c.solver.schedule.kind; },
      schedule_kind_from_string));
  f.push_back(opt_real_field("c1", "eta numerator, default 1/nu",
                             [](auto& c) -> auto& { return c.solver.schedule.c1; }));
  f.push_back(opt_real_field("c2", "eta ceiling, default 1/(2 nu)",
                             [](auto& c) -> auto& { return c.solver.schedule.c2; }));
  f.push_back(real_field("c3", "inner-step growth coefficient",
                         [](auto& c) -> auto& { return c.solver.schedule.c3; }));
  f.push_back(real_field("rho_exp", "inner-step growth exponent",
                         [](auto& c) -> auto& { return c.solver.schedule.rho_exp; }));
  f.push_back(count_field("m_floor", "minimum inner steps M",
                          [](auto& c) -> auto& { return c.solver.schedule.M_floor; }));
  f.push_back(real_field("eta_const", "eta for the constant schedule",
                         [](auto& c) -> auto& { return c.solver.schedule.eta_const; }));
  f.push_back(real_field("theta", "geometric schedule rate",
                         [](auto& c) -> auto& { return c.solver.schedule.theta; }));
  f.push_back(count_field("m_cap", "geometric schedule ceiling",
                          [](auto& c) -> auto& { return c.solver.schedule.M_cap; }));
  f.push_back(bool_field("adaptive_rho", "adapt rho_k to the curvature of A",
                         [](auto& c) -> auto& { return c.solver.adaptive_prox.enabled; }));
  f.push_back(real_field("rho0", "initial (or fixed) rho",
                         [](auto& c) -> auto& { return c.solver.adaptive_prox.rho0; }));
  f.push_back(real_field("rho_min", "initial rho floor",
                         [](auto& c) -> auto& { return c.solver.adaptive_prox.rho_min; }));
  f.push_back(real_field("rho_growth", "floor growth factor",
                         [](auto& c) -> auto& { return c.solver.adaptive_prox.growth; }));
  f.push_back({"y_mode", "exact | linearized",
               [](RunConfig& c, const std::string& v) {
                 const auto t = trim(v);
                 if (t == "exact") {
                   c.solver.y_mode = YMode::kExactProx;
                 } else if (t == "linearized") {
                   c.solver.y_mode = YMode::kLinearized;
                 } else {
                   bad_value("y_mode", v, "exact or linearized");
                 }
               },
               [](const RunConfig& c) -> std::optional<std::string> {
                 return c.solver.y_mode == YMode::kExactProx ? "exact"
                                                             : "linearized";
               }});
  f.push_back(real_field("tau", "linearized y-step weight",
                         [](auto& c) -> auto& { return c.solver.tau; }));
  f.push_back(count_field("max_outer", "outer iterations",
                          [](auto& c) -> auto& { return c.solver.max_outer; }));
  f.push_back(real_field("obj_tol", "stop when ergodic obj_err <= obj_tol",
                         [](auto& c) -> auto& { return c.solver.obj_tol; }));
  f.push_back(real_field("feas_tol", "... and equ_err <= feas_tol",
                         [](auto& c) -> auto& { return c.solver.feas_tol; }));
  f.push_back(count_field("ergodic_kappa", "first iteration in the mean",
                          [](auto& c) -> auto& { return c.solver.ergodic_kappa; }));
  f.push_back(real_field("divergence_factor", "abort above this residual ratio",
                         [](auto& c) -> auto& { return c.solver.divergence_factor; }));
  f.push_back(bool_field("record_wall_time", "false writes wall_seconds = 0",
                         [](auto& c) -> auto& { return c.solver.record_wall_time; }));
  // Sampler
  f.push_back(enum_field(
      "sampler", "plain | svrg_anchor | minibatch",
      [](auto& c) -> auto& { return c.sampler.mode; },
      sampler_mode_from_string));
  f.push_back(real_field("batch_c", "mini-batch size coefficient",
                         [](auto& c) -> auto& { return c.sampler.batch_c; }));
  f.push_back(real_field("batch_rho", "mini-batch growth exponent",
                         [](auto& c) -> auto& { return c.sampler.batch_rho; }));
  f.push_back(opt_count_field(
      "anchor_threshold", "anchor only while M_k exceeds this, default n1",
      [](auto& c) -> auto& { return c.sampler.anchor_threshold; }));
  // L-ADMM
  f.push_back(opt_real_field("ladmm_nu", "linearization constant, default nu",
                             [](auto& c) -> auto& { return c.ladmm.nu; }));
  f.push_back(real_field("ladmm_s", "L-ADMM dual step",
                         [](auto& c) -> auto& { return c.ladmm.s; }));
  f.push_back(count_field("ladmm_max_iter", "L-ADMM iterations",
                          [](auto& c) -> auto& { return c.ladmm.max_iter; }));
  f.push_back(real_field("cg_tol", "relative CG tolerance",
                         [](auto& c) -> auto& { return c.ladmm.cg_tol; }));
  f.push_back(count_field("cg_max_iter", "CG iteration limit",
                          [](auto& c) -> auto& { return c.ladmm.cg_max_iter; }));
  // Reference
  f.push_back(count_field("reference_max_iter", "reference iteration limit",
                          [](auto& c) -> auto& { return c.reference.max_iter; }));
  f.push_back(count_field("reference_check_every", "stopping test period",
                          [](auto& c) -> auto& { return c.reference.check_every; }));
  f.push_back(real_field("reference_tol", "relative objective change to stop",
                         [](auto& c) -> auto& { return c.reference.tol; }));
  f.push_back(real_field("reference_feas_tol", "residual required to stop",
                         [](auto& c) -> auto& { return c.reference.feas_tol; }));
  f.push_back(real_field("reference_time_budget_seconds", "0 = none",
                         [](auto& c) -> auto& { return c.reference.time_budget_seconds; }));
  f.push_back(opt_real_field("f_star", "known optimal value; skips the reference run",
                             [](auto& c) -> auto& { return c.reference.f_star; }));
  return f;
}

std::string yaml_scalar_text(const YAML::Node& node, const std::string& key) {
  if (node.IsNull()) return "";
  if (node.IsScalar()) return node.Scalar();
  if (node.IsSequence()) {
    std::string joined;
    for (const auto& item : node) {
      if (!item.IsScalar()) {
        throw ConfigError(key + ": list items must be scalars");
      }
      if (!joined.empty()) joined += ',';
      joined += item.Scalar();
    }
    return joined;
  }
  throw ConfigError(key + ": nested mappings are not supported");
}

}  // namespace

const std::vector<ConfigField>& config_fields() {
  static const std::vector<ConfigField> fields = make_fields();
  return fields;
}

void set_config_value(RunConfig& cfg, const std::string& key,
                      const std::string& value) {
  for (const auto& f : config_fields()) {
    if (f.key == key) {
      f.set(cfg, value);
      return;
    }
  }
  throw ConfigError(key + ": unknown key");
}

RunConfig parse_config(const std::string& yaml_text,
                       const std::string& source) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception& e) {
    throw ConfigError(source + ": " + e.what());
  }
  RunConfig cfg;
  if (root.IsNull()) {
    cfg.validate();
    return cfg;
  }
  if (!root.IsMap()) {
    throw ConfigError(source + ": top level must be a mapping");
  }
  for (const auto& kv : root) {
    const std::string key = kv.first.as<std::string>();
    set_config_value(cfg, key, yaml_scalar_text(kv.second, key));
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path.string());
}

std::string serialize_config(const RunConfig& cfg) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  for (const auto& f : config_fields()) {
    const auto value = f.get(cfg);
    if (!value) continue;
    out << YAML::Key << f.key << YAML::Value;
    if (f.key == "solvers" || f.key == "seeds") {
      out << YAML::Flow << YAML::BeginSeq;
      for (auto part : split(*value, ',')) {
        if (!part.empty()) out << std::string(part);
      }
      out << YAML::EndSeq;
    } else {
      out << *value;
    }
  }
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

}  // namespace asadmm
