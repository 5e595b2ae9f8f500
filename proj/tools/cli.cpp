#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "contact1d/connections.hpp"
#include "contact1d/regularization.hpp"
#include "contact1d/scattering.hpp"
#include "contact1d/sweep.hpp"

namespace contact1d::cli {

namespace {

using json = nlohmann::ordered_json;

/// Threshold above which `duality` reports a failed check.
constexpr double kDualityExitTolerance = 1e-10;

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_number(const std::string& text, const std::string& what) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    throw InvalidInput("invalid number for " + what + ": '" + text + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

Mat2R parse_matrix(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw InvalidInput("matrix must be given as t,v,u,s");
  return {parse_number(parts[0], "t"), parse_number(parts[1], "v"),
          parse_number(parts[2], "u"), parse_number(parts[3], "s")};
}

std::vector<double> parse_grid(const std::string& text, bool log, const std::string& what) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw InvalidInput(what + " grid must be min:max:count");
  const double lo = parse_number(parts[0], what + " grid min");
  const double hi = parse_number(parts[1], what + " grid max");
  int count = 0;
  auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), count);
  if (ec != std::errc{} || ptr != parts[2].data() + parts[2].size() || count < 2) {
    throw InvalidInput(what + " grid count must be an integer >= 2");
  }
  if (!(lo > 0.0)) throw InvalidInput(what + " grid min must be positive");
  if (!(hi > lo)) throw InvalidInput(what + " grid max must exceed min");
  return make_grid(lo, hi, count, log);
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> values;
  for (const auto& part : split(text, ',')) {
    if (!part.empty()) values.push_back(parse_number(part, what));
  }
  return values;
}

// Sweep and output options shared by several subcommands.
struct KOptions {
  std::optional<double> k;
  std::optional<std::string> grid;
  bool log = false;

  void attach(CLI::App* app) {
    app->add_option("--k", k, "Single wavenumber");
    app->add_option("--k-grid", grid, "Wavenumber grid min:max:count");
    app->add_flag("--log", log, "Geometric grid spacing");
  }

  std::vector<double> resolve(std::optional<double> fallback = std::nullopt) const {
    if (k && grid) throw InvalidInput("give either --k or --k-grid, not both");
    if (grid) return parse_grid(*grid, log, "k");
    const auto value = k ? k : fallback;
    if (!value) throw InvalidInput("a wavenumber is required (--k or --k-grid)");
    if (!(*value > 0.0) || !std::isfinite(*value)) {
      throw InvalidInput("wavenumber must be positive");
    }
    return {*value};
  }
};

struct InteractionOptions {
  std::optional<double> delta;
  std::optional<double> epsilon;
  std::optional<std::string> matrix;

  void attach(CLI::App* app) {
    app->add_option("--delta", delta, "Delta potential strength v");
    app->add_option("--epsilon", epsilon, "Epsilon potential strength u");
    app->add_option("--matrix", matrix, "Connection matrix t,v,u,s");
  }

  Mat2R resolve() const {
    const int given = int(delta.has_value()) + int(epsilon.has_value()) + int(matrix.has_value());
    if (given != 1) throw InvalidInput("give exactly one of --delta, --epsilon, --matrix");
    if (delta) return v_delta(*delta);
    if (epsilon) return v_epsilon(*epsilon);
    const Mat2R m = parse_matrix(*matrix);
    require_unimodular(m, kPrimitiveDetTolerance, "connection matrix");
    return m;
  }
};

struct OutputOptions {
  std::string format;
  std::string path;

  void attach(CLI::App* app, const std::string& default_format) {
    format = default_format;
    app->add_option("--output", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app->add_option("--out", path, "Output file (default stdout)");
  }

  bool csv() const { return format == "csv"; }
};

std::string csv_line(std::initializer_list<double> values) {
  std::string line;
  bool first = true;
  for (double v : values) {
    if (!first) line += ',';
    line += format_number(v);
    first = false;
  }
  line += '\n';
  return line;
}

std::string scattering_table(const std::vector<ScatteringResult>& rows, bool csv) {
  if (csv) {
    std::string text = "k,T,R,ReA,ImA,ReB,ImB\n";
    for (const auto& r : rows) {
      text += csv_line({r.k, r.T, r.R, r.A.real(), r.A.imag(), r.B.real(), r.B.imag()});
    }
    return text;
  }
  json doc = {{"rows", json::array()}};
  for (const auto& r : rows) {
    doc["rows"].push_back({{"k", r.k},
                           {"T", r.T},
                           {"R", r.R},
                           {"ReA", r.A.real()},
                           {"ImA", r.A.imag()},
                           {"ReB", r.B.real()},
                           {"ImB", r.B.imag()}});
  }
  return doc.dump(2) + "\n";
}

std::string exchange_table(const std::vector<ExchangeResult>& rows, bool csv) {
  if (csv) {
    std::string text = "k,ReC,ImC,argC\n";
    for (const auto& r : rows) {
      text += csv_line({r.k, r.C.real(), r.C.imag(), std::arg(r.C)});
    }
    return text;
  }
  json doc = {{"statistics", rows.empty() ? "" : std::string(to_string(rows[0].statistics))},
              {"rows", json::array()}};
  for (const auto& r : rows) {
    doc["rows"].push_back(
        {{"k", r.k}, {"ReC", r.C.real()}, {"ImC", r.C.imag()}, {"argC", std::arg(r.C)}});
  }
  return doc.dump(2) + "\n";
}

PointInteraction parse_site(const std::string& text) {
  const auto at = text.rfind('@');
  const auto colon = text.find(':');
  if (colon == std::string::npos || at == std::string::npos || at < colon) {
    throw InvalidInput("site must be kind:value@position, got '" + text + "'");
  }
  const std::string kind = text.substr(0, colon);
  const std::string value = text.substr(colon + 1, at - colon - 1);
  const double x = parse_number(text.substr(at + 1), "site position");
  if (kind == "delta") return PointInteraction::delta(parse_number(value, "delta strength"), x);
  if (kind == "epsilon") {
    return PointInteraction::epsilon(parse_number(value, "epsilon strength"), x);
  }
  if (kind == "matrix") return PointInteraction::general(parse_matrix(value), x);
  throw InvalidInput("unknown site kind '" + kind + "' (delta, epsilon, matrix)");
}

Statistics parse_statistics(const std::string& text) {
  if (text == "boson") return Statistics::boson;
  if (text == "fermion") return Statistics::fermion;
  throw InvalidInput("statistics must be boson or fermion");
}

struct Outcome {
  std::string text;
  int code = kSuccess;
};

}  // namespace

std::string format_number(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Point interactions in one dimension: scattering, decomposition, limits"};
  app.require_subcommand(1);

  // scatter
  auto* scatter_cmd = app.add_subcommand("scatter", "Transmission and reflection over k");
  InteractionOptions scatter_int;
  KOptions scatter_k;
  OutputOptions scatter_out;
  scatter_int.attach(scatter_cmd);
  scatter_k.attach(scatter_cmd);
  scatter_out.attach(scatter_cmd, "csv");

  // identical
  auto* identical_cmd =
      app.add_subcommand("identical", "Identical-particle scattering coefficient C(k)");
  InteractionOptions identical_int;
  KOptions identical_k;
  OutputOptions identical_out;
  std::string statistics_text = "boson";
  identical_int.attach(identical_cmd);
  identical_k.attach(identical_cmd);
  identical_out.attach(identical_cmd, "csv");
  identical_cmd->add_option("--statistics", statistics_text, "boson or fermion");

  // chain
  auto* chain_cmd = app.add_subcommand("chain", "Scattering through a chain of point interactions");
  std::vector<std::string> sites;
  std::optional<std::string> three_delta;
  KOptions chain_k;
  OutputOptions chain_out;
  chain_cmd->add_option("--site", sites, "kind:value@position (kind: delta, epsilon, matrix)");
  chain_cmd->add_option("--three-delta", three_delta, "u,a: three-delta epsilon regularization");
  chain_k.attach(chain_cmd);
  chain_out.attach(chain_cmd, "csv");

  // regularize
  auto* regularize_cmd =
      app.add_subcommand("regularize", "Zero-range convergence of the three-delta construction");
  std::optional<double> reg_u;
  double reg_k = 1.0;
  std::optional<std::string> a_grid;
  std::optional<std::string> a_list;
  bool a_log = false;
  OutputOptions reg_out;
  regularize_cmd->add_option("--u", reg_u, "Target epsilon strength")->required();
  regularize_cmd->add_option("--k", reg_k, "Wavenumber (default 1)");
  regularize_cmd->add_option("--a-grid", a_grid, "Half-spacing grid min:max:count");
  regularize_cmd->add_option("--a", a_list, "Comma-separated half-spacings");
  regularize_cmd->add_flag("--log", a_log, "Geometric grid spacing");
  reg_out.attach(regularize_cmd, "json");

  // decompose
  auto* decompose_cmd = app.add_subcommand("decompose", "Factor a matrix into delta/epsilon steps");
  std::optional<std::string> dec_positional;
  std::optional<std::string> dec_matrix;
  OutputOptions dec_out;
  decompose_cmd->add_option("entries", dec_positional, "t,v,u,s");
  decompose_cmd->add_option("--matrix", dec_matrix, "t,v,u,s");
  dec_out.attach(decompose_cmd, "json");

  // duality
  auto* duality_cmd = app.add_subcommand("duality", "Delta-epsilon duality checks over k");
  std::string duality_mode;
  std::optional<double> dual_v;
  std::optional<double> dual_u;
  KOptions dual_k;
  OutputOptions dual_out;
  duality_cmd->add_option("mode", duality_mode, "tr or exchange")
      ->required()
      ->check(CLI::IsMember({"tr", "exchange"}));
  duality_cmd->add_option("--v", dual_v, "Delta strength");
  duality_cmd->add_option("--u", dual_u, "Epsilon strength (exchange mode)");
  dual_k.attach(duality_cmd);
  dual_out.attach(duality_cmd, "json");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  Outcome outcome;
  std::string out_path;
  try {
    if (scatter_cmd->parsed()) {
      const Mat2R v = scatter_int.resolve();
      const auto ks = scatter_k.resolve();
      outcome.text = scattering_table(parallel::scatter_sweep(v, ks), scatter_out.csv());
      out_path = scatter_out.path;
    } else if (identical_cmd->parsed()) {
      const Mat2R v = identical_int.resolve();
      const Statistics st = parse_statistics(statistics_text);
      const auto ks = identical_k.resolve();
      outcome.text = exchange_table(parallel::identical_sweep(v, ks, st), identical_out.csv());
      out_path = identical_out.path;
    } else if (chain_cmd->parsed()) {
      if (three_delta && !sites.empty()) {
        throw InvalidInput("give either --site or --three-delta, not both");
      }
      InteractionChain chain;
      if (three_delta) {
        const auto ua = parse_list(*three_delta, "three-delta parameters");
        if (ua.size() != 2) throw InvalidInput("--three-delta expects u,a");
        chain = three_delta_chain(ThreeDeltaConfig(ua[0], ua[1], 1.0));
      } else {
        std::vector<PointInteraction> parsed;
        for (const auto& s : sites) parsed.push_back(parse_site(s));
        chain = InteractionChain(std::move(parsed));
      }
      const auto ks = chain_k.resolve();
      outcome.text = scattering_table(parallel::scatter_chain_sweep(chain, ks), chain_out.csv());
      out_path = chain_out.path;
    } else if (regularize_cmd->parsed()) {
      if (*reg_u == 0.0) throw InvalidInput("epsilon strength must be nonzero");
      if (a_grid && a_list) throw InvalidInput("give either --a-grid or --a, not both");
      std::vector<double> as;
      if (a_grid) {
        as = parse_grid(*a_grid, a_log, "a");
      } else if (a_list) {
        as = parse_list(*a_list, "a");
      }
      std::sort(as.begin(), as.end(), std::greater<>());
      if (as.size() < 3) throw InvalidInput("at least three a values are required");
      const ConvergenceReport report = convergence_study(*reg_u, reg_k, as);
      if (reg_out.csv()) {
        outcome.text = "a,error\n";
        for (const auto& p : report.points) outcome.text += csv_line({p.a, p.error});
      } else {
        json doc = {{"target", "epsilon"}, {"u", report.u}, {"k", report.k},
                    {"points", json::array()}, {"fitted_order", report.fitted_order}};
        for (const auto& p : report.points) {
          doc["points"].push_back({{"a", p.a}, {"error", p.error}});
        }
        outcome.text = doc.dump(2) + "\n";
      }
      out_path = reg_out.path;
    } else if (decompose_cmd->parsed()) {
      if (dec_positional.has_value() == dec_matrix.has_value()) {
        throw InvalidInput("give the matrix once, as t,v,u,s");
      }
      const Mat2R m = parse_matrix(dec_positional ? *dec_positional : *dec_matrix);
      const Decomposition d = decompose(m);
      const double error = max_abs_diff(d.product(), m);
      if (dec_out.csv()) {
        outcome.text = "kind,strength\n";
        for (const auto& s : d.steps) {
          outcome.text += std::string(to_string(s.kind)) + "," + format_number(s.strength) + "\n";
        }
      } else {
        json doc = {{"branch", std::string(to_string(d.branch))}, {"steps", json::array()}};
        for (const auto& s : d.steps) {
          doc["steps"].push_back({{"kind", std::string(to_string(s.kind))},
                                  {"strength", s.strength}});
        }
        doc["reconstruction_error"] = error;
        outcome.text = doc.dump(2) + "\n";
      }
      out_path = dec_out.path;
    } else if (duality_cmd->parsed()) {
      if (!dual_v) throw InvalidInput("--v is required");
      double max_dev = 0.0;
      json points = json::array();
      std::string csv = "k,lhs,rhs,deviation\n";
      if (duality_mode == "tr") {
        if (*dual_v == 0.0) throw InvalidInput("duality check needs a nonzero --v");
        for (double k : dual_k.resolve(1.0)) {
          const DualityReport r = duality_check(*dual_v, k);
          max_dev = std::max(max_dev, r.max_deviation);
          points.push_back({{"k", k},
                            {"T_delta", r.delta.T},
                            {"T_epsilon_dual", r.epsilon.T},
                            {"R_delta", r.delta.R},
                            {"R_epsilon_dual", r.epsilon.R},
                            {"deviation", r.max_deviation}});
          csv += csv_line({k, r.delta.T, r.epsilon.T, r.max_deviation});
        }
      } else {
        if (!dual_u) throw InvalidInput("--u is required in exchange mode");
        if (!(std::abs(*dual_v * *dual_u - 4.0) <= 1e-12)) {
          throw InvalidInput("exchange duality requires v*u = 4");
        }
        for (double k : dual_k.resolve(1.0)) {
          const ExchangeDualityReport r = fermion_boson_duality_check(*dual_v, *dual_u, k);
          max_dev = std::max(max_dev, r.deviation);
          points.push_back({{"k", k},
                            {"ReC_epsilon_fermion", r.c_epsilon_fermion.real()},
                            {"ImC_epsilon_fermion", r.c_epsilon_fermion.imag()},
                            {"ReC_delta_boson", r.c_delta_boson.real()},
                            {"ImC_delta_boson", r.c_delta_boson.imag()},
                            {"deviation", r.deviation}});
          csv += csv_line({k, std::arg(r.c_epsilon_fermion), std::arg(r.c_delta_boson),
                           r.deviation});
        }
      }
      if (dual_out.csv()) {
        outcome.text = csv;
      } else {
        json doc = {{"mode", duality_mode}, {"v", *dual_v}};
        if (duality_mode == "exchange") doc["u"] = *dual_u;
        doc["max_dev"] = max_dev;
        doc["tolerance"] = kDualityExitTolerance;
        doc["points"] = std::move(points);
        outcome.text = doc.dump(2) + "\n";
      }
      if (max_dev > kDualityExitTolerance) outcome.code = kCheckFailed;
      out_path = dual_out.path;
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::numerical_failure ? kCheckFailed : kInvalidInput;
  }

  if (out_path.empty()) {
    out << outcome.text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << out_path << " for writing\n";
      return kInvalidInput;
    }
    file << outcome.text;
  }
  return outcome.code;
}

}  // namespace contact1d::cli
