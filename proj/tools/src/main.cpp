#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "common.hpp"
#include "nidx/errors.hpp"
#include "nidx/index.hpp"
#include "nidx/norm.hpp"
#include "nidx/operators.hpp"
#include "nidx/radius.hpp"
#include "verify.hpp"

namespace nidxcli {

using nlohmann::json;

nidx::Norm parse_norm_spec(const std::string& text, json& echo) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CliError{std::string("norm spec is not valid JSON: ") + e.what()};
  }
  if (!doc.is_object() || !doc.contains("family") || !doc["family"].is_string()) {
    throw CliError{"norm spec must be a JSON object with a \"family\" string"};
  }
  const std::string family = doc["family"];

  nidx::Norm norm = nidx::Norm::lp(2.0);
  try {
    if (family == "lp") {
      if (!doc.contains("p") || !doc["p"].is_number()) {
        throw CliError{"lp norm spec requires a numeric \"p\""};
      }
      double p = doc["p"];
      echo = json{{"family", "lp"}, {"p", quantize12(p)}};
      norm = nidx::Norm::lp(p);
    } else if (family == "polyhedral") {
      if (!doc.contains("firstQuadrantVertices") || !doc["firstQuadrantVertices"].is_array()) {
        throw CliError{"polyhedral norm spec requires a \"firstQuadrantVertices\" array"};
      }
      std::vector<nidx::Vec2> vertices;
      json echo_vertices = json::array();
      for (const json& entry : doc["firstQuadrantVertices"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number()) {
          throw CliError{"each vertex must be a [x, y] pair of numbers"};
        }
        nidx::Vec2 v{entry[0], entry[1]};
        vertices.push_back(v);
        echo_vertices.push_back(json::array({quantize12(v.x), quantize12(v.y)}));
      }
      echo = json{{"family", "polyhedral"}, {"firstQuadrantVertices", echo_vertices}};
      norm = nidx::Norm::polyhedral(vertices);
    } else {
      throw CliError{"unknown norm family '" + family + "' (expected \"lp\" or \"polyhedral\")"};
    }
  } catch (const nidx::InvalidDescriptorError& e) {
    throw CliError{e.what()};
  } catch (const nidx::InvalidInputError& e) {
    throw CliError{e.what()};
  }

  nidx::ValidationReport vr = nidx::validate(norm);
  if (!vr.ok) {
    throw CliError{"norm spec violates " + vr.property + " (witness (" + format12(vr.witness.x) +
                   ", " + format12(vr.witness.y) + "): " + vr.detail + ")"};
  }
  return norm;
}

nidx::Operator2x2 parse_operator(const std::string& text) {
  const char* message = "operator must be four comma-separated numbers \"t11,t12,t21,t22\"";
  double entries[4];
  const char* s = text.c_str();
  for (int i = 0; i < 4; ++i) {
    char* end = nullptr;
    entries[i] = std::strtod(s, &end);
    if (end == s || !std::isfinite(entries[i])) throw CliError{message};
    s = end;
    while (*s == ' ') ++s;
    if (i < 3) {
      if (*s != ',') throw CliError{message};
      ++s;
    }
  }
  while (*s == ' ') ++s;
  if (*s != '\0') throw CliError{message};
  return {entries[0], entries[1], entries[2], entries[3]};
}

namespace {

constexpr int kDefaultGrid = 64;

// Key/value report emitted as a fixed-width text table or a JSON object.
// Numbers pass through quantize12 so emitted JSON re-parses bit-for-bit.
class Report {
 public:
  void add_number(const std::string& key, double v) {
    rows_.emplace_back(key, format12(v));
    j_[key] = quantize12(v);
  }
  void add_bool(const std::string& key, bool v) {
    rows_.emplace_back(key, v ? "true" : "false");
    j_[key] = v;
  }
  void add_string(const std::string& key, const std::string& v) {
    rows_.emplace_back(key, v);
    j_[key] = v;
  }
  void add_json(const std::string& key, const json& v) {
    rows_.emplace_back(key, v.dump());
    j_[key] = v;
  }

  std::string text() const {
    std::size_t width = 0;
    for (const auto& row : rows_) width = std::max(width, row.first.size());
    std::string out;
    for (const auto& row : rows_) {
      out += row.first;
      out.append(width + 2 - row.first.size(), ' ');
      out += row.second;
      out += '\n';
    }
    return out;
  }
  std::string dump_json() const { return j_.dump(2) + "\n"; }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
  json j_;
};

json vec_json(const nidx::Vec2& v) { return json::array({quantize12(v.x), quantize12(v.y)}); }

json operator_json(const nidx::Operator2x2& t) {
  return json::array({quantize12(t.t11), quantize12(t.t12), quantize12(t.t21), quantize12(t.t22)});
}

struct Config {
  std::string norm_text;
  std::string op_text;
  std::string method = "all";
  std::string range_text;
  std::string suite;
  std::string format = "text";
  std::string output_path;
  double p = 0.0;
  int grid = 0;  // 0 = unset; falls back to NIDX_GRID, then kDefaultGrid
};

int effective_grid(const Config& cfg) {
  if (cfg.grid > 0) return cfg.grid;
  if (const char* env = std::getenv("NIDX_GRID")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value < 8 || value > 100000) {
      throw CliError{"NIDX_GRID must be an integer in [8, 100000], got '" + std::string(env) +
                     "'"};
    }
    return static_cast<int>(value);
  }
  return kDefaultGrid;
}

void emit(const Config& cfg, const std::string& payload) {
  if (cfg.output_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(cfg.output_path);
  if (!out) throw CliError{"cannot open output file '" + cfg.output_path + "'"};
  out << payload;
}

void require_text_or_json(const Config& cfg) {
  if (cfg.format == "csv") {
    throw CliError{"csv format is only available for the sweep command"};
  }
}

std::string payload_for(const Config& cfg, const Report& report) {
  return cfg.format == "json" ? report.dump_json() : report.text();
}

// ---- commands ----

int cmd_radius_or_norm(const Config& cfg, bool radius) {
  require_text_or_json(cfg);
  json echo;
  nidx::Norm norm = parse_norm_spec(cfg.norm_text, echo);
  nidx::Operator2x2 t = parse_operator(cfg.op_text);
  nidx::RadiusEngine engine(norm);

  Report report;
  report.add_string("command", radius ? "radius" : "norm");
  report.add_json("norm", echo);
  report.add_json("operator", operator_json(t));
  report.add_number("value", radius ? engine.numerical_radius(t) : engine.operator_norm(t));
  emit(cfg, payload_for(cfg, report));
  return 0;
}

int cmd_mp(const Config& cfg) {
  require_text_or_json(cfg);
  nidx::MpResult mp = nidx::mp_constant(cfg.p);
  Report report;
  report.add_string("command", "mp");
  report.add_number("p", cfg.p);
  report.add_number("value", mp.value);
  report.add_number("t0", mp.t0);
  emit(cfg, payload_for(cfg, report));
  return 0;
}

int cmd_index(const Config& cfg) {
  require_text_or_json(cfg);
  json echo;
  nidx::Norm norm = parse_norm_spec(cfg.norm_text, echo);

  Report report;
  report.add_string("command", "index");
  report.add_json("norm", echo);
  report.add_string("method", cfg.method);

  std::optional<nidx::IndexReport> bound_report;
  if (cfg.method != "brute") bound_report = nidx::index_report(norm);

  if (cfg.method == "certified") {
    if (!bound_report->certified_index) {
      std::cerr << "error: no certified index available for " << norm.describe()
                << " (certified coverage: lp exponents in [1.5, 3] and exact contact bounds)\n";
      return 1;
    }
    report.add_number("certifiedIndex", *bound_report->certified_index);
    report.add_bool("exact", bound_report->exact);
    emit(cfg, payload_for(cfg, report));
    return 0;
  }

  if (cfg.method == "bound" || cfg.method == "all") {
    const nidx::IndexReport& r = *bound_report;
    report.add_number("radiusI4", r.radius_i4);
    report.add_json("maximizer",
                    json{{"x", vec_json(r.maximizer.x)}, {"xstar", vec_json(r.maximizer.xstar)}});
    report.add_json("contact", json{{"c1", quantize12(r.contact.c1)},
                                    {"c2", quantize12(r.contact.c2)},
                                    {"c3", quantize12(r.contact.c3)},
                                    {"c4", quantize12(r.contact.c4)}});
    report.add_number("conditionValue", r.condition_value);
    report.add_number("lowerBound", r.lower_bound);
    report.add_bool("exact", r.exact);
    if (r.certified_index) report.add_number("certifiedIndex", *r.certified_index);
  }

  if (cfg.method == "brute" || cfg.method == "all") {
    nidx::IndexEstimate estimate = nidx::brute_force_index(norm, effective_grid(cfg));
    report.add_json("bruteForce", json{{"value", quantize12(estimate.value)},
                                       {"argmin", operator_json(estimate.argmin)},
                                       {"gridResolution", estimate.grid_resolution},
                                       {"refined", estimate.refined}});
  }

  emit(cfg, payload_for(cfg, report));
  return 0;
}

struct SweepRow {
  double p, q, mp, radius_i4, bound, condition;
  bool exact;
  double brute, sandwich_lower;
};

SweepRow sweep_row(double p, int grid) {
  nidx::Norm norm = nidx::Norm::lp(p);
  nidx::IndexReport r = nidx::index_report(norm);
  SweepRow row;
  row.p = p;
  row.q = nidx::conjugate_exponent(p);
  row.mp = nidx::mp_constant(p).value;
  row.radius_i4 = nidx::numerical_radius(norm, nidx::isometry_basis(4));
  row.bound = r.lower_bound;
  row.condition = r.condition_value;
  row.exact = r.exact;
  row.brute = nidx::brute_force_index(norm, grid).value;
  row.sandwich_lower =
      std::max(std::pow(2.0, -1.0 / row.p), std::pow(2.0, -1.0 / row.q)) * row.mp;
  return row;
}

std::vector<double> parse_range(const std::string& text) {
  double parts[3];
  const char* s = text.c_str();
  for (int i = 0; i < 3; ++i) {
    char* end = nullptr;
    parts[i] = std::strtod(s, &end);
    if (end == s) throw CliError{"range must be start:stop:step, got '" + text + "'"};
    s = end;
    if (i < 2) {
      if (*s != ':') throw CliError{"range must be start:stop:step, got '" + text + "'"};
      ++s;
    }
  }
  if (*s != '\0') throw CliError{"range must be start:stop:step, got '" + text + "'"};
  double start = parts[0], stop = parts[1], step = parts[2];
  if (!(start > 1.0)) throw CliError{"sweep range requires start > 1"};
  if (!(stop > start)) throw CliError{"sweep range requires stop > start"};
  if (!(step > 0.0)) throw CliError{"sweep range requires step > 0"};
  std::vector<double> values;
  long n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
  for (long i = 0; i <= n; ++i) {
    double p = start + static_cast<double>(i) * step;
    if (std::fabs(p - stop) < 1e-9 * step) p = stop;
    values.push_back(p);
  }
  return values;
}

int cmd_sweep(const Config& cfg) {
  std::vector<double> ps = parse_range(cfg.range_text);
  int grid = effective_grid(cfg);
  std::vector<SweepRow> rows;
  rows.reserve(ps.size());
  for (double p : ps) rows.push_back(sweep_row(p, grid));

  static const char* kColumns[] = {"p",         "q",     "mp",    "radius_i4", "bound",
                                   "condition", "exact", "brute", "sandwich_lower"};
  std::string payload;
  if (cfg.format == "csv") {
    payload = "p,q,mp,radius_i4,bound,condition,exact,brute,sandwich_lower\n";
    for (const SweepRow& r : rows) {
      payload += format12(r.p) + "," + format12(r.q) + "," + format12(r.mp) + "," +
                 format12(r.radius_i4) + "," + format12(r.bound) + "," + format12(r.condition) +
                 "," + (r.exact ? "true" : "false") + "," + format12(r.brute) + "," +
                 format12(r.sandwich_lower) + "\n";
    }
  } else if (cfg.format == "json") {
    json doc;
    doc["command"] = "sweep";
    doc["gridResolution"] = grid;
    doc["rows"] = json::array();
    for (const SweepRow& r : rows) {
      doc["rows"].push_back({{"p", quantize12(r.p)},
                             {"q", quantize12(r.q)},
                             {"mp", quantize12(r.mp)},
                             {"radius_i4", quantize12(r.radius_i4)},
                             {"bound", quantize12(r.bound)},
                             {"condition", quantize12(r.condition)},
                             {"exact", r.exact},
                             {"brute", quantize12(r.brute)},
                             {"sandwich_lower", quantize12(r.sandwich_lower)}});
    }
    payload = doc.dump(2) + "\n";
  } else {
    constexpr int kWidth = 16;
    auto cell = [](const std::string& s) {
      std::string out = s;
      if (out.size() < kWidth) out.append(kWidth - out.size(), ' ');
      return out;
    };
    for (const char* column : kColumns) payload += cell(column);
    payload += '\n';
    for (const SweepRow& r : rows) {
      payload += cell(format12(r.p)) + cell(format12(r.q)) + cell(format12(r.mp)) +
                 cell(format12(r.radius_i4)) + cell(format12(r.bound)) +
                 cell(format12(r.condition)) + cell(r.exact ? "true" : "false") +
                 cell(format12(r.brute)) + cell(format12(r.sandwich_lower));
      payload += '\n';
    }
  }
  emit(cfg, payload);
  return 0;
}

int cmd_verify(const Config& cfg) {
  require_text_or_json(cfg);
  SuiteResult result = run_verify_suite(cfg.suite, effective_grid(cfg));
  std::string payload;
  if (cfg.format == "json") {
    json doc;
    doc["command"] = "verify";
    doc["suite"] = cfg.suite;
    doc["pass"] = result.pass;
    doc["details"] = result.details;
    payload = doc.dump(2) + "\n";
  } else {
    payload = "suite   " + cfg.suite + "\n";
    for (const std::string& line : result.lines) payload += line + "\n";
    payload += std::string("result  ") + (result.pass ? "PASS" : "FAIL") + "\n";
  }
  emit(cfg, payload);
  return result.pass ? 0 : 1;
}

int run(int argc, char** argv) {
  CLI::App app{"numerical radius, contact lower bounds, and numerical-index estimates\n"
               "for operators on the plane with an absolute symmetric norm"};
  app.require_subcommand(1);

  Config cfg;
  auto add_format = [&cfg](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format: text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--output", cfg.output_path, "write the report to this file");
  };
  auto add_norm = [&cfg](CLI::App* sub) {
    sub->add_option("--norm", cfg.norm_text, "norm spec JSON, e.g. {\"family\":\"lp\",\"p\":1.5}")
        ->required();
  };
  auto add_grid = [&cfg](CLI::App* sub) {
    sub->add_option("--grid", cfg.grid,
                    "brute-force grid resolution (default 64; NIDX_GRID overrides)")
        ->check(CLI::Range(8, 100000));
  };

  CLI::App* radius = app.add_subcommand("radius", "numerical radius v(T)");
  add_norm(radius);
  radius->add_option("--op", cfg.op_text, "operator entries t11,t12,t21,t22")->required();
  add_format(radius);

  CLI::App* opnorm = app.add_subcommand("norm", "operator norm ||T||");
  add_norm(opnorm);
  opnorm->add_option("--op", cfg.op_text, "operator entries t11,t12,t21,t22")->required();
  add_format(opnorm);

  CLI::App* index = app.add_subcommand("index", "numerical-index report for a norm");
  add_norm(index);
  index->add_option("--method", cfg.method, "bound, brute, certified, or all (default all)")
      ->check(CLI::IsMember({"bound", "brute", "certified", "all"}));
  add_grid(index);
  add_format(index);

  CLI::App* mp = app.add_subcommand("mp", "the constant M_p = max_t |t^{p-1}-t|/(1+t^p)");
  mp->add_option("--p", cfg.p, "exponent p in (1, infinity)")->required();
  add_format(mp);

  CLI::App* sweep = app.add_subcommand("sweep", "tabulate index data over a range of p");
  sweep->add_option("--range", cfg.range_text, "p range start:stop:step (inclusive stop)")
      ->required();
  add_grid(sweep);
  add_format(sweep);

  CLI::App* verify = app.add_subcommand("verify", "run a property verification suite");
  verify->add_option("--suite", cfg.suite, "lemma1, minimax, theorem3, or sandwich")->required();
  add_grid(verify);
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(radius)) return cmd_radius_or_norm(cfg, true);
    if (app.got_subcommand(opnorm)) return cmd_radius_or_norm(cfg, false);
    if (app.got_subcommand(index)) return cmd_index(cfg);
    if (app.got_subcommand(mp)) return cmd_mp(cfg);
    if (app.got_subcommand(sweep)) return cmd_sweep(cfg);
    if (app.got_subcommand(verify)) return cmd_verify(cfg);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return 2;
  } catch (const nidx::InvalidInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nidx::InvalidDescriptorError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nidx::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace
}  // namespace nidxcli

int main(int argc, char** argv) { return nidxcli::run(argc, argv); }
