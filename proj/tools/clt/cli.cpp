#include "cli.hpp"

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "clt/afe.hpp"
#include "clt/arithmetic.hpp"
#include "clt/dirichlet.hpp"
#include "clt/error.hpp"
#include "clt/moment.hpp"
#include "clt/optimizer.hpp"
#include "clt/parallel.hpp"
#include "clt/serialize.hpp"
#include "clt/zeta.hpp"

namespace clt::cli {

namespace {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Output {
  json doc;
  std::optional<Table> table;
};

struct Options {
  std::string format = "json";
  std::string output;
  unsigned threads = 0;
  std::string config;

  double sigma = 0.5, t = 14.134725141734693;
  int order = 0;

  double tmin = 0.0, tmax = 100.0, step = 0.05;

  std::uint64_t q = 0;
  std::size_t index = 0;
  std::string s_text = "2";

  double x = 0.0;

  std::string p_text = "[0, 1]", q_text = "[1, -1]";
  double r_shift = 1.3, theta = 0.5, tol = 1e-10;
  std::string functional = "printed";

  int p_degree = 1, q_degree = 1;
  double r_min = 0.5, r_max = 2.5;
  int restarts = 8;
  std::uint64_t seed = 0;
  std::size_t max_evals = 20000;

  double t_scale = 5000.0, moment_step = 0.0;
  std::string trace;
};

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string normalize_key(std::string key) {
  for (char& c : key) {
    if (c == '_') c = '-';
  }
  while (!key.empty() && key.front() == '-') key.erase(key.begin());
  return key;
}

Complex parse_complex(const std::string& text) {
  std::string body = trim(text);
  std::replace(body.begin(), body.end(), ',', ' ');
  std::istringstream in(body);
  double re = 0.0, im = 0.0;
  if (!(in >> re)) throw ParseError("malformed complex number '" + text + "'");
  if (!(in >> im)) im = 0.0;
  std::string rest;
  if (in >> rest) throw ParseError("malformed complex number '" + text + "'");
  return {re, im};
}

// Every field of a printed row goes through this so CSV output is bit-stable.
std::string num(double v) { return csv_number(v); }

Output cmd_zeta(const Options& o) {
  const Complex s(o.sigma, o.t);
  Output out;
  out.doc["s"] = complex_to_json(s);
  out.doc["zeta"] = complex_to_json(zeta(s));
  if (o.order > 0) {
    json d = json::array();
    for (int k = 1; k <= o.order; ++k) d.push_back(complex_to_json(zeta_derivative(s, k)));
    out.doc["derivatives"] = d;
  }
  out.doc["xi_direct"] = complex_to_json(xi_completed(s, XiPath::direct));
  out.doc["xi_continued"] = complex_to_json(xi_completed(s, XiPath::continued));
  if (o.sigma == 0.5) out.doc["hardy_z"] = hardy_z(o.t);
  return out;
}

Output cmd_zeros(const Options& o) {
  const ZeroScanReport rep = count_critical_zeros(o.tmin, o.tmax, o.step, o.threads);
  Output out;
  out.doc = rep;
  Table tab{{"ordinate", "z_value_residual"}, {}};
  for (std::size_t i = 0; i < rep.zeros.size(); ++i) tab.rows.push_back({num(rep.zeros[i]), num(rep.residuals[i])});
  out.table = std::move(tab);
  return out;
}

Output cmd_chars(const Options& o) {
  if (o.q < 1) throw ConfigError("q >= 1 required");
  const auto chars = enumerate_characters(o.q);
  Output out;
  out.doc["modulus"] = o.q;
  out.doc["count"] = chars.size();
  json list = json::array();
  Table tab{{"index", "parity", "conductor", "primitive", "real", "gauss_re", "gauss_im", "gauss_abs"}, {}};
  for (const auto& chi : chars) {
    const Complex tau = gauss_sum(chi);
    list.push_back({{"index", chi.index()},
                    {"parity", chi.parity()},
                    {"conductor", chi.conductor()},
                    {"primitive", chi.is_primitive()},
                    {"principal", chi.is_principal()},
                    {"real", chi.is_real()},
                    {"gauss_sum", complex_to_json(tau)}});
    tab.rows.push_back({std::to_string(chi.index()), std::to_string(chi.parity()),
                        std::to_string(chi.conductor()), chi.is_primitive() ? "true" : "false",
                        chi.is_real() ? "true" : "false", num(tau.real()), num(tau.imag()),
                        num(std::abs(tau))});
  }
  out.doc["characters"] = list;
  out.table = std::move(tab);
  return out;
}

Output cmd_lfun(const Options& o) {
  if (o.q < 1) throw ConfigError("q >= 1 required");
  if (o.index >= character_count(o.q)) throw ConfigError("character index out of range");
  const DirichletCharacter chi = dirichlet_character(o.q, o.index);
  const Complex s = parse_complex(o.s_text);
  Output out;
  out.doc["modulus"] = o.q;
  out.doc["index"] = o.index;
  out.doc["parity"] = chi.parity();
  out.doc["conductor"] = chi.conductor();
  out.doc["s"] = complex_to_json(s);
  out.doc["value"] = complex_to_json(l_function(s, chi));
  if (chi.is_primitive() && !chi.is_principal()) {
    out.doc["xi"] = complex_to_json(xi_completed_l(s, chi));
    out.doc["epsilon"] = complex_to_json(epsilon_factor(chi));
  }
  return out;
}

Output cmd_psi(const Options& o) {
  if (!(o.x >= 0.0)) throw ConfigError("x >= 0 required");
  const double v = chebyshev_psi(o.x);
  Output out;
  out.doc = json{{"x", o.x}, {"psi", v}};
  if (o.x > 0.0) out.doc["ratio"] = v / o.x;
  return out;
}

LevinsonParams levinson_from(const Options& o) {
  LevinsonParams p;
  p.p_poly = parse_polynomial(o.p_text);
  p.q_poly = parse_polynomial(o.q_text);
  p.r_shift = o.r_shift;
  p.theta = o.theta;
  p.validate();
  return p;
}

Output cmd_constant(const Options& o) {
  Output out;
  out.doc = constant_report(levinson_from(o), o.tol, parse_functional(o.functional));
  return out;
}

Output cmd_optimize(const Options& o) {
  SearchSpace sp;
  sp.p_degree = o.p_degree;
  sp.q_degree = o.q_degree;
  sp.theta = o.theta > 0.5 - 1e-9 && o.theta <= 0.5 ? 0.5 - 1e-9 : o.theta;
  sp.r_min = o.r_min;
  sp.r_max = o.r_max;
  sp.restarts = o.restarts;
  sp.seed = o.seed;
  sp.functional = parse_functional(o.functional);
  sp.max_evaluations_per_restart = o.max_evals;
  Output out;
  out.doc = optimize_kappa(sp, o.threads);
  return out;
}

Output cmd_moment(const Options& o) {
  const bool want_trace = !o.trace.empty() || o.format == "csv";
  MomentReport rep = mollified_moment_numeric(levinson_from(o), o.t_scale, o.moment_step, o.threads,
                                              parse_functional(o.functional), want_trace);
  Table tab{{"t", "w", "abs_v_psi_sq"}, {}};
  for (const auto& s : rep.samples) tab.rows.push_back({num(s.t), num(s.weight), num(s.value)});
  rep.samples.clear();
  Output out;
  out.doc = rep;
  out.doc["within_tolerance"] = std::abs(rep.ratio - 1.0) <= 0.15;
  if (!o.trace.empty()) {
    std::string csv;
    for (std::size_t i = 0; i < tab.header.size(); ++i) csv += (i ? "," : "") + csv_field(tab.header[i]);
    csv += "\n";
    for (const auto& row : tab.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) csv += (i ? "," : "") + csv_field(row[i]);
      csv += "\n";
    }
    write_atomically(o.trace, csv);
  }
  if (want_trace) out.table = std::move(tab);
  return out;
}

Output cmd_registry(const Options&) {
  Output out;
  json list = json::array();
  Table tab{{"tuple", "symbol", "provenance", "coefficients"}, {}};
  for (const auto& t : published_tuples()) {
    json entry = t;
    const LevinsonParams lp = t.levinson_params();
    const double c = c_constant_exact(lp);
    entry["levinson_functional"] = {{"theta", lp.theta},
                                    {"c", c},
                                    {"kappa", kappa_lower_bound(c, lp.r_shift)}};
    list.push_back(entry);
    std::vector<const RegisteredPolynomial*> polys{&t.q, &t.p1};
    for (const auto& e : t.extra) polys.push_back(&e);
    for (const auto* p : polys) {
      tab.rows.push_back({t.name, p->symbol, p->provenance(), format_polynomial(p->expanded())});
    }
  }
  out.doc["tuples"] = list;
  out.table = std::move(tab);
  return out;
}

void flatten(const json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out += prefix + " = " + j.dump() + "\n";
  }
}

std::string render(const Output& o, const std::string& format, const std::string& command) {
  if (format == "json") return o.doc.dump(2) + "\n";
  if (format == "text") {
    std::string s;
    flatten(o.doc, "", s);
    return s;
  }
  if (!o.table) throw ConfigError("csv output is not available for '" + command + "'");
  std::string s;
  for (std::size_t i = 0; i < o.table->header.size(); ++i) s += (i ? "," : "") + csv_field(o.table->header[i]);
  s += "\n";
  for (const auto& row : o.table->rows) {
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + csv_field(row[i]);
    s += "\n";
  }
  return s;
}

bool usage_error(ErrorCode c) {
  return c == ErrorCode::parse || c == ErrorCode::config || c == ErrorCode::constraint;
}

}  // namespace

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = normalize_key(trim(line.substr(0, eq)));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(path + ":" + std::to_string(lineno) + ": empty key");
    if (key == "config") throw ConfigError(path + ":" + std::to_string(lineno) + ": nested config");
    kv[key] = value;
  }
  return kv;
}

void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ConfigError("cannot write '" + tmp.string() + "'");
    f << content;
    f.flush();
    if (!f) throw ConfigError("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw ConfigError("cannot rename onto '" + path + "'");
  }
}

int run(const std::vector<std::string>& input, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Levinson-method toolkit: zeta and L-function evaluation, zero counting, "
               "mollifier constants, kappa optimization and moment checks."};
  app.name("clt");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output", o.output, "write to this path (atomic replace)");
  app.add_option("--threads", o.threads, "worker threads (0 = hardware)");
  app.add_option("--config", o.config, "flat key = value file; flags win over file values");

  std::map<std::string, CLI::App*> subs;
  auto* zeta_cmd = subs["zeta"] = app.add_subcommand("zeta", "zeta, xi and Z at s = sigma + i t");
  zeta_cmd->add_option("--sigma", o.sigma);
  zeta_cmd->add_option("--t", o.t);
  zeta_cmd->add_option("--order", o.order, "also report derivatives up to this order")->check(CLI::Range(0, 8));

  auto* zeros_cmd = subs["zeros"] = app.add_subcommand("zeros", "sign changes of Hardy's Z");
  zeros_cmd->add_option("--tmin", o.tmin)->check(CLI::NonNegativeNumber);
  zeros_cmd->add_option("--tmax", o.tmax)->check(CLI::NonNegativeNumber);
  zeros_cmd->add_option("--step", o.step)->check(CLI::PositiveNumber);

  auto* chars_cmd = subs["chars"] = app.add_subcommand("chars", "character table mod q");
  chars_cmd->add_option("q,--q", o.q, "modulus")->required()->check(CLI::Range(1, 100000));

  auto* lfun_cmd = subs["lfun"] = app.add_subcommand("lfun", "L(s, chi)");
  lfun_cmd->add_option("--q", o.q)->required()->check(CLI::Range(1, 100000));
  lfun_cmd->add_option("--index", o.index)->required();
  lfun_cmd->add_option("--s", o.s_text, "re or re,im");

  auto* psi_cmd = subs["psi"] = app.add_subcommand("psi", "Chebyshev psi(x)");
  psi_cmd->add_option("x,--x", o.x)->required()->check(CLI::NonNegativeNumber);

  auto add_levinson = [&](CLI::App* c) {
    c->add_option("--P", o.p_text, "ascending coefficients, e.g. 0,1");
    c->add_option("--Q", o.q_text, "ascending coefficients, e.g. 1,-1");
    c->add_option("--R", o.r_shift)->check(CLI::PositiveNumber);
    c->add_option("--theta", o.theta)->check(CLI::Range(0.0, 0.5));
    c->add_option("--functional", o.functional, "printed or squared")
        ->check(CLI::IsMember({"printed", "squared"}));
  };
  auto* const_cmd = subs["constant"] = app.add_subcommand("constant", "c(P,Q,R,theta) and the kappa bound");
  add_levinson(const_cmd);
  const_cmd->add_option("--tol", o.tol)->check(CLI::Range(1e-12, 1e-2));

  auto* opt_cmd = subs["optimize"] = app.add_subcommand("optimize", "maximize the kappa bound");
  opt_cmd->add_option("--p-degree", o.p_degree)->check(CLI::Range(1, 6));
  opt_cmd->add_option("--q-degree", o.q_degree)->check(CLI::Range(1, 6));
  opt_cmd->add_option("--theta", o.theta)->check(CLI::Range(0.0, 0.5));
  opt_cmd->add_option("--r-min", o.r_min)->check(CLI::PositiveNumber);
  opt_cmd->add_option("--r-max", o.r_max)->check(CLI::PositiveNumber);
  opt_cmd->add_option("--restarts", o.restarts)->check(CLI::Range(1, 64));
  opt_cmd->add_option("--seed", o.seed);
  opt_cmd->add_option("--max-evals", o.max_evals)->check(CLI::PositiveNumber);
  opt_cmd->add_option("--functional", o.functional)->check(CLI::IsMember({"printed", "squared"}));

  auto* mom_cmd = subs["moment"] = app.add_subcommand("moment", "smoothed mollified second moment");
  add_levinson(mom_cmd);
  mom_cmd->add_option("--T", o.t_scale)->check(CLI::Range(100.0, 2e4));
  mom_cmd->add_option("--step", o.moment_step, "grid step (0 = min(0.05, delta/20))")
      ->check(CLI::NonNegativeNumber);
  mom_cmd->add_option("--trace", o.trace, "CSV of (t, w, |V psi|^2)");

  subs["registry"] = app.add_subcommand("registry", "published polynomial tuples");

  if (input.empty()) {
    err << app.help();
    return 2;
  }

  std::vector<std::string> args = input;
  std::string command;
  try {
    // locate the subcommand and the config path before CLI11 sees anything
    std::string config_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--config" && i + 1 < args.size()) config_path = args[i + 1];
      else if (args[i].rfind("--config=", 0) == 0) config_path = args[i].substr(9);
      else if (command.empty() && subs.count(args[i])) command = args[i];
    }
    if (!config_path.empty()) {
      if (command.empty()) throw ConfigError("a subcommand is required");
      CLI::App* sub = subs.at(command);
      for (const auto& [key, value] : read_config_file(config_path)) {
        const std::string flag = "--" + key;
        const bool global = key == "format" || key == "output" || key == "threads";
        if (!global && sub->get_option_no_throw(flag) == nullptr) {
          throw ConfigError("unknown config key '" + key + "' for '" + command + "'");
        }
        bool present = false;
        for (const auto& a : args) {
          if (a == flag || a.rfind(flag + "=", 0) == 0) present = true;
        }
        if (present) continue;
        args.push_back(flag);
        args.push_back(value);
      }
    }
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << (command.empty() ? app.help() : subs.at(command)->help());
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) command = name;
  }
  static const std::map<std::string, std::function<Output(const Options&)>> handlers = {
      {"zeta", cmd_zeta},         {"zeros", cmd_zeros},       {"chars", cmd_chars},
      {"lfun", cmd_lfun},         {"psi", cmd_psi},           {"constant", cmd_constant},
      {"optimize", cmd_optimize}, {"moment", cmd_moment},     {"registry", cmd_registry}};

  auto report_error = [&](const std::string& code, const std::string& message) {
    err << "error [" << code << "]: " << message << "\n";
    if (o.format == "json") out << json{{"error", {{"code", code}, {"message", message}}}}.dump(2) << "\n";
  };
  try {
    const Output result = handlers.at(command)(o);
    const std::string text = render(result, o.format, command);
    if (o.output.empty()) {
      out << text;
    } else {
      write_atomically(o.output, text);
    }
    return 0;
  } catch (const Error& e) {
    report_error(code_name(e.code()), e.what());
    return usage_error(e.code()) ? 2 : 1;
  } catch (const json::exception& e) {
    report_error("internal_error", e.what());
    return 1;
  } catch (const std::exception& e) {
    report_error("internal_error", e.what());
    return 1;
  }
}

}  // namespace clt::cli
