#pragma once

// Command-line front end. `run` takes the arguments after the program name and
// writes to the given streams, so tests can drive it without a subprocess.
//
// Exit codes: 0 success, 1 a checked property failed, 2 usage error,
// 3 inconclusive (sampling, interpolation or time budget).

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rank2cc/rank2cc.hpp"

namespace rank2cc::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kInconclusive = 3 };

inline int exit_code_for(Status s) {
  switch (s) {
    case Status::Pass: return kOk;
    case Status::Fail: return kFailed;
    case Status::Inconclusive: return kInconclusive;
  }
  return kFailed;
}

namespace detail {

struct Params {
  int b = 1;
  int c = 1;
  std::int64_t k = 1;
  std::int64_t m = 1;
  std::int64_t k_min = -6;
  std::int64_t k_max = 8;
  std::int64_t m_min = -3;
  std::int64_t m_max = 3;
  std::string checks = "positivity,laurent";
  bool force = false;
  long budget_ms = 0;
  int max_period = 50;
  bool fold = false;
  std::string cls;
  std::int64_t s = 0;
  std::string module;
  int index = 1;
  std::vector<int> dim;
  std::vector<int> sub;
  std::optional<std::uint64_t> seed;
  bool json = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::uint64_t resolve_seed(const Params& p) {
  if (p.seed) return *p.seed;
  const char* env = std::getenv("RANK2_SEED");
  if (!env || !*env) return 0;
  try {
    std::size_t used = 0;
    std::uint64_t v = std::stoull(env, &used, 0);
    if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("RANK2_SEED is not a 64-bit integer: ") + env);
  }
}

inline void emit_json(std::ostream& out, const std::string& command, nlohmann::json results,
                      const CheckReport* report) {
  nlohmann::json j;
  j["command"] = command;
  j["results"] = std::move(results);
  j["report"] = report ? to_json(*report) : nlohmann::json(nullptr);
  out << j.dump(2) << '\n';
}

inline SweepOptions sweep_options(const Params& p) {
  SweepOptions o;
  o.positivity = o.laurent = o.denominator = false;
  std::stringstream ss(p.checks);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "positivity") o.positivity = true;
    else if (item == "laurent") o.laurent = true;
    else if (item == "denominator") o.denominator = true;
    else throw UsageError("unknown check '" + item + "' (expected positivity, laurent, denominator)");
  }
  if (p.budget_ms > 0) o.deadline = Deadline::after(std::chrono::milliseconds(p.budget_ms));
  return o;
}

inline VertexClass parse_class(const std::string& s) {
  if (s == "v") return VertexClass::V;
  if (s == "w") return VertexClass::W;
  throw UsageError("--class must be v or w");
}

inline ModuleSpec parse_module(const Params& p, const Quiver& q) {
  const std::string& m = p.module;
  if (m == "generic") {
    if (p.dim.empty()) throw UsageError("--module generic needs --dim");
    return ModuleSpec::generic(DimensionVector(p.dim));
  }
  if (m.size() != 2 || (m[1] != 'v' && m[1] != 'w')) throw UsageError("unknown module '" + m + "'");
  const int count = m[1] == 'v' ? p.b : p.c;
  if (p.index < 1 || p.index > count)
    throw UsageError("--index must lie in [1, " + std::to_string(count) + "]");
  const std::size_t vertex = class_vertex(p.b, m[1] == 'v' ? VertexClass::V : VertexClass::W,
                                          static_cast<std::size_t>(p.index - 1));
  q.require_vertex(vertex);
  switch (m[0]) {
    case 'P': return ModuleSpec::projective(vertex);
    case 'I': return ModuleSpec::injective(vertex);
    case 'S': return ModuleSpec::simple(vertex);
    default: throw UsageError("unknown module '" + m + "'");
  }
}

inline CCOptions cc_options(const Params& p) {
  CCOptions o;
  o.seed = resolve_seed(p);
  return o;
}

inline int finish_report(std::ostream& out, const Params& p, const std::string& command,
                         nlohmann::json results, const CheckReport& report) {
  if (p.json)
    emit_json(out, command, std::move(results), &report);
  else
    out << report.to_string();
  return exit_code_for(report.status());
}

inline int cmd_var(const Params& p, std::ostream& out) {
  auto x = cluster_variable(ExchangeType(p.b, p.c), p.k);
  if (p.json) {
    auto r = to_json(x);
    r["k"] = p.k;
    emit_json(out, "var", nlohmann::json::array({r}), nullptr);
  } else {
    out << x << '\n';
  }
  return kOk;
}

inline int cmd_expand(const Params& p, std::ostream& out) {
  auto x = expand_in_cluster(ExchangeType(p.b, p.c), p.k, p.m);
  if (p.json) {
    auto r = to_json(x);
    r["k"] = p.k;
    r["m"] = p.m;
    emit_json(out, "expand", nlohmann::json::array({r}), nullptr);
  } else {
    out << x << '\n';
  }
  return kOk;
}

inline int cmd_sweep(const Params& p, std::ostream& out) {
  if (!p.force && (p.b > 3 || p.c > 3))
    throw UsageError("b, c > 3 grow very quickly; pass --force to sweep anyway");
  auto report = check_positivity_range(ExchangeType(p.b, p.c), p.k_min, p.k_max, p.m_min, p.m_max, sweep_options(p));
  return finish_report(out, p, "sweep", nlohmann::json::array(), report);
}

inline int cmd_period(const Params& p, std::ostream& out) {
  if (p.max_period < 1) throw UsageError("--max must be positive");
  auto period = detect_period(ExchangeType(p.b, p.c), p.max_period);
  if (p.json) {
    nlohmann::json r = {{"b", p.b}, {"c", p.c}, {"max", p.max_period}};
    r["period"] = period ? nlohmann::json(*period) : nlohmann::json(nullptr);
    emit_json(out, "period", nlohmann::json::array({r}), nullptr);
  } else if (period) {
    out << *period << '\n';
  } else {
    out << "none ≤ " << p.max_period << '\n';
  }
  return kOk;
}

inline int cmd_ccmap(const Params& p, std::ostream& out) {
  Quiver q = kronecker_quiver(p.b, p.c);
  auto fv = folded_variable(p.b, p.c, p.k, cc_options(p));
  const std::string object = describe(q, fv.object);
  if (p.json) {
    nlohmann::json r = {{"k", p.k}, {"object", object}, {"character", to_json(fv.character)}};
    if (p.fold) r["folded"] = to_json(fv.polynomial);
    emit_json(out, "ccmap", nlohmann::json::array({r}), nullptr);
  } else {
    out << "object: " << object << '\n' << "X = " << fv.character << '\n';
    if (p.fold) out << "fold(X) = " << fv.polynomial << '\n';
  }
  return kOk;
}

inline int cmd_verify(const Params& p, std::ostream& out) {
  if (p.k_min > p.k_max) throw UsageError("--k-min exceeds --k-max");
  Quiver q = kronecker_quiver(p.b, p.c);
  const CCOptions opts = cc_options(p);
  CheckReport report;
  report.check = "folding " + type_label(p.b, p.c);
  report.scope = "k in [" + std::to_string(p.k_min) + "," + std::to_string(p.k_max) + "]";
  nlohmann::json results = nlohmann::json::array();
  for (std::int64_t k = p.k_min; k <= p.k_max; ++k) {
    report.merge(verify_folding(p.b, p.c, k, opts));
    results.push_back({{"k", k}, {"object", describe(q, object_for_index(p.b, p.c, k))}});
  }
  return finish_report(out, p, "verify", std::move(results), report);
}

inline int cmd_exchange(const Params& p, std::ostream& out) {
  auto report = verify_exchange_relation(p.b, p.c, parse_class(p.cls), p.s, cc_options(p));
  return finish_report(out, p, "exchange", nlohmann::json::array(), report);
}

inline int cmd_euler(const Params& p, std::ostream& out) {
  Quiver q = kronecker_quiver(p.b, p.c);
  ModuleSpec spec = parse_module(p, q);
  if (p.sub.size() != q.size())
    throw UsageError("--sub needs " + std::to_string(q.size()) + " entries");
  CCOptions opts = cc_options(p);
  ModuleRealizer module(q, spec, opts.seed, opts.trials);
  auto chi = euler_characteristic(module, DimensionVector(p.sub));
  if (p.json) {
    nlohmann::json counts = nlohmann::json::array();
    for (const auto& [prime, n] : chi.counts) counts.push_back({{"p", prime}, {"count", n.str()}});
    nlohmann::json r = {{"module", describe(q, spec)},
                        {"dims", module.dims().values()},
                        {"sub", p.sub},
                        {"chi", chi.chi.str()},
                        {"degree_bound", chi.degree_bound},
                        {"counts", counts}};
    emit_json(out, "euler", nlohmann::json::array({r}), nullptr);
  } else {
    out << chi.chi << '\n';
  }
  return kOk;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  using detail::Params;
  Params p;
  CLI::App app{"Rank-two cluster algebras and the Caldero-Chapoton map on K_{b,c}", "rank2cc"};
  app.require_subcommand(1);

  auto add_type = [&](CLI::App* sub) {
    sub->add_option("--b", p.b, "exponent b")->required()->check(CLI::Range(1, 1 << 20));
    sub->add_option("--c", p.c, "exponent c")->required()->check(CLI::Range(1, 1 << 20));
    sub->add_flag("--json", p.json, "JSON output");
  };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", p.seed, "RNG seed for generic modules (default: RANK2_SEED or 0)");
  };

  auto* var = app.add_subcommand("var", "print the cluster variable x_k");
  add_type(var);
  var->add_option("--k", p.k, "index")->required();

  auto* expand = app.add_subcommand("expand", "expand x_k in the cluster (x_m, x_{m+1})");
  add_type(expand);
  expand->add_option("--k", p.k, "index")->required();
  expand->add_option("--m", p.m, "cluster index")->required();

  auto* sweep = app.add_subcommand("sweep", "check positivity and exact division over a range");
  add_type(sweep);
  sweep->add_option("--k-min", p.k_min, "smallest k")->capture_default_str();
  sweep->add_option("--k-max", p.k_max, "largest k")->capture_default_str();
  sweep->add_option("--m-min", p.m_min, "smallest cluster index")->capture_default_str();
  sweep->add_option("--m-max", p.m_max, "largest cluster index")->capture_default_str();
  sweep->add_option("--check", p.checks, "comma list of positivity, laurent, denominator")->capture_default_str();
  sweep->add_option("--budget-ms", p.budget_ms, "wall-clock budget; 0 means none");
  sweep->add_flag("--force", p.force, "allow b or c above 3");

  auto* period = app.add_subcommand("period", "detect the period of the exchange sequence");
  add_type(period);
  period->add_option("--max", p.max_period, "largest period tried")->capture_default_str();

  auto* ccmap = app.add_subcommand("ccmap", "cluster character of the object attached to x_k");
  add_type(ccmap);
  ccmap->add_option("--k", p.k, "index")->required();
  ccmap->add_flag("--fold", p.fold, "also print the folded polynomial");
  add_seed(ccmap);

  auto* verify = app.add_subcommand("verify", "check fold(X) = x_k over a range of k");
  add_type(verify);
  verify->add_option("--k-min", p.k_min, "smallest k")->required();
  verify->add_option("--k-max", p.k_max, "largest k")->required();
  add_seed(verify);

  auto* exchange = app.add_subcommand("exchange", "check an exchange relation between cluster characters");
  add_type(exchange);
  exchange->add_option("--class", p.cls, "v or w")->required();
  exchange->add_option("--s", p.s, "shift")->required();
  add_seed(exchange);

  auto* euler = app.add_subcommand("euler", "Euler characteristic of a quiver Grassmannian");
  add_type(euler);
  euler->add_option("--module", p.module, "Pv, Pw, Iv, Iw, Sv, Sw or generic")->required();
  euler->add_option("--index", p.index, "vertex index within its class, from 1")->capture_default_str();
  euler->add_option("--dim", p.dim, "dimension vector for generic modules")->delimiter(',');
  euler->add_option("--sub", p.sub, "submodule dimension vector")->required()->delimiter(',');
  add_seed(euler);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*var) return detail::cmd_var(p, out);
    if (*expand) return detail::cmd_expand(p, out);
    if (*sweep) return detail::cmd_sweep(p, out);
    if (*period) return detail::cmd_period(p, out);
    if (*ccmap) return detail::cmd_ccmap(p, out);
    if (*verify) return detail::cmd_verify(p, out);
    if (*exchange) return detail::cmd_exchange(p, out);
    if (*euler) return detail::cmd_euler(p, out);
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Inconclusive& e) {
    err << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const Error& e) {
    err << "failed: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}

}  // namespace rank2cc::cli
