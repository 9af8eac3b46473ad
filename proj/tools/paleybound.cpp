// paleybound: stability-number bounds for Paley graphs through the Lovasz
// theta function, exact subgraph constraints, and their vertex-transitive
// variant.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "paley/bounds.hpp"
#include "paley/certify.hpp"
#include "paley/errors.hpp"
#include "paley/gf.hpp"
#include "paley/graph.hpp"
#include "paley/hierarchy.hpp"
#include "paley/theta.hpp"

using json = nlohmann::ordered_json;
using namespace paley;

namespace {

constexpr const char* kSchema = "paleybound-v1";

struct GlobalOpts {
  std::string format = "text";
  std::string out_path;
  uint64_t seed = 20250101;
  int threads = 1;
};

double round4(double v) { return std::round(v * 1e4) / 1e4; }

std::string fmt4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt4(*v) : "-"; }

void write_output(const GlobalOpts& g, const std::string& body) {
  if (g.out_path.empty()) {
    std::fputs(body.c_str(), stdout);
  } else {
    std::ofstream f(g.out_path, std::ios::binary);
    if (!f) fail(Err::DomainError, "cannot open output path " + g.out_path);
    f << body;
  }
}

json envelope(const GlobalOpts& g, const std::string& command) {
  json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["seed"] = g.seed;
  j["threads"] = g.threads;
  return j;
}

void emit_json(const GlobalOpts& g, json j) { write_output(g, j.dump(2) + "\n"); }

std::pair<int, int> parse_range(const std::string& s) {
  auto pos = s.find("..");
  if (pos == std::string::npos) fail(Err::DomainError, "range must look like A..B: " + s);
  return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
}

bool valid_paley_order(int q) {
  if (q < 5 || q % 4 != 1) return false;
  try {
    factor_prime_power(q);
    return true;
  } catch (const Error&) {
    return false;
  }
}

HierarchyMode parse_mode(const std::string& m) {
  if (m == "exhaustive") return HierarchyMode::Exhaustive;
  if (m == "heuristic") return HierarchyMode::Heuristic;
  fail(Err::DomainError, "mode must be exhaustive or heuristic: " + m);
}

// ---------------------------------------------------------------- commands

int cmd_paley(const GlobalOpts& g, int q, const std::string& format) {
  Graph graph = paley_graph(q);
  auto edges = graph.edges();
  if (format == "edgelist") {
    std::string body;
    for (auto [u, v] : edges) body += std::to_string(u) + " " + std::to_string(v) + "\n";
    write_output(g, body);
  } else if (format == "json") {
    json j = envelope(g, "paley");
    j["data"]["q"] = q;
    j["data"]["order"] = graph.order();
    j["data"]["edge_count"] = graph.edge_count();
    json e = json::array();
    for (auto [u, v] : edges) e.push_back({u, v});
    j["data"]["edges"] = std::move(e);
    emit_json(g, j);
  } else {
    fail(Err::DomainError, "format must be edgelist or json: " + format);
  }
  return 0;
}

int cmd_alpha(const GlobalOpts& g, int q) {
  Graph graph = paley_graph(q);
  auto [alpha, witness] = brute_force_alpha(graph);
  if (g.format == "json") {
    json j = envelope(g, "alpha");
    j["data"]["q"] = q;
    j["data"]["alpha"] = alpha;
    j["data"]["witness"] = witness;
    emit_json(g, j);
  } else {
    std::string body = "alpha(P_" + std::to_string(q) + ") = " + std::to_string(alpha) + "\nwitness:";
    for (int v : witness) body += " " + std::to_string(v);
    body += "\n";
    write_output(g, body);
  }
  return 0;
}

int cmd_theta(const GlobalOpts& g, int q, const std::string& variant, const std::string& which) {
  Graph graph = paley_graph(q);
  std::string label = "P_" + std::to_string(q);
  if (which == "local") {
    graph = local_graph(graph, 0).first;
    label += "^L";
  } else if (which != "full") {
    fail(Err::DomainError, "--graph must be full or local: " + which);
  }
  ThetaSolution t;
  if (variant == "lovasz") {
    t = theta_lifted(graph);
  } else if (variant == "schrijver") {
    t = theta_schrijver(graph);
  } else {
    fail(Err::DomainError, "--variant must be lovasz or schrijver: " + variant);
  }
  if (t.status != SdpStatus::Optimal)
    fail(Err::ConvergenceFailure, "solver returned " + to_string(t.status));
  if (g.format == "json") {
    json j = envelope(g, "theta");
    j["data"]["q"] = q;
    j["data"]["graph"] = which;
    j["data"]["variant"] = variant;
    j["data"]["order"] = graph.order();
    j["data"]["value"] = round4(t.value);
    j["data"]["solver_gap"] = t.solver_gap;
    emit_json(g, j);
  } else {
    std::string name = variant == "schrijver" ? "theta*" : "theta";
    write_output(g, name + "(" + label + ") = " + fmt4(t.value) + "\n");
  }
  return 0;
}

const char* kBoundCols[] = {"q",     "alpha", "theta",      "hoffman", "maistrelli",
                            "hanson", "cohen", "b_M",        "b_M_star", "ell"};

int cmd_bounds(const GlobalOpts& g, const std::vector<int>& qs) {
  struct Row {
    BoundReport rep;
  };
  std::vector<Row> rows;
  for (int q : qs) rows.push_back({assemble_report(q)});

  if (g.format == "json") {
    json j = envelope(g, "bounds");
    json arr = json::array();
    for (const Row& r : rows) {
      json o;
      o["q"] = r.rep.q;
      if (r.rep.alpha)
        o["alpha"] = *r.rep.alpha;
      else
        o["alpha"] = nullptr;
      auto put = [&o](const char* key, const std::optional<double>& v) {
        if (v)
          o[key] = round4(*v);
        else
          o[key] = nullptr;
      };
      put("theta", r.rep.theta);
      put("hoffman", r.rep.hoffman);
      put("maistrelli", r.rep.maistrelli);
      put("hanson", r.rep.hanson);
      put("cohen", r.rep.cohen);
      put("b_M", r.rep.b_m);
      put("b_M_star", r.rep.b_m_star);
      o["ell"] = r.rep.ell;
      json sk = json::object();
      for (const auto& [k, v] : r.rep.skipped) sk[k] = v;
      o["skipped"] = std::move(sk);
      arr.push_back(std::move(o));
    }
    j["data"]["rows"] = std::move(arr);
    emit_json(g, j);
    return 0;
  }

  auto cell = [](const Row& r, int c) -> std::string {
    switch (c) {
      case 0: return std::to_string(r.rep.q);
      case 1: return r.rep.alpha ? std::to_string(*r.rep.alpha) : "-";
      case 2: return fmt_opt(r.rep.theta);
      case 3: return fmt_opt(r.rep.hoffman);
      case 4: return fmt_opt(r.rep.maistrelli);
      case 5: return fmt_opt(r.rep.hanson);
      case 6: return fmt_opt(r.rep.cohen);
      case 7: return fmt_opt(r.rep.b_m);
      case 8: return fmt_opt(r.rep.b_m_star);
      default: return std::to_string(r.rep.ell);
    }
  };

  std::string body;
  if (g.format == "csv") {
    for (int c = 0; c < 10; ++c) body += std::string(c ? "," : "") + kBoundCols[c];
    body += "\n";
    for (const Row& r : rows) {
      for (int c = 0; c < 10; ++c) body += (c ? "," : "") + cell(r, c);
      body += "\n";
    }
  } else {
    char line[256];
    std::snprintf(line, sizeof(line), "%5s %6s %9s %9s %11s %9s %9s %9s %9s %4s\n", kBoundCols[0],
                  kBoundCols[1], kBoundCols[2], kBoundCols[3], kBoundCols[4], kBoundCols[5],
                  kBoundCols[6], kBoundCols[7], kBoundCols[8], kBoundCols[9]);
    body += line;
    for (const Row& r : rows) {
      std::snprintf(line, sizeof(line), "%5s %6s %9s %9s %11s %9s %9s %9s %9s %4s\n",
                    cell(r, 0).c_str(), cell(r, 1).c_str(), cell(r, 2).c_str(), cell(r, 3).c_str(),
                    cell(r, 4).c_str(), cell(r, 5).c_str(), cell(r, 6).c_str(), cell(r, 7).c_str(),
                    cell(r, 8).c_str(), cell(r, 9).c_str());
      body += line;
    }
  }
  write_output(g, body);
  return 0;
}

json bound_result_json(const BoundResult& r) {
  json o;
  o["value"] = round4(r.value);
  o["exactness"] = r.exactness == Exactness::Exact ? "exact" : "upper-bound";
  o["converged"] = r.converged;
  o["solver_gap"] = r.solver_gap;
  json tr = json::array();
  for (const RoundTrace& t : r.trace) {
    json row;
    row["objective"] = round4(t.objective);
    row["active_cuts"] = t.active_cuts;
    row["new_cuts"] = t.new_cuts;
    tr.push_back(std::move(row));
  }
  o["trace"] = std::move(tr);
  return o;
}

std::string bound_result_text(const std::string& name, const BoundResult& r) {
  std::string body = name + " = " + fmt4(r.value) + "  (" +
                     (r.exactness == Exactness::Exact ? "exact" : "upper bound") +
                     (r.converged ? ", converged" : ", not converged") + ")\n";
  body += "round  objective  active  new\n";
  int round = 0;
  for (const RoundTrace& t : r.trace) {
    char line[128];
    std::snprintf(line, sizeof(line), "%5d  %9s  %6d  %3d\n", round++, fmt4(t.objective).c_str(),
                  t.active_cuts, t.new_cuts);
    body += line;
  }
  return body;
}

int cmd_level(const GlobalOpts& g, const std::string& kind, int q, int level,
              const std::string& mode, int cycles, int max_cuts, long budget) {
  HierarchyConfig cfg;
  cfg.level = level;
  cfg.mode = parse_mode(mode);
  cfg.cycles = cycles;
  cfg.max_new_cuts = max_cuts;
  cfg.separation_budget = budget;
  cfg.seed = g.seed;
  cfg.threads = g.threads;
  Graph graph = paley_graph(q);
  BoundResult r = kind == "vtesh" ? vtesh_level(graph, cfg) : z_level(graph, cfg);
  std::string name = (kind == "vtesh" ? "z'_" : "z_") + std::to_string(level) + "(P_" +
                     std::to_string(q) + ")";
  if (g.format == "json") {
    json j = envelope(g, kind);
    j["data"]["q"] = q;
    j["data"]["level"] = level;
    j["data"]["mode"] = mode;
    j["data"]["result"] = bound_result_json(r);
    emit_json(g, j);
  } else {
    write_output(g, bound_result_text(name, r));
  }
  return 0;
}

int cmd_verify(const GlobalOpts& g, int q, long samples, std::optional<int> forced_level) {
  PaleyCertifier cert(q);  // construction re-verifies the closed form
  int lq = cert.level_cap();
  int alpha = brute_force_alpha(cert.graph()).first;

  std::vector<int> levels;
  if (forced_level) {
    levels.push_back(*forced_level);
  } else {
    for (int k = 2; k <= lq; ++k) levels.push_back(k);
    if (alpha < lq && q >= 25) levels.push_back(lq + 1);
  }

  auto binom_leq = [](int n, int k, unsigned long long cap) {
    unsigned long long c = 1;
    k = std::min(k, n - k);
    for (int i = 1; i <= k; ++i) {
      c = c * static_cast<unsigned long long>(n - k + i) / i;
      if (c > cap) return false;
    }
    return true;
  };

  json j = envelope(g, "verify");
  j["data"]["q"] = q;
  j["data"]["alpha"] = alpha;
  j["data"]["ell"] = lq;
  j["data"]["closed_form_verified"] = true;
  json lv = json::array();
  std::string body = "P_" + std::to_string(q) + ": alpha = " + std::to_string(alpha) +
                     ", ell = " + std::to_string(lq) + ", closed form verified\n";
  bool all_ok = true;
  std::vector<int> first_failure;
  int first_failure_level = -1;
  for (int k : levels) {
    long n_samples = binom_leq(q, k, 30000) ? 0 : samples;
    StagnationReport rep = verify_stagnation(q, k, n_samples, g.seed, g.threads);
    bool ok = rep.passed == rep.checked;
    if (!ok && first_failure.empty() && !rep.failures.empty()) {
      first_failure = rep.failures.front();
      first_failure_level = k;
    }
    all_ok = all_ok && ok;
    json o;
    o["level"] = k;
    o["mode"] = rep.exhaustive ? "exhaustive" : "sampled";
    o["route"] = rep.used_lp_scan ? "lp-scan" : "certificate";
    o["checked"] = rep.checked;
    o["passed"] = rep.passed;
    o["max_reconstruction_error"] = rep.max_recon_error;
    o["min_weight"] = rep.min_weight;
    o["ok"] = ok;
    lv.push_back(std::move(o));
    char line[192];
    std::snprintf(line, sizeof(line), "  level %d: %s %s, %ld/%ld passed, max err %.2e -> %s\n", k,
                  rep.exhaustive ? "exhaustive" : "sampled",
                  rep.used_lp_scan ? "lp-scan" : "certificates", rep.passed, rep.checked,
                  rep.max_recon_error, ok ? "ok" : "FAIL");
    body += line;
  }
  j["data"]["levels"] = std::move(lv);
  j["data"]["ok"] = all_ok;
  if (!all_ok && !first_failure.empty()) {
    j["data"]["first_failure"] = {{"level", first_failure_level}, {"subset", first_failure}};
    body += "first failing subset at level " + std::to_string(first_failure_level) + ":";
    for (int v : first_failure) body += " " + std::to_string(v);
    body += "\n";
  }
  if (g.format == "json")
    emit_json(g, j);
  else
    write_output(g, body);
  return all_ok ? 0 : 4;
}

int cmd_table(const GlobalOpts& g, const std::string& q_range, const std::string& level_range,
              const std::string& kind, const std::string& mode, int cycles, int max_cuts,
              long budget) {
  auto [q_lo, q_hi] = parse_range(q_range);
  auto [l_lo, l_hi] = parse_range(level_range);
  if (kind != "esh" && kind != "vtesh") fail(Err::DomainError, "--kind must be esh or vtesh");

  struct Row {
    int q, level;
    BoundResult res;
  };
  std::vector<Row> rows;
  for (int q = q_lo; q <= q_hi; ++q) {
    if (!valid_paley_order(q)) continue;
    Graph graph = paley_graph(q);
    for (int level = l_lo; level <= l_hi; ++level) {
      HierarchyConfig cfg;
      cfg.level = level;
      cfg.mode = parse_mode(mode);
      cfg.cycles = cycles;
      cfg.max_new_cuts = max_cuts;
      cfg.separation_budget = budget;
      cfg.seed = g.seed;
      cfg.threads = g.threads;
      BoundResult r = kind == "vtesh" ? vtesh_level(graph, cfg) : z_level(graph, cfg);
      rows.push_back({q, level, std::move(r)});
    }
  }

  if (g.format == "json") {
    json j = envelope(g, "table");
    j["data"]["kind"] = kind;
    j["data"]["mode"] = mode;
    json arr = json::array();
    for (const Row& r : rows) {
      json o;
      o["q"] = r.q;
      o["level"] = r.level;
      o["value"] = round4(r.res.value);
      o["exactness"] = r.res.exactness == Exactness::Exact ? "exact" : "upper-bound";
      o["converged"] = r.res.converged;
      arr.push_back(std::move(o));
    }
    j["data"]["rows"] = std::move(arr);
    emit_json(g, j);
  } else if (g.format == "csv") {
    std::string body = "q,kind,level,mode,value,exactness,converged\n";
    for (const Row& r : rows) {
      body += std::to_string(r.q) + "," + kind + "," + std::to_string(r.level) + "," + mode + "," +
              fmt4(r.res.value) + "," +
              (r.res.exactness == Exactness::Exact ? "exact" : "upper-bound") + "," +
              (r.res.converged ? "yes" : "no") + "\n";
    }
    write_output(g, body);
  } else {
    std::string body = "    q  level      value  exactness\n";
    for (const Row& r : rows) {
      char line[128];
      std::snprintf(line, sizeof(line), "%5d  %5d  %9s  %s\n", r.q, r.level,
                    fmt4(r.res.value).c_str(),
                    r.res.exactness == Exactness::Exact ? "exact" : "upper-bound");
      body += line;
    }
    write_output(g, body);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stability-number bounds for Paley graphs: Lovasz theta, exact subgraph "
               "hierarchy (ESH), and the vertex-transitive variant (VTESH)"};
  app.fallthrough();
  app.set_config("--config", "", "key = value configuration file");

  GlobalOpts g;
  app.add_option("--format", g.format, "output format: text | csv | json")
      ->default_val("text");
  app.add_option("--out", g.out_path, "write output to a file instead of stdout");
  app.add_option("--seed", g.seed, "seed for all randomized components")->default_val(20250101);
  app.add_option("--threads", g.threads, "worker thread count (1 = bytewise deterministic)")
      ->envname("PALEYBOUND_THREADS")
      ->default_val(1);

  int q = 0;
  std::string paley_format = "edgelist";
  auto* c_paley = app.add_subcommand("paley", "emit the Paley graph P_q as an edge list");
  c_paley->add_option("q", q, "prime power, q = 1 (mod 4)")->required();
  c_paley->add_option("--format", paley_format, "edgelist | json")->default_val("edgelist");

  auto* c_alpha = app.add_subcommand("alpha", "exact stability number by branch and bound");
  c_alpha->add_option("q", q)->required();

  std::string variant = "lovasz", which_graph = "full";
  auto* c_theta = app.add_subcommand("theta", "Lovasz theta or the Schrijver refinement");
  c_theta->add_option("q", q)->required();
  c_theta->add_option("--variant", variant, "lovasz | schrijver")->default_val("lovasz");
  c_theta->add_option("--graph", which_graph, "full | local")->default_val("full");

  std::vector<int> q_list;
  auto* c_bounds = app.add_subcommand("bounds", "closed-form and SDP bound table");
  c_bounds->add_option("--q", q_list, "comma separated list of orders")->required()->delimiter(',');

  int level = 2, cycles = 10, max_cuts = 200;
  long budget = 20000;
  std::string mode = "exhaustive";
  for (const char* name : {"esh", "vtesh"}) {
    auto* c = app.add_subcommand(name, std::string(name) == "esh"
                                           ? "exact subgraph hierarchy level z_k"
                                           : "vertex-transitive hierarchy level z'_k");
    c->add_option("q", q)->required();
    c->add_option("--level", level, "subgraph order k")->required();
    c->add_option("--mode", mode, "exhaustive | heuristic")->default_val("exhaustive");
    c->add_option("--cycles", cycles, "heuristic outer cycles")->default_val(10);
    c->add_option("--max-cuts", max_cuts, "new cuts per heuristic cycle")->default_val(200);
    c->add_option("--budget", budget, "separation evaluations per cycle")->default_val(20000);
  }

  long samples = 10000;
  int forced_level = -1;
  auto* c_verify = app.add_subcommand("verify", "stagnation certificates for P_q");
  c_verify->add_option("q", q)->required();
  c_verify->add_option("--samples", samples, "sample count above the exhaustive threshold")
      ->default_val(10000);
  c_verify->add_option("--level", forced_level, "verify a single level instead of 2..ell(q)");

  std::string q_range, level_range = "2..2", table_kind = "vtesh", table_mode = "heuristic";
  auto* c_table = app.add_subcommand("table", "batch hierarchy runs over a range of q");
  c_table->add_option("--q-range", q_range, "A..B")->required();
  c_table->add_option("--levels", level_range, "A..B")->default_val("2..2");
  c_table->add_option("--kind", table_kind, "esh | vtesh")->default_val("vtesh");
  c_table->add_option("--mode", table_mode, "exhaustive | heuristic")->default_val("heuristic");
  c_table->add_option("--cycles", cycles)->default_val(10);
  c_table->add_option("--max-cuts", max_cuts)->default_val(200);
  c_table->add_option("--budget", budget)->default_val(20000);

  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  // the numeric kernels stay single threaded; parallelism lives in the
  // library's own workers
  setenv("OPENBLAS_NUM_THREADS", "1", g.threads == 1 ? 1 : 0);
  setenv("OMP_NUM_THREADS", "1", g.threads == 1 ? 1 : 0);

  try {
    if (app.got_subcommand(c_paley)) return cmd_paley(g, q, paley_format);
    if (app.got_subcommand(c_alpha)) return cmd_alpha(g, q);
    if (app.got_subcommand(c_theta)) return cmd_theta(g, q, variant, which_graph);
    if (app.got_subcommand(c_bounds)) return cmd_bounds(g, q_list);
    if (app.got_subcommand("esh")) return cmd_level(g, "esh", q, level, mode, cycles, max_cuts, budget);
    if (app.got_subcommand("vtesh"))
      return cmd_level(g, "vtesh", q, level, mode, cycles, max_cuts, budget);
    if (app.got_subcommand(c_verify))
      return cmd_verify(g, q, samples, forced_level >= 0 ? std::optional<int>(forced_level)
                                                         : std::nullopt);
    if (app.got_subcommand(c_table))
      return cmd_table(g, q_range, level_range, table_kind, table_mode, cycles, max_cuts, budget);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == Err::CombinatorialBlowup) {
      std::cerr << "hint: rerun with --mode heuristic\n";
      return 3;
    }
    switch (e.code()) {
      case Err::ConvergenceFailure:
      case Err::PresolveError:
        return 1;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
