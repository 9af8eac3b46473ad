#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paley/graph.hpp"

namespace paley {

// Ratio bound n / (1 - r/tau) for an r-regular graph with least adjacency
// eigenvalue tau.
double hoffman_bound(const Graph& g);

// (sqrt(2q-1) + 1) / 2, prime q = 1 (mod 4) only.
double hanson_petridis(int q);

// sqrt(q - 4), non-square q > 5.
double maistrelli(int q);

// (p/(p-1)) ((log(q)/2 - 2 log log q)/log 2 + 1) for q = p^s, natural logs.
double cohen_lower(int q);

// 1 + theta(local graph) and 1 + theta*(local graph) of the Paley graph P_q.
double b_m(int q, double tol = 1e-7);
double b_m_star(int q, double tol = 1e-7);

struct HierarchyEntry {
  std::string kind;  // "esh" | "vtesh"
  int level = 0;
  std::string mode;  // "exhaustive" | "heuristic"
  double value = 0.0;
  double gap = 0.0;
};

struct BoundReport {
  int q = 0;
  std::optional<int> alpha;
  std::optional<double> theta;
  double theta_gap = 0.0;
  std::optional<double> hoffman;
  std::optional<double> maistrelli;
  std::optional<double> hanson;
  std::optional<double> cohen;
  std::optional<double> b_m;
  std::optional<double> b_m_star;
  double local_gap = 0.0;
  int ell = 0;
  std::vector<HierarchyEntry> hierarchy;
  std::map<std::string, std::string> skipped;  // field -> reason
};

struct ReportOptions {
  bool with_alpha = true;    // brute force, q <= 128
  bool with_local = true;    // b_M and b_M*
  double sdp_tol = 1e-7;
};

BoundReport assemble_report(int q, const ReportOptions& options = {});

}  // namespace paley
