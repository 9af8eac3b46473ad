#include "paley/certify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "paley/conic.hpp"
#include "paley/errors.hpp"
#include "paley/esc.hpp"
#include "paley/gf.hpp"
#include "paley/hierarchy.hpp"
#include "paley/jacobi.hpp"
#include "paley/parallel.hpp"
#include "paley/rng.hpp"

namespace paley {

namespace {

// Exact fraction on long long; denominators here stay tiny (divisors of
// small multiples of sqrt(q) and q + sqrt(q) for square q <= 125).
struct Frac {
  long long num = 0;
  long long den = 1;

  Frac() = default;
  Frac(long long n, long long d = 1) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(std::llabs(num), den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  Frac operator+(const Frac& o) const { return Frac(num * o.den + o.num * den, den * o.den); }
  Frac operator-(const Frac& o) const { return Frac(num * o.den - o.num * den, den * o.den); }
  Frac operator*(const Frac& o) const { return Frac(num * o.num, den * o.den); }
  bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
  bool negative() const { return num < 0; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

int isqrt(int q) {
  int r = 0;
  while (static_cast<long long>(r + 1) * (r + 1) <= q) ++r;
  return r;
}

}  // namespace

PaleyThetaSolution paley_theta_solution(int q) {
  Graph g = paley_graph(q);
  double rq = std::sqrt(static_cast<double>(q));
  PaleyThetaSolution sol;
  sol.q = q;
  sol.x_star.assign(q, 1.0 / rq);
  sol.X_star = SymMatrix(q);
  for (int i = 0; i < q; ++i) sol.X_star.set(i, i, 1.0 / rq);
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j)
      if (!g.adjacent(i, j)) sol.X_star.set(i, j, 2.0 / (q + rq));

  SymMatrix bordered(q + 1);
  for (int i = 0; i < q; ++i)
    for (int j = i; j < q; ++j) bordered.set(i, j, sol.X_star(i, j));
  for (int i = 0; i < q; ++i) bordered.set(i, q, sol.x_star[i]);
  bordered.set(q, q, 1.0);
  if (min_eigenvalue(bordered) < -1e-8)
    throw std::logic_error("paley_theta_solution: bordered matrix not psd");

  std::vector<double> ev = jacobi_eigenvalues(sol.X_star);
  int half = (q - 1) / 2;
  double mid = 2.0 / (1.0 + rq);
  for (int i = 0; i < half; ++i)
    if (std::fabs(ev[i]) > 1e-8) throw std::logic_error("paley_theta_solution: zero eigenvalue block off");
  for (int i = half; i < 2 * half; ++i)
    if (std::fabs(ev[i] - mid) > 1e-8)
      throw std::logic_error("paley_theta_solution: middle eigenvalue block off");
  if (std::fabs(ev[q - 1] - 1.0) > 1e-8)
    throw std::logic_error("paley_theta_solution: top eigenvalue off");
  return sol;
}

PaleyCertifier::PaleyCertifier(int q)
    : q_(q), ell_(ell(q)), sqrt_q_int_(isqrt(q)), rq_(std::sqrt(static_cast<double>(q))),
      g_(paley_graph(q)), sol_(paley_theta_solution(q)) {}

EscWeights PaleyCertifier::assemble(const std::vector<int>& I,
                                    const std::vector<int>& S_local) const {
  int k = static_cast<int>(I.size());
  EscWeights w;
  w.I = I;
  w.nu = SymMatrix(k);
  w.mu.assign(k, 0.0);
  std::vector<char> in_s(k, 0);
  for (int a : S_local) in_s[a] = 1;
  if (!S_local.empty()) {
    w.has_sigma = true;
    w.sigma = 2.0 / (q_ + rq_);
    w.S = S_local;
  }
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      if (in_s[a] && in_s[b]) continue;
      w.nu.set(a, b, sol_.X_star(I[a], I[b]));
    }
  double nu_total = 0.0;
  for (int a = 0; a < k; ++a) {
    double row = 0.0;
    for (int b = 0; b < k; ++b)
      if (b != a) row += w.nu(std::min(a, b), std::max(a, b));
    w.mu[a] = sol_.x_star[I[a]] - row - (in_s[a] ? w.sigma : 0.0);
    nu_total += row;
  }
  nu_total /= 2.0;
  double mu_total = std::accumulate(w.mu.begin(), w.mu.end(), 0.0);
  w.lambda = 1.0 - mu_total - nu_total - (w.has_sigma ? w.sigma : 0.0);
  return w;
}

EscWeights PaleyCertifier::base(const std::vector<int>& I) const {
  int k = static_cast<int>(I.size());
  if (k > ell_)
    fail(Err::PreconditionViolated,
         "esc_certificate_base: |I| = " + std::to_string(k) + " exceeds ell(q) = " + std::to_string(ell_));
  return assemble(I, {});
}

EscWeights PaleyCertifier::plus1(const std::vector<int>& I) const {
  int k = static_cast<int>(I.size());
  if (q_ < 25) fail(Err::PreconditionViolated, "esc_certificate_plus1: requires q >= 25");
  if (k != ell_ + 1)
    fail(Err::PreconditionViolated, "esc_certificate_plus1: |I| must equal ell(q) + 1");

  std::vector<int> isolated;  // local indices with no neighbor inside I
  for (int a = 0; a < k; ++a) {
    bool has_neighbor = false;
    for (int b = 0; b < k && !has_neighbor; ++b)
      if (b != a && g_.adjacent(I[a], I[b])) has_neighbor = true;
    if (!has_neighbor) isolated.push_back(a);
  }
  if (isolated.empty()) return assemble(I, {});  // every row has an off-diagonal zero

  std::vector<int> S_local = isolated;
  if (static_cast<int>(isolated.size()) <= 2) {
    // augment by the lex-first non-adjacent pair among I minus the first
    // isolated vertex
    int skip = isolated.front();
    bool found = false;
    for (int a = 0; a < k && !found; ++a) {
      if (a == skip) continue;
      for (int b = a + 1; b < k && !found; ++b) {
        if (b == skip) continue;
        if (!g_.adjacent(I[a], I[b])) {
          for (int v : {a, b})
            if (!std::count(S_local.begin(), S_local.end(), v)) S_local.push_back(v);
          found = true;
        }
      }
    }
    if (!found)
      fail(Err::NoAugmentingPair,
           "esc_certificate_plus1: no non-adjacent pair to extend the stable set");
    std::sort(S_local.begin(), S_local.end());
  }
  return assemble(I, S_local);
}

double PaleyCertifier::verify(const EscWeights& w, double* min_weight) const {
  int k = static_cast<int>(w.I.size());
  double minw = w.lambda;
  for (double m : w.mu) minw = std::min(minw, m);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) minw = std::min(minw, w.nu(a, b));
  if (w.has_sigma) minw = std::min(minw, w.sigma);
  if (min_weight) *min_weight = minw;

  std::vector<char> in_s(k, 0);
  for (int a : w.S) in_s[a] = 1;

  if (sqrt_q_int_ * sqrt_q_int_ == q_) {
    // exact route: all certificate quantities live in Q for square q
    Frac xs(1, sqrt_q_int_);
    Frac off(2, q_ + sqrt_q_int_);
    Frac zero(0);
    Frac sigma = w.has_sigma ? off : zero;
    std::vector<std::vector<Frac>> nu(k, std::vector<Frac>(k, zero));
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) {
        if (in_s[a] && in_s[b]) continue;
        if (!g_.adjacent(w.I[a], w.I[b])) nu[a][b] = nu[b][a] = off;
      }
    std::vector<Frac> mu(k, zero);
    Frac mu_sum = zero, nu_sum = zero;
    for (int a = 0; a < k; ++a) {
      Frac row = zero;
      for (int b = 0; b < k; ++b)
        if (b != a) row = row + nu[a][b];
      mu[a] = xs - row - (in_s[a] ? sigma : zero);
      mu_sum = mu_sum + mu[a];
      nu_sum = nu_sum + row;
    }
    nu_sum = nu_sum * Frac(1, 2);
    Frac lambda = Frac(1) - mu_sum - nu_sum - sigma;
    Frac minf = lambda;
    for (const Frac& m : mu)
      if ((m - minf).negative()) minf = m;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if ((nu[a][b] - minf).negative()) minf = nu[a][b];
    if (w.has_sigma && (sigma - minf).negative()) minf = sigma;
    if (min_weight) *min_weight = minf.value();
    // exact reconstruction check
    for (int a = 0; a < k; ++a)
      for (int b = a; b < k; ++b) {
        Frac rebuilt = zero;
        if (a == b) {
          rebuilt = mu[a];
          for (int c = 0; c < k; ++c)
            if (c != a) rebuilt = rebuilt + nu[a][c];
          if (in_s[a]) rebuilt = rebuilt + sigma;
        } else {
          rebuilt = nu[a][b];
          if (in_s[a] && in_s[b]) rebuilt = rebuilt + sigma;
        }
        Frac expect = g_.adjacent(w.I[a], w.I[b]) ? zero : (a == b ? xs : off);
        if (!(rebuilt == expect)) return 1.0;  // defect; exact route must match exactly
      }
    return 0.0;
  }

  double max_err = 0.0;
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) {
      double rebuilt;
      if (a == b) {
        rebuilt = w.mu[a];
        for (int c = 0; c < k; ++c)
          if (c != a) rebuilt += w.nu(std::min(a, c), std::max(a, c));
        if (in_s[a]) rebuilt += w.sigma;
      } else {
        rebuilt = w.nu(a, b);
        if (in_s[a] && in_s[b]) rebuilt += w.sigma;
      }
      max_err = std::max(max_err, std::fabs(rebuilt - sol_.X_star(w.I[a], w.I[b])));
    }
  return max_err;
}

EscWeights esc_certificate_base(int q, const std::vector<int>& I) {
  return PaleyCertifier(q).base(I);
}

EscWeights esc_certificate_plus1(int q, const std::vector<int>& I) {
  return PaleyCertifier(q).plus1(I);
}

namespace {

unsigned long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

std::vector<int> nth_subset_init(int k) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

bool next_subset(std::vector<int>& idx, int n) {
  int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[i] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

}  // namespace

StagnationReport verify_stagnation(int q, int k, long samples, uint64_t seed, int threads) {
  StagnationReport rep;
  rep.q = q;
  rep.k = k;
  rep.exhaustive = samples <= 0;

  PaleyCertifier cert(q);
  int lq = cert.level_cap();
  bool base_route = k <= lq;
  bool plus1_route = false;
  if (!base_route && k == lq + 1 && q >= 25) {
    int alpha = brute_force_alpha(cert.graph()).first;
    plus1_route = alpha < lq;
  }
  rep.used_lp_scan = !base_route && !plus1_route;

  std::vector<std::vector<int>> subsets;
  if (rep.exhaustive) {
    if (binom(q, k) > 2000000ULL)
      fail(Err::CombinatorialBlowup, "verify_stagnation: exhaustive enumeration too large");
    std::vector<int> idx = nth_subset_init(k);
    do {
      subsets.push_back(idx);
    } while (next_subset(idx, q));
  } else {
    Rng rng(seed);
    subsets.reserve(samples);
    for (long i = 0; i < samples; ++i) subsets.push_back(sample_subset(rng, q, k));
  }
  rep.checked = static_cast<long>(subsets.size());

  struct Partial {
    long passed = 0;
    double max_err = 0.0;
    double min_weight = 1.0;
    std::vector<std::vector<int>> failures;
  };
  std::vector<Partial> parts(std::max(threads, 1));
  parallel_for(threads, subsets.size(), [&](std::size_t w, std::size_t lo, std::size_t hi) {
    Partial& p = parts[w];
    for (std::size_t i = lo; i < hi; ++i) {
      const std::vector<int>& I = subsets[i];
      bool ok = false;
      if (rep.used_lp_scan) {
        EscOutcome out = esc_check(cert.solution().X_star, cert.graph(), I, 1e-9);
        ok = out.satisfied || out.violation <= 1e-9;
      } else {
        try {
          EscWeights wts = base_route ? cert.base(I) : cert.plus1(I);
          double minw = 0.0;
          double err = cert.verify(wts, &minw);
          p.max_err = std::max(p.max_err, err);
          p.min_weight = std::min(p.min_weight, minw);
          ok = err <= 1e-12 && minw >= -1e-12;
        } catch (const Error&) {
          ok = false;
        }
      }
      if (ok)
        ++p.passed;
      else if (p.failures.size() < 8)
        p.failures.push_back(I);
    }
  });

  rep.min_weight = 1.0;
  for (const Partial& p : parts) {
    rep.passed += p.passed;
    rep.max_recon_error = std::max(rep.max_recon_error, p.max_err);
    rep.min_weight = std::min(rep.min_weight, p.min_weight);
    for (const auto& f : p.failures)
      if (rep.failures.size() < 8) rep.failures.push_back(f);
  }
  return rep;
}

}  // namespace paley
