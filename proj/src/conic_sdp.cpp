#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "paley/conic.hpp"
#include "paley/errors.hpp"
#include "paley/jacobi.hpp"

extern "C" {
void dpotrf_(const char* uplo, const int* n, double* a, const int* lda, int* info);
void dpotrs_(const char* uplo, const int* n, const int* nrhs, const double* a, const int* lda,
             double* b, const int* ldb, int* info);
void dsyev_(const char* jobz, const char* uplo, const int* n, double* a, const int* lda,
            double* w, double* work, const int* lwork, int* info);
void dgesvd_(const char* jobu, const char* jobvt, const int* m, const int* n, double* a,
             const int* lda, double* s, double* u, const int* ldu, double* vt, const int* ldvt,
             double* work, const int* lwork, int* info);
}

namespace paley {

LinearConstraint LinearConstraint::from_sym(const SymMatrix& m, double rhs, double prune) {
  LinearConstraint c;
  c.rhs = rhs;
  for (int i = 0; i < m.order(); ++i)
    for (int j = i; j < m.order(); ++j)
      if (std::fabs(m(i, j)) > prune) c.a.push_back({i, j, m(i, j)});
  return c;
}

double LinearConstraint::dot(const SymMatrix& x) const {
  double s = 0.0;
  for (const auto& e : a) s += (e.i == e.j ? 1.0 : 2.0) * e.v * x(e.i, e.j);
  return s;
}

std::string to_string(SdpStatus s) {
  switch (s) {
    case SdpStatus::Optimal:
      return "optimal";
    case SdpStatus::MaxIterations:
      return "max-iterations";
    case SdpStatus::PrimalInfeasible:
      return "primal-infeasible";
    case SdpStatus::NumericalTrouble:
      return "numerical-trouble";
  }
  return "?";
}

namespace {

// Column-major square matrix used by the solver internals.
struct Mat {
  int n = 0;
  std::vector<double> a;
  Mat() = default;
  explicit Mat(int n) : n(n), a(static_cast<std::size_t>(n) * n, 0.0) {}
  double& at(int i, int j) { return a[static_cast<std::size_t>(j) * n + i]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(j) * n + i]; }
  static Mat identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }
};

// C = A * B
Mat mul(const Mat& A, const Mat& B) {
  int n = A.n;
  Mat C(n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      double b = B.at(k, j);
      if (b == 0.0) continue;
      const double* acol = &A.a[static_cast<std::size_t>(k) * n];
      double* ccol = &C.a[static_cast<std::size_t>(j) * n];
      for (int i = 0; i < n; ++i) ccol[i] += acol[i] * b;
    }
  return C;
}

// C = A * B^T
Mat mul_bt(const Mat& A, const Mat& B) {
  int n = A.n;
  Mat C(n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      double b = B.at(j, k);
      if (b == 0.0) continue;
      const double* acol = &A.a[static_cast<std::size_t>(k) * n];
      double* ccol = &C.a[static_cast<std::size_t>(j) * n];
      for (int i = 0; i < n; ++i) ccol[i] += acol[i] * b;
    }
  return C;
}

// C = A^T * B
Mat mul_at(const Mat& A, const Mat& B) {
  int n = A.n;
  Mat C(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const double* acol = &A.a[static_cast<std::size_t>(i) * n];
      const double* bcol = &B.a[static_cast<std::size_t>(j) * n];
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += acol[k] * bcol[k];
      C.at(i, j) = s;
    }
  return C;
}

void symmetrize(Mat& m) {
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j) {
      double v = 0.5 * (m.at(i, j) + m.at(j, i));
      m.at(i, j) = v;
      m.at(j, i) = v;
    }
}

bool chol_lower(Mat& m) {
  int n = m.n, info = 0;
  dpotrf_("L", &n, m.a.data(), &n, &info);
  if (info != 0) return false;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i) m.at(i, j) = 0.0;
  return true;
}

std::vector<double> eig_values(Mat m) {
  int n = m.n, info = 0, lwork = -1;
  std::vector<double> w(n);
  double wq = 0.0;
  dsyev_("N", "L", &n, m.a.data(), &n, w.data(), &wq, &lwork, &info);
  lwork = static_cast<int>(wq);
  std::vector<double> work(std::max(lwork, 1));
  dsyev_("N", "L", &n, m.a.data(), &n, w.data(), work.data(), &lwork, &info);
  if (info != 0) fail(Err::ConvergenceFailure, "dsyev failed");
  return w;
}

void svd(Mat k, Mat& u, Mat& vt, std::vector<double>& sig) {
  int n = k.n, info = 0, lwork = -1;
  u = Mat(n);
  vt = Mat(n);
  sig.assign(n, 0.0);
  double wq = 0.0;
  dgesvd_("A", "A", &n, &n, k.a.data(), &n, sig.data(), u.a.data(), &n, vt.a.data(), &n, &wq,
          &lwork, &info);
  lwork = static_cast<int>(wq);
  std::vector<double> work(std::max(lwork, 1));
  dgesvd_("A", "A", &n, &n, k.a.data(), &n, sig.data(), u.a.data(), &n, vt.a.data(), &n,
          work.data(), &lwork, &info);
  if (info != 0) fail(Err::ConvergenceFailure, "dgesvd failed");
}

Mat from_packed(const SymMatrix& s) {
  Mat m(s.order());
  for (int i = 0; i < s.order(); ++i)
    for (int j = 0; j < s.order(); ++j) m.at(i, j) = s(i, j);
  return m;
}

SymMatrix to_packed(const Mat& m) {
  SymMatrix s(m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = i; j < m.n; ++j) s.set(i, j, 0.5 * (m.at(i, j) + m.at(j, i)));
  return s;
}

double dot_rows(const std::vector<SymEntry>& a, const Mat& x) {
  double s = 0.0;
  for (const auto& e : a) s += (e.i == e.j ? 1.0 : 2.0) * e.v * x.at(e.i, e.j);
  return s;
}

double frob_inner(const Mat& a, const Mat& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.a.size(); ++i) s += a.a[i] * b.a[i];
  return s;
}

double max_abs(const Mat& m) {
  double v = 0.0;
  for (double x : m.a) v = std::max(v, std::fabs(x));
  return v;
}

// Largest step with  base + alpha * dir  psd, in the Sigma-scaled frame:
// dir_scaled has psd limit -1/lambda_min(Sigma^-1/2 dir_scaled Sigma^-1/2).
double psd_max_step(const Mat& dir_scaled, const std::vector<double>& sig) {
  int n = dir_scaled.n;
  Mat r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      r.at(i, j) = dir_scaled.at(i, j) / std::sqrt(sig[i] * sig[j]);
  symmetrize(r);
  std::vector<double> ev = eig_values(r);
  double lmin = ev.empty() ? 0.0 : ev.front();
  if (lmin >= -1e-14) return 1e100;
  return -1.0 / lmin;
}

struct Rows {
  const SdpProblem* prob;
  int pe, li, p, m;
  std::vector<double> rhs;

  const std::vector<SymEntry>& entries(int r) const {
    return r < pe ? prob->equalities[r].a : prob->inequalities[r - pe].a;
  }
};

// Equality rows with pairwise-disjoint supports are trivially independent;
// otherwise check the Gram matrix of the rows for rank deficiency.
void presolve_rank_check(const Rows& rows) {
  int pe = rows.pe;
  if (pe == 0) return;
  bool disjoint = true;
  std::vector<int> owner(static_cast<std::size_t>(rows.m) * rows.m, -1);
  for (int r = 0; r < pe && disjoint; ++r) {
    bool nonzero = false;
    for (const auto& e : rows.entries(r)) {
      if (e.v != 0.0) nonzero = true;
      int key = e.i * rows.m + e.j;
      if (owner[key] >= 0)
        disjoint = false;
      else
        owner[key] = r;
    }
    if (!nonzero) fail(Err::PresolveError, "zero equality row");
  }
  if (disjoint) return;

  Mat gram(pe);
  for (int r = 0; r < pe; ++r)
    for (int c = r; c < pe; ++c) {
      double s = 0.0;
      for (const auto& ea : rows.entries(r))
        for (const auto& eb : rows.entries(c))
          if (ea.i == eb.i && ea.j == eb.j) s += (ea.i == ea.j ? 1.0 : 2.0) * ea.v * eb.v;
      gram.at(r, c) = s;
      gram.at(c, r) = s;
    }
  double dmax = 0.0;
  for (int r = 0; r < pe; ++r) dmax = std::max(dmax, gram.at(r, r));
  // pivoted Cholesky with a relative pivot threshold
  for (int k = 0; k < pe; ++k) {
    double piv = gram.at(k, k);
    if (piv <= 1e-10 * std::max(1.0, dmax))
      fail(Err::PresolveError, "equality constraints are rank deficient");
    double inv = 1.0 / piv;
    for (int i = k + 1; i < pe; ++i) {
      double f = gram.at(i, k) * inv;
      for (int j = k + 1; j <= i; ++j) gram.at(i, j) -= f * gram.at(k, j);
    }
  }
}

}  // namespace

SdpSolution sdp_solve(const SdpProblem& prob, double tol, int max_iter) {
  int m = prob.order;
  if (m < 1) fail(Err::PresolveError, "empty block");
  if (tol <= 0.0 || tol > 1e-2) fail(Err::PresolveError, "tol must be in (0, 1e-2]");

  Rows rows;
  rows.prob = &prob;
  rows.pe = static_cast<int>(prob.equalities.size());
  rows.li = static_cast<int>(prob.inequalities.size());
  rows.p = rows.pe + rows.li;
  rows.m = m;
  rows.rhs.resize(rows.p);
  for (int r = 0; r < rows.pe; ++r) rows.rhs[r] = prob.equalities[r].rhs;
  for (int j = 0; j < rows.li; ++j) rows.rhs[rows.pe + j] = prob.inequalities[j].rhs;
  for (int r = 0; r < rows.p; ++r)
    for (const auto& e : rows.entries(r))
      if (e.i < 0 || e.j < e.i || e.j >= m) fail(Err::PresolveError, "constraint entry out of range");
  presolve_rank_check(rows);

  int pe = rows.pe, li = rows.li, p = rows.p;
  double rhs_scale = 1.0;
  for (double v : rows.rhs) rhs_scale = std::max(rhs_scale, std::fabs(v));

  // internal convention: minimize <Cm, X>, Cm = -C
  Mat Cm = from_packed(prob.objective);
  for (double& v : Cm.a) v = -v;
  double obj_scale = std::max(1.0, max_abs(Cm));

  Mat X = Mat::identity(m), Z = Mat::identity(m);
  std::vector<double> y(p, 0.0);
  std::vector<double> s(li), t(li, 1.0);
  for (int j = 0; j < li; ++j) s[j] = std::max(1.0, std::fabs(rows.rhs[pe + j]));

  double nu = m + li;

  SdpSolution sol;
  auto finalize = [&](SdpStatus st, int iters) {
    sol.status = st;
    sol.iterations = iters;
    sol.X = to_packed(X);
    sol.S = to_packed(Z);
    sol.y.assign(pe, 0.0);
    sol.u.assign(li, 0.0);
    for (int r = 0; r < pe; ++r) sol.y[r] = -y[r];
    for (int j = 0; j < li; ++j) sol.u[j] = -y[pe + j];
    double pobj_int = frob_inner(Cm, X);
    double dobj_int = 0.0;
    for (int r = 0; r < p; ++r) dobj_int += rows.rhs[r] * y[r];
    sol.objective = -pobj_int;
    sol.dual_objective = -dobj_int;
    double compl_gap = frob_inner(X, Z);
    for (int j = 0; j < li; ++j) compl_gap += s[j] * t[j];
    sol.gap = compl_gap / (1.0 + std::fabs(pobj_int) + std::fabs(dobj_int));
    return sol;
  };

  std::vector<double> schur(static_cast<std::size_t>(p) * p);
  std::vector<double> rp(p), h(p);
  int consecutive_short = 0;

  for (int iter = 0; iter < max_iter; ++iter) {
    // residuals
    for (int r = 0; r < p; ++r) {
      double ax = dot_rows(rows.entries(r), X);
      if (r >= pe) ax += s[r - pe];
      rp[r] = rows.rhs[r] - ax;
    }
    Mat Rd = Cm;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) Rd.at(i, j) -= Z.at(i, j);
    for (int r = 0; r < p; ++r) {
      if (y[r] == 0.0) continue;
      for (const auto& e : rows.entries(r)) {
        Rd.at(e.i, e.j) -= y[r] * e.v;
        if (e.i != e.j) Rd.at(e.j, e.i) -= y[r] * e.v;
      }
    }
    std::vector<double> rd_lp(li);
    for (int j = 0; j < li; ++j) rd_lp[j] = -t[j] - y[pe + j];

    double compl_gap = frob_inner(X, Z);
    for (int j = 0; j < li; ++j) compl_gap += s[j] * t[j];
    double mu = compl_gap / nu;

    double pobj_int = frob_inner(Cm, X);
    double dobj_int = 0.0;
    for (int r = 0; r < p; ++r) dobj_int += rows.rhs[r] * y[r];
    double relgap = compl_gap / (1.0 + std::fabs(pobj_int) + std::fabs(dobj_int));
    double pinf = 0.0;
    for (int r = 0; r < p; ++r) pinf = std::max(pinf, std::fabs(rp[r]));
    pinf /= 1.0 + rhs_scale;
    double dinf = max_abs(Rd);
    for (int j = 0; j < li; ++j) dinf = std::max(dinf, std::fabs(rd_lp[j]));
    dinf /= obj_scale;

    if (std::getenv("PALEYBOUND_SDP_TRACE"))
      std::fprintf(stderr, "  it %3d  pobj %+.8e  dobj %+.8e  gap %.2e  pinf %.2e  dinf %.2e\n",
                   iter, -pobj_int, -dobj_int, relgap, pinf, dinf);
    if (relgap <= tol && pinf <= 1e-8 && dinf <= 1e-8) return finalize(SdpStatus::Optimal, iter);
    if (max_abs(X) > 1e13 || std::fabs(dobj_int) > 1e13)
      return finalize(SdpStatus::PrimalInfeasible, iter);

    // Nesterov-Todd scaling point
    Mat Lx = X, Lz = Z;
    if (!chol_lower(Lx) || !chol_lower(Lz)) return finalize(SdpStatus::NumericalTrouble, iter);
    Mat K(m);  // K = Lz^T * Lx
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        double v = 0.0;
        for (int k = std::max(i, j); k < m; ++k) v += Lz.at(k, i) * Lx.at(k, j);
        K.at(i, j) = v;
      }
    Mat U, VT;
    std::vector<double> sig;
    svd(K, U, VT, sig);
    if (sig.back() <= 0.0 || sig.front() <= 0.0)
      return finalize(SdpStatus::NumericalTrouble, iter);

    Mat G(m), Ginv(m);  // W = G G^T,  G^-1 = Sigma^-1/2 U^T Lz^T
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        double v = 0.0;
        for (int k = 0; k < m; ++k) v += Lx.at(i, k) * VT.at(j, k);
        G.at(i, j) = v / std::sqrt(sig[j]);
      }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        double v = 0.0;
        for (int k = 0; k <= j; ++k) v += U.at(k, i) * Lz.at(j, k);
        Ginv.at(i, j) = v / std::sqrt(sig[i]);
      }
    Mat W = mul_bt(G, G);
    symmetrize(W);
    Mat Zi(m);  // Z^-1 = G Sigma^-1 G^T
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        double v = 0.0;
        for (int k = 0; k < m; ++k) v += G.at(i, k) * G.at(j, k) / sig[k];
        Zi.at(i, j) = v;
        Zi.at(j, i) = v;
      }
    std::vector<double> w2(li);
    for (int j = 0; j < li; ++j) w2[j] = s[j] / t[j];

    // Schur complement M_rc = <A_r, W A_c W> (+ slack terms on the diagonal)
    for (int c = 0; c < p; ++c) {
      Mat D(m);
      for (const auto& e : rows.entries(c)) {
        const double* wa = &W.a[static_cast<std::size_t>(e.i) * m];
        const double* wb = &W.a[static_cast<std::size_t>(e.j) * m];
        if (e.i == e.j) {
          for (int a = 0; a < m; ++a) {
            double f = e.v * wa[a];
            if (f == 0.0) continue;
            double* dcol = &D.a[static_cast<std::size_t>(a) * m];
            for (int b = 0; b < m; ++b) dcol[b] += f * wa[b];
          }
        } else {
          for (int a = 0; a < m; ++a) {
            double fa = e.v * wa[a], fb = e.v * wb[a];
            double* dcol = &D.a[static_cast<std::size_t>(a) * m];
            if (fa != 0.0)
              for (int b = 0; b < m; ++b) dcol[b] += fa * wb[b];
            if (fb != 0.0)
              for (int b = 0; b < m; ++b) dcol[b] += fb * wa[b];
          }
        }
      }
      for (int r = 0; r <= c; ++r) {
        double v = dot_rows(rows.entries(r), D);
        schur[static_cast<std::size_t>(c) * p + r] = v;
        schur[static_cast<std::size_t>(r) * p + c] = v;
      }
    }
    for (int j = 0; j < li; ++j) schur[static_cast<std::size_t>(pe + j) * p + (pe + j)] += w2[j];

    // factor with escalating diagonal perturbation
    std::vector<double> fac;
    {
      double diag_scale = 0.0;
      for (int r = 0; r < p; ++r)
        diag_scale = std::max(diag_scale, schur[static_cast<std::size_t>(r) * p + r]);
      double scale = std::max(1.0, diag_scale);
      double delta = 0.0;
      bool ok = false;
      for (;;) {
        fac = schur;
        if (delta > 0.0)
          for (int r = 0; r < p; ++r) fac[static_cast<std::size_t>(r) * p + r] += delta;
        int info = 0;
        dpotrf_("L", &p, fac.data(), &p, &info);
        if (info == 0) {
          ok = true;
          break;
        }
        delta = delta == 0.0 ? 1e-12 * scale : delta * 100.0;
        if (delta > 1.01e-8 * scale) break;
      }
      if (!ok) return finalize(SdpStatus::NumericalTrouble, iter);
    }
    auto schur_solve = [&](std::vector<double>& b) {
      int info = 0, one = 1;
      std::vector<double> x = b;
      dpotrs_("L", &p, &one, fac.data(), &p, x.data(), &p, &info);
      if (info != 0) fail(Err::ConvergenceFailure, "dpotrs failed");
      // two refinement passes against the unperturbed matrix; the factor may
      // be perturbed and the active cuts can make the system nearly singular
      for (int pass = 0; pass < 2; ++pass) {
        std::vector<double> r = b;
        for (int c = 0; c < p; ++c) {
          double xc = x[c];
          if (xc == 0.0) continue;
          const double* col = &schur[static_cast<std::size_t>(c) * p];
          for (int rr = 0; rr < p; ++rr) r[rr] -= col[rr] * xc;
        }
        dpotrs_("L", &p, &one, fac.data(), &p, r.data(), &p, &info);
        if (info != 0) fail(Err::ConvergenceFailure, "dpotrs failed");
        for (int rr = 0; rr < p; ++rr) x[rr] += r[rr];
      }
      b = x;
    };

    Mat WRdW = mul(mul(W, Rd), W);
    symmetrize(WRdW);

    auto assemble_and_solve = [&](const Mat& Rc, const std::vector<double>& rc_lp,
                                  std::vector<double>& dy, Mat& dX, Mat& dZ,
                                  std::vector<double>& ds, std::vector<double>& dt) {
      for (int r = 0; r < p; ++r) {
        double v = rp[r] - dot_rows(rows.entries(r), Rc) + dot_rows(rows.entries(r), WRdW);
        if (r >= pe) v -= rc_lp[r - pe] - w2[r - pe] * rd_lp[r - pe];
        h[r] = v;
      }
      dy = h;
      schur_solve(dy);
      dZ = Rd;
      for (int r = 0; r < p; ++r) {
        if (dy[r] == 0.0) continue;
        for (const auto& e : rows.entries(r)) {
          dZ.at(e.i, e.j) -= dy[r] * e.v;
          if (e.i != e.j) dZ.at(e.j, e.i) -= dy[r] * e.v;
        }
      }
      symmetrize(dZ);
      Mat WdZW = mul(mul(W, dZ), W);
      dX = Rc;
      for (std::size_t i = 0; i < dX.a.size(); ++i) dX.a[i] -= WdZW.a[i];
      symmetrize(dX);
      dt.assign(li, 0.0);
      ds.assign(li, 0.0);
      for (int j = 0; j < li; ++j) {
        dt[j] = rd_lp[j] - dy[pe + j];
        ds[j] = rc_lp[j] - w2[j] * dt[j];
      }
    };

    auto step_lengths = [&](const Mat& dX, const Mat& dZ, const std::vector<double>& ds,
                            const std::vector<double>& dt, double& ap, double& ad) {
      Mat dXs = mul_bt(mul(Ginv, dX), Ginv);  // Ginv dX Ginv^T
      Mat dZs = mul(mul_at(G, dZ), G);        // G^T dZ G
      ap = psd_max_step(dXs, sig);
      ad = psd_max_step(dZs, sig);
      for (int j = 0; j < li; ++j) {
        if (ds[j] < 0.0) ap = std::min(ap, -s[j] / ds[j]);
        if (dt[j] < 0.0) ad = std::min(ad, -t[j] / dt[j]);
      }
    };

    // predictor
    Mat Rc_aff(m);
    for (std::size_t i = 0; i < Rc_aff.a.size(); ++i) Rc_aff.a[i] = -X.a[i];
    std::vector<double> rc_aff(li);
    for (int j = 0; j < li; ++j) rc_aff[j] = -s[j];
    std::vector<double> dy_a, ds_a, dt_a;
    Mat dX_a, dZ_a;
    assemble_and_solve(Rc_aff, rc_aff, dy_a, dX_a, dZ_a, ds_a, dt_a);
    double ap_a, ad_a;
    step_lengths(dX_a, dZ_a, ds_a, dt_a, ap_a, ad_a);
    double a_p = std::min(1.0, 0.98 * ap_a), a_d = std::min(1.0, 0.98 * ad_a);

    double mu_aff = 0.0;
    {
      Mat Xt = X, Zt = Z;
      for (std::size_t i = 0; i < Xt.a.size(); ++i) {
        Xt.a[i] += a_p * dX_a.a[i];
        Zt.a[i] += a_d * dZ_a.a[i];
      }
      mu_aff = frob_inner(Xt, Zt);
      for (int j = 0; j < li; ++j) mu_aff += (s[j] + a_p * ds_a[j]) * (t[j] + a_d * dt_a[j]);
      mu_aff /= nu;
    }
    double sigma = std::pow(std::max(mu_aff, 0.0) / mu, 3.0);
    sigma = std::min(1.0, std::max(1e-12, sigma));

    // corrector in the scaled frame: L_Sigma^-1( sym(dX~ dZ~) )
    Mat dXs_a = mul_bt(mul(Ginv, dX_a), Ginv);
    Mat dZs_a = mul(mul_at(G, dZ_a), G);
    Mat T = mul(dXs_a, dZs_a);
    symmetrize(T);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) T.at(i, j) *= 2.0 / (sig[i] + sig[j]);
    Mat Corr = mul_bt(mul(G, T), G);
    symmetrize(Corr);

    Mat Rc(m);
    for (std::size_t i = 0; i < Rc.a.size(); ++i)
      Rc.a[i] = sigma * mu * Zi.a[i] - X.a[i] - Corr.a[i];
    std::vector<double> rc_lp(li);
    for (int j = 0; j < li; ++j)
      rc_lp[j] = sigma * mu / t[j] - s[j] - ds_a[j] * dt_a[j] / t[j];

    std::vector<double> dy, ds, dt;
    Mat dX, dZ;
    assemble_and_solve(Rc, rc_lp, dy, dX, dZ, ds, dt);
    double ap_c, ad_c;
    step_lengths(dX, dZ, ds, dt, ap_c, ad_c);
    a_p = std::min(1.0, 0.98 * ap_c);
    a_d = std::min(1.0, 0.98 * ad_c);

    if (a_p < 1e-8 && a_d < 1e-8) {
      if (++consecutive_short >= 3) return finalize(SdpStatus::NumericalTrouble, iter);
    } else {
      consecutive_short = 0;
    }

    if (std::getenv("PALEYBOUND_SDP_TRACE"))
      std::fprintf(stderr, "       mu %.3e  sigma %.3e  ap %.3e  ad %.3e\n", mu, sigma, a_p, a_d);
    for (std::size_t i = 0; i < X.a.size(); ++i) {
      X.a[i] += a_p * dX.a[i];
      Z.a[i] += a_d * dZ.a[i];
    }
    symmetrize(X);
    symmetrize(Z);
    for (int r = 0; r < p; ++r) y[r] += a_d * dy[r];
    for (int j = 0; j < li; ++j) {
      s[j] += a_p * ds[j];
      t[j] += a_d * dt[j];
    }
  }
  return finalize(SdpStatus::MaxIterations, max_iter);
}

double min_eigenvalue(const SymMatrix& m) {
  if (m.order() > 512) fail(Err::TooLarge, "min_eigenvalue requires order <= 512");
  if (m.order() == 0) return 0.0;
  std::vector<double> ev = jacobi_eigenvalues(m, 1e-9 * std::max(1.0, m.frobenius()));
  return ev.front();
}

}  // namespace paley
