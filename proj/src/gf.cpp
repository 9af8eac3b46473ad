#include "paley/gf.hpp"

#include <algorithm>
#include <string>

#include "paley/errors.hpp"

namespace paley {

namespace {

// Little-endian base-p digits of e.
std::vector<int> digits(int e, int p, int s) {
  std::vector<int> d(s, 0);
  for (int i = 0; i < s && e > 0; ++i) {
    d[i] = e % p;
    e /= p;
  }
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int e = 0;
  for (std::size_t i = d.size(); i-- > 0;) e = e * p + d[i];
  return e;
}

// Product of two field elements reduced by the modulus polynomial; plain
// polynomial arithmetic, used only while the tables are being built.
int raw_mul(int a, int b, int p, int s, const std::vector<int>& mod) {
  std::vector<int> da = digits(a, p, s), db = digits(b, p, s);
  std::vector<int> prod(2 * s - 1, 0);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  // reduce: x^s = -(mod[0] + mod[1] x + ... + mod[s-1] x^{s-1})
  for (int d = 2 * s - 2; d >= s; --d) {
    int c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < s; ++i) prod[d - s + i] = ((prod[d - s + i] - c * mod[i]) % p + p) % p;
  }
  prod.resize(s);
  return undigits(prod, p);
}

int poly_eval(const std::vector<int>& poly, int x, int p) {
  long long v = 0;
  for (std::size_t i = poly.size(); i-- > 0;) v = (v * x + poly[i]) % p;
  return static_cast<int>(v);
}

bool has_root(const std::vector<int>& poly, int p) {
  for (int x = 0; x < p; ++x)
    if (poly_eval(poly, x, p) == 0) return true;
  return false;
}

// Divides poly (degree n, monic) by a monic divisor of degree m; true iff the
// remainder vanishes.  Coefficients low-degree-first.
bool divisible(std::vector<int> poly, const std::vector<int>& div, int p) {
  int n = static_cast<int>(poly.size()) - 1;
  int m = static_cast<int>(div.size()) - 1;
  for (int d = n; d >= m; --d) {
    int c = poly[d];
    if (c == 0) continue;
    for (int i = 0; i <= m; ++i) poly[d - m + i] = ((poly[d - m + i] - c * div[i]) % p + p) % p;
  }
  for (int i = 0; i < m; ++i)
    if (poly[i] != 0) return false;
  return true;
}

bool irreducible(const std::vector<int>& poly, int p) {
  int deg = static_cast<int>(poly.size()) - 1;
  if (deg <= 1) return deg == 1;
  if (has_root(poly, p)) return false;
  if (deg <= 3) return true;  // degree 2, 3: no root is enough
  // degree 4: also exclude products of two irreducible quadratics
  for (int c1 = 0; c1 < p; ++c1)
    for (int c0 = 0; c0 < p; ++c0) {
      std::vector<int> quad = {c0, c1, 1};
      if (!has_root(quad, p) && divisible(poly, quad, p)) return false;
    }
  return true;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> f;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) f.push_back(n);
  return f;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<int, int> factor_prime_power(int q) {
  if (q < 2) fail(Err::NotPrimePower, "q = " + std::to_string(q) + " is not a prime power");
  for (int p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    int s = 0, m = q;
    while (m % p == 0) {
      m /= p;
      ++s;
    }
    if (m != 1) fail(Err::NotPrimePower, "q = " + std::to_string(q) + " is not a prime power");
    return {p, s};
  }
  fail(Err::NotPrimePower, "q = " + std::to_string(q) + " is not a prime power");
}

int PrimePowerField::add(int a, int b) const {
  if (s == 1) return (a + b) % p;
  int r = 0, pw = 1;
  for (int i = 0; i < s; ++i) {
    r += ((a % p + b % p) % p) * pw;
    a /= p;
    b /= p;
    pw *= p;
  }
  return r;
}

int PrimePowerField::sub(int a, int b) const {
  if (s == 1) return ((a - b) % p + p) % p;
  int r = 0, pw = 1;
  for (int i = 0; i < s; ++i) {
    r += (((a % p - b % p) % p) + p) % p * pw;
    a /= p;
    b /= p;
    pw *= p;
  }
  return r;
}

PrimePowerField make_field(int p, int s) {
  if (!is_prime(p)) fail(Err::NotPrime, "p = " + std::to_string(p) + " is not prime");
  if (s < 1 || s > 4) fail(Err::DegreeTooLarge, "extension degree s = " + std::to_string(s) + " not in [1,4]");

  PrimePowerField f;
  f.p = p;
  f.s = s;
  long long q = 1;
  for (int i = 0; i < s; ++i) q *= p;
  if (q > (1 << 22)) fail(Err::TooLarge, "field order too large");
  f.q = static_cast<int>(q);

  if (s == 1) {
    f.modulus_poly = {0, 1};
  } else {
    // lexicographically smallest (c_0, ..., c_{s-1}) with x^s + ... irreducible
    bool found = false;
    std::vector<int> c(s, 0);
    while (!found) {
      std::vector<int> poly = c;
      poly.push_back(1);
      if (irreducible(poly, p)) {
        f.modulus_poly = poly;
        found = true;
        break;
      }
      int i = s - 1;
      while (i >= 0 && c[i] == p - 1) c[i--] = 0;
      if (i < 0) break;
      ++c[i];
    }
    if (!found) fail(Err::ConvergenceFailure, "no irreducible modulus found");
  }

  // smallest generator of the multiplicative group
  auto raw = [&](int a, int b) {
    if (s == 1) return static_cast<int>((static_cast<long long>(a) * b) % p);
    return raw_mul(a, b, p, s, f.modulus_poly);
  };
  std::vector<int> factors = prime_factors(f.q - 1);
  auto raw_pow = [&](int a, int e) {
    int r = 1;
    while (e > 0) {
      if (e & 1) r = raw(r, a);
      a = raw(a, a);
      e >>= 1;
    }
    return r;
  };
  int gen = 0;
  for (int g = 1; g < f.q; ++g) {
    bool ok = true;
    for (int r : factors)
      if (raw_pow(g, (f.q - 1) / r) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      gen = g;
      break;
    }
  }
  if (gen == 0 && f.q > 2) fail(Err::ConvergenceFailure, "no generator found");
  f.generator = gen;

  f.exp_t.assign(f.q - 1, 1);
  f.log_t.assign(f.q, 0);
  int v = 1;
  for (int k = 0; k < f.q - 1; ++k) {
    f.exp_t[k] = v;
    f.log_t[v] = k;
    v = raw(v, gen);
  }
  return f;
}

int field_pow(const PrimePowerField& f, int a, uint64_t e) {
  if (a < 0 || a >= f.q) fail(Err::IndexOutOfRange, "field_pow: element out of range");
  int r = 1;
  int base = a;
  while (e > 0) {
    if (e & 1) r = f.mul(r, base);
    base = f.mul(base, base);
    e >>= 1;
  }
  return r;
}

ResidueClassification classify_residues(const PrimePowerField& f) {
  if (f.q % 2 == 0) fail(Err::EvenOrder, "residue classification needs odd field order");
  ResidueClassification rc;
  rc.is_residue.assign(f.q, 0);
  for (int a = 1; a < f.q; ++a) {
    if (field_pow(f, a, static_cast<uint64_t>((f.q - 1) / 2)) == 1) {
      rc.is_residue[a] = 1;
      rc.residues.push_back(a);
    } else {
      rc.non_residues.push_back(a);
    }
  }
  return rc;
}

Graph paley_graph(int q) {
  if (q % 4 != 1) fail(Err::NotOneModFour, "q = " + std::to_string(q) + " is not 1 (mod 4)");
  auto [p, s] = factor_prime_power(q);
  PrimePowerField f = make_field(p, s);
  ResidueClassification rc = classify_residues(f);
  Graph g(q);
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j)
      if (rc.is_residue[f.sub(i, j)]) g.add_edge(i, j);
  return g;
}

std::pair<Graph, std::vector<int>> local_graph(const Graph& g, int anchor) {
  if (anchor < 0 || anchor >= g.order()) fail(Err::IndexOutOfRange, "local_graph: anchor out of range");
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v)
    if (v != anchor && !g.adjacent(anchor, v)) keep.push_back(v);
  return {induced_subgraph(g, keep), keep};
}

}  // namespace paley
