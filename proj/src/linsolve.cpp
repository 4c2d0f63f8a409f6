#include "gral/linsolve.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace gral {

namespace {

using i64 = std::int64_t;

struct PrimePower {
  i64 p;
  int k;
  i64 q;
};

std::vector<PrimePower> factor_modulus(std::uint32_t n) {
  std::vector<PrimePower> out;
  i64 m = n;
  for (i64 p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    PrimePower pp{p, 0, 1};
    while (m % p == 0) {
      m /= p;
      ++pp.k;
      pp.q *= p;
    }
    out.push_back(pp);
  }
  if (m > 1) out.push_back({m, 1, m});
  return out;
}

// Leaves of a CRT-decomposable ring, in the order residues are emitted.
void collect_components(const Ring& ring, std::vector<PrimePower>& out) {
  if (ring.kind() == RingSpec::Kind::Modular) {
    for (const auto& pp : factor_modulus(ring.spec().modulus)) out.push_back(pp);
    return;
  }
  for (const auto& f : ring.factors()) collect_components(f, out);
}

void to_residues(const Ring& ring, Elem a, std::vector<i64>& out) {
  if (ring.kind() == RingSpec::Kind::Modular) {
    for (const auto& pp : factor_modulus(ring.spec().modulus)) out.push_back(index(a) % pp.q);
    return;
  }
  const auto parts = ring.split(a);
  for (std::size_t i = 0; i < parts.size(); ++i) to_residues(ring.factors()[i], parts[i], out);
}

i64 inverse_mod(i64 a, i64 m) {
  i64 g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
  while (a1) {
    const i64 q = g / a1;
    std::tie(g, a1) = std::make_tuple(a1, g - q * a1);
    std::tie(x, x1) = std::make_tuple(x1, x - q * x1);
  }
  return ((x % m) + m) % m;
}

Elem from_residues(const Ring& ring, const std::vector<i64>& res, std::size_t& pos) {
  if (ring.kind() == RingSpec::Kind::Modular) {
    const i64 n = ring.spec().modulus;
    i64 x = 0;
    for (const auto& pp : factor_modulus(ring.spec().modulus)) {
      const i64 m = n / pp.q;
      const i64 t = (res[pos++] % pp.q) * inverse_mod(m % pp.q, pp.q) % pp.q;
      x = (x + t * m) % n;
    }
    return elem(static_cast<std::uint32_t>(x));
  }
  std::vector<Elem> parts;
  for (const auto& f : ring.factors()) parts.push_back(from_residues(f, res, pos));
  return ring.join(parts);
}

int valuation(i64 a, const PrimePower& pp) {
  if (a == 0) return pp.k;
  int v = 0;
  while (a % pp.p == 0) {
    a /= pp.p;
    ++v;
  }
  return v;
}

i64 ipow(i64 p, int e) {
  i64 r = 1;
  while (e-- > 0) r *= p;
  return r;
}

struct Diagonalised {
  std::vector<std::vector<i64>> a;
  std::vector<i64> b;
  std::size_t rank = 0;
  std::vector<int> pivot_val;
  // Column operations applied, in order: {t, j, f} means col_j -= f * col_t;
  // f < 0 encodes a swap of columns t and j.
  struct ColOp {
    std::size_t t, j;
    i64 f;
    bool swap;
  };
  std::vector<ColOp> ops;
};

// Valuation-pivoted elimination over Z/p^k to diagonal form.
Diagonalised diagonalise(std::vector<std::vector<i64>> a, std::vector<i64> b,
                         std::size_t n, const PrimePower& pp) {
  const i64 q = pp.q;
  const std::size_t m = a.size();
  Diagonalised d;
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    int best = pp.k;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = t; i < m && best > 0; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (a[i][j] == 0) continue;
        const int v = valuation(a[i][j], pp);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    if (best == pp.k) break;
    std::swap(a[t], a[bi]);
    std::swap(b[t], b[bi]);
    if (bj != t) {
      for (auto& row : a) std::swap(row[t], row[bj]);
      d.ops.push_back({t, bj, 0, true});
    }
    const i64 pv = ipow(pp.p, best);
    const i64 unit = a[t][t] / pv;
    const i64 uinv = inverse_mod(unit, q);
    for (std::size_t j = t; j < n; ++j) a[t][j] = a[t][j] * uinv % q;
    b[t] = b[t] * uinv % q;
    for (std::size_t i = t + 1; i < m; ++i) {
      if (a[i][t] == 0) continue;
      const i64 f = a[i][t] / pv;
      for (std::size_t j = t; j < n; ++j) a[i][j] = ((a[i][j] - f * a[t][j]) % q + q) % q;
      b[i] = ((b[i] - f * b[t]) % q + q) % q;
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (a[t][j] == 0) continue;
      const i64 f = a[t][j] / pv;
      for (std::size_t i = t; i < m; ++i) a[i][j] = ((a[i][j] - f * a[i][t]) % q + q) % q;
      d.ops.push_back({t, j, f, false});
    }
    d.pivot_val.push_back(best);
  }
  d.rank = t;
  d.a = std::move(a);
  d.b = std::move(b);
  return d;
}

std::optional<std::vector<i64>> solve_component(const std::vector<std::vector<i64>>& a,
                                                const std::vector<i64>& b, std::size_t n,
                                                const PrimePower& pp) {
  auto d = diagonalise(a, b, n, pp);
  const i64 q = pp.q;
  for (std::size_t i = d.rank; i < d.b.size(); ++i)
    if (d.b[i] % q != 0) return std::nullopt;
  std::vector<i64> y(n, 0);
  for (std::size_t t = 0; t < d.rank; ++t) {
    const int v = d.pivot_val[t];
    const i64 pv = ipow(pp.p, v);
    if (d.b[t] % pv != 0) return std::nullopt;
    y[t] = (d.b[t] / pv) % (q / pv);
  }
  for (auto it = d.ops.rbegin(); it != d.ops.rend(); ++it) {
    if (it->swap)
      std::swap(y[it->t], y[it->j]);
    else
      y[it->t] = ((y[it->t] - it->f * y[it->j]) % q + q) % q;
  }
  return y;
}

struct Dense {
  std::vector<std::vector<std::vector<i64>>> a;  // per component
  std::vector<std::vector<i64>> b;
  std::vector<PrimePower> comps;
};

Dense densify(const Ring& ring, const LinearSystem& sys) {
  Dense d;
  collect_components(ring, d.comps);
  const std::size_t nc = d.comps.size();
  const std::size_t m = sys.equations.size();
  d.a.assign(nc, std::vector<std::vector<i64>>(m, std::vector<i64>(sys.num_vars, 0)));
  d.b.assign(nc, std::vector<i64>(m, 0));
  std::vector<i64> res;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& eq = sys.equations[i];
    for (const auto& term : eq.terms) {
      res.clear();
      to_residues(ring, ring.mul(term.left, term.right), res);
      for (std::size_t c = 0; c < nc; ++c) {
        auto& cell = d.a[c][i][term.var];
        cell = (cell + res[c]) % d.comps[c].q;
      }
    }
    res.clear();
    to_residues(ring, eq.rhs, res);
    for (std::size_t c = 0; c < nc; ++c) d.b[c][i] = res[c];
  }
  return d;
}

Elem eval_lhs(const Ring& ring, const LinearEquation& eq, const std::vector<Elem>& x) {
  Elem acc = ring.zero();
  for (const auto& t : eq.terms) acc = ring.add(acc, ring.mul(ring.mul(t.left, x[t.var]), t.right));
  return acc;
}

// Backtracking search for table rings. When nonzero_only is set, the
// all-zero assignment is skipped and the rhs is treated as zero.
std::optional<std::vector<Elem>> search(const Ring& ring, const LinearSystem& sys,
                                        std::size_t cap, bool homogeneous_nonzero) {
  const std::size_t n = sys.num_vars;
  std::vector<std::vector<std::size_t>> closes(n + 1);
  for (std::size_t i = 0; i < sys.equations.size(); ++i) {
    std::size_t last = 0;
    bool any = false;
    for (const auto& t : sys.equations[i].terms) {
      last = std::max(last, t.var);
      any = true;
    }
    closes[any ? last + 1 : 0].push_back(i);
  }
  auto rhs = [&](std::size_t i) { return homogeneous_nonzero ? ring.zero() : sys.equations[i].rhs; };
  for (std::size_t i : closes[0])
    if (rhs(i) != ring.zero()) return std::nullopt;
  std::vector<Elem> x(n, ring.zero());
  std::size_t states = 0;
  const auto elems = ring.elements();
  auto rec = [&](auto&& self, std::size_t v) -> bool {
    if (v == n) {
      if (!homogeneous_nonzero) return true;
      return std::any_of(x.begin(), x.end(), [&](Elem e) { return e != ring.zero(); });
    }
    for (Elem e : elems) {
      if (++states > cap) throw SearchCapExceeded(cap);
      x[v] = e;
      bool ok = true;
      for (std::size_t i : closes[v + 1])
        if (eval_lhs(ring, sys.equations[i], x) != rhs(i)) {
          ok = false;
          break;
        }
      if (ok && self(self, v + 1)) return true;
    }
    x[v] = ring.zero();
    return false;
  };
  if (rec(rec, 0)) return x;
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<Elem>> solve_linear_system(const Ring& ring, const LinearSystem& sys,
                                                     std::size_t cap) {
  if (!ring.crt_decomposable()) return search(ring, sys, cap, false);
  if (sys.num_vars == 0) {
    for (const auto& eq : sys.equations)
      if (eq.rhs != ring.zero()) return std::nullopt;
    return std::vector<Elem>{};
  }
  const Dense d = densify(ring, sys);
  std::vector<std::vector<i64>> per_comp;
  for (std::size_t c = 0; c < d.comps.size(); ++c) {
    auto y = solve_component(d.a[c], d.b[c], sys.num_vars, d.comps[c]);
    if (!y) return std::nullopt;
    per_comp.push_back(std::move(*y));
  }
  std::vector<Elem> x(sys.num_vars);
  std::vector<i64> res(d.comps.size());
  for (std::size_t v = 0; v < sys.num_vars; ++v) {
    for (std::size_t c = 0; c < d.comps.size(); ++c) res[c] = per_comp[c][v];
    std::size_t pos = 0;
    x[v] = from_residues(ring, res, pos);
  }
  if (!satisfies(ring, sys, x)) throw InternalVerificationFailure("linear solve produced a non-solution");
  return x;
}

bool kernel_is_trivial(const Ring& ring, const LinearSystem& sys, std::size_t cap) {
  if (sys.num_vars == 0) return true;
  if (!ring.crt_decomposable()) return !search(ring, sys, cap, true).has_value();
  const Dense d = densify(ring, sys);
  for (std::size_t c = 0; c < d.comps.size(); ++c) {
    auto diag = diagonalise(d.a[c], d.b[c], sys.num_vars, d.comps[c]);
    if (diag.rank < sys.num_vars) return false;
    for (int v : diag.pivot_val)
      if (v != 0) return false;
  }
  return true;
}

bool satisfies(const Ring& ring, const LinearSystem& sys, const std::vector<Elem>& x) {
  if (x.size() != sys.num_vars) return false;
  return std::all_of(sys.equations.begin(), sys.equations.end(),
                     [&](const LinearEquation& eq) { return eval_lhs(ring, eq, x) == eq.rhs; });
}

}  // namespace gral
