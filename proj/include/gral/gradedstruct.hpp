#pragma once

// Classification of Z-gradings (strong, epsilon-strong, nearly
// epsilon-strong, symmetric) against an oracle from oracles.hpp, plus
// homogeneous local units, the Jacobson radical of finite path algebras and
// bounded semiprimeness checks.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <type_traits>
#include <string>
#include <vector>

#include "gral/linsolve.hpp"
#include "gral/oracles.hpp"

namespace gral {

enum class Verdict { HoldsExactly, HoldsAtBound, NotFoundAtBound, Fails, Refused };

std::string to_string(Verdict v);

struct DegreeVerdict {
  int degree = 0;
  Verdict verdict = Verdict::HoldsExactly;
  std::string detail;
};

struct PropertyVerdict {
  std::string property;
  Verdict verdict = Verdict::HoldsExactly;
  std::vector<DegreeVerdict> degrees;
  std::string note;
  /// Element exhibiting a failure, formatted, when one exists.
  std::string witness;

  bool holds() const { return verdict == Verdict::HoldsExactly || verdict == Verdict::HoldsAtBound; }
  bool fails() const { return verdict == Verdict::Fails; }
};

struct ClassificationReport {
  std::string ring;
  PropertyVerdict strong;
  PropertyVerdict epsilon;
  PropertyVerdict nearly;
  PropertyVerdict symmetric;
  std::map<int, std::string> epsilon_table;

  /// One line per (property, degree, verdict).
  std::string format() const;
};

/// False when some implication strong => epsilon => nearly => symmetric is
/// contradicted (premise holds, conclusion fails).
bool chain_consistent(const ClassificationReport& report, std::string* why = nullptr);

struct ClassifyOptions {
  std::size_t degree_bound = 3;
  std::size_t size_bound = 3;
  /// Complete components with at most this many elements are enumerated in
  /// full by the elementwise checks.
  std::size_t enumerate_limit = 4096;
  std::size_t cap = default_search_cap();
};

template <class O>
using El = typename O::Element;

namespace detail {

template <class O>
std::vector<El<O>> dedup(const O& o, std::vector<El<O>> xs) {
  std::set<std::string> seen;
  std::vector<El<O>> out;
  for (auto& x : xs) {
    if (o.equal(x, o.zero())) continue;
    if (seen.insert(o.format(x)).second) out.push_back(std::move(x));
  }
  return out;
}

template <class O>
std::vector<El<O>> products(const O& o, const std::vector<El<O>>& a, const std::vector<El<O>>& b) {
  std::vector<El<O>> out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(o.mul(x, y));
  return dedup(o, std::move(out));
}

/// Additive closure of a finite set of elements.
template <class O>
std::vector<El<O>> closure(const O& o, const std::vector<El<O>>& gens, std::size_t cap) {
  std::vector<El<O>> out{o.zero()};
  std::set<std::string> seen{o.format(o.zero())};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      auto s = o.add(out[i], g);
      if (seen.insert(o.format(s)).second) {
        if (out.size() >= cap) throw SearchCapExceeded(cap);
        out.push_back(std::move(s));
      }
    }
  return out;
}

/// Coefficients z with sum_j z_j pool_j = target (left R-span).
template <class O>
std::optional<std::vector<Elem>> span_solve(const O& o, const std::vector<El<O>>& pool, const El<O>& target,
                                            std::size_t cap) {
  const Ring& R = o.ring();
  std::map<std::string, LinearEquation> eqs;
  for (std::size_t j = 0; j < pool.size(); ++j)
    for (const auto& [k, c] : o.coords(pool[j])) eqs[k].terms.push_back({R.one(), j, c});
  for (auto& [k, eq] : eqs) eq.rhs = R.zero();
  for (const auto& [k, c] : o.coords(target)) eqs[k].rhs = c;
  LinearSystem sys;
  sys.num_vars = pool.size();
  for (auto& [k, eq] : eqs) sys.equations.push_back(std::move(eq));
  return solve_linear_system(R, sys, cap);
}

template <class O>
bool in_span(const O& o, const std::vector<El<O>>& pool, const El<O>& target, std::size_t cap) {
  if (o.span_kind() == SpanKind::LeftRSpan) return span_solve(o, pool, target, cap).has_value();
  const std::string key = o.format(target);
  for (const auto& x : closure(o, pool, cap))
    if (o.format(x) == key) return true;
  return false;
}

/// An element eps of span(pool) with eps t = t for t in left and t eps = t for
/// t in right.
template <class O>
std::optional<El<O>> find_unit(const O& o, const std::vector<El<O>>& pool, const std::vector<El<O>>& left,
                               const std::vector<El<O>>& right, std::size_t cap) {
  if (o.span_kind() == SpanKind::AdditiveClosure) {
    for (const auto& eps : closure(o, pool, cap)) {
      bool ok = true;
      for (const auto& t : left) ok = ok && o.equal(o.mul(eps, t), t);
      for (const auto& t : right) ok = ok && o.equal(o.mul(t, eps), t);
      if (ok) return eps;
    }
    return std::nullopt;
  }
  const Ring& R = o.ring();
  LinearSystem sys;
  sys.num_vars = pool.size();
  auto add_block = [&](const El<O>& t, auto&& fill) {
    std::map<std::string, LinearEquation> eqs;
    fill(eqs);
    for (auto& [k, eq] : eqs) eq.rhs = R.zero();
    for (const auto& [k, c] : o.coords(t)) eqs[k].rhs = c;
    for (auto& [k, eq] : eqs) sys.equations.push_back(std::move(eq));
  };
  for (const auto& t : left)
    add_block(t, [&](auto& eqs) {
      // (z_j P_j) t = z_j (P_j t)
      for (std::size_t j = 0; j < pool.size(); ++j)
        for (const auto& [k, c] : o.coords(o.mul(pool[j], t))) eqs[k].terms.push_back({R.one(), j, c});
    });
  for (const auto& t : right)
    add_block(t, [&](auto& eqs) {
      // (c m) (z_j P_j) = c z_j (m P_j)
      for (const auto& [c, m] : o.basis_terms(t))
        for (std::size_t j = 0; j < pool.size(); ++j)
          for (const auto& [k, d] : o.coords(o.mul(m, pool[j]))) eqs[k].terms.push_back({c, j, d});
    });
  auto z = solve_linear_system(R, sys, cap);
  if (!z) return std::nullopt;
  El<O> eps = o.zero();
  for (std::size_t j = 0; j < pool.size(); ++j) eps = o.add(eps, o.scale((*z)[j], pool[j]));
  for (const auto& t : left)
    if (!o.equal(o.mul(eps, t), t)) throw InternalVerificationFailure("unit search returned a non-unit");
  for (const auto& t : right)
    if (!o.equal(o.mul(t, eps), t)) throw InternalVerificationFailure("unit search returned a non-unit");
  return eps;
}

template <class O>
bool factors_in_components(const O& o, const Factorization<El<O>>& f, int d) {
  for (const auto& [a, b] : f) {
    const auto da = o.degree(a);
    const auto db = o.degree(b);
    if ((da && *da != d) || (db && *db != -d)) return false;
  }
  return true;
}

template <class O>
El<O> multiply_out(const O& o, const Factorization<El<O>>& f) {
  El<O> out = o.zero();
  for (const auto& [a, b] : f) out = o.add(out, o.mul(a, b));
  return out;
}

/// Elements of S_d to test elementwise: every element when the component is
/// complete and small, otherwise the spanning set plus pairwise sums.
template <class O>
std::pair<std::vector<El<O>>, bool> test_elements(const O& o, int d, const ClassifyOptions& opts) {
  const auto span = o.spanning_set(d, opts.size_bound);
  if (!o.component_complete(d, opts.size_bound)) {
    std::vector<El<O>> out = span;
    for (std::size_t i = 0; i < span.size() && i < 16; ++i)
      for (std::size_t j = i + 1; j < span.size() && j < 16; ++j) out.push_back(o.add(span[i], span[j]));
    return {dedup(o, std::move(out)), false};
  }
  if (o.span_kind() == SpanKind::AdditiveClosure) return {span, true};
  double count = 1;
  for (std::size_t i = 0; i < span.size(); ++i) count *= o.ring().order();
  if (count > static_cast<double>(opts.enumerate_limit)) {
    std::vector<El<O>> out = span;
    for (std::size_t i = 0; i < span.size(); ++i)
      for (std::size_t j = i + 1; j < span.size(); ++j) out.push_back(o.add(span[i], span[j]));
    return {dedup(o, std::move(out)), false};
  }
  std::vector<El<O>> out{o.zero()};
  for (const auto& s : span) {
    std::vector<El<O>> next;
    for (const auto& x : out)
      for (Elem r : o.ring().elements()) next.push_back(o.add(x, o.scale(r, s)));
    out = std::move(next);
  }
  return {dedup(o, std::move(out)), true};
}

inline Verdict combine(const std::vector<DegreeVerdict>& ds) {
  auto any = [&](Verdict v) {
    return std::any_of(ds.begin(), ds.end(), [&](const DegreeVerdict& d) { return d.verdict == v; });
  };
  if (any(Verdict::Fails)) return Verdict::Fails;
  if (any(Verdict::Refused)) return Verdict::Refused;
  if (any(Verdict::NotFoundAtBound)) return Verdict::NotFoundAtBound;
  if (any(Verdict::HoldsAtBound)) return Verdict::HoldsAtBound;
  return Verdict::HoldsExactly;
}

/// Exact overall verdicts need every nonzero degree to have been examined.
template <class O>
Verdict finalize(const O& o, Verdict v, const ClassifyOptions& opts) {
  if (v != Verdict::HoldsExactly) return v;
  const auto sup = o.support();
  const int b = static_cast<int>(opts.degree_bound);
  if (!sup) return Verdict::HoldsAtBound;
  if (sup->first > sup->second) return v;
  if (sup->first < -b || sup->second > b) return Verdict::HoldsAtBound;
  return v;
}

inline int bound_int(std::size_t b) { return static_cast<int>(b); }

template <class O>
PropertyVerdict finish(const O& o, PropertyVerdict pv, const ClassifyOptions& opts) {
  pv.verdict = finalize(o, combine(pv.degrees), opts);
  for (const auto& d : pv.degrees)
    if (d.verdict == Verdict::Fails && pv.witness.empty()) pv.witness = d.detail;
  return pv;
}

}  // namespace detail

template <class O>
PropertyVerdict check_symmetric(const O& o, const ClassifyOptions& opts = {}) {
  PropertyVerdict pv{"symmetric", Verdict::HoldsExactly, {}, {}, {}};
  const int D = detail::bound_int(opts.degree_bound);
  for (int d = -D; d <= D; ++d) {
    const auto span = o.spanning_set(d, opts.size_bound);
    const bool complete = o.component_complete(d, opts.size_bound) && o.component_complete(-d, opts.size_bound);
    DegreeVerdict dv{d, complete ? Verdict::HoldsExactly : Verdict::HoldsAtBound, {}};
    std::optional<std::vector<El<O>>> triples;
    for (const auto& s : span) {
      if (auto f = o.left_unit(s)) {
        if (detail::factors_in_components(o, *f, d) && o.equal(o.mul(detail::multiply_out(o, *f), s), s))
          continue;
      }
      if (!triples) {
        const auto neg = o.spanning_set(-d, opts.size_bound);
        triples = detail::products(o, detail::products(o, span, neg), span);
      }
      if (detail::in_span(o, *triples, s, opts.cap)) continue;
      dv.verdict = complete ? Verdict::Fails : Verdict::NotFoundAtBound;
      dv.detail = o.format(s) + " is not in S_" + std::to_string(d) + " S_" + std::to_string(-d) + " S_" +
                  std::to_string(d);
      break;
    }
    if (dv.detail.empty()) dv.detail = std::to_string(span.size()) + " spanning elements certified";
    pv.degrees.push_back(std::move(dv));
  }
  return detail::finish(o, std::move(pv), opts);
}

template <class O>
PropertyVerdict check_strong(const O& o, const ClassifyOptions& opts = {}) {
  PropertyVerdict pv{"strong", Verdict::HoldsExactly, {}, {}, {}};
  const auto one = o.identity();
  if (!one || !o.generated_in_degree_one()) {
    pv.verdict = Verdict::Refused;
    pv.note = !one ? "ring is not unital" : "oracle is not generated in degree one";
    return pv;
  }
  const auto obstruction = o.strong_obstruction();
  bool found_all = true;
  for (int g : {1, -1}) {
    const auto a = o.spanning_set(g, opts.size_bound);
    const auto b = o.spanning_set(-g, opts.size_bound);
    const bool complete = o.component_complete(g, opts.size_bound) && o.component_complete(-g, opts.size_bound);
    const bool found = detail::in_span(o, detail::products(o, a, b), *one, opts.cap);
    found_all = found_all && found;
    const std::string what = "1 in S_" + std::to_string(g) + " S_" + std::to_string(-g);
    DegreeVerdict dv{g, Verdict::HoldsExactly, what};
    if (!found) {
      if (complete) {
        dv.verdict = Verdict::Fails;
        dv.detail = "1 is not in S_" + std::to_string(g) + " S_" + std::to_string(-g);
      } else if (obstruction) {
        dv.verdict = Verdict::Fails;
        dv.detail = *obstruction;
      } else {
        dv.verdict = Verdict::NotFoundAtBound;
        dv.detail = "1 not found in S_" + std::to_string(g) + " S_" + std::to_string(-g) + " at bound";
      }
    }
    pv.degrees.push_back(std::move(dv));
  }
  if (found_all && obstruction)
    throw InternalVerificationFailure("1 found in S_1 S_-1 despite " + *obstruction);
  pv.verdict = detail::combine(pv.degrees);
  for (const auto& d : pv.degrees)
    if (d.verdict == Verdict::Fails && pv.witness.empty()) pv.witness = d.detail;
  if constexpr (std::is_same_v<O, PathAlgebraOracle>) pv.note = obstruction ? "graph has a sink" : "graph has no sinks";
  return pv;
}

struct EpsilonResult {
  PropertyVerdict verdict;
  std::map<int, std::string> table;
};

template <class O>
EpsilonResult check_epsilon_strong(const O& o, const ClassifyOptions& opts = {}) {
  EpsilonResult res{{"epsilon-strong", Verdict::HoldsExactly, {}, {}, {}}, {}};
  const int D = detail::bound_int(opts.degree_bound);
  const std::size_t b = opts.size_bound;
  for (int d = -D; d <= D; ++d) {
    const bool complete = o.component_complete(d, b) && o.component_complete(-d, b);
    const auto left = o.spanning_set(d, b + 1);
    const auto right = o.spanning_set(-d, b + 1);
    DegreeVerdict dv{d, complete ? Verdict::HoldsExactly : Verdict::HoldsAtBound, {}};
    std::optional<El<O>> eps;
    if (auto cand = o.epsilon(d)) {
      bool ok = detail::factors_in_components(o, cand->second, d) &&
                o.equal(detail::multiply_out(o, cand->second), cand->first);
      for (const auto& t : left) ok = ok && o.equal(o.mul(cand->first, t), t);
      for (const auto& t : right) ok = ok && o.equal(o.mul(t, cand->first), t);
      if (ok) {
        eps = cand->first;
        dv.detail = "closed form verified";
      }
    }
    if (!eps) {
      const auto pool = detail::products(o, o.spanning_set(d, b), o.spanning_set(-d, b));
      eps = detail::find_unit(o, pool, left, right, opts.cap);
      if (eps) dv.detail = "found by search";
    }
    if (eps) {
      res.table[d] = o.format(*eps);
    } else {
      dv.verdict = complete ? Verdict::Fails : Verdict::NotFoundAtBound;
      dv.detail = "no element of S_" + std::to_string(d) + " S_" + std::to_string(-d) +
                  " at bound " + std::to_string(b) + " is a left unit on S_" + std::to_string(d) +
                  " and a right unit on S_" + std::to_string(-d) + " at bound " + std::to_string(b + 1);
    }
    res.verdict.degrees.push_back(std::move(dv));
  }
  res.verdict = detail::finish(o, std::move(res.verdict), opts);
  if (!o.identity()) {
    res.verdict.verdict = Verdict::Fails;
    res.verdict.note = "ring is not unital, and epsilon-strong gradings only exist on unital rings";
    for (const auto& d : res.verdict.degrees)
      if (d.verdict != Verdict::HoldsExactly && d.verdict != Verdict::HoldsAtBound) {
        res.verdict.witness = d.detail;
        break;
      }
    if (res.verdict.witness.empty()) res.verdict.witness = res.verdict.note;
  }
  return res;
}

template <class O>
PropertyVerdict check_nearly_epsilon(const O& o, const ClassifyOptions& opts = {}) {
  PropertyVerdict pv{"nearly-epsilon-strong", Verdict::HoldsExactly, {}, {}, {}};
  const int D = detail::bound_int(opts.degree_bound);
  const std::size_t b = opts.size_bound;
  for (int d = -D; d <= D; ++d) {
    auto [elements, exhaustive] = detail::test_elements(o, d, opts);
    const bool complete = o.component_complete(d, b) && o.component_complete(-d, b);
    DegreeVerdict dv{d, exhaustive && complete ? Verdict::HoldsExactly : Verdict::HoldsAtBound, {}};
    std::optional<std::vector<El<O>>> left_pool, right_pool;
    for (const auto& s : elements) {
      bool left_ok = false, right_ok = false;
      if (auto f = o.left_unit(s))
        left_ok = detail::factors_in_components(o, *f, d) && o.equal(o.mul(detail::multiply_out(o, *f), s), s);
      if (auto f = o.right_unit(s))
        right_ok = detail::factors_in_components(o, *f, -d) && o.equal(o.mul(s, detail::multiply_out(o, *f)), s);
      if (!left_ok) {
        if (!left_pool) left_pool = detail::products(o, o.spanning_set(d, b), o.spanning_set(-d, b));
        left_ok = detail::find_unit(o, *left_pool, {s}, {}, opts.cap).has_value();
      }
      if (!right_ok) {
        if (!right_pool) right_pool = detail::products(o, o.spanning_set(-d, b), o.spanning_set(d, b));
        right_ok = detail::find_unit(o, *right_pool, {}, {s}, opts.cap).has_value();
      }
      if (left_ok && right_ok) continue;
      dv.verdict = complete ? Verdict::Fails : Verdict::NotFoundAtBound;
      dv.detail = "no " + std::string(left_ok ? "right" : "left") + " unit for " + o.format(s) + " in " +
                  (left_ok ? "S_" + std::to_string(-d) + " S_" + std::to_string(d)
                           : "S_" + std::to_string(d) + " S_" + std::to_string(-d));
      break;
    }
    if (dv.detail.empty()) dv.detail = std::to_string(elements.size()) + " elements have units";
    pv.degrees.push_back(std::move(dv));
  }
  return detail::finish(o, std::move(pv), opts);
}

template <class O>
ClassificationReport classify(const O& o, const ClassifyOptions& opts = {}) {
  ClassificationReport r;
  r.ring = o.name();
  r.strong = check_strong(o, opts);
  auto eps = check_epsilon_strong(o, opts);
  r.epsilon = std::move(eps.verdict);
  r.epsilon_table = std::move(eps.table);
  r.nearly = check_nearly_epsilon(o, opts);
  r.symmetric = check_symmetric(o, opts);
  return r;
}

/// Searches homogeneous x != 0 with x t x = 0 for every spanning t of every
/// degree up to the bound.
template <class O>
PropertyVerdict is_semiprime_graded(const O& o, const ClassifyOptions& opts = {}) {
  PropertyVerdict pv{"semiprime", Verdict::HoldsExactly, {}, {}, {}};
  const int D = detail::bound_int(opts.degree_bound);
  std::vector<El<O>> probes;
  bool all_complete = true;
  for (int e = -D; e <= D; ++e) {
    for (auto& t : o.spanning_set(e, opts.size_bound)) probes.push_back(std::move(t));
    all_complete = all_complete && o.component_complete(e, opts.size_bound);
  }
  const auto sup = o.support();
  const bool degrees_covered = sup && (sup->first > sup->second || (sup->first >= -D && sup->second <= D));
  for (int d = -D; d <= D; ++d) {
    auto [elements, exhaustive] = detail::test_elements(o, d, opts);
    const bool exact = exhaustive && all_complete && degrees_covered;
    DegreeVerdict dv{d, exact ? Verdict::HoldsExactly : Verdict::HoldsAtBound,
                     std::to_string(elements.size()) + " elements tested"};
    for (const auto& x : elements) {
      bool annihilated = true;
      for (const auto& t : probes)
        if (!o.equal(o.mul(o.mul(x, t), x), o.zero())) {
          annihilated = false;
          break;
        }
      if (!annihilated) continue;
      dv.verdict = all_complete && degrees_covered ? Verdict::Fails : Verdict::NotFoundAtBound;
      dv.detail = "x S x = 0 for x = " + o.format(x);
      if (pv.witness.empty()) pv.witness = o.format(x);
      break;
    }
    pv.degrees.push_back(std::move(dv));
  }
  pv.verdict = detail::combine(pv.degrees);
  return pv;
}

// ---------------------------------------------------------------------------

struct LocalUnitsReport {
  std::vector<AlgebraElement> units;
  /// Sum of all units; the identity for finite graphs.
  AlgebraElement sum;
  bool verified = false;
};

/// The vertices, checked to be commuting idempotents absorbing every
/// spanning monomial with |degree| and lengths up to bound.
LocalUnitsReport homogeneous_local_units(const SpecPtr& spec, std::size_t bound = 3);

struct RadicalResult {
  std::vector<AlgebraElement> elements;
  /// Homogeneous elements whose additive span is the radical.
  std::vector<AlgebraElement> generators;
};

/// J(S) = {x : 1 - yx is left invertible for all y} by enumeration of the
/// whole (finite) algebra. Requires an acyclic graph and |S|^2 <= cap.
RadicalResult jacobson_radical_algebra(const SpecPtr& spec, std::size_t cap = default_search_cap());

}  // namespace gral
