#include "gral/regularity.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gral/linsolve.hpp"

namespace gral {

LocalUnit local_unit_left(const AlgebraElement& x) {
  if (x.is_zero()) throw ZeroElement("local unit of the zero element");
  const SpecPtr& spec = x.spec();
  const Ring& R = spec->ring();
  // Companion ghost part for each real part, first in term order.
  std::map<Path, Path> companion;
  for (const auto& [m, c] : x.terms()) companion.try_emplace(m.alpha, m.beta);
  std::vector<Path> minimal;
  for (const auto& [alpha, beta] : companion) {
    bool dominated = false;
    for (const auto& [other, unused] : companion)
      if (!(other == alpha) && is_prefix(other, alpha)) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(alpha);
  }
  LocalUnit out{AlgebraElement(spec), {}};
  for (const auto& gamma : minimal) {
    const Path& delta = companion.at(gamma);
    auto a = AlgebraElement::monomial(spec, gamma, delta, R.one());
    auto b = AlgebraElement::monomial(spec, delta, gamma, R.one());
    out.unit.add_term(gamma, gamma, R.one());
    out.factors.emplace_back(std::move(a), std::move(b));
  }
  const int d = x.terms().begin()->first.degree();
  for (const auto& [a, b] : out.factors)
    if (a.degree() != d || b.degree() != -d)
      throw InternalVerificationFailure("local unit factor has the wrong degree");
  if (!(out.unit * x == x)) throw InternalVerificationFailure("local unit does not absorb x");
  return out;
}

LocalUnit local_unit_right(const AlgebraElement& x) {
  const LocalUnit mirror = local_unit_left(x.involution());
  LocalUnit out{mirror.unit.involution(), {}};
  for (const auto& [a, b] : mirror.factors) out.factors.emplace_back(b.involution(), a.involution());
  if (!(x * out.unit == x)) throw InternalVerificationFailure("right local unit does not absorb x");
  return out;
}

IdempotentGenerator idempotent_generator(const std::vector<Matrix>& gens, std::size_t cap) {
  if (gens.empty()) throw PreconditionViolation("idempotent generator of an empty generator list");
  const Ring& R = gens.front().ring();
  const std::size_t n = gens.front().rows();
  for (const auto& c : gens)
    if (c.rows() != n || c.cols() != n || !(c.ring() == R))
      throw PreconditionViolation("generators must be square matrices of one size over one ring");
  if (!is_vnr(R).regular) throw CoefficientRingNotVNR("coefficient ring " + R.describe() + " is not regular");

  const Matrix one = Matrix::identity(R, n);
  Matrix e(R, n, n);
  std::vector<Matrix> u;
  for (const auto& c : gens) {
    if (c.is_zero()) {
      u.emplace_back(R, n, n);
      continue;
    }
    const Matrix comp = one - e;
    const Matrix g = c * comp;
    auto w = matrix_vnr_witness(g, cap);
    if (!w) throw InternalVerificationFailure("matrix over a regular ring has no inner inverse");
    const Matrix t = comp * *w;  // (1 - e) w
    const Matrix tc = t * c;
    for (auto& ui : u) ui = ui - tc * ui;
    u.push_back(t);
    e = e + t * g;
  }
  if (!(e * e == e)) throw InternalVerificationFailure("combined generator is not idempotent");
  Matrix sum(R, n, n);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    sum = sum + u[i] * gens[i];
    if (!(gens[i] * e == gens[i])) throw InternalVerificationFailure("generator not in the ideal of y");
  }
  if (!(sum == e)) throw InternalVerificationFailure("idempotent is not the stated combination");
  return {e, u};
}

std::string to_string(WitnessMethod m) { return m == WitnessMethod::Constructive ? "constructive" : "oracle"; }

std::string to_string(RegularityVerdict v) {
  switch (v) {
    case RegularityVerdict::VerifiedAtBounds: return "verified-at-bounds";
    case RegularityVerdict::Counterexample: return "counterexample";
    case RegularityVerdict::NoWitnessAtBound: return "no-witness-at-bound";
  }
  return "?";
}

std::string WitnessCertificate::format() const {
  std::string out = "element: " + element.format() + "\n";
  out += "degree: " + std::to_string(degree) + "\n";
  out += "method: " + to_string(method) + "\n";
  if (witness)
    out += "witness: " + witness->format() + "\n";
  else
    out += "absence: " + absence + (exact ? " (exact)" : " (at bound)") + "\n";
  out += "bounds: " + std::to_string(bound) + "\n";
  out += std::string("verified: ") + (verified ? "true" : "false") + "\n";
  return out;
}

namespace {

void require_homogeneous(const AlgebraElement& x) {
  if (!x.is_homogeneous()) throw PreconditionViolation("element is not homogeneous: " + x.format());
}

WitnessCertificate certify(const AlgebraElement& x, AlgebraElement b, WitnessMethod method,
                           std::size_t bound) {
  if (!(x * b * x == x))
    throw InternalVerificationFailure("witness fails x = xbx for " + x.format());
  WitnessCertificate cert{x, x.degree().value_or(0), method, std::move(b), bound, true, true, {}};
  return cert;
}

}  // namespace

WitnessCertificate graded_witness_constructive(const AlgebraElement& x, std::size_t cap) {
  const SpecPtr& spec = x.spec();
  if (!spec->is_leavitt()) throw PreconditionViolation("constructive witnesses need a Leavitt spec");
  require_homogeneous(x);
  if (!is_vnr(spec->ring()).regular)
    throw CoefficientRingNotVNR("coefficient ring " + spec->ring().describe() + " is not regular");
  if (x.is_zero()) return certify(x, AlgebraElement(spec), WitnessMethod::Constructive, 0);
  const int d = *x.degree();
  if (d < 0) {
    const auto mirrored = graded_witness_constructive(x.involution(), cap);
    return certify(x, mirrored.witness->involution(), WitnessMethod::Constructive, mirrored.bound);
  }

  const LocalUnit eps = local_unit_left(x);
  std::vector<AlgebraElement> cs;
  std::size_t level = 0;
  for (const auto& [a, b] : eps.factors) {
    cs.push_back(b * x);
    level = std::max(level, filtration_level(cs.back()));
  }
  std::vector<MatricialImage> images;
  for (const auto& c : cs) images.push_back(matricial_decompose(c, level));
  std::vector<MatricialImage> coeffs(cs.size(), MatricialImage(spec, level));
  for (const auto& [key, block] : images.front().blocks()) {
    std::vector<Matrix> gens;
    bool all_zero = true;
    for (const auto& img : images) {
      gens.push_back(img.blocks().at(key).matrix);
      all_zero = all_zero && gens.back().is_zero();
    }
    if (all_zero) continue;
    const auto gen = idempotent_generator(gens, cap);
    for (std::size_t i = 0; i < cs.size(); ++i) coeffs[i].blocks().at(key).matrix = gen.coeffs[i];
  }
  AlgebraElement r(spec);
  for (std::size_t i = 0; i < cs.size(); ++i) r += matricial_lift(coeffs[i]) * eps.factors[i].second;
  if (r.degree() && *r.degree() != -d) throw InternalVerificationFailure("witness has the wrong degree");
  return certify(x, std::move(r), WitnessMethod::Constructive, level);
}

WitnessCertificate graded_witness_oracle(const AlgebraElement& x, std::size_t bound, std::size_t cap) {
  const SpecPtr& spec = x.spec();
  const Ring& R = spec->ring();
  require_homogeneous(x);
  const auto longest = longest_path_length(spec->graph());
  const bool exact = longest && bound >= *longest;
  if (x.is_zero()) return certify(x, AlgebraElement(spec), WitnessMethod::Oracle, bound);
  const int d = *x.degree();
  const auto basis = reduced_monomials(*spec, bound, -d);

  // x m x = sum_{a,b} r_a z_m r_b (m_a m m_b); integer coefficients from
  // reduction are central.
  std::map<Monomial, std::size_t> row;
  LinearSystem sys;
  sys.num_vars = basis.size();
  auto equation = [&](const Monomial& t) -> LinearEquation& {
    auto [it, inserted] = row.try_emplace(t, sys.equations.size());
    if (inserted) sys.equations.push_back({{}, R.zero()});
    return sys.equations[it->second];
  };
  for (const auto& [t, c] : x.terms()) equation(t).rhs = c;
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (const auto& [ma, ra] : x.terms()) {
      const AlgebraElement left = monomial_product(spec, ma, basis[k]);
      for (const auto& [t1, k1] : left.terms())
        for (const auto& [mb, rb] : x.terms()) {
          const AlgebraElement full = monomial_product(spec, t1, mb);
          for (const auto& [t2, k2] : full.terms())
            equation(t2).terms.push_back({R.mul(ra, R.mul(k1, k2)), k, rb});
        }
    }
  if (auto z = solve_linear_system(R, sys, cap)) {
    AlgebraElement b(spec);
    for (std::size_t k = 0; k < basis.size(); ++k)
      b.add_term(basis[k].alpha, basis[k].beta, (*z)[k]);
    return certify(x, std::move(b), WitnessMethod::Oracle, bound);
  }
  WitnessCertificate cert{x, d, WitnessMethod::Oracle, std::nullopt, bound, exact, true, {}};
  cert.absence = "no witness supported on the degree " + std::to_string(-d) + " spanning set of " +
                 std::to_string(basis.size()) + " reduced monomials at bound " + std::to_string(bound);
  return cert;
}

AlgebraElement random_homogeneous(const SpecPtr& spec, std::mt19937_64& rng, int degree,
                                  std::size_t max_len, std::size_t max_terms) {
  const Ring& R = spec->ring();
  const auto pool = reduced_monomials(*spec, max_len, degree);
  AlgebraElement out(spec);
  if (pool.empty() || R.order() < 2) return out;
  const std::size_t terms = 1 + rng() % std::max<std::size_t>(max_terms, 1);
  for (std::size_t i = 0; i < terms; ++i) {
    const auto& m = pool[rng() % pool.size()];
    out.add_term(m.alpha, m.beta, elem(static_cast<std::uint32_t>(1 + rng() % (R.order() - 1))));
  }
  return out;
}

AlgebraElement random_element(const SpecPtr& spec, std::mt19937_64& rng, std::size_t max_len,
                              std::size_t max_terms) {
  const Ring& R = spec->ring();
  const auto pool = reduced_monomials(*spec, max_len);
  AlgebraElement out(spec);
  if (pool.empty()) return out;
  const std::size_t terms = rng() % (max_terms + 1);
  for (std::size_t i = 0; i < terms; ++i) {
    const auto& m = pool[rng() % pool.size()];
    out.add_term(m.alpha, m.beta, elem(static_cast<std::uint32_t>(rng() % R.order())));
  }
  return out;
}

RegularityReport graded_vnr_verdict(const SpecPtr& spec, const VerdictOptions& opts) {
  RegularityReport report;
  if (spec->is_null()) return report;
  const Ring& R = spec->ring();
  WitnessMethod method = opts.method.value_or(
      spec->is_leavitt() && is_vnr(R).regular ? WitnessMethod::Constructive : WitnessMethod::Oracle);

  std::vector<AlgebraElement> elements;
  const int db = static_cast<int>(opts.degree_bound);
  for (const auto& m : reduced_monomials(*spec, opts.size_bound)) {
    if (std::abs(m.degree()) > db) continue;
    for (Elem r : R.elements())
      if (r != R.zero()) elements.push_back(AlgebraElement::monomial(spec, m.alpha, m.beta, r));
  }
  std::mt19937_64 rng(opts.seed);
  for (std::size_t s = 0; s < opts.samples; ++s) {
    const int d = static_cast<int>(rng() % (2 * opts.degree_bound + 1)) - db;
    auto x = random_homogeneous(spec, rng, d, opts.size_bound);
    if (!x.is_zero()) elements.push_back(std::move(x));
  }

  for (const auto& x : elements) {
    auto cert = method == WitnessMethod::Constructive ? graded_witness_constructive(x, opts.cap)
                                                      : graded_witness_oracle(x, opts.size_bound, opts.cap);
    if (!cert.witness && !report.counterexample) {
      report.counterexample = x;
      report.verdict = cert.exact ? RegularityVerdict::Counterexample : RegularityVerdict::NoWitnessAtBound;
    }
    report.certificates.push_back(std::move(cert));
  }
  return report;
}

}  // namespace gral
