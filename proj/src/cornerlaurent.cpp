#include "gral/cornerlaurent.hpp"

#include <set>

#include "gral/linsolve.hpp"

namespace gral {

CornerRing::CornerRing(Ring ring, Elem e, std::vector<Elem> table)
    : ring_(std::move(ring)), e_(e), alpha_(std::move(table)) {
  const Ring& R = ring_;
  if (R.mul(e, e) != e) throw NotIdempotent("e = " + R.format(e) + " is not idempotent");
  if (alpha_.size() != R.order()) throw NotCornerIso("alpha table must list an image for every element");
  for (Elem a : alpha_)
    if (index(a) >= R.order()) throw NotCornerIso("alpha image out of range");
  if (alpha(R.one()) != e) throw NotCornerIso("alpha(1) != e");
  const auto elems = R.elements();
  for (Elem a : elems)
    for (Elem b : elems) {
      if (alpha(R.add(a, b)) != R.add(alpha(a), alpha(b)))
        throw NotCornerIso("alpha is not additive at (" + R.format(a) + "," + R.format(b) + ")");
      if (alpha(R.mul(a, b)) != R.mul(alpha(a), alpha(b)))
        throw NotCornerIso("alpha is not multiplicative at (" + R.format(a) + "," + R.format(b) + ")");
    }
  std::set<Elem> corner;
  for (Elem a : elems) corner.insert(R.mul(R.mul(e, a), e));
  inverse_.assign(R.order(), R.zero());
  std::set<Elem> image;
  for (Elem a : elems) {
    const Elem b = alpha(a);
    if (!corner.count(b)) throw NotCornerIso("alpha(" + R.format(a) + ") is not in eRe");
    if (!image.insert(b).second) throw NotCornerIso("alpha is not injective");
    inverse_[index(b)] = a;
  }
  if (image.size() != corner.size()) throw NotCornerIso("alpha is not onto eRe");
}

Elem CornerRing::alpha_pow(Elem r, std::size_t k) const {
  while (k-- > 0) r = alpha(r);
  return r;
}

Elem CornerRing::pull(Elem r) const {
  const Ring& R = ring_;
  return inverse_[index(R.mul(R.mul(e_, r), e_))];
}

Elem CornerRing::pull_pow(Elem r, std::size_t k) const {
  while (k-- > 0) r = pull(r);
  return r;
}

Elem CornerRing::e_at(std::size_t i) const { return alpha_pow(ring_.one(), i); }

std::string CornerRing::describe() const {
  std::string out = ring_.describe() + "[t+,t-;alpha], e=" + ring_.format(e_) + ", alpha={";
  for (std::size_t i = 0; i < alpha_.size(); ++i)
    out += (i ? "," : "") + ring_.format(elem(static_cast<std::uint32_t>(i))) + "->" + ring_.format(alpha_[i]);
  return out + "}";
}

CornerPtr csl_make(Ring ring, Elem e, std::vector<Elem> alpha) {
  return std::make_shared<const CornerRing>(std::move(ring), e, std::move(alpha));
}

CslElement::CslElement(CornerPtr ring) : ring_(std::move(ring)) {}

void CslElement::add_term(int degree, Elem a) {
  const Ring& R = ring_->ring();
  const std::size_t k = static_cast<std::size_t>(degree < 0 ? -degree : degree);
  const Elem ek = ring_->e_at(k);
  if (degree > 0) a = R.mul(a, ek);
  if (degree < 0) a = R.mul(ek, a);
  if (a == R.zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(degree, a);
  if (!inserted) {
    it->second = R.add(it->second, a);
    if (it->second == R.zero()) coeffs_.erase(it);
  }
}

CslElement CslElement::term(const CornerPtr& ring, int degree, Elem a) {
  CslElement out(ring);
  out.add_term(degree, a);
  return out;
}

CslElement CslElement::one(const CornerPtr& ring) { return term(ring, 0, ring->ring().one()); }

Elem CslElement::coeff(int degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? ring_->ring().zero() : it->second;
}

std::optional<int> CslElement::degree() const {
  if (coeffs_.size() != 1) return std::nullopt;
  return coeffs_.begin()->first;
}

CslElement CslElement::operator+(const CslElement& o) const {
  if (ring_ != o.ring_) throw SpecMismatch("elements of different corner rings");
  CslElement out = *this;
  for (const auto& [d, a] : o.coeffs_) out.add_term(d, a);
  return out;
}

CslElement CslElement::operator-() const {
  CslElement out(ring_);
  for (const auto& [d, a] : coeffs_) out.add_term(d, ring_->ring().neg(a));
  return out;
}

CslElement CslElement::operator-(const CslElement& o) const { return *this + (-o); }

CslElement CslElement::operator*(const CslElement& o) const {
  if (ring_ != o.ring_) throw SpecMismatch("elements of different corner rings");
  const CornerRing& C = *ring_;
  const Ring& R = C.ring();
  CslElement out(ring_);
  for (const auto& [d1, a] : coeffs_)
    for (const auto& [d2, b] : o.coeffs_) {
      if (d1 >= 0 && d2 >= 0) {
        // (a t+^i)(b t+^j) = a alpha^i(b) t+^{i+j}
        out.add_term(d1 + d2, R.mul(a, C.alpha_pow(b, static_cast<std::size_t>(d1))));
      } else if (d1 <= 0 && d2 <= 0) {
        // (t-^i a)(t-^j b) = t-^{i+j} alpha^j(a) b
        out.add_term(d1 + d2, R.mul(C.alpha_pow(a, static_cast<std::size_t>(-d2)), b));
      } else if (d1 < 0) {
        // (t-^i a)(b t+^j): t-^i c t+^i = pull^i(c)
        const std::size_t i = static_cast<std::size_t>(-d1), j = static_cast<std::size_t>(d2);
        const Elem c = R.mul(a, b);
        out.add_term(d1 + d2, C.pull_pow(c, std::min(i, j)));
      } else {
        // (a t+^i)(t-^j b): t+^i t-^j = e_i t+^{i-j} or t-^{j-i} e_j
        const std::size_t i = static_cast<std::size_t>(d1), j = static_cast<std::size_t>(-d2);
        if (i >= j)
          out.add_term(d1 + d2, R.mul(R.mul(a, C.e_at(i)), C.alpha_pow(b, i - j)));
        else
          out.add_term(d1 + d2, R.mul(R.mul(C.alpha_pow(a, j - i), C.e_at(j)), b));
      }
    }
  return out;
}

std::string CslElement::format() const {
  if (coeffs_.empty()) return "0";
  const Ring& R = ring_->ring();
  std::string out;
  for (const auto& [d, a] : coeffs_) {
    if (!out.empty()) out += " + ";
    const std::string c = R.format(a);
    if (d == 0) {
      out += c;
    } else if (d > 0) {
      out += (a == R.one() ? "" : c + " ") + "t+" + (d > 1 ? "^" + std::to_string(d) : "");
    } else {
      out += "t-" + (d < -1 ? "^" + std::to_string(-d) : "") + (a == R.one() ? "" : " " + c);
    }
  }
  return out;
}

std::vector<CslElement> csl_component(const CornerPtr& ring, int degree) {
  std::set<CslElement> seen;
  std::vector<CslElement> out;
  for (Elem a : ring->ring().elements()) {
    auto x = CslElement::term(ring, degree, a);
    if (seen.insert(x).second) out.push_back(std::move(x));
  }
  return out;
}

CslEpsilon csl_epsilon(const CornerPtr& ring, int n) {
  const Ring& R = ring->ring();
  const std::size_t k = static_cast<std::size_t>(n < 0 ? -n : n);
  CslEpsilon out{CslElement(ring), {}};
  if (n > 0) {
    const Elem ek = ring->e_at(k);
    out.value = CslElement::term(ring, 0, ek);
    out.factors.emplace_back(CslElement::term(ring, n, ek), CslElement::term(ring, -n, ek));
  } else {
    out.value = CslElement::one(ring);
    out.factors.emplace_back(CslElement::term(ring, n, R.one()), CslElement::term(ring, -n, R.one()));
  }
  CslElement product(ring);
  for (const auto& [a, b] : out.factors) product = product + a * b;
  if (!(product == out.value)) throw AssertionFailure("epsilon factorization does not multiply out");
  for (const auto& s : csl_component(ring, n))
    if (!(out.value * s == s)) throw AssertionFailure("epsilon_" + std::to_string(n) + " s != s for s = " + s.format());
  for (const auto& s : csl_component(ring, -n))
    if (!(s * out.value == s)) throw AssertionFailure("s epsilon_" + std::to_string(n) + " != s for s = " + s.format());
  return out;
}

std::string CslWitness::format() const {
  std::string out = "element: " + element.format() + "\n";
  out += "degree: " + std::to_string(degree) + "\n";
  out += "method: oracle\n";
  if (witness)
    out += "witness: " + witness->format() + "\n";
  else
    out += "absence: " + absence + (exact ? " (exact)" : " (at bound)") + "\n";
  out += std::string("verified: true\n");
  return out;
}

CslWitness csl_graded_witness(const CslElement& x, std::size_t cap) {
  const CornerPtr& C = x.corner();
  const Ring& R = C->ring();
  if (x.coeffs().size() > 1) throw PreconditionViolation("element is not homogeneous: " + x.format());
  CslWitness out{x, x.degree().value_or(0), std::nullopt, true, {}};
  if (x.is_zero()) {
    out.witness = CslElement(C);
    return out;
  }
  const int d = *x.degree();
  const Elem a = x.coeff(d);
  const Elem ek = C->e_at(static_cast<std::size_t>(d < 0 ? -d : d));
  // x b x = x reduces to a c a = a with b = t-^d c (c = e_d c) for d > 0 and
  // b = c t+^{-d} (c = c e_d) for d < 0.
  LinearSystem sys;
  sys.num_vars = 1;
  sys.equations.push_back({{{a, 0, a}}, a});
  if (d > 0) sys.equations.push_back({{{ek, 0, R.one()}, {R.neg(R.one()), 0, R.one()}}, R.zero()});
  if (d < 0) sys.equations.push_back({{{R.one(), 0, ek}, {R.neg(R.one()), 0, R.one()}}, R.zero()});
  if (auto c = solve_linear_system(R, sys, cap)) {
    CslElement b = CslElement::term(C, -d, (*c)[0]);
    if (!(x * b * x == x)) throw InternalVerificationFailure("corner witness fails x = xbx");
    out.witness = std::move(b);
    return out;
  }
  out.absence = "no c in R with a c a = a, so no b in S_" + std::to_string(-d);
  return out;
}

}  // namespace gral
