#include "gral/gradedstruct.hpp"

#include <sstream>

namespace gral {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::HoldsExactly: return "holds-exactly";
    case Verdict::HoldsAtBound: return "holds-at-bound";
    case Verdict::NotFoundAtBound: return "not-found-at-bound";
    case Verdict::Fails: return "fails";
    case Verdict::Refused: return "refused";
  }
  return "?";
}

std::string ClassificationReport::format() const {
  std::ostringstream out;
  out << "ring: " << ring << "\n";
  for (const PropertyVerdict* p : {&strong, &epsilon, &nearly, &symmetric}) {
    out << p->property << ": " << to_string(p->verdict);
    if (!p->note.empty()) out << " (" << p->note << ")";
    out << "\n";
    for (const auto& d : p->degrees)
      out << "  " << p->property << " degree " << d.degree << ": " << to_string(d.verdict) << "  " << d.detail
          << "\n";
  }
  for (const auto& [d, e] : epsilon_table) out << "epsilon_" << d << " = " << e << "\n";
  return out.str();
}

bool chain_consistent(const ClassificationReport& r, std::string* why) {
  const PropertyVerdict* chain[] = {&r.strong, &r.epsilon, &r.nearly, &r.symmetric};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (chain[i]->holds() && chain[j]->fails()) {
        if (why) *why = chain[i]->property + " holds but " + chain[j]->property + " fails";
        return false;
      }
  return true;
}

LocalUnitsReport homogeneous_local_units(const SpecPtr& spec, std::size_t bound) {
  const Graph& g = spec->graph();
  LocalUnitsReport out{{}, AlgebraElement(spec), true};
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out.units.push_back(AlgebraElement::vertex(spec, v));
    out.sum += out.units.back();
  }
  for (std::size_t i = 0; i < out.units.size(); ++i)
    for (std::size_t j = 0; j < out.units.size(); ++j) {
      const auto p = out.units[i] * out.units[j];
      const bool ok = i == j ? p == out.units[i] : p.is_zero();
      if (!ok) out.verified = false;
    }
  for (const auto& m : reduced_monomials(*spec, bound)) {
    const auto x = AlgebraElement::monomial(spec, m.alpha, m.beta, spec->ring().one());
    if (!(out.sum * x == x) || !(x * out.sum == x)) out.verified = false;
  }
  if (!out.verified) throw AssertionFailure("vertices do not form homogeneous local units");
  return out;
}

namespace {

// Elements of a finite algebra as coordinate vectors on a monomial basis,
// encoded by mixed radix.
struct FiniteAlgebra {
  SpecPtr spec;
  std::vector<Monomial> basis;
  std::vector<std::vector<std::vector<Elem>>> table;  // basis_i basis_j in coordinates
  std::uint64_t order = 1;

  std::vector<Elem> decode(std::uint64_t code) const {
    const Ring& R = spec->ring();
    std::vector<Elem> v(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      v[i] = elem(static_cast<std::uint32_t>(code % R.order()));
      code /= R.order();
    }
    return v;
  }
  std::uint64_t encode(const std::vector<Elem>& v) const {
    const Ring& R = spec->ring();
    std::uint64_t code = 0;
    for (std::size_t i = basis.size(); i-- > 0;) code = code * R.order() + index(v[i]);
    return code;
  }
  std::vector<Elem> coords(const AlgebraElement& x) const {
    std::vector<Elem> v(basis.size(), spec->ring().zero());
    for (const auto& [m, c] : x.terms()) {
      auto it = std::lower_bound(basis.begin(), basis.end(), m);
      if (it == basis.end() || !(*it == m)) throw InternalVerificationFailure("monomial outside basis");
      v[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return v;
  }
  AlgebraElement element(const std::vector<Elem>& v) const {
    AlgebraElement out(spec);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (v[i] != spec->ring().zero()) out.add_term(basis[i].alpha, basis[i].beta, v[i]);
    return out;
  }
  std::vector<Elem> mul(const std::vector<Elem>& a, const std::vector<Elem>& b) const {
    const Ring& R = spec->ring();
    std::vector<Elem> out(basis.size(), R.zero());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (a[i] == R.zero()) continue;
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (b[j] == R.zero()) continue;
        const Elem ab = R.mul(a[i], b[j]);
        for (std::size_t k = 0; k < basis.size(); ++k)
          if (table[i][j][k] != R.zero()) out[k] = R.add(out[k], R.mul(ab, table[i][j][k]));
      }
    }
    return out;
  }
};

}  // namespace

RadicalResult jacobson_radical_algebra(const SpecPtr& spec, std::size_t cap) {
  const Graph& g = spec->graph();
  const Ring& R = spec->ring();
  const auto longest = longest_path_length(g);
  if (!longest) throw PreconditionViolation("the Jacobson radical is only enumerated for acyclic graphs");
  FiniteAlgebra A{spec, reduced_monomials(*spec, *longest), {}, 1};
  for (std::size_t i = 0; i < A.basis.size(); ++i) {
    A.order *= R.order();
    if (A.order > cap) throw SearchCapExceeded(cap);
  }
  if (static_cast<double>(A.order) * static_cast<double>(A.order) > static_cast<double>(cap))
    throw SearchCapExceeded(cap);
  A.table.assign(A.basis.size(), std::vector<std::vector<Elem>>(A.basis.size()));
  for (std::size_t i = 0; i < A.basis.size(); ++i)
    for (std::size_t j = 0; j < A.basis.size(); ++j)
      A.table[i][j] = A.coords(monomial_product(spec, A.basis[i], A.basis[j]));

  std::vector<std::vector<Elem>> all(A.order);
  for (std::uint64_t c = 0; c < A.order; ++c) all[c] = A.decode(c);
  const std::uint64_t one = A.encode(A.coords(AlgebraElement::identity(spec)));

  // u is left invertible iff z u = 1 for some z.
  std::vector<char> left_invertible(A.order, 0);
  for (std::uint64_t u = 0; u < A.order; ++u)
    for (std::uint64_t z = 0; z < A.order && !left_invertible[u]; ++z)
      if (A.encode(A.mul(all[z], all[u])) == one) left_invertible[u] = 1;

  std::vector<Elem> one_v = all[one];
  std::vector<char> in_j(A.order, 0);
  RadicalResult out;
  for (std::uint64_t x = 0; x < A.order; ++x) {
    bool ok = true;
    for (std::uint64_t y = 0; y < A.order && ok; ++y) {
      const auto yx = A.mul(all[y], all[x]);
      std::vector<Elem> d(A.basis.size());
      for (std::size_t k = 0; k < d.size(); ++k) d[k] = R.sub(one_v[k], yx[k]);
      ok = left_invertible[A.encode(d)] != 0;
    }
    if (!ok) continue;
    in_j[x] = 1;
    out.elements.push_back(A.element(all[x]));
  }

  // J is a graded ideal: every homogeneous component of an element lies in J.
  std::vector<AlgebraElement> homogeneous;
  for (const auto& x : out.elements)
    for (const auto& [d, c] : x.homogeneous_components()) {
      if (!in_j[A.encode(A.coords(c))])
        throw InternalVerificationFailure("radical is not graded at " + x.format());
      if (x.is_homogeneous()) homogeneous.push_back(x);
    }

  // Greedy additive generating set drawn from the homogeneous elements.
  std::vector<char> reached(A.order, 0);
  reached[0] = 1;
  std::vector<std::uint64_t> reached_list{0};
  for (const auto& h : homogeneous) {
    const std::uint64_t code = A.encode(A.coords(h));
    if (reached[code]) continue;
    out.generators.push_back(h);
    for (std::size_t i = 0; i < reached_list.size(); ++i)
      for (const auto& gen : out.generators) {
        const auto s = A.element(all[reached_list[i]]) + gen;
        const std::uint64_t c = A.encode(A.coords(s));
        if (!reached[c]) {
          reached[c] = 1;
          reached_list.push_back(c);
        }
      }
  }
  std::size_t j_size = 0;
  for (char c : in_j) j_size += c ? 1 : 0;
  if (reached_list.size() != j_size)
    throw InternalVerificationFailure("homogeneous elements do not span the radical");
  return out;
}

}  // namespace gral
