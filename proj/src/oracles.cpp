#include "gral/oracles.hpp"

#include <algorithm>

#include "gral/regularity.hpp"

namespace gral {

// ---------------------------------------------------------------------------
// Path algebras

PathAlgebraOracle::PathAlgebraOracle(SpecPtr spec) : spec_(std::move(spec)) {}

std::string PathAlgebraOracle::name() const { return spec_->describe(); }

std::vector<AlgebraElement> PathAlgebraOracle::spanning_set(int degree, std::size_t bound) const {
  std::vector<AlgebraElement> out;
  for (const auto& m : reduced_monomials(*spec_, bound, degree))
    out.push_back(AlgebraElement::monomial(spec_, m.alpha, m.beta, spec_->ring().one()));
  return out;
}

bool PathAlgebraOracle::component_complete(int, std::size_t bound) const {
  const auto longest = longest_path_length(spec_->graph());
  return longest && bound >= *longest;
}

DegreeSupport PathAlgebraOracle::support() const {
  if (spec_->is_null()) return std::make_pair(0, -1);
  const auto longest = longest_path_length(spec_->graph());
  if (!longest) return std::nullopt;
  const int l = static_cast<int>(*longest);
  return std::make_pair(-l, l);
}

std::map<std::string, Elem> PathAlgebraOracle::coords(const AlgebraElement& a) const {
  std::map<std::string, Elem> out;
  for (const auto& [m, c] : a.terms()) out.emplace(format_monomial(spec_->graph(), m), c);
  return out;
}

std::vector<std::pair<Elem, AlgebraElement>> PathAlgebraOracle::basis_terms(const AlgebraElement& a) const {
  std::vector<std::pair<Elem, AlgebraElement>> out;
  for (const auto& [m, c] : a.terms())
    out.emplace_back(c, AlgebraElement::monomial(spec_, m.alpha, m.beta, spec_->ring().one()));
  return out;
}

std::optional<Factorization<AlgebraElement>> PathAlgebraOracle::left_unit(const AlgebraElement& s) const {
  if (s.is_zero() || !s.is_homogeneous()) return std::nullopt;
  return local_unit_left(s).factors;
}

std::optional<Factorization<AlgebraElement>> PathAlgebraOracle::right_unit(const AlgebraElement& s) const {
  if (s.is_zero() || !s.is_homogeneous()) return std::nullopt;
  return local_unit_right(s).factors;
}

std::optional<std::pair<AlgebraElement, Factorization<AlgebraElement>>> PathAlgebraOracle::epsilon(int d) const {
  if (!spec_->is_leavitt()) return std::nullopt;
  auto eps = epsilon_element(spec_, d, 0);
  return std::make_pair(std::move(eps.value), std::move(eps.factors));
}

std::optional<std::string> PathAlgebraOracle::strong_obstruction() const {
  const Graph& g = spec_->graph();
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (g.is_sink(v))
      return "sink " + g.vertex_name(v) + ": " + g.vertex_name(v) + " S_1 = 0, so " + g.vertex_name(v) +
             " (S_1 S_-1) = 0 while " + g.vertex_name(v) + " 1 = " + g.vertex_name(v);
  return std::nullopt;
}

namespace {

// recv[k][v]: some path of length k ends at v.
std::vector<std::vector<char>> receives(const Graph& g, std::size_t max_len) {
  std::vector<std::vector<char>> recv(max_len + 1, std::vector<char>(g.num_vertices(), 0));
  std::fill(recv[0].begin(), recv[0].end(), 1);
  for (std::size_t k = 1; k <= max_len; ++k)
    for (EdgeId e = 0; e < g.num_edges(); ++e)
      if (recv[k - 1][g.source(e)]) recv[k][g.range(e)] = 1;
  return recv;
}

}  // namespace

PathEpsilon epsilon_element(const SpecPtr& spec, int n, std::size_t bound) {
  if (!spec->is_leavitt()) throw PreconditionViolation("epsilon elements are defined for Leavitt specs");
  const Graph& g = spec->graph();
  const Ring& R = spec->ring();
  PathEpsilon out{AlgebraElement(spec), {}};
  if (n >= 0) {
    for (const auto& p : paths(g, static_cast<std::size_t>(n))) {
      out.value.add_term(p, p, R.one());
      out.factors.emplace_back(AlgebraElement::monomial(spec, p, Path::vertex(p.range(g)), R.one()),
                               AlgebraElement::monomial(spec, Path::vertex(p.range(g)), p, R.one()));
    }
  } else {
    // Paths that avoid cycles have length < |V|, and a vertex on a cycle
    // receives paths of every length, so minimal q have length <= |V|.
    const std::size_t m = static_cast<std::size_t>(-n);
    const std::size_t depth = g.num_vertices();
    const auto recv = receives(g, depth + m);
    std::vector<Path> frontier;
    for (VertexId v = 0; v < g.num_vertices(); ++v) frontier.push_back(Path::vertex(v));
    while (!frontier.empty()) {
      std::vector<Path> next;
      for (auto& q : frontier) {
        const VertexId u = q.range(g);
        if (recv[q.length() + m][u]) {
          const Path companion = paths(g, q.length() + m, u).front();
          out.value.add_term(q, q, R.one());
          out.factors.emplace_back(AlgebraElement::monomial(spec, q, companion, R.one()),
                                   AlgebraElement::monomial(spec, companion, q, R.one()));
          continue;
        }
        if (q.length() >= depth) continue;
        for (EdgeId f : g.out_edges(u)) {
          Path ext = q;
          ext.edges.push_back(f);
          next.push_back(std::move(ext));
        }
      }
      frontier = std::move(next);
    }
  }
  AlgebraElement product(spec);
  for (const auto& [a, b] : out.factors) {
    if (a.degree().value_or(n) != n || b.degree().value_or(-n) != -n)
      throw AssertionFailure("epsilon factor in the wrong component");
    product += a * b;
  }
  if (!(product == out.value)) throw AssertionFailure("epsilon factorization does not multiply out");
  for (const auto& m : reduced_monomials(*spec, bound, n)) {
    auto s = AlgebraElement::monomial(spec, m.alpha, m.beta, R.one());
    if (!(out.value * s == s))
      throw AssertionFailure("epsilon_" + std::to_string(n) + " s != s for s = " + s.format());
  }
  for (const auto& m : reduced_monomials(*spec, bound, -n)) {
    auto s = AlgebraElement::monomial(spec, m.alpha, m.beta, R.one());
    if (!(s * out.value == s))
      throw AssertionFailure("s epsilon_" + std::to_string(n) + " != s for s = " + s.format());
  }
  return out;
}

// ---------------------------------------------------------------------------
// M_2(R)

Matrix MatrixGradingOracle::unit(std::size_t i, std::size_t j) const {
  Matrix m(ring_, 2, 2);
  m.at(i, j) = ring_.one();
  return m;
}

std::vector<Matrix> MatrixGradingOracle::spanning_set(int degree, std::size_t) const {
  if (degree == 0) return {unit(0, 0), unit(1, 1)};
  if (degree == 1) return {unit(0, 1)};
  if (degree == -1) return {unit(1, 0)};
  return {};
}

std::optional<int> MatrixGradingOracle::degree(const Matrix& a) const {
  const bool diag = a.at(0, 0) != ring_.zero() || a.at(1, 1) != ring_.zero();
  const bool up = a.at(0, 1) != ring_.zero();
  const bool down = a.at(1, 0) != ring_.zero();
  if (diag + up + down != 1) return std::nullopt;
  return diag ? 0 : (up ? 1 : -1);
}

std::map<std::string, Elem> MatrixGradingOracle::coords(const Matrix& a) const {
  std::map<std::string, Elem> out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (a.at(i, j) != ring_.zero()) out.emplace("e" + std::to_string(i + 1) + std::to_string(j + 1), a.at(i, j));
  return out;
}

std::vector<std::pair<Elem, Matrix>> MatrixGradingOracle::basis_terms(const Matrix& a) const {
  std::vector<std::pair<Elem, Matrix>> out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (a.at(i, j) != ring_.zero()) out.emplace_back(a.at(i, j), unit(i, j));
  return out;
}

// ---------------------------------------------------------------------------
// Truncated polynomials

std::string TruncatedPolynomialOracle::name() const {
  return ring_.describe() + "[x]/(x^" + std::to_string(top_ + 1) + ")";
}

TruncatedPolynomialOracle::Element TruncatedPolynomialOracle::monomial(std::size_t k, Elem c) const {
  Element out = zero();
  if (k <= top_) out[k] = c;
  return out;
}

std::vector<TruncatedPolynomialOracle::Element> TruncatedPolynomialOracle::spanning_set(int degree,
                                                                                     std::size_t) const {
  if (degree < 0 || static_cast<std::size_t>(degree) > top_) return {};
  return {monomial(static_cast<std::size_t>(degree), ring_.one())};
}

TruncatedPolynomialOracle::Element TruncatedPolynomialOracle::add(const Element& a, const Element& b) const {
  Element out = zero();
  for (std::size_t i = 0; i <= top_; ++i) out[i] = ring_.add(a[i], b[i]);
  return out;
}

TruncatedPolynomialOracle::Element TruncatedPolynomialOracle::mul(const Element& a, const Element& b) const {
  Element out = zero();
  for (std::size_t i = 0; i <= top_; ++i)
    for (std::size_t j = 0; i + j <= top_; ++j) out[i + j] = ring_.add(out[i + j], ring_.mul(a[i], b[j]));
  return out;
}

TruncatedPolynomialOracle::Element TruncatedPolynomialOracle::neg(const Element& a) const {
  Element out = zero();
  for (std::size_t i = 0; i <= top_; ++i) out[i] = ring_.neg(a[i]);
  return out;
}

TruncatedPolynomialOracle::Element TruncatedPolynomialOracle::scale(Elem r, const Element& a) const {
  Element out = zero();
  for (std::size_t i = 0; i <= top_; ++i) out[i] = ring_.mul(r, a[i]);
  return out;
}

std::optional<int> TruncatedPolynomialOracle::degree(const Element& a) const {
  std::optional<int> d;
  for (std::size_t i = 0; i <= top_; ++i)
    if (a[i] != ring_.zero()) {
      if (d) return std::nullopt;
      d = static_cast<int>(i);
    }
  return d;
}

std::string TruncatedPolynomialOracle::format(const Element& a) const {
  std::string out;
  for (std::size_t i = 0; i <= top_; ++i) {
    if (a[i] == ring_.zero()) continue;
    if (!out.empty()) out += " + ";
    const bool unit = a[i] == ring_.one();
    if (i == 0) {
      out += ring_.format(a[i]);
    } else {
      out += (unit ? "" : ring_.format(a[i]) + " ") + "x" + (i > 1 ? "^" + std::to_string(i) : "");
    }
  }
  return out.empty() ? "0" : out;
}

std::map<std::string, Elem> TruncatedPolynomialOracle::coords(const Element& a) const {
  std::map<std::string, Elem> out;
  for (std::size_t i = 0; i <= top_; ++i)
    if (a[i] != ring_.zero()) out.emplace("x^" + std::to_string(i), a[i]);
  return out;
}

std::vector<std::pair<Elem, TruncatedPolynomialOracle::Element>> TruncatedPolynomialOracle::basis_terms(
    const Element& a) const {
  std::vector<std::pair<Elem, Element>> out;
  for (std::size_t i = 0; i <= top_; ++i)
    if (a[i] != ring_.zero()) out.emplace_back(a[i], monomial(i, ring_.one()));
  return out;
}

// ---------------------------------------------------------------------------
// Direct sum of copies of R

std::vector<LocalUnitsSumOracle::Element> LocalUnitsSumOracle::spanning_set(int degree, std::size_t bound) const {
  std::vector<Element> out;
  if (degree != 0) return out;
  for (std::size_t i = 1; i <= bound; ++i) out.push_back({{i, ring_.one()}});
  return out;
}

namespace {

void put(const Ring& R, std::map<std::size_t, Elem>& m, std::size_t i, Elem c) {
  if (c == R.zero()) return;
  auto [it, inserted] = m.try_emplace(i, c);
  if (!inserted) {
    it->second = R.add(it->second, c);
    if (it->second == R.zero()) m.erase(it);
  }
}

}  // namespace

LocalUnitsSumOracle::Element LocalUnitsSumOracle::add(const Element& a, const Element& b) const {
  Element out = a;
  for (const auto& [i, c] : b) put(ring_, out, i, c);
  return out;
}

LocalUnitsSumOracle::Element LocalUnitsSumOracle::mul(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [i, c] : a)
    if (auto it = b.find(i); it != b.end()) put(ring_, out, i, ring_.mul(c, it->second));
  return out;
}

LocalUnitsSumOracle::Element LocalUnitsSumOracle::neg(const Element& a) const {
  Element out;
  for (const auto& [i, c] : a) put(ring_, out, i, ring_.neg(c));
  return out;
}

LocalUnitsSumOracle::Element LocalUnitsSumOracle::scale(Elem r, const Element& a) const {
  Element out;
  for (const auto& [i, c] : a) put(ring_, out, i, ring_.mul(r, c));
  return out;
}

std::optional<int> LocalUnitsSumOracle::degree(const Element& a) const {
  if (a.empty()) return std::nullopt;
  return 0;
}

std::string LocalUnitsSumOracle::format(const Element& a) const {
  if (a.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : a) {
    if (!out.empty()) out += " + ";
    out += (c == ring_.one() ? "" : ring_.format(c) + " ") + "u" + std::to_string(i);
  }
  return out;
}

std::map<std::string, Elem> LocalUnitsSumOracle::coords(const Element& a) const {
  std::map<std::string, Elem> out;
  for (const auto& [i, c] : a) out.emplace("u" + std::to_string(i), c);
  return out;
}

std::vector<std::pair<Elem, LocalUnitsSumOracle::Element>> LocalUnitsSumOracle::basis_terms(
    const Element& a) const {
  std::vector<std::pair<Elem, Element>> out;
  for (const auto& [i, c] : a) out.emplace_back(c, Element{{i, ring_.one()}});
  return out;
}

// ---------------------------------------------------------------------------
// Trivial grading and corner rings

std::vector<Elem> TrivialGradingOracle::spanning_set(int degree, std::size_t) const {
  std::vector<Elem> out;
  if (degree != 0) return out;
  for (Elem a : ring_.elements())
    if (a != ring_.zero()) out.push_back(a);
  return out;
}

std::optional<int> TrivialGradingOracle::degree(Elem a) const {
  if (a == ring_.zero()) return std::nullopt;
  return 0;
}

std::vector<CslElement> CornerOracle::spanning_set(int degree, std::size_t) const {
  std::vector<CslElement> out;
  for (auto& x : csl_component(ring_, degree))
    if (!x.is_zero()) out.push_back(std::move(x));
  return out;
}

std::map<std::string, Elem> CornerOracle::coords(const CslElement& a) const {
  std::map<std::string, Elem> out;
  for (const auto& [d, c] : a.coeffs()) out.emplace("t" + std::to_string(d), c);
  return out;
}

std::vector<std::pair<Elem, CslElement>> CornerOracle::basis_terms(const CslElement& a) const {
  std::vector<std::pair<Elem, CslElement>> out;
  for (const auto& [d, c] : a.coeffs()) out.emplace_back(ring_->ring().one(), CslElement::term(ring_, d, c));
  return out;
}

std::optional<std::pair<CslElement, Factorization<CslElement>>> CornerOracle::epsilon(int d) const {
  auto eps = csl_epsilon(ring_, d);
  return std::make_pair(std::move(eps.value), std::move(eps.factors));
}

}  // namespace gral
