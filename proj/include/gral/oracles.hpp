#pragma once

// Built-in Z-graded ring oracles. Each oracle exposes homogeneous spanning
// sets, arithmetic and a few flags; the classification checks in
// gradedstruct.hpp are written against this surface.
//
// Span kinds:
//  * LeftRSpan: S is a free left R-module on homogeneous basis elements that
//    commute with R. coords() gives the coefficients on that basis and
//    basis_terms() splits an element into (coefficient, basis element).
//    Spans are computed by linear solves over R.
//  * AdditiveClosure: every component is finite and spanning_set() lists all
//    of it. Spans are additive closures, found by enumeration.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gral/cornerlaurent.hpp"
#include "gral/pathalg.hpp"

namespace gral {

enum class SpanKind { LeftRSpan, AdditiveClosure };

/// Degrees outside [first, second] are zero; nullopt when unbounded. An empty
/// range (first > second) means the ring is zero.
using DegreeSupport = std::optional<std::pair<int, int>>;

template <class E>
using Factorization = std::vector<std::pair<E, E>>;

/// Default hooks; oracles override the ones they can answer.
template <class E>
struct OracleHooks {
  std::optional<Factorization<E>> left_unit(const E&) const { return std::nullopt; }
  std::optional<Factorization<E>> right_unit(const E&) const { return std::nullopt; }
  std::optional<std::pair<E, Factorization<E>>> epsilon(int) const { return std::nullopt; }
  std::optional<std::string> strong_obstruction() const { return std::nullopt; }
};

/// Path algebra (Leavitt or relative Cohn) of a finite graph.
class PathAlgebraOracle : public OracleHooks<AlgebraElement> {
 public:
  using Element = AlgebraElement;
  explicit PathAlgebraOracle(SpecPtr spec);

  std::string name() const;
  const Ring& ring() const { return spec_->ring(); }
  SpanKind span_kind() const { return SpanKind::LeftRSpan; }
  std::vector<Element> spanning_set(int degree, std::size_t bound) const;
  bool component_complete(int degree, std::size_t bound) const;
  DegreeSupport support() const;
  bool generated_in_degree_one() const { return true; }
  std::optional<Element> identity() const { return AlgebraElement::identity(spec_); }

  Element zero() const { return AlgebraElement(spec_); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element scale(Elem r, const Element& a) const { return a.scaled(r); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::optional<int> degree(const Element& a) const { return a.degree(); }
  std::string format(const Element& a) const { return a.format(); }
  std::map<std::string, Elem> coords(const Element& a) const;
  std::vector<std::pair<Elem, Element>> basis_terms(const Element& a) const;

  std::optional<Factorization<Element>> left_unit(const Element& s) const;
  std::optional<Factorization<Element>> right_unit(const Element& s) const;
  std::optional<std::pair<Element, Factorization<Element>>> epsilon(int d) const;
  /// A sink w gives w (S_1 S_{-1}) = 0 while w 1 = w.
  std::optional<std::string> strong_obstruction() const;

  const SpecPtr& spec() const { return spec_; }

 private:
  SpecPtr spec_;
};

/// M_2(R) with e_12 in degree 1, e_21 in degree -1 and the diagonal in degree 0.
class MatrixGradingOracle : public OracleHooks<Matrix> {
 public:
  using Element = Matrix;
  explicit MatrixGradingOracle(Ring ring) : ring_(std::move(ring)) {}

  std::string name() const { return "M_2(" + ring_.describe() + ") matrix grading"; }
  const Ring& ring() const { return ring_; }
  SpanKind span_kind() const { return SpanKind::LeftRSpan; }
  std::vector<Element> spanning_set(int degree, std::size_t bound) const;
  bool component_complete(int, std::size_t) const { return true; }
  DegreeSupport support() const { return std::make_pair(-1, 1); }
  bool generated_in_degree_one() const { return true; }
  std::optional<Element> identity() const { return Matrix::identity(ring_, 2); }

  Element zero() const { return Matrix(ring_, 2, 2); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return zero() - a; }
  Element scale(Elem r, const Element& a) const { return a.scaled(r); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::optional<int> degree(const Element& a) const;
  std::string format(const Element& a) const { return a.format(); }
  std::map<std::string, Elem> coords(const Element& a) const;
  std::vector<std::pair<Elem, Element>> basis_terms(const Element& a) const;

  Element unit(std::size_t i, std::size_t j) const;

 private:
  Ring ring_;
};

/// R[x]/(x^{top+1}) with x in degree 1; negative components are zero.
class TruncatedPolynomialOracle : public OracleHooks<std::vector<Elem>> {
 public:
  using Element = std::vector<Elem>;  // coefficients of x^0 .. x^top
  TruncatedPolynomialOracle(Ring ring, std::size_t top) : ring_(std::move(ring)), top_(top) {}

  std::string name() const;
  const Ring& ring() const { return ring_; }
  SpanKind span_kind() const { return SpanKind::LeftRSpan; }
  std::vector<Element> spanning_set(int degree, std::size_t bound) const;
  bool component_complete(int, std::size_t) const { return true; }
  DegreeSupport support() const { return std::make_pair(0, static_cast<int>(top_)); }
  bool generated_in_degree_one() const { return true; }
  std::optional<Element> identity() const { return monomial(0, ring_.one()); }

  Element zero() const { return Element(top_ + 1, ring_.zero()); }
  Element add(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element scale(Elem r, const Element& a) const;
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::optional<int> degree(const Element& a) const;
  std::string format(const Element& a) const;
  std::map<std::string, Elem> coords(const Element& a) const;
  std::vector<std::pair<Elem, Element>> basis_terms(const Element& a) const;

  Element monomial(std::size_t k, Elem c) const;

 private:
  Ring ring_;
  std::size_t top_;
};

/// The direct sum of countably many copies of R with the trivial grading:
/// s-unital (u_1 + ... + u_k absorbs anything supported on 1..k) but not
/// unital. Spanning set of S_0 at bound b is {u_1, ..., u_b}.
class LocalUnitsSumOracle : public OracleHooks<std::map<std::size_t, Elem>> {
 public:
  using Element = std::map<std::size_t, Elem>;  // index >= 1 -> nonzero coeff
  explicit LocalUnitsSumOracle(Ring ring) : ring_(std::move(ring)) {}

  std::string name() const { return "direct sum of copies of " + ring_.describe() + ", trivial grading"; }
  const Ring& ring() const { return ring_; }
  SpanKind span_kind() const { return SpanKind::LeftRSpan; }
  std::vector<Element> spanning_set(int degree, std::size_t bound) const;
  bool component_complete(int degree, std::size_t) const { return degree != 0; }
  DegreeSupport support() const { return std::make_pair(0, 0); }
  bool generated_in_degree_one() const { return false; }
  std::optional<Element> identity() const { return std::nullopt; }

  Element zero() const { return {}; }
  Element add(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element scale(Elem r, const Element& a) const;
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::optional<int> degree(const Element& a) const;
  std::string format(const Element& a) const;
  std::map<std::string, Elem> coords(const Element& a) const;
  std::vector<std::pair<Elem, Element>> basis_terms(const Element& a) const;

 private:
  Ring ring_;
};

/// Any finite ring with everything in degree 0.
class TrivialGradingOracle : public OracleHooks<Elem> {
 public:
  using Element = Elem;
  explicit TrivialGradingOracle(Ring ring) : ring_(std::move(ring)) {}

  std::string name() const { return ring_.describe() + ", trivial grading"; }
  const Ring& ring() const { return ring_; }
  SpanKind span_kind() const { return SpanKind::AdditiveClosure; }
  std::vector<Element> spanning_set(int degree, std::size_t bound) const;
  bool component_complete(int, std::size_t) const { return true; }
  DegreeSupport support() const { return std::make_pair(0, 0); }
  bool generated_in_degree_one() const { return true; }
  std::optional<Element> identity() const { return ring_.one(); }

  Element zero() const { return ring_.zero(); }
  Element add(Element a, Element b) const { return ring_.add(a, b); }
  Element mul(Element a, Element b) const { return ring_.mul(a, b); }
  Element neg(Element a) const { return ring_.neg(a); }
  Element scale(Elem r, Element a) const { return ring_.mul(r, a); }
  bool equal(Element a, Element b) const { return a == b; }
  std::optional<int> degree(Element a) const;
  std::string format(Element a) const { return ring_.format(a); }
  std::map<std::string, Elem> coords(Element a) const { return {{"1", a}}; }
  std::vector<std::pair<Elem, Element>> basis_terms(Element a) const { return {{a, ring_.one()}}; }

 private:
  Ring ring_;
};

/// Corner skew Laurent ring; components are finite and listed in full.
class CornerOracle : public OracleHooks<CslElement> {
 public:
  using Element = CslElement;
  explicit CornerOracle(CornerPtr ring) : ring_(std::move(ring)) {}

  std::string name() const { return ring_->describe(); }
  const Ring& ring() const { return ring_->ring(); }
  SpanKind span_kind() const { return SpanKind::AdditiveClosure; }
  std::vector<Element> spanning_set(int degree, std::size_t bound) const;
  bool component_complete(int, std::size_t) const { return true; }
  DegreeSupport support() const { return std::nullopt; }
  bool generated_in_degree_one() const { return true; }
  std::optional<Element> identity() const { return CslElement::one(ring_); }

  Element zero() const { return CslElement(ring_); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element scale(Elem r, const Element& a) const { return CslElement::term(ring_, 0, r) * a; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::optional<int> degree(const Element& a) const { return a.degree(); }
  std::string format(const Element& a) const { return a.format(); }
  std::map<std::string, Elem> coords(const Element& a) const;
  std::vector<std::pair<Elem, Element>> basis_terms(const Element& a) const;

  std::optional<std::pair<Element, Factorization<Element>>> epsilon(int d) const;

 private:
  CornerPtr ring_;
};

struct PathEpsilon {
  AlgebraElement value;
  Factorization<AlgebraElement> factors;
};

/// The epsilon element of degree n of a Leavitt path algebra of a finite
/// graph. For n >= 0 it is the sum of pp* over paths of length n; for n < 0 it
/// is the sum of qq* over the prefix-minimal paths q whose range receives a
/// path of length |q| + |n|. Checks epsilon s = s on degree-n spanning
/// monomials and s epsilon = s on degree -n ones up to `bound`; raises
/// AssertionFailure with the failing monomial.
PathEpsilon epsilon_element(const SpecPtr& spec, int n, std::size_t bound = 3);

}  // namespace gral
