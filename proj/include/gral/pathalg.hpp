#pragma once

// Relative Cohn path algebras C_R^X(E); the Leavitt path algebra is the case
// X = Reg(E). Elements are kept as R-combinations of reduced monomials
// alpha beta*, where "reduced" means alpha and beta do not both end in the
// special (least-named) edge of an X-vertex.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gral/coeffring.hpp"
#include "gral/graph.hpp"

namespace gral {

class AlgebraSpec {
 public:
  /// Throws XNotRegular unless x is a subset of Reg(graph).
  AlgebraSpec(Graph graph, std::vector<VertexId> x, Ring ring);

  static std::shared_ptr<const AlgebraSpec> leavitt(Graph graph, Ring ring);
  static std::shared_ptr<const AlgebraSpec> cohn(Graph graph, std::vector<VertexId> x, Ring ring);

  const Graph& graph() const { return graph_; }
  const Ring& ring() const { return ring_; }
  const std::vector<VertexId>& x() const { return x_; }
  bool in_x(VertexId v) const { return in_x_[v] != 0; }
  bool is_leavitt() const { return leavitt_; }
  bool is_null() const { return graph_.empty(); }
  /// Least edge of s^{-1}(v) for v in X.
  std::optional<EdgeId> special_edge(VertexId v) const;
  /// True when the edge is the special edge of an X-vertex, i.e. monomials
  /// ending in f f* are rewritten by relation (v).
  bool is_special(EdgeId f) const { return special_[f] != 0; }

  std::string describe() const;

 private:
  Graph graph_;
  std::vector<VertexId> x_;
  std::vector<char> in_x_;
  std::vector<char> special_;
  Ring ring_;
  bool leavitt_ = false;
};

using SpecPtr = std::shared_ptr<const AlgebraSpec>;

struct Monomial {
  Path alpha;
  Path beta;

  int degree() const {
    return static_cast<int>(alpha.length()) - static_cast<int>(beta.length());
  }

  /// Ordered by (degree, alpha, beta).
  std::strong_ordering operator<=>(const Monomial& o) const {
    if (auto c = degree() <=> o.degree(); c != 0) return c;
    if (auto c = alpha <=> o.alpha; c != 0) return c;
    return beta <=> o.beta;
  }
  bool operator==(const Monomial& o) const = default;
};

bool is_reduced(const AlgebraSpec& spec, const Monomial& m);

class AlgebraElement {
 public:
  using Terms = std::map<Monomial, Elem>;

  explicit AlgebraElement(SpecPtr spec);

  static AlgebraElement vertex(const SpecPtr& spec, VertexId v);
  static AlgebraElement edge(const SpecPtr& spec, EdgeId e);
  static AlgebraElement ghost(const SpecPtr& spec, EdgeId e);
  /// coeff * alpha beta*, reduced. Requires r(alpha) = r(beta).
  static AlgebraElement monomial(const SpecPtr& spec, const Path& alpha, const Path& beta,
                                 Elem coeff);
  /// sum of all vertices: the identity for finite graphs (0 for the null graph).
  static AlgebraElement identity(const SpecPtr& spec);

  const SpecPtr& spec() const { return spec_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds coeff * alpha beta* and rewrites to reduced form.
  void add_term(const Path& alpha, const Path& beta, Elem coeff);

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator-() const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  /// r * x (left scalar action).
  AlgebraElement scaled(Elem r) const;
  /// x * r.
  AlgebraElement scaled_right(Elem r) const;

  /// (alpha beta*)* = beta alpha*, coefficients preserved.
  AlgebraElement involution() const;

  std::map<int, AlgebraElement> homogeneous_components() const;
  bool is_homogeneous() const;
  /// Degree of a nonzero homogeneous element.
  std::optional<int> degree() const;

  bool operator==(const AlgebraElement& o) const;

  /// Terms sorted by (degree, alpha, beta), e.g. "2*e.f(f)* + v".
  std::string format() const;

 private:
  void check_same(const AlgebraElement& o) const;

  SpecPtr spec_;
  Terms terms_;
};

/// Product of two monomials with coefficient 1, as a reduced element.
AlgebraElement monomial_product(const SpecPtr& spec, const Monomial& a, const Monomial& b);

/// Reduced monomials with real and ghost length at most max_len, optionally
/// restricted to one degree; sorted.
std::vector<Monomial> reduced_monomials(const AlgebraSpec& spec, std::size_t max_len,
                                        std::optional<int> degree = std::nullopt);

/// Least n with x in D_n. Requires x homogeneous of degree 0 (or zero).
std::size_t filtration_level(const AlgebraElement& x);

std::string format_monomial(const Graph& g, const Monomial& m);

// ---------------------------------------------------------------------------
// Word-level rewriting of raw sums of generator words.

struct Letter {
  enum class Kind : std::uint8_t { Vertex, Real, Ghost };
  Kind kind;
  std::uint32_t id;

  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

struct RawTerm {
  Elem coeff;
  Word word;
};

/// Parses space-separated generator tokens such as "e f* v".
Word parse_word(const AlgebraSpec& spec, const std::string& text);
std::string format_word(const AlgebraSpec& spec, const Word& w);

enum class Strategy { LeftmostInnermost, Randomized };

/// Applies relations (i)-(v) to a fixed point, then reads off monomials.
AlgebraElement normal_form(const SpecPtr& spec, const std::vector<RawTerm>& raw,
                           Strategy strategy = Strategy::LeftmostInnermost,
                           std::uint64_t seed = 0);

}  // namespace gral
