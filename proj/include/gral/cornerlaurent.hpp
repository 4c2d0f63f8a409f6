#pragma once

// Corner skew Laurent rings R[t+, t-; alpha] for a corner isomorphism
// alpha : R -> eRe, presented by
//   t- t+ = 1,   t+ t- = e,   t+ r = alpha(r) t+,   r t- = t- alpha(r).
// Elements are sums  sum_i t-^i a_{-i} + a_0 + sum_i a_i t+^i  with
// a_i = a_i e_i and a_{-i} = e_i a_{-i}, where e_0 = 1, e_{i+1} = alpha(e_i).

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gral/coeffring.hpp"

namespace gral {

class CornerRing {
 public:
  /// alpha[i] is the image of element i. Throws NotIdempotent or
  /// NotCornerIso.
  CornerRing(Ring ring, Elem e, std::vector<Elem> alpha);

  const Ring& ring() const { return ring_; }
  Elem e() const { return e_; }
  Elem alpha(Elem r) const { return alpha_[index(r)]; }
  Elem alpha_pow(Elem r, std::size_t k) const;
  /// r -> alpha^{-1}(e r e), i.e. t- r t+.
  Elem pull(Elem r) const;
  Elem pull_pow(Elem r, std::size_t k) const;
  /// e_i = t+^i t-^i.
  Elem e_at(std::size_t i) const;

  std::string describe() const;

 private:
  Ring ring_;
  Elem e_;
  std::vector<Elem> alpha_;
  std::vector<Elem> inverse_;  // on eRe; zero elsewhere
};

using CornerPtr = std::shared_ptr<const CornerRing>;

class CslElement {
 public:
  explicit CslElement(CornerPtr ring);
  /// a t+^d (d > 0), a (d = 0), or t-^{-d} a (d < 0), normalized.
  static CslElement term(const CornerPtr& ring, int degree, Elem a);
  static CslElement one(const CornerPtr& ring);
  static CslElement t_plus(const CornerPtr& ring) { return term(ring, 1, ring->ring().one()); }
  static CslElement t_minus(const CornerPtr& ring) { return term(ring, -1, ring->ring().one()); }

  const CornerPtr& corner() const { return ring_; }
  const std::map<int, Elem>& coeffs() const { return coeffs_; }
  Elem coeff(int degree) const;
  bool is_zero() const { return coeffs_.empty(); }
  std::optional<int> degree() const;

  CslElement operator+(const CslElement& o) const;
  CslElement operator-(const CslElement& o) const;
  CslElement operator-() const;
  CslElement operator*(const CslElement& o) const;
  bool operator==(const CslElement& o) const { return ring_ == o.ring_ && coeffs_ == o.coeffs_; }
  bool operator<(const CslElement& o) const { return coeffs_ < o.coeffs_; }

  /// e.g. "t-^2 3 + 1 + 2 t+".
  std::string format() const;

 private:
  void add_term(int degree, Elem a);

  CornerPtr ring_;
  std::map<int, Elem> coeffs_;
};

CornerPtr csl_make(Ring ring, Elem e, std::vector<Elem> alpha);

/// All elements of the degree-d component.
std::vector<CslElement> csl_component(const CornerPtr& ring, int degree);

struct CslEpsilon {
  CslElement value;
  std::vector<std::pair<CslElement, CslElement>> factors;
};

/// e_n for n > 0 and 1 otherwise, with a factorization through S_n S_{-n};
/// checks epsilon s = s on S_n and s epsilon = s on S_{-n} (AssertionFailure).
CslEpsilon csl_epsilon(const CornerPtr& ring, int n);

struct CslWitness {
  CslElement element;
  int degree = 0;
  std::optional<CslElement> witness;
  bool exact = true;
  std::string absence;

  std::string format() const;
};

/// Exact search for b in S_{-d} with x = x b x.
CslWitness csl_graded_witness(const CslElement& x, std::size_t cap = default_search_cap());

}  // namespace gral
