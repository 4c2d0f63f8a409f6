#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gral/gradedstruct.hpp"
#include "gral/oracles.hpp"
#include "gral/regularity.hpp"
#include "support.hpp"

using namespace gral;
using namespace fixtures;

namespace {

SpecPtr leavitt(const Graph& g, std::uint32_t n) { return AlgebraSpec::leavitt(g, Ring::modular(n)); }

AlgebraElement mono(const SpecPtr& s, const Monomial& m) {
  return AlgebraElement::monomial(s, m.alpha, m.beta, s->ring().one());
}

Verdict at(const PropertyVerdict& pv, int degree) {
  for (const auto& d : pv.degrees)
    if (d.degree == degree) return d.verdict;
  FAIL("no verdict for degree " << degree);
  return Verdict::Refused;
}

CornerPtr laurent(std::uint32_t n) {
  const Ring R = Ring::modular(n);
  std::vector<Elem> id;
  for (Elem a : R.elements()) id.push_back(a);
  return csl_make(R, R.one(), id);
}

template <class O>
void check_chain(const O& o) {
  const auto r = classify(o);
  std::string why;
  CHECK_MESSAGE(chain_consistent(r, &why), r.ring << ": " << why);
}

}  // namespace

TEST_CASE("verdict names") {
  CHECK(to_string(Verdict::HoldsExactly) != to_string(Verdict::HoldsAtBound));
  CHECK(to_string(Verdict::Fails) != to_string(Verdict::NotFoundAtBound));
}

TEST_CASE("check_symmetric examples") {
  CHECK(check_symmetric(PathAlgebraOracle(leavitt(a1(), 4))).verdict == Verdict::HoldsExactly);
  const auto t = check_symmetric(TruncatedPolynomialOracle(Ring::modular(2), 3));
  CHECK(t.fails());
  CHECK(at(t, 2) == Verdict::Fails);
  CHECK(check_symmetric(PathAlgebraOracle(leavitt(loop(), 2))).verdict == Verdict::HoldsAtBound);
}

TEST_CASE("epsilon_element examples") {
  const auto L = leavitt(v_to_w(), 2);
  const auto f = AlgebraElement::edge(L, 0);
  CHECK(epsilon_element(L, 1).value == f * f.involution());
  CHECK(epsilon_element(leavitt(a1(), 2), 1).value.is_zero());
  const auto Lp = leavitt(loop(), 2);
  const auto e = AlgebraElement::edge(Lp, 0);
  CHECK(epsilon_element(Lp, 2).value == (e * e) * (e * e).involution());
  CHECK(epsilon_element(Lp, 0).value == AlgebraElement::identity(Lp));
}

TEST_CASE("epsilon elements satisfy both unit relations on every graph") {
  for (const auto& [name, g] : six_graphs()) {
    CAPTURE(name);
    for (std::uint32_t n : {2u, 6u}) {
      const auto L = leavitt(g, n);
      for (int d = -3; d <= 3; ++d) {
        const auto eps = epsilon_element(L, d);
        const auto inv = epsilon_element(L, -d);
        AlgebraElement sum(L);
        for (const auto& [a, b] : eps.factors) {
          sum += a * b;
          if (!a.is_zero()) CHECK(a.degree() == d);
          if (!b.is_zero()) CHECK(b.degree() == -d);
        }
        CHECK(sum == eps.value);
        for (const auto& m : reduced_monomials(*L, 3, d)) {
          const auto s = mono(L, m);
          CHECK(eps.value * s == s);
          CHECK(s * inv.value == s);
        }
      }
    }
  }
}

TEST_CASE("check_strong examples and the no-sinks criterion") {
  for (const auto& [name, g] : six_graphs()) {
    CAPTURE(name);
    const bool no_sinks = vertex_classify(g).sinks.empty();
    const auto v = check_strong(PathAlgebraOracle(leavitt(g, 2)));
    CHECK(v.holds() == no_sinks);
    CHECK(v.fails() == !no_sinks);
    CHECK(v.note == (no_sinks ? "graph has no sinks" : "graph has a sink"));
  }
  CHECK(check_strong(CornerOracle(laurent(2))).holds());
  CHECK(check_strong(LocalUnitsSumOracle(Ring::modular(2))).verdict == Verdict::Refused);
}

TEST_CASE("matrix grading reproduces the epsilon table") {
  const MatrixGradingOracle o(Ring::modular(2));
  const auto r = check_epsilon_strong(o);
  CHECK(r.verdict.verdict == Verdict::HoldsExactly);
  CHECK(r.table.at(1) == o.format(o.unit(0, 0)));
  CHECK(r.table.at(-1) == o.format(o.unit(1, 1)));
  CHECK(r.table.at(0) == o.format(*o.identity()));
  for (int d : {-3, -2, 2, 3}) CHECK(r.table.at(d) == o.format(o.zero()));
  // (M_2)_1 (M_2)_{-1} is the upper-left corner.
  CHECK(o.unit(0, 1) * o.unit(1, 0) == o.unit(0, 0));
  CHECK(o.unit(1, 0) * o.unit(0, 1) == o.unit(1, 1));
}

TEST_CASE("check_epsilon_strong examples") {
  const auto L = leavitt(v_to_w(), 2);
  const auto r = check_epsilon_strong(PathAlgebraOracle(L));
  CHECK(r.verdict.holds());
  CHECK(r.table.at(1) == epsilon_element(L, 1).value.format());
  const auto s = check_epsilon_strong(LocalUnitsSumOracle(Ring::modular(2)));
  CHECK(s.verdict.fails());
  CHECK_FALSE(s.verdict.witness.empty());
}

TEST_CASE("check_nearly_epsilon examples") {
  for (const auto& [name, g] : six_graphs())
    for (std::uint32_t n : {2u, 4u}) {
      CAPTURE(name);
      CHECK(check_nearly_epsilon(PathAlgebraOracle(leavitt(g, n))).holds());
    }
  CHECK(check_nearly_epsilon(CornerOracle(laurent(6))).holds());
  CHECK(check_nearly_epsilon(MatrixGradingOracle(Ring::modular(6))).holds());
  const auto t = check_nearly_epsilon(TruncatedPolynomialOracle(Ring::modular(2), 3));
  CHECK(t.fails());
  CHECK(at(t, 1) == Verdict::Fails);
  CHECK(check_nearly_epsilon(LocalUnitsSumOracle(Ring::modular(2))).holds());
}

TEST_CASE("classification reports never contradict the implication chain") {
  for (const auto& [name, g] : six_graphs())
    for (std::uint32_t n : {2u, 4u, 6u}) check_chain(PathAlgebraOracle(leavitt(g, n)));
  check_chain(PathAlgebraOracle(AlgebraSpec::cohn(v_to_w(), {}, Ring::modular(2))));
  check_chain(PathAlgebraOracle(AlgebraSpec::cohn(loop(), {}, Ring::modular(2))));
  for (std::uint32_t n : {2u, 4u}) {
    check_chain(MatrixGradingOracle(Ring::modular(n)));
    check_chain(TruncatedPolynomialOracle(Ring::modular(n), 3));
    check_chain(LocalUnitsSumOracle(Ring::modular(n)));
    check_chain(TrivialGradingOracle(Ring::modular(n)));
    check_chain(CornerOracle(laurent(n)));
  }
}

TEST_CASE("chain_consistent flags a contradicted implication") {
  ClassificationReport r;
  r.strong.verdict = Verdict::HoldsExactly;
  r.epsilon.verdict = Verdict::Fails;
  r.nearly.verdict = Verdict::HoldsExactly;
  r.symmetric.verdict = Verdict::HoldsExactly;
  std::string why;
  CHECK_FALSE(chain_consistent(r, &why));
  CHECK_FALSE(why.empty());
  r.epsilon.verdict = Verdict::HoldsAtBound;
  CHECK(chain_consistent(r));
}

TEST_CASE("symmetric but not graded regular") {
  const auto L = leavitt(a1(), 4);
  CHECK(check_symmetric(PathAlgebraOracle(L)).verdict == Verdict::HoldsExactly);
  VerdictOptions opts;
  opts.samples = 5;
  CHECK(graded_vnr_verdict(L, opts).verdict == RegularityVerdict::Counterexample);
}

TEST_CASE("graded regularity matches nearly epsilon-strong plus regular coefficients") {
  VerdictOptions opts;
  opts.samples = 10;
  for (const Graph& g : {a1(), v_to_w(), loop()})
    for (std::uint32_t n : {2u, 4u, 6u}) {
      const auto L = leavitt(g, n);
      const bool expected = check_nearly_epsilon(PathAlgebraOracle(L)).holds() && is_vnr(L->ring()).regular;
      CHECK((graded_vnr_verdict(L, opts).verdict == RegularityVerdict::VerifiedAtBounds) == expected);
    }
}

TEST_CASE("homogeneous_local_units examples") {
  const auto L = leavitt(v_to_w(), 2);
  const auto r = homogeneous_local_units(L);
  CHECK(r.verified);
  REQUIRE(r.units.size() == 2);
  CHECK(r.units[0] == AlgebraElement::vertex(L, L->graph().vertex("v")));
  CHECK(r.units[1] == AlgebraElement::vertex(L, L->graph().vertex("w")));
  CHECK(r.sum == AlgebraElement::identity(L));
  CHECK(homogeneous_local_units(leavitt(a1(), 2)).units.size() == 1);
  const auto N = homogeneous_local_units(leavitt(Graph({}, {}), 2));
  CHECK(N.units.empty());
  CHECK(N.sum.is_zero());
}

TEST_CASE("jacobson_radical_algebra examples") {
  const auto z2 = jacobson_radical_algebra(leavitt(a1(), 2));
  REQUIRE(z2.elements.size() == 1);
  CHECK(z2.elements[0].is_zero());

  const auto L4 = leavitt(a1(), 4);
  const auto z4 = jacobson_radical_algebra(L4);
  const auto two_v = AlgebraElement::vertex(L4, 0).scaled(elem(2));
  REQUIRE(z4.elements.size() == 2);
  CHECK(z4.elements[1] == two_v);
  REQUIRE(z4.generators.size() == 1);
  CHECK(z4.generators[0] == two_v);
}

TEST_CASE("regular coefficients and local units give a zero radical") {
  for (const Graph& g : {a1(), v_to_w()})
    for (std::uint32_t n : {2u, 3u, 6u}) {
      const auto L = leavitt(g, n);
      REQUIRE(homogeneous_local_units(L).verified);
      const auto j = jacobson_radical_algebra(L, 10'000'000);
      REQUIRE(j.elements.size() == 1);
      CHECK(j.elements[0].is_zero());
    }
  const auto j = jacobson_radical_algebra(leavitt(v_to_w(), 4), 10'000'000);
  CHECK(j.elements.size() > 1);
  for (const auto& x : j.generators) CHECK(x.is_homogeneous());
}

TEST_CASE("jacobson_radical_algebra refuses cyclic graphs") {
  CHECK_THROWS_AS(jacobson_radical_algebra(leavitt(loop(), 2)), PreconditionViolation);
}

TEST_CASE("is_semiprime_graded examples") {
  const auto z4 = is_semiprime_graded(PathAlgebraOracle(leavitt(a1(), 4)));
  CHECK(z4.fails());
  CHECK(z4.witness == "2 v");
  CHECK(is_semiprime_graded(PathAlgebraOracle(leavitt(v_to_w(), 6))).holds());
  for (const auto& [name, g] : six_graphs())
    for (std::uint32_t n : {2u, 3u, 6u}) {
      CAPTURE(name);
      CHECK(is_semiprime_graded(PathAlgebraOracle(leavitt(g, n))).holds());
    }
  CHECK(is_semiprime_graded(TruncatedPolynomialOracle(Ring::modular(2), 3)).fails());
}

TEST_CASE("report format has one line per property and degree") {
  const auto r = classify(PathAlgebraOracle(leavitt(v_to_w(), 2)));
  const auto text = r.format();
  CHECK(text.find("strong") != std::string::npos);
  CHECK(text.find("symmetric") != std::string::npos);
  CHECK(text == classify(PathAlgebraOracle(leavitt(v_to_w(), 2))).format());
}
