#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "gral/coeffring.hpp"
#include "gral/linsolve.hpp"

using namespace gral;

namespace {

// All assignments of k variables, by brute force.
bool brute_solvable(const Ring& R, const LinearSystem& sys) {
  std::vector<Elem> a(sys.num_vars, R.zero());
  const auto els = R.elements();
  std::vector<std::size_t> idx(sys.num_vars, 0);
  while (true) {
    for (std::size_t i = 0; i < idx.size(); ++i) a[i] = els[idx[i]];
    if (satisfies(R, sys, a)) return true;
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == els.size()) idx[i++] = 0;
    if (i == idx.size()) return false;
  }
}

Ring f4() {
  // GF(4) = {0, 1, a, a+1} with a^2 = a + 1, as explicit tables.
  std::vector<std::vector<std::uint32_t>> add(4, std::vector<std::uint32_t>(4)), mul = add;
  for (std::uint32_t i = 0; i < 4; ++i)
    for (std::uint32_t j = 0; j < 4; ++j) add[i][j] = i ^ j;
  const std::uint32_t m[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  for (std::uint32_t i = 0; i < 4; ++i)
    for (std::uint32_t j = 0; j < 4; ++j) mul[i][j] = m[i][j];
  return Ring(RingSpec::table(4, 0, 1, add, mul));
}

}  // namespace

TEST_CASE("ring construction") {
  const Ring z4 = Ring::modular(4);
  CHECK(z4.order() == 4);
  CHECK(z4.elements().size() == 4);
  const Ring p = Ring(RingSpec::product({RingSpec::modular(2), RingSpec::modular(3)}));
  CHECK(p.order() == 6);
  CHECK(p.crt_decomposable());
  CHECK(f4().order() == 4);
}

TEST_CASE("table rings are validated") {
  std::vector<std::vector<std::uint32_t>> add{{0, 1}, {1, 0}};
  std::vector<std::vector<std::uint32_t>> mul{{0, 0}, {0, 1}};
  CHECK_NOTHROW(Ring(RingSpec::table(2, 0, 1, add, mul)));
  // 2*2 = 2 over addition mod 3 breaks distributivity: 2*(1+1) = 2, 2+2 = 1.
  std::vector<std::vector<std::uint32_t>> add3{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<std::uint32_t>> bad{{0, 0, 0}, {0, 1, 2}, {0, 2, 2}};
  CHECK_THROWS_AS(Ring(RingSpec::table(3, 0, 1, add3, bad)), AxiomViolation);
  // Bilinear over F_2 on basis {1, a, b} with a*a = b, a*b = 0, b*a = 1,
  // b*b = 0: distributive and unital but (a*a)*a = 1 while a*(a*a) = 0.
  const std::uint32_t basis[3][3] = {{1, 2, 4}, {2, 4, 0}, {4, 1, 0}};
  std::vector<std::vector<std::uint32_t>> add8(8, std::vector<std::uint32_t>(8)), nonassoc = add8;
  for (std::uint32_t i = 0; i < 8; ++i)
    for (std::uint32_t j = 0; j < 8; ++j) {
      add8[i][j] = i ^ j;
      std::uint32_t m = 0;
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
          if ((i >> p & 1) && (j >> q & 1)) m ^= basis[p][q];
      nonassoc[i][j] = m;
    }
  try {
    Ring(RingSpec::table(8, 0, 1, add8, nonassoc));
    FAIL("accepted a table that is not a ring");
  } catch (const AxiomViolation& e) {
    CHECK(e.axiom() == "mul associative");
    CHECK_FALSE(e.witness().empty());
  }
}

TEST_CASE("arithmetic agrees with integer arithmetic mod n") {
  for (std::uint32_t n : {2u, 3u, 4u, 6u, 12u}) {
    const Ring R = Ring::modular(n);
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        CHECK(index(R.add(elem(a), elem(b))) == (a + b) % n);
        CHECK(index(R.mul(elem(a), elem(b))) == (a * b) % n);
        CHECK(index(R.sub(elem(a), elem(b))) == (a + n - b) % n);
      }
  }
}

TEST_CASE("product ring arithmetic is componentwise") {
  const Ring P(RingSpec::product({RingSpec::modular(2), RingSpec::modular(4)}));
  for (Elem a : P.elements())
    for (Elem b : P.elements()) {
      const auto sa = P.split(a), sb = P.split(b), sm = P.split(P.mul(a, b));
      CHECK(index(sm[0]) == index(sa[0]) * index(sb[0]) % 2);
      CHECK(index(sm[1]) == index(sa[1]) * index(sb[1]) % 4);
    }
}

TEST_CASE("vnr_witness examples") {
  CHECK(vnr_witness(Ring::modular(2), elem(1)) == elem(1));
  CHECK(vnr_witness(Ring::modular(6), elem(2)) == elem(2));
  CHECK_FALSE(vnr_witness(Ring::modular(4), elem(2)).has_value());
}

TEST_CASE("is_vnr examples and product law") {
  CHECK(is_vnr(Ring::modular(5)).regular);
  CHECK(is_vnr(Ring::modular(6)).regular);
  const auto z4 = is_vnr(Ring::modular(4));
  CHECK_FALSE(z4.regular);
  CHECK(z4.counterexample == elem(2));
  CHECK(is_vnr(f4()).regular);
  const Ring P(RingSpec::product({RingSpec::modular(2), RingSpec::modular(4)}));
  CHECK(is_vnr(P).regular == (is_vnr(Ring::modular(2)).regular && is_vnr(Ring::modular(4)).regular));
  CHECK_FALSE(is_vnr(P).regular);
}

TEST_CASE("every returned witness satisfies a = a y a") {
  for (std::uint32_t n : {2u, 3u, 5u, 6u, 10u}) {
    const Ring R = Ring::modular(n);
    const auto v = is_vnr(R);
    REQUIRE(v.regular);
    for (Elem a : R.elements()) CHECK(R.mul(R.mul(a, v.witnesses[index(a)]), a) == a);
  }
}

TEST_CASE("solve_linear_system examples") {
  const Ring z4 = Ring::modular(4);
  LinearSystem s1{1, {{{{z4.one(), 0, elem(2)}}, elem(2)}}};
  const auto x = solve_linear_system(z4, s1);
  REQUIRE(x);
  CHECK((*x)[0] == elem(1));

  const Ring z6 = Ring::modular(6);
  LinearSystem s2{1, {{{{z6.one(), 0, elem(3)}}, elem(1)}}};
  CHECK_FALSE(solve_linear_system(z6, s2).has_value());

  const Ring z2 = Ring::modular(2);
  LinearSystem s3{2, {{{{z2.one(), 0, z2.one()}, {z2.one(), 1, z2.one()}}, z2.one()},
                      {{{z2.one(), 0, z2.one()}}, z2.one()}}};
  const auto y = solve_linear_system(z2, s3);
  REQUIRE(y);
  CHECK((*y)[0] == elem(1));
  CHECK((*y)[1] == elem(0));
}

TEST_CASE("solver agrees with exhaustive search on small rings") {
  std::mt19937_64 rng(7);
  std::vector<Ring> rings{Ring::modular(2), Ring::modular(4), Ring::modular(6), Ring::modular(8),
                          Ring(RingSpec::product({RingSpec::modular(2), RingSpec::modular(4)})), f4()};
  for (const Ring& R : rings) {
    const auto els = R.elements();
    auto pick = [&] { return els[rng() % els.size()]; };
    for (int trial = 0; trial < 150; ++trial) {
      LinearSystem sys;
      sys.num_vars = 1 + rng() % 3;
      const std::size_t eqs = 1 + rng() % 3;
      for (std::size_t e = 0; e < eqs; ++e) {
        LinearEquation eq;
        for (std::size_t v = 0; v < sys.num_vars; ++v)
          if (rng() % 3) eq.terms.push_back({pick(), v, pick()});
        eq.rhs = pick();
        sys.equations.push_back(eq);
      }
      const auto sol = solve_linear_system(R, sys);
      CHECK(sol.has_value() == brute_solvable(R, sys));
      if (sol) CHECK(satisfies(R, sys, *sol));
    }
  }
}

TEST_CASE("matrix_vnr_witness") {
  const Ring z2 = Ring::modular(2);
  Matrix a(z2, 2, 2);
  a.at(0, 0) = z2.one();
  const auto y = matrix_vnr_witness(a);
  REQUIRE(y);
  CHECK(a * *y * a == a);

  Matrix two6(Ring::modular(6), 1, 1);
  two6.at(0, 0) = elem(2);
  const auto w = matrix_vnr_witness(two6);
  REQUIRE(w);
  CHECK(w->at(0, 0) == elem(2));

  Matrix two4(Ring::modular(4), 1, 1);
  two4.at(0, 0) = elem(2);
  CHECK_FALSE(matrix_vnr_witness(two4).has_value());
}

TEST_CASE("matrix witnesses over M_2(Z/6) satisfy A Y A = A") {
  const Ring R = Ring::modular(6);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    Matrix a(R, 2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) a.at(i, j) = elem(static_cast<std::uint32_t>(rng() % 6));
    const auto y = matrix_vnr_witness(a);
    REQUIRE(y);
    CHECK(a * *y * a == a);
  }
}

TEST_CASE("jacobson radical") {
  const auto j4 = jacobson_radical(Ring::modular(4));
  CHECK(j4 == std::vector<Elem>{elem(0), elem(2)});
  CHECK(jacobson_radical(Ring::modular(2)) == std::vector<Elem>{elem(0)});
  CHECK(jacobson_radical(Ring::modular(6)) == std::vector<Elem>{elem(0)});
}

TEST_CASE("jacobson radical is a two-sided ideal") {
  for (std::uint32_t n : {4u, 8u, 9u, 12u}) {
    const Ring R = Ring::modular(n);
    const auto J = jacobson_radical(R);
    const std::set<Elem> js(J.begin(), J.end());
    for (Elem a : J) {
      for (Elem b : J) CHECK(js.count(R.add(a, b)));
      for (Elem r : R.elements()) {
        CHECK(js.count(R.mul(r, a)));
        CHECK(js.count(R.mul(a, r)));
      }
    }
  }
}

TEST_CASE("semiprime rings") {
  const auto z4 = is_semiprime_ring(Ring::modular(4));
  CHECK_FALSE(z4.semiprime);
  CHECK(z4.witness == elem(2));
  CHECK(is_semiprime_ring(Ring::modular(6)).semiprime);
  CHECK(is_semiprime_ring(Ring::modular(2)).semiprime);
}
