#pragma once

// Graded von Neumann regularity witnesses in path algebras: per-element
// local units, idempotent generators of finitely generated left ideals in
// matrix rings, the constructive witness built inside D_N, and a direct
// linear-solve oracle over bounded spanning sets.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gral/matricial.hpp"
#include "gral/pathalg.hpp"

namespace gral {

/// unit = sum_i factors[i].first * factors[i].second, with first in S_d and
/// second in S_{-d} (left unit) or first in S_{-d}, second in S_d (right).
struct LocalUnit {
  AlgebraElement unit;
  std::vector<std::pair<AlgebraElement, AlgebraElement>> factors;
};

/// epsilon with epsilon * x = x: the sum of gamma gamma* over the
/// prefix-minimal real parts gamma of the support of x. Throws ZeroElement.
LocalUnit local_unit_left(const AlgebraElement& x);
/// epsilon' with x * epsilon' = x, mirrored through the involution.
LocalUnit local_unit_right(const AlgebraElement& x);

struct IdempotentGenerator {
  Matrix idempotent;
  /// idempotent = sum_i coeffs[i] * gens[i].
  std::vector<Matrix> coeffs;
};

/// Idempotent y generating the left ideal sum_i M c_i of a square matrix ring
/// over a von Neumann regular ring, by pairwise combination. Throws
/// CoefficientRingNotVNR when the coefficient ring is not regular.
IdempotentGenerator idempotent_generator(const std::vector<Matrix>& gens,
                                         std::size_t cap = default_search_cap());

enum class WitnessMethod { Constructive, Oracle };

std::string to_string(WitnessMethod m);

struct WitnessCertificate {
  AlgebraElement element;
  int degree = 0;
  WitnessMethod method = WitnessMethod::Constructive;
  /// Present when a witness b with x = x b x was found.
  std::optional<AlgebraElement> witness;
  /// Length bound of the searched spanning set (oracle) or the filtration
  /// level N used (constructive).
  std::size_t bound = 0;
  /// For absences: true when the spanning set is a basis of S_{-d}.
  bool exact = true;
  bool verified = false;
  std::string absence;

  /// Stable field order: element, degree, method, witness|absence, bounds,
  /// verified.
  std::string format() const;
};

/// Constructive witness following the local-unit / idempotent route. Leavitt
/// specs only; x must be homogeneous.
WitnessCertificate graded_witness_constructive(const AlgebraElement& x,
                                               std::size_t cap = default_search_cap());

/// Witness search over reduced monomials of degree -d with lengths <= bound.
WitnessCertificate graded_witness_oracle(const AlgebraElement& x, std::size_t bound,
                                         std::size_t cap = default_search_cap());

enum class RegularityVerdict { VerifiedAtBounds, Counterexample, NoWitnessAtBound };

std::string to_string(RegularityVerdict v);

struct RegularityReport {
  std::vector<WitnessCertificate> certificates;
  RegularityVerdict verdict = RegularityVerdict::VerifiedAtBounds;
  /// First element without a witness.
  std::optional<AlgebraElement> counterexample;
};

struct VerdictOptions {
  std::size_t degree_bound = 3;
  std::size_t size_bound = 3;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  /// Default: constructive for Leavitt specs over regular rings, else oracle.
  std::optional<WitnessMethod> method;
  std::size_t cap = default_search_cap();
};

/// Certificates for every reduced monomial r*m (r ranging over nonzero ring
/// elements) with |degree| <= degree_bound and lengths <= size_bound, plus
/// seeded random homogeneous combinations.
RegularityReport graded_vnr_verdict(const SpecPtr& spec, const VerdictOptions& opts);

/// Random homogeneous element of the given degree: 1 to max_terms reduced
/// monomials with lengths <= max_len and random nonzero coefficients. Zero
/// when the degree has no monomials.
AlgebraElement random_homogeneous(const SpecPtr& spec, std::mt19937_64& rng, int degree,
                                  std::size_t max_len, std::size_t max_terms = 3);

/// Random element (mixed degrees) built from up to max_terms monomials.
AlgebraElement random_element(const SpecPtr& spec, std::mt19937_64& rng, std::size_t max_len,
                              std::size_t max_terms = 4);

}  // namespace gral
