#pragma once

// Finite unital coefficient rings: Z/n, finite products, and rings given by
// explicit addition/multiplication tables. Elements are canonical indices
// into the ring's enumeration order.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gral/errors.hpp"

namespace gral {

/// Canonical index of a ring element. For Z/n this is the residue, for a
/// product the mixed-radix tuple index (first factor most significant), for
/// a table ring the table row.
enum class Elem : std::uint32_t {};

constexpr std::uint32_t index(Elem e) { return static_cast<std::uint32_t>(e); }
constexpr Elem elem(std::uint32_t i) { return static_cast<Elem>(i); }

struct RingSpec {
  enum class Kind { Modular, Product, Table };

  Kind kind = Kind::Modular;
  std::uint32_t modulus = 0;          // Modular
  std::vector<RingSpec> factors;      // Product
  std::uint32_t size = 0;             // Table
  std::uint32_t zero = 0;
  std::uint32_t one = 0;
  std::vector<std::vector<std::uint32_t>> add;
  std::vector<std::vector<std::uint32_t>> mul;

  static RingSpec modular(std::uint32_t n);
  static RingSpec product(std::vector<RingSpec> factors);
  static RingSpec table(std::uint32_t size, std::uint32_t zero, std::uint32_t one,
                        std::vector<std::vector<std::uint32_t>> add,
                        std::vector<std::vector<std::uint32_t>> mul);

  bool operator==(const RingSpec&) const = default;
};

/// Immutable handle to a finite unital ring. Copies share state.
class Ring {
 public:
  /// Validates the spec. Table rings are checked against every ring axiom;
  /// the first failure raises AxiomViolation with a witness tuple.
  explicit Ring(const RingSpec& spec);

  static Ring modular(std::uint32_t n) { return Ring(RingSpec::modular(n)); }

  const RingSpec& spec() const;
  RingSpec::Kind kind() const { return spec().kind; }
  std::uint32_t order() const;

  Elem zero() const;
  Elem one() const;
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  /// Image of the integer n under Z -> R.
  Elem from_int(std::int64_t n) const;

  /// All elements in canonical enumeration order.
  std::vector<Elem> elements() const;

  bool is_commutative() const;
  /// True for Z/n and products of such rings; these are solved via CRT.
  bool crt_decomposable() const;

  /// Product rings: split into / join from factor elements.
  const std::vector<Ring>& factors() const;
  std::vector<Elem> split(Elem a) const;
  Elem join(std::span<const Elem> parts) const;

  /// Residue, tuple "(a,b)" for products, or table row.
  std::string format(Elem a) const;
  std::string describe() const;

  bool operator==(const Ring& other) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Dense matrix with entries from a single ring.
class Matrix {
 public:
  Matrix(Ring ring, std::size_t rows, std::size_t cols);

  static Matrix identity(const Ring& ring, std::size_t n);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(Elem r) const;
  bool is_zero() const;

  bool operator==(const Matrix& o) const;

  std::string format() const;

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

/// First y in enumeration order with a = a*y*a.
std::optional<Elem> vnr_witness(const Ring& ring, Elem a);

struct VnrVerdict {
  bool regular = false;
  /// Indexed by element when regular.
  std::vector<Elem> witnesses;
  std::optional<Elem> counterexample;
};

VnrVerdict is_vnr(const Ring& ring);

/// Y with A*Y*A = A, found by solving the (linear in Y) entry equations.
std::optional<Matrix> matrix_vnr_witness(const Matrix& a,
                                         std::size_t cap = default_search_cap());

/// {x : 1 - yx is left invertible for all y}, by enumeration.
std::vector<Elem> jacobson_radical(const Ring& ring,
                                   std::size_t cap = default_search_cap());

struct SemiprimeVerdict {
  bool semiprime = true;
  std::optional<Elem> witness;  // nonzero a with aRa = 0
};

SemiprimeVerdict is_semiprime_ring(const Ring& ring,
                                   std::size_t cap = default_search_cap());

}  // namespace gral
