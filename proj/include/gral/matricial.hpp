#pragma once

// The degree-zero filtration D_n of a Leavitt path algebra of a finite graph
// and its decomposition into full matrix rings:
//   D_n = prod_{i<n, v sink} M_{P(i,v)}(R)  x  prod_{v} M_{P(n,v)}(R).
// Row and column labels are the paths themselves, in path order.

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "gral/pathalg.hpp"

namespace gral {

struct BlockKey {
  std::size_t level;  // i < n for sink blocks, n for the top blocks
  VertexId vertex;

  auto operator<=>(const BlockKey&) const = default;
};

struct MatrixBlock {
  std::vector<Path> labels;
  Matrix matrix;
};

class MatricialImage {
 public:
  /// Zero element of D_n with every nonempty block present.
  MatricialImage(SpecPtr spec, std::size_t n);
  static MatricialImage identity(SpecPtr spec, std::size_t n);

  const SpecPtr& spec() const { return spec_; }
  std::size_t level() const { return n_; }
  const std::map<BlockKey, MatrixBlock>& blocks() const { return blocks_; }
  std::map<BlockKey, MatrixBlock>& blocks() { return blocks_; }

  MatricialImage operator+(const MatricialImage& o) const;
  MatricialImage operator-(const MatricialImage& o) const;
  MatricialImage operator*(const MatricialImage& o) const;
  bool operator==(const MatricialImage& o) const;
  bool is_zero() const;

  /// One line per nonzero entry: "(level,vertex) alpha,beta: coeff".
  std::string format() const;

 private:
  void check_same(const MatricialImage& o) const;

  SpecPtr spec_;
  std::size_t n_;
  std::map<BlockKey, MatrixBlock> blocks_;
};

/// Coordinates of x in the D_n matrix-unit basis. Requires a Leavitt spec and
/// x homogeneous of degree 0 with filtration level at most n.
MatricialImage matricial_decompose(const AlgebraElement& x, std::size_t n);
/// Inverse of matricial_decompose: sum of coeff * alpha beta* over entries.
AlgebraElement matricial_lift(const MatricialImage& image);

/// sum_{i<n, v sink} |P(i,v)|^2 + sum_v |P(n,v)|^2.
std::size_t dn_rank_formula(const Graph& g, std::size_t n);
/// Number of reduced degree-0 monomials with real part of length at most n.
std::size_t dn_rank_reduced_basis(const AlgebraSpec& spec, std::size_t n);

}  // namespace gral
