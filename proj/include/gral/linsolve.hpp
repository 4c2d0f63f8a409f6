#pragma once

// Linear systems over finite rings. An equation is
//     sum_k  left_k * x_{var_k} * right_k  =  rhs
// so that noncommutative coefficient rings are handled honestly.
//
// Z/n and products of such rings are split by CRT into Z/p^k components and
// each component is diagonalised by valuation-pivoted elimination. Table
// rings fall back to bounded backtracking search.

#include <cstddef>
#include <optional>
#include <vector>

#include "gral/coeffring.hpp"

namespace gral {

struct LinearTerm {
  Elem left;
  std::size_t var;
  Elem right;
};

struct LinearEquation {
  std::vector<LinearTerm> terms;
  Elem rhs;
};

struct LinearSystem {
  std::size_t num_vars = 0;
  std::vector<LinearEquation> equations;
};

/// One solution, or nullopt when the system is inconsistent. Free variables
/// are set to zero. Raises SearchCapExceeded for table rings only.
std::optional<std::vector<Elem>> solve_linear_system(
    const Ring& ring, const LinearSystem& system,
    std::size_t cap = default_search_cap());

/// True iff the homogeneous system (all rhs ignored) has only the zero
/// solution.
bool kernel_is_trivial(const Ring& ring, const LinearSystem& system,
                       std::size_t cap = default_search_cap());

/// Evaluates the left-hand side of every equation at an assignment and
/// compares with the rhs.
bool satisfies(const Ring& ring, const LinearSystem& system,
               const std::vector<Elem>& assignment);

}  // namespace gral
