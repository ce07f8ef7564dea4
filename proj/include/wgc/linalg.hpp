#pragma once

#include "wgc/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace wgc {

enum class InverseMode { Strict, PseudoInverse };

// Strict-mode failure for a rank-deficient Gram matrix. Carries the first
// dependent column and the independent set found before it.
class SingularGramError : public std::runtime_error {
 public:
  SingularGramError(std::string msg, int dependent, std::vector<int> basis)
      : std::runtime_error(std::move(msg)), dependent_index(dependent),
        basis_indices(std::move(basis)) {}
  int dependent_index;
  std::vector<int> basis_indices;
};

struct ExactInverse {
  MatrixQ inverse;          // n x n; zero outside basis x basis in pinv mode
  std::vector<int> basis;   // pivot columns, ascending
  bool full_rank = true;
};

// Exact inverse of a symmetric positive-semidefinite rational matrix by
// fraction-free (Bareiss) Gaussian elimination. In PseudoInverse mode a
// rank-deficient input yields the inverse of the maximal leading independent
// principal submatrix, zero-padded; W then satisfies A W A = A and W A W = W.
ExactInverse invert_psd(const MatrixQ& a, InverseMode mode);

// Exact inverse of a general nonsingular rational matrix (same elimination
// core, row pivoting). Throws SingularGramError if singular.
MatrixQ invert(const MatrixQ& a);

}  // namespace wgc
