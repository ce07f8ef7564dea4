#pragma once

#include "wgc/partition.hpp"
#include "wgc/rational.hpp"

namespace wgc {

// T_pi applied to a rank-k tensor over an N-dimensional index set, flattened
// row-major with the first tensor slot most significant. Exact.
VectorQ apply_tensor_map(const Partition& pi, int N, const VectorQ& v);

// Dense matrix of T_pi (N^l rows, N^k columns). Small-N oracle work only.
MatrixQ tensor_map_matrix(const Partition& pi, int N);

// Twisted variant built from the twisted Kronecker symbols.
MatrixQ twisted_tensor_map_matrix(const Partition& pi, int N);

}  // namespace wgc
