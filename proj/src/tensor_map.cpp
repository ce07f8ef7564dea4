#include "wgc/tensor_map.hpp"

#include <stdexcept>

namespace wgc {

namespace {

long power_checked(int N, std::size_t k) {
  long v = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (v > (1L << 40) / N) throw std::invalid_argument("tensor too large for dense handling");
    v *= N;
  }
  return v;
}

long flat_index(const MultiIndex& idx, int N) {
  long v = 0;
  for (std::size_t p = 0; p < idx.size(); ++p) v = v * N + (idx[p] - 1);
  return v;
}

}  // namespace

VectorQ apply_tensor_map(const Partition& pi, int N, const VectorQ& v) {
  if (N < 1) throw std::invalid_argument("apply_tensor_map: N must be positive");
  const std::size_t k = pi.upper_points(), l = pi.lower_points();
  const long dim_in = power_checked(N, k), dim_out = power_checked(N, l);
  if (v.size() != dim_in) throw std::invalid_argument("apply_tensor_map: tensor shape mismatch");
  VectorQ out = VectorQ::Constant(dim_out, Rational(0));
  // One term per assignment of a value to each block.
  const std::size_t nb = pi.block_count();
  std::vector<int> val(nb, 1);
  while (true) {
    MultiIndex i, j;
    i.entries.resize(k);
    j.entries.resize(l);
    for (std::size_t p = 1; p <= k; ++p) i.entries[p - 1] = val[pi.block_of(p)];
    for (std::size_t p = 1; p <= l; ++p) j.entries[p - 1] = val[pi.block_of(k + p)];
    out(flat_index(j, N)) += v(flat_index(i, N));
    std::size_t b = 0;
    while (b < nb && val[b] == N) val[b++] = 1;
    if (b == nb) break;
    ++val[b];
  }
  return out;
}

MatrixQ tensor_map_matrix(const Partition& pi, int N) {
  const std::size_t k = pi.upper_points(), l = pi.lower_points();
  const long dim_in = power_checked(N, k), dim_out = power_checked(N, l);
  MatrixQ t = MatrixQ::Constant(dim_out, dim_in, Rational(0));
  const std::size_t nb = pi.block_count();
  std::vector<int> val(nb, 1);
  while (true) {
    MultiIndex i, j;
    i.entries.resize(k);
    j.entries.resize(l);
    for (std::size_t p = 1; p <= k; ++p) i.entries[p - 1] = val[pi.block_of(p)];
    for (std::size_t p = 1; p <= l; ++p) j.entries[p - 1] = val[pi.block_of(k + p)];
    t(flat_index(j, N), flat_index(i, N)) = Rational(1);
    std::size_t b = 0;
    while (b < nb && val[b] == N) val[b++] = 1;
    if (b == nb) break;
    ++val[b];
  }
  return t;
}

MatrixQ twisted_tensor_map_matrix(const Partition& pi, int N) {
  const std::size_t k = pi.upper_points(), l = pi.lower_points();
  const long dim_in = power_checked(N, k), dim_out = power_checked(N, l);
  MatrixQ t = MatrixQ::Constant(dim_out, dim_in, Rational(0));
  MultiIndex i, j;
  i.entries.assign(k, 1);
  j.entries.assign(l, 1);
  // Dense walk over all (i, j); fine at oracle scale.
  std::vector<int> all(k + l, 1);
  while (true) {
    for (std::size_t p = 0; p < k; ++p) i.entries[p] = all[p];
    for (std::size_t p = 0; p < l; ++p) j.entries[p] = all[k + p];
    int s = twisted_delta(pi, i, j);
    if (s != 0) t(flat_index(j, N), flat_index(i, N)) = Rational(s);
    std::size_t b = 0;
    while (b < k + l && all[b] == N) all[b++] = 1;
    if (b == k + l) break;
    ++all[b];
  }
  return t;
}

}  // namespace wgc
