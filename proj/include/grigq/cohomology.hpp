#ifndef GRIGQ_COHOMOLOGY_HPP
#define GRIGQ_COHOMOLOGY_HPP

#include <cstdint>
#include <vector>

namespace grigq {

// Dimension of the G_n-invariant homomorphisms Ker(G_{n+k} -> G_n) -> F2,
// computed as the coinvariant dimension dim V / (V^2 [V,V] [V,G]) inside
// the level-(n+k) permutation group.
int invariant_hom_dim(int n, int k);

// dim of the mod-2 abelianization of the St(3)-image in G_6; the uniform
// bound for the grid of invariant-hom dimensions
int st3_abelianization_bound();

struct LimitSystem {
  std::vector<long long> dims;   // monotone increasing
  long long kernel_bound = 0;    // N >= 0
};

// Least index i with dims[i] > kernel_bound * target; throws
// std::out_of_range when the sequence is exhausted.
size_t limit_bound(const LimitSystem &sys, long long target);

}  // namespace grigq

#endif
