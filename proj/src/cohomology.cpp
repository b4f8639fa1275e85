#include "grigq/cohomology.hpp"

#include <stdexcept>

#include "grigq/perm.hpp"

namespace grigq {

namespace {

// dim V/W via group orders (both are 2-groups)
int log2_index(const BigInt &big, const BigInt &small) {
  int a = big.log2_exact(), b = small.log2_exact();
  if (a < 0 || b < 0 || a < b) throw std::logic_error("log2_index: not a 2-power index");
  return a - b;
}

}  // namespace

int invariant_hom_dim(int n, int k) {
  if (n < 3 || k < 1) throw std::invalid_argument("invariant_hom_dim: n >= 3, k >= 1");
  if (n + k > 6) throw std::out_of_range("invariant_hom_dim: n + k <= 6 (degree cap)");
  KernelData kd = level_kernel(n + k, n);
  PermGroup g = quotient_group(n + k);
  PermGroup v(kd.generators);

  // W = V^2 [V,G] as a normal subgroup of G_{n+k}; invariant homomorphisms
  // V -> F2 are exactly the homomorphisms of V/W
  std::vector<Perm> seeds;
  for (const Perm &x : kd.generators) {
    seeds.push_back(x * x);
    for (const Perm &gg : g.generators())
      seeds.push_back(x.inverse() * (gg.inverse() * (x * gg)));
  }
  PermGroup w = normal_closure(g.generators(), seeds);
  return log2_index(v.order(), w.order());
}

int st3_abelianization_bound() {
  KernelData kd = level_kernel(6, 3);
  PermGroup s(kd.generators);
  // S^2 [S,S], normalized inside S
  std::vector<Perm> seeds;
  for (size_t i = 0; i < kd.generators.size(); ++i) {
    const Perm &x = kd.generators[i];
    seeds.push_back(x * x);
    for (size_t j = 0; j < i; ++j) {
      const Perm &y = kd.generators[j];
      seeds.push_back(x.inverse() * (y.inverse() * (x * y)));
    }
  }
  PermGroup w = normal_closure(kd.generators, seeds);
  return log2_index(s.order(), w.order());
}

size_t limit_bound(const LimitSystem &sys, long long target) {
  if (sys.kernel_bound < 0) throw std::invalid_argument("limit_bound: N >= 0");
  long long threshold = sys.kernel_bound * target;
  for (size_t i = 0; i < sys.dims.size(); ++i)
    if (sys.dims[i] > threshold) return i;
  throw std::out_of_range("limit_bound: sequence exhausted below the threshold");
}

}  // namespace grigq
