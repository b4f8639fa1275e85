#ifndef GRIGQ_PERM_HPP
#define GRIGQ_PERM_HPP

#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "grigq/bigint.hpp"

namespace grigq {

// Permutation of {0..degree-1} as a dense image array. Composition is
// function composition: (f*g)(x) = f(g(x)), matching the left tree action.
struct Perm {
  std::vector<uint32_t> img;

  Perm() = default;
  explicit Perm(size_t degree);  // identity
  explicit Perm(std::vector<uint32_t> images) : img(std::move(images)) {}

  size_t degree() const { return img.size(); }
  uint32_t operator[](uint32_t x) const { return img[x]; }
  bool is_identity() const;
  Perm operator*(const Perm &rhs) const;
  Perm inverse() const;
  bool operator==(const Perm &rhs) const { return img == rhs.img; }
  bool operator!=(const Perm &rhs) const { return img != rhs.img; }
  std::string to_string() const;  // one-line image list
};

// Stabilizer-chain representation (deterministic Schreier-Sims). An optional
// base prefix pins the first base points, which keeps block structure visible
// in the chain (used for kernel computations).
class PermGroup {
 public:
  PermGroup(std::vector<Perm> generators, std::vector<uint32_t> base_prefix = {});

  size_t degree() const { return degree_; }
  const BigInt &order() const { return order_; }
  const std::vector<Perm> &generators() const { return input_gens_; }

  bool contains(const Perm &p) const;
  // strips p through the chain; identity residue means membership
  Perm sift(const Perm &p) const;

  // enlarges the group; returns true if the order grew
  bool add_generator(const Perm &p);

  size_t base_length() const { return levels_.size(); }
  uint32_t base_point(size_t i) const { return levels_[i].beta; }

  // order of the pointwise stabilizer of {0..split-1} within this group
  // (valid when the base starts with those points, e.g. via base_prefix)
  BigInt stabilizer_order_from(uint32_t split) const;
  // strong generators of that pointwise stabilizer
  std::vector<Perm> stabilizer_generators_from(uint32_t split) const;

 private:
  struct Level {
    uint32_t beta = 0;
    std::vector<Perm> gens;                 // strong generators fixing earlier base points
    std::vector<uint32_t> orbit;            // discovery order
    std::vector<int32_t> orbit_pos;         // point -> index+1, 0 if absent
    std::vector<Perm> transversal;          // u[i](beta) = orbit[i]
    std::vector<Perm> transversal_inv;
  };

  void recompute_orbit(Level &lv);
  void schreier_sims(size_t i);
  Perm strip(Perm p, size_t from, size_t *stop) const;
  void recompute_order();

  size_t degree_;
  std::vector<Perm> input_gens_;
  // deque: growing the chain must not invalidate live Level references
  std::deque<Level> levels_;
  BigInt order_;
};

// The level-n quotient of the Grigorchuk group as a permutation group on
// 2^n leaves. Degrees above 2^12 must be explicitly allowed.
PermGroup quotient_group(int n, bool allow_large = false);

struct KernelData {
  BigInt order;
  bool elementary_abelian = false;
  std::vector<Perm> generators;  // acting on the 2^n leaves
};

// Kernel of the canonical map G_n -> G_m (m < n), computed from a stabilizer
// chain on the disjoint union of the two levels.
KernelData level_kernel(int n, int m, bool allow_large = false);

// Kernel of q_n : G_n -> G_{n-1}; order should be 2^(5*2^(n-4)) for n >= 4.
KernelData kernel_data(int n, bool allow_large = false);

// Normal closure of the given elements inside the group generated by `ambient`.
PermGroup normal_closure(const std::vector<Perm> &ambient, const std::vector<Perm> &seeds);

struct BranchSubgroupChecks {
  BigInt k_index;     // index of K = <<(ab)^2>> in G_n
  bool st3_in_k = false;
};

BranchSubgroupChecks branch_subgroup_checks(int n, bool allow_large = false);

}  // namespace grigq

#endif
