#ifndef GRIGQ_PCP_HPP
#define GRIGQ_PCP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "grigq/bigint.hpp"
#include "grigq/matrix.hpp"
#include "grigq/presentation.hpp"

namespace grigq {

// dynamic bitset used for exponent vectors and relation tails
struct F2Vec {
  std::vector<uint64_t> limbs;

  explicit F2Vec(size_t nbits = 0) : limbs((nbits + 63) / 64, 0) {}
  bool get(size_t i) const { return (limbs[i / 64] >> (i % 64)) & 1u; }
  void set(size_t i, bool v) {
    uint64_t m = uint64_t{1} << (i % 64);
    if (v)
      limbs[i / 64] |= m;
    else
      limbs[i / 64] &= ~m;
  }
  void toggle(size_t i) { limbs[i / 64] ^= uint64_t{1} << (i % 64); }
  void operator^=(const F2Vec &rhs) {
    for (size_t i = 0; i < limbs.size(); ++i) limbs[i] ^= rhs.limbs[i];
  }
  bool is_zero() const {
    for (uint64_t l : limbs)
      if (l) return false;
    return true;
  }
  bool operator==(const F2Vec &rhs) const { return limbs == rhs.limbs; }
  int highest_bit() const;  // -1 if zero
};

// Consistent power-commutator presentation of a finite 2-group: pc
// generators of order 2 modulo later ones, power relations g_i^2 = tail,
// commutator relations [g_j,g_i] = tail (j > i) with tails over higher
// generators, plus the epimorphism from the source presentation.
struct PcPresentation {
  int ngens = 0;
  std::vector<int> weight;
  std::vector<F2Vec> power;               // power[i]: rhs of g_i^2
  std::vector<std::vector<F2Vec>> comm;   // comm[j][i], j > i

  enum DefKind : uint8_t { kEpi, kPower, kComm };
  struct Definition {
    DefKind kind;
    int a = 0, b = 0;  // kPower: a=i; kComm: a=j, b=i; kEpi: a=abstract gen
  };
  std::vector<Definition> defs;
  std::vector<F2Vec> epi;  // image of each abstract generator
  int group_class = 0;
  bool stabilized = false;  // quotient equals the presented group

  BigInt order() const { return BigInt::pow2(static_cast<unsigned>(ngens)); }

  F2Vec identity() const { return F2Vec(static_cast<size_t>(ngens)); }
  F2Vec gen(int i) const;
  F2Vec multiply(const F2Vec &u, const F2Vec &v) const;
  F2Vec multiply_gen(F2Vec u, int i) const;
  F2Vec inverse(const F2Vec &u) const;
  F2Vec evaluate(const std::vector<int16_t> &word) const;  // via the epimorphism
};

// largest class <= max_class exponent-2 central quotient of the presented
// group; stabilized=false when the class cap stopped the descent
PcPresentation pquotient(const PresentationFP &p, int max_class);

// 2-cover data: the covering presentation extends the group's by central
// order-2 multiplicator generators.
struct PCover {
  PcPresentation cover;       // extended, consistent
  int base_gens = 0;          // generators of the underlying group
  int multiplicator_dim = 0;  // = cover.ngens - base_gens
};

// tails-and-consistency cover of a consistent PCP (no relators imposed)
PCover p_cover(const PcPresentation &pc);

// one F2 row per relator, in multiplicator coordinates of the cover
F2Matrix relator_images(const PresentationFP &p, const PCover &cover);

struct MultiplierReport {
  int level = 0;
  int h2_dim = 0;            // multiplicator dimension of the minimal presentation
  int schur_mod2_rank = 0;   // h2_dim - 3
  int def_lower = 0, def_upper = 0;
  bool relators_independent = false;
  int relator_rank = 0, relator_count = 0;
  BigInt group_order;
};

// the full multiplier pipeline on the minimal (three-generator)
// presentation of the level-n quotient
MultiplierReport multiplier_report(int n, int max_class = 40);

// Multiplicator data of a presentation with possibly redundant generators,
// via the covering presentation < X | [r_i,x_j], r_i^2 >.
struct IndependenceData {
  int multiplicator_dim = 0;
  int relator_rank = 0;
  int relator_count = 0;
  bool independent = false;
};
IndependenceData independence_certificate(const PresentationFP &p, int max_class = 40);

}  // namespace grigq

#endif
