#ifndef GRIGQ_NILQ_HPP
#define GRIGQ_NILQ_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "grigq/matrix.hpp"
#include "grigq/word.hpp"

namespace grigq {

// --- Hall basis of the free class-4 nilpotent group on a,b,c,d ---
//
// Weights 1..4 with sizes 4, 6, 20, 45. Left-normed basic commutators
// [x,y,z,...] = [..[[x,y],z]..] with x > y and the Hall chain condition;
// the fifteen weight-4 commutators of shape [[x,y],[z,w]] are excluded
// from group coordinates (they die in the second derived subgroup) but
// participate in the internal Lie-coordinate extraction.
struct HallElement {
  int weight;
  std::vector<int> letters;          // left-normed spine, letters 0..3
  std::vector<int> second;           // nonempty for the [[x,y],[z,w]] shape
  std::string name() const;
};

// 75 group-coordinate elements (4+6+20+45), ordered by weight then lex.
const std::vector<HallElement> &hall_basis();
// the same with the 15 [[x,y],[z,w]] elements appended at weight 4 (90)
const std::vector<HallElement> &hall_basis_full();

inline constexpr int kNilCoords = 75;      // group coordinates
inline constexpr int kWeight2Offset = 4;   // first weight-2 coordinate
inline constexpr int kQnCoords = 71;       // weight >= 2 coordinates

// Element of F/(gamma_5 F'') in Hall normal form (integer exponents).
struct NilElement {
  std::array<int64_t, kNilCoords> e{};
  bool operator==(const NilElement &rhs) const { return e == rhs.e; }
  bool is_identity() const;
};

// Normal form of a word; a homomorphism onto the class-4 quotient.
NilElement collect(const FreeWord &w);
NilElement nil_mul(const NilElement &x, const NilElement &y);
NilElement nil_inverse(const NilElement &x);
NilElement nil_commutator(const NilElement &x, const NilElement &y);

// w1^-1 w2^-1 w1 w2 as a word
FreeWord comm_word(const FreeWord &w1, const FreeWord &w2);

// --- the finite abelian groups Q_n ---
//
// Q_n = F'/([K_n,F] gamma_5(F) F'') on the weight >= 2 coordinates. The
// relation lattice is generated by commutators of the level-n Hopf relators
// with basis elements of weight <= 3 and saturated under further
// commutation with the generators (a linear operation on weight >= 2
// coordinates), then normalized by Smith reduction.
struct QnGroup {
  int level = 0;
  std::vector<int64_t> factors;  // kQnCoords invariant factors, all >= 1
  IntMatrix vmat;                // SNF column transform
  int relation_rank = 0;
  bool saturation_fixed_point = false;  // an extra commutation round added nothing

  // normalized coordinates (0 <= c_i < factors[i]) of a weight >= 2 vector
  std::vector<int64_t> reduce(const std::vector<int64_t> &raw) const;
};

QnGroup qn_build(int n);

// coordinates of a commutator word; requires all exponent sums zero
std::vector<int64_t> qn_image(const FreeWord &w, const QnGroup &q);
// order of the image of w in Q_n
int64_t qn_order(const FreeWord &w, const QnGroup &q);
// F2-rank of the span of the images (each must have order <= 2)
int qn_rank(const std::vector<FreeWord> &words, const QnGroup &q);

// coordinates of a single Hall basis element (index into hall_basis())
std::vector<int64_t> qn_basis_image(size_t hall_index, const QnGroup &q);

}  // namespace grigq

#endif
