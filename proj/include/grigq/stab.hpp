#ifndef GRIGQ_STAB_HPP
#define GRIGQ_STAB_HPP

#include <string>

#include "grigq/word.hpp"

namespace grigq {

// A word over {b, c, d, b^a, c^a, d^a} (alphabet stab6, the level-1
// stabilizer generators). Obtained from an abcd word of even a-count by
// Schreier rewriting with transversal {1, a}; a^2 is dropped in the
// process, i.e. the rewrite is exact modulo the relation a^2 = 1 (which
// is all the stabilizer maps ever need: a^2 acts trivially on the tree).
using StabWord = FreeWord;

StabWord rewrite_st1(const FreeWord &w);

// Expands conjugation marks back: x^a -> a x a. Together with rewrite_st1
// this round-trips modulo a^2.
FreeWord forget_stab(const StabWord &s);

// Free reduction in <a | a^2> * F(b,c,d): a-exponents normalized mod 2,
// then ordinary cancellation. Used to state the round-trip property.
FreeWord reduce_mod_a2(const FreeWord &w);

struct PairWord {
  FreeWord left, right;  // sections at the two level-1 subtrees
};

// The level-1 decomposition map on stabilizer words:
//   b -> (a,c)   c -> (a,d)   d -> (1,b)
//   b^a -> (c,a) c^a -> (d,a) d^a -> (b,1)
PairWord phi_bar(const StabWord &s);

// phi_bar after Schreier rewriting; defined on even-a-count words.
PairWord psi_pair(const FreeWord &w);

// Canonical form in <a,d | a^2, d^2, (ad)^4> (dihedral of order 8):
// shortest representative, ties broken lexicographically with a < d.
// Empty output iff the word is trivial.
FreeWord dihedral_normal_form(const FreeWord &w);

enum class PairFamily : uint8_t { u, v, w, t, U, V, W, T };

// Checks the substitution pair identity for one relator family member:
// the image of sigma(p) under the level-1 decomposition has a left
// component trivial in the dihedral group <a,d> and a right component
// freely equal to the predecessor relator p. Lowercase families take
// i >= 1 (w,t take n >= 4); capital families likewise.
bool verify_pair_identity(PairFamily fam, int index);

// Necessary-condition check on the listed generators of Ker(psi):
// every one of B_1..B_4, L, U_0, U_1, V_0 maps to a pair whose components
// are trivial in G_m for all m <= max_level.
bool check_kernel_generators(int max_level = 8);

}  // namespace grigq

#endif
