#ifndef GRIGQ_WORD_HPP
#define GRIGQ_WORD_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace grigq {

// Generator alphabets in play:
//   abcd   - the four standard generators of the Grigorchuk group
//   abc    - the three-generator alphabet of the minimal presentations
//   ad     - the dihedral subalphabet <a,d>
//   stab6  - {b, c, d, b^a, c^a, d^a}, the level-1 stabilizer generators
enum class Alphabet : uint8_t { abcd, abc, ad, stab6 };

int alphabet_size(Alphabet a);
const char *alphabet_name(Alphabet a);

// A word in the free group on the given alphabet. Letters are signed
// 1-based generator ids: +k is generator k-1, -k its inverse. Words are
// stored exactly as built; equality compares freely reduced forms.
struct FreeWord {
  Alphabet alphabet = Alphabet::abcd;
  std::vector<int8_t> letters;

  FreeWord() = default;
  explicit FreeWord(Alphabet a) : alphabet(a) {}
  FreeWord(Alphabet a, std::vector<int8_t> ls) : alphabet(a), letters(std::move(ls)) {}

  size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  FreeWord inverse() const;
  FreeWord operator*(const FreeWord &rhs) const;  // concatenation
  FreeWord pow(int e) const;

  bool operator==(const FreeWord &rhs) const;
  bool operator!=(const FreeWord &rhs) const { return !(*this == rhs); }
};

// Text format: lowercase letter = generator, uppercase = its inverse,
// concatenated without separators. "(w)^k" repeats a group, "x^k" a single
// letter; negative k inverts. parse_word does not reduce, so printing and
// re-parsing round-trips letter-for-letter.
FreeWord parse_word(const std::string &text, Alphabet a);
std::string to_text(const FreeWord &w);

FreeWord free_reduce(const FreeWord &w);

// Reduction modulo the relations a^2=b^2=c^2=d^2=1 and the Klein four-group
// table bc=cb=d, bd=db=c, cd=dc=b. Output is the canonical alternating form
// a x1 a x2 ... with xi in {b,c,d} (leading/trailing letters optional).
// Decides equality in the Grigorchuk group only together with deeper tools;
// here it is the normal form of the quotient <a>*<b,c,d|K4>.
FreeWord reduce_involutive(const FreeWord &w);

// A free-group endomorphism given letterwise.
struct Substitution {
  Alphabet alphabet;
  std::vector<FreeWord> images;  // images[gen id]

  FreeWord apply(const FreeWord &w) const;
};

// a -> aca, b -> d, c -> b, d -> c  (Lysenok's substitution)
const Substitution &sigma_lysenok();
// a -> aca, b -> bc, c -> b  (three-generator variant)
const Substitution &sigma_minimal();

// sigma applied k times, freely reduced
FreeWord substitute(const Substitution &s, const FreeWord &w, int k);

enum class FamilyKind : uint8_t { gamma, thm1, thm4, lysenok, hopf, omega, upsilon };

struct LabeledWord {
  std::string role;  // "u_0", "V_2", "W_4", "B_1", "L", "a^2", ...
  FreeWord word;
};

// One of the named relator families:
//   gamma      a^2,b^2,c^2,d^2,bcd,(ad)^4
//   thm1(n)    a^2,b^2,c^2,d^2,bcd,u_0..u_{n-3},v_0..v_{n-4},w_n,t_n  (2n+2 words)
//   thm4(n)    a^2,b^2,c^2,(bc)^2,u_0..u_{n-3},v_0..v_{n-4},w_n,t_n on {a,b,c} (2n+1)
//   lysenok(c) a^2,b^2,c^2,d^2,bcd,u_0..u_c,v_0..v_c
//   hopf(n)    B_1..B_4,L,U_0..U_{n-3},V_0..V_{n-4},W_n,T_n  (2n+2 words)
//   omega(n)   u_1..u_n, v_0..v_{n-1}
//   upsilon(n) u_1..u_{n-3}, v_0..v_{n-4}, w_n, t_n
struct RelatorFamily {
  FamilyKind kind;
  int level;  // level n, or cutoff for lysenok
  std::vector<LabeledWord> words;
};

RelatorFamily relator_family(FamilyKind kind, int n);

// Building blocks, exposed for the stabilizer/pair machinery.
FreeWord lowercase_seed(char family);       // u,v,w,t seeds: (ad)^4, (adacac)^4, (ac)^4, (abac)^4
FreeWord capital_seed(char family);         // U,V,W,T seeds with the exponent-sum corrections
FreeWord hopf_L();                          // b^2 c^2 d^2 (bcd)^-2

// Exponent sum of each generator (signed), indexed by generator id.
std::vector<long> exponent_sums(const FreeWord &w);

}  // namespace grigq

#endif
