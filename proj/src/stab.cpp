#include "grigq/stab.hpp"

#include <array>
#include <stdexcept>

#include "grigq/perm.hpp"
#include "grigq/tree.hpp"

namespace grigq {

namespace {

// stab6 ids: 1=b, 2=c, 3=d, 4=b^a, 5=c^a, 6=d^a
constexpr int kA = 1;  // abcd id of a

}  // namespace

StabWord rewrite_st1(const FreeWord &w) {
  if (w.alphabet != Alphabet::abcd)
    throw std::invalid_argument("rewrite_st1 requires the abcd alphabet");
  StabWord out(Alphabet::stab6);
  int coset = 0;  // 0 ~ rep 1, 1 ~ rep a
  for (int8_t l : w.letters) {
    int g = std::abs(l);
    if (g == kA) {
      coset ^= 1;
      continue;
    }
    int8_t sym = static_cast<int8_t>((g - 1) + (coset ? 3 : 0));
    out.letters.push_back(l > 0 ? sym : static_cast<int8_t>(-sym));
  }
  if (coset != 0) throw std::invalid_argument("rewrite_st1: odd a-count");
  return free_reduce(out);
}

FreeWord forget_stab(const StabWord &s) {
  if (s.alphabet != Alphabet::stab6)
    throw std::invalid_argument("forget_stab requires a stab6 word");
  FreeWord out(Alphabet::abcd);
  for (int8_t l : s.letters) {
    int sym = std::abs(l);
    int base = sym <= 3 ? sym : sym - 3;  // b,c,d id offset
    int8_t letter = static_cast<int8_t>(base + 1);
    if (l < 0) letter = static_cast<int8_t>(-letter);
    if (sym > 3) out.letters.push_back(kA);
    out.letters.push_back(letter);
    if (sym > 3) out.letters.push_back(kA);
  }
  return out;
}

FreeWord reduce_mod_a2(const FreeWord &w) {
  if (w.alphabet != Alphabet::abcd)
    throw std::invalid_argument("reduce_mod_a2 requires the abcd alphabet");
  FreeWord r(Alphabet::abcd);
  for (int8_t raw : w.letters) {
    int8_t l = std::abs(raw) == kA ? static_cast<int8_t>(kA) : raw;
    if (!r.letters.empty()) {
      int8_t top = r.letters.back();
      if (top == -l || (std::abs(top) == kA && std::abs(l) == kA)) {
        r.letters.pop_back();
        continue;
      }
    }
    r.letters.push_back(l);
  }
  return r;
}

PairWord phi_bar(const StabWord &s) {
  if (s.alphabet != Alphabet::stab6)
    throw std::invalid_argument("phi_bar requires a stab6 word");
  // images over abcd, 0 = empty slot; ids: a=1,b=2,c=3,d=4
  static constexpr int8_t kLeft[7] = {0, 1, 1, 0, 3, 4, 2};
  static constexpr int8_t kRight[7] = {0, 3, 4, 2, 1, 1, 0};
  PairWord p{FreeWord(Alphabet::abcd), FreeWord(Alphabet::abcd)};
  for (int8_t l : s.letters) {
    int sym = std::abs(l);
    int8_t lv = kLeft[sym], rv = kRight[sym];
    if (lv) p.left.letters.push_back(l > 0 ? lv : static_cast<int8_t>(-lv));
    if (rv) p.right.letters.push_back(l > 0 ? rv : static_cast<int8_t>(-rv));
  }
  p.left = free_reduce(p.left);
  p.right = free_reduce(p.right);
  return p;
}

PairWord psi_pair(const FreeWord &w) { return phi_bar(rewrite_st1(w)); }

namespace {

// D8 as <a,d>: multiplication table built over canonical reduced words.
struct Dihedral8 {
  std::array<std::array<int, 2>, 8> right_mult;  // element x letter (0=a,1=d)
  std::array<std::string, 8> canon;

  Dihedral8() {
    // elements in BFS order from the identity, words with a < d
    const char *words[8] = {"", "a", "d", "ad", "da", "ada", "dad", "adad"};
    for (int i = 0; i < 8; ++i) canon[i] = words[i];
    // a = (0 1)(2 3), d = (1 3): reflections of the square with (ad) of order 4
    auto apply = [](int elem_perm[4], const std::string &word) {
      for (char c : word) {
        int tmp[4];
        for (int v = 0; v < 4; ++v) {
          int u = v;
          if (c == 'a') u = v ^ 1;                      // (0 1)(2 3)
          if (c == 'd') u = (v == 1) ? 3 : (v == 3 ? 1 : v);  // (1 3)
          tmp[v] = elem_perm ? elem_perm[u] : u;
        }
        for (int v = 0; v < 4; ++v) elem_perm[v] = tmp[v];
      }
    };
    int perms[8][4];
    for (int i = 0; i < 8; ++i) {
      for (int v = 0; v < 4; ++v) perms[i][v] = v;
      apply(perms[i], canon[i]);
    }
    for (int i = 0; i < 8; ++i)
      for (int letter = 0; letter < 2; ++letter) {
        int target[4];
        for (int v = 0; v < 4; ++v) target[v] = v;
        apply(target, canon[i] + (letter == 0 ? "a" : "d"));
        int found = -1;
        for (int j = 0; j < 8; ++j) {
          bool eq = true;
          for (int v = 0; v < 4; ++v)
            if (perms[j][v] != target[v]) eq = false;
          if (eq) {
            found = j;
            break;
          }
        }
        right_mult[i][letter] = found;
      }
  }
};

const Dihedral8 &d8() {
  static const Dihedral8 t;
  return t;
}

}  // namespace

FreeWord dihedral_normal_form(const FreeWord &w) {
  if (w.alphabet != Alphabet::ad)
    throw std::invalid_argument("dihedral_normal_form requires the ad alphabet");
  int e = 0;
  for (int8_t l : w.letters) e = d8().right_mult[e][std::abs(l) - 1];
  return parse_word(d8().canon[e], Alphabet::ad);
}

namespace {

// left/right letterwise tables of the composed map (decomposition after
// sigma): a -> (d,a), b -> (1,b), c -> (a,c), d -> (a,d).
// Left lands in <a,d>; 0=a, 1=d in the ad alphabet.
FreeWord lambda_left(const FreeWord &w) {
  static constexpr int8_t kL[5] = {0, 2, 0, 1, 1};  // ad ids: a=1,d=2
  FreeWord out(Alphabet::ad);
  for (int8_t l : w.letters) {
    int8_t v = kL[std::abs(l)];
    if (v) out.letters.push_back(l > 0 ? v : static_cast<int8_t>(-v));
  }
  return out;
}

FreeWord predecessor_word(PairFamily fam, int index) {
  const Substitution &sig = sigma_lysenok();
  switch (fam) {
    case PairFamily::u:
      if (index < 1) throw std::out_of_range("u-family index >= 1");
      return substitute(sig, lowercase_seed('u'), index - 1);
    case PairFamily::v:
      if (index < 1) throw std::out_of_range("v-family index >= 1");
      return substitute(sig, lowercase_seed('v'), index - 1);
    case PairFamily::w:
      if (index < 4) throw std::out_of_range("w-family needs n >= 4");
      return substitute(sig, lowercase_seed('w'), index - 4);
    case PairFamily::t:
      if (index < 4) throw std::out_of_range("t-family needs n >= 4");
      return substitute(sig, lowercase_seed('t'), index - 4);
    case PairFamily::U:
      if (index < 1) throw std::out_of_range("U-family index >= 1");
      return substitute(sig, capital_seed('U'), index - 1);
    case PairFamily::V:
      if (index < 1) throw std::out_of_range("V-family index >= 1");
      return substitute(sig, capital_seed('V'), index - 1);
    case PairFamily::W:
      if (index < 4) throw std::out_of_range("W-family needs n >= 4");
      return substitute(sig, capital_seed('W'), index - 4);
    case PairFamily::T:
      if (index < 4) throw std::out_of_range("T-family needs n >= 4");
      return substitute(sig, capital_seed('T'), index - 4);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace

bool verify_pair_identity(PairFamily fam, int index) {
  FreeWord pred = predecessor_word(fam, index);
  FreeWord member = substitute(sigma_lysenok(), pred, 1);
  PairWord p = psi_pair(member);
  // the left section must be an <a,d> word, trivial in the dihedral group
  FreeWord left_ad(Alphabet::ad);
  for (int8_t l : p.left.letters) {
    int g = std::abs(l);
    if (g == 2 || g == 3) return false;  // b or c escaped <a,d>
    int8_t v = g == 1 ? 1 : 2;
    left_ad.letters.push_back(l > 0 ? v : static_cast<int8_t>(-v));
  }
  if (!dihedral_normal_form(left_ad).empty()) return false;
  // the right section must freely reduce to the predecessor relator,
  // and must agree with the composed letterwise table on the left
  if (!(p.right == pred)) return false;
  return dihedral_normal_form(lambda_left(pred)).empty();
}

bool check_kernel_generators(int max_level) {
  std::vector<FreeWord> gens = {
      parse_word("a^2", Alphabet::abcd),  parse_word("b^2", Alphabet::abcd),
      parse_word("c^2", Alphabet::abcd),  parse_word("bcd", Alphabet::abcd),
      hopf_L(),
      substitute(sigma_lysenok(), capital_seed('U'), 0),
      substitute(sigma_lysenok(), capital_seed('U'), 1),
      substitute(sigma_lysenok(), capital_seed('V'), 0),
  };
  for (const FreeWord &g : gens) {
    PairWord p = psi_pair(g);
    for (int m = 1; m <= max_level; ++m) {
      if (!level_perm(p.left, m).is_identity()) return false;
      if (!level_perm(p.right, m).is_identity()) return false;
    }
  }
  return true;
}

}  // namespace grigq
