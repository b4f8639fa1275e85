#include "doctest.h"

#include "grigq/perm.hpp"
#include "grigq/report.hpp"
#include "grigq/stab.hpp"
#include "grigq/tree.hpp"
#include "grigq/word.hpp"

using namespace grigq;

namespace {

FreeWord wd(const std::string &s) { return parse_word(s, Alphabet::abcd); }

FreeWord random_even_word(SplitMix64 &rng, size_t len) {
  FreeWord w(Alphabet::abcd);
  size_t a_count = 0;
  for (size_t i = 0; i < len; ++i) {
    int8_t l = static_cast<int8_t>(1 + rng.below(4));
    if (l == 1) ++a_count;
    if (rng.below(2)) l = static_cast<int8_t>(-l);
    w.letters.push_back(l);
  }
  if (a_count % 2) w.letters.push_back(1);
  return w;
}

// independent dihedral model: (rotation mod 4, flip), a and d reflections
struct D8Oracle {
  using Elem = std::pair<int, int>;
  static Elem id() { return {0, 0}; }
  static Elem mul(Elem x, Elem y) {
    // (rho^r1 phi^f1)(rho^r2 phi^f2) = rho^(r1 +- r2) phi^(f1+f2)
    int rot = (x.first + (x.second ? (4 - y.first) % 4 : y.first)) % 4;
    return {rot, x.second ^ y.second};
  }
  static Elem gen(int8_t letter) {
    // a = flip, d = rotate-then-flip; both involutions
    return std::abs(letter) == 1 ? Elem{0, 1} : Elem{1, 1};
  }
  static Elem fold(const FreeWord &w) {
    Elem e = id();
    for (int8_t l : w.letters) e = mul(e, gen(l));
    return e;
  }
};

}  // namespace

TEST_CASE("schreier rewriting into the stabilizer alphabet") {
  StabWord b = rewrite_st1(wd("b"));
  REQUIRE(b.letters.size() == 1);
  CHECK(b.letters[0] == 1);  // b
  StabWord ba = rewrite_st1(wd("aba"));
  REQUIRE(ba.letters.size() == 1);
  CHECK(ba.letters[0] == 4);  // b^a
  // u_0 = (ad)^4 rewrites to d^a d d^a d
  StabWord u0 = rewrite_st1(wd("(ad)^4"));
  CHECK(u0.letters == std::vector<int8_t>{6, 3, 6, 3});
  CHECK_THROWS(rewrite_st1(wd("ab")));  // odd a-count

  // forgetful round-trip modulo a^2
  SplitMix64 rng(17);
  for (int i = 0; i < 200; ++i) {
    FreeWord w = random_even_word(rng, rng.below(30));
    FreeWord back = forget_stab(rewrite_st1(w));
    CHECK(reduce_mod_a2(back).letters == reduce_mod_a2(w).letters);
  }
}

TEST_CASE("the level-1 decomposition map") {
  PairWord b = phi_bar(rewrite_st1(wd("b")));
  CHECK(to_text(b.left) == "a");
  CHECK(to_text(b.right) == "c");
  PairWord da = phi_bar(rewrite_st1(wd("ada")));  // d^a
  CHECK(to_text(da.left) == "b");
  CHECK(da.right.empty());
  PairWord dd = phi_bar(rewrite_st1(wd("d(ada)")));
  CHECK(to_text(dd.left) == "b");
  CHECK(to_text(dd.right) == "b");

  // diagram commutativity with the tree sections
  SplitMix64 rng(19);
  for (int i = 0; i < 40; ++i) {
    FreeWord w = random_even_word(rng, rng.below(20));
    PairWord p = psi_pair(w);
    int n = 2 + static_cast<int>(rng.below(5));
    Perm full = level_perm(w, n);
    Perm left = level_perm(p.left, n - 1);
    Perm right = level_perm(p.right, n - 1);
    uint32_t half = uint32_t{1} << (n - 1);
    for (uint32_t x = 0; x < half; ++x) {
      CHECK(full[x] == left[x]);
      CHECK(full[half + x] == half + right[x]);
    }
  }
}

TEST_CASE("dihedral normal form") {
  CHECK(dihedral_normal_form(parse_word("(ad)^4", Alphabet::ad)).empty());
  CHECK(to_text(dihedral_normal_form(parse_word("ada", Alphabet::ad))) == "ada");
  CHECK(to_text(dihedral_normal_form(parse_word("d(ad)^5d", Alphabet::ad))) == "da");
  CHECK(to_text(dihedral_normal_form(parse_word("dada", Alphabet::ad))) == "adad");

  // oracle: all words of length <= 6 against the independent model
  std::vector<FreeWord> words{FreeWord(Alphabet::ad)};
  for (size_t i = 0; i < words.size(); ++i) {
    FreeWord w = words[i];
    if (w.size() >= 6) continue;
    for (int8_t l : {int8_t{1}, int8_t{2}, int8_t{-1}, int8_t{-2}}) {
      FreeWord e = w;
      e.letters.push_back(l);
      words.push_back(e);
    }
  }
  for (const auto &u : words) {
    auto fu = D8Oracle::fold(u);
    CHECK((fu == D8Oracle::id()) == dihedral_normal_form(u).empty());
    // canonical forms agree exactly when the oracle elements agree
    for (size_t j = 0; j < 40 && j < words.size(); ++j) {
      const auto &v = words[j];
      bool same_oracle = fu == D8Oracle::fold(v);
      bool same_canon =
          dihedral_normal_form(u).letters == dihedral_normal_form(v).letters;
      CHECK(same_oracle == same_canon);
    }
  }
}

TEST_CASE("pair identities for the substitution families") {
  for (int i = 1; i <= 10; ++i) {
    CHECK(verify_pair_identity(PairFamily::u, i));
    CHECK(verify_pair_identity(PairFamily::v, i));
    CHECK(verify_pair_identity(PairFamily::U, i));
    CHECK(verify_pair_identity(PairFamily::V, i));
  }
  for (int n = 4; n <= 10; ++n) {
    CHECK(verify_pair_identity(PairFamily::w, n));
    CHECK(verify_pair_identity(PairFamily::t, n));
    CHECK(verify_pair_identity(PairFamily::W, n));
    CHECK(verify_pair_identity(PairFamily::T, n));
  }
  CHECK_THROWS(verify_pair_identity(PairFamily::u, 0));
  CHECK_THROWS(verify_pair_identity(PairFamily::W, 3));
}

TEST_CASE("kernel generators decompose trivially") {
  CHECK(check_kernel_generators(6));
  // B_2 = b^2 maps to (a^2, c^2)
  PairWord p = psi_pair(wd("b^2"));
  CHECK(to_text(p.left) == "aa");
  CHECK(to_text(p.right) == "cc");
}
