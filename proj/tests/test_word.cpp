#include "doctest.h"

#include "grigq/perm.hpp"
#include "grigq/report.hpp"
#include "grigq/tree.hpp"
#include "grigq/word.hpp"

using namespace grigq;

namespace {

FreeWord wd(const std::string &s) { return parse_word(s, Alphabet::abcd); }

FreeWord random_word(SplitMix64 &rng, size_t len, bool signs = true) {
  FreeWord w(Alphabet::abcd);
  for (size_t i = 0; i < len; ++i) {
    int8_t l = static_cast<int8_t>(1 + rng.below(4));
    if (signs && rng.below(2)) l = static_cast<int8_t>(-l);
    w.letters.push_back(l);
  }
  return w;
}

}  // namespace

TEST_CASE("word text format round-trips") {
  CHECK(to_text(wd("(ad)^4")) == "adadadad");
  CHECK(to_text(wd("adAD")) == "adAD");
  CHECK(to_text(wd("a^-3")) == "AAA");
  CHECK(to_text(wd("(ab)^-2")) == "BABA");
  CHECK(to_text(wd("b^2c^2d^2(bcd)^-2")) == "bbccddDCBDCB");
  SplitMix64 rng(7);
  for (int i = 0; i < 200; ++i) {
    FreeWord w = random_word(rng, rng.below(40));
    CHECK(parse_word(to_text(w), Alphabet::abcd).letters == w.letters);
  }
  CHECK_THROWS(parse_word("x", Alphabet::abcd));
  CHECK_THROWS(parse_word("d", Alphabet::abc));
}

TEST_CASE("free reduction") {
  CHECK(free_reduce(wd("aA")).empty());
  CHECK(to_text(free_reduce(wd("abBc"))) == "ac");
  CHECK(to_text(free_reduce(wd("(ad)^4"))) == "adadadad");
  // equality is by reduced form
  CHECK(wd("abBc") == wd("ac"));
}

TEST_CASE("involutive reduction") {
  CHECK(to_text(reduce_involutive(wd("bc"))) == "d");
  CHECK(reduce_involutive(wd("aa")).empty());
  CHECK(to_text(reduce_involutive(wd("dadbc"))) == "da");
  CHECK(to_text(reduce_involutive(wd("bcd"))).empty());
  SplitMix64 rng(11);
  for (int i = 0; i < 300; ++i) {
    FreeWord w = random_word(rng, rng.below(50));
    FreeWord r = reduce_involutive(w);
    CHECK(r.size() <= w.size());
    CHECK(reduce_involutive(r).letters == r.letters);  // idempotent
    // canonical alternating form: no two adjacent letters from {b,c,d}, no aa
    for (size_t j = 0; j + 1 < r.letters.size(); ++j) {
      bool both_k4 = r.letters[j] >= 2 && r.letters[j + 1] >= 2;
      bool both_a = r.letters[j] == 1 && r.letters[j + 1] == 1;
      CHECK(!both_k4);
      CHECK(!both_a);
    }
  }
}

TEST_CASE("substitutions") {
  CHECK(to_text(substitute(sigma_lysenok(), wd("ad"), 1)) == "acac");
  CHECK(to_text(substitute(sigma_lysenok(), wd("ac"), 1)) == "acab");
  FreeWord w = wd("adacab");
  CHECK(substitute(sigma_lysenok(), w, 0) == w);
  // homomorphism law over random pairs
  SplitMix64 rng(13);
  for (int i = 0; i < 100; ++i) {
    FreeWord u = random_word(rng, rng.below(12));
    FreeWord v = random_word(rng, rng.below(12));
    for (int k = 0; k <= 2; ++k) {
      FreeWord lhs = substitute(sigma_lysenok(), u * v, k);
      FreeWord rhs = substitute(sigma_lysenok(), u, k) * substitute(sigma_lysenok(), v, k);
      CHECK(lhs == rhs);
    }
  }
  // inverse letters map to inverse images
  CHECK(substitute(sigma_lysenok(), wd("A"), 1) == wd("ACA"));
}

TEST_CASE("relator families: exact content and counts") {
  RelatorFamily t13 = relator_family(FamilyKind::thm1, 3);
  REQUIRE(t13.words.size() == 8);
  CHECK(t13.words[0].word == wd("a^2"));
  CHECK(t13.words[4].word == wd("bcd"));
  CHECK(t13.words[5].role == "u_0");
  CHECK(t13.words[5].word == wd("(ad)^4"));
  CHECK(t13.words[6].role == "w_3");
  CHECK(t13.words[6].word == wd("(ac)^4"));
  CHECK(t13.words[7].role == "t_3");
  CHECK(t13.words[7].word == wd("(abac)^4"));

  for (int n = 3; n <= 8; ++n) {
    CHECK(relator_family(FamilyKind::thm1, n).words.size() == 2 * n + 2);
    CHECK(relator_family(FamilyKind::thm4, n).words.size() == 2 * n + 1);
    CHECK(relator_family(FamilyKind::hopf, n).words.size() == 2 * n + 2);
  }
  CHECK(relator_family(FamilyKind::lysenok, 10).words.size() == 5 + 22);
  CHECK(relator_family(FamilyKind::upsilon, 3).words.size() == 2);
  CHECK(relator_family(FamilyKind::omega, 4).words.size() == 8);
  CHECK_THROWS(relator_family(FamilyKind::thm1, 2));

  // every u_i is the i-th substitution image of (ad)^4, verbatim
  RelatorFamily t18 = relator_family(FamilyKind::thm1, 8);
  for (const auto &lw : t18.words)
    if (lw.role.rfind("u_", 0) == 0) {
      int i = std::stoi(lw.role.substr(2));
      CHECK(lw.word.letters ==
            substitute(sigma_lysenok(), wd("(ad)^4"), i).letters);
    }

  RelatorFamily h4 = relator_family(FamilyKind::hopf, 4);
  bool found_v0 = false;
  for (const auto &lw : h4.words)
    if (lw.role == "V_0") {
      found_v0 = true;
      CHECK(lw.word == wd("(adacac)^4a^-12c^-8d^-4"));
    }
  CHECK(found_v0);
}

TEST_CASE("capital relators have zero exponent sums") {
  for (char f : {'U', 'V', 'W', 'T'})
    for (long s : exponent_sums(capital_seed(f))) CHECK(s == 0);
  for (long s : exponent_sums(hopf_L())) CHECK(s == 0);
}

TEST_CASE("the substitution preserves the relation subgroups") {
  // sigma(K_n) lies in K_n: substituted relators still die in the level-n
  // quotient, for both generating sets of K_n
  for (int n = 3; n <= 6; ++n)
    for (FamilyKind kind : {FamilyKind::thm1, FamilyKind::hopf})
      for (const auto &lw : relator_family(kind, n).words) {
        FreeWord image = substitute(sigma_lysenok(), lw.word, 1);
        CHECK(level_perm(image, n).is_identity());
      }
}
