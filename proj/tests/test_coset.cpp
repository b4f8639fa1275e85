#include "doctest.h"

#include "grigq/coset.hpp"
#include "grigq/perm.hpp"
#include "grigq/presentation.hpp"

using namespace grigq;

namespace {

PresentationFP pres(const std::string &text) { return parse_presentation(text); }

uint64_t order_of(const std::string &text, TcStrategy s = TcStrategy::hlt,
                  uint64_t cap = 100000) {
  EnumResult r = enumerate_cosets(pres(text), cap, s);
  REQUIRE(r.complete);
  return r.order;
}

}  // namespace

TEST_CASE("small enumerations") {
  CHECK(order_of("gens: a\na^2") == 2);
  CHECK(order_of("gens: a\na^6") == 6);
  CHECK(order_of("gens: a b\na^2\nb^2\n(ab)^3") == 6);  // S3
  CHECK(order_of("gens: a b\na^2\nb^2\n(ab)^4") == 8);  // D8
  CHECK(order_of("gens: x y\nx^4\nxxYY\nYxyx") == 8);   // Q8
  // heavy-collapse presentation of the trivial group
  CHECK(order_of("gens: x y\nxyXYY\nyxYXX") == 1);
  // free group on one generator does not terminate: overflow reported
  EnumResult f = enumerate_cosets(pres("gens: a\naA"), 100, TcStrategy::hlt);
  CHECK_FALSE(f.complete);
}

TEST_CASE("both strategies agree on the corpus") {
  const char *corpus[] = {
      "gens: a\na^2",
      "gens: a b\na^2\nb^2\n(ab)^3",
      "gens: a b\na^2\nb^2\n(ab)^4",
      "gens: x y\nx^4\nxxYY\nYxyx",
      "gens: x y\nxyXYY\nyxYXX",
  };
  for (const char *c : corpus)
    CHECK(order_of(c, TcStrategy::hlt) == order_of(c, TcStrategy::felsch));
}

TEST_CASE("adding relators never increases the order") {
  std::pair<const char *, const char *> pairs[] = {
      {"gens: a\na^6", "gens: a\na^6\na^4"},
      {"gens: a b\na^2\nb^2\n(ab)^4", "gens: a b\na^2\nb^2\n(ab)^4\n(ab)^2"},
      {"gens: a b\na^2\nb^2\n(ab)^4", "gens: a b\na^2\nb^2\n(ab)^4\nab"},
  };
  for (auto [weak, strong] : pairs) CHECK(order_of(weak) >= order_of(strong));
}

TEST_CASE("level-quotient presentations enumerate to the right orders") {
  PresentationFP t13 = presentation_from_family(relator_family(FamilyKind::thm1, 3));
  EnumResult r13 = enumerate_cosets(t13, 1000000);
  REQUIRE(r13.complete);
  CHECK(r13.order == 128);

  PresentationFP t43 = presentation_from_family(relator_family(FamilyKind::thm4, 3));
  EnumResult r43 = enumerate_cosets(t43, 1000000);
  REQUIRE(r43.complete);
  CHECK(r43.order == 128);

  PresentationFP t44 = presentation_from_family(relator_family(FamilyKind::thm4, 4));
  EnumResult r44 = enumerate_cosets(t44, 1000000);
  REQUIRE(r44.complete);
  CHECK(r44.order == 4096);

  // oracle equivalence with the stabilizer chain
  CHECK(BigInt(static_cast<int64_t>(r44.order)) == quotient_group(4).order());

  // both strategies on a level presentation
  EnumResult f43 = enumerate_cosets(t43, 1000000, TcStrategy::felsch);
  REQUIRE(f43.complete);
  CHECK(f43.order == r43.order);
}

TEST_CASE("presentation certificates") {
  CHECK(presentation_certificate(CertKind::thm1, 3, 1000000).ok());
  CHECK(presentation_certificate(CertKind::thm4, 3, 1000000).ok());
  CHECK(presentation_certificate(CertKind::thm4, 4, 1000000).ok());
  CertResult w = presentation_certificate(CertKind::lemma1_wreath, 3, 1000000);
  CHECK(w.ok());
  CHECK(w.enumerated_order == 128);
  // overflow is reported distinctly, not as failure to surject
  CertResult o = presentation_certificate(CertKind::thm1, 4, 64);
  CHECK(o.overflowed);
  CHECK(o.surjects);
}

TEST_CASE("presentation text format round-trips") {
  std::string text = "gens: a b c d\naa\nbb\ncc\ndd\nbcd\nadadadad\n";
  PresentationFP p = parse_presentation(text);
  CHECK(p.ngens() == 4);
  CHECK(p.relators.size() == 6);
  CHECK(serialize_presentation(p) == text);
  std::vector<bool> flags = p.involution_flags();
  CHECK(flags == std::vector<bool>{true, true, true, true});
  PresentationFP q = parse_presentation("gens: a b\n# comment line\n(ab)^2\nA^2\n");
  CHECK(q.relators[0] == std::vector<int16_t>{1, 2, 1, 2});
  CHECK(q.relators[1] == std::vector<int16_t>{-1, -1});
  CHECK_THROWS(parse_presentation("a^2\n"));
}
