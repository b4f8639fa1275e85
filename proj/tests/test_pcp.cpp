#include "doctest.h"

#include <array>

#include "grigq/coset.hpp"
#include "grigq/pcp.hpp"
#include "grigq/perm.hpp"
#include "grigq/presentation.hpp"
#include "grigq/report.hpp"

using namespace grigq;

namespace {

PresentationFP pres(const std::string &text) { return parse_presentation(text); }

// ---- brute-force 2-cocycle oracle over an explicit multiplication table ----

struct Table {
  int n;
  std::vector<int> mul;  // n x n
  int at(int x, int y) const { return mul[x * n + y]; }
};

Table cyclic(int n) {
  Table t{n, std::vector<int>(n * n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t.mul[x * n + y] = (x + y) % n;
  return t;
}

Table direct(const Table &a, const Table &b) {
  Table t{a.n * b.n, std::vector<int>(a.n * b.n * a.n * b.n)};
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y) {
      int xa = x / b.n, xb = x % b.n, ya = y / b.n, yb = y % b.n;
      t.mul[x * t.n + y] = a.at(xa, ya) * b.n + b.at(xb, yb);
    }
  return t;
}

Table dihedral8() {
  // (r, f) pairs encoded r + 4f
  Table t{8, std::vector<int>(64)};
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int r1 = x % 4, f1 = x / 4, r2 = y % 4, f2 = y / 4;
      int r = (r1 + (f1 ? 4 - r2 : r2)) % 4;
      t.mul[x * 8 + y] = r % 4 + 4 * (f1 ^ f2);
    }
  return t;
}

Table quaternion8() {
  // 1,-1,i,-i,j,-j,k,-k as 0..7; sign bit = index & 1
  auto enc = [](int unit, int sign) { return unit * 2 + (sign < 0 ? 1 : 0); };
  Table t{8, std::vector<int>(64)};
  // unit products: table over {1,i,j,k} with signs
  const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int sign_mul[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int ux = x / 2, sx = x % 2 ? -1 : 1;
      int uy = y / 2, sy = y % 2 ? -1 : 1;
      t.mul[x * 8 + y] = enc(unit_mul[ux][uy], sx * sy * sign_mul[ux][uy]);
    }
  return t;
}

// dim H^2(G, F2) by brute force: cocycles modulo coboundaries
int cocycle_dim(const Table &t) {
  int n = t.n;
  auto var = [&](int x, int y) { return x * n + y; };
  F2Matrix z(static_cast<size_t>(n) * n * n, static_cast<size_t>(n) * n);
  size_t row = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int w = 0; w < n; ++w) {
        // f(x,y) + f(xy,w) + f(y,w) + f(x,yw) = 0
        z.set(row, static_cast<size_t>(var(x, y)),
              z.get(row, static_cast<size_t>(var(x, y))) ^ true);
        z.set(row, static_cast<size_t>(var(t.at(x, y), w)),
              z.get(row, static_cast<size_t>(var(t.at(x, y), w))) ^ true);
        z.set(row, static_cast<size_t>(var(y, w)),
              z.get(row, static_cast<size_t>(var(y, w))) ^ true);
        z.set(row, static_cast<size_t>(var(x, t.at(y, w))),
              z.get(row, static_cast<size_t>(var(x, t.at(y, w))) ) ^ true);
        ++row;
      }
  int dim_z = n * n - static_cast<int>(z.rank());
  // coboundaries: delta g(x,y) = g(x) + g(y) + g(xy)
  F2Matrix b(static_cast<size_t>(n), static_cast<size_t>(n) * n);
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        bool v = (x == g) ^ (y == g) ^ (t.at(x, y) == g);
        if (v) b.set(static_cast<size_t>(g), static_cast<size_t>(var(x, y)),
                     b.get(static_cast<size_t>(g), static_cast<size_t>(var(x, y))) ^ true);
      }
  int dim_b = static_cast<int>(b.rank());
  return dim_z - dim_b;
}

}  // namespace

TEST_CASE("2-quotients of small presentations") {
  CHECK(pquotient(pres("gens: x\nx^2"), 10).order() == BigInt(2));
  CHECK(pquotient(pres("gens: x\nx^4"), 10).order() == BigInt(4));
  CHECK(pquotient(pres("gens: x\nx^4"), 10).stabilized);
  CHECK(pquotient(pres("gens: x y\nx^2\ny^2\nxyXY"), 10).order() == BigInt(4));
  CHECK(pquotient(pres("gens: a b\na^2\nb^2\n(ab)^4"), 10).order() == BigInt(8));
  CHECK(pquotient(pres("gens: x y\nx^4\nxxYY\nYxyx"), 10).order() == BigInt(8));
  // largest 2-quotient of S3 is C2
  CHECK(pquotient(pres("gens: a b\na^2\nb^2\n(ab)^3"), 10).order() == BigInt(2));
  // class cap: C4 needs class 2
  CHECK_FALSE(pquotient(pres("gens: x\nx^4"), 1).stabilized);
}

TEST_CASE("2-quotients of the level presentations") {
  PcPresentation g3 = pquotient(
      presentation_from_family(relator_family(FamilyKind::thm4, 3)), 10);
  CHECK(g3.stabilized);
  CHECK(g3.order() == BigInt::pow2(7));
  PcPresentation g3a = pquotient(
      presentation_from_family(relator_family(FamilyKind::thm1, 3)), 10);
  CHECK(g3a.order() == BigInt::pow2(7));
  PcPresentation g4 = pquotient(
      presentation_from_family(relator_family(FamilyKind::thm1, 4)), 20);
  CHECK(g4.order() == BigInt::pow2(12));
  // cross-oracle with the stabilizer chain and the coset enumeration
  CHECK(g4.order() == quotient_group(4).order());
  EnumResult tc = enumerate_cosets(
      presentation_from_family(relator_family(FamilyKind::thm4, 4)), 1000000);
  REQUIRE(tc.complete);
  PcPresentation g4m = pquotient(
      presentation_from_family(relator_family(FamilyKind::thm4, 4)), 20);
  CHECK(g4m.order() == BigInt(static_cast<int64_t>(tc.order)));
}

TEST_CASE("covers of the cyclic and elementary groups") {
  PCover c2 = p_cover(pquotient(pres("gens: x\nx^2"), 10));
  CHECK(c2.multiplicator_dim == 1);
  CHECK(c2.cover.order() == BigInt(4));  // the cover of C2 is C4
  PCover v4 = p_cover(pquotient(pres("gens: x y\nx^2\ny^2\nxyXY"), 10));
  CHECK(v4.multiplicator_dim == 3);
}

TEST_CASE("cover dimension matches the brute-force cocycle oracle") {
  struct Case {
    const char *presentation;
    Table table;
  };
  std::vector<Case> cases;
  cases.push_back({"gens: x\nx^2", cyclic(2)});
  cases.push_back({"gens: x\nx^4", cyclic(4)});
  cases.push_back({"gens: x\nx^8", cyclic(8)});
  cases.push_back({"gens: x y\nx^2\ny^2\nxyXY", direct(cyclic(2), cyclic(2))});
  cases.push_back({"gens: x y\nx^4\ny^2\nxyXY", direct(cyclic(4), cyclic(2))});
  cases.push_back(
      {"gens: x y z\nx^2\ny^2\nz^2\nxyXY\nxzXZ\nyzYZ", direct(direct(cyclic(2), cyclic(2)), cyclic(2))});
  cases.push_back({"gens: a b\na^2\nb^2\n(ab)^4", dihedral8()});
  cases.push_back({"gens: x y\nx^4\nxxYY\nYxyx", quaternion8()});
  for (const auto &c : cases) {
    PCover cover = p_cover(pquotient(pres(c.presentation), 12));
    CHECK(cover.multiplicator_dim == cocycle_dim(c.table));
  }
}

TEST_CASE("multiplier reports") {
  MultiplierReport m3 = multiplier_report(3);
  CHECK(m3.h2_dim == 7);
  CHECK(m3.schur_mod2_rank == 4);
  CHECK(m3.def_lower == 4);
  CHECK(m3.def_upper == 4);
  CHECK(m3.relators_independent);
  CHECK(m3.relator_rank == 7);
  CHECK(m3.group_order == BigInt::pow2(7));

  MultiplierReport m4 = multiplier_report(4);
  CHECK(m4.h2_dim == 9);
  CHECK(m4.schur_mod2_rank == 6);
  CHECK(m4.relators_independent);
}

TEST_CASE("relator images in the multiplicator") {
  PresentationFP p = presentation_from_family(relator_family(FamilyKind::thm4, 3));
  PCover cover = p_cover(pquotient(p, 20));
  F2Matrix imgs = relator_images(p, cover);
  CHECK(imgs.rows() == 7);
  CHECK(imgs.rank() == 7);
  // appending a duplicate relator leaves the rank unchanged
  PresentationFP dup = p;
  dup.relators.push_back(p.relators.back());
  F2Matrix imgs2 = relator_images(dup, cover);
  CHECK(imgs2.rows() == 8);
  CHECK(imgs2.rank() == 7);
  // a word that survives in the quotient cannot land in the multiplicator
  PresentationFP bad = p;
  bad.relators.push_back({1});
  CHECK_THROWS(relator_images(bad, cover));
}

TEST_CASE("multiplicator dimension is invariant under relabeling") {
  PresentationFP p = presentation_from_family(relator_family(FamilyKind::thm4, 3));
  PCover base = p_cover(pquotient(p, 20));
  // permute relators
  PresentationFP shuffled = p;
  std::rotate(shuffled.relators.begin(), shuffled.relators.begin() + 3,
              shuffled.relators.end());
  PCover rot = p_cover(pquotient(shuffled, 20));
  CHECK(rot.multiplicator_dim == base.multiplicator_dim);
  // relabel generators a<->c (conjugate data: swap ids 1 and 3)
  PresentationFP relabeled = p;
  for (auto &rel : relabeled.relators)
    for (auto &l : rel) {
      int g = std::abs(l);
      if (g == 1 || g == 3) {
        int ng = 4 - g;
        l = static_cast<int16_t>(l > 0 ? ng : -ng);
      }
    }
  PCover rel = p_cover(pquotient(relabeled, 20));
  CHECK(rel.multiplicator_dim == base.multiplicator_dim);
}

TEST_CASE("independence certificates") {
  PresentationFP t43 = presentation_from_family(relator_family(FamilyKind::thm4, 3));
  IndependenceData d43 = independence_certificate(t43);
  CHECK(d43.multiplicator_dim == 7);
  CHECK(d43.independent);
  // the four-generator presentation has one extra multiplicator dimension
  PresentationFP t13 = presentation_from_family(relator_family(FamilyKind::thm1, 3));
  IndependenceData d13 = independence_certificate(t13);
  CHECK(d13.multiplicator_dim == 8);
  CHECK(d13.relator_count == 8);
  CHECK(d13.independent);
}

TEST_CASE("two collection routes agree") {
  PcPresentation g3 = pquotient(
      presentation_from_family(relator_family(FamilyKind::thm4, 3)), 10);
  SplitMix64 rng(61);
  for (int i = 0; i < 100; ++i) {
    F2Vec u = g3.identity(), v = g3.identity();
    for (int g = 0; g < g3.ngens; ++g) {
      if (rng.below(2)) u.set(static_cast<size_t>(g), true);
      if (rng.below(2)) v.set(static_cast<size_t>(g), true);
    }
    F2Vec direct_prod = g3.multiply(u, v);
    // alternate route through inverses: (v^-1 u^-1)^-1
    F2Vec alt = g3.inverse(g3.multiply(g3.inverse(v), g3.inverse(u)));
    CHECK(direct_prod == alt);
  }
}
