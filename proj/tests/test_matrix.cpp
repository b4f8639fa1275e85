#include "doctest.h"

#include <algorithm>

#include "grigq/matrix.hpp"
#include "grigq/report.hpp"
#include "grigq/word.hpp"

using namespace grigq;

namespace {

IntMatrix from_rows(const std::vector<std::vector<int64_t>> &rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = BigInt(rows[i][j]);
  return m;
}

// gcd of all k x k minors, computed by brute force over index subsets
BigInt minor_gcd(const IntMatrix &m, size_t k) {
  std::vector<size_t> ri(m.rows), ci(m.cols);
  for (size_t i = 0; i < m.rows; ++i) ri[i] = i;
  for (size_t j = 0; j < m.cols; ++j) ci[j] = j;
  std::vector<bool> rsel(m.rows, false), csel(m.cols, false);
  std::fill(rsel.end() - static_cast<long>(k), rsel.end(), true);
  BigInt g(0);
  do {
    std::vector<size_t> rs;
    for (size_t i = 0; i < m.rows; ++i)
      if (rsel[i]) rs.push_back(i);
    std::fill(csel.begin(), csel.end(), false);
    std::fill(csel.end() - static_cast<long>(k), csel.end(), true);
    do {
      std::vector<size_t> cs;
      for (size_t j = 0; j < m.cols; ++j)
        if (csel[j]) cs.push_back(j);
      IntMatrix sub(k, k);
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(rs[i], cs[j]);
      g = BigInt::gcd(g, sub.det());
    } while (std::next_permutation(csel.begin(), csel.end()));
  } while (std::next_permutation(rsel.begin(), rsel.end()));
  return g;
}

std::vector<BigInt> minors_oracle(const IntMatrix &m) {
  std::vector<BigInt> factors;
  BigInt prev(1);
  for (size_t k = 1; k <= std::min(m.rows, m.cols); ++k) {
    BigInt g = minor_gcd(m, k);
    if (g.is_zero()) break;
    factors.push_back(g / prev);
    prev = g;
  }
  return factors;
}

}  // namespace

TEST_CASE("smith normal form on the stated examples") {
  SNFResult d22 = snf(from_rows({{2, 0}, {0, 2}}));
  CHECK(d22.invariant_factors() == std::vector<BigInt>{BigInt(2), BigInt(2)});
  SNFResult tri = snf(from_rows({{2, 1}, {0, 2}}));
  CHECK(tri.invariant_factors() == std::vector<BigInt>{BigInt(1), BigInt(4)});
  IntMatrix lemma7 =
      from_rows({{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 1, 1, 1}});
  CHECK(snf(lemma7).invariant_factors().size() == 4);  // integral rank 4
  CHECK(f2_rank(lemma7) == 1);                          // only the last row survives mod 2
}

TEST_CASE("snf transforms are exact and unimodular") {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
    IntMatrix m(r, c);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j)
        m.at(i, j) = BigInt(static_cast<int64_t>(rng.below(9)) - 4);
    SNFResult s = snf(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(s.u.det().abs().is_one());
    CHECK(s.v.det().abs().is_one());
    std::vector<BigInt> f = s.invariant_factors();
    for (size_t k = 0; k + 1 < f.size(); ++k) CHECK((f[k + 1] % f[k]).is_zero());
    CHECK(f == minors_oracle(m));
    // rank over F2 equals the mod-2 rank of the diagonal
    CHECK(f2_rank(m) == f2_rank(s.d));
  }
}

TEST_CASE("abelianizations of the level presentations") {
  auto drop_units = [](std::vector<BigInt> v) {
    std::vector<BigInt> out;
    for (const auto &x : v)
      if (!x.is_one()) out.push_back(x);
    return out;
  };
  std::vector<BigInt> c222{BigInt(2), BigInt(2), BigInt(2)};
  for (int n = 3; n <= 6; ++n) {
    PresentationFP p4 = presentation_from_family(relator_family(FamilyKind::thm4, n));
    CHECK(drop_units(abelianization(p4)) == c222);
    PresentationFP p1 = presentation_from_family(relator_family(FamilyKind::thm1, n));
    CHECK(drop_units(abelianization(p1)) == c222);
  }
  PresentationFP t13 = presentation_from_family(relator_family(FamilyKind::thm1, 3));
  std::vector<BigInt> raw = abelianization(t13);
  CHECK(raw == std::vector<BigInt>{BigInt(1), BigInt(2), BigInt(2), BigInt(2)});
  // no relators: free of rank 3
  PresentationFP free3;
  free3.gens = {"a", "b", "c"};
  CHECK(abelianization(free3) == std::vector<BigInt>{BigInt(0), BigInt(0), BigInt(0)});
}

TEST_CASE("f2 matrices") {
  IntMatrix id4 = IntMatrix::identity(4);
  CHECK(f2_rank(id4) == 4);
  CHECK(f2_rank(IntMatrix(3, 5)) == 0);
  F2Matrix m(3, 4);
  m.set(0, 0, true);
  m.set(1, 0, true);
  m.set(1, 1, true);
  m.set(2, 1, true);
  CHECK(m.rank() == 2);
}
