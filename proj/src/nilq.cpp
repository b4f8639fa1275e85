#include "grigq/nilq.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace grigq {

namespace {

// ---- checked 64-bit arithmetic ----

int64_t ck_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("nilq: int64 overflow");
  return r;
}

int64_t ck_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("nilq: int64 overflow");
  return r;
}

// ---- truncated Magnus series over 4 letters, total degree <= 4 ----

constexpr int kOffset[6] = {0, 1, 5, 21, 85, 341};
constexpr int kSeriesLen = 341;

struct Series {
  std::array<int64_t, kSeriesLen> c{};

  static Series one() {
    Series s;
    s.c[0] = 1;
    return s;
  }
};

Series mul(const Series &x, const Series &y) {
  Series r;
  for (int d1 = 0; d1 <= 4; ++d1) {
    int n1 = kOffset[d1 + 1] - kOffset[d1];
    for (int v1 = 0; v1 < n1; ++v1) {
      int64_t a = x.c[kOffset[d1] + v1];
      if (a == 0) continue;
      for (int d2 = 0; d1 + d2 <= 4; ++d2) {
        int n2 = kOffset[d2 + 1] - kOffset[d2];
        int base = kOffset[d1 + d2] + v1 * n2;
        for (int v2 = 0; v2 < n2; ++v2) {
          int64_t b = y.c[kOffset[d2] + v2];
          if (b == 0) continue;
          r.c[base + v2] = ck_add(r.c[base + v2], ck_mul(a, b));
        }
      }
    }
  }
  return r;
}

Series inverse(const Series &x) {
  if (x.c[0] != 1) throw std::logic_error("series inverse needs unit constant term");
  Series n = x;
  n.c[0] = 0;  // n = x - 1
  Series r = Series::one();
  Series p = Series::one();
  for (int k = 1; k <= 4; ++k) {
    p = mul(p, n);
    for (int i = 0; i < kSeriesLen; ++i)
      r.c[i] = ck_add(r.c[i], (k % 2 ? -p.c[i] : p.c[i]));
  }
  return r;
}

// x^e with binomial expansion of (1+n)^e; exact for any integer e
Series letter_power(int letter, int64_t e) {
  Series r = Series::one();
  int64_t binom = 1;
  for (int k = 1; k <= 4; ++k) {
    // binom = C(e, k)
    binom = ck_mul(binom, e - (k - 1)) / k;
    int idx = 0;
    for (int t = 0; t < k; ++t) idx = idx * 4 + letter;
    r.c[kOffset[k] + idx] = binom;
  }
  return r;
}

Series pow(const Series &x, int64_t e) {
  if (e == 0) return Series::one();
  Series base = e > 0 ? x : inverse(x);
  int64_t n = e > 0 ? e : -e;
  Series r = Series::one();
  while (n > 0) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

Series word_series(const FreeWord &w) {
  if (w.alphabet != Alphabet::abcd && w.alphabet != Alphabet::abc)
    throw std::invalid_argument("collect: word must be over abcd or abc");
  Series r = Series::one();
  for (int8_t l : w.letters) r = mul(r, letter_power(std::abs(l) - 1, l > 0 ? 1 : -1));
  return r;
}

Series commutator(const Series &x, const Series &y) {
  return mul(mul(inverse(x), inverse(y)), mul(x, y));
}

// ---- Hall basis ----

std::vector<HallElement> build_basis(bool with_second) {
  std::vector<HallElement> b;
  for (int x = 0; x < 4; ++x) b.push_back({1, {x}, {}});
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < x; ++y) b.push_back({2, {x, y}, {}});
  std::sort(b.begin() + 4, b.end(), [](const HallElement &l, const HallElement &r) {
    return l.letters < r.letters;
  });
  size_t w2_begin = 4;
  size_t w2_end = b.size();
  for (size_t p = w2_begin; p < w2_end; ++p) {
    int x = b[p].letters[0], y = b[p].letters[1];
    for (int z = y; z < 4; ++z) b.push_back({3, {x, y, z}, {}});
  }
  std::sort(b.begin() + w2_end, b.end(), [](const HallElement &l, const HallElement &r) {
    return l.letters < r.letters;
  });
  size_t w3_end = b.size();
  for (size_t p = w2_end; p < w3_end; ++p) {
    int x = b[p].letters[0], y = b[p].letters[1], z = b[p].letters[2];
    for (int t = z; t < 4; ++t) b.push_back({4, {x, y, z, t}, {}});
  }
  std::sort(b.begin() + w3_end, b.end(), [](const HallElement &l, const HallElement &r) {
    return l.letters < r.letters;
  });
  if (with_second) {
    // [[x1,y1],[x2,y2]] with the first factor above the second
    for (size_t p = w2_begin; p < w2_end; ++p)
      for (size_t q = w2_begin; q < p; ++q)
        b.push_back({4, b[p].letters, b[q].letters});
  }
  return b;
}

Series hall_series(const HallElement &h) {
  auto letter = [](int x) { return letter_power(x, 1); };
  if (!h.second.empty()) {
    Series l = commutator(letter(h.letters[0]), letter(h.letters[1]));
    Series r = commutator(letter(h.second[0]), letter(h.second[1]));
    return commutator(l, r);
  }
  Series s = letter(h.letters[0]);
  for (size_t i = 1; i < h.letters.size(); ++i) s = commutator(s, letter(h.letters[i]));
  return s;
}

// Lie expansion of a Hall element in the degree-w tensor coordinates
std::vector<int64_t> lie_expand(const HallElement &h) {
  auto bracket = [](const std::vector<int64_t> &u, int du,
                    const std::vector<int64_t> &v, int dv) {
    int nu = kOffset[du + 1] - kOffset[du];
    int nv = kOffset[dv + 1] - kOffset[dv];
    std::vector<int64_t> r(kOffset[du + dv + 1] - kOffset[du + dv], 0);
    for (int i = 0; i < nu; ++i) {
      if (u[i] == 0) continue;
      for (int j = 0; j < nv; ++j) {
        if (v[j] == 0) continue;
        int64_t p = ck_mul(u[i], v[j]);
        r[i * nv + j] = ck_add(r[i * nv + j], p);   // u (x) v
        r[j * nu + i] = ck_add(r[j * nu + i], -p);  // - v (x) u
      }
    }
    return r;
  };
  auto letter_vec = [](int x) {
    std::vector<int64_t> v(4, 0);
    v[x] = 1;
    return v;
  };
  if (!h.second.empty()) {
    auto l = bracket(letter_vec(h.letters[0]), 1, letter_vec(h.letters[1]), 1);
    auto r = bracket(letter_vec(h.second[0]), 1, letter_vec(h.second[1]), 1);
    return bracket(l, 2, r, 2);
  }
  std::vector<int64_t> v = letter_vec(h.letters[0]);
  int d = 1;
  for (size_t i = 1; i < h.letters.size(); ++i) {
    v = bracket(v, d, letter_vec(h.letters[i]), 1);
    ++d;
  }
  return v;
}

// exact integer solver: expresses a degree-w Lie vector in Hall coordinates
class LieSolver {
 public:
  LieSolver(int weight, const std::vector<const HallElement *> &elems) : w_(weight) {
    nmon_ = kOffset[w_ + 1] - kOffset[w_];
    nb_ = elems.size();
    rows_.resize(nb_);
    t_ = std::vector<std::vector<int64_t>>(nb_, std::vector<int64_t>(nb_, 0));
    for (size_t i = 0; i < nb_; ++i) {
      rows_[i] = lie_expand(*elems[i]);
      t_[i][i] = 1;
    }
    // integer row echelon with unimodular transform
    size_t r = 0;
    for (int c = 0; c < nmon_ && r < nb_; ++c) {
      while (true) {
        size_t best = nb_;
        for (size_t i = r; i < nb_; ++i)
          if (rows_[i][c] != 0 &&
              (best == nb_ || std::abs(rows_[i][c]) < std::abs(rows_[best][c])))
            best = i;
        if (best == nb_) break;
        std::swap(rows_[r], rows_[best]);
        std::swap(t_[r], t_[best]);
        bool clean = true;
        for (size_t i = r + 1; i < nb_; ++i) {
          if (rows_[i][c] == 0) continue;
          int64_t q = rows_[i][c] / rows_[r][c];
          row_sub(i, r, q);
          if (rows_[i][c] != 0) clean = false;
        }
        if (clean) {
          pivot_col_.push_back(c);
          ++r;
          break;
        }
      }
    }
    rank_ = r;
  }

  // solves e * B = L; throws if L is not in the row lattice
  std::vector<int64_t> solve(const std::vector<int64_t> &target) const {
    std::vector<int64_t> l = target;
    std::vector<int64_t> f(nb_, 0);
    for (size_t r = 0; r < rank_; ++r) {
      int c = pivot_col_[r];
      if (l[c] % rows_[r][c] != 0)
        throw std::logic_error("lie solve: coordinate not integral");
      int64_t q = l[c] / rows_[r][c];
      f[r] = q;
      if (q != 0)
        for (int j = 0; j < nmon_; ++j) l[j] = ck_add(l[j], -ck_mul(q, rows_[r][j]));
    }
    for (int j = 0; j < nmon_; ++j)
      if (l[j] != 0) throw std::logic_error("lie solve: vector outside the Lie lattice");
    std::vector<int64_t> e(nb_, 0);
    for (size_t r = 0; r < rank_; ++r)
      if (f[r] != 0)
        for (size_t j = 0; j < nb_; ++j) e[j] = ck_add(e[j], ck_mul(f[r], t_[r][j]));
    return e;
  }

 private:
  void row_sub(size_t i, size_t r, int64_t q) {
    if (q == 0) return;
    for (int j = 0; j < nmon_; ++j) rows_[i][j] = ck_add(rows_[i][j], -ck_mul(q, rows_[r][j]));
    for (size_t j = 0; j < nb_; ++j) t_[i][j] = ck_add(t_[i][j], -ck_mul(q, t_[r][j]));
  }

  int w_;
  int nmon_;
  size_t nb_;
  size_t rank_ = 0;
  std::vector<int> pivot_col_;
  std::vector<std::vector<int64_t>> rows_;
  std::vector<std::vector<int64_t>> t_;
};

struct NilContext {
  std::vector<HallElement> basis;       // 75
  std::vector<HallElement> basis_full;  // 90
  std::vector<Series> elem_series;      // per basis_full element
  std::vector<const HallElement *> by_weight_full[5];
  std::vector<size_t> full_index_by_weight[5];  // indices into basis_full
  const LieSolver *solver[5] = {nullptr, nullptr, nullptr, nullptr, nullptr};

  NilContext() {
    basis = build_basis(false);
    basis_full = build_basis(true);
    if (basis.size() != kNilCoords || basis_full.size() != 90)
      throw std::logic_error("hall basis sizes");
    int sizes[5] = {0, 4, 6, 20, 60};
    for (int w = 1; w <= 4; ++w) {
      for (size_t i = 0; i < basis_full.size(); ++i)
        if (basis_full[i].weight == w) {
          by_weight_full[w].push_back(&basis_full[i]);
          full_index_by_weight[w].push_back(i);
        }
      if (static_cast<int>(by_weight_full[w].size()) != sizes[w])
        throw std::logic_error("hall basis weight sizes");
      solver[w] = new LieSolver(w, by_weight_full[w]);
    }
    for (const auto &h : basis_full) elem_series.push_back(hall_series(h));
  }
};

const NilContext &ctx() {
  static const NilContext c;
  return c;
}

// full 90-coordinate extraction; exact (asserts the residual is trivial)
std::array<int64_t, 90> extract_full(Series s) {
  const NilContext &cx = ctx();
  std::array<int64_t, 90> out{};
  for (int w = 1; w <= 4; ++w) {
    int nmon = kOffset[w + 1] - kOffset[w];
    std::vector<int64_t> target(nmon);
    for (int j = 0; j < nmon; ++j) target[j] = s.c[kOffset[w] + j];
    std::vector<int64_t> e = cx.solver[w]->solve(target);
    // peel the collected weight-w block A_w off on the left:
    // s = A_w * rest, so rest = (e_k^{-c_k} ... e_1^{-c_1}) * s
    Series inv_block = Series::one();
    for (size_t k = e.size(); k-- > 0;) {
      size_t full_idx = cx.full_index_by_weight[w][k];
      out[full_idx] = e[k];
      if (e[k] != 0) inv_block = mul(inv_block, pow(cx.elem_series[full_idx], -e[k]));
    }
    s = mul(inv_block, s);
    for (int j = 0; j < nmon; ++j)
      if (s.c[kOffset[w] + j] != 0)
        throw std::logic_error("collect: weight part did not divide off");
  }
  if (s.c[0] != 1) throw std::logic_error("collect: residual not trivial");
  for (int i = 1; i < kSeriesLen; ++i)
    if (s.c[i] != 0) throw std::logic_error("collect: residual not trivial");
  return out;
}

NilElement from_full(const std::array<int64_t, 90> &full) {
  NilElement n;
  for (int i = 0; i < kNilCoords; ++i) n.e[i] = full[i];
  return n;
}

Series reconstruct(const NilElement &x) {
  const NilContext &cx = ctx();
  Series s = Series::one();
  for (int i = 0; i < kNilCoords; ++i)
    if (x.e[i] != 0) s = mul(s, pow(cx.elem_series[i], x.e[i]));
  return s;
}

NilElement extract(const Series &s) { return from_full(extract_full(s)); }

}  // namespace

std::string HallElement::name() const {
  auto letters_str = [](const std::vector<int> &ls) {
    std::string s = "[";
    for (size_t i = 0; i < ls.size(); ++i) {
      if (i) s += ",";
      s += static_cast<char>('a' + ls[i]);
    }
    return s + "]";
  };
  if (second.empty()) return letters_str(letters);
  return "[" + letters_str(letters) + "," + letters_str(second) + "]";
}

const std::vector<HallElement> &hall_basis() { return ctx().basis; }
const std::vector<HallElement> &hall_basis_full() { return ctx().basis_full; }

bool NilElement::is_identity() const {
  for (int64_t v : e)
    if (v) return false;
  return true;
}

NilElement collect(const FreeWord &w) { return extract(word_series(w)); }

NilElement nil_mul(const NilElement &x, const NilElement &y) {
  return extract(mul(reconstruct(x), reconstruct(y)));
}

NilElement nil_inverse(const NilElement &x) { return extract(inverse(reconstruct(x))); }

NilElement nil_commutator(const NilElement &x, const NilElement &y) {
  return extract(commutator(reconstruct(x), reconstruct(y)));
}

FreeWord comm_word(const FreeWord &w1, const FreeWord &w2) {
  return w1.inverse() * w2.inverse() * w1 * w2;
}

namespace {

// ---- the relation lattice of Q_n ----

// Integer row-echelon lattice over the 71 weight >= 2 coordinates, in
// exact big-integer arithmetic (naive elimination can blow up entries).
// add() reduces against existing rows (gcd-combining in place when the
// pivot does not divide) and reports whether the lattice grew; for a basis
// in echelon form a member always reduces straight to zero.
class Lattice {
 public:
  bool add(std::vector<BigInt> v) {
    bool changed = false;
    auto leading = [](const std::vector<BigInt> &x) {
      for (int c = 0; c < kQnCoords; ++c)
        if (!x[c].is_zero()) return c;
      return -1;
    };
    size_t r = 0;
    while (true) {
      int lead = leading(v);
      if (lead < 0) return changed;
      while (r < rows_.size() && pivot_[r] < lead) ++r;
      if (r == rows_.size() || pivot_[r] > lead) {
        rows_.insert(rows_.begin() + r, std::move(v));
        pivot_.insert(pivot_.begin() + r, lead);
        reduce_row(r);
        for (size_t rr = 0; rr < r; ++rr) reduce_entry(rr, r);
        return true;
      }
      // same pivot column: Euclid until v clears it
      while (!v[lead].is_zero()) {
        const BigInt &p = rows_[r][lead];
        if (!(p.abs() > v[lead].abs())) {
          BigInt q = v[lead] / p;
          for (int j = lead; j < kQnCoords; ++j) v[j] -= q * rows_[r][j];
        }
        if (!v[lead].is_zero()) {
          std::swap(rows_[r], v);
          changed = true;
          reduce_row(r);
          for (size_t rr = 0; rr < r; ++rr) reduce_entry(rr, r);
        }
      }
      ++r;
    }
  }

  const std::vector<std::vector<BigInt>> &rows() const { return rows_; }

 private:
  // keep entries small: reduce the row's later columns by deeper pivots
  void reduce_row(size_t r) {
    for (size_t s = r + 1; s < rows_.size(); ++s) reduce_entry(r, s);
  }
  // reduce row r at the pivot column of the deeper row s
  void reduce_entry(size_t r, size_t s) {
    int c = pivot_[s];
    if (rows_[r][c].is_zero()) return;
    BigInt q = rows_[r][c] / rows_[s][c];
    if (q.is_zero()) return;
    for (int j = c; j < kQnCoords; ++j) rows_[r][j] -= q * rows_[s][j];
  }

  std::vector<std::vector<BigInt>> rows_;
  std::vector<int> pivot_;
};

std::vector<BigInt> to_big(const std::vector<int64_t> &v) {
  std::vector<BigInt> out;
  out.reserve(v.size());
  for (int64_t x : v) out.push_back(BigInt(x));
  return out;
}

std::vector<int64_t> weight2_part(const std::array<int64_t, 90> &full) {
  for (int i = 0; i < kWeight2Offset; ++i)
    if (full[i] != 0) throw std::logic_error("expected a commutator-subgroup element");
  std::vector<int64_t> v(kQnCoords);
  for (int i = 0; i < kQnCoords; ++i) v[i] = full[kWeight2Offset + i];
  return v;
}

// commutation with generator x as a linear map on weight >= 2 coordinates
std::vector<std::vector<int64_t>> commutation_matrix(int x) {
  const NilContext &cx = ctx();
  std::vector<std::vector<int64_t>> m(kQnCoords);
  Series lx = letter_power(x, 1);
  for (int i = 0; i < kQnCoords; ++i) {
    const Series &u = cx.elem_series[kWeight2Offset + i];
    m[i] = weight2_part(extract_full(commutator(u, lx)));
  }
  return m;
}

}  // namespace

std::vector<int64_t> QnGroup::reduce(const std::vector<int64_t> &raw) const {
  if (raw.size() != kQnCoords) throw std::invalid_argument("qn reduce: size");
  std::vector<int64_t> out(kQnCoords);
  for (int j = 0; j < kQnCoords; ++j) {
    BigInt acc(0);
    for (int i = 0; i < kQnCoords; ++i)
      if (raw[i] != 0) acc += BigInt(raw[i]) * vmat.at(i, j);
    BigInt m = acc % BigInt(factors[j]);
    if (m.is_negative()) m += BigInt(factors[j]);
    out[j] = m.to_int64();
  }
  return out;
}

QnGroup qn_build(int n) {
  if (n < 3) throw std::out_of_range("qn_build needs n >= 3");
  const NilContext &cx = ctx();
  RelatorFamily fam = relator_family(FamilyKind::hopf, n);

  // commutators of relators with all basis elements of weight <= 3
  std::vector<Series> rel_series;
  for (const auto &lw : fam.words) rel_series.push_back(word_series(lw.word));
  std::vector<std::vector<int64_t>> cand;
  for (int i = 0; i < 30; ++i) {
    const Series &w = cx.elem_series[i];
    for (const Series &r : rel_series)
      cand.push_back(weight2_part(extract_full(commutator(w, r))));
  }

  // Commutation with a generator is linear on the weight >= 2 coordinates
  // and raises weight, so three applications vanish: the saturated lattice
  // is spanned by the images up to depth two.
  std::vector<std::vector<std::vector<int64_t>>> cmat;
  for (int x = 0; x < 4; ++x) cmat.push_back(commutation_matrix(x));
  auto apply_i = [&](const std::vector<int64_t> &v, int x) {
    std::vector<int64_t> r(kQnCoords, 0);
    for (int i = 0; i < kQnCoords; ++i)
      if (v[i] != 0)
        for (int j = 0; j < kQnCoords; ++j)
          if (cmat[x][i][j] != 0) r[j] = ck_add(r[j], ck_mul(v[i], cmat[x][i][j]));
    return r;
  };
  auto nonzero = [](const std::vector<int64_t> &v) {
    for (int64_t x : v)
      if (x) return true;
    return false;
  };
  size_t layer_begin = 0;
  for (int depth = 0; depth < 2; ++depth) {
    size_t layer_end = cand.size();
    for (size_t i = layer_begin; i < layer_end; ++i)
      for (int x = 0; x < 4; ++x) {
        std::vector<int64_t> img = apply_i(cand[i], x);
        if (nonzero(img)) cand.push_back(std::move(img));
      }
    layer_begin = layer_end;
  }
  // deepest vectors first keeps the echelon entries small
  std::stable_sort(cand.begin(), cand.end(),
                   [&](const std::vector<int64_t> &a, const std::vector<int64_t> &b) {
                     auto lead = [](const std::vector<int64_t> &x) {
                       for (int c = 0; c < kQnCoords; ++c)
                         if (x[c] != 0) return c;
                       return kQnCoords;
                     };
                     return lead(a) > lead(b);
                   });
  Lattice lat;
  for (const auto &v : cand) lat.add(to_big(v));

  // fixed-point certificate: one more full commutation round adds nothing
  bool fixed = true;
  {
    std::vector<std::vector<BigInt>> snapshot = lat.rows();
    auto apply_b = [&](const std::vector<BigInt> &v, int x) {
      std::vector<BigInt> r(kQnCoords, BigInt(0));
      for (int i = 0; i < kQnCoords; ++i)
        if (!v[i].is_zero())
          for (int j = 0; j < kQnCoords; ++j)
            if (cmat[x][i][j] != 0) r[j] += v[i] * BigInt(cmat[x][i][j]);
      return r;
    };
    for (const auto &row : snapshot)
      for (int x = 0; x < 4 && fixed; ++x)
        if (lat.add(apply_b(row, x))) fixed = false;
    for (int i = 0; i < 30 && fixed; ++i)
      for (const Series &r : rel_series) {
        if (lat.add(to_big(weight2_part(extract_full(commutator(cx.elem_series[i], r)))))) {
          fixed = false;
          break;
        }
      }
  }

  QnGroup q;
  q.level = n;
  q.saturation_fixed_point = fixed;
  const auto &rows = lat.rows();
  q.relation_rank = static_cast<int>(rows.size());
  IntMatrix m(rows.size(), kQnCoords);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < kQnCoords; ++j) m.at(i, j) = rows[i][j];
  SNFResult s = snf(m);
  q.vmat = s.v;
  q.factors.assign(kQnCoords, 0);
  for (int j = 0; j < kQnCoords; ++j) {
    BigInt d = j < static_cast<int>(std::min(s.d.rows, s.d.cols)) ? s.d.at(j, j) : BigInt(0);
    if (d.is_zero()) throw std::logic_error("qn_build: quotient is not finite");
    q.factors[j] = d.to_int64();
  }
  return q;
}

std::vector<int64_t> qn_image(const FreeWord &w, const QnGroup &q) {
  for (long s : exponent_sums(w))
    if (s != 0) throw std::invalid_argument("qn_image needs zero exponent sums");
  return q.reduce(weight2_part(extract_full(word_series(w))));
}

namespace {

int64_t coord_order(const std::vector<int64_t> &coords, const QnGroup &q) {
  int64_t ord = 1;
  for (int j = 0; j < kQnCoords; ++j) {
    if (coords[j] == 0) continue;
    int64_t d = q.factors[j] / std::gcd(coords[j], q.factors[j]);
    ord = std::lcm(ord, d);
  }
  return ord;
}

}  // namespace

int64_t qn_order(const FreeWord &w, const QnGroup &q) {
  return coord_order(qn_image(w, q), q);
}

int qn_rank(const std::vector<FreeWord> &words, const QnGroup &q) {
  F2Matrix m(words.size(), kQnCoords);
  for (size_t i = 0; i < words.size(); ++i) {
    std::vector<int64_t> c = qn_image(words[i], q);
    if (coord_order(c, q) > 2)
      throw std::invalid_argument("qn_rank: image has order > 2");
    for (int j = 0; j < kQnCoords; ++j)
      if (c[j] != 0) m.set(i, j, true);  // c_j = factors_j / 2
  }
  return static_cast<int>(m.rank());
}

std::vector<int64_t> qn_basis_image(size_t hall_index, const QnGroup &q) {
  if (hall_index < kWeight2Offset || hall_index >= kNilCoords)
    throw std::out_of_range("qn_basis_image takes weight >= 2 elements");
  std::vector<int64_t> raw(kQnCoords, 0);
  raw[hall_index - kWeight2Offset] = 1;
  return q.reduce(raw);
}

}  // namespace grigq
