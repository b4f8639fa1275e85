#include "grigq/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace grigq {

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = BigInt(1);
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix &rhs) const {
  if (cols != rhs.rows) throw std::invalid_argument("matrix product shape");
  IntMatrix r(rows, rhs.cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < cols; ++k) {
      if (at(i, k).is_zero()) continue;
      for (size_t j = 0; j < rhs.cols; ++j)
        r.at(i, j) += at(i, k) * rhs.at(k, j);
    }
  return r;
}

BigInt IntMatrix::det() const {
  if (rows != cols) throw std::invalid_argument("det of non-square matrix");
  // Bareiss fraction-free elimination
  IntMatrix m = *this;
  BigInt prev(1);
  int sign = 1;
  for (size_t k = 0; k < rows; ++k) {
    if (m.at(k, k).is_zero()) {
      size_t p = k + 1;
      while (p < rows && m.at(p, k).is_zero()) ++p;
      if (p == rows) return BigInt(0);
      for (size_t j = 0; j < cols; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < rows; ++i)
      for (size_t j = k + 1; j < cols; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  BigInt d = m.at(rows - 1, cols - 1);
  return sign < 0 ? d.negate() : d;
}

namespace {

struct Working {
  IntMatrix d, u, v;

  void swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < d.cols; ++c) std::swap(d.at(i, c), d.at(j, c));
    for (size_t c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t r = 0; r < d.rows; ++r) std::swap(d.at(r, i), d.at(r, j));
    for (size_t r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  // row i -= q * row j
  void row_op(size_t i, size_t j, const BigInt &q) {
    if (q.is_zero()) return;
    for (size_t c = 0; c < d.cols; ++c) d.at(i, c) -= q * d.at(j, c);
    for (size_t c = 0; c < u.cols; ++c) u.at(i, c) -= q * u.at(j, c);
  }
  // col i -= q * col j
  void col_op(size_t i, size_t j, const BigInt &q) {
    if (q.is_zero()) return;
    for (size_t r = 0; r < d.rows; ++r) d.at(r, i) -= q * d.at(r, j);
    for (size_t r = 0; r < v.rows; ++r) v.at(r, i) -= q * v.at(r, j);
  }
  void negate_row(size_t i) {
    for (size_t c = 0; c < d.cols; ++c) d.at(i, c) = d.at(i, c).negate();
    for (size_t c = 0; c < u.cols; ++c) u.at(i, c) = u.at(i, c).negate();
  }
  // col j += col i (tracked)
  void col_add(size_t j, size_t i) {
    for (size_t r = 0; r < d.rows; ++r) d.at(r, j) += d.at(r, i);
    for (size_t r = 0; r < v.rows; ++r) v.at(r, j) += v.at(r, i);
  }
};

}  // namespace

SNFResult snf(const IntMatrix &a) {
  Working w;
  w.d = a;
  w.u = IntMatrix::identity(a.rows);
  w.v = IntMatrix::identity(a.cols);
  size_t n = std::min(a.rows, a.cols);

  for (size_t k = 0; k < n; ++k) {
    // find the entry of least nonzero magnitude in the trailing block
    size_t pi = k, pj = k;
    bool found = false;
    BigInt best;
    for (size_t i = k; i < a.rows; ++i)
      for (size_t j = k; j < a.cols; ++j) {
        const BigInt &x = w.d.at(i, j);
        if (x.is_zero()) continue;
        if (!found || x.abs() < best) {
          best = x.abs();
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    w.swap_rows(k, pi);
    w.swap_cols(k, pj);

    // clear row and column k, re-pivoting while remainders appear
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (size_t i = k + 1; i < a.rows; ++i) {
        if (w.d.at(i, k).is_zero()) continue;
        BigInt q = w.d.at(i, k) / w.d.at(k, k);
        w.row_op(i, k, q);
        if (!w.d.at(i, k).is_zero()) {
          w.swap_rows(k, i);  // remainder is smaller; use it as pivot
          dirty = true;
        }
      }
      for (size_t j = k + 1; j < a.cols; ++j) {
        if (w.d.at(k, j).is_zero()) continue;
        BigInt q = w.d.at(k, j) / w.d.at(k, k);
        w.col_op(j, k, q);
        if (!w.d.at(k, j).is_zero()) {
          w.swap_cols(k, j);
          dirty = true;
        }
      }
    }
    if (w.d.at(k, k).is_negative()) w.negate_row(k);
  }

  // enforce the divisibility chain d_k | d_{k+1}
  for (size_t k = 0; k + 1 < n; ++k) {
    for (size_t m = k; m + 1 < n; ++m) {
      const BigInt &x = w.d.at(m, m);
      const BigInt &y = w.d.at(m + 1, m + 1);
      if (x.is_zero() || y.is_zero()) continue;
      if ((y % x).is_zero()) continue;
      // standard 2x2 gcd repair: fold y's column into x's and re-clear
      w.col_add(m, m + 1);
      bool dirty = true;
      while (dirty) {
        dirty = false;
        BigInt q1 = w.d.at(m + 1, m) / w.d.at(m, m);
        w.row_op(m + 1, m, q1);
        if (!w.d.at(m + 1, m).is_zero()) {
          w.swap_rows(m, m + 1);
          dirty = true;
          continue;
        }
        BigInt q2 = w.d.at(m, m + 1) / w.d.at(m, m);
        w.col_op(m + 1, m, q2);
        if (!w.d.at(m, m + 1).is_zero()) {
          w.swap_cols(m, m + 1);
          dirty = true;
        }
      }
      if (w.d.at(m, m).is_negative()) w.negate_row(m);
      if (w.d.at(m + 1, m + 1).is_negative()) w.negate_row(m + 1);
    }
  }

  SNFResult res;
  res.d = w.d;
  res.u = w.u;
  res.v = w.v;
  return res;
}

std::vector<BigInt> SNFResult::invariant_factors() const {
  std::vector<BigInt> f;
  size_t n = std::min(d.rows, d.cols);
  for (size_t k = 0; k < n; ++k)
    if (!d.at(k, k).is_zero()) f.push_back(d.at(k, k));
  return f;
}

std::vector<BigInt> cokernel_invariants(const IntMatrix &a) {
  SNFResult s = snf(a);
  std::vector<BigInt> f = s.invariant_factors();
  while (f.size() < a.cols) f.push_back(BigInt(0));
  return f;
}

IntMatrix exponent_matrix(const PresentationFP &p) {
  IntMatrix m(p.relators.size(), p.ngens());
  for (size_t i = 0; i < p.relators.size(); ++i)
    for (int16_t l : p.relators[i]) {
      size_t j = static_cast<size_t>(std::abs(l)) - 1;
      m.at(i, j) += BigInt(l > 0 ? 1 : -1);
    }
  return m;
}

std::vector<BigInt> abelianization(const PresentationFP &p) {
  return cokernel_invariants(exponent_matrix(p));
}

F2Matrix::F2Matrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), limbs_((cols + 63) / 64), bits_(rows * limbs_, 0) {}

bool F2Matrix::get(size_t i, size_t j) const {
  return (bits_[i * limbs_ + j / 64] >> (j % 64)) & 1u;
}

void F2Matrix::set(size_t i, size_t j, bool v) {
  uint64_t mask = uint64_t{1} << (j % 64);
  if (v)
    bits_[i * limbs_ + j / 64] |= mask;
  else
    bits_[i * limbs_ + j / 64] &= ~mask;
}

void F2Matrix::xor_row(size_t dst, size_t src) {
  for (size_t l = 0; l < limbs_; ++l) bits_[dst * limbs_ + l] ^= bits_[src * limbs_ + l];
}

std::vector<size_t> F2Matrix::rref() {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols_ && r < rows_; ++c) {
    size_t p = r;
    while (p < rows_ && !get(p, c)) ++p;
    if (p == rows_) continue;
    if (p != r)
      for (size_t l = 0; l < limbs_; ++l)
        std::swap(bits_[p * limbs_ + l], bits_[r * limbs_ + l]);
    for (size_t i = 0; i < rows_; ++i)
      if (i != r && get(i, c)) xor_row(i, r);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t F2Matrix::rank() const {
  F2Matrix m = *this;
  return m.rref().size();
}

int f2_rank(const IntMatrix &a) {
  F2Matrix m(a.rows, a.cols);
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t j = 0; j < a.cols; ++j)
      if (!(a.at(i, j) % BigInt(2)).is_zero()) m.set(i, j, true);
  return static_cast<int>(m.rank());
}

}  // namespace grigq
