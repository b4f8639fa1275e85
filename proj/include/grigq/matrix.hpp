#ifndef GRIGQ_MATRIX_HPP
#define GRIGQ_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "grigq/bigint.hpp"
#include "grigq/presentation.hpp"

namespace grigq {

// Dense matrix of exact integers.
struct IntMatrix {
  size_t rows = 0, cols = 0;
  std::vector<BigInt> a;  // row-major

  IntMatrix() = default;
  IntMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
  BigInt &at(size_t i, size_t j) { return a[i * cols + j]; }
  const BigInt &at(size_t i, size_t j) const { return a[i * cols + j]; }
  static IntMatrix identity(size_t n);
  IntMatrix operator*(const IntMatrix &rhs) const;
  bool operator==(const IntMatrix &rhs) const { return rows == rhs.rows && cols == rhs.cols && [&]{
    for (size_t i = 0; i < a.size(); ++i) if (!(a[i] == rhs.a[i])) return false;
    return true; }(); }
  BigInt det() const;  // exact, via fraction-free elimination (small sizes)
};

// Smith normal form U*A*V = D with unimodular U, V and d_i | d_{i+1}.
struct SNFResult {
  IntMatrix d, u, v;
  std::vector<BigInt> invariant_factors() const;  // nonzero diagonal entries
};

SNFResult snf(const IntMatrix &a);

// Invariant factors of the cokernel Z^cols / rowspan(A): the nonzero
// diagonal of the SNF padded with zeros for the free part.
std::vector<BigInt> cokernel_invariants(const IntMatrix &a);

// exponent-sum matrix of the relators (rows) over the generators (cols)
IntMatrix exponent_matrix(const PresentationFP &p);

// Invariant factors of the abelianized presentation, units included,
// zeros marking free rank.
std::vector<BigInt> abelianization(const PresentationFP &p);

// Bit-packed matrix over F2.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(size_t rows, size_t cols);
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool get(size_t i, size_t j) const;
  void set(size_t i, size_t j, bool v);
  void xor_row(size_t dst, size_t src);  // row dst ^= row src
  size_t rank() const;
  // reduced row echelon form in place; returns pivot columns
  std::vector<size_t> rref();

 private:
  size_t rows_ = 0, cols_ = 0, limbs_ = 0;
  std::vector<uint64_t> bits_;
};

int f2_rank(const IntMatrix &a);

}  // namespace grigq

#endif
