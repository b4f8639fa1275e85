#ifndef GRIGQ_BIGINT_HPP
#define GRIGQ_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace grigq {

// Arbitrary-precision signed integer, sign + magnitude in base 2^32.
// Sized for group orders around 2^200 and small exact linear algebra;
// not a general-purpose bignum.
class BigInt {
 public:
  BigInt() : sign_(0) {}
  BigInt(int64_t v);

  static BigInt pow2(unsigned k);
  static BigInt gcd(BigInt x, BigInt y);

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  bool is_one() const;
  BigInt abs() const;
  BigInt negate() const;

  // -1, 0, 1 of (*this - rhs)
  int cmp(const BigInt &rhs) const;

  BigInt operator+(const BigInt &rhs) const;
  BigInt operator-(const BigInt &rhs) const;
  BigInt operator*(const BigInt &rhs) const;
  BigInt operator-() const { return negate(); }
  // truncated division (quotient rounds toward zero), as in C
  BigInt operator/(const BigInt &rhs) const;
  BigInt operator%(const BigInt &rhs) const;

  bool operator==(const BigInt &rhs) const { return cmp(rhs) == 0; }
  bool operator!=(const BigInt &rhs) const { return cmp(rhs) != 0; }
  bool operator<(const BigInt &rhs) const { return cmp(rhs) < 0; }
  bool operator<=(const BigInt &rhs) const { return cmp(rhs) <= 0; }
  bool operator>(const BigInt &rhs) const { return cmp(rhs) > 0; }
  bool operator>=(const BigInt &rhs) const { return cmp(rhs) >= 0; }

  BigInt &operator+=(const BigInt &rhs) { return *this = *this + rhs; }
  BigInt &operator-=(const BigInt &rhs) { return *this = *this - rhs; }
  BigInt &operator*=(const BigInt &rhs) { return *this = *this * rhs; }

  void mul_u32(uint32_t m);

  // exact log2 if the value is a power of two, otherwise -1
  int log2_exact() const;

  bool fits_int64() const;
  int64_t to_int64() const;  // throws if out of range

  std::string to_string() const;  // decimal
  // "2^k" when a power of two, decimal otherwise (report-friendly)
  std::string to_pow2_string() const;

 private:
  static void divmod(const BigInt &num, const BigInt &den, BigInt &q, BigInt &r);
  static int cmp_mag(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t> &a,
                                       const std::vector<uint32_t> &b);
  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t> &a,
                                       const std::vector<uint32_t> &b);
  void trim();

  int sign_;
  std::vector<uint32_t> mag_;  // little-endian limbs
};

}  // namespace grigq

#endif
