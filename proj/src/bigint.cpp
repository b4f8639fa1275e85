#include "grigq/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace grigq {

BigInt::BigInt(int64_t v) {
  if (v == 0) {
    sign_ = 0;
    return;
  }
  sign_ = v > 0 ? 1 : -1;
  uint64_t m = v > 0 ? static_cast<uint64_t>(v) : 0ULL - static_cast<uint64_t>(v);
  mag_.push_back(static_cast<uint32_t>(m & 0xffffffffu));
  if (m >> 32) mag_.push_back(static_cast<uint32_t>(m >> 32));
}

BigInt BigInt::pow2(unsigned k) {
  BigInt r;
  r.sign_ = 1;
  r.mag_.assign(k / 32 + 1, 0);
  r.mag_[k / 32] = 1u << (k % 32);
  return r;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

BigInt BigInt::negate() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t> &a,
                                      const std::vector<uint32_t> &b) {
  const std::vector<uint32_t> &x = a.size() >= b.size() ? a : b;
  const std::vector<uint32_t> &y = a.size() >= b.size() ? b : a;
  std::vector<uint32_t> r(x.size() + 1, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    uint64_t s = carry + x[i] + (i < y.size() ? y[i] : 0);
    r[i] = static_cast<uint32_t>(s);
    carry = s >> 32;
  }
  r[x.size()] = static_cast<uint32_t>(carry);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t> &a,
                                      const std::vector<uint32_t> &b) {
  std::vector<uint32_t> r(a.size(), 0);
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (d < 0) {
      d += (1LL << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<uint32_t>(d);
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

int BigInt::cmp(const BigInt &rhs) const {
  if (sign_ != rhs.sign_) return sign_ < rhs.sign_ ? -1 : 1;
  int c = cmp_mag(mag_, rhs.mag_);
  return sign_ >= 0 ? c : -c;
}

BigInt BigInt::operator+(const BigInt &rhs) const {
  if (sign_ == 0) return rhs;
  if (rhs.sign_ == 0) return *this;
  BigInt r;
  if (sign_ == rhs.sign_) {
    r.sign_ = sign_;
    r.mag_ = add_mag(mag_, rhs.mag_);
  } else {
    int c = cmp_mag(mag_, rhs.mag_);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.sign_ = sign_;
      r.mag_ = sub_mag(mag_, rhs.mag_);
    } else {
      r.sign_ = rhs.sign_;
      r.mag_ = sub_mag(rhs.mag_, mag_);
    }
  }
  r.trim();
  return r;
}

BigInt BigInt::operator-(const BigInt &rhs) const { return *this + rhs.negate(); }

BigInt BigInt::operator*(const BigInt &rhs) const {
  if (sign_ == 0 || rhs.sign_ == 0) return BigInt();
  BigInt r;
  r.sign_ = sign_ * rhs.sign_;
  r.mag_.assign(mag_.size() + rhs.mag_.size(), 0);
  for (size_t i = 0; i < mag_.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < rhs.mag_.size(); ++j) {
      uint64_t cur = r.mag_[i + j] + carry +
                     static_cast<uint64_t>(mag_[i]) * rhs.mag_[j];
      r.mag_[i + j] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    size_t k = i + rhs.mag_.size();
    while (carry) {
      uint64_t cur = r.mag_[k] + carry;
      r.mag_[k] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  r.trim();
  return r;
}

void BigInt::mul_u32(uint32_t m) {
  if (m == 0 || sign_ == 0) {
    sign_ = 0;
    mag_.clear();
    return;
  }
  uint64_t carry = 0;
  for (auto &limb : mag_) {
    uint64_t cur = static_cast<uint64_t>(limb) * m + carry;
    limb = static_cast<uint32_t>(cur);
    carry = cur >> 32;
  }
  if (carry) mag_.push_back(static_cast<uint32_t>(carry));
}

void BigInt::divmod(const BigInt &num, const BigInt &den, BigInt &q, BigInt &r) {
  if (den.sign_ == 0) throw std::domain_error("BigInt: division by zero");
  if (cmp_mag(num.mag_, den.mag_) < 0) {
    q = BigInt();
    r = num;
    return;
  }
  // single-limb divisor: schoolbook short division
  if (den.mag_.size() == 1) {
    uint64_t d = den.mag_[0];
    std::vector<uint32_t> quo(num.mag_.size(), 0);
    uint64_t rem = 0;
    for (size_t i = num.mag_.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | num.mag_[i];
      quo[i] = static_cast<uint32_t>(cur / d);
      rem = cur % d;
    }
    q.mag_ = std::move(quo);
    q.sign_ = num.sign_ * den.sign_;
    q.trim();
    r = BigInt(static_cast<int64_t>(rem));
    r.sign_ = r.is_zero() ? 0 : num.sign_;
    return;
  }
  // up to 128/64-bit values: native division
  if (num.mag_.size() <= 4 && den.mag_.size() <= 2) {
    auto to128 = [](const std::vector<uint32_t> &m) {
      unsigned __int128 v = 0;
      for (size_t i = m.size(); i-- > 0;) v = (v << 32) | m[i];
      return v;
    };
    if (num.mag_.size() <= 4) {
      unsigned __int128 n = to128(num.mag_), d = to128(den.mag_);
      unsigned __int128 qq = n / d, rr = n % d;
      auto from128 = [](unsigned __int128 v) {
        std::vector<uint32_t> m;
        while (v) {
          m.push_back(static_cast<uint32_t>(v & 0xffffffffu));
          v >>= 32;
        }
        return m;
      };
      q.mag_ = from128(qq);
      q.sign_ = q.mag_.empty() ? 0 : num.sign_ * den.sign_;
      r.mag_ = from128(rr);
      r.sign_ = r.mag_.empty() ? 0 : num.sign_;
      return;
    }
  }
  // general case: shift-and-subtract on magnitudes
  size_t nbits = num.mag_.size() * 32;
  std::vector<uint32_t> rem;
  std::vector<uint32_t> quo(num.mag_.size(), 0);
  for (size_t i = nbits; i-- > 0;) {
    // rem = rem*2 + bit i of num
    uint32_t carry = 0;
    for (auto &limb : rem) {
      uint32_t nc = limb >> 31;
      limb = (limb << 1) | carry;
      carry = nc;
    }
    if (carry) rem.push_back(1);
    uint32_t bit = (num.mag_[i / 32] >> (i % 32)) & 1u;
    if (bit) {
      if (rem.empty())
        rem.push_back(1);
      else {
        std::vector<uint32_t> one{1};
        rem = add_mag(rem, one);
      }
    }
    if (cmp_mag(rem, den.mag_) >= 0) {
      rem = sub_mag(rem, den.mag_);
      quo[i / 32] |= 1u << (i % 32);
    }
  }
  q.mag_ = quo;
  q.sign_ = num.sign_ * den.sign_;
  q.trim();
  r.mag_ = rem;
  r.sign_ = num.sign_;
  r.trim();
}

BigInt BigInt::operator/(const BigInt &rhs) const {
  BigInt q, r;
  divmod(*this, rhs, q, r);
  return q;
}

BigInt BigInt::operator%(const BigInt &rhs) const {
  BigInt q, r;
  divmod(*this, rhs, q, r);
  return r;
}

BigInt BigInt::gcd(BigInt x, BigInt y) {
  x = x.abs();
  y = y.abs();
  while (!y.is_zero()) {
    BigInt r = x % y;
    x = y;
    y = r;
  }
  return x;
}

int BigInt::log2_exact() const {
  if (sign_ != 1) return -1;
  int k = -1;
  for (size_t i = 0; i < mag_.size(); ++i) {
    uint32_t limb = mag_[i];
    if (limb == 0) continue;
    if (limb & (limb - 1)) return -1;
    if (k >= 0) return -1;
    int b = 0;
    while ((limb & 1u) == 0) {
      limb >>= 1;
      ++b;
    }
    k = static_cast<int>(i) * 32 + b;
  }
  return k;
}

bool BigInt::fits_int64() const {
  if (mag_.size() > 2) return false;
  uint64_t m = 0;
  if (!mag_.empty()) m = mag_[0];
  if (mag_.size() == 2) m |= static_cast<uint64_t>(mag_[1]) << 32;
  if (sign_ >= 0) return m <= static_cast<uint64_t>(INT64_MAX);
  return m <= static_cast<uint64_t>(INT64_MAX) + 1;
}

int64_t BigInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
  uint64_t m = 0;
  if (!mag_.empty()) m = mag_[0];
  if (mag_.size() == 2) m |= static_cast<uint64_t>(mag_[1]) << 32;
  return sign_ >= 0 ? static_cast<int64_t>(m) : -static_cast<int64_t>(m);
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::vector<uint32_t> m = mag_;
  std::string digits;
  while (!m.empty()) {
    // divide magnitude by 10^9
    uint64_t rem = 0;
    for (size_t i = m.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | m[i];
      m[i] = static_cast<uint32_t>(cur / 1000000000ULL);
      rem = cur % 1000000000ULL;
    }
    while (!m.empty() && m.back() == 0) m.pop_back();
    for (int d = 0; d < 9; ++d) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string BigInt::to_pow2_string() const {
  int k = log2_exact();
  if (k == 0) return "1";
  if (k > 0) return "2^" + std::to_string(k);
  return to_string();
}

}  // namespace grigq
