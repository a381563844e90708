#pragma once
//
// BigCount: exact nonnegative integer of unbounded magnitude, used for
// multiplicities in value multisets and level widths of the rooted trees.
// Thin RAII wrapper over GMP's mpz_t exposing only what the library needs.
//

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmp.h>

namespace macaev {

class BigCount {
 public:
  BigCount() { mpz_init(z_); }
  BigCount(std::uint64_t v) { mpz_init_set_ui(z_, v); }  // NOLINT: implicit by design
  BigCount(const BigCount& o) { mpz_init_set(z_, o.z_); }
  BigCount(BigCount&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  BigCount& operator=(const BigCount& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  BigCount& operator=(BigCount&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~BigCount() { mpz_clear(z_); }

  static BigCount from_decimal(const std::string& s);
  // 2^exponent
  static BigCount pow2(std::uint64_t exponent);

  std::string to_decimal() const;

  BigCount& operator+=(const BigCount& o) {
    mpz_add(z_, z_, o.z_);
    return *this;
  }
  BigCount& operator-=(const BigCount& o);  // requires *this >= o
  BigCount& operator*=(std::uint64_t m) {
    mpz_mul_ui(z_, z_, m);
    return *this;
  }
  friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
  friend BigCount operator-(BigCount a, const BigCount& b) { return a -= b; }
  friend BigCount operator*(BigCount a, std::uint64_t m) { return a *= m; }

  friend bool operator==(const BigCount& a, const BigCount& b) { return mpz_cmp(a.z_, b.z_) == 0; }
  friend bool operator!=(const BigCount& a, const BigCount& b) { return !(a == b); }
  friend bool operator<(const BigCount& a, const BigCount& b) { return mpz_cmp(a.z_, b.z_) < 0; }
  friend bool operator<=(const BigCount& a, const BigCount& b) { return mpz_cmp(a.z_, b.z_) <= 0; }
  friend bool operator>(const BigCount& a, const BigCount& b) { return b < a; }
  friend bool operator>=(const BigCount& a, const BigCount& b) { return b <= a; }

  bool is_zero() const { return mpz_sgn(z_) == 0; }
  bool fits_u64() const { return mpz_fits_ulong_p(z_) != 0; }
  std::uint64_t as_u64() const;  // requires fits_u64()

  // Nearest double; +inf once past the double range.
  double to_double() const;
  // Natural log; requires *this >= 1. Exact mantissa via mpz_get_d_2exp,
  // so the absolute error is a few ulps of the result.
  double log_natural() const;
  double log2() const;

  friend std::ostream& operator<<(std::ostream& os, const BigCount& c);

 private:
  mpz_t z_;
};

}  // namespace macaev
