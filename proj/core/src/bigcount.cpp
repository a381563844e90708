#include "macaevlab/bigcount.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "macaevlab/errors.hpp"

namespace macaev {

BigCount BigCount::from_decimal(const std::string& s) {
  BigCount c;
  if (s.empty() || mpz_set_str(c.z_, s.c_str(), 10) != 0 || mpz_sgn(c.z_) < 0) {
    throw InputError("BigCount: invalid decimal string '" + s + "'");
  }
  return c;
}

BigCount BigCount::pow2(std::uint64_t exponent) {
  BigCount c;
  mpz_set_ui(c.z_, 1);
  mpz_mul_2exp(c.z_, c.z_, exponent);
  return c;
}

std::string BigCount::to_decimal() const {
  char* raw = mpz_get_str(nullptr, 10, z_);
  std::string s(raw);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(raw, s.size() + 1);
  return s;
}

BigCount& BigCount::operator-=(const BigCount& o) {
  if (mpz_cmp(z_, o.z_) < 0) throw InputError("BigCount: subtraction would go negative");
  mpz_sub(z_, z_, o.z_);
  return *this;
}

std::uint64_t BigCount::as_u64() const {
  if (!fits_u64()) throw InputError("BigCount: value does not fit in 64 bits");
  return mpz_get_ui(z_);
}

double BigCount::to_double() const {
  // mpz_get_d truncates toward zero and returns inf past the range.
  double d = mpz_get_d(z_);
  return d;
}

double BigCount::log_natural() const {
  if (mpz_sgn(z_) <= 0) throw InputError("BigCount: log of zero");
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, z_);  // value = mant * 2^exp2, mant in [0.5, 1)
  return std::log(mant) + static_cast<double>(exp2) * M_LN2;
}

double BigCount::log2() const { return log_natural() / M_LN2; }

std::ostream& operator<<(std::ostream& os, const BigCount& c) { return os << c.to_decimal(); }

}  // namespace macaev
