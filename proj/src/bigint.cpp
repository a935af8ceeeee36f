#include "triac/bigint.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace triac {

namespace {

constexpr std::uint64_t kBase = 1ull << 32;

bool fits_u64(const std::vector<std::uint32_t>& mag) { return mag.size() <= 2; }

std::uint64_t to_u64(const std::vector<std::uint32_t>& mag) {
  std::uint64_t v = 0;
  if (mag.size() > 1) v = static_cast<std::uint64_t>(mag[1]) << 32;
  if (!mag.empty()) v |= mag[0];
  return v;
}

std::vector<std::uint32_t> from_u64(std::uint64_t v) {
  std::vector<std::uint32_t> mag;
  while (v != 0) {
    mag.push_back(static_cast<std::uint32_t>(v));
    v >>= 32;
  }
  return mag;
}

std::size_t bit_length(const std::vector<std::uint32_t>& mag) {
  if (mag.empty()) return 0;
  return 32 * (mag.size() - 1) + (32 - std::countl_zero(mag.back()));
}

bool get_bit(const std::vector<std::uint32_t>& mag, std::size_t i) {
  return (mag[i / 32] >> (i % 32)) & 1u;
}

void set_bit(std::vector<std::uint32_t>& mag, std::size_t i) {
  if (mag.size() <= i / 32) mag.resize(i / 32 + 1, 0);
  mag[i / 32] |= (1u << (i % 32));
}

// mag = mag * m + c, in place
void mul_add_small(std::vector<std::uint32_t>& mag, std::uint32_t m,
                   std::uint32_t c) {
  std::uint64_t carry = c;
  for (auto& limb : mag) {
    std::uint64_t t = static_cast<std::uint64_t>(limb) * m + carry;
    limb = static_cast<std::uint32_t>(t);
    carry = t >> 32;
  }
  while (carry != 0) {
    mag.push_back(static_cast<std::uint32_t>(carry));
    carry >>= 32;
  }
}

// mag /= d, returns remainder
std::uint32_t divmod_small(std::vector<std::uint32_t>& mag, std::uint32_t d) {
  std::uint64_t rem = 0;
  for (std::size_t i = mag.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | mag[i];
    mag[i] = static_cast<std::uint32_t>(cur / d);
    rem = cur % d;
  }
  while (!mag.empty() && mag.back() == 0) mag.pop_back();
  return static_cast<std::uint32_t>(rem);
}

}  // namespace

BigInt::BigInt(long long value) {
  if (value == 0) return;
  sign_ = value < 0 ? -1 : 1;
  std::uint64_t mag = value < 0 ? 0ull - static_cast<std::uint64_t>(value)
                                : static_cast<std::uint64_t>(value);
  mag_ = from_u64(mag);
}

void BigInt::trim(Mag& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

void BigInt::set_mag(Mag m, int sign) {
  trim(m);
  mag_ = std::move(m);
  sign_ = mag_.empty() ? 0 : sign;
}

int BigInt::cmp_mag(const Mag& a, const Mag& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

BigInt::Mag BigInt::add_mag(const Mag& a, const Mag& b) {
  const Mag& lo = a.size() < b.size() ? a : b;
  const Mag& hi = a.size() < b.size() ? b : a;
  Mag out;
  out.reserve(hi.size() + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    std::uint64_t t = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
    out.push_back(static_cast<std::uint32_t>(t));
    carry = t >> 32;
  }
  if (carry) out.push_back(static_cast<std::uint32_t>(carry));
  return out;
}

BigInt::Mag BigInt::sub_mag(const Mag& a, const Mag& b) {
  Mag out;
  out.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t t = static_cast<std::int64_t>(a[i]) - borrow -
                     (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (t < 0) {
      t += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.push_back(static_cast<std::uint32_t>(t));
  }
  trim(out);
  return out;
}

BigInt::Mag BigInt::mul_mag(const Mag& a, const Mag& b) {
  if (a.empty() || b.empty()) return {};
  Mag out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t t = static_cast<std::uint64_t>(a[i]) * b[j] + out[i + j] +
                        carry;
      out[i + j] = static_cast<std::uint32_t>(t);
      carry = t >> 32;
    }
    std::size_t k = i + b.size();
    while (carry != 0) {
      std::uint64_t t = out[k] + carry;
      out[k] = static_cast<std::uint32_t>(t);
      carry = t >> 32;
      ++k;
    }
  }
  trim(out);
  return out;
}

void BigInt::divmod_mag(const Mag& num, const Mag& den, Mag& quot, Mag& rem) {
  quot.clear();
  rem.clear();
  if (cmp_mag(num, den) < 0) {
    rem = num;
    return;
  }
  if (fits_u64(num) && fits_u64(den)) {
    std::uint64_t n = to_u64(num), d = to_u64(den);
    quot = from_u64(n / d);
    rem = from_u64(n % d);
    return;
  }
  // Binary long division; magnitudes in this codebase stay small, so the
  // bit-serial loop is plenty fast.
  for (std::size_t i = bit_length(num); i-- > 0;) {
    // rem = (rem << 1) | bit_i(num)
    std::uint32_t carry = get_bit(num, i) ? 1u : 0u;
    for (auto& limb : rem) {
      std::uint32_t next = limb >> 31;
      limb = (limb << 1) | carry;
      carry = next;
    }
    if (carry) rem.push_back(carry);
    if (cmp_mag(rem, den) >= 0) {
      rem = sub_mag(rem, den);
      set_bit(quot, i);
    }
  }
  trim(quot);
  trim(rem);
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  if (out.sign_ < 0) out.sign_ = 1;
  return out;
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  out.sign_ = -out.sign_;
  return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  BigInt out;
  if (a.sign_ == b.sign_) {
    out.set_mag(BigInt::add_mag(a.mag_, b.mag_), a.sign_);
    return out;
  }
  int c = BigInt::cmp_mag(a.mag_, b.mag_);
  if (c == 0) return BigInt{};
  if (c > 0) {
    out.set_mag(BigInt::sub_mag(a.mag_, b.mag_), a.sign_);
  } else {
    out.set_mag(BigInt::sub_mag(b.mag_, a.mag_), b.sign_);
  }
  return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt out;
  if (a.sign_ == 0 || b.sign_ == 0) return out;
  out.set_mag(BigInt::mul_mag(a.mag_, b.mag_), a.sign_ * b.sign_);
  return out;
}

BigInt& BigInt::operator+=(const BigInt& o) { return *this = *this + o; }
BigInt& BigInt::operator-=(const BigInt& o) { return *this = *this - o; }
BigInt& BigInt::operator*=(const BigInt& o) { return *this = *this * o; }

void BigInt::divmod(const BigInt& num, const BigInt& den, BigInt& quot,
                    BigInt& rem) {
  if (den.sign_ == 0) throw std::domain_error("BigInt: division by zero");
  Mag q, r;
  divmod_mag(num.mag_, den.mag_, q, r);
  BigInt qq, rr;
  qq.set_mag(std::move(q), num.sign_ * den.sign_);
  rr.set_mag(std::move(r), num.sign_);
  quot = std::move(qq);
  rem = std::move(rr);
}

BigInt BigInt::operator/(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return r;
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
  if (sign_ != o.sign_)
    return sign_ < o.sign_ ? std::strong_ordering::less
                           : std::strong_ordering::greater;
  int c = cmp_mag(mag_, o.mag_) * (sign_ < 0 ? -1 : 1);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigInt BigInt::from_string(std::string_view text) {
  std::size_t pos = 0;
  int sign = 1;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    if (text[pos] == '-') sign = -1;
    ++pos;
  }
  if (pos == text.size())
    throw std::invalid_argument("BigInt: empty numeral '" + std::string(text) +
                                "'");
  Mag mag;
  while (pos < text.size()) {
    std::uint32_t chunk = 0;
    std::uint32_t scale = 1;
    for (int k = 0; k < 9 && pos < text.size(); ++k, ++pos) {
      char ch = text[pos];
      if (ch < '0' || ch > '9')
        throw std::invalid_argument("BigInt: bad digit in '" +
                                    std::string(text) + "'");
      chunk = chunk * 10 + static_cast<std::uint32_t>(ch - '0');
      scale *= 10;
    }
    mul_add_small(mag, scale, chunk);
  }
  BigInt out;
  out.set_mag(std::move(mag), sign);
  return out;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  Mag work = mag_;
  std::string digits;
  while (!work.empty()) {
    std::uint32_t rem = divmod_small(work, 1000000000u);
    std::string part = std::to_string(rem);
    if (!work.empty()) part.insert(0, 9 - part.size(), '0');
    digits.insert(0, part);
  }
  if (sign_ < 0) digits.insert(digits.begin(), '-');
  return digits;
}

double BigInt::to_double() const {
  double v = 0.0;
  for (std::size_t i = mag_.size(); i-- > 0;) {
    v = v * 4294967296.0 + static_cast<double>(mag_[i]);
  }
  return sign_ < 0 ? -v : v;
}

bool BigInt::fits_int64() const {
  if (!fits_u64(mag_)) return false;
  std::uint64_t v = to_u64(mag_);
  if (sign_ >= 0) return v <= 0x7fffffffffffffffull;
  return v <= 0x8000000000000000ull;
}

long long BigInt::to_int64() const {
  std::uint64_t v = to_u64(mag_);
  if (sign_ < 0) return static_cast<long long>(0ull - v);
  return static_cast<long long>(v);
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  if (fits_u64(a.mag_) && fits_u64(b.mag_)) {
    BigInt out;
    out.set_mag(from_u64(std::gcd(to_u64(a.mag_), to_u64(b.mag_))), 1);
    return out;
  }
  BigInt x = a.abs();
  BigInt y = b.abs();
  while (!y.is_zero()) {
    BigInt q, r;
    BigInt::divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

}  // namespace triac
