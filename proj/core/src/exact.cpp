#include "spreadkit/exact.hpp"

#include <numeric>
#include <stdexcept>

namespace spreadkit {

Rat::Rat(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::invalid_argument("Rat: zero denominator");
  if (n < 0 || d < 0) throw std::invalid_argument("Rat: negative rationals unsupported");
  std::int64_t g = std::gcd(n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

Rat Rat::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Rat::parse: empty string");
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      std::size_t p1 = 0, p2 = 0;
      std::int64_t n = std::stoll(text.substr(0, slash), &p1);
      std::int64_t d = std::stoll(text.substr(slash + 1), &p2);
      if (p1 != slash || p2 != text.size() - slash - 1)
        throw std::invalid_argument("trailing characters");
      return Rat(n, d);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      std::size_t frac_len = text.size() - dot - 1;
      if (frac_len == 0 || frac_len > 15) throw std::invalid_argument("bad decimal");
      std::size_t pos = 0;
      std::int64_t n = std::stoll(digits, &pos);
      if (pos != digits.size()) throw std::invalid_argument("trailing characters");
      std::int64_t d = 1;
      for (std::size_t i = 0; i < frac_len; ++i) d *= 10;
      return Rat(n, d);
    }
    std::size_t pos = 0;
    std::int64_t n = std::stoll(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters");
    return Rat(n, 1);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("Rat::parse: value out of range: " + text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rat::parse: cannot parse '" + text + "'");
  }
}

std::string Rat::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Rat& a, const Rat& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

BigInt bigint_pow(BigInt base, int exp) {
  BigInt out = 1;
  while (exp > 0) {
    if (exp & 1) out *= base;
    base *= base;
    exp >>= 1;
  }
  return out;
}

namespace {

// Largest count any comparison may carry.
constexpr int kCountBits = 64;

}  // namespace

RatioPowers::RatioPowers(const Rat& r, int max_exp) : r_(r), max_exp_(max_exp) {
  if (max_exp < 0) throw std::invalid_argument("RatioPowers: negative exponent");
  num_pow_.resize(static_cast<std::size_t>(max_exp) + 1);
  den_pow_.resize(static_cast<std::size_t>(max_exp) + 1);
  num_pow_[0] = den_pow_[0] = 1;
  for (int e = 1; e <= max_exp; ++e) {
    num_pow_[static_cast<std::size_t>(e)] = num_pow_[static_cast<std::size_t>(e - 1)] * r.num;
    den_pow_[static_cast<std::size_t>(e)] = den_pow_[static_cast<std::size_t>(e - 1)] * r.den;
  }
  // 128-bit fast path applies when count * pow cannot overflow.
  const BigInt& worst = num_pow_[static_cast<std::size_t>(max_exp)] >
                                den_pow_[static_cast<std::size_t>(max_exp)]
                            ? num_pow_[static_cast<std::size_t>(max_exp)]
                            : den_pow_[static_cast<std::size_t>(max_exp)];
  fits128_ = (msb(worst + 1) + kCountBits) < 127;
  if (fits128_) {
    num_pow128_.resize(static_cast<std::size_t>(max_exp) + 1);
    den_pow128_.resize(static_cast<std::size_t>(max_exp) + 1);
    num_pow128_[0] = den_pow128_[0] = 1;
    for (int e = 1; e <= max_exp; ++e) {
      num_pow128_[static_cast<std::size_t>(e)] =
          num_pow128_[static_cast<std::size_t>(e - 1)] * static_cast<unsigned __int128>(r.num);
      den_pow128_[static_cast<std::size_t>(e)] =
          den_pow128_[static_cast<std::size_t>(e - 1)] * static_cast<unsigned __int128>(r.den);
    }
  }
}

bool RatioPowers::scaled_leq(std::uint64_t c1, std::uint64_t c2, int e) const {
  if (e < 0 || e > max_exp_) throw std::invalid_argument("RatioPowers: exponent out of range");
  if (fits128_) {
    return static_cast<unsigned __int128>(c1) * num_pow128_[static_cast<std::size_t>(e)] <=
           static_cast<unsigned __int128>(c2) * den_pow128_[static_cast<std::size_t>(e)];
  }
  return BigInt(c1) * num_pow_[static_cast<std::size_t>(e)] <=
         BigInt(c2) * den_pow_[static_cast<std::size_t>(e)];
}

bool RatioPowers::scaled_geq(std::uint64_t c1, std::uint64_t c2, int e) const {
  if (e < 0 || e > max_exp_) throw std::invalid_argument("RatioPowers: exponent out of range");
  if (fits128_) {
    return static_cast<unsigned __int128>(c1) * num_pow128_[static_cast<std::size_t>(e)] >=
           static_cast<unsigned __int128>(c2) * den_pow128_[static_cast<std::size_t>(e)];
  }
  return BigInt(c1) * num_pow_[static_cast<std::size_t>(e)] >=
         BigInt(c2) * den_pow_[static_cast<std::size_t>(e)];
}

int compare_root_ratios(std::uint64_t a, std::uint64_t c1, int d1, std::uint64_t c2, int d2) {
  // (a/c1)^(1/d1) vs (a/c2)^(1/d2)  <=>  a^d2 * c2^d1  vs  a^d1 * c1^d2.
  if (d1 <= 0 || d2 <= 0) throw std::invalid_argument("compare_root_ratios: degree must be >= 1");
  if (c1 == 0 || c2 == 0) throw std::invalid_argument("compare_root_ratios: zero trace count");
  BigInt lhs = bigint_pow(BigInt(a), d2) * bigint_pow(BigInt(c2), d1);
  BigInt rhs = bigint_pow(BigInt(a), d1) * bigint_pow(BigInt(c1), d2);
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

}  // namespace spreadkit
