#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace spreadkit {

using BigInt = boost::multiprecision::cpp_int;

/// Non-negative rational in lowest terms. den > 0 always.
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rat() = default;
  Rat(std::int64_t n, std::int64_t d);

  static Rat from_int(std::int64_t n) { return Rat(n, 1); }

  /// Accepts "3", "3/2" and plain decimals like "1.5" (converted exactly).
  static Rat parse(const std::string& text);

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;

  Rat half() const { return Rat(num, den * 2); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator<(const Rat& a, const Rat& b);
  friend bool operator<=(const Rat& a, const Rat& b) { return a == b || a < b; }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
};

BigInt bigint_pow(BigInt base, int exp);

/// Precomputed powers of a rational's numerator and denominator, used for
/// exact threshold tests of the form  c1 * num^e  vs  c2 * den^e.
/// Falls back from unsigned 128-bit to arbitrary precision as needed.
class RatioPowers {
 public:
  RatioPowers(const Rat& r, int max_exp);

  const Rat& ratio() const { return r_; }
  int max_exp() const { return max_exp_; }

  /// c1 * num^e <= c2 * den^e
  bool scaled_leq(std::uint64_t c1, std::uint64_t c2, int e) const;
  /// c1 * num^e >= c2 * den^e
  bool scaled_geq(std::uint64_t c1, std::uint64_t c2, int e) const;

 private:
  Rat r_;
  int max_exp_;
  bool fits128_;
  std::vector<unsigned __int128> num_pow128_, den_pow128_;
  std::vector<BigInt> num_pow_, den_pow_;
};

/// Compares (a/c1)^(1/d1) vs (a/c2)^(1/d2) exactly; the values are the
/// spreadness ratios of two candidate witness sets over the same family.
/// Returns -1, 0, 1.
int compare_root_ratios(std::uint64_t a, std::uint64_t c1, int d1, std::uint64_t c2, int d2);

}  // namespace spreadkit
