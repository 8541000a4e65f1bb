#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace lexsel {

/// Exact non-overflowing rational in lowest terms with a positive
/// denominator. Similarity scores are compared through this type so that
/// equal integer triples give bit-identical results.
class Ratio {
 public:
  constexpr Ratio() = default;
  Ratio(std::int64_t num);  // NOLINT: implicit from integers is intended
  Ratio(std::int64_t num, std::int64_t den);

  /// Exact value of the shortest decimal that round-trips `value`
  /// (0.3 -> 3/10, not the binary expansion). Throws on NaN/inf.
  static Ratio from_double(double value);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  /// "n/d", or "n" when the denominator is 1.
  std::string str() const;
  /// Fixed six-decimal rendering used by every printed report.
  std::string decimal(int places = 6) const;

  Ratio operator+(const Ratio& o) const;
  Ratio operator-(const Ratio& o) const;
  Ratio operator*(const Ratio& o) const;
  Ratio operator/(const Ratio& o) const;
  Ratio& operator+=(const Ratio& o) { return *this = *this + o; }

  friend bool operator==(const Ratio& a, const Ratio& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) noexcept;

 private:
  __extension__ typedef __int128 wide;
  static Ratio from_wide(wide num, wide den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace lexsel
