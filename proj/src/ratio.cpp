#include "lexsel/ratio.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include "lexsel/error.hpp"

namespace lexsel {

namespace {

__extension__ typedef __int128 wide;

wide wide_abs(wide v) { return v < 0 ? -v : v; }

wide wide_gcd(wide a, wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

[[noreturn]] void overflow(const char* what) {
  throw Error(ErrorKind::Overflow, std::string("rational overflow in ") + what);
}

constexpr wide kMax = std::numeric_limits<std::int64_t>::max();

}  // namespace

Ratio::Ratio(std::int64_t num) : num_(num), den_(1) {}

Ratio::Ratio(std::int64_t num, std::int64_t den) {
  *this = from_wide(num, den);
}

Ratio Ratio::from_wide(wide num, wide den) {
  if (den == 0) throw Error(ErrorKind::Overflow, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (wide_abs(num) > kMax || den > kMax) overflow("normalisation");
  Ratio r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Ratio Ratio::from_double(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::Overflow, "cannot represent non-finite value as a rational");
  }
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  std::string_view text(buf, static_cast<std::size_t>(res.ptr - buf));

  bool negative = false;
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') {
    negative = true;
    ++i;
  }
  wide mantissa = 0;
  int exponent = 0;
  bool after_point = false;
  for (; i < text.size() && text[i] != 'e'; ++i) {
    char c = text[i];
    if (c == '.') {
      after_point = true;
      continue;
    }
    mantissa = mantissa * 10 + (c - '0');
    if (mantissa > kMax) overflow("decimal conversion");
    if (after_point) --exponent;
  }
  if (i < text.size()) {
    int e = 0;
    std::from_chars(text.data() + i + 1 + (text[i + 1] == '+' ? 1 : 0),
                    text.data() + text.size(), e);
    exponent += e;
  }
  wide num = negative ? -mantissa : mantissa;
  wide den = 1;
  for (; exponent > 0; --exponent) {
    num *= 10;
    if (wide_abs(num) > kMax) overflow("decimal conversion");
  }
  for (; exponent < 0; ++exponent) {
    den *= 10;
    if (den > kMax) overflow("decimal conversion");
  }
  return from_wide(num, den);
}

std::string Ratio::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Ratio::decimal(int places) const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, to_double());
  return buf;
}

Ratio Ratio::operator+(const Ratio& o) const {
  return from_wide(wide(num_) * o.den_ + wide(o.num_) * den_, wide(den_) * o.den_);
}

Ratio Ratio::operator-(const Ratio& o) const {
  return from_wide(wide(num_) * o.den_ - wide(o.num_) * den_, wide(den_) * o.den_);
}

Ratio Ratio::operator*(const Ratio& o) const {
  return from_wide(wide(num_) * o.num_, wide(den_) * o.den_);
}

Ratio Ratio::operator/(const Ratio& o) const {
  return from_wide(wide(num_) * o.den_, wide(den_) * o.num_);
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) noexcept {
  wide lhs = wide(a.num_) * b.den_;
  wide rhs = wide(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Malformed: return "malformed document";
    case ErrorKind::DuplicateConcept: return "duplicate concept";
    case ErrorKind::DanglingParent: return "dangling parent";
    case ErrorKind::Cycle: return "cycle";
    case ErrorKind::RootCount: return "root count";
    case ErrorKind::UnknownDomain: return "unknown domain";
    case ErrorKind::UnknownConcept: return "unknown concept";
    case ErrorKind::CrossDomain: return "cross-domain pair";
    case ErrorKind::DuplicateSense: return "duplicate sense";
    case ErrorKind::InvalidSense: return "invalid sense";
    case ErrorKind::UnknownLexeme: return "unknown source lexeme";
    case ErrorKind::UnboundRole: return "unbound role";
    case ErrorKind::InvalidWeights: return "invalid weights";
    case ErrorKind::MalformedTree: return "malformed decision tree";
    case ErrorKind::UnknownMarker: return "unknown context marker";
    case ErrorKind::MalformedCorpus: return "malformed corpus";
    case ErrorKind::MissingGold: return "missing gold label";
    case ErrorKind::EmptyCorpus: return "empty corpus";
    case ErrorKind::VocabularyGap: return "vocabulary gap";
    case ErrorKind::Overflow: return "overflow";
  }
  return "error";
}

}  // namespace lexsel
