#include "sigchar/rational.hpp"

#include <charconv>
#include <ostream>

namespace sigchar {

namespace {

using i128 = __int128;

std::int64_t checked64(i128 v) {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) {
    throw std::overflow_error("Rational: 64-bit overflow");
  }
  return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  if (d < 0) {
    if (n == INT64_MIN || d == INT64_MIN) throw std::overflow_error("Rational: 64-bit overflow");
    n = -n;
    d = -d;
  }
  std::int64_t g = std::gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = n;
  den_ = d;
}

Rational Rational::operator-() const {
  if (num_ == INT64_MIN) throw std::overflow_error("Rational: 64-bit overflow");
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::frac() const {
  std::int64_t m = num_ % den_;
  if (m < 0) m += den_;
  return Rational(m, den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  i128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
  i128 d = i128(a.den_) * b.den_;
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  r.num_ = checked64(n);
  r.den_ = checked64(d);
  return r;
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  i128 n = i128(a.num_) * b.num_;
  i128 d = i128(a.den_) * b.den_;
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  r.num_ = checked64(n);
  r.den_ = checked64(d);
  return r;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
  i128 n = i128(a.num_) * b.den_;
  i128 d = i128(a.den_) * b.num_;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  r.num_ = checked64(n);
  r.den_ = checked64(d);
  return r;
}

bool operator<(const Rational& a, const Rational& b) {
  return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
}

Rational Rational::parse(std::string_view s) {
  auto parse_int = [](std::string_view v) {
    std::int64_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size()) {
      throw std::invalid_argument("Rational: cannot parse '" + std::string(v) + "'");
    }
    return out;
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace sigchar
