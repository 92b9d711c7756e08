#include "harbourne/rational.hpp"

#include "harbourne/error.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <ostream>

namespace harbourne {

Rat::Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) {
    throw Error(ErrorKind::BadInput, "rational with zero denominator");
  }
  normalize();
}

void Rat::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rat& Rat::operator+=(const Rat& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rat& Rat::operator-=(const Rat& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rat& Rat::operator*=(const Rat& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rat& Rat::operator/=(const Rat& rhs) {
  if (rhs.num_ == 0) {
    throw Error(ErrorKind::BadInput, "rational division by zero");
  }
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

Rat Rat::operator-() const {
  Rat out = *this;
  out.num_ = -out.num_;
  return out;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rat::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::string Rat::decimal(int places) const {
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const BigInt magnitude = num_.sign() < 0 ? BigInt(-num_) : num_;
  // floor((|p| * 10^places) / q + 1/2)
  const BigInt rounded = (2 * magnitude * scale + den_) / (2 * den_);
  const BigInt whole = rounded / scale;
  std::string frac = BigInt(rounded % scale).str();
  if (static_cast<int>(frac.size()) < places) {
    frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
  }
  std::string out = (num_.sign() < 0 && rounded != 0) ? "-" : "";
  out += whole.str();
  if (places > 0) out += "." + frac;
  return out;
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) {
    throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') {
      throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(text, text));
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) {
    throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  return Rat(parse_integer(text.substr(0, slash), text), std::move(den));
}

Rat abs(const Rat& value) { return value.sign() < 0 ? -value : value; }

std::ostream& operator<<(std::ostream& os, const Rat& value) { return os << value.str(); }

}  // namespace harbourne
