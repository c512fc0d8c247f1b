#include "thue/dyadic.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace thue {

namespace mp = boost::multiprecision;

Dyadic::Dyadic(BigInt mantissa, std::uint64_t exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
  canonicalize();
}

void Dyadic::canonicalize() {
  if (mantissa_ == 0) {
    exponent_ = 0;
    return;
  }
  if (exponent_ == 0) return;
  const std::uint64_t zeros = mp::lsb(mantissa_ < 0 ? BigInt(-mantissa_) : mantissa_);
  const std::uint64_t drop = std::min<std::uint64_t>(zeros, exponent_);
  if (drop > 0) {
    mantissa_ >>= drop;  // exact: the low `drop` bits are zero
    exponent_ -= drop;
  }
}

Dyadic Dyadic::ldexp(std::int64_t shift) const {
  if (shift >= 0) {
    const auto s = static_cast<std::uint64_t>(shift);
    if (s <= exponent_) return Dyadic(mantissa_, exponent_ - s);
    return Dyadic(BigInt(mantissa_ << (s - exponent_)), 0);
  }
  return Dyadic(mantissa_, exponent_ + static_cast<std::uint64_t>(-shift));
}

BigInt Dyadic::floor() const { return floor_scaled(0); }

BigInt Dyadic::floor_scaled(std::uint64_t shift) const {
  if (shift >= exponent_) return mantissa_ << (shift - exponent_);
  return floor_div(mantissa_, BigInt(1) << (exponent_ - shift));
}

BigInt Dyadic::numerator_at(std::uint64_t e) const {
  if (e < exponent_) {
    throw DomainError("value " + str() + " is not a multiple of 2^-" + std::to_string(e));
  }
  return mantissa_ << (e - exponent_);
}

Rational Dyadic::to_rational() const {
  return Rational(mantissa_, BigInt(1) << exponent_);
}

double Dyadic::to_double() const {
  using Float = mp::cpp_bin_float_double;
  Float m(mantissa_);
  return static_cast<double>(mp::ldexp(m, -static_cast<int>(exponent_)));
}

std::string Dyadic::str() const {
  if (exponent_ == 0) return mantissa_.str();
  return mantissa_.str() + "/" + (BigInt(1) << exponent_).str();
}

Dyadic Dyadic::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Dyadic(parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (den_text.starts_with("2^")) {
    const BigInt e = parse_integer(den_text.substr(2));
    if (e < 0 || e > 1'000'000) {
      throw DomainError("bad dyadic exponent in '" + std::string(text) + "'");
    }
    return Dyadic(num, static_cast<std::uint64_t>(e));
  }
  const BigInt den = parse_integer(den_text);
  if (den <= 0 || (den & (den - 1)) != 0) {
    throw DomainError("denominator of '" + std::string(text) +
                      "' is not a positive power of two");
  }
  return Dyadic(num, mp::msb(den));
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  r.mantissa_ = -r.mantissa_;
  return r;
}

Dyadic& Dyadic::operator+=(const Dyadic& o) {
  const std::uint64_t e = std::max(exponent_, o.exponent_);
  mantissa_ = numerator_at(e) + o.numerator_at(e);
  exponent_ = e;
  canonicalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& o) { return *this += -o; }

Dyadic& Dyadic::operator*=(const Dyadic& o) {
  mantissa_ *= o.mantissa_;
  exponent_ += o.exponent_;
  canonicalize();
  return *this;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const std::uint64_t e = std::max(a.exponent_, b.exponent_);
  const BigInt lhs = a.numerator_at(e);
  const BigInt rhs = b.numerator_at(e);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Dyadic abs(const Dyadic& d) { return d.sign() < 0 ? -d : d; }
Dyadic min(const Dyadic& a, const Dyadic& b) { return b < a ? b : a; }
Dyadic max(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }

}  // namespace thue
