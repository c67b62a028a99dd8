#include "turan/rational.hpp"

#include <boost/multiprecision/integer.hpp>
#include <limits>

#include "turan/error.hpp"

namespace turan {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  reduce();
}

void Rational::reduce() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  num_ /= g;
  den_ /= g;
}

BigInt Rational::floor() const {
  if (num_ >= 0) return num_ / den_;
  BigInt q = (-num_ + den_ - 1) / den_;
  return -q;
}

long long Rational::floor_ll() const {
  BigInt f = floor();
  if (f < std::numeric_limits<long long>::min() || f > std::numeric_limits<long long>::max())
    throw DomainError("floor does not fit in 64 bits: " + f.str());
  return f.convert_to<long long>();
}

std::string Rational::str() const { return num_.str() + "/" + den_.str(); }

double Rational::approx() const {
  return num_.convert_to<double>() / den_.convert_to<double>();
}

Rational Rational::parse(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw InputError("cannot parse rational from \"" + text + "\"");
  }
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

}  // namespace turan
