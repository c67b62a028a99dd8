#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace turan {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction with arbitrary-precision parts. Always stored reduced with
/// a positive denominator; zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt value) : num_(std::move(value)), den_(1) {}
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  /// Largest integer <= *this.
  BigInt floor() const;

  /// floor() narrowed to long long; raises DomainError if it does not fit.
  long long floor_ll() const;

  /// "num/den", e.g. "95/12", "0/1".
  std::string str() const;

  /// Approximate decimal value (for display only).
  double approx() const;

  /// Parses "p/q" or a bare integer; raises InputError on anything else.
  static Rational parse(const std::string& text);

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    return lhs < rhs   ? std::strong_ordering::less
           : lhs > rhs ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
  }

 private:
  void reduce();

  BigInt num_;
  BigInt den_;
};

}  // namespace turan
