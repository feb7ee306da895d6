#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <string>
#include <string_view>

namespace blfilt {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::rational<BigInt>;

// Exact rational confined to [0, 1]. Always stored reduced.
class UnitRational {
public:
  UnitRational() : v_(0) {}
  UnitRational(long long num, long long den);
  explicit UnitRational(BigRat v);

  // Accepts "p/q", a decimal literal such as "0.45", or a bare integer.
  // Throws std::invalid_argument on malformed input or values outside [0, 1].
  static UnitRational parse(std::string_view text);

  static UnitRational zero() { return UnitRational(); }
  static UnitRational one() { return UnitRational(1, 1); }
  static UnitRational half() { return UnitRational(1, 2); }

  const BigRat& value() const { return v_; }
  const BigInt& numerator() const { return v_.numerator(); }
  const BigInt& denominator() const { return v_.denominator(); }

  UnitRational complement() const; // 1 - v

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  friend bool operator==(const UnitRational& a, const UnitRational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const UnitRational& a, const UnitRational& b) { return a.v_ != b.v_; }
  friend bool operator<(const UnitRational& a, const UnitRational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const UnitRational& a, const UnitRational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const UnitRational& a, const UnitRational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const UnitRational& a, const UnitRational& b) { return a.v_ >= b.v_; }

private:
  BigRat v_;
};

inline const UnitRational& min(const UnitRational& a, const UnitRational& b) {
  return b < a ? b : a;
}
inline const UnitRational& max(const UnitRational& a, const UnitRational& b) {
  return a < b ? b : a;
}

} // namespace blfilt
