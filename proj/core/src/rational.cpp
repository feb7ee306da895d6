#include "blfilt/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace blfilt {

namespace {

void require_unit(const BigRat& v) {
  if (v < BigRat(0) || v > BigRat(1)) {
    throw std::invalid_argument("value outside [0, 1]: " + v.numerator().str() + "/" +
                                v.denominator().str());
  }
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt pow10(std::size_t k) {
  BigInt r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= 10;
  return r;
}

} // namespace

UnitRational::UnitRational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  v_ = BigRat(BigInt(num), BigInt(den));
  require_unit(v_);
}

UnitRational::UnitRational(BigRat v) : v_(std::move(v)) {
  require_unit(v_);
}

UnitRational UnitRational::parse(std::string_view text) {
  const std::string bad = "malformed rational: '" + std::string(text) + "'";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument(bad);
    BigInt d{std::string(den)};
    if (d == 0) throw std::invalid_argument(bad);
    return UnitRational(BigRat(BigInt(std::string(num)), d));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (whole.empty()) whole = "0"; // ".8" means "0.8"
    if (!all_digits(whole) || !all_digits(frac)) throw std::invalid_argument(bad);
    BigInt scale = pow10(frac.size());
    BigInt num = BigInt(std::string(whole)) * scale + BigInt(std::string(frac));
    return UnitRational(BigRat(num, scale));
  }
  if (!all_digits(text)) throw std::invalid_argument(bad);
  return UnitRational(BigRat(BigInt(std::string(text)), BigInt(1)));
}

UnitRational UnitRational::complement() const {
  return UnitRational(BigRat(1) - v_);
}

std::string UnitRational::str() const {
  if (v_.denominator() == 1) return v_.numerator().str();
  return v_.numerator().str() + "/" + v_.denominator().str();
}

} // namespace blfilt
