#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "symnet/errors.hpp"

namespace symnet {

// Exact signed fixed-point number with six fractional decimal digits.
// All arithmetic is checked; overflow throws OverflowError.
class Weight {
 public:
  static constexpr std::int64_t kScale = 1'000'000;
  static constexpr int kFractionDigits = 6;

  constexpr Weight() = default;

  static constexpr Weight from_micros(std::int64_t micros) { return Weight(micros); }

  static Weight from_int(std::int64_t value) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(value, kScale, &out)) throw OverflowError("weight overflow");
    return Weight(out);
  }

  // Decimal text: optional sign, digits, optional '.' followed by at most six digits.
  // Throws std::invalid_argument on malformed input.
  static Weight parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    std::size_t pos = 0;
    bool negative = false;
    if (text[0] == '+' || text[0] == '-') {
      negative = text[0] == '-';
      pos = 1;
    }
    std::int64_t integral = 0;
    std::size_t int_digits = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      if (__builtin_mul_overflow(integral, 10, &integral) ||
          __builtin_add_overflow(integral, text[pos] - '0', &integral))
        throw std::invalid_argument("number out of range: " + std::string(text));
      ++pos;
      ++int_digits;
    }
    std::int64_t fraction = 0;
    std::size_t frac_digits = 0;
    if (pos < text.size() && text[pos] == '.') {
      ++pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        if (++frac_digits > kFractionDigits)
          throw std::invalid_argument("more than 6 fractional digits: " + std::string(text));
        fraction = fraction * 10 + (text[pos] - '0');
        ++pos;
      }
    }
    if (pos != text.size() || int_digits + frac_digits == 0)
      throw std::invalid_argument("malformed number: " + std::string(text));
    for (std::size_t d = frac_digits; d < kFractionDigits; ++d) fraction *= 10;
    std::int64_t micros = 0;
    if (__builtin_mul_overflow(integral, kScale, &micros) ||
        __builtin_add_overflow(micros, fraction, &micros))
      throw std::invalid_argument("number out of range: " + std::string(text));
    return Weight(negative ? -micros : micros);
  }

  constexpr std::int64_t micros() const noexcept { return micros_; }
  double to_double() const noexcept { return static_cast<double>(micros_) / kScale; }
  constexpr bool is_zero() const noexcept { return micros_ == 0; }

  // Shortest exact decimal form: "3", "-0.1", "250.7".
  std::string to_string() const {
    std::uint64_t mag = micros_ < 0 ? 0 - static_cast<std::uint64_t>(micros_)
                                    : static_cast<std::uint64_t>(micros_);
    std::string out = micros_ < 0 ? "-" : "";
    out += std::to_string(mag / kScale);
    std::uint64_t frac = mag % kScale;
    if (frac != 0) {
      std::string digits = std::to_string(frac);
      digits.insert(0, kFractionDigits - digits.size(), '0');
      while (digits.back() == '0') digits.pop_back();
      out += '.';
      out += digits;
    }
    return out;
  }

  Weight operator-() const {
    if (micros_ == std::numeric_limits<std::int64_t>::min()) throw OverflowError("weight overflow");
    return Weight(-micros_);
  }
  Weight& operator+=(Weight rhs) {
    if (__builtin_add_overflow(micros_, rhs.micros_, &micros_)) throw OverflowError("weight overflow");
    return *this;
  }
  Weight& operator-=(Weight rhs) {
    if (__builtin_sub_overflow(micros_, rhs.micros_, &micros_)) throw OverflowError("weight overflow");
    return *this;
  }
  friend Weight operator+(Weight a, Weight b) { return a += b; }
  friend Weight operator-(Weight a, Weight b) { return a -= b; }

  // Scaling by an integer count (activation bits, multiplicities).
  friend Weight operator*(Weight a, std::int64_t k) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a.micros_, k, &out)) throw OverflowError("weight overflow");
    return Weight(out);
  }

  Weight abs() const { return micros_ < 0 ? -*this : *this; }

  friend constexpr auto operator<=>(Weight, Weight) = default;
  friend constexpr bool operator==(Weight, Weight) = default;

  friend std::ostream& operator<<(std::ostream& os, Weight w) { return os << w.to_string(); }

 private:
  constexpr explicit Weight(std::int64_t micros) : micros_(micros) {}
  std::int64_t micros_ = 0;
};

inline Weight max(Weight a, Weight b) { return a < b ? b : a; }

namespace literals {
// 250.7_w, -3_w (unary minus applies after), 0.1_w: parsed from the literal's source text.
inline Weight operator""_w(const char* text) { return Weight::parse(text); }
}  // namespace literals

}  // namespace symnet
