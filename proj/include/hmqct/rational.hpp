#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hmqct {

// Exact rational, used for the matching density beta so that beta*n
// integrality is checkable without float error.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  bool divides_exactly(std::uint64_t n) const {
    return (static_cast<std::int64_t>(n) * num) % den == 0;
  }

  // beta * n, requiring an integer result.
  std::uint64_t times_integer(std::uint64_t n) const {
    std::int64_t p = static_cast<std::int64_t>(n) * num;
    if (p % den != 0)
      throw std::invalid_argument("Rational: " + to_string() + " * " +
                                  std::to_string(n) + " is not an integer");
    return static_cast<std::uint64_t>(p / den);
  }

  bool operator==(const Rational& o) const = default;

  std::string to_string() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
  }

  // Accepts "p/q", integers, and plain decimals ("0.25").
  static Rational parse(std::string_view s);
};

}  // namespace hmqct
