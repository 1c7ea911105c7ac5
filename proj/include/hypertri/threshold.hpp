#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace hypertri {

// Exact rational with positive denominator, kept in lowest terms.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Fraction() = default;
  Fraction(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw ContractError("fraction with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    return a.num * b.den <=> b.num * a.den;
  }

  std::string to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

/**
 * Strict lower bound `num/den` on an integer quantity.
 *
 * Unlike Fraction it is not reduced, so 2n/(2r+1) prints as e.g. "14/7" and
 * stays auditable against its formula. All comparisons cross-multiply.
 */
class Threshold {
 public:
  Threshold(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ <= 0) throw ContractError("threshold denominator must be positive");
  }

  // Bound 2n/(2r+1) from the positive-codegree stability theorem.
  static Threshold aes(int r, int n) { return Threshold(2 * std::int64_t{n}, 2 * std::int64_t{r} + 1); }

  // Literal minimum: "value >= k" is "value > k-1".
  static Threshold at_least(std::int64_t k) { return Threshold(k - 1, 1); }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  // k > num/den  <=>  k*den > num
  bool exceeded_by(std::int64_t k) const { return k * den_ > num_; }

  // Smallest integer strictly above the bound.
  std::int64_t min_integer_exceeding() const {
    // floor(num/den) + 1, with floor toward -inf
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q + 1;
  }

  std::string to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  friend bool operator==(const Threshold&, const Threshold&) = default;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace hypertri
