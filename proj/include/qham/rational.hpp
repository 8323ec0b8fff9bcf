#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace qham {

// Exact rational number over 64-bit integers.  Every arithmetic operation
// checks for overflow (intermediate products are taken in 128 bits) and
// throws std::overflow_error instead of wrapping.  All values are kept
// normalized: den > 0 and gcd(|num|, den) = 1.
//
// The geometry in this project lives at desk scale (alcove coordinates,
// small Cartan integers, Smith forms of small incidence matrices), so 64
// bits is ample; the checks are insurance, not a feature we expect to hit.

using Int = long long;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int gcd_ll(Int a, Int b);
Int lcm_ll(Int a, Int b);

class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(Int n) : num_(n), den_(1) {}
  Rat(Int n, Int d);

  Int num() const { return num_; }
  Int den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_nonneg() const { return num_ >= 0; }
  bool is_positive() const { return num_ > 0; }

  // Integer value; throws if not an integer.
  Int as_integer() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b);
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  Rat abs() const { return num_ < 0 ? -*this : *this; }
  Rat inv() const;

  // Largest integer <= value, and smallest integer >= value.
  Int floor() const;
  Int ceil() const;

  // Serialized as "p" for integers, "p/q" otherwise.
  std::string str() const;
  // Parses "p" or "p/q" (q > 0 after normalization); throws on syntax error.
  static Rat parse(const std::string& s);

 private:
  void normalize();
  Int num_, den_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace qham
