#include "qham/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

namespace qham {

namespace {

using I128 = __int128;

constexpr Int kMax = std::numeric_limits<Int>::max();
constexpr Int kMin = std::numeric_limits<Int>::min();

Int narrow(I128 v, const char* what) {
  if (v > static_cast<I128>(kMax) || v < static_cast<I128>(kMin)) {
    throw std::overflow_error(std::string("rational overflow in ") + what);
  }
  return static_cast<Int>(v);
}

}  // namespace

Int checked_add(Int a, Int b) {
  return narrow(static_cast<I128>(a) + static_cast<I128>(b), "add");
}

Int checked_sub(Int a, Int b) {
  return narrow(static_cast<I128>(a) - static_cast<I128>(b), "sub");
}

Int checked_mul(Int a, Int b) {
  return narrow(static_cast<I128>(a) * static_cast<I128>(b), "mul");
}

Int gcd_ll(Int a, Int b) {
  if (a == kMin || b == kMin) {
    // |kMin| is not representable; avoid UB in the sign flip below.
    throw std::overflow_error("gcd of INT64_MIN");
  }
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int lcm_ll(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  Int g = gcd_ll(a, b);
  return checked_mul(a / g, b < 0 ? -b : b);
}

Rat::Rat(Int n, Int d) : num_(n), den_(d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  normalize();
}

void Rat::normalize() {
  if (den_ < 0) {
    num_ = checked_sub(0, num_);
    den_ = checked_sub(0, den_);
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Int g = gcd_ll(num_, den_);
  num_ /= g;
  den_ /= g;
}

Int Rat::as_integer() const {
  if (den_ != 1) {
    throw std::domain_error("as_integer on non-integer rational " + str());
  }
  return num_;
}

Rat Rat::operator-() const {
  Rat r;
  r.num_ = checked_sub(0, num_);
  r.den_ = den_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  // a/b + c/d = (a*(l/b) + c*(l/d)) / l with l = lcm(b, d); keeping the
  // common denominator small avoids spurious overflow on long sums.
  Int l = lcm_ll(den_, o.den_);
  I128 n = static_cast<I128>(num_) * (l / den_) +
           static_cast<I128>(o.num_) * (l / o.den_);
  I128 g = 1;
  {
    I128 a = n < 0 ? -n : n, b = l;
    while (b != 0) {
      I128 t = a % b;
      a = b;
      b = t;
    }
    g = a == 0 ? 1 : a;
  }
  num_ = narrow(n / g, "add");
  den_ = narrow(l / g, "add");
  return *this;
}

Rat& Rat::operator-=(const Rat& o) { return *this += -o; }

Rat& Rat::operator*=(const Rat& o) {
  // Cross-cancel before multiplying to keep intermediates small.
  Int g1 = gcd_ll(num_, o.den_);
  Int g2 = gcd_ll(o.num_, den_);
  num_ = checked_mul(num_ / g1, o.num_ / g2);
  den_ = checked_mul(den_ / g2, o.den_ / g1);
  return *this;
}

Rat& Rat::operator/=(const Rat& o) { return *this *= o.inv(); }

Rat Rat::inv() const {
  if (num_ == 0) throw std::domain_error("inverse of zero");
  Rat r;
  if (num_ < 0) {
    r.num_ = checked_sub(0, den_);
    r.den_ = checked_sub(0, num_);
  } else {
    r.num_ = den_;
    r.den_ = num_;
  }
  return r;
}

bool operator<(const Rat& a, const Rat& b) {
  return static_cast<I128>(a.num_) * b.den_ < static_cast<I128>(b.num_) * a.den_;
}

Int Rat::floor() const {
  if (num_ >= 0) return num_ / den_;
  return -((-num_ + den_ - 1) / den_);
}

Int Rat::ceil() const { return -(-*this).floor(); }

std::string Rat::str() const {
  std::string s = std::to_string(num_);
  if (den_ != 1) {
    s += '/';
    s += std::to_string(den_);
  }
  return s;
}

Rat Rat::parse(const std::string& s) {
  const char* b = s.data();
  const char* e = b + s.size();
  Int n = 0, d = 1;
  auto r1 = std::from_chars(b, e, n);
  if (r1.ec != std::errc()) {
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  }
  if (r1.ptr != e) {
    if (*r1.ptr != '/') {
      throw std::invalid_argument("bad rational literal: '" + s + "'");
    }
    auto r2 = std::from_chars(r1.ptr + 1, e, d);
    if (r2.ec != std::errc() || r2.ptr != e) {
      throw std::invalid_argument("bad rational literal: '" + s + "'");
    }
  }
  return Rat(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

}  // namespace qham
