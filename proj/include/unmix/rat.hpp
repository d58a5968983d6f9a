#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace unmix {

using Int = mpz_class;

/// Exact rational number, always kept in lowest terms with positive
/// denominator. Thin value wrapper around GMP's mpq so that equality,
/// ordering and hashing behave like plain values.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long v) : q_(v) {}        // NOLINT(google-explicit-constructor)
  Rat(const Int& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(const Int& num, const Int& den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    q_.canonicalize();
  }
  Rat(long num, long den) : Rat(Int(num), Int(den)) {}

  static Rat from_string(const std::string& s);

  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  bool is_zero() const { return q_ == 0; }
  int sign() const { return sgn(q_); }

  /// "p/q", or bare "p" when the denominator is 1.
  std::string str() const;

  Rat operator-() const {
    Rat r;
    r.q_ = -q_;
    return r;
  }
  Rat& operator+=(const Rat& o) {
    q_ += o.q_;
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    q_ -= o.q_;
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    q_ *= o.q_;
    return *this;
  }
  Rat& operator/=(const Rat& o) {
    if (o.q_ == 0) throw std::domain_error("Rat: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

Rat abs(const Rat& r);

}  // namespace unmix
