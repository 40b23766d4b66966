#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace liya {

// Thrown on malformed user input: parse errors, bad dimensions, non-prime
// moduli, inconsistent sparse entries. The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a mathematical precondition fails: Jacobi failure in from_lie,
// non-matched-pair tensors fed to bicrossed, characteristic restrictions, ...
struct math_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Scalar;

// A computation field: the rationals, or a prime field GF(p).
// Value type; cheap to copy. Equality means "same field".
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(unsigned long p);  // validates primality

  bool is_rational() const { return p_ == 0; }
  unsigned long characteristic() const { return p_; }  // 0 for Q

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar integer(long k) const;
  // Accepts "n" or "n/d"; over GF(p) the value is reduced, d must be a unit.
  Scalar parse(const std::string& text) const;

  std::string str() const;  // "Q" or "GF p"

 private:
  explicit Field(unsigned long p) : p_(p) {}
  unsigned long p_ = 0;
};

// One exact field element. Rationals are kept canonicalized; GF(p) residues
// are kept as integers in [0, p). Every element remembers its field so that
// mixed-field arithmetic fails loudly instead of corrupting data.
class Scalar {
 public:
  Scalar() = delete;  // always start from Field::zero()/one()/...

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  Field field() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);  // throws math_error on division by zero

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inv() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  // Total order used only for deterministic output; compares exact values.
  std::strong_ordering operator<=>(const Scalar& o) const;

  std::string str() const;  // "n", "-n/d", or the residue

  // Rational numerator/denominator access (residues report value/1).
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

 private:
  friend class Field;
  Scalar(mpq_class v, unsigned long p) : v_(std::move(v)), p_(p) {}
  void reduce();
  void check_same_field(const Scalar& o) const;

  mpq_class v_;
  unsigned long p_;  // 0 = rational
};

}  // namespace liya
