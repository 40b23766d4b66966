#include "liya/field.hpp"

namespace liya {

namespace {

bool is_small_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(unsigned long p) {
  if (!is_small_prime(p))
    throw input_error("field modulus " + std::to_string(p) + " is not prime");
  return Field(p);
}

Scalar Field::zero() const { return Scalar(mpq_class(0), p_); }
Scalar Field::one() const { return Scalar(mpq_class(1), p_); }

Scalar Field::integer(long k) const {
  Scalar s(mpq_class(k), p_);
  s.reduce();
  return s;
}

Scalar Field::parse(const std::string& text) const {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0)
    throw input_error("bad coefficient '" + text + "'");
  if (q.get_den() == 0) throw input_error("zero denominator in '" + text + "'");
  q.canonicalize();
  if (p_ != 0) {
    // reduce a/b mod p; b must be a unit
    mpz_class pz(static_cast<long>(p_)), n = q.get_num() % pz, d = q.get_den() % pz;
    if (d == 0)
      throw input_error("denominator of '" + text + "' vanishes in " + str());
    mpz_class dinv;
    mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t());
    n = (n * dinv) % pz;
    if (n < 0) n += pz;
    return Scalar(mpq_class(n), p_);
  }
  return Scalar(q, p_);
}

std::string Field::str() const {
  return p_ == 0 ? "Q" : "GF " + std::to_string(p_);
}

Field Scalar::field() const { return p_ == 0 ? Field::rationals() : Field::prime(p_); }

void Scalar::reduce() {
  if (p_ == 0) return;
  mpz_class pz(static_cast<long>(p_));
  mpz_class n = v_.get_num() % pz;
  if (n < 0) n += pz;
  v_ = mpq_class(n);
}

void Scalar::check_same_field(const Scalar& o) const {
  if (p_ != o.p_) throw math_error("mixed-field arithmetic");
}

Scalar Scalar::operator-() const {
  Scalar r(-v_, p_);
  r.reduce();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  v_ += o.v_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  v_ -= o.v_;
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  v_ *= o.v_;
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  return *this *= o.inv();
}

Scalar Scalar::inv() const {
  if (is_zero()) throw math_error("division by zero");
  if (p_ == 0) return Scalar(1 / v_, 0);
  mpz_class pz(static_cast<long>(p_)), r;
  mpz_invert(r.get_mpz_t(), mpz_class(v_.get_num()).get_mpz_t(), pz.get_mpz_t());
  if (r < 0) r += pz;
  return Scalar(mpq_class(r), p_);
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(o);
  return v_ == o.v_;
}

std::strong_ordering Scalar::operator<=>(const Scalar& o) const {
  check_same_field(o);
  int c = cmp(v_, o.v_);
  return c < 0 ? std::strong_ordering::less
       : c > 0 ? std::strong_ordering::greater
               : std::strong_ordering::equal;
}

std::string Scalar::str() const { return v_.get_str(); }

}  // namespace liya
