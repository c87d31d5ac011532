#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace stubborn {

// Element a + b*sqrt(d) of Q(sqrt d), d square-free. Rationals carry d = 1.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(int v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Coefficient(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Coefficient(const mpq_class& v) : a_(v) { a_.canonicalize(); }  // NOLINT
  Coefficient(const mpq_class& a, const mpq_class& b, long d);

  // sqrt(n) for an integer n, with square factors pulled out.
  static Coefficient sqrt_of(long n);

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }
  long field() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_one() const { return is_rational() && a_ == 1; }
  bool is_real() const { return d_ > 0 || is_rational(); }
  const mpq_class& rational() const;

  Coefficient conj() const;
  mpq_class norm() const { return a_ * a_ - mpq_class(d_) * b_ * b_; }
  Coefficient inverse() const;

  // Exact sign; throws for non-real values.
  int sign() const;

  double to_double() const;  // real part for d < 0
  std::complex<long double> to_complex() const;

  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);
  Coefficient& operator/=(const Coefficient& o);
  Coefficient operator-() const;

  friend Coefficient operator+(Coefficient x, const Coefficient& y) { return x += y; }
  friend Coefficient operator-(Coefficient x, const Coefficient& y) { return x -= y; }
  friend Coefficient operator*(Coefficient x, const Coefficient& y) { return x *= y; }
  friend Coefficient operator/(Coefficient x, const Coefficient& y) { return x /= y; }
  friend bool operator==(const Coefficient& x, const Coefficient& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.is_rational() || x.d_ == y.d_);
  }
  friend bool operator!=(const Coefficient& x, const Coefficient& y) { return !(x == y); }

  // Deterministic total order on representations (not the field order).
  friend bool structural_less(const Coefficient& x, const Coefficient& y);

  // Human/grammar form: "3/2", "sqrt(2)", "1 + 2*sqrt(-3)".
  std::string to_string() const;

 private:
  void normalize();
  mpq_class a_ = 0;
  mpq_class b_ = 0;
  long d_ = 1;
};

// Combined radicand of two fields; throws FieldMismatch for towers.
long join_fields(long d1, long d2);

// Square-free part and square factor: n = s^2 * f.
void squarefree_split(long n, long& square_root_part, long& free_part);

std::string rational_to_string(const mpq_class& q);

}  // namespace stubborn
