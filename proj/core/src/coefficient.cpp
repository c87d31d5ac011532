#include "stubborn/coefficient.hpp"

#include <cmath>
#include <cstdlib>

#include "stubborn/errors.hpp"

namespace stubborn {

void squarefree_split(long n, long& root, long& free_part) {
  if (n == 0) throw InputError("sqrt(0) has no radicand");
  long sign = n < 0 ? -1 : 1;
  unsigned long m = static_cast<unsigned long>(std::labs(n));
  unsigned long r = 1;
  for (unsigned long p = 2; p * p <= m; ++p) {
    while (m % (p * p) == 0) {
      m /= p * p;
      r *= p;
    }
  }
  root = static_cast<long>(r);
  free_part = sign * static_cast<long>(m);
}

long join_fields(long d1, long d2) {
  if (d1 == 1) return d2;
  if (d2 == 1 || d1 == d2) return d1;
  throw FieldMismatch("coefficients from Q(sqrt(" + std::to_string(d1) + ")) and Q(sqrt(" +
                      std::to_string(d2) + ")) cannot be combined");
}

Coefficient::Coefficient(const mpq_class& a, const mpq_class& b, long d) : a_(a), b_(b), d_(d) {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn(b_) != 0) {
    long r = 1, f = 1;
    squarefree_split(d, r, f);
    b_ *= r;
    d_ = f;
    if (d_ == 1) {
      a_ += b_;
      b_ = 0;
    }
  }
  normalize();
}

Coefficient Coefficient::sqrt_of(long n) {
  if (n == 0) return Coefficient();
  return Coefficient(mpq_class(0), mpq_class(1), n);
}

void Coefficient::normalize() {
  if (sgn(b_) == 0) d_ = 1;
}

const mpq_class& Coefficient::rational() const {
  if (!is_rational()) throw UnsupportedExtension("expected a rational value, got " + to_string());
  return a_;
}

Coefficient Coefficient::conj() const {
  Coefficient c = *this;
  c.b_ = -c.b_;
  return c;
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero coefficient");
  if (is_rational()) return Coefficient(mpq_class(1) / a_);
  mpq_class n = norm();
  Coefficient c;
  c.a_ = a_ / n;
  c.b_ = -b_ / n;
  c.d_ = d_;
  return c;
}

int Coefficient::sign() const {
  if (is_rational()) return sgn(a_);
  if (d_ < 0) throw UnsupportedExtension("sign of a non-real number " + to_string());
  int sa = sgn(a_), sb = sgn(b_);
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with b^2 d
  mpq_class lhs = a_ * a_, rhs = b_ * b_ * d_;
  int c = cmp(lhs, rhs);
  return c > 0 ? sa : -sa;
}

double Coefficient::to_double() const {
  double v = a_.get_d();
  if (d_ > 0) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
  return v;
}

std::complex<long double> Coefficient::to_complex() const {
  long double re = a_.get_d();
  long double im = 0;
  if (!is_rational()) {
    long double s = std::sqrt(static_cast<long double>(std::labs(d_)));
    if (d_ > 0) re += static_cast<long double>(b_.get_d()) * s;
    else im = static_cast<long double>(b_.get_d()) * s;
  }
  return {re, im};
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  if (!o.is_rational()) d_ = join_fields(is_rational() ? 1 : d_, o.d_);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  if (!o.is_rational()) d_ = join_fields(is_rational() ? 1 : d_, o.d_);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
  if (o.is_rational()) {
    a_ *= o.a_;
    b_ *= o.a_;
  } else if (is_rational()) {
    b_ = a_ * o.b_;
    a_ *= o.a_;
    d_ = o.d_;
  } else {
    long d = join_fields(d_, o.d_);
    mpq_class na = a_ * o.a_ + b_ * o.b_ * d;
    mpq_class nb = a_ * o.b_ + b_ * o.a_;
    a_ = na;
    b_ = nb;
    d_ = d;
  }
  normalize();
  return *this;
}

Coefficient& Coefficient::operator/=(const Coefficient& o) {
  if (o.is_rational()) {
    if (sgn(o.a_) == 0) throw std::domain_error("division by zero coefficient");
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

Coefficient Coefficient::operator-() const {
  Coefficient c = *this;
  c.a_ = -c.a_;
  c.b_ = -c.b_;
  return c;
}

bool structural_less(const Coefficient& x, const Coefficient& y) {
  if (x.d_ != y.d_) return x.d_ < y.d_;
  int c = cmp(x.a_, y.a_);
  if (c != 0) return c < 0;
  return cmp(x.b_, y.b_) < 0;
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

std::string Coefficient::to_string() const {
  if (is_rational()) return rational_to_string(a_);
  std::string rad = "sqrt(" + std::to_string(d_) + ")";
  std::string irr;
  mpq_class mag = abs(b_);
  irr = mag == 1 ? rad : rational_to_string(mag) + "*" + rad;
  if (sgn(a_) == 0) return (sgn(b_) < 0 ? "-" : "") + irr;
  return rational_to_string(a_) + (sgn(b_) < 0 ? " - " : " + ") + irr;
}

}  // namespace stubborn
