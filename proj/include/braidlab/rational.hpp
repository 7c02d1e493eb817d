#ifndef BRAIDLAB_RATIONAL_HPP
#define BRAIDLAB_RATIONAL_HPP

#include <complex>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace braidlab
{

using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

double to_double(const Rational& q);

Rational pow(const Rational& base, unsigned exponent);

/// Exact element of Q(i).
struct ComplexRational
{
  Rational re;
  Rational im;

  ComplexRational() : re(0), im(0) {}
  ComplexRational(Rational real) : re(std::move(real)), im(0) {}
  ComplexRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  ComplexRational& operator+=(const ComplexRational& rhs)
  {
    re += rhs.re;
    im += rhs.im;
    return *this;
  }

  ComplexRational& operator-=(const ComplexRational& rhs)
  {
    re -= rhs.re;
    im -= rhs.im;
    return *this;
  }

  ComplexRational& operator*=(const ComplexRational& rhs)
  {
    Rational r = re * rhs.re - im * rhs.im;
    Rational i = re * rhs.im + im * rhs.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend ComplexRational operator+(ComplexRational lhs, const ComplexRational& rhs) { return lhs += rhs; }
  friend ComplexRational operator-(ComplexRational lhs, const ComplexRational& rhs) { return lhs -= rhs; }
  friend ComplexRational operator*(ComplexRational lhs, const ComplexRational& rhs) { return lhs *= rhs; }

  friend bool operator==(const ComplexRational& lhs, const ComplexRational& rhs)
  {
    return lhs.re == rhs.re && lhs.im == rhs.im;
  }
};

inline ComplexRational conj(const ComplexRational& z) { return {z.re, -z.im}; }

inline std::complex<double> to_complex(const ComplexRational& z)
{
  return {to_double(z.re), to_double(z.im)};
}

/// "p/q" when real, otherwise "p/q + r/s i".
std::string to_string(const ComplexRational& z);

inline std::ostream& operator<<(std::ostream& os, const ComplexRational& z) { return os << to_string(z); }

} // namespace braidlab

#endif // BRAIDLAB_RATIONAL_HPP
