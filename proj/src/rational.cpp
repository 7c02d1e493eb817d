#include "braidlab/rational.hpp"

#include <cctype>

#include "braidlab/errors.hpp"

namespace braidlab
{

Rational parse_rational(std::string_view text)
{
  std::string s(text);
  auto bad = [&] { return ParseError("malformed rational", s, 0); };
  if (s.empty())
    throw bad();
  std::size_t slash = s.find('/');
  auto digits_ok = [](std::string_view part, bool allow_sign) {
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+'))
      part.remove_prefix(1);
    if (part.empty())
      return false;
    for (char c : part)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        return false;
    return true;
  };
  std::string_view sv(s);
  if (slash == std::string::npos) {
    if (!digits_ok(sv, true))
      throw bad();
  } else if (!digits_ok(sv.substr(0, slash), true) || !digits_ok(sv.substr(slash + 1), false)) {
    throw bad();
  }
  std::string normalized = s[0] == '+' ? s.substr(1) : s;
  Rational q;
  if (q.set_str(normalized, 10) != 0 || sgn(q.get_den()) == 0)
    throw bad();
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q)
{
  return q.get_str();
}

double to_double(const Rational& q)
{
  return q.get_d();
}

Rational pow(const Rational& base, unsigned exponent)
{
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const ComplexRational& z)
{
  if (sgn(z.im) == 0)
    return to_string(z.re);
  if (sgn(z.re) == 0)
    return to_string(z.im) + " i";
  if (sgn(z.im) < 0)
    return to_string(z.re) + " - " + to_string(Rational(-z.im)) + " i";
  return to_string(z.re) + " + " + to_string(z.im) + " i";
}

} // namespace braidlab
