#include "braidlab/characters.hpp"

#include <algorithm>

#include "braidlab/errors.hpp"

namespace braidlab
{

namespace
{

std::string check_sequence(const std::vector<Rational>& seq, const char* name)
{
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (sgn(seq[i]) < 0)
      return std::string(name) + "_" + std::to_string(i + 1) + " = " + to_string(seq[i]) + " is negative";
    if (i > 0 && seq[i] > seq[i - 1])
      return std::string(name) + " is not nonincreasing at position " + std::to_string(i + 1);
  }
  return {};
}

} // namespace

ThomaValidation validate_thoma(const ThomaParams& p)
{
  if (auto msg = check_sequence(p.a, "a"); !msg.empty())
    return {false, msg};
  if (auto msg = check_sequence(p.b, "b"); !msg.empty())
    return {false, msg};
  Rational total = 0;
  for (const auto& x : p.a)
    total += x;
  for (const auto& x : p.b)
    total += x;
  if (total > 1)
    return {false, "sum(a) + sum(b) = " + to_string(total) + " exceeds 1"};
  return {};
}

Rational thoma_cycle_value(const ThomaParams& p, unsigned k)
{
  Rational sa = 0, sb = 0;
  for (const auto& x : p.a)
    sa += pow(x, k);
  for (const auto& x : p.b)
    sb += pow(x, k);
  return k % 2 == 0 ? Rational(sa - sb) : Rational(sa + sb);
}

Rational thoma_character(const ThomaParams& p, const Permutation& sigma)
{
  if (auto v = validate_thoma(p); !v)
    throw ValidationError("invalid Thoma parameters: " + v.violation);
  Rational value = 1;
  for (const auto& [k, m] : cycle_type_counts(sigma))
    value *= pow(thoma_cycle_value(p, k), m);
  return value;
}

// GroupPolynomial ---------------------------------------------------------------

GroupPolynomial GroupPolynomial::monomial(const BraidWord& w, ComplexRational coefficient)
{
  GroupPolynomial x;
  x.add_term(w, coefficient);
  return x;
}

void GroupPolynomial::add_term(const BraidWord& w, const ComplexRational& coefficient)
{
  if (coefficient.is_zero())
    return;
  auto key = free_reduce(w);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), coefficient);
    return;
  }
  it->second += coefficient;
  if (it->second.is_zero())
    terms_.erase(it);
}

int GroupPolynomial::strand_bound() const
{
  int n = 1;
  for (const auto& [w, c] : terms_)
    n = std::max(n, w.strand_bound());
  return n;
}

GroupPolynomial GroupPolynomial::adjoint() const
{
  GroupPolynomial out;
  for (const auto& [w, c] : terms_)
    out.add_term(w.inverse(), conj(c));
  return out;
}

GroupPolynomial& GroupPolynomial::operator+=(const GroupPolynomial& rhs)
{
  for (const auto& [w, c] : rhs.terms_)
    add_term(w, c);
  return *this;
}

GroupPolynomial& GroupPolynomial::operator*=(const ComplexRational& scalar)
{
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_)
    c *= scalar;
  return *this;
}

GroupPolynomial operator*(const GroupPolynomial& lhs, const GroupPolynomial& rhs)
{
  GroupPolynomial out;
  for (const auto& [w1, c1] : lhs.terms_)
    for (const auto& [w2, c2] : rhs.terms_)
      out.add_term(w1 * w2, c1 * c2);
  return out;
}

ComplexRational delta_trace(const GroupPolynomial& x, std::optional<int> strands)
{
  const int n = strands.value_or(x.strand_bound());
  ComplexRational total;
  for (const auto& [w, c] : x.terms())
    if (braid_equal(w, BraidWord{}, n))
      total += c;
  return total;
}

Rational delta_character(const BraidWord& w, std::optional<int> strands)
{
  return is_trivial(w, strands) ? Rational(1) : Rational(0);
}

} // namespace braidlab
