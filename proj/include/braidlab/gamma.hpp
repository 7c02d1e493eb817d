#ifndef BRAIDLAB_GAMMA_HPP
#define BRAIDLAB_GAMMA_HPP

#include <functional>
#include <string>
#include <vector>

#include "braidlab/braid.hpp"
#include "braidlab/errors.hpp"

namespace braidlab
{

/// (sigma_i^-1 ... sigma_2^-1) sigma_1 (sigma_2 ... sigma_i); projects to the star transposition (0 i).
BraidWord gamma_word(int i);

/// (sigma_1 ... sigma_{i-1}) sigma_i (sigma_{i-1}^-1 ... sigma_1^-1), equal to gamma_word(i) in B_{i+1}.
BraidWord gamma_word_alt(int i);

/// sigma_{N+1} sigma_{N+2} ... sigma_{N+k}.
BraidWord partial_shift_word(int offset, int length);

/// sigma_n sigma_{n-1} ... sigma_1 (empty for n = 0).
BraidWord descending_word(int n);

/// Action of the Artin generators on an opaque model element.
///
/// apply(i, +1, x) applies rho(sigma_i), apply(i, -1, x) applies its inverse.
/// Hooks must be side-effect free.
template <class Element>
struct RepresentationHook
{
  std::function<Element(int generator, int sign, const Element&)> apply;

  Element operator()(int generator, int sign, const Element& x) const { return apply(generator, sign, x); }
};

/// rho(w) x, rightmost letter applied first.
template <class Element>
Element apply_word(const RepresentationHook<Element>& rep, const BraidWord& w, Element x)
{
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    x = rep(*it > 0 ? *it : -*it, *it > 0 ? 1 : -1, x);
  return x;
}

/// [x_0, x_1, ..., x_count] with x_k = rho(sigma_k sigma_{k-1} ... sigma_1) x_0.
template <class Element>
std::vector<Element> constructive_sequence(const RepresentationHook<Element>& rep, const Element& x0, int count)
{
  if (count < 1)
    throw PreconditionError("constructive sequence needs count >= 1, got " + std::to_string(count));
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(count) + 1);
  out.push_back(x0);
  for (int k = 1; k <= count; ++k)
    out.push_back(rep(k, 1, out.back()));
  return out;
}

/// True iff rho(sigma_n) x0 = x0 for every 2 <= n <= max_n.
template <class Element, class Equal>
bool localization_check(const RepresentationHook<Element>& rep, const Element& x0, int max_n, Equal&& equal)
{
  if (max_n < 2)
    throw PreconditionError("localization check needs max_n >= 2, got " + std::to_string(max_n));
  for (int n = 2; n <= max_n; ++n)
    if (!equal(rep(n, 1, x0), x0))
      return false;
  return true;
}

/// Hook acting on braid words by conjugation, x -> sigma_i^s x sigma_i^-s.
///
/// The shifted variant is rho_1(sigma_i) = rho(sigma_{i+1}^-1), that is
/// x -> sigma_{i+1}^-s x sigma_{i+1}^s; starting from sigma_1 its constructive
/// sequence is gamma_1, gamma_2, ...
RepresentationHook<BraidWord> word_conjugation_hook(bool shifted = false);

} // namespace braidlab

#endif // BRAIDLAB_GAMMA_HPP
