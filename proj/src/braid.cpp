#include "braidlab/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "braidlab/errors.hpp"

namespace braidlab
{

namespace
{

void check_letters(const std::vector<Letter>& letters)
{
  for (std::size_t pos = 0; pos < letters.size(); ++pos)
    if (letters[pos] == 0)
      throw MalformedWordError("letter 0 at position " + std::to_string(pos) + " of braid word");
}

} // namespace

BraidWord::BraidWord(std::initializer_list<Letter> letters) : letters_(letters)
{
  check_letters(letters_);
}

BraidWord::BraidWord(std::vector<Letter> letters) : letters_(std::move(letters))
{
  check_letters(letters_);
}

int BraidWord::strand_bound() const
{
  int m = 0;
  for (Letter k : letters_)
    m = std::max(m, std::abs(k));
  return m + 1;
}

BraidWord BraidWord::inverse() const
{
  BraidWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back(-*it);
  return out;
}

BraidWord& BraidWord::operator*=(const BraidWord& rhs)
{
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

BraidWord power(const BraidWord& w, int exponent)
{
  const BraidWord base = exponent < 0 ? w.inverse() : w;
  BraidWord out;
  for (int j = 0; j < std::abs(exponent); ++j)
    out *= base;
  return out;
}

BraidWord free_reduce(const BraidWord& w)
{
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter k : w.letters()) {
    if (!stack.empty() && stack.back() == -k)
      stack.pop_back();
    else
      stack.push_back(k);
  }
  return BraidWord(std::move(stack));
}

Permutation project_to_permutation(const BraidWord& w)
{
  const auto n = static_cast<std::size_t>(w.strand_bound());
  std::vector<Point> img(n), inv(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::iota(inv.begin(), inv.end(), Point{0});
  // Right multiplication by (i-1 i) relabels the values i-1 and i.
  for (Letter k : w.letters()) {
    const auto i = static_cast<Point>(std::abs(k));
    std::swap(img[inv[i - 1]], img[inv[i]]);
    std::swap(inv[i - 1], inv[i]);
  }
  return Permutation::from_images(std::move(img));
}

// Free group ------------------------------------------------------------------

FreeGroupWord::FreeGroupWord(std::vector<int> encoded)
{
  for (int x : encoded) {
    if (x == 0)
      throw MalformedWordError("free group letter 0");
    if (!letters_.empty() && letters_.back() == -x)
      letters_.pop_back();
    else
      letters_.push_back(x);
  }
}

FreeGroupWord FreeGroupWord::generator(int k, bool inverted)
{
  if (k < 0)
    throw IndexError("free generator index " + std::to_string(k));
  FreeGroupWord f;
  f.letters_.push_back(inverted ? -(k + 1) : k + 1);
  return f;
}

FreeGroupWord FreeGroupWord::inverse() const
{
  FreeGroupWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back(-*it);
  return out;
}

FreeGroupWord& FreeGroupWord::operator*=(const FreeGroupWord& rhs)
{
  for (int x : rhs.letters_) {
    if (!letters_.empty() && letters_.back() == -x)
      letters_.pop_back();
    else
      letters_.push_back(x);
  }
  return *this;
}

namespace
{

int resolve_strands(const BraidWord& w, std::optional<int> strands)
{
  const int bound = w.strand_bound();
  const int n = strands.value_or(bound);
  if (n < bound)
    throw BoundError("braid word needs " + std::to_string(bound) + " strands, got " + std::to_string(n));
  return n;
}

// Image of a single generator x_g (encoded g+1) under the automorphism of one braid letter.
FreeGroupWord generator_image(Letter letter, int g)
{
  const int i = std::abs(letter);
  if (g != i - 1 && g != i)
    return FreeGroupWord::generator(g);
  const auto left = FreeGroupWord::generator(i - 1);
  const auto right = FreeGroupWord::generator(i);
  if (letter > 0)
    return g == i - 1 ? left * right * left.inverse() : left;
  return g == i - 1 ? right : right.inverse() * left * right;
}

FreeGroupWord substitute(Letter letter, const FreeGroupWord& f)
{
  FreeGroupWord out;
  for (int x : f.encoded()) {
    const auto image = generator_image(letter, std::abs(x) - 1);
    out *= x > 0 ? image : image.inverse();
  }
  return out;
}

} // namespace

FreeGroupWord artin_action(const BraidWord& w, const FreeGroupWord& f, std::optional<int> strands)
{
  const int n = resolve_strands(w, strands);
  for (int x : f.encoded())
    if (std::abs(x) > n)
      throw BoundError("free generator x_" + std::to_string(std::abs(x) - 1) + " outside F_" + std::to_string(n));
  FreeGroupWord out = f;
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    out = substitute(*it, out);
  return out;
}

bool artin_acts_trivially(const BraidWord& w, std::optional<int> strands)
{
  const int n = resolve_strands(w, strands);
  const BraidWord reduced = free_reduce(w);
  for (int k = 0; k < n; ++k) {
    const auto x = FreeGroupWord::generator(k);
    if (artin_action(reduced, x, n) != x)
      return false;
  }
  return true;
}

} // namespace braidlab
