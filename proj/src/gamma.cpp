#include "braidlab/gamma.hpp"

namespace braidlab
{

namespace
{

void check_index(int i)
{
  if (i < 1)
    throw IndexError("gamma index must be >= 1, got " + std::to_string(i));
}

} // namespace

BraidWord gamma_word(int i)
{
  check_index(i);
  std::vector<Letter> letters;
  for (int j = i; j >= 2; --j)
    letters.push_back(-j);
  letters.push_back(1);
  for (int j = 2; j <= i; ++j)
    letters.push_back(j);
  return BraidWord(std::move(letters));
}

BraidWord gamma_word_alt(int i)
{
  check_index(i);
  std::vector<Letter> letters;
  for (int j = 1; j <= i; ++j)
    letters.push_back(j);
  for (int j = i - 1; j >= 1; --j)
    letters.push_back(-j);
  return BraidWord(std::move(letters));
}

BraidWord partial_shift_word(int offset, int length)
{
  if (offset < 0)
    throw IndexError("partial shift offset must be >= 0, got " + std::to_string(offset));
  if (length < 1)
    throw IndexError("partial shift length must be >= 1, got " + std::to_string(length));
  std::vector<Letter> letters;
  for (int j = 1; j <= length; ++j)
    letters.push_back(offset + j);
  return BraidWord(std::move(letters));
}

BraidWord descending_word(int n)
{
  std::vector<Letter> letters;
  for (int j = n; j >= 1; --j)
    letters.push_back(j);
  return BraidWord(std::move(letters));
}

RepresentationHook<BraidWord> word_conjugation_hook(bool shifted)
{
  return {[shifted](int i, int sign, const BraidWord& x) {
    const BraidWord s = shifted ? BraidWord{-sign * (i + 1)} : BraidWord{sign * i};
    return free_reduce(s * x * s.inverse());
  }};
}

} // namespace braidlab
