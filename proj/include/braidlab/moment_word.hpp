#ifndef BRAIDLAB_MOMENT_WORD_HPP
#define BRAIDLAB_MOMENT_WORD_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace braidlab
{

/// One factor x_index or x_index^* of a joint moment.
struct MomentLetter
{
  int index = 0;
  bool adjoint = false;

  friend bool operator==(const MomentLetter&, const MomentLetter&) = default;
  friend auto operator<=>(const MomentLetter&, const MomentLetter&) = default;
};

using MomentWord = std::vector<MomentLetter>;

/// Reversed order with every adjoint flag flipped.
MomentWord adjoint(const MomentWord& w);

/// Tokens "i" or "i*" separated by single spaces; the empty word is "".
std::string to_string(const MomentWord& w);

/// Inverse of to_string; throws ParseError on a malformed token.
MomentWord parse_moment_word(std::string_view text);

} // namespace braidlab

#endif // BRAIDLAB_MOMENT_WORD_HPP
