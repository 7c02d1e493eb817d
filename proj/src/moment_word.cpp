#include "braidlab/moment_word.hpp"

#include <cctype>

#include "braidlab/errors.hpp"

namespace braidlab
{

MomentWord adjoint(const MomentWord& w)
{
  MomentWord out(w.rbegin(), w.rend());
  for (auto& letter : out)
    letter.adjoint = !letter.adjoint;
  return out;
}

std::string to_string(const MomentWord& w)
{
  std::string out;
  for (const auto& letter : w) {
    if (!out.empty())
      out += ' ';
    out += std::to_string(letter.index);
    if (letter.adjoint)
      out += '*';
  }
  return out;
}

MomentWord parse_moment_word(std::string_view text)
{
  MomentWord out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    std::string token(text.substr(start, pos - start));
    std::string digits = token;
    bool adjoint = false;
    if (!digits.empty() && digits.back() == '*') {
      adjoint = true;
      digits.pop_back();
    }
    if (digits.empty() || digits.size() > 9)
      throw ParseError("malformed moment letter", token, start);
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("malformed moment letter", token, start);
    out.push_back({std::stoi(digits), adjoint});
  }
  return out;
}

} // namespace braidlab
