#ifndef BRAIDLAB_ERRORS_HPP
#define BRAIDLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidlab
{

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A braid word containing the letter 0.
class MalformedWordError : public Error
{
public:
  using Error::Error;
};

/// Strand count too small for the letters of a word.
class BoundError : public Error
{
public:
  using Error::Error;
};

class InvalidCycleError : public Error
{
public:
  using Error::Error;
};

class IndexError : public Error
{
public:
  using Error::Error;
};

/// Thoma parameters violating an ordering or mass constraint.
class ValidationError : public Error
{
public:
  using Error::Error;
};

/// Permutation support or generator index outside the tensor slots of a model.
class SlotError : public Error
{
public:
  using Error::Error;
};

/// Model dimension d^sites larger than the configured cap.
class CapError : public Error
{
public:
  using Error::Error;
};

class DimensionError : public Error
{
public:
  using Error::Error;
};

class UnsupportedError : public Error
{
public:
  using Error::Error;
};

class PreconditionError : public Error
{
public:
  using Error::Error;
};

/// Oracle failure; carries the rendered word that triggered it.
class OracleError : public Error
{
public:
  OracleError(const std::string& what, std::string word)
    : Error(what + " (word: [" + word + "])"), word_(std::move(word))
  {}

  const std::string& word() const noexcept { return word_; }

private:
  std::string word_;
};

/// A stronger distributional symmetry passed while a weaker one failed.
class HierarchyInversionError : public Error
{
public:
  using Error::Error;
};

/// Malformed text input; position is the 0-based character offset of the token.
class ParseError : public Error
{
public:
  ParseError(const std::string& what, std::string token, std::size_t position)
    : Error(what + ": '" + token + "' at position " + std::to_string(position)),
      token_(std::move(token)), position_(position)
  {}

  const std::string& token() const noexcept { return token_; }
  std::size_t position() const noexcept { return position_; }

private:
  std::string token_;
  std::size_t position_;
};

} // namespace braidlab

#endif // BRAIDLAB_ERRORS_HPP
