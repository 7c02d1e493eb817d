#ifndef BRAIDLAB_BRAID_HPP
#define BRAIDLAB_BRAID_HPP

#include <compare>
#include <initializer_list>
#include <optional>
#include <vector>

#include "braidlab/permutation.hpp"

namespace braidlab
{

using Letter = int;

/// Word in the Artin generators: letter k > 0 is sigma_k, k < 0 is sigma_|k|^-1.
///
/// sigma_k crosses strands k-1 and k; a word lives in B_n for every
/// n >= strand_bound() = 1 + max |letter|.
class BraidWord
{
public:
  BraidWord() = default;
  BraidWord(std::initializer_list<Letter> letters);
  /// Throws MalformedWordError on a zero letter.
  explicit BraidWord(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int strand_bound() const;

  /// Reverses the order and negates every letter.
  BraidWord inverse() const;

  BraidWord& operator*=(const BraidWord& rhs);
  friend BraidWord operator*(BraidWord lhs, const BraidWord& rhs) { return lhs *= rhs; }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend auto operator<=>(const BraidWord&, const BraidWord&) = default;

private:
  std::vector<Letter> letters_;
};

inline BraidWord inverse(const BraidWord& w) { return w.inverse(); }

BraidWord power(const BraidWord& w, int exponent);

/// Cancels adjacent k, -k pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

/// Left normal form Delta^p A_1 ... A_r of an element of B_n.
///
/// Each A_j is a permutation braid given by its permutation of {0..n-1}
/// (product of the transpositions (i-1 i) of a positive reduced word, left
/// factor first). No factor is trivial or equal to Delta, and every
/// consecutive pair is left-weighted.
struct GarsideNormalForm
{
  int strands = 1;
  long delta_power = 0;
  std::vector<Permutation> factors;

  friend bool operator==(const GarsideNormalForm&, const GarsideNormalForm&) = default;
};

/// n defaults to w.strand_bound(); throws BoundError when n is too small.
GarsideNormalForm garside_normal_form(const BraidWord& w, std::optional<int> strands = {});

/// Word spelling a normal form (positive reduced words for Delta and the factors).
BraidWord to_word(const GarsideNormalForm& nf);

/// Positive reduced word of a permutation braid in B_n.
BraidWord permutation_braid_word(const Permutation& p);

/// Half twist Delta of B_n as a positive word.
BraidWord half_twist(int strands);

/// Equality in B_n; n defaults to the larger strand bound of the two words.
bool braid_equal(const BraidWord& lhs, const BraidWord& rhs, std::optional<int> strands = {});

bool is_trivial(const BraidWord& w, std::optional<int> strands = {});

/// Freely reduced word over x_0..x_{n-1}. Letters are stored shifted by one:
/// +(k+1) is x_k and -(k+1) is x_k^-1.
class FreeGroupWord
{
public:
  FreeGroupWord() = default;
  /// Takes letters in the shifted encoding and reduces them.
  explicit FreeGroupWord(std::vector<int> encoded);

  static FreeGroupWord generator(int k, bool inverted = false);

  const std::vector<int>& encoded() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  FreeGroupWord inverse() const;
  FreeGroupWord& operator*=(const FreeGroupWord& rhs);
  friend FreeGroupWord operator*(FreeGroupWord lhs, const FreeGroupWord& rhs) { return lhs *= rhs; }

  friend bool operator==(const FreeGroupWord&, const FreeGroupWord&) = default;

private:
  std::vector<int> letters_;
};

/// Artin's action of B_n on the free group F_n.
///
/// sigma_i sends x_{i-1} to x_{i-1} x_i x_{i-1}^-1 and x_i to x_{i-1}, fixing
/// the other generators. The word acts as the composite automorphism of its
/// letters, rightmost letter applied first.
FreeGroupWord artin_action(const BraidWord& w, const FreeGroupWord& f, std::optional<int> strands = {});

/// True iff the action of w fixes every generator x_0..x_{n-1}.
bool artin_acts_trivially(const BraidWord& w, std::optional<int> strands = {});

/// Image under sigma_i -> (i-1 i), left factor acting first.
Permutation project_to_permutation(const BraidWord& w);

} // namespace braidlab

#endif // BRAIDLAB_BRAID_HPP
