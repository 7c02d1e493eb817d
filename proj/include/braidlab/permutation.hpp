#ifndef BRAIDLAB_PERMUTATION_HPP
#define BRAIDLAB_PERMUTATION_HPP

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace braidlab
{

using Point = std::uint32_t;

/// Finite-support bijection of the nonnegative integers.
///
/// Stored densely as the images of 0..degree()-1 with trailing fixed points
/// trimmed, so two permutations are equal iff their stored images are.
///
/// Products follow one convention throughout the library: in p * q the left
/// factor acts first, (p * q)(x) = q(p(x)).
class Permutation
{
public:
  Permutation() = default;

  /// images[x] is the image of x; must be a bijection of {0..images.size()-1}.
  static Permutation from_images(std::vector<Point> images);
  static Permutation transposition(Point a, Point b);
  /// The cycle n_1 -> n_2 -> ... -> n_k -> n_1; entries must be distinct.
  static Permutation cycle(std::span<const Point> points);
  /// Product of possibly overlapping cycles, leftmost cycle acting first.
  static Permutation from_cycles(const std::vector<std::vector<Point>>& cycles);

  Point operator()(Point x) const { return x < images_.size() ? images_[x] : x; }

  /// One past the largest moved point (0 for the identity).
  std::size_t degree() const { return images_.size(); }
  bool is_identity() const { return images_.empty(); }
  /// Moved points in increasing order.
  std::vector<Point> support() const;
  /// Images of 0..n-1 (n >= degree()).
  std::vector<Point> images(std::size_t n) const;
  /// Moved points with their images; never contains a fixed point.
  std::map<Point, Point> support_map() const;

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  explicit Permutation(std::vector<Point> images);
  void trim();

  std::vector<Point> images_;
};

/// p acts first, then q.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

inline Permutation inverse(const Permutation& p) { return p.inverse(); }

using Cycle = std::vector<Point>;

/// Disjoint cycles of length >= 2, each starting at its smallest element,
/// ordered by that element.
struct CycleDecomposition
{
  std::vector<Cycle> cycles;

  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

CycleDecomposition cycle_decomposition(const Permutation& p);

/// k -> number of k-cycles, k >= 2; zero counts are omitted.
std::map<unsigned, unsigned> cycle_type_counts(const Permutation& p);

/// Star indices; index i stands for the transposition (0 i), index 0 for the identity.
using StarWord = std::vector<Point>;

/// [n_1, ..., n_k, n_1] for the cycle (n_1 ... n_k), rotated to start at 0 when 0 is moved.
StarWord star_word_for_cycle(std::span<const Point> cycle);

/// One star word per cycle of the canonical decomposition.
std::vector<StarWord> star_word_for_permutation(const Permutation& p);

/// Product of the transpositions (0 i), left factor first; zeros are skipped.
Permutation evaluate_star_word(std::span<const Point> word);

} // namespace braidlab

#endif // BRAIDLAB_PERMUTATION_HPP
