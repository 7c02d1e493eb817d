#include "braidlab/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "braidlab/errors.hpp"

namespace braidlab
{

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images))
{
  trim();
}

void Permutation::trim()
{
  while (!images_.empty() && images_.back() == images_.size() - 1)
    images_.pop_back();
}

Permutation Permutation::from_images(std::vector<Point> images)
{
  std::vector<bool> hit(images.size(), false);
  for (Point y : images) {
    if (y >= images.size() || hit[y])
      throw InvalidCycleError("image list is not a bijection of {0.." + std::to_string(images.size()) + "}");
    hit[y] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(Point a, Point b)
{
  if (a == b)
    return {};
  std::vector<Point> images(std::max(a, b) + 1);
  std::iota(images.begin(), images.end(), Point{0});
  std::swap(images[a], images[b]);
  return Permutation(std::move(images));
}

Permutation Permutation::cycle(std::span<const Point> points)
{
  std::set<Point> seen(points.begin(), points.end());
  if (seen.size() != points.size())
    throw InvalidCycleError("cycle has repeated entries");
  if (points.size() < 2)
    return {};
  std::vector<Point> images(*seen.rbegin() + 1);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = 0; i < points.size(); ++i)
    images[points[i]] = points[(i + 1) % points.size()];
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(const std::vector<std::vector<Point>>& cycles)
{
  Permutation p;
  for (const auto& c : cycles)
    p = compose(p, cycle(c));
  return p;
}

std::vector<Point> Permutation::support() const
{
  std::vector<Point> out;
  for (Point x = 0; x < images_.size(); ++x)
    if (images_[x] != x)
      out.push_back(x);
  return out;
}

std::vector<Point> Permutation::images(std::size_t n) const
{
  std::vector<Point> out(std::max(n, images_.size()));
  for (Point x = 0; x < out.size(); ++x)
    out[x] = (*this)(x);
  return out;
}

std::map<Point, Point> Permutation::support_map() const
{
  std::map<Point, Point> out;
  for (Point x = 0; x < images_.size(); ++x)
    if (images_[x] != x)
      out.emplace(x, images_[x]);
  return out;
}

Permutation Permutation::inverse() const
{
  std::vector<Point> inv(images_.size());
  for (Point x = 0; x < images_.size(); ++x)
    inv[images_[x]] = x;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& p, const Permutation& q)
{
  std::vector<Point> images(std::max(p.degree(), q.degree()));
  for (Point x = 0; x < images.size(); ++x)
    images[x] = q(p(x));
  return Permutation::from_images(std::move(images));
}

CycleDecomposition cycle_decomposition(const Permutation& p)
{
  CycleDecomposition out;
  std::vector<bool> done(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (done[start] || p(start) == start)
      continue;
    Cycle c;
    for (Point x = start; !done[x]; x = p(x)) {
      done[x] = true;
      c.push_back(x);
    }
    out.cycles.push_back(std::move(c));
  }
  return out;
}

std::map<unsigned, unsigned> cycle_type_counts(const Permutation& p)
{
  std::map<unsigned, unsigned> counts;
  for (const auto& c : cycle_decomposition(p).cycles)
    ++counts[static_cast<unsigned>(c.size())];
  return counts;
}

StarWord star_word_for_cycle(std::span<const Point> cycle)
{
  std::set<Point> seen(cycle.begin(), cycle.end());
  if (seen.size() != cycle.size())
    throw InvalidCycleError("cycle has repeated entries");
  if (cycle.empty())
    return {};
  StarWord word(cycle.begin(), cycle.end());
  auto zero = std::find(word.begin(), word.end(), Point{0});
  if (zero != word.end())
    std::rotate(word.begin(), zero, word.end());
  word.push_back(word.front());
  return word;
}

std::vector<StarWord> star_word_for_permutation(const Permutation& p)
{
  std::vector<StarWord> out;
  for (const auto& c : cycle_decomposition(p).cycles)
    out.push_back(star_word_for_cycle(c));
  return out;
}

Permutation evaluate_star_word(std::span<const Point> word)
{
  Permutation p;
  for (Point i : word)
    if (i != 0)
      p = compose(p, Permutation::transposition(0, i));
  return p;
}

} // namespace braidlab
