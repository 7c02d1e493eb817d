#include "braidlab/braid.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "braidlab/errors.hpp"

namespace braidlab
{

namespace
{

// Permutation braid on n strands as images plus inverse images. Right
// multiplication by sigma_i relabels values i-1, i; left multiplication swaps
// positions i-1, i.
struct Simple
{
  std::vector<int> img;
  std::vector<int> inv;

  explicit Simple(int n) : img(n), inv(n)
  {
    std::iota(img.begin(), img.end(), 0);
    std::iota(inv.begin(), inv.end(), 0);
  }

  int strands() const { return static_cast<int>(img.size()); }

  // i in the starting set: sigma_i is a left divisor.
  bool starts_with(int i) const { return img[i - 1] > img[i]; }
  // i in the finishing set: sigma_i is a right divisor.
  bool ends_with(int i) const { return inv[i - 1] > inv[i]; }

  void append(int i)
  {
    std::swap(img[inv[i - 1]], img[inv[i]]);
    std::swap(inv[i - 1], inv[i]);
  }

  void drop_front(int i)
  {
    std::swap(inv[img[i - 1]], inv[img[i]]);
    std::swap(img[i - 1], img[i]);
  }

  bool is_identity() const
  {
    for (int x = 0; x < strands(); ++x)
      if (img[x] != x)
        return false;
    return true;
  }

  bool is_delta() const
  {
    const int n = strands();
    for (int x = 0; x < n; ++x)
      if (img[x] != n - 1 - x)
        return false;
    return true;
  }

  // Delta X Delta^-1, i.e. sigma_i -> sigma_{n-i}.
  void flip()
  {
    const int n = strands();
    std::vector<int> out(n);
    for (int x = 0; x < n; ++x)
      out[x] = n - 1 - img[n - 1 - x];
    img = std::move(out);
    for (int x = 0; x < n; ++x)
      inv[img[x]] = x;
  }

  static Simple generator(int n, int i)
  {
    Simple s(n);
    s.append(i);
    return s;
  }

  // The simple X with X sigma_i = Delta, so that sigma_i^-1 = Delta^-1 X.
  static Simple left_complement(int n, int i)
  {
    Simple s(n);
    for (int x = 0; x < n; ++x)
      s.img[x] = n - 1 - x;
    for (int x = 0; x < n; ++x)
      s.inv[s.img[x]] = x;
    s.append(i);
    return s;
  }
};

// Moves generators from the front of b onto the back of a until every
// starting generator of b already ends a.
bool left_weight(Simple& a, Simple& b)
{
  const int n = a.strands();
  bool changed = false;
  for (bool progress = true; progress;) {
    progress = false;
    for (int i = 1; i < n; ++i) {
      if (b.starts_with(i) && !a.ends_with(i)) {
        a.append(i);
        b.drop_front(i);
        progress = changed = true;
      }
    }
  }
  return changed;
}

class NormalFormBuilder
{
public:
  explicit NormalFormBuilder(int n) : n_(n) {}

  void push(Letter k)
  {
    const int i = std::abs(k);
    if (k > 0) {
      factors_.push_back(Simple::generator(n_, i));
    } else {
      for (auto& f : factors_)
        f.flip();
      --delta_power_;
      factors_.push_back(Simple::left_complement(n_, i));
    }
    settle();
  }

  GarsideNormalForm finish() const
  {
    GarsideNormalForm nf;
    nf.strands = n_;
    nf.delta_power = delta_power_;
    for (const auto& f : factors_)
      nf.factors.push_back(Permutation::from_images(std::vector<Point>(f.img.begin(), f.img.end())));
    return nf;
  }

private:
  void settle()
  {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t j = factors_.size(); j-- > 1;)
        changed |= left_weight(factors_[j - 1], factors_[j]);
    }
    while (!factors_.empty() && factors_.back().is_identity())
      factors_.pop_back();
    std::size_t deltas = 0;
    while (deltas < factors_.size() && factors_[deltas].is_delta())
      ++deltas;
    if (deltas > 0) {
      factors_.erase(factors_.begin(), factors_.begin() + static_cast<std::ptrdiff_t>(deltas));
      delta_power_ += static_cast<long>(deltas);
    }
  }

  int n_;
  long delta_power_ = 0;
  std::vector<Simple> factors_;
};

int checked_strands(const BraidWord& w, std::optional<int> strands)
{
  const int bound = w.strand_bound();
  const int n = strands.value_or(bound);
  if (n < bound)
    throw BoundError("braid word needs " + std::to_string(bound) + " strands, got " + std::to_string(n));
  return n;
}

} // namespace

GarsideNormalForm garside_normal_form(const BraidWord& w, std::optional<int> strands)
{
  const int n = checked_strands(w, strands);
  if (n == 1)
    return GarsideNormalForm{};
  NormalFormBuilder builder(n);
  const BraidWord reduced = free_reduce(w);
  for (Letter k : reduced.letters())
    builder.push(k);
  return builder.finish();
}

BraidWord permutation_braid_word(const Permutation& p)
{
  std::vector<Point> img = p.images(p.degree());
  std::vector<Letter> letters;
  for (bool found = true; found;) {
    found = false;
    for (std::size_t i = 1; i < img.size(); ++i) {
      if (img[i - 1] > img[i]) {
        letters.push_back(static_cast<Letter>(i));
        std::swap(img[i - 1], img[i]);
        found = true;
        break;
      }
    }
  }
  return BraidWord(std::move(letters));
}

BraidWord half_twist(int strands)
{
  if (strands < 1)
    throw BoundError("strand count must be positive");
  std::vector<Point> img(static_cast<std::size_t>(strands));
  for (int x = 0; x < strands; ++x)
    img[static_cast<std::size_t>(x)] = static_cast<Point>(strands - 1 - x);
  return permutation_braid_word(Permutation::from_images(std::move(img)));
}

BraidWord to_word(const GarsideNormalForm& nf)
{
  BraidWord out = power(half_twist(nf.strands), static_cast<int>(nf.delta_power));
  for (const auto& f : nf.factors)
    out *= permutation_braid_word(f);
  return out;
}

bool braid_equal(const BraidWord& lhs, const BraidWord& rhs, std::optional<int> strands)
{
  const int n = strands.value_or(std::max(lhs.strand_bound(), rhs.strand_bound()));
  return garside_normal_form(lhs, n) == garside_normal_form(rhs, n);
}

bool is_trivial(const BraidWord& w, std::optional<int> strands)
{
  const auto nf = garside_normal_form(w, strands);
  return nf.delta_power == 0 && nf.factors.empty();
}

} // namespace braidlab
