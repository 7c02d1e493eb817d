#include "braidlab/symmetry.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <random>

#include "braidlab/braid.hpp"
#include "braidlab/errors.hpp"
#include "braidlab/gamma.hpp"

namespace braidlab
{

std::string to_string(Property p)
{
  switch (p) {
  case Property::identically_distributed:
    return "identically_distributed";
  case Property::stationary:
    return "stationary";
  case Property::spreadable:
    return "spreadable";
  case Property::exchangeable:
    return "exchangeable";
  case Property::independence:
    return "independence";
  }
  return "unknown";
}

MomentOracle memoize(MomentOracle oracle)
{
  auto cache = std::make_shared<std::map<MomentWord, MomentValue>>();
  auto inner = std::move(oracle.eval);
  oracle.eval = [cache, inner = std::move(inner)](const MomentWord& w) {
    if (auto it = cache->find(w); it != cache->end())
      return it->second;
    const MomentValue v = inner(w);
    cache->emplace(w, v);
    return v;
  };
  return oracle;
}

MomentOracle delta_gamma_oracle()
{
  MomentOracle o;
  o.name = "delta";
  o.exact = true;
  o.eval = [](const MomentWord& w) -> MomentValue {
    // Two necessary conditions for triviality are checked before the word
    // problem: zero exponent sum and trivial image in the symmetric group.
    int exponent = 0;
    int top = 0;
    for (const auto& letter : w) {
      if (letter.index < 0)
        throw IndexError("negative moment index " + std::to_string(letter.index));
      exponent += letter.adjoint ? -1 : 1;
      top = std::max(top, letter.index);
    }
    if (exponent != 0)
      return 0.0;
    StarWord stars;
    for (const auto& letter : w)
      stars.push_back(static_cast<Point>(letter.index + 1));
    if (!evaluate_star_word(stars).is_identity())
      return 0.0;
    BraidWord braid;
    for (const auto& letter : w) {
      const BraidWord g = gamma_word(letter.index + 1);
      braid *= letter.adjoint ? g.inverse() : g;
    }
    return is_trivial(braid, top + 2) ? 1.0 : 0.0;
  };
  return o;
}

MomentOracle matrix_star_oracle(const MatrixModel& model)
{
  MomentOracle o;
  o.name = "matrix";
  o.exact = false;
  o.eval = [model](const MomentWord& w) -> MomentValue {
    MomentWord stars = w;
    for (auto& letter : stars)
      ++letter.index;
    return joint_moment(model, std::span<const MomentLetter>(stars));
  };
  return o;
}

// Enumeration ---------------------------------------------------------------

namespace
{

void extend_words(std::vector<MomentWord>& out, MomentWord& prefix, const std::vector<int>& indices, int remaining)
{
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int i : indices) {
    for (bool adj : {false, true}) {
      prefix.push_back({i, adj});
      extend_words(out, prefix, indices, remaining - 1);
      prefix.pop_back();
    }
  }
}

std::vector<MomentWord> words_of_length(const std::vector<int>& indices, int length)
{
  std::vector<MomentWord> out;
  MomentWord prefix;
  extend_words(out, prefix, indices, length);
  return out;
}

std::vector<int> range(int count)
{
  std::vector<int> v(static_cast<std::size_t>(std::max(count, 0)));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

int max_index(const MomentWord& w)
{
  int m = -1;
  for (const auto& letter : w)
    m = std::max(m, letter.index);
  return m;
}

int min_index(const MomentWord& w)
{
  int m = w.empty() ? -1 : w.front().index;
  for (const auto& letter : w)
    m = std::min(m, letter.index);
  return m;
}

// Indices appear in order 0, 1, 2, ... of first occurrence.
bool first_occurrence_canonical(const MomentWord& w)
{
  int next = 0;
  for (const auto& letter : w) {
    if (letter.index > next)
      return false;
    if (letter.index == next)
      ++next;
  }
  return true;
}

// The used index set is exactly {0..r-1}.
bool rank_canonical(const MomentWord& w)
{
  std::set<int> used;
  for (const auto& letter : w)
    used.insert(letter.index);
  return !used.empty() && *used.begin() == 0 && *used.rbegin() == static_cast<int>(used.size()) - 1;
}

} // namespace

std::vector<MomentWord> enumerate_words(int maxlen, int maxidx)
{
  std::vector<MomentWord> out;
  const auto indices = range(maxidx + 1);
  for (int len = 1; len <= maxlen; ++len) {
    auto block = words_of_length(indices, len);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

std::vector<MomentWord> enumerate_words_over(const std::set<int>& indices, int maxlen)
{
  std::vector<MomentWord> out;
  const std::vector<int> sorted(indices.begin(), indices.end());
  for (int len = 0; len <= maxlen; ++len) {
    if (sorted.empty() && len > 0)
      break;
    auto block = words_of_length(sorted, len);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

std::vector<std::vector<int>> all_bijections(int m)
{
  std::vector<std::vector<int>> out;
  auto p = range(m);
  do
    out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<std::vector<int>> increasing_injections(int r, int m)
{
  std::vector<std::vector<int>> out;
  if (r < 0 || r > m)
    return out;
  std::vector<int> pick(static_cast<std::size_t>(r));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    out.push_back(pick);
    int j = r - 1;
    while (j >= 0 && pick[static_cast<std::size_t>(j)] == m - r + j)
      --j;
    if (j < 0)
      break;
    ++pick[static_cast<std::size_t>(j)];
    for (int t = j + 1; t < r; ++t)
      pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
  }
  return out;
}

MomentWord relabel(const MomentWord& w, const std::vector<int>& map)
{
  MomentWord out = w;
  for (auto& letter : out)
    letter.index = map.at(static_cast<std::size_t>(letter.index));
  return out;
}

// Checks --------------------------------------------------------------------

namespace
{

class Comparator
{
public:
  Comparator(const MomentOracle& o, Property property, const CheckBounds& bounds) : o_(o), bounds_(bounds)
  {
    report_.property = property;
    report_.maxlen = bounds.maxlen;
    report_.maxidx = bounds.maxidx;
    report_.tol = o.exact ? 0.0 : bounds.tol;
  }

  MomentValue eval(const MomentWord& w)
  {
    try {
      return o_.eval(w);
    } catch (const OracleError&) {
      throw;
    } catch (const std::exception& e) {
      throw OracleError("oracle '" + o_.name + "' failed: " + e.what(), to_string(w));
    }
  }

  bool same(MomentValue a, MomentValue b) const
  {
    return o_.exact ? a == b : std::abs(a - b) <= bounds_.tol;
  }

  void expect_equal(const MomentWord& word, MomentValue value, const MomentWord& transformed,
                    MomentValue transformed_value)
  {
    if (same(value, transformed_value))
      return;
    ++report_.violations;
    if (report_.witnesses.size() < std::max<std::size_t>(bounds_.max_witnesses, 1))
      report_.witnesses.push_back({word, transformed, value, transformed_value});
  }

  // Compares the representative against each distinct image.
  void check_orbit(const MomentWord& rep, const std::vector<std::vector<int>>& maps)
  {
    ++report_.representatives;
    report_.transformations += maps.size();
    std::set<MomentWord> images;
    for (const auto& map : maps)
      images.insert(relabel(rep, map));
    images.erase(rep);
    if (images.empty())
      return;
    const MomentValue base = eval(rep);
    for (const auto& image : images)
      expect_equal(rep, base, image, eval(image));
  }

  SymmetryReport finish()
  {
    std::sort(report_.witnesses.begin(), report_.witnesses.end(), [](const Witness& a, const Witness& b) {
      return std::tie(a.word, a.transformed) < std::tie(b.word, b.transformed);
    });
    report_.pass = report_.violations == 0;
    return std::move(report_);
  }

  SymmetryReport& report() { return report_; }

private:
  const MomentOracle& o_;
  CheckBounds bounds_;
  SymmetryReport report_;
};

void check_bounds(const CheckBounds& b)
{
  if (b.maxlen < 1 || b.maxidx < 1)
    throw PreconditionError("symmetry checks need maxlen >= 1 and maxidx >= 1");
  if (b.tol < 0)
    throw PreconditionError("tolerance must be nonnegative");
}

void preflight(const MomentOracle& o, const CheckBounds& b)
{
  check_adjoint_coherence(o, b.maxlen, b.maxidx, b.tol);
}

} // namespace

SymmetryReport check_identically_distributed(const MomentOracle& o, const CheckBounds& bounds)
{
  check_bounds(bounds);
  preflight(o, bounds);
  Comparator cmp(o, Property::identically_distributed, bounds);
  std::vector<std::vector<int>> maps;
  for (int k = 0; k <= bounds.maxidx; ++k)
    maps.push_back({k});
  for (int len = 1; len <= bounds.maxlen; ++len)
    for (const auto& rep : words_of_length({0}, len))
      cmp.check_orbit(rep, maps);
  return cmp.finish();
}

SymmetryReport check_stationary(const MomentOracle& o, const CheckBounds& bounds)
{
  check_bounds(bounds);
  preflight(o, bounds);
  Comparator cmp(o, Property::stationary, bounds);
  for (const auto& rep : enumerate_words(bounds.maxlen, bounds.maxidx)) {
    if (min_index(rep) != 0)
      continue;
    const int top = max_index(rep);
    std::vector<std::vector<int>> maps;
    for (int k = 0; k + top <= bounds.maxidx; ++k) {
      auto shift = range(top + 1);
      for (auto& x : shift)
        x += k;
      maps.push_back(std::move(shift));
    }
    cmp.check_orbit(rep, maps);
  }
  return cmp.finish();
}

SymmetryReport check_spreadable(const MomentOracle& o, const CheckBounds& bounds)
{
  check_bounds(bounds);
  preflight(o, bounds);
  Comparator cmp(o, Property::spreadable, bounds);
  const int window = bounds.maxidx + 1;
  std::map<int, std::vector<std::vector<int>>> by_rank;
  for (const auto& rep : enumerate_words(bounds.maxlen, bounds.maxidx)) {
    if (!rank_canonical(rep))
      continue;
    const int r = max_index(rep) + 1;
    auto it = by_rank.find(r);
    if (it == by_rank.end())
      it = by_rank.emplace(r, increasing_injections(r, window)).first;
    cmp.check_orbit(rep, it->second);
  }
  return cmp.finish();
}

SymmetryReport check_exchangeable(const MomentOracle& o, const CheckBounds& bounds)
{
  check_bounds(bounds);
  preflight(o, bounds);
  Comparator cmp(o, Property::exchangeable, bounds);
  const auto maps = all_bijections(bounds.maxidx + 1);
  for (const auto& rep : enumerate_words(bounds.maxlen, bounds.maxidx))
    if (first_occurrence_canonical(rep))
      cmp.check_orbit(rep, maps);
  return cmp.finish();
}

HierarchyReport check_hierarchy(const MomentOracle& o, const CheckBounds& bounds)
{
  const MomentOracle cached = memoize(o);
  return assemble_hierarchy({check_identically_distributed(cached, bounds), check_stationary(cached, bounds),
                             check_spreadable(cached, bounds), check_exchangeable(cached, bounds)},
                            o.name);
}

HierarchyReport assemble_hierarchy(std::array<SymmetryReport, 4> reports, const std::string& oracle_name)
{
  HierarchyReport out;
  out.reports = std::move(reports);
  for (std::size_t strong = 1; strong < out.reports.size(); ++strong)
    for (std::size_t weak = 0; weak < strong; ++weak)
      if (out.reports[strong].pass && !out.reports[weak].pass)
        throw HierarchyInversionError("oracle '" + oracle_name + "' passes " +
                                      to_string(out.reports[strong].property) + " but fails " +
                                      to_string(out.reports[weak].property));
  for (const auto& r : out.reports)
    if (r.pass)
      out.strongest = r.property;
  return out;
}

SymmetryReport check_scalar_independence(const MomentOracle& o, const std::set<int>& left, const std::set<int>& right,
                                         const CheckBounds& bounds)
{
  for (int i : left)
    if (right.count(i))
      throw PreconditionError("index sets overlap at " + std::to_string(i));
  if (bounds.maxlen < 0 || bounds.tol < 0)
    throw PreconditionError("independence check needs maxlen >= 0 and tol >= 0");
  int top = 0;
  for (int i : left)
    top = std::max(top, i);
  for (int i : right)
    top = std::max(top, i);
  check_adjoint_coherence(o, std::max(bounds.maxlen, 1), std::max(top, 1), bounds.tol);

  CheckBounds b = bounds;
  b.maxidx = top;
  Comparator cmp(o, Property::independence, b);
  const auto xs = enumerate_words_over(left, bounds.maxlen);
  const auto ys = enumerate_words_over(right, bounds.maxlen);
  std::map<MomentWord, MomentValue> values;
  auto value = [&](const MomentWord& w) {
    auto it = values.find(w);
    if (it == values.end())
      it = values.emplace(w, cmp.eval(w)).first;
    return it->second;
  };
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      if (x.size() + y.size() > static_cast<std::size_t>(bounds.maxlen))
        continue;
      ++cmp.report().representatives;
      cmp.report().transformations += 2;
      const MomentValue product = value(x) * value(y);
      MomentWord xy = x, yx = y;
      xy.insert(xy.end(), y.begin(), y.end());
      yx.insert(yx.end(), x.begin(), x.end());
      cmp.expect_equal(x, cmp.eval(xy), y, product);
      cmp.expect_equal(y, cmp.eval(yx), x, product);
    }
  }
  return cmp.finish();
}

ProbeResult ergodic_stationarity_probe(const MomentOracle& o, const MomentWord& x, const MomentWord& y, int max_shift)
{
  if (max_shift < 0)
    throw PreconditionError("probe needs max_shift >= 0");
  CheckBounds bounds;
  Comparator cmp(o, Property::stationary, bounds);
  ProbeResult out;
  MomentValue running(0.0);
  for (int k = 0; k <= max_shift; ++k) {
    MomentWord word = x;
    for (auto letter : y) {
      letter.index += k;
      word.push_back(letter);
    }
    out.values.push_back(cmp.eval(word));
    running += out.values.back();
    out.cesaro_means.push_back(running / static_cast<double>(k + 1));
  }
  return out;
}

void check_adjoint_coherence(const MomentOracle& o, int maxlen, int maxidx, double tol, unsigned samples)
{
  auto close = [&](MomentValue a, MomentValue b) { return o.exact ? a == b : std::abs(a - b) <= tol; };
  auto eval = [&](const MomentWord& w) {
    try {
      return o.eval(w);
    } catch (const OracleError&) {
      throw;
    } catch (const std::exception& e) {
      throw OracleError("oracle '" + o.name + "' failed: " + e.what(), to_string(w));
    }
  };
  if (!close(eval({}), MomentValue(1.0)))
    throw OracleError("oracle '" + o.name + "' does not send the empty word to 1", "");
  std::mt19937 rng(0x5eedu);
  std::uniform_int_distribution<int> length(1, std::max(maxlen, 1));
  std::uniform_int_distribution<int> index(0, std::max(maxidx, 0));
  std::bernoulli_distribution flag(0.5);
  for (unsigned s = 0; s < samples; ++s) {
    MomentWord w(static_cast<std::size_t>(length(rng)));
    for (auto& letter : w)
      letter = {index(rng), flag(rng)};
    if (!close(eval(adjoint(w)), std::conj(eval(w))))
      throw OracleError("oracle '" + o.name + "' violates tr(w*) = conj(tr(w))", to_string(w));
  }
}

} // namespace braidlab
