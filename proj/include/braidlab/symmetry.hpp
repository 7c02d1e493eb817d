#ifndef BRAIDLAB_SYMMETRY_HPP
#define BRAIDLAB_SYMMETRY_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "braidlab/matrix_model.hpp"
#include "braidlab/moment_word.hpp"

namespace braidlab
{

using MomentValue = std::complex<double>;

/// The functional word -> tr(x_{i_1}^{e_1} ... x_{i_r}^{e_r}) of a sequence x_0, x_1, ...
///
/// Exact oracles return values that are compared with ==; the rest are
/// compared up to a tolerance. eval must be pure.
struct MomentOracle
{
  std::string name;
  bool exact = false;
  std::function<MomentValue(const MomentWord&)> eval;
};

/// Same oracle with results cached by word; the cache is not synchronized.
MomentOracle memoize(MomentOracle oracle);

/// x_n = gamma_{n+1} in the braid group algebra with the canonical trace.
MomentOracle delta_gamma_oracle();

/// x_n = v_{n+1} = U((0 n+1)) in a matrix model; indices up to sites - 2.
MomentOracle matrix_star_oracle(const MatrixModel& model);

enum class Property
{
  identically_distributed,
  stationary,
  spreadable,
  exchangeable,
  independence,
};

std::string to_string(Property p);

struct Witness
{
  MomentWord word;
  MomentWord transformed;
  MomentValue value;
  MomentValue transformed_value;
};

struct SymmetryReport
{
  Property property = Property::identically_distributed;
  int maxlen = 0;
  int maxidx = 0;
  /// 0 for exact oracles.
  double tol = 0.0;
  bool pass = true;
  /// Canonically sorted, at most CheckBounds::max_witnesses entries.
  std::vector<Witness> witnesses;
  std::size_t violations = 0;
  std::size_t representatives = 0;
  std::size_t transformations = 0;
};

struct CheckBounds
{
  int maxlen = 5;
  int maxidx = 5;
  double tol = 1e-10;
  std::size_t max_witnesses = 16;
};

/// Single-index moments do not depend on the index.
SymmetryReport check_identically_distributed(const MomentOracle& o, const CheckBounds& bounds);
/// Moments are invariant under i -> i + k.
SymmetryReport check_stationary(const MomentOracle& o, const CheckBounds& bounds);
/// Moments are invariant under strictly increasing relabelings into {0..maxidx}.
SymmetryReport check_spreadable(const MomentOracle& o, const CheckBounds& bounds);
/// Moments are invariant under every bijection of {0..maxidx}.
SymmetryReport check_exchangeable(const MomentOracle& o, const CheckBounds& bounds);

struct HierarchyReport
{
  /// Weakest first: identically distributed, stationary, spreadable, exchangeable.
  std::array<SymmetryReport, 4> reports;
  std::optional<Property> strongest;
};

/// Runs all four checks on a memoized copy of o. Throws HierarchyInversionError
/// when a stronger property passes while a weaker one fails.
HierarchyReport check_hierarchy(const MomentOracle& o, const CheckBounds& bounds);

/// Orders four reports (weakest first), rejects inversions and records the strongest pass.
HierarchyReport assemble_hierarchy(std::array<SymmetryReport, 4> reports, const std::string& oracle_name);

/// tr(xy) = tr(x) tr(y) and tr(yx) = tr(y) tr(x) for all words x over I and y
/// over J with |x| + |y| <= maxlen. Throws PreconditionError when I and J meet.
SymmetryReport check_scalar_independence(const MomentOracle& o, const std::set<int>& left, const std::set<int>& right,
                                         const CheckBounds& bounds);

struct ProbeResult
{
  std::vector<MomentValue> values;
  std::vector<MomentValue> cesaro_means;
};

/// values[k] = tr(x * shift_k(y)) for k = 0..max_shift, with running means.
ProbeResult ergodic_stationarity_probe(const MomentOracle& o, const MomentWord& x, const MomentWord& y, int max_shift);

/// Checks tr(empty) = 1 and tr(w*) = conj(tr(w)) on seeded random words.
/// Throws OracleError with the offending word on failure.
void check_adjoint_coherence(const MomentOracle& o, int maxlen, int maxidx, double tol, unsigned samples = 64);

// Enumeration primitives, exposed for testing.

/// All words with 1..maxlen letters over indices 0..maxidx, both flags, length-lexicographic.
std::vector<MomentWord> enumerate_words(int maxlen, int maxidx);

/// All words over the given index set with 0..maxlen letters.
std::vector<MomentWord> enumerate_words_over(const std::set<int>& indices, int maxlen);

/// All m! bijections of {0..m-1} as image lists.
std::vector<std::vector<int>> all_bijections(int m);

/// All strictly increasing maps {0..r-1} -> {0..m-1} as image lists (C(m, r) of them).
std::vector<std::vector<int>> increasing_injections(int r, int m);

MomentWord relabel(const MomentWord& w, const std::vector<int>& map);

} // namespace braidlab

#endif // BRAIDLAB_SYMMETRY_HPP
