#ifndef BRAIDLAB_CHARACTERS_HPP
#define BRAIDLAB_CHARACTERS_HPP

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>

#include "braidlab/braid.hpp"
#include "braidlab/permutation.hpp"
#include "braidlab/rational.hpp"

namespace braidlab
{

/// Parameters (a, b) of an extremal character of the infinite symmetric group.
struct ThomaParams
{
  std::vector<Rational> a;
  std::vector<Rational> b;
};

struct ThomaValidation
{
  bool ok = true;
  std::string violation;

  explicit operator bool() const { return ok; }
};

/// Checks a nonincreasing and nonnegative, b likewise, and sum(a) + sum(b) <= 1.
ThomaValidation validate_thoma(const ThomaParams& p);

/// sum_i a_i^k + (-1)^(k-1) sum_j b_j^k.
Rational thoma_cycle_value(const ThomaParams& p, unsigned k);

/// prod_{k >= 2} (sum_i a_i^k + (-1)^(k-1) sum_j b_j^k)^(m_k(sigma)); throws ValidationError.
Rational thoma_character(const ThomaParams& p, const Permutation& sigma);

/// Finite formal combination of braid words with coefficients in Q(i).
///
/// Words are stored freely reduced and zero coefficients are dropped, so two
/// polynomials with the same terms compare equal; equal group elements spelled
/// differently are still separate terms.
class GroupPolynomial
{
public:
  using Terms = std::map<BraidWord, ComplexRational>;

  GroupPolynomial() = default;

  static GroupPolynomial monomial(const BraidWord& w, ComplexRational coefficient = ComplexRational(1));

  void add_term(const BraidWord& w, const ComplexRational& coefficient);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  int strand_bound() const;

  /// Each word replaced by its inverse, each coefficient conjugated.
  GroupPolynomial adjoint() const;

  GroupPolynomial& operator+=(const GroupPolynomial& rhs);
  GroupPolynomial& operator*=(const ComplexRational& scalar);
  friend GroupPolynomial operator+(GroupPolynomial lhs, const GroupPolynomial& rhs) { return lhs += rhs; }
  friend GroupPolynomial operator*(GroupPolynomial lhs, const ComplexRational& s) { return lhs *= s; }
  friend GroupPolynomial operator*(const GroupPolynomial& lhs, const GroupPolynomial& rhs);

  friend bool operator==(const GroupPolynomial&, const GroupPolynomial&) = default;

private:
  Terms terms_;
};

/// Canonical trace of the group algebra: sum of the coefficients of terms equal to e in B_n.
ComplexRational delta_trace(const GroupPolynomial& x, std::optional<int> strands = {});

/// 1 on the identity of B_n, 0 elsewhere.
Rational delta_character(const BraidWord& w, std::optional<int> strands = {});

struct GramReport
{
  Eigen::MatrixXcd gram;
  double min_eigenvalue = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

namespace detail
{

inline std::complex<double> as_complex(const Rational& q) { return {to_double(q), 0.0}; }
inline std::complex<double> as_complex(const ComplexRational& z) { return to_complex(z); }
inline std::complex<double> as_complex(std::complex<double> z) { return z; }
inline std::complex<double> as_complex(double x) { return {x, 0.0}; }

} // namespace detail

/// Gram matrix [chi(g_i^-1 g_j)] and its smallest eigenvalue; passes iff that is >= -tol.
///
/// Element needs inverse(g) and g * h. chi may return a Rational,
/// ComplexRational, double or std::complex<double>.
template <class Element, class Character>
GramReport gram_psd_check(Character&& chi, std::span<const Element> elems, double tol)
{
  const auto size = static_cast<Eigen::Index>(elems.size());
  GramReport report;
  report.tolerance = tol;
  report.gram.resize(size, size);
  for (Eigen::Index i = 0; i < size; ++i)
    for (Eigen::Index j = 0; j < size; ++j)
      report.gram(i, j) = detail::as_complex(chi(inverse(elems[i]) * elems[j]));
  if (size == 0) {
    report.pass = true;
    return report;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(report.gram, Eigen::EigenvaluesOnly);
  report.min_eigenvalue = solver.eigenvalues().minCoeff();
  report.pass = report.min_eigenvalue >= -tol;
  return report;
}

} // namespace braidlab

#endif // BRAIDLAB_CHARACTERS_HPP
