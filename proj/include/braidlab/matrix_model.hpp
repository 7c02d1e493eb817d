#ifndef BRAIDLAB_MATRIX_MODEL_HPP
#define BRAIDLAB_MATRIX_MODEL_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "braidlab/characters.hpp"
#include "braidlab/errors.hpp"
#include "braidlab/gamma.hpp"
#include "braidlab/moment_word.hpp"
#include "braidlab/permutation.hpp"
#include "braidlab/rational.hpp"

namespace braidlab
{

/// Tensor power (C^d)^{\otimes sites} with the product density diag(a)^{\otimes sites}.
///
/// Permutations act by permuting tensor slots 0..sites-1; the normalized
/// state X -> Tr(D X) restricted to them is the Thoma character with
/// parameters (a, 0). Slot 0 is the most significant digit of a basis index.
template <class Scalar = std::complex<double>>
class BasicMatrixModel
{
public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using RealVector = Eigen::VectorXd;

  static constexpr std::size_t default_cap = 4096;

  /// weights: nonincreasing, nonnegative, summing to exactly 1.
  BasicMatrixModel(std::vector<Rational> weights, int sites, std::size_t cap = default_cap)
    : weights_(std::move(weights)), sites_(sites), cap_(cap)
  {
    if (weights_.empty())
      throw ValidationError("matrix model needs at least one weight");
    if (sites_ < 1)
      throw ValidationError("matrix model needs at least one site");
    const ThomaParams params{weights_, {}};
    if (auto v = validate_thoma(params); !v)
      throw ValidationError("invalid model weights: " + v.violation);
    Rational total = 0;
    for (const auto& w : weights_)
      total += w;
    if (total != 1)
      throw ValidationError("model weights sum to " + to_string(total) + ", expected 1");

    dimension_ = 1;
    for (int s = 0; s < sites_; ++s) {
      dimension_ *= weights_.size();
      if (dimension_ > cap_)
        throw CapError("dimension " + std::to_string(weights_.size()) + "^" + std::to_string(sites_) +
                       " exceeds cap " + std::to_string(cap_));
    }

    density_.resize(static_cast<Eigen::Index>(dimension_));
    std::vector<double> a;
    for (const auto& w : weights_)
      a.push_back(to_double(w));
    for (std::size_t j = 0; j < dimension_; ++j) {
      double w = 1.0;
      std::size_t rest = j;
      for (int s = 0; s < sites_; ++s) {
        w *= a[rest % a.size()];
        rest /= a.size();
      }
      density_(static_cast<Eigen::Index>(j)) = w;
    }
  }

  /// Model for (a, b) with b = 0; a nonzero b has no finite realization here.
  static BasicMatrixModel from_thoma(const ThomaParams& p, int sites, std::size_t cap = default_cap)
  {
    for (const auto& x : p.b)
      if (sgn(x) != 0)
        throw UnsupportedError("matrix models realize only b = 0");
    return BasicMatrixModel(p.a, sites, cap);
  }

  int local_dimension() const { return static_cast<int>(weights_.size()); }
  int sites() const { return sites_; }
  std::size_t cap() const { return cap_; }
  std::size_t dimension() const { return dimension_; }
  const std::vector<Rational>& weights() const { return weights_; }
  ThomaParams thoma_params() const { return {weights_, {}}; }
  /// Diagonal of the density matrix.
  const RealVector& density() const { return density_; }

private:
  std::vector<Rational> weights_;
  int sites_;
  std::size_t cap_;
  std::size_t dimension_ = 1;
  RealVector density_;
};

using MatrixModel = BasicMatrixModel<>;

/// Unitary sending slot p(t) to slot t; U(p) U(q) = U(p * q).
template <class Scalar>
typename BasicMatrixModel<Scalar>::Matrix permutation_operator(const BasicMatrixModel<Scalar>& m, const Permutation& p)
{
  if (p.degree() > static_cast<std::size_t>(m.sites()))
    throw SlotError("permutation moves slot " + std::to_string(p.degree() - 1) + " but the model has " +
                    std::to_string(m.sites()) + " sites");
  const auto n = static_cast<Eigen::Index>(m.dimension());
  const auto d = static_cast<std::size_t>(m.local_dimension());
  const auto sites = static_cast<std::size_t>(m.sites());
  typename BasicMatrixModel<Scalar>::Matrix u = BasicMatrixModel<Scalar>::Matrix::Zero(n, n);
  std::vector<std::size_t> digits(sites), place(sites);
  for (std::size_t t = sites, w = 1; t-- > 0; w *= d)
    place[t] = w;
  for (std::size_t j = 0; j < m.dimension(); ++j) {
    std::size_t rest = j;
    for (std::size_t t = sites; t-- > 0;) {
      digits[t] = rest % d;
      rest /= d;
    }
    std::size_t image = 0;
    for (std::size_t t = 0; t < sites; ++t)
      image += digits[p(static_cast<Point>(t))] * place[t];
    u(static_cast<Eigen::Index>(image), static_cast<Eigen::Index>(j)) = Scalar(1);
  }
  return u;
}

/// Tr(D X), normalized so the identity has value 1.
template <class Scalar, class Derived>
Scalar trace_state(const BasicMatrixModel<Scalar>& m, const Eigen::MatrixBase<Derived>& x)
{
  const auto n = static_cast<Eigen::Index>(m.dimension());
  if (x.rows() != n || x.cols() != n)
    throw DimensionError("operator is " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()) +
                         ", model dimension is " + std::to_string(n));
  Scalar total(0);
  for (Eigen::Index j = 0; j < n; ++j)
    total += Scalar(m.density()(j)) * x(j, j);
  return total;
}

/// v_i = U((0 i)) for i = 1..sites-1.
template <class Scalar>
std::vector<typename BasicMatrixModel<Scalar>::Matrix> star_unitaries(const BasicMatrixModel<Scalar>& m)
{
  if (m.sites() < 2)
    throw SlotError("star unitaries need at least two sites");
  std::vector<typename BasicMatrixModel<Scalar>::Matrix> out;
  for (int i = 1; i < m.sites(); ++i)
    out.push_back(permutation_operator(m, Permutation::transposition(0, static_cast<Point>(i))));
  return out;
}

/// Trace of v_{i_1}^{e_1} ... v_{i_r}^{e_r}; indices are 1-based star indices.
template <class Scalar>
Scalar joint_moment(const BasicMatrixModel<Scalar>& m, std::span<const MomentLetter> word)
{
  for (const auto& letter : word)
    if (letter.index < 1 || letter.index >= m.sites())
      throw IndexError("star index " + std::to_string(letter.index) + " outside 1.." + std::to_string(m.sites() - 1));
  using Matrix = typename BasicMatrixModel<Scalar>::Matrix;
  if (word.empty())
    return Scalar(1);
  auto factor = [&](const MomentLetter& letter) {
    Matrix v = permutation_operator(m, Permutation::transposition(0, static_cast<Point>(letter.index)));
    return letter.adjoint ? Matrix(v.adjoint()) : v;
  };
  Matrix product = factor(word[0]);
  for (std::size_t r = 1; r < word.size(); ++r)
    product = product * factor(word[r]);
  return trace_state(m, product);
}

/// Conjugation by the represented Artin generators u_i = U((i-1 i)).
///
/// Unshifted: sigma_i acts as x -> u_i x u_i^-1. Shifted: sigma_i acts as
/// rho(sigma_{i+1}^-1), x -> u_{i+1}^-1 x u_{i+1}.
template <class Scalar>
RepresentationHook<typename BasicMatrixModel<Scalar>::Matrix> ad_hook(const BasicMatrixModel<Scalar>& m, bool shifted)
{
  using Matrix = typename BasicMatrixModel<Scalar>::Matrix;
  return {[m, shifted](int i, int sign, const Matrix& x) -> Matrix {
    const int generator = shifted ? i + 1 : i;
    if (generator < 1 || generator >= m.sites())
      throw SlotError("generator sigma_" + std::to_string(generator) + " needs " + std::to_string(generator + 1) +
                      " sites, model has " + std::to_string(m.sites()));
    const Matrix u = permutation_operator(
        m, Permutation::transposition(static_cast<Point>(generator - 1), static_cast<Point>(generator)));
    const bool forward = shifted ? sign < 0 : sign > 0;
    return forward ? Matrix(u * x * u.adjoint()) : Matrix(u.adjoint() * x * u);
  }};
}

namespace detail
{

template <class Scalar>
typename BasicMatrixModel<Scalar>::Matrix star_sum(const BasicMatrixModel<Scalar>& m)
{
  auto stars = star_unitaries(m);
  typename BasicMatrixModel<Scalar>::Matrix sum = stars.front();
  for (std::size_t i = 1; i < stars.size(); ++i)
    sum += stars[i];
  return sum;
}

} // namespace detail

/// A_0 = (1/n) sum_{i=1}^{n} v_i, n = sites - 1.
template <class Scalar>
typename BasicMatrixModel<Scalar>::Matrix limit_cycle_A0(const BasicMatrixModel<Scalar>& m)
{
  return detail::star_sum(m) / Scalar(static_cast<double>(m.sites() - 1));
}

/// C_k = trace_state(A_0^(k-1)).
///
/// Powers are taken of the integer matrix sum v_i and normalized once at the
/// end, so rounding enters only through the density and the final division.
template <class Scalar>
double limit_cycle_Ck(const BasicMatrixModel<Scalar>& m, int k)
{
  if (k < 2)
    throw IndexError("limit cycle C_k needs k >= 2, got " + std::to_string(k));
  using Matrix = typename BasicMatrixModel<Scalar>::Matrix;
  const Matrix sum = detail::star_sum(m);
  Matrix power = sum;
  for (int j = 2; j < k; ++j)
    power = power * sum;
  const double n = m.sites() - 1;
  return std::real(trace_state(m, power)) / std::pow(n, k - 1);
}

} // namespace braidlab

#endif // BRAIDLAB_MATRIX_MODEL_HPP
