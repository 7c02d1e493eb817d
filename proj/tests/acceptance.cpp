// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "braidlab/braid.hpp"
#include "braidlab/characters.hpp"
#include "braidlab/errors.hpp"
#include "braidlab/gamma.hpp"
#include "braidlab/matrix_model.hpp"
#include "braidlab/permutation.hpp"
#include "braidlab/symmetry.hpp"
#include "oracles.hpp"

using namespace braidlab;

namespace
{

struct Outcome
{
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Permutation from_images(const oracle::Images& img)
{
  return Permutation::from_images(std::vector<Point>(img.begin(), img.end()));
}

MatrixModel uniform(int d, int sites)
{
  return MatrixModel(std::vector<Rational>(static_cast<std::size_t>(d), Rational(1, d)), sites);
}

std::vector<Point> random_cycle(std::mt19937& rng, unsigned points, unsigned min_len = 2)
{
  std::vector<Point> pool(points);
  for (unsigned i = 0; i < points; ++i)
    pool[i] = i;
  std::shuffle(pool.begin(), pool.end(), rng);
  std::uniform_int_distribution<unsigned> len(min_len, points);
  pool.resize(len(rng));
  return pool;
}

Rational random_rational(std::mt19937& rng)
{
  std::uniform_int_distribution<int> num(-6, 6), den(1, 6);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

/// a and b nonincreasing with total mass at most 1, exact.
ThomaParams random_thoma(std::mt19937& rng)
{
  std::uniform_int_distribution<int> count(0, 3);
  std::uniform_int_distribution<int> weight(0, 12);
  const int na = count(rng), nb = count(rng);
  std::vector<Rational> raw;
  Rational total = 0;
  for (int i = 0; i < na + nb + 1; ++i) {
    raw.emplace_back(weight(rng));
    total += raw.back();
  }
  if (total == 0)
    return {};
  ThomaParams p;
  for (int i = 0; i < na + nb; ++i) {
    Rational x = raw[static_cast<std::size_t>(i)] / total;
    x.canonicalize();
    (i < na ? p.a : p.b).push_back(x);
  }
  auto desc = [](const Rational& l, const Rational& r) { return l > r; };
  std::sort(p.a.begin(), p.a.end(), desc);
  std::sort(p.b.begin(), p.b.end(), desc);
  return p;
}

Outcome word_problem_agreement()
{
  const auto start = Clock::now();
  const std::vector<Letter> alphabet{1, -1, 2, -2, 3, -3};
  std::size_t words = 0, trivial = 0, disagreements = 0;
  std::vector<Letter> letters;
  std::function<void(int)> visit = [&](int remaining) {
    const BraidWord w(letters);
    const bool nf = is_trivial(w, 4);
    const bool artin = artin_acts_trivially(w, 4);
    ++words;
    trivial += nf ? 1 : 0;
    disagreements += nf != artin ? 1 : 0;
    if (remaining == 0)
      return;
    for (Letter k : alphabet) {
      letters.push_back(k);
      visit(remaining - 1);
      letters.pop_back();
    }
  };
  visit(6);
  const double t = seconds_since(start);
  return {disagreements == 0 && t < 60.0, std::to_string(words) + " words, " + std::to_string(trivial) +
                                              " trivial, " + std::to_string(disagreements) + " disagreements, " +
                                              fmt(t) + " s"};
}

Outcome gamma_spellings()
{
  const auto start = Clock::now();
  int equal = 0;
  for (int i = 1; i <= 8; ++i)
    equal += braid_equal(gamma_word(i), gamma_word_alt(i), i + 1) ? 1 : 0;
  const double t = seconds_since(start);
  return {equal == 8 && t < 1.0, std::to_string(equal) + "/8 equal, " + fmt(t) + " s"};
}

Outcome star_projection()
{
  int ok = 0;
  for (int i = 1; i <= 8; ++i) {
    const auto g = gamma_word(i);
    const auto p = project_to_permutation(g);
    const auto expected = oracle::product_of_transpositions(static_cast<unsigned>(i + 1), {{0u, unsigned(i)}});
    ok += p == Permutation::transposition(0, static_cast<Point>(i)) &&
                  p.images(static_cast<std::size_t>(i + 1)) == std::vector<Point>(expected.begin(), expected.end())
              ? 1
              : 0;
  }
  return {ok == 8, std::to_string(ok) + "/8 project to (0 i)"};
}

Outcome cycle_round_trip()
{
  std::mt19937 rng(4);
  int ok = 0;
  auto via_gammas = [](std::span<const Point> stars) {
    BraidWord w;
    for (Point s : stars)
      if (s != 0)
        w *= gamma_word(static_cast<int>(s));
    return project_to_permutation(w);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = random_cycle(rng, 9);
    const auto cycle = Permutation::cycle(c);
    const auto word = star_word_for_cycle(c);
    const bool cycle_ok = evaluate_star_word(word) == cycle && via_gammas(word) == cycle;

    const auto p = from_images(oracle::random_images(rng, 9));
    Permutation product;
    BraidWord all;
    for (const auto& w : star_word_for_permutation(p)) {
      product = compose(product, evaluate_star_word(w));
      for (Point s : w)
        if (s != 0)
          all *= gamma_word(static_cast<int>(s));
    }
    ok += cycle_ok && product == p && project_to_permutation(all) == p ? 1 : 0;
  }
  return {ok == 200, std::to_string(ok) + "/200 cycle and permutation pairs reproduced"};
}

Outcome thoma_realization()
{
  const auto start = Clock::now();
  std::mt19937 rng(5);
  double worst = 0;
  int oracle_mismatches = 0;
  for (int d = 1; d <= 3; ++d) {
    const auto weights = oracle::random_weights(rng, static_cast<unsigned>(d));
    const MatrixModel m(weights, 6);
    const ThomaParams params{weights, {}};
    for (int trial = 0; trial < 100; ++trial) {
      const auto img = oracle::random_images(rng, 6);
      const auto sigma = from_images(img);
      const Rational chi = thoma_character(params, sigma);
      oracle_mismatches += chi == oracle::coloring_character(weights, img) ? 0 : 1;
      const auto tr = trace_state(m, permutation_operator(m, sigma));
      worst = std::max(worst, std::abs(tr - std::complex<double>(to_double(chi), 0.0)));
    }
  }
  const double t = seconds_since(start);
  return {worst <= 1e-10 && oracle_mismatches == 0 && t < 30.0,
          "max |trace - chi| = " + fmt(worst) + ", " + std::to_string(oracle_mismatches) +
              " formula/coloring mismatches, " + fmt(t) + " s"};
}

Outcome thoma_multiplicativity()
{
  std::mt19937 rng(6);
  int exact_ok = 0;
  double worst = 0;
  const MatrixModel m({Rational(1, 2), Rational(1, 3), Rational(1, 6)}, 6);
  for (int trial = 0; trial < 100; ++trial) {
    auto points = random_cycle(rng, 6, 4);
    std::uniform_int_distribution<std::size_t> cut(2, points.size() - 2);
    const std::size_t k = cut(rng);
    const auto c1 = Permutation::cycle(std::span<const Point>(points.data(), k));
    const auto c2 = Permutation::cycle(std::span<const Point>(points.data() + k, points.size() - k));
    const auto both = compose(c1, c2);
    const auto p = random_thoma(rng);
    exact_ok += thoma_character(p, both) == thoma_character(p, c1) * thoma_character(p, c2) ? 1 : 0;
    const auto t1 = trace_state(m, permutation_operator(m, c1));
    const auto t2 = trace_state(m, permutation_operator(m, c2));
    const auto t12 = trace_state(m, permutation_operator(m, both));
    worst = std::max(worst, std::abs(t12 - t1 * t2));
  }
  return {exact_ok == 100 && worst <= 1e-10,
          std::to_string(exact_ok) + "/100 exact, model max deviation " + fmt(worst)};
}

Outcome symmetry_hierarchy()
{
  const auto start = Clock::now();
  std::ostringstream detail;
  bool pass = true;
  try {
    const auto matrix = check_hierarchy(matrix_star_oracle(uniform(2, 6)), {5, 4, 1e-10});
    for (const auto& r : matrix.reports)
      pass = pass && r.pass;
    detail << "matrix strongest " << (matrix.strongest ? to_string(*matrix.strongest) : "none");

    const auto delta = check_hierarchy(delta_gamma_oracle(), {5, 5, 0.0});
    for (int i = 0; i < 3; ++i)
      pass = pass && delta.reports[static_cast<std::size_t>(i)].pass;
    detail << "; delta id/stat/spread " << (delta.reports[0].pass ? "pass" : "fail") << '/'
           << (delta.reports[1].pass ? "pass" : "fail") << '/' << (delta.reports[2].pass ? "pass" : "fail")
           << ", exchangeable (reported only) " << (delta.reports[3].pass ? "pass" : "fail") << " with "
           << delta.reports[3].violations << " violations";
  } catch (const HierarchyInversionError& e) {
    pass = false;
    detail << "inversion: " << e.what();
  }
  const double t = seconds_since(start);
  detail << ", " << fmt(t) << " s";
  return {pass && t < 300.0, detail.str()};
}

Outcome partial_shifts()
{
  const auto m = uniform(2, 7);
  const auto hook = ad_hook(m, true);
  const auto xs = constructive_sequence(hook, star_unitaries(m)[0], 5);
  int checks = 0, ok = 0;
  for (int offset = 0; offset <= 3; ++offset) {
    const auto shift = partial_shift_word(offset, 5 - offset);
    for (int n = 0; n <= 4; ++n) {
      const auto image = apply_word(hook, shift, xs[static_cast<std::size_t>(n)]);
      ++checks;
      ok += image == xs[static_cast<std::size_t>(n < offset ? n : n + 1)] ? 1 : 0;
    }
  }
  return {ok == checks, std::to_string(ok) + "/" + std::to_string(checks) + " exact matrix equalities"};
}

Outcome delta_factorization()
{
  std::mt19937 rng(9);
  const std::vector<int> left{1, 4, 5}, right{6, 8};
  auto random_poly = [&](const std::vector<int>& indices) {
    std::uniform_int_distribution<int> terms(1, 4), length(0, 5), sign(0, 1);
    std::uniform_int_distribution<std::size_t> pick(0, indices.size() - 1);
    GroupPolynomial x;
    for (int t = terms(rng); t > 0; --t) {
      BraidWord w;
      const int len = length(rng);
      for (int i = 0; i < len; ++i) {
        const auto g = gamma_word(indices[pick(rng)]);
        w *= sign(rng) ? g : g.inverse();
      }
      x += GroupPolynomial::monomial(w, {random_rational(rng), random_rational(rng)});
    }
    return x;
  };
  int ok = 0, nonzero = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_poly(left), y = random_poly(right);
    const auto tx = delta_trace(x, 9), ty = delta_trace(y, 9);
    const bool good = delta_trace(x * y, 9) == tx * ty && delta_trace(y * x, 9) == ty * tx;
    ok += good ? 1 : 0;
    nonzero += (tx * ty).is_zero() ? 0 : 1;
  }
  return {ok == 100 && nonzero > 0,
          std::to_string(ok) + "/100 exact, " + std::to_string(nonzero) + " with nonzero trace"};
}

Outcome limit_cycles()
{
  std::ostringstream detail;
  bool pass = true;
  double err4_at4 = 0, err4_at8 = 0, worst3 = 0;
  for (int n = 1; n <= 8; ++n) {
    const auto m = uniform(2, n + 1);
    const double c2 = limit_cycle_Ck(m, 2);
    pass = pass && c2 == 0.5;
    const double err3 = std::abs(limit_cycle_Ck(m, 3) - 0.25);
    worst3 = std::max(worst3, std::abs(err3 - 0.75 / n));
    const double err4 = std::abs(limit_cycle_Ck(m, 4) - 0.125);
    pass = pass && err4 <= 4.0 / n;
    if (n == 4)
      err4_at4 = err4;
    if (n == 8)
      err4_at8 = err4;
  }
  pass = pass && worst3 <= 1e-12 && err4_at8 < err4_at4;
  detail << "C_2 = 1/2 for n = 1..8, k=3 max |error - 3/(4n)| = " << fmt(worst3) << ", k=4 error n=4 "
         << fmt(err4_at4) << " > n=8 " << fmt(err4_at8);
  return {pass, detail.str()};
}

Outcome positive_definiteness()
{
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> letter(1, 4), sign(0, 1), length(0, 6);
  double worst_delta = INFINITY, worst_thoma = INFINITY;
  bool pass = true;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<BraidWord> words;
    std::vector<Permutation> perms;
    for (int i = 0; i < 6; ++i) {
      std::vector<Letter> w;
      for (int len = length(rng); len > 0; --len)
        w.push_back(sign(rng) ? letter(rng) : -letter(rng));
      words.emplace_back(std::move(w));
      perms.push_back(from_images(oracle::random_images(rng, 6)));
    }
    const auto delta = gram_psd_check<BraidWord>([](const BraidWord& w) { return delta_character(w, 5); },
                                                 std::span<const BraidWord>(words), 1e-9);
    const auto p = random_thoma(rng);
    const auto thoma = gram_psd_check<Permutation>([&](const Permutation& s) { return thoma_character(p, s); },
                                                   std::span<const Permutation>(perms), 1e-9);
    worst_delta = std::min(worst_delta, delta.min_eigenvalue);
    worst_thoma = std::min(worst_thoma, thoma.min_eigenvalue);
    pass = pass && delta.pass && thoma.pass;
  }
  return {pass && worst_delta >= -1e-9 && worst_thoma >= -1e-9,
          "min eigenvalue delta " + fmt(worst_delta) + ", Thoma " + fmt(worst_thoma)};
}

} // namespace

int main()
{
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"word problem: normal form agrees with the Artin action", word_problem_agreement},
      {"gamma spellings are equal braids", gamma_spellings},
      {"gamma_i projects to the star transposition (0 i)", star_projection},
      {"star words multiply back to cycles and permutations", cycle_round_trip},
      {"matrix model trace realizes the Thoma character", thoma_realization},
      {"Thoma character is multiplicative over disjoint cycles", thoma_multiplicativity},
      {"symmetry hierarchy of the matrix and delta oracles", symmetry_hierarchy},
      {"partial shifts in the sites=7 model", partial_shifts},
      {"delta trace factorizes over disjoint gamma index sets", delta_factorization},
      {"limit-cycle moments converge", limit_cycles},
      {"Gram matrices of characters are positive semidefinite", positive_definiteness},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failures), criteria.size());
  return failures == 0 ? 0 : 1;
}
