#include "zonal/errors.hpp"
#include "zonal/legendre.hpp"
#include "zonal/verify.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace zonal;

TEST_CASE("eval_legendre examples")
{
  CHECK(eval_legendre(Degree{0}, 0.3) == 1.0);
  CHECK(eval_legendre(Degree{4}, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(eval_legendre(Degree{2}, 1.0 / std::sqrt(3.0))) < 1e-15);
  // plotted zero of P_4 at 0.34
  CHECK(std::abs(eval_legendre(Degree{4}, 0.34)) < 5e-3);
}

TEST_CASE("eval_legendre matches explicit coefficients for small degree")
{
  for (int n = 0; n <= 20; ++n)
    for (int k = 0; k <= 40; ++k) {
      const double x = -1.0 + k / 20.0;
      const double expected = static_cast<double>(oracle::legendre_explicit(n, x));
      CHECK(eval_legendre(Degree{n}, x) == doctest::Approx(expected).epsilon(1e-12).scale(1e-12));
    }
}

TEST_CASE("eval_legendre agrees with Boost up to high degree")
{
  std::mt19937_64 rng(20211);
  std::uniform_real_distribution<double> xs(-1.0, 1.0);
  for (int n : {50, 200, 1000, 5000, 10000}) {
    for (int k = 0; k < 200; ++k) {
      const double x = xs(rng);
      const double expected = oracle::legendre(n, x);
      // Absolute error relative to the local amplitude; pointwise relative error
      // is meaningless next to a zero.
      CHECK(std::abs(eval_legendre(Degree{n}, x) - expected) <= 1e-12 * std::max(1.0, std::abs(expected)) + 5e-14);
    }
  }
}

TEST_CASE("eval_legendre_derivative examples")
{
  CHECK(eval_legendre_derivative(Degree{5}, 1.0) == 15.0);
  CHECK(eval_legendre_derivative(Degree{5}, -1.0) == 15.0);
  CHECK(eval_legendre_derivative(Degree{4}, -1.0) == -10.0);
  CHECK(eval_legendre_derivative(Degree{1}, 0.7) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(eval_legendre_derivative(Degree{4}, 0.0)) < 1e-15);
  CHECK(eval_legendre_derivative(Degree{0}, 0.4) == 0.0);
}

TEST_CASE("eval_legendre_second examples")
{
  CHECK(std::abs(eval_legendre_second(Degree{1}, 0.5)) < 1e-15);
  CHECK(eval_legendre_second(Degree{2}, 0.2) == doctest::Approx(3.0).epsilon(1e-14));

  // P_4' vanishes at sqrt(3/7); P_4'' there must match a finite difference of P_4'.
  const double x = 0.6547;
  const double h = 1e-6;
  const double fd = (eval_legendre_derivative(Degree{4}, x + h) - eval_legendre_derivative(Degree{4}, x - h)) / (2 * h);
  CHECK(eval_legendre_second(Degree{4}, x) == doctest::Approx(fd).epsilon(1e-6));
  // closed form: P_4 = (35x^4 - 30x^2 + 3)/8 -> P_4'' = (420 x^2 - 60)/8
  CHECK(eval_legendre_second(Degree{4}, x) == doctest::Approx((420 * x * x - 60) / 8).epsilon(1e-12));
}

TEST_CASE("bernstein_envelope examples")
{
  CHECK(bernstein_envelope(Degree{1}, 0.0) == doctest::Approx(std::sqrt(2.0 / std::numbers::pi)));
  CHECK(bernstein_envelope(Degree{1}, 0.0) == doctest::Approx(0.7979).epsilon(1e-4));
  // 0.7967 is a zero of P_8; the extremum of height 0.4097 sits further out
  CHECK(std::abs(eval_legendre(Degree{8}, 0.7967)) <= bernstein_envelope(Degree{8}, 0.7967));
  const double x18 = oracle::bisect([](double x) { return boost::math::legendre_p_prime(8, x); }, 0.8, 0.95);
  CHECK(std::abs(eval_legendre(Degree{8}, x18)) == doctest::Approx(0.4097).epsilon(1e-3));
  CHECK(bernstein_envelope(Degree{8}, x18) >= 0.4097);
  CHECK(std::abs(eval_legendre(Degree{100}, 0.5)) <= bernstein_envelope(Degree{100}, 0.5));
}

TEST_CASE("domain and cap errors")
{
  CHECK_THROWS_AS(eval_legendre(Degree{3}, 1.0000001), DomainError);
  CHECK_THROWS_AS(eval_legendre(Degree{3}, std::nan("")), DomainError);
  CHECK_THROWS_AS(eval_legendre_derivative(Degree{3}, -1.5), DomainError);
  CHECK_THROWS_AS(eval_legendre_second(Degree{3}, 1.0), DomainError);
  CHECK_THROWS_AS(eval_legendre_second(Degree{3}, 1.0 - 1e-15), DomainError);
  CHECK_THROWS_AS(bernstein_envelope(Degree{3}, -1.0), DomainError);
  CHECK_THROWS_AS(bernstein_envelope(Degree{0}, 0.0), DomainError);
  CHECK_THROWS_AS(Degree{10001}, CapError);
  CHECK_THROWS_AS(Degree(9, 8), CapError);
  CHECK_THROWS_AS(Degree{-1}, DomainError);
  CHECK_NOTHROW(Degree{10000});
}

TEST_CASE("eval_legendre_all omits the second derivative at the endpoints")
{
  const auto inner = eval_legendre_all(Degree{6}, 0.3);
  CHECK(inner.second_derivative.has_value());
  const auto edge = eval_legendre_all(Degree{6}, 1.0);
  CHECK_FALSE(edge.second_derivative.has_value());
  CHECK(*edge.derivative == 21.0);
}

// Hand-rolled property sweeps over random (n, x).
TEST_CASE("property: recurrence, boundedness, parity and Bernstein")
{
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> degrees(1, 9999);
  std::uniform_real_distribution<double> xs(-1.0, 1.0);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = degrees(rng);
    const double x = xs(rng);
    const double prev = eval_legendre(Degree{n - 1}, x);
    const double curr = eval_legendre(Degree{n}, x);
    const double next = eval_legendre(Degree{n + 1}, x);
    CHECK(std::abs((n + 1.0) * next - (2.0 * n + 1.0) * x * curr + n * prev) <=
          1e-10 * std::max(1.0, std::abs(next)));
    CHECK(std::abs(curr) <= 1.0 + 1e-12);
    CHECK(std::abs(eval_legendre(Degree{n}, -x) - ((n % 2) ? -curr : curr)) <= 1e-12);
    CHECK(std::abs(curr) <= bernstein_envelope(Degree{n}, x));
  }
}

TEST_CASE("property: derivative consistency and ODE residual")
{
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> xs(-0.99, 0.99);
  constexpr double h = 1e-6;
  for (int n = 1; n <= 30; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      const double x = xs(rng);
      const double fd = (eval_legendre(Degree{n}, x + h) - eval_legendre(Degree{n}, x - h)) / (2 * h);
      CHECK(std::abs(fd - eval_legendre_derivative(Degree{n}, x)) <= 1e-5);
    }
  // P'' against a route that differentiates the recurrence rather than the ODE.
  for (int n : {2, 7, 50, 300, 2000}) {
    for (int trial = 0; trial < 40; ++trial) {
      const double x = xs(rng);
      const double expected = legendre_second_by_recurrence(n, x);
      CHECK(std::abs(eval_legendre_second(Degree{n}, x) - expected) <= 1e-9 * n * (n + 1.0) * std::max(1.0, std::abs(expected) / n));
    }
  }
}
