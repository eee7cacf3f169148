#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "rdm/asymptotics.hpp"
#include "rdm/error.hpp"
#include "rdm/exact.hpp"
#include "rdm/montecarlo.hpp"
#include "rdm/sampling.hpp"
#include "rdm/spectra.hpp"

using rdm::EnsembleParams;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::abs(b);
}

// E tr rho^q for q = 1..10, exact rational evaluation by an independent
// script (tests/oracles/moments_oracle.py).
struct Frozen {
  std::size_t n, k;
  double values[10];
};

constexpr Frozen kFrozenMoments[] = {
    {2, 2, {1.0, 0.8, 0.7, 0.6285714285714286, 0.5714285714285714, 0.5238095238095238,
            0.48333333333333334, 0.4484848484848485, 0.41818181818181815,
            0.3916083916083916}},
    {2, 5, {1.0, 0.6363636363636364, 0.45454545454545453, 0.34265734265734266,
            0.26573426573426573, 0.2097902097902098, 0.16783216783216784,
            0.13574660633484162, 0.11085972850678733, 0.0913312693498452}},
    {3, 4, {1.0, 0.5384615384615384, 0.34065934065934067, 0.23076923076923078,
            0.1620879120879121, 0.1165158371040724, 0.08521870286576169,
            0.0632293403191236, 0.04751131221719457, 0.036114040758003604}},
    {5, 5, {1.0, 0.38461538461538464, 0.1794871794871795, 0.09157509157509157,
            0.04913477327270431, 0.027240958275441034, 0.015468279094530486,
            0.0089534430468802, 0.0052686097736153355, 0.0031466548675211895}},
    {10, 20, {1.0, 0.14925373134328357, 0.027116890793556968, 0.005477902396518602,
              0.001180858905120932, 0.00026594264799407514, 6.181695434965549e-05,
              1.471958584892015e-05, 3.5729487308955477e-06, 8.811762314842998e-07}},
};

}  // namespace

TEST_CASE("log_norm_constant examples") {
  CHECK(rdm::log_norm_constant({2, 2}) == doctest::Approx(std::log(3.0)).epsilon(1e-14));
  CHECK(rdm::log_norm_constant({1, 1}) == doctest::Approx(0.0));
  CHECK(rdm::log_norm_constant({2, 3}) == doctest::Approx(std::log(30.0)).epsilon(1e-14));
  CHECK(rdm::log_norm_constant({2, 5}) == doctest::Approx(std::log(1260.0)).epsilon(1e-14));
  CHECK(rdm::log_norm_constant({2, 10}) == doctest::Approx(std::log(4157010.0)).epsilon(1e-14));
  CHECK_THROWS_AS(rdm::log_norm_constant({3, 2}), rdm::DomainError);
}

TEST_CASE("log_norm_constant stays finite where C overflows") {
  const double v = rdm::log_norm_constant({100, 200});
  CHECK(std::isfinite(v));
  CHECK(v > std::log(std::numeric_limits<double>::max()));
}

TEST_CASE("log_density_eigs examples") {
  const double mixed[] = {0.5, 0.5};
  CHECK(rdm::log_density_eigs({2, 2}, mixed) == -kInf);
  const double pure[] = {1.0, 0.0};
  CHECK(rdm::log_density_eigs({2, 2}, pure) == doctest::Approx(std::log(3.0)).epsilon(1e-14));
  const double quarter[] = {0.75, 0.25};
  CHECK(rdm::log_density_eigs({2, 3}, quarter) ==
        doctest::Approx(std::log(45.0 / 32.0)).epsilon(1e-14));
  CHECK(rdm::log_density_eigs({2, 3}, pure) == -kInf);
  const double off[] = {0.5, 0.6};
  CHECK_THROWS_AS(rdm::log_density_eigs({2, 2}, off), rdm::DomainError);
}

TEST_CASE("log_density_wishart_eigs examples") {
  const double x[] = {1.7};
  CHECK(rdm::log_density_wishart_eigs({1, 1}, x) == doctest::Approx(-1.7).epsilon(1e-15));
  CHECK(rdm::log_density_wishart_eigs({1, 2}, x) ==
        doctest::Approx(std::log(1.7) - 1.7).epsilon(1e-14));
  const double same[] = {0.3, 0.3};
  CHECK(rdm::log_density_wishart_eigs({2, 2}, same) == -kInf);
  const double neg[] = {-0.1};
  CHECK_THROWS_AS(rdm::log_density_wishart_eigs({1, 1}, neg), rdm::DomainError);
}

TEST_CASE("wishart eigenvalue density integrates to one") {
  using boost::math::quadrature::gauss_kronrod;
  for (std::size_t k : {1u, 2u, 5u}) {
    const double total = gauss_kronrod<double, 31>::integrate(
        [&](double x) {
          const double v[] = {x};
          return std::exp(rdm::log_density_wishart_eigs({1, k}, v));
        },
        0.0, std::numeric_limits<double>::infinity(), 15, 1e-12);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("n = 2 density is normalised") {
  using boost::math::quadrature::gauss_kronrod;
  for (std::size_t k : {2u, 3u, 5u, 10u, 50u}) {
    const EnsembleParams p(2, k);
    CHECK(std::abs(rdm::eigenvalue_mass_n2(p, 0.0, 1.0) - 1.0) < 1e-8);
    // Direct quadrature of the log-density, split at the Vandermonde zero.
    auto f = [&](double x) {
      const double v[] = {x, 1.0 - x};
      return std::exp(rdm::log_density_eigs(p, v));
    };
    const double total = gauss_kronrod<double, 31>::integrate(f, 0.0, 0.5, 20, 1e-13) +
                         gauss_kronrod<double, 31>::integrate(f, 0.5, 1.0, 20, 1e-13);
    CAPTURE(k);
    CHECK(std::abs(total - 1.0) < 1e-8);
  }
}

TEST_CASE("n = 2 interval masses match the oracle") {
  const std::pair<std::size_t, double> cases[] = {
      {2, 0.004}, {3, 0.00976}, {5, 0.02441344}, {10, 0.06986308163377562},
      {50, 0.37038714897566877}};
  for (auto [k, mass] : cases) {
    CAPTURE(k);
    CHECK(std::abs(rdm::eigenvalue_mass_n2({2, k}, 0.5, 0.6) - mass) < 1e-12);
  }
}

TEST_CASE("moment examples") {
  for (auto p : {EnsembleParams(1, 1), EnsembleParams(2, 7), EnsembleParams(9, 4)}) {
    CHECK(rdm::moment_explicit(p, 1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rdm::moment_recurrence(p, 1) == 1.0);
  }
  CHECK(rdm::moment_explicit({2, 2}, 2) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(rdm::moment_explicit({2, 2}, 3) == doctest::Approx(0.7).epsilon(1e-15));
  // (n^3 + 6n^2k + 6nk^2 + k^3 + 5n + 5k) / ((nk+1)(nk+2)(nk+3)) = 132/210.
  CHECK(rdm::moment_recurrence({2, 2}, 4) == doctest::Approx(22.0 / 35.0).epsilon(1e-15));
  CHECK(rdm::moment_recurrence({3, 4}, 2) == doctest::Approx(7.0 / 13.0).epsilon(1e-15));
  CHECK(rdm::moment_recurrence({5, 3}, 0) == 5.0);
}

TEST_CASE("moments match the frozen oracle") {
  for (const auto& f : kFrozenMoments) {
    const EnsembleParams p(f.n, f.k);
    for (int q = 1; q <= 10; ++q) {
      CAPTURE(f.n);
      CAPTURE(f.k);
      CAPTURE(q);
      CHECK(close(rdm::moment_explicit(p, q), f.values[q - 1], 1e-13));
      CHECK(close(rdm::moment_recurrence(p, q), f.values[q - 1], 1e-13));
      CHECK(close(rdm::moment_from_wishart(p, q), f.values[q - 1], 1e-13));
    }
  }
}

TEST_CASE("moment routes agree for q <= 10 and n, k <= 50") {
  double worst = 0.0;
  for (std::size_t n = 1; n <= 50; ++n) {
    for (std::size_t k = 1; k <= 50; ++k) {
      const EnsembleParams p(n, k);
      for (int q = 1; q <= 10; ++q) {
        const double r = rdm::moment_recurrence(p, q);
        worst = std::max(worst, std::abs(rdm::moment_explicit(p, q) - r) / r);
        worst = std::max(worst, std::abs(rdm::moment_from_wishart(p, q) - r) / r);
      }
    }
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("recurrence stays exact where the explicit sum gives up") {
  // Exact rationals from the oracle script.
  CHECK(close(rdm::moment_recurrence({50, 50}, 14), 2.1557273862822122e-16, 1e-14));
  CHECK(close(rdm::moment_recurrence({50, 50}, 30), 2.123614756816511e-34, 1e-14));
  CHECK_THROWS_AS(rdm::moment_explicit({50, 50}, 15), rdm::RangeError);
}

TEST_CASE("explicit sum is usable up to q = 14 for n, k <= 50") {
  for (std::size_t n = 1; n <= 50; ++n) {
    for (std::size_t k = 1; k <= 50; ++k) {
      const EnsembleParams p(n, k);
      for (int q = 11; q <= 14; ++q) {
        CHECK(close(rdm::moment_explicit(p, q), rdm::moment_recurrence(p, q), 1e-8));
      }
    }
  }
}

TEST_CASE("moments are symmetric in n and k") {
  for (int q = 1; q <= 8; ++q) {
    CHECK(close(rdm::moment_recurrence({3, 7}, q), rdm::moment_recurrence({7, 3}, q), 1e-14));
    CHECK(close(rdm::moment_explicit({3, 7}, q), rdm::moment_explicit({7, 3}, q), 1e-14));
  }
}

TEST_CASE("moments decrease strictly in q for n >= 2") {
  for (auto p : {EnsembleParams(2, 2), EnsembleParams(3, 50), EnsembleParams(40, 40)}) {
    for (int q = 1; q < 40; ++q) CHECK(rdm::moment_recurrence(p, q + 1) < rdm::moment_recurrence(p, q));
  }
}

TEST_CASE("explicit sum either agrees or refuses") {
  // Past its usable range the explicit sum must throw rather than drift.
  for (std::size_t n : {2u, 10u, 50u}) {
    for (int q = 1; q <= 60; ++q) {
      const EnsembleParams p(n, 50);
      try {
        const double e = rdm::moment_explicit(p, q);
        CHECK(close(e, rdm::moment_recurrence(p, q), 1e-8));
      } catch (const rdm::RangeError&) {
      }
    }
  }
}

TEST_CASE("moment_table carries its method") {
  const auto t = rdm::moment_table({2, 2}, 4, rdm::MomentMethod::Explicit);
  CHECK(t.method == rdm::MomentMethod::Explicit);
  CHECK(t.values.size() == 4);
  CHECK(t.values.at(1) == doctest::Approx(1.0));
  CHECK(t.values.at(4) == doctest::Approx(22.0 / 35.0).epsilon(1e-14));
  const auto b = rdm::moment_table({3, 4}, 6, rdm::MomentMethod::WishartBridge);
  for (int q = 1; q <= 6; ++q)
    CHECK(close(b.values.at(q), rdm::moment_recurrence({3, 4}, q), 1e-13));
  CHECK_THROWS_AS(rdm::moment_table({2, 2}, 4, rdm::MomentMethod::MonteCarlo), rdm::UsageError);
}

TEST_CASE("wishart_moment examples") {
  CHECK(rdm::wishart_moment({1, 1}, 3) == 6.0);
  CHECK(rdm::wishart_moment({1, 1}, 1) == 1.0);
  CHECK(rdm::wishart_moment({2, 2}, 2) == 16.0);
  CHECK(rdm::moment_bridge_factor({2, 2}, 2) == 20.0);
  // Beyond 127 bits the value comes from the recurrence instead.
  const EnsembleParams big(40, 60);
  CHECK(close(rdm::wishart_moment(big, 30),
              rdm::moment_recurrence(big, 30) * rdm::moment_bridge_factor(big, 30), 1e-12));
}

TEST_CASE("Monte Carlo mean of tr W^2 at (2, 2)") {
  auto t2 = rdm::map_draws(71, 100000, 1, [](rdm::RngStream& rng) {
    const auto w = rdm::sample_wishart(2, 2, rng);
    double s = 0.0;
    for (const auto& z : w.matrix.data()) s += std::norm(z);
    return s;
  });
  CHECK(std::abs(rdm::summarize(t2).z_score(16.0)) < 4.0);
}

TEST_CASE("page_entropy examples") {
  CHECK(rdm::page_entropy({1, 7}) == 0.0);
  CHECK(rdm::page_entropy({2, 2}) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(std::abs(rdm::page_entropy({2, 1000}) - std::numbers::ln2) < 0.001);
  CHECK(rdm::page_entropy({2, 1000}) == doctest::Approx(0.6923972430599377).epsilon(1e-14));
  CHECK(rdm::page_entropy({2, 10000}) == doctest::Approx(0.6930721811849484).epsilon(1e-14));
  CHECK(rdm::page_entropy({3, 5}) == doctest::Approx(0.83489565989566).epsilon(1e-13));
}

TEST_CASE("Monte Carlo entropy at (2, 2) matches Page") {
  auto h = rdm::map_draws(72, 100000, 1, [](rdm::RngStream& rng) {
    return rdm::von_neumann_entropy(rdm::density_spectrum(rdm::sample_density_matrix(2, 2, rng)));
  });
  CHECK(std::abs(rdm::summarize(h).z_score(1.0 / 3.0)) < 4.0);
}

TEST_CASE("dirichlet_mean_sq_distance examples") {
  CHECK(rdm::dirichlet_mean_sq_distance(2, 1.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(std::abs(rdm::dirichlet_mean_sq_distance(2, 1e-12) - 0.5) < 1e-9);
  double prev = rdm::dirichlet_mean_sq_distance(5, 0.1);
  for (double a : {0.5, 1.0, 10.0, 1e3, 1e6}) {
    const double d = rdm::dirichlet_mean_sq_distance(5, a);
    CHECK(d < prev);
    prev = d;
  }
  CHECK(prev < 1e-6);
  CHECK_THROWS_AS(rdm::dirichlet_mean_sq_distance(2, 0.0), rdm::ParameterError);
  CHECK_THROWS_AS(rdm::dirichlet_mean_sq_distance(1, 1.0), rdm::DimensionError);
}

TEST_CASE("eigenvalue histogram matches the n = 2 density") {
  const std::size_t draws = 100000, bins = 50;
  for (std::size_t k : {2u, 10u, 50u}) {
    const EnsembleParams p(2, k);
    // Draw i reports the eigenvalue in slot i % 2, giving the law of an
    // unordered eigenvalue.
    auto first = rdm::map_draws(80 + k, draws, 1, [&](rdm::RngStream& rng) {
      return rdm::density_spectrum(rdm::sample_density_matrix(2, k, rng)).values;
    });
    std::vector<double> sample(draws);
    for (std::size_t i = 0; i < draws; ++i) sample[i] = first[i][i % 2];
    std::vector<double> edges(bins + 1), probs(bins);
    for (std::size_t b = 0; b <= bins; ++b) edges[b] = double(b) / bins;
    for (std::size_t b = 0; b < bins; ++b) probs[b] = rdm::eigenvalue_mass_n2(p, edges[b], edges[b + 1]);
    auto mass = rdm::histogram(rdm::EmpiricalMeasure::uniform(sample), edges);
    for (auto& m : mass) m *= double(draws);
    const auto r = rdm::chi_square_test(mass, probs);
    CAPTURE(k);
    CAPTURE(r.statistic);
    CHECK(r.p_value > 0.001);
  }
}
