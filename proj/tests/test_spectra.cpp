#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "rdm/asymptotics.hpp"
#include "rdm/error.hpp"
#include "rdm/montecarlo.hpp"
#include "rdm/sampling.hpp"
#include "rdm/spectra.hpp"

using rdm::ComplexMatrix;
using rdm::RngStream;
using cd = std::complex<double>;

namespace {

rdm::Spectrum density_of(std::vector<double> v, std::size_t n, std::size_t k) {
  return {std::move(v), rdm::SpectrumOrigin{rdm::SpectrumSource::Density, {n, k}},
          rdm::Rescale::None};
}

ComplexMatrix random_hermitian(std::size_t n, RngStream& rng) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = rng.normal();
    for (std::size_t j = 0; j < i; ++j) {
      m(i, j) = rng.complex_normal();
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("eigenvalues_hermitian examples") {
  const double d[] = {3.0, 1.0, 2.0};
  CHECK(rdm::eigenvalues_hermitian(ComplexMatrix::diagonal(d)).values ==
        std::vector<double>{1.0, 2.0, 3.0});

  ComplexMatrix quarter = ComplexMatrix::identity(4);
  for (auto& z : quarter.data()) z *= 0.25;
  for (double v : rdm::eigenvalues_hermitian(quarter).values) CHECK(v == doctest::Approx(0.25).epsilon(1e-15));

  const auto s = rdm::eigenvalues_hermitian(ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}));
  CHECK(s.values[0] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(s.values[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rdm::largest_eigenvalue(s) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("eigenvalues_hermitian rejects non-Hermitian input") {
  CHECK_THROWS_AS(rdm::eigenvalues_hermitian(ComplexMatrix(2, 2, {0.0, 1.0, 0.0, 0.0})),
                  rdm::ShapeError);
  CHECK_THROWS_AS(rdm::eigenvalues_hermitian(ComplexMatrix(2, 3)), rdm::ShapeError);
  // Small asymmetry inside the tolerance is accepted.
  CHECK_NOTHROW(rdm::eigenvalues_hermitian(ComplexMatrix(2, 2, {0.0, 1.0, 1.0 + 1e-12, 0.0})));
}

TEST_CASE("eigen_decompose reconstructs random Hermitian matrices") {
  for (std::size_t n : {1u, 2u, 3u, 17u, 95u, 96u, 200u, 400u}) {
    RngStream rng(61, n);
    const auto m = random_hermitian(n, rng);
    const auto e = rdm::eigen_decompose(m);
    REQUIRE(std::is_sorted(e.values.begin(), e.values.end()));
    const ComplexMatrix recon = e.vectors * ComplexMatrix::diagonal(e.values) * e.vectors.adjoint();
    double r = 0.0;
    for (std::size_t i = 0; i < m.data().size(); ++i) r += std::norm(m.data()[i] - recon.data()[i]);
    CAPTURE(n);
    CHECK(std::sqrt(r) <= 1e-10 * std::max(1.0, m.frobenius_norm()));

    // The eigenvalues-only path returns the same spectrum.
    const auto only = rdm::eigenvalues_hermitian(m).values;
    for (std::size_t i = 0; i < n; ++i)
      CHECK(std::abs(only[i] - e.values[i]) <= 1e-10 * std::max(1.0, m.frobenius_norm()));
  }
}

TEST_CASE("density_spectrum examples") {
  const double d[] = {0.25, 0.75};
  rdm::DensityMatrix rho{ComplexMatrix::diagonal(d), {2, 2}};
  const auto s = rdm::density_spectrum(rho);
  CHECK(s.values == std::vector<double>{0.25, 0.75});
  CHECK(rdm::largest_eigenvalue(s) == 0.75);
}

TEST_CASE("density spectra lie on the simplex") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    RngStream rng(62, i);
    const std::size_t n = 1 + i % 6, k = 1 + (i / 6) % 6;
    const auto s = rdm::density_spectrum(rdm::sample_density_matrix(n, k, rng));
    double sum = 0.0;
    for (double v : s.values) {
      CHECK(v >= -1e-10);
      sum += v;
    }
    CHECK(std::abs(sum - 1.0) <= 1e-10);
    const double h = rdm::von_neumann_entropy(s);
    CHECK(h >= 0.0);
    CHECK(h <= std::log(double(n)) + 1e-12);
    std::size_t zeros = 0;
    for (double v : s.values) zeros += v <= 1e-10;
    if (n > k) CHECK(zeros >= n - k);
  }
}

TEST_CASE("draws from mu_{3,2} have a null eigenvalue") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    RngStream rng(63, i);
    CHECK(rdm::density_spectrum(rdm::sample_density_matrix(3, 2, rng)).values.front() <= 1e-10);
  }
}

TEST_CASE("spectra of mu_{4,2} and mu_{2,4} agree after removing zeros") {
  const std::size_t draws = 10000;
  auto big = rdm::map_draws(64, draws, 1, [](RngStream& rng) {
    auto v = rdm::density_spectrum(rdm::sample_density_matrix(4, 2, rng)).values;
    return std::pair{v[2], v[3]};
  });
  auto small = rdm::map_draws(65, draws, 1, [](RngStream& rng) {
    auto v = rdm::density_spectrum(rdm::sample_density_matrix(2, 4, rng)).values;
    return std::pair{v[0], v[1]};
  });
  std::vector<double> big_max, small_max, big_all, small_all;
  for (auto [a, b] : big) big_max.push_back(b), big_all.push_back(a), big_all.push_back(b);
  for (auto [a, b] : small) small_max.push_back(b), small_all.push_back(a), small_all.push_back(b);
  CHECK(rdm::ks_two_sample(big_max, small_max) < 0.03);
  CHECK(rdm::ks_two_sample(big_all, small_all) < 0.03);
}

TEST_CASE("empirical_measure examples") {
  const auto dm = rdm::empirical_measure(density_of({0.25, 0.75}, 2, 2), rdm::Rescale::DensityBulk);
  REQUIRE(dm.atoms.size() == 2);
  // c n lambda with c = k / n = 1 and n = 2.
  CHECK(dm.atoms[0].location == 0.5);
  CHECK(dm.atoms[1].location == 1.5);
  CHECK(dm.atoms[0].weight == 0.5);
  CHECK(dm.total_weight() == doctest::Approx(1.0).epsilon(1e-12));

  rdm::Spectrum w{{3.0, 3.0, 3.0}, rdm::SpectrumOrigin{rdm::SpectrumSource::Wishart, {3, 5}},
                  rdm::Rescale::None};
  const auto wm = rdm::empirical_measure(w, rdm::Rescale::WishartBulk);
  for (const auto& a : wm.atoms) CHECK(a.location == 1.0);
  CHECK(std::abs(wm.total_weight() - 1.0) <= 1e-12);
}

TEST_CASE("empirical_measure rejects incompatible rescalings") {
  CHECK_THROWS_AS(rdm::empirical_measure(density_of({0.5, 0.5}, 2, 2), rdm::Rescale::WishartBulk),
                  rdm::UsageError);
  rdm::Spectrum bare{{1.0, 2.0}, std::nullopt, rdm::Rescale::None};
  CHECK_THROWS_AS(rdm::empirical_measure(bare, rdm::Rescale::DensityBulk), rdm::UsageError);
  CHECK(rdm::empirical_measure(bare, rdm::Rescale::None).atoms.size() == 2);
}

TEST_CASE("largest_eigenvalue of the maximally mixed state") {
  CHECK(rdm::largest_eigenvalue(density_of({0.2, 0.2, 0.2, 0.2, 0.2}, 5, 5)) == 0.2);
}

TEST_CASE("von_neumann_entropy examples") {
  CHECK(rdm::von_neumann_entropy(density_of({0.0, 1.0}, 2, 2)) == 0.0);
  CHECK(rdm::von_neumann_entropy(density_of({0.5, 0.5}, 2, 2)) ==
        doctest::Approx(std::numbers::ln2).epsilon(1e-15));
  CHECK(rdm::von_neumann_entropy(density_of({0.25, 0.75}, 2, 2)) ==
        doctest::Approx(0.5623351446188083).epsilon(1e-14));
  CHECK(rdm::von_neumann_entropy(density_of({-5e-11, 1.0}, 2, 2)) == 0.0);
  CHECK_THROWS_AS(rdm::von_neumann_entropy(density_of({-1e-6, 1.0}, 2, 2)),
                  rdm::InvalidSpectrumError);
}

TEST_CASE("argmax resolves ties to the last index") {
  const double v[] = {1.0, 3.0, 2.0, 3.0};
  CHECK(rdm::argmax(v) == 3);
  const double w[] = {5.0};
  CHECK(rdm::argmax(w) == 0);
}
