#include <doctest.h>

#include <cmath>
#include <vector>

#include "rdm/montecarlo.hpp"
#include "rdm/rng.hpp"

using rdm::PhiloxCounter;
using rdm::RngStream;

// Known-answer vectors published with Random123 (kat_vectors, philox4x64_10).
TEST_CASE("philox4x64-10 known answers") {
  CHECK(rdm::philox4x64_10({0, 0, 0, 0}, {0, 0}) ==
        PhiloxCounter{0x16554d9eca36314cULL, 0xdb20fe9d672d0fdcULL, 0xd7e772cee186176bULL,
                      0x7e68b68aec7ba23bULL});
  const auto ones = ~0ULL;
  CHECK(rdm::philox4x64_10({ones, ones, ones, ones}, {ones, ones}) ==
        PhiloxCounter{0x87b092c3013fe90bULL, 0x438c3c67be8d0224ULL, 0x9cc7d7c69cd777b6ULL,
                      0xa09caebf594f0ba0ULL});
  CHECK(rdm::philox4x64_10({0x243f6a8885a308d3ULL, 0x13198a2e03707344ULL,
                            0xa4093822299f31d0ULL, 0x082efa98ec4e6c89ULL},
                           {0x452821e638d01377ULL, 0xbe5466cf34e90c6cULL}) ==
        PhiloxCounter{0xa528f45403e61d95ULL, 0x38c72dbd566e9788ULL, 0xa5a1610e72fd18b5ULL,
                      0x57bd43b5e52b7fe6ULL});
}

TEST_CASE("stream output is the Philox block sequence") {
  RngStream rng(0, 0);
  const auto block0 = rdm::philox4x64_10({0, 0, 0, 0}, {0, 0});
  const auto block1 = rdm::philox4x64_10({1, 0, 0, 0}, {0, 0});
  for (auto w : block0) CHECK(rng.next_u64() == w);
  for (auto w : block1) CHECK(rng.next_u64() == w);
}

TEST_CASE("streams are reproducible and distinct") {
  RngStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
  for (int i = 0; i < 100; ++i) {
    const auto va = a.next_u64();
    CHECK(va == b.next_u64());
    CHECK(va != c.next_u64());
    CHECK(va != d.next_u64());
  }
}

TEST_CASE("uniform ranges") {
  RngStream rng(1, 2);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    CHECK((u >= 0.0 && u < 1.0));
    const double v = rng.uniform_open_low();
    CHECK((v > 0.0 && v <= 1.0));
  }
}

TEST_CASE("complex normal consumes two uniforms") {
  RngStream a(5, 5), b(5, 5);
  (void)a.complex_normal();
  (void)b.uniform();
  (void)b.uniform();
  CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("normal moments") {
  RngStream rng(11, 0);
  std::vector<double> xs(200000);
  for (auto& x : xs) x = rng.normal();
  const auto s = rdm::summarize(xs);
  CHECK(std::abs(s.mean) < 4 * s.std_error);
  CHECK(s.variance == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("gamma sampler mean and variance") {
  for (double shape : {0.3, 1.0, 2.5, 40.0}) {
    RngStream rng(3, static_cast<std::uint64_t>(shape * 10));
    std::vector<double> xs(100000);
    for (auto& x : xs) x = rng.gamma(shape);
    const auto s = rdm::summarize(xs);
    CAPTURE(shape);
    CHECK(std::abs(s.mean - shape) < 4 * s.std_error);
    CHECK(s.variance == doctest::Approx(shape).epsilon(0.05));
  }
}

TEST_CASE("map_draws is independent of worker count") {
  auto draw = [](RngStream& rng) { return rng.uniform() + rng.normal(); };
  const auto one = rdm::map_draws(99, 1000, 1, draw);
  const auto four = rdm::map_draws(99, 1000, 4, draw);
  CHECK(one == four);
  CHECK(one[17] == RngStream(99, 17).uniform() + [] {
    RngStream r(99, 17);
    (void)r.uniform();
    return r.normal();
  }());
}

TEST_CASE("map_draws propagates exceptions") {
  auto draw = [](RngStream& rng) -> double {
    if (rng.stream_index() == 5) throw std::runtime_error("boom");
    return 0.0;
  };
  CHECK_THROWS_AS(rdm::map_draws(1, 10, 3, draw), std::runtime_error);
}

TEST_CASE("derive_seed separates labelled experiments") {
  CHECK(rdm::derive_seed(7, 2, 2) == rdm::derive_seed(7, 2, 2));
  CHECK(rdm::derive_seed(7, 2, 2) != rdm::derive_seed(7, 2, 3));
  CHECK(rdm::derive_seed(7, 2, 3) != rdm::derive_seed(7, 3, 2));
  CHECK(rdm::derive_seed(7, 2, 2) != rdm::derive_seed(8, 2, 2));
}
