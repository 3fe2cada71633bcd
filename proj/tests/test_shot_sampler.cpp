#include <doctest.h>

#include <cmath>

#include "vdge/error.hpp"
#include "vdge/shot_sampler.hpp"

using namespace vdge;

TEST_CASE("degenerate fidelities need no sampling") {
  Rng rng = make_rng(1);
  const ShotConfig cfg;
  for (const std::int64_t shots : {std::int64_t{1}, std::int64_t{8192}}) {
    ShotConfig c = cfg;
    c.shots = shots;
    CHECK(sample_fidelity(1.0, c, 3, rng) == 1.0);
    CHECK(sample_fidelity(0.0, c, 3, rng) == 0.0);
  }
}

TEST_CASE("binomial mean at f = 0.5") {
  Rng rng = make_rng(2);
  const ShotConfig cfg;  // N = 8192
  const int draws = 10000;
  double sum = 0.0;
  for (int i = 0; i < draws; ++i) sum += sample_fidelity(0.5, cfg, 3, rng);
  // 3 sigma on the average is about 1.7e-4.
  CHECK(sum / draws == doctest::Approx(0.5).epsilon(0.002));
}

TEST_CASE("sampling is unbiased") {
  const ShotConfig cfg;
  const int draws = 100000;
  for (const double f : {0.1, 0.5, 0.9}) {
    Rng rng = make_rng(3);
    double sum = 0.0;
    for (int i = 0; i < draws; ++i) sum += sample_fidelity(f, cfg, 4, rng);
    const double mean = sum / draws;
    const double bound = 4.0 * std::sqrt(f * (1.0 - f) / (8192.0 * draws));
    CHECK(std::abs(mean - f) < bound);
  }
}

TEST_CASE("sampling variance matches the binomial") {
  const ShotConfig cfg;
  const int draws = 100000;
  for (const double f : {0.1, 0.5, 0.9}) {
    Rng rng = make_rng(4);
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < draws; ++i) {
      const double x = sample_fidelity(f, cfg, 4, rng);
      sum += x;
      sum2 += x * x;
    }
    const double mean = sum / draws;
    const double var = sum2 / draws - mean * mean;
    const double expected = f * (1.0 - f) / 8192.0;
    CHECK(var == doctest::Approx(expected).epsilon(0.2));
  }
}

TEST_CASE("identical seeds give identical draws") {
  const ShotConfig cfg{4096, 0.01};
  Rng ra = make_rng(5);
  Rng rb = make_rng(5);
  for (int i = 0; i < 100; ++i) {
    CHECK(sample_fidelity(0.3, cfg, 5, ra) == sample_fidelity(0.3, cfg, 5, rb));
  }
}

TEST_CASE("readout flip model") {
  CHECK(effective_fidelity(1.0, 0.01, 3) == doctest::Approx(std::pow(0.99, 3)).epsilon(1e-12));
  CHECK(effective_fidelity(0.0, 0.01, 3) == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(effective_fidelity(0.5, 0.0, 5) == 0.5);

  // Expectation with noise matches f*(1-p)^n + (1-f)*p.
  Rng rng = make_rng(6);
  ShotConfig cfg;
  cfg.readout_flip = 0.02;
  const double f = 0.7;
  const int draws = 20000;
  double sum = 0.0;
  for (int i = 0; i < draws; ++i) sum += sample_fidelity(f, cfg, 4, rng);
  const double expected = f * std::pow(0.98, 4) + (1.0 - f) * 0.02;
  CHECK(sum / draws == doctest::Approx(expected).epsilon(0.005));
}

TEST_CASE("invalid sampler inputs are rejected") {
  Rng rng = make_rng(7);
  ShotConfig cfg;
  CHECK_THROWS_AS(sample_fidelity(1.5, cfg, 3, rng), Error);
  CHECK_THROWS_AS(sample_fidelity(-0.1, cfg, 3, rng), Error);
  cfg.shots = 0;
  CHECK_THROWS_AS(sample_fidelity(0.5, cfg, 3, rng), Error);
  cfg.shots = 100;
  cfg.readout_flip = 0.6;
  CHECK_THROWS_AS(sample_fidelity(0.5, cfg, 3, rng), Error);
  cfg.readout_flip = 0.0;
  CHECK_THROWS_AS(sample_fidelity(0.5, cfg, 0, rng), Error);
}
