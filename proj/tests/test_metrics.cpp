#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "csis/errors.hpp"
#include "csis/metrics.hpp"
#include "csis/synthetic.hpp"
#include "testutil.hpp"

using namespace csis;

TEST_CASE("mse") {
  Eigen::MatrixXd a(1, 2), b(1, 2);
  a << 0, 0;
  b << 3, 4;
  CHECK(mse(a, a) == 0.0);
  CHECK(mse(a, b) == 12.5);
  CHECK(mse(Eigen::MatrixXd::Zero(5, 7), Eigen::MatrixXd::Constant(5, 7, 255.0)) == 65025.0);
  CHECK_THROWS_AS(mse(a, Eigen::MatrixXd::Zero(2, 2)), ConfigError);
}

TEST_CASE("psnr") {
  const Eigen::MatrixXd z = Eigen::MatrixXd::Zero(4, 4);
  CHECK(std::isinf(psnr(z, z)));
  CHECK(psnr(z, Eigen::MatrixXd::Constant(4, 4, 255.0)) == doctest::Approx(0.0).epsilon(1e-12));
  // MSE 6.5025 = 255^2 / 10^4 -> 40 dB
  CHECK(psnr(z, Eigen::MatrixXd::Constant(4, 4, 2.55)) == doctest::Approx(40.0).epsilon(1e-12));

  std::mt19937_64 rng(71);
  const Eigen::MatrixXd x = testutil::random_matrix(16, 16, rng) * 60.0;
  const Eigen::MatrixXd y = testutil::random_matrix(16, 16, rng) * 60.0;
  CHECK(psnr(x, y) == doctest::Approx(10.0 * std::log10(65025.0 / mse(x, y))).epsilon(1e-12));
}

TEST_CASE("mssim") {
  const Image a = synthetic_cover("terrain", 64, 64, 3);
  CHECK(mssim(a, a) == 1.0);

  Image inverted = a;
  for (auto& p : inverted.pixels) p = static_cast<std::uint8_t>(255 - p);
  CHECK(mssim(a, inverted) < 0.5);

  const Image b = synthetic_cover("plasma", 64, 64, 4);
  CHECK(mssim(a, b) == doctest::Approx(mssim(b, a)).epsilon(1e-12));
  CHECK(mssim(a, b) >= -1.0);
  CHECK(mssim(a, b) <= 1.0);

  CHECK_THROWS_AS(mssim(Eigen::MatrixXd::Zero(8, 8), Eigen::MatrixXd::Zero(8, 8)), ConfigError);
}

TEST_CASE("ncc") {
  const Image cover = synthetic_cover("rings", 32, 32, 5);
  CHECK(ncc(cover, cover) == 1.0);

  const Eigen::MatrixXd c = to_matrix(cover);
  CHECK(ncc(c, 2.0 * c) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(ncc(c, Eigen::MatrixXd::Zero(32, 32)) == 0.0);
  CHECK_THROWS_AS(ncc(Eigen::MatrixXd::Zero(4, 4), Eigen::MatrixXd::Zero(4, 4)), ConfigError);
}

TEST_CASE("entropy") {
  std::vector<std::uint8_t> constant(100, 42);
  CHECK(entropy(constant) == 0.0);

  std::vector<std::uint8_t> two;
  for (int i = 0; i < 50; ++i) {
    two.push_back(0);
    two.push_back(255);
  }
  CHECK(entropy(two) == doctest::Approx(1.0).epsilon(1e-12));

  std::vector<std::uint8_t> uniform;
  for (int v = 0; v < 256; ++v)
    for (int k = 0; k < 3; ++k) uniform.push_back(static_cast<std::uint8_t>(v));
  CHECK(entropy(uniform) == doctest::Approx(8.0).epsilon(1e-12));

  // permutation invariance
  std::vector<std::uint8_t> vals(1000);
  std::mt19937 rng(6);
  for (auto& v : vals) v = static_cast<std::uint8_t>(rng() & 0xff);
  const double before = entropy(vals);
  std::shuffle(vals.begin(), vals.end(), rng);
  CHECK(entropy(vals) == before);

  for (const double e : {before}) {
    CHECK(e >= 0.0);
    CHECK(e <= 8.0);
  }
}

TEST_CASE("sampling rate") {
  CHECK(sampling_rate(37, 8) == 0.578125);
  CHECK(sampling_rate(64, 8) == 1.0);
  CHECK(sampling_rate(32, 8) == 0.5);
}

TEST_CASE("histogram") {
  const Histogram empty = histogram(std::vector<int>{}, 8);
  CHECK(empty.counts.size() == 8);
  CHECK(std::count(empty.counts.begin(), empty.counts.end(), 0u) == 8);

  std::vector<int> vals = {-5, -5, 0, 3, 3, 3, 17};
  const Histogram h = histogram(vals, 4);
  std::size_t total = 0;
  for (std::size_t c : h.counts) total += c;
  CHECK(total == vals.size());
  CHECK(h.lo == -5);
}

TEST_CASE("quality_report averages channels") {
  const Image cover = synthetic_cover("terrain", 32, 32, 8, 3);
  const QualityReport q = quality_report(cover, cover);
  CHECK(q.ncc_per_channel.size() == 3);
  CHECK(q.mssim == 1.0);
  CHECK(q.ncc == 1.0);
  CHECK(std::isinf(q.psnr_db));
  CHECK(q.entropy_cover == q.entropy_stego);
}
