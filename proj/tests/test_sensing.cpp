#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "csis/errors.hpp"
#include "csis/sensing.hpp"
#include "testutil.hpp"

using namespace csis;

namespace {

SparseBlockVector make_sv(const Eigen::VectorXd& coeffs, int p1) {
  SparseBlockVector sv;
  sv.coeffs = coeffs;
  sv.p1 = p1;
  return sv;
}

}  // namespace

TEST_CASE("key validation") {
  auto key = [](int p1, int m, double alpha) { return StegoKey{1, 8, p1, m, alpha}; };
  CHECK_THROWS_AS(key(12, 12, 1.0).validate(), ConfigError);  // p1 == |m|
  CHECK_THROWS_AS(key(12, 64, 1.0).validate(), ConfigError);  // |m| == B^2
  CHECK_THROWS_AS(key(0, 37, 1.0).validate(), ConfigError);
  CHECK_THROWS_AS(key(12, 37, 0.0).validate(), ConfigError);
  CHECK_NOTHROW(key(12, 37, 1.0).validate());
}

TEST_CASE("hadamard64 rows are orthogonal with +/-1 entries") {
  const Eigen::MatrixXd h = hadamard64();
  CHECK((h.cwiseAbs().array() == 1.0).all());
  CHECK((h * h.transpose() - 64.0 * Eigen::MatrixXd::Identity(64, 64)).cwiseAbs().maxCoeff() ==
        0.0);
}

TEST_CASE("derive_matrices is key-deterministic") {
  const StegoKey key{42, 8, 12, 37, 1.0};
  const MeasurementMatrices a = derive_matrices(key);
  const MeasurementMatrices b = derive_matrices(key);
  CHECK(a.phi_v == b.phi_v);
  CHECK(a.phi_v.rows() == 25);
  CHECK(a.phi_v.cols() == 52);

  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    StegoKey k1 = key, k2 = key;
    k1.seed = seed;
    k2.seed = seed + 1;
    CHECK(derive_matrices(k1).phi_v != derive_matrices(k2).phi_v);
  }
}

TEST_CASE("phi_v entries are +/-1 with row norm sqrt(p2)") {
  const MeasurementMatrices mm = derive_matrices(StegoKey{7, 8, 12, 37, 1.0});
  CHECK((mm.phi_v.cwiseAbs().array() == 1.0).all());
  for (Eigen::Index r = 0; r < mm.phi_v.rows(); ++r)
    CHECK(mm.phi_v.row(r).norm() == doctest::Approx(std::sqrt(52.0)).epsilon(1e-12));
}

TEST_CASE("derive_matrices rejects p2 > 64") {
  const StegoKey big{1, 16, 10, 50, 1.0};
  CHECK_THROWS_AS(derive_matrices(big), ConfigError);
}

TEST_CASE("measure") {
  const StegoKey key{3, 8, 12, 37, 1.0};
  const MeasurementMatrices mm = derive_matrices(key);

  Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(64);
  coeffs.head(12) = Eigen::VectorXd::LinSpaced(12, 1.0, 12.0);
  const BlockMeasurements zero_v = measure(make_sv(coeffs, 12), mm);
  CHECK(zero_v.y_u == coeffs.head(12));  // alpha = 1: exact
  CHECK(zero_v.y_v.isZero());

  // unit v-coordinate picks out a phi_v column
  for (int k : {0, 17, 51}) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(64);
    e[12 + k] = 1.0;
    const BlockMeasurements m = measure(make_sv(e, 12), mm);
    CHECK(m.y_v.cast<double>() == mm.phi_v.col(k));
  }

  CHECK_THROWS_AS(measure(make_sv(Eigen::VectorXd::Zero(16), 4), mm), ConfigError);
}

TEST_CASE("quantization error is at most half a unit") {
  const MeasurementMatrices mm = derive_matrices(StegoKey{9, 8, 12, 37, 1.0});
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::VectorXd coeffs(64);
    coeffs.setZero();
    coeffs.tail(52) = testutil::random_vector(52, rng) * 3.0;
    coeffs.head(12).setOnes();
    const SparseBlockVector sv = make_sv(coeffs, 12);
    const BlockMeasurements m = measure(sv, mm);
    const Eigen::VectorXd raw = mm.phi_v * sv.v();
    CHECK((raw - m.y_v.cast<double>()).cwiseAbs().maxCoeff() <= 0.5);
  }
}

TEST_CASE("invert_u") {
  Eigen::VectorXd y(2);
  y << 2.0, 4.0;
  CHECK(invert_u(y, 1.0) == y);
  const Eigen::VectorXd half = invert_u(y, 0.5);
  CHECK(half[0] == 4.0);
  CHECK(half[1] == 8.0);
  CHECK_THROWS_AS(invert_u(y, 0.0), ConfigError);

  // round trip through measure: y_u is never quantized
  const StegoKey key{5, 8, 12, 37, 0.25};
  const MeasurementMatrices mm = derive_matrices(key);
  std::mt19937_64 rng(23);
  const SparseBlockVector sv = make_sv(testutil::random_vector(64, rng), 12);
  CHECK(invert_u(measure(sv, mm).y_u, key.alpha) == sv.u());
}

TEST_CASE("rip_ratio") {
  const StegoKey key{13, 8, 12, 37, 1.0};
  const MeasurementMatrices mm = derive_matrices(key);
  const double expected = 25.0 / 52.0;

  Eigen::VectorXd e = Eigen::VectorXd::Zero(64);
  e[20] = 1.0;
  CHECK(rip_ratio(mm, make_sv(e, 12)) == doctest::Approx(expected).epsilon(1e-12));

  std::mt19937_64 rng(29);
  double sum = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    Eigen::VectorXd coeffs(64);
    coeffs.setZero();
    coeffs.tail(52) = testutil::random_vector(52, rng);
    const double r = rip_ratio(mm, make_sv(coeffs, 12));
    CHECK(r > 0.0);
    sum += r;
  }
  CHECK(sum / 1000.0 == doctest::Approx(expected).epsilon(0.10));

  CHECK_THROWS_AS(rip_ratio(mm, make_sv(Eigen::VectorXd::Zero(64), 12)), ConfigError);
}

TEST_CASE("key file round trip") {
  const StegoKey key{0xdeadbeefcafe1234ULL, 8, 14, 39, 0.5};
  const auto bytes = save_key(key);
  CHECK(bytes.size() == 34);
  const StegoKey back = load_key(bytes);
  CHECK(back.seed == key.seed);
  CHECK(back.block_size == key.block_size);
  CHECK(back.p1 == key.p1);
  CHECK(back.m_size == key.m_size);
  CHECK(back.alpha == key.alpha);

  auto bad = bytes;
  bad[0] = 'X';
  CHECK_THROWS_AS(load_key(bad), FormatError);
  bad = bytes;
  bad.pop_back();
  CHECK_THROWS_AS(load_key(bad), FormatError);
}
