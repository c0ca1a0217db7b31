#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "csis/errors.hpp"
#include "csis/stegocodec.hpp"

using namespace csis;

namespace {

std::vector<BlockMeasurements> blocks_of(std::initializer_list<std::initializer_list<int>> vs) {
  std::vector<BlockMeasurements> out;
  for (const auto& v : vs) {
    BlockMeasurements m;
    m.y_u = Eigen::VectorXd::Zero(2);
    m.y_v.resize(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (int x : v) m.y_v[i++] = x;
    out.push_back(std::move(m));
  }
  return out;
}

BitString random_bits(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  BitString b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(rng() & 1);
  return b;
}

}  // namespace

TEST_CASE("permissibility is the skip-set complement") {
  CHECK_FALSE(is_permissible(0));
  CHECK_FALSE(is_permissible(1));
  CHECK_FALSE(is_permissible(-1));
  CHECK(is_permissible(2));
  CHECK(is_permissible(-2));
  CHECK(is_permissible(1000));
}

TEST_CASE("embed_pair reproduces the rule's worked cases") {
  CHECK(embed_pair(8, 1) == 8);     // 01 on y%4==0
  CHECK(embed_pair(2, 0) == 5);     // 00 special case at y=2
  CHECK(embed_pair(-2, 2) == -5);   // 10 special case at y=-2
  CHECK(embed_pair(7, 1) == 8);     // y%4==3 branch
  CHECK(embed_pair(8, 3) == 10);    // ambiguous branch, ties move away from zero
  CHECK(embed_pair(-8, 3) == -10);
  CHECK_THROWS_AS(embed_pair(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(embed_pair(1, 2), std::invalid_argument);
}

TEST_CASE("extract_pair decodes residue classes") {
  CHECK(extract_pair(5) == 0);    // 00
  CHECK(extract_pair(10) == 3);   // 11
  CHECK(extract_pair(-4) == 1);   // 01, Euclidean modulo
  CHECK(extract_pair(8) == 1);
  CHECK(extract_pair(7) == 2);    // 10
  CHECK_THROWS_AS(extract_pair(-1), std::invalid_argument);

  // constant on each class mod 4
  for (int z = 2; z < 100; ++z) CHECK(extract_pair(z) == extract_pair(z + 4));
  for (int z = -100; z < -1; ++z) CHECK(extract_pair(z) == extract_pair(z - 4));
}

TEST_CASE("exhaustive embed/extract round trip in [-1000,1000]") {
  for (int y = -1000; y <= 1000; ++y) {
    if (!is_permissible(y)) continue;
    for (Dibit s = 0; s < 4; ++s) {
      const int z = embed_pair(y, s);
      CHECK(is_permissible(z));
      CHECK(std::abs(z - y) <= 3);
      CHECK(extract_pair(z) == s);
    }
  }
}

TEST_CASE("capacity counts permissible entries twice") {
  CHECK(capacity(blocks_of({{0, 1, -1}, {0}})) == 0);
  CHECK(capacity(blocks_of({{5, 0, -3}, {2, 1}})) == 6);
  CHECK(capacity({}) == 0);
}

TEST_CASE("embed_stream writes in block order and touches nothing else") {
  const auto m = blocks_of({{4, 0, -6}, {1, 9}});

  const auto unchanged = embed_stream(BitString(), m);
  CHECK(unchanged == m);

  const auto one = embed_stream(BitString::from_string("10"), m);
  CHECK(one[0].y_v[0] == embed_pair(4, 2));
  CHECK(one[0].y_v[1] == 0);
  CHECK(one[0].y_v[2] == -6);
  CHECK(one[1].y_v == m[1].y_v);
  CHECK(std::abs(one[0].y_v[0] - 4) <= 3);

  // order: block 0 entry 0, block 0 entry 2, block 1 entry 1
  const auto three = embed_stream(BitString::from_string("010011"), m);
  CHECK(three[0].y_v[0] == embed_pair(4, 1));
  CHECK(three[0].y_v[2] == embed_pair(-6, 0));
  CHECK(three[1].y_v[1] == embed_pair(9, 3));
  CHECK(three[1].y_v[0] == 1);

  CHECK_THROWS_AS(embed_stream(BitString::from_string("01001101"), m), CapacityError);
  CHECK_THROWS_AS(embed_stream(BitString::from_string("0"), m), CapacityError);
}

TEST_CASE("extract_stream inverts embed_stream as a prefix") {
  CHECK(extract_stream(blocks_of({{0, 1, -1}})).empty());
  CHECK(extract_stream(blocks_of({{5}})).to_string() == "00");

  std::mt19937 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<BlockMeasurements> m;
    for (int b = 0; b < 6; ++b) {
      BlockMeasurements bm;
      bm.y_u = Eigen::VectorXd::Zero(1);
      bm.y_v.resize(10);
      for (int i = 0; i < 10; ++i)
        bm.y_v[i] = static_cast<int>(rng() % 41) - 20;
      m.push_back(std::move(bm));
    }
    const std::size_t cap = capacity(m);
    const std::size_t len = (rng() % (cap + 1)) & ~std::size_t{1};
    const BitString payload = random_bits(len, static_cast<unsigned>(trial));
    const BitString got = extract_stream(embed_stream(payload, m));
    CHECK(got.size() == cap);
    CHECK(got.prefix(len) == payload);
  }
}

TEST_CASE("ber percentages") {
  const BitString a = BitString::from_string("1010");
  CHECK(ber(a, a) == 0.0);
  CHECK(ber(a, BitString::from_string("0101")) == 100.0);
  CHECK(ber(a, BitString::from_string("1000")) == 25.0);
  CHECK_THROWS_AS(ber(a, BitString::from_string("10")), std::invalid_argument);
}

TEST_CASE("ber is a metric") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const BitString a = random_bits(64, rng());
    const BitString b = random_bits(64, rng());
    const BitString c = random_bits(64, rng());
    CHECK(ber(a, b) == ber(b, a));
    CHECK((ber(a, b) == 0.0) == (a == b));
    CHECK(ber(a, c) <= ber(a, b) + ber(b, c) + 1e-12);
  }
}

TEST_CASE("add_sub_profile") {
  const auto m = blocks_of({{4, -6, 9}});
  const AddSubProfile none = add_sub_profile(m, m);
  CHECK(none.modified == 0);
  CHECK(none.p_add == 0.0);
  CHECK(none.p_sub == 0.0);

  auto plus = m;
  plus[0].y_v[2] = 10;
  const AddSubProfile one = add_sub_profile(m, plus);
  CHECK(one.modified == 1);
  CHECK(one.p_add == 1.0);
  CHECK(one.p_sub == 0.0);
}
