#include <cstring>

#include "doctest.h"
#include "test_util.hpp"
#include "umc/permute.hpp"

using namespace umc;
using namespace umc::test;

TEST_CASE("apply gathers values into serialized order") {
  const std::vector<double> values = {10, 20, 30};
  CHECK(apply_permutation(values, Permutation{{2, 0, 1}}) == std::vector<double>{30, 10, 20});
  CHECK(apply_permutation(values, Permutation::identity(3)) == values);
  CHECK(apply_permutation(std::vector<double>{}, Permutation{}).empty());
  CHECK_THROWS_AS(apply_permutation(values, Permutation::identity(4)), ValidationError);
}

TEST_CASE("inversion") {
  CHECK(invert_permutation(Permutation{{2, 0, 1}}).order == std::vector<NodeId>{1, 2, 0});
  CHECK(invert_permutation(Permutation::identity(5)) == Permutation::identity(5));
  const Permutation p = random_permutation(64, 9);
  CHECK(invert_permutation(invert_permutation(p)) == p);
}

TEST_CASE("order-mapping file layout is bit-exact") {
  const auto bytes = write_permutation(Permutation{{2, 0, 1}});
  const std::uint8_t expected[] = {
      'U', 'M', 'R', 'P',              // magic
      1,   0,                          // version
      0,   0,                          // reserved
      3,   0,   0,   0, 0, 0, 0, 0,    // n
      2,   0,   0,   0, 0, 0, 0, 0,    // order[0]
      0,   0,   0,   0, 0, 0, 0, 0,    // order[1]
      1,   0,   0,   0, 0, 0, 0, 0,    // order[2]
  };
  REQUIRE(bytes.size() == sizeof(expected));
  CHECK(std::memcmp(bytes.data(), expected, sizeof(expected)) == 0);
}

TEST_CASE("order-mapping file validation") {
  auto bytes = write_permutation(Permutation{{2, 0, 1}});

  SUBCASE("round trip") {
    CHECK(read_permutation(bytes).order == std::vector<NodeId>{2, 0, 1});
  }
  SUBCASE("bad magic") {
    bytes[0] = 'X';
    CHECK_THROWS_WITH_AS(read_permutation(bytes), doctest::Contains("bad magic"), CorruptError);
  }
  SUBCASE("bad version") {
    bytes[4] = 9;
    CHECK_THROWS_WITH_AS(read_permutation(bytes), doctest::Contains("version"), CorruptError);
  }
  SUBCASE("not a bijection") {
    const auto dup = write_permutation(Permutation{{0, 0, 1}});
    CHECK_THROWS_WITH_AS(read_permutation(dup), doctest::Contains("not a bijection"),
                         CorruptError);
  }
  SUBCASE("truncation") {
    bytes.pop_back();
    CHECK_THROWS_AS(read_permutation(bytes), CorruptError);
    CHECK_THROWS_AS(read_permutation(std::span<const std::uint8_t>(bytes.data(), 3)),
                    CorruptError);
  }
  SUBCASE("empty permutation round trips") {
    const auto empty = write_permutation(Permutation{});
    CHECK(read_permutation(empty).size() == 0);
  }
}

TEST_CASE("reordering is lossless") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = seed * 37 % 300;
    const Permutation p = random_permutation(n, seed);
    const std::vector<double> x = random_values(n, seed ^ 0xABCD, -1e9, 1e9);
    const auto restored = apply_permutation(apply_permutation(x, p), invert_permutation(p));
    REQUIRE(restored.size() == n);
    CHECK(std::memcmp(restored.data(), x.data(), n * sizeof(double)) == 0);
  }
}

TEST_CASE("file round trip through disk") {
  TempDir dir;
  const Permutation p = random_permutation(100, 4);
  save_permutation(dir.file("p.umrp"), p);
  CHECK(load_permutation(dir.file("p.umrp")) == p);
  CHECK_THROWS_AS(load_permutation(dir.file("missing.umrp")), ParseError);
}
