#include "sextic/classify.hpp"

#include <doctest.h>

using namespace sextic;

TEST_CASE("Type names and parsing") {
  CHECK(parse_type("A5,B1") == SexticType{5, 1});
  CHECK(parse_type("(3,2)") == SexticType{3, 2});
  CHECK(parse_type("1,4") == SexticType{1, 4});
  CHECK_THROWS_AS(parse_type("A6,B1"), Error);
  CHECK_THROWS_AS(parse_type("x"), Error);
  CHECK(SexticType{2, 3}.name() == "A2,B3");
  for (int k = 0; k < 20; ++k) CHECK(type_from_index(k).index() == k);
}

TEST_CASE("classification of single radicands") {
  CHECK(classify(Int(112)) == SexticType{5, 1});
  CHECK(classify(Int(2)) == SexticType{1, 1});
  CHECK(classify(Int(5)) == SexticType{2, 1});
  CHECK(classify(Int(10)) == SexticType{1, 2});
  CHECK(a_row(5, Int(112)));
  CHECK_FALSE(a_row(1, Int(112)));
  CHECK(classify_residue(0).i == 0);
}

TEST_CASE("residue lookup agrees with the rows") {
  for (long m = -3000; m <= 3000; ++m) {
    if (m == 0 || !is_sixth_power_free(m) || is_square_or_cube(m)) continue;
    const SexticType t = classify(Int(m));
    const long r = ((m % 46656) + 46656) % 46656;
    CHECK(classify_residue(r) == t);
    CHECK(classify_residue15552(r % 15552) == t);
  }
}

TEST_CASE("Types partition the radicands") {
  const PartitionReport r = type_partition_check(-100000, 100000);
  CHECK(r.violations == 0);
  CHECK(r.checked > 150000);
  long total = 0;
  for (long c : r.per_type) {
    CHECK(c > 0);
    total += c;
  }
  CHECK(total == r.checked);
  CHECK(residue_constancy_violations() == 0);
}

TEST_CASE("radicand filters") {
  CHECK(is_sixth_power_free(63));
  CHECK_FALSE(is_sixth_power_free(128));
  CHECK(is_square_or_cube(-8));
  CHECK(is_square_or_cube(49));
  CHECK_FALSE(is_square_or_cube(-4));
}
