#include "sextic/densities.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>

#include <unistd.h>

using namespace sextic;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("sextic-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

template <std::size_t K>
Int total(const std::array<Int, K>& a) {
  return std::accumulate(a.begin(), a.end(), Int(0));
}

}  // namespace

TEST_CASE("Omega_5 counts") {
  CHECK(omega_count_exhaustive(5) == 7200000);
  CHECK(omega_count_closed(5) == 7200000);
  CHECK(omega_count_pairwise_exhaustive(5) == 6400000);
  CHECK(omega_member(5, {1, 2, 3, 4, 5}));
  CHECK_FALSE(omega_member(5, {5, 10, 1, 1, 1}));
  CHECK(omega_member(5, {25, 1, 1, 1, 1}));
  CHECK(omega_member_pairwise(5, {5, 1, 2, 3, 4}));
  CHECK_FALSE(omega_member_pairwise(5, {25, 1, 1, 1, 1}));
}

TEST_CASE("Omega product form") {
  for (long l : primes_up_to(97)) {
    if (l < 5) continue;
    CAPTURE(l);
    CHECK(omega_count_product_form(l) == omega_count_closed(l));
  }
}

TEST_CASE("local case tables") {
  CHECK(a_case_mod64(0) == 0);
  CHECK(b_case_mod243(0) != 0);
  DensityTables t;
  // 4 does not divide a_i a_j: all odd, or one coordinate = 2 mod 4
  CHECK(total(t.n2(1, 1, 1)) == Int(32 * 32 * 32) + Int(3 * 16 * 32 * 32));
  CHECK(total(t.n3(1, 1, 1)) == Int(162) * 162 * 162 + Int(3 * 54) * 162 * 162);
  CHECK(total(t.n2(-1, 1, 1)) == total(t.n2(1, 1, 1)));
  CHECK(total(t.m2(1, 1, 1, 1)) == Int(32 * 32) + Int(2 * 16 * 32));
  CHECK_THROWS_AS(t.n_table(SexticType{1, 1}, 1, 4, 1), Error);
  try {
    t.n_table(SexticType{1, 1}, 1, 5, 5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidPair);
  }
}

TEST_CASE("CRT factorization agrees with a direct count mod 15552") {
  const SexticType t{1, 1};
  const auto a = n2_slice(1, 1, 5, 7);
  const auto b = n3_slice(1, 1, 5, 7);
  const Int crt = a[0] * b[0];
  CHECK(crt == 40310784);
  CHECK(n_slice_direct15552(t, 1, 1, 5, 7) == crt);
}

TEST_CASE("local ratios at l = 5") {
  const LocalRatio a = local_ratio(5, 3, false);
  CHECK(a.ratio == Rat(4, 7));
  CHECK(a.ratio == a.predicted_plus2);
  const LocalRatio b = local_ratio(5, 2, false);
  CHECK(b.ratio == b.predicted_plus1);
  const LocalRatio c = local_ratio(5, 3, true);
  CHECK(c.ratio == Rat(5, 8));
  const LocalRatio d = local_ratio(7, 2, true);
  CHECK(d.ratio == Rat(7, 9));
}

TEST_CASE("Euler products") {
  const EulerProduct basic = euler_product(EulerKind::Basic, {2, 3}, 1000000);
  const long double target = 9.0L / (M_PI * M_PI);
  CHECK(std::fabs(static_cast<double>(basic.value - target)) <= static_cast<double>(basic.tail_bound));
  CHECK(basic.tail_bound < 1e-5);
  const EulerProduct cf6 = euler_product(EulerKind::Carefree, {2, 3}, 100000);
  const EulerProduct cf7 = euler_product(EulerKind::Carefree, {2, 3}, 1000000);
  CHECK(std::fabs(static_cast<double>(cf6.value - cf7.value)) <= static_cast<double>(cf6.tail_bound));
  CHECK(std::fabs(static_cast<double>(cf7.value) - 0.77421821) < 1e-6);
  CHECK(primes_up_to(30) == std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("density tables persist and survive corruption") {
  const fs::path dir = fresh_dir("cache");
  Int value;
  {
    DensityTables t(dir.string());
    value = t.n_table(SexticType{1, 1}, 1, 5, 7);
    t.flush();
  }
  CHECK(fs::exists(dir / "n2.json"));
  CHECK(fs::exists(dir / "n3.json"));
  {
    std::ifstream in(dir / "n2.json");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.find("\"schema\"") != std::string::npos);
    CHECK(text.find("1:5:7") != std::string::npos);
  }
  {
    DensityTables t(dir.string());
    CHECK(t.n_table(SexticType{1, 1}, 1, 5, 7) == value);
  }
  {
    std::ofstream(dir / "n2.json") << "{\"schema\":1,\"entries\":[{\"key\":\"1:5:7\",\"counts\":[\"x\"]}]";
    std::ofstream(dir / "n3.json") << "not json";
    DensityTables t(dir.string());
    CHECK(t.n_table(SexticType{1, 1}, 1, 5, 7) == value);
  }
  fs::remove_all(dir);
}

TEST_CASE("alpha, beta and measures") {
  DensityTables t;
  const SexticType ty{1, 1};
  CHECK(alpha(t, ty, 1, 4).value() == 0);
  CHECK(alpha(t, ty, 1, 1).value() > 0);
  CHECK(beta(t, ty, 1, 1, 4) == 0);
  CHECK(beta(t, ty, 1, 2, 1) > 0);
  Box3 box;
  box.lo = {Rat(1), Rat(1, 8), Rat(1)};
  box.hi = {Rat(8), Rat(8), Rat(6)};
  MeasureSpec lit{MeasureKind::Mu, ty, 1, MeasureMode::Literal, 100000};
  MeasureSpec norm = lit;
  norm.mode = MeasureMode::DensityNormalized;
  const MeasureValue a = integrate_measure(t, lit, box);
  const MeasureValue b = integrate_measure(t, norm, box);
  CHECK(a.value > 0);
  CHECK(a.error_bound >= 0);
  CHECK(std::fabs(static_cast<double>(b.value / a.value) - std::pow(6.0, 6) / std::pow(15552.0, 3)) < 1e-12);
  MeasureSpec nu{MeasureKind::Nu, ty, 1, MeasureMode::Literal, 100000};
  Box3 nbox;
  nbox.lo = {Rat(1), Rat(1), Rat(1)};
  nbox.hi = {Rat(8), Rat(3), Rat(6)};
  const MeasureValue c = integrate_measure(t, nu, nbox);
  nu.mode = MeasureMode::DensityNormalized;
  const MeasureValue d = integrate_measure(t, nu, nbox);
  CHECK(std::fabs(static_cast<double>(d.value / c.value) - std::pow(6.0, 4) / std::pow(15552.0, 2)) < 1e-12);
}

TEST_CASE("squarefree helpers") {
  CHECK(is_squarefree(30));
  CHECK_FALSE(is_squarefree(12));
  CHECK(prime_factors(60) == std::vector<long>{2, 3, 5});
}
