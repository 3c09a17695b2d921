#include "altperm/genfun.hpp"

#include "altperm/errors.hpp"
#include "altperm/oracle.hpp"

#include "doctest.h"

using namespace altperm;

namespace {

// Small deterministic polynomial generator for the ring-law checks.
struct Lcg {
  std::uint64_t state = 0x2545F4914F6CDD1Dull;
  std::uint64_t next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  }
  QPolynomial poly() {
    const int degree = static_cast<int>(next() % 6);
    std::vector<Int128> coeffs;
    for (int k = 0; k <= degree; ++k) {
      coeffs.push_back(static_cast<long long>(next() % 21) - 10);
    }
    return QPolynomial(std::move(coeffs));
  }
};

}  // namespace

TEST_CASE("q-integers and q-factorials") {
  CHECK(QPolynomial::q_int(1) == QPolynomial::constant(1));
  CHECK(QPolynomial::q_int(3) == QPolynomial(std::vector<Int128>{1, 1, 1}));
  CHECK(QPolynomial::q_int(0).is_zero());
  CHECK(QPolynomial::q_factorial(3).evaluate_at(1) == 6);
  CHECK(QPolynomial::q_factorial(0) == QPolynomial::constant(1));
}

TEST_CASE("polynomial text form") {
  CHECK(QPolynomial().str() == "0");
  CHECK(QPolynomial::q_int(3).str() == "1 + q + q^2");
  CHECK(QPolynomial(std::vector<Int128>{1, 2}).str() == "1 + 2q");
  CHECK(QPolynomial(std::vector<Int128>{0, -1, 3}).str() == "-q + 3q^2");
  CHECK(QPolynomial(std::vector<Int128>{2, 0, 0, 1}).str() == "2 + q^3");
}

TEST_CASE("canonical form trims trailing zeros") {
  CHECK(QPolynomial(std::vector<Int128>{1, 2, 0, 0}) ==
        QPolynomial(std::vector<Int128>{1, 2}));
  CHECK(QPolynomial(std::vector<Int128>{0, 0}).is_zero());
  CHECK(QPolynomial(std::vector<Int128>{0, 0}).degree() == -1);
}

TEST_CASE("ring laws on generated polynomials") {
  Lcg gen;
  for (int round = 0; round < 200; ++round) {
    const QPolynomial a = gen.poly();
    const QPolynomial b = gen.poly();
    const QPolynomial c = gen.poly();
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a - a == QPolynomial());
    REQUIRE(a * QPolynomial::constant(1) == a);
  }
}

TEST_CASE("halving") {
  CHECK(QPolynomial(std::vector<Int128>{2, 4}).halved() ==
        QPolynomial(std::vector<Int128>{1, 2}));
  CHECK_THROWS_AS(QPolynomial(std::vector<Int128>{1}).halved(),
                  NonIntegralHalving);
}

TEST_CASE("int128 printing") {
  CHECK(int128_to_string(0) == "0");
  CHECK(int128_to_string(-42) == "-42");
  const Int128 big = Int128{1} << 100;
  CHECK(int128_to_string(big) == "1267650600228229401496703205376");
}

TEST_CASE("length generating function") {
  CHECK(genfun_length_formula(GroupParams{6, 1}) ==
        QPolynomial(std::vector<Int128>{1, 1, 1}));
  CHECK(genfun_length_formula(GroupParams{6, 1}).str() == "1 + q + q^2");
  CHECK_THROWS_AS(genfun_length_formula(GroupParams{4, 2}), InvalidParams);

  for (const GroupParams params :
       {GroupParams{6, 1}, GroupParams{6, 2}, GroupParams{6, 3},
        GroupParams{10, 1}, GroupParams{10, 2}}) {
    const QPolynomial formula = genfun_length_formula(params);
    CHECK(formula.evaluate_at(1) ==
          static_cast<Int128>(alternating_order(params)));
    CHECK(formula == genfun_bruteforce(params, Statistic::Length, kDefaultCap));
  }
}

TEST_CASE("finv generating function") {
  CHECK(genfun_finv_formula(GroupParams{6, 1}) ==
        QPolynomial(std::vector<Int128>{1, 1, 1}));
  for (const GroupParams params : {GroupParams{6, 2}, GroupParams{10, 1}}) {
    const QPolynomial formula = genfun_finv_formula(params);
    CHECK(formula.evaluate_at(1) ==
          static_cast<Int128>(alternating_order(params)));
    CHECK(formula == genfun_bruteforce(params, Statistic::Finv, kDefaultCap));
  }
}

TEST_CASE("rtlmin generating function") {
  CHECK(genfun_rtlmin_formula(GroupParams{6, 1}) ==
        QPolynomial(std::vector<Int128>{1, 2}));
  CHECK(genfun_rtlmin_formula(GroupParams{6, 1}).str() == "1 + 2q");
  for (const GroupParams params : {GroupParams{6, 2}, GroupParams{10, 1}}) {
    const QPolynomial formula = genfun_rtlmin_formula(params);
    CHECK(formula.evaluate_at(1) ==
          static_cast<Int128>(alternating_order(params)));
    CHECK(formula == genfun_bruteforce(params, Statistic::Rtlmin, kDefaultCap));
  }
}

TEST_CASE("fibral distribution double counting") {
  for (const GroupParams params : {GroupParams{6, 2}, GroupParams{6, 3}}) {
    CHECK(genfun_fibral_formula(params, kDefaultCap) ==
          genfun_bruteforce(params, Statistic::Fibral, kDefaultCap));
  }
}

TEST_CASE("brute force counts the group at q = 1") {
  for (const Statistic stat : {Statistic::Length, Statistic::Finv,
                               Statistic::Rtlmin, Statistic::Fibral}) {
    CHECK(genfun_bruteforce(GroupParams{6, 2}, stat, kDefaultCap)
              .evaluate_at(1) == 36);
  }
  CHECK_THROWS_AS(genfun_bruteforce(GroupParams{6, 3}, Statistic::Length, 100),
                  CapExceeded);
}
