#include "altperm/canonical.hpp"

#include <set>
#include <unordered_set>

#include "altperm/errors.hpp"

#include "doctest.h"

using namespace altperm;

namespace {

const GroupParams g62{6, 2};
const GroupParams g63{6, 3};
const GroupParams g65{6, 5};

const char* const kWorkedWindow = "1 2^2 4 5^1 3^3";
const char* const kWorkedSWord =
    "s1 s0^2 s2 s1 s0^3 s4 s3 s2 s1 s0 s3 s2 s3 s4 s1 s2 s3";
const char* const kWorkedAWord =
    "a1' a0 a2 a1' a4 a3 a2 a1 a0^2 a3 a2 a3 a4 a1 a2 a3";

// Maximal a_0-run exponents of an A-word, in reading order.
std::vector<int> a0_run_exponents(const AWord& word) {
  std::vector<int> runs;
  std::size_t i = 0;
  while (i < word.letters.size()) {
    if (word.letters[i] == 0) {
      std::size_t j = i;
      while (j < word.letters.size() && word.letters[j] == 0) ++j;
      runs.push_back(static_cast<int>(j - i));
      i = j;
    } else {
      ++i;
    }
  }
  return runs;
}

}  // namespace

TEST_CASE("membership criterion") {
  CHECK(is_alternating(ColoredPermutation::identity(g63)));
  CHECK_FALSE(is_alternating(ColoredPermutation::parse(g63, "1^1 2 3")));
  CHECK(is_alternating(ColoredPermutation::parse(g65, kWorkedWindow)));
  CHECK_THROWS_AS(
      is_alternating(ColoredPermutation::identity(GroupParams{3, 2})),
      InvalidParams);
}

TEST_CASE("membership parity equals canonical-word parity on G_{6,3}") {
  for_each_element(g63, [](const ColoredPermutation& pi) {
    int colored_weight = 0;
    const std::vector<int> z = pi.z_vector();
    for (int i = 1; i <= 3; ++i) {
      if (z[i - 1] != 0) colored_weight += i - 1;
    }
    const int letters = colored_weight + inv_colored(pi) + csum(pi);
    REQUIRE(is_alternating(pi) == (letters % 2 == 0));
    REQUIRE(static_cast<int>(canonical_s_word(pi).size()) == letters);
  });
}

TEST_CASE("ordered_target") {
  const auto id = ColoredPermutation::identity(g65);
  CHECK(ordered_target(id) == id);
  CHECK(ordered_target(ColoredPermutation::parse(g65, kWorkedWindow)).str() ==
        "5^1 3^3 2^2 1 4");
  for_each_element(g63, [](const ColoredPermutation& pi) {
    REQUIRE(inv_colored(ordered_target(pi)) == 0);
  });
}

TEST_CASE("canonical_s_word reproduces the worked example exactly") {
  CHECK(canonical_s_word(ColoredPermutation::identity(g65)).empty());
  const auto pi = ColoredPermutation::parse(g65, kWorkedWindow);
  CHECK(canonical_s_word(pi).str() == kWorkedSWord);
  CHECK(canonical_s_word(ColoredPermutation::parse(g63, "2 1 3")).str() ==
        "s1");
}

TEST_CASE("canonical_s_word evaluates back to its element on G_{6,3}") {
  for_each_element(g63, [](const ColoredPermutation& pi) {
    REQUIRE(eval_s_word(pi.params(), canonical_s_word(pi)) == pi);
  });
}

TEST_CASE("translate_pairs") {
  CHECK(translate_pairs(g65, SWord{}).empty());
  CHECK(translate_pairs(g65, SWord::parse(kWorkedSWord)).str() ==
        kWorkedAWord);
  CHECK(translate_pairs(g62, SWord::parse("s1 s0")).str() == "a1' a0^2");
  CHECK(translate_pairs(g62, SWord::parse("s0 s1")).str() == "a0^2 a1");
  CHECK_THROWS_AS(translate_pairs(g62, SWord::parse("s1")), OddLength);
  CHECK_THROWS_AS(translate_pairs(GroupParams{4, 2}, SWord{}), InvalidParams);
}

TEST_CASE("length_LA") {
  CHECK(length_LA(ColoredPermutation::identity(g65)) == 0);
  CHECK(length_LA(ColoredPermutation::parse(g65, kWorkedWindow)) == 17);
  CHECK(length_LA(ColoredPermutation::parse(GroupParams{6, 1}, "1^2")) == 1);
  CHECK(length_LA(ColoredPermutation::parse(GroupParams{6, 4}, "1^5 3^3 2^3 4")) == 6);
  CHECK_THROWS_AS(length_LA(ColoredPermutation::parse(g63, "1^1 2 3")),
                  NotAlternating);
}

TEST_CASE("canonical_a_word round trips with the right length on A_{6,3}") {
  const auto pi = ColoredPermutation::parse(g65, kWorkedWindow);
  CHECK(canonical_a_word(pi).str() == kWorkedAWord);
  CHECK(canonical_a_word(ColoredPermutation::identity(g63)).empty());
  CHECK_THROWS_AS(canonical_a_word(ColoredPermutation::parse(g63, "1^1 2 3")),
                  NotAlternating);

  for_each_alternating(g63, [](const ColoredPermutation& pi) {
    const AWord word = canonical_a_word(pi);
    REQUIRE(static_cast<int>(word.size()) == length_LA(pi));
    REQUIRE(eval_a_word(pi.params(), word) == pi);
  });
}

TEST_CASE("every a_0 run carries exponent z ⊘ 2") {
  for (const GroupParams params : {GroupParams{6, 3}, GroupParams{10, 2}}) {
    for_each_alternating(params, [&params](const ColoredPermutation& pi) {
      std::vector<int> expected;
      const std::vector<int> z = pi.z_vector();
      for (int i = 1; i <= params.n; ++i) {
        if (z[i - 1] == 0) continue;
        const int exponent = oslash(z[i - 1], params.r);
        if (exponent != 0) expected.push_back(exponent);
      }
      REQUIRE(a0_run_exponents(canonical_a_word(pi)) == expected);
    });
  }
}

TEST_CASE("structured decomposition of the worked example") {
  const auto pi = ColoredPermutation::parse(g65, kWorkedWindow);
  const CanonicalDecomposition d = structured_decomposition(pi);

  REQUIRE(d.gammas.size() == 6);
  REQUIRE(d.orderings.size() == 4);

  CHECK(d.gammas[0].branch == GammaBranch::Trivial);
  CHECK(d.gammas[1].word.str() == "a1' a0^2");
  CHECK(d.gammas[1].branch == GammaBranch::WithoutPrefix);
  CHECK(d.gammas[2].word.str() == "a0^2 a2 a1'");
  CHECK(d.gammas[2].branch == GammaBranch::WithPrefix);
  CHECK(d.gammas[3].branch == GammaBranch::Trivial);
  CHECK(d.gammas[4].word.str() == "a4 a3 a2 a1");
  // gamma_{n+1} = a_0^{(r+2)/4}, the coloring part's leftover s_0 joined with
  // the ordering part's s_0^{r/2} remainder
  CHECK(d.gammas[5].word.str() == "a0^2");
  CHECK(d.gammas[5].color_exponent == 2);

  CHECK(d.orderings[0].word.str() == "a3 a2 a1'");
  CHECK(d.orderings[0].from_pos == 4);
  CHECK(d.orderings[1].word.str() == "a4 a3 a2");
  CHECK(d.orderings[2].word.str() == "a3");
  CHECK(d.orderings[3].word.empty());

  CHECK(d.product() == pi);
  CHECK(d.word().str() == kWorkedAWord);
  CHECK_FALSE(decomposition_structure_error(d).has_value());
}

TEST_CASE("structured decomposition is a bijection on A_{6,2}") {
  const auto id = ColoredPermutation::identity(g62);
  const CanonicalDecomposition d_id = structured_decomposition(id);
  for (const GammaFactor& g : d_id.gammas) {
    CHECK(g.branch == GammaBranch::Trivial);
    CHECK(g.word.empty());
  }
  for (const OrderingFactor& o : d_id.orderings) CHECK(o.word.empty());

  std::unordered_set<std::string> keys;
  std::uint64_t count = 0;
  for_each_alternating(g62, [&](const ColoredPermutation& pi) {
    ++count;
    const CanonicalDecomposition d = structured_decomposition(pi);
    const auto error = decomposition_structure_error(d);
    REQUIRE_MESSAGE(!error.has_value(), pi.str(), ": ",
                    error.value_or(""));
    REQUIRE(d.product() == pi);
    REQUIRE(d.word() == canonical_a_word(pi));
    keys.insert(d.str());
  });
  CHECK(count == 36);
  CHECK(keys.size() == 36);

  CHECK_THROWS_AS(
      structured_decomposition(ColoredPermutation::parse(g62, "1^1 2")),
      NotAlternating);
}

TEST_CASE("enumerate_alternating") {
  const auto a61 = enumerate_alternating(GroupParams{6, 1});
  REQUIRE(a61.size() == 3);
  std::set<int> colors;
  for (const auto& pi : a61) colors.insert(pi.color_at(1));
  CHECK(colors == std::set<int>{0, 2, 4});

  CHECK(enumerate_alternating(g62).size() == 36);
  CHECK(enumerate_alternating(g63).size() == 648);
  CHECK_THROWS_AS(enumerate_alternating(GroupParams{4, 2}), InvalidParams);

  // ascending rank order and membership
  std::uint64_t previous = 0;
  bool first = true;
  for (const auto& pi : enumerate_alternating(g62)) {
    CHECK(is_alternating(pi));
    if (!first) CHECK(pi.rank() > previous);
    previous = pi.rank();
    first = false;
  }
}

TEST_CASE("n = 1 degrades to the coloring part alone") {
  const GroupParams g61{6, 1};
  const auto pi = ColoredPermutation::parse(g61, "1^4");
  CHECK(length_LA(pi) == 2);
  CHECK(canonical_a_word(pi).str() == "a0^2");
  const CanonicalDecomposition d = structured_decomposition(pi);
  REQUIRE(d.gammas.size() == 2);
  CHECK(d.orderings.empty());
  CHECK(d.product() == pi);
}
