#include "altperm/canonical.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "altperm/errors.hpp"

namespace altperm {

namespace {

// Merges every maximal a_0 run, reducing its exponent mod r/2 (a_0^{r/2} = 1)
// and dropping runs that reduce to zero.
void normalize_a0_runs(std::vector<int>& letters, int half) {
  std::vector<int> out;
  out.reserve(letters.size());
  std::size_t i = 0;
  while (i < letters.size()) {
    if (letters[i] == 0) {
      std::size_t j = i;
      while (j < letters.size() && letters[j] == 0) ++j;
      const std::size_t run = (j - i) % static_cast<std::size_t>(half);
      out.insert(out.end(), run, 0);
      i = j;
    } else {
      out.push_back(letters[i++]);
    }
  }
  letters = std::move(out);
}

int trailing_a0_exponent(const AWord& word) {
  int e = 0;
  for (auto it = word.letters.rbegin(); it != word.letters.rend() && *it == 0;
       ++it) {
    ++e;
  }
  return e;
}

}  // namespace

bool is_alternating(const ColoredPermutation& pi) {
  if (pi.r() % 2 != 0) {
    throw InvalidParams("A_{r,n} requires even r (got r=" +
                        std::to_string(pi.r()) + ")");
  }
  return (csum(pi) + inv_plain(pi)) % 2 == 0;
}

ColoredPermutation ordered_target(const ColoredPermutation& pi) {
  std::vector<ColoredValue> values = pi.window();
  std::sort(values.begin(), values.end(), length_order_less);
  return ColoredPermutation::from_window(pi.params(), std::move(values));
}

SWord canonical_s_word(const ColoredPermutation& pi) {
  const int n = pi.n();
  SWord out;

  // Coloring part: color each digit of Col(pi) ascending via
  // s_{i-1} ... s_1 s_0^{z_i}.
  const std::vector<int> z = pi.z_vector();
  for (int i = 1; i <= n; ++i) {
    if (z[i - 1] == 0) continue;
    for (int t = i - 1; t >= 1; --t) out.letters.push_back(t);
    out.letters.insert(out.letters.end(), static_cast<std::size_t>(z[i - 1]),
                       0);
  }

  // Ordering part: sort pi toward the ordered target, pushing the digit
  // sigma(k) from its current position p to position k, then reverse the
  // recorded letters (each s_t, t >= 1, is an involution).
  std::vector<ColoredValue> work = pi.window();
  const ColoredPermutation sigma = ordered_target(pi);
  std::vector<int> recorded;
  for (int k = 1; k <= n - 1; ++k) {
    const int digit = sigma.digit_at(k);
    int p = k;
    while (work[p - 1].digit != digit) ++p;
    for (int t = p - 1; t >= k; --t) {
      recorded.push_back(t);
      std::swap(work[t - 1], work[t]);
    }
  }
  out.letters.insert(out.letters.end(), recorded.rbegin(), recorded.rend());
  return out;
}

AWord translate_pairs(GroupParams params, const SWord& word) {
  validate_params(params.r, params.n, true);
  if (word.size() % 2 != 0) {
    throw OddLength("pair translation needs an even-length word (got " +
                    std::to_string(word.size()) + " letters)");
  }
  const int quarter = (params.r + 2) / 4;  // s_0 s_0^{r/2} = a_0^{(r+2)/4}
  std::vector<int> letters;
  letters.reserve(word.size() * 2);
  for (std::size_t k = 0; k < word.size(); k += 2) {
    const int x = word.letters[k];
    const int y = word.letters[k + 1];
    if (x < 0 || x > params.n - 1 || y < 0 || y > params.n - 1) {
      throw IndexOutOfRange("S-letter outside 0.." +
                            std::to_string(params.n - 1));
    }
    if (x == 0) {
      letters.insert(letters.end(), static_cast<std::size_t>(quarter), 0);
    } else if (x == 1) {
      letters.push_back(-1);  // s_1 s_0^{r/2} = a_1^{-1}
    } else {
      letters.push_back(x);
    }
    if (y == 0) {
      letters.insert(letters.end(), static_cast<std::size_t>(quarter), 0);
    } else {
      letters.push_back(y);
    }
  }
  normalize_a0_runs(letters, params.r / 2);
  return AWord{std::move(letters)};
}

int length_LA(const ColoredPermutation& pi) {
  if (!is_alternating(pi)) {
    throw NotAlternating("L_A is defined on A_{r,n} only (element " +
                         pi.str() + ")");
  }
  int total = inv_colored(pi);
  const std::vector<int> z = pi.z_vector();
  for (int i = 1; i <= pi.n(); ++i) {
    if (z[i - 1] != 0) total += i - 1;
    total += oslash(z[i - 1], pi.r());
  }
  return total;
}

AWord canonical_a_word(const ColoredPermutation& pi) {
  if (!is_alternating(pi)) {
    throw NotAlternating("canonical A-word is defined on A_{r,n} only (element " +
                         pi.str() + ")");
  }
  return translate_pairs(pi.params(), canonical_s_word(pi));
}

ColoredPermutation CanonicalDecomposition::product() const {
  ColoredPermutation acc = ColoredPermutation::identity(params);
  for (const GammaFactor& g : gammas) {
    if (!g.word.empty()) acc = acc * eval_a_word(params, g.word);
  }
  for (auto it = orderings.rbegin(); it != orderings.rend(); ++it) {
    if (!it->word.empty()) {
      acc = acc * eval_a_word(params, it->word).inverse();
    }
  }
  return acc;
}

AWord CanonicalDecomposition::word() const {
  std::vector<int> letters;
  for (const GammaFactor& g : gammas) {
    letters.insert(letters.end(), g.word.letters.begin(), g.word.letters.end());
  }
  for (auto it = orderings.rbegin(); it != orderings.rend(); ++it) {
    const AWord inv = it->word.inverse_word();
    letters.insert(letters.end(), inv.letters.begin(), inv.letters.end());
  }
  normalize_a0_runs(letters, params.r / 2);
  return AWord{std::move(letters)};
}

std::string CanonicalDecomposition::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    const GammaFactor& g = gammas[i];
    out << 'g' << (i + 1) << ':';
    switch (g.branch) {
      case GammaBranch::Trivial: out << 'T'; break;
      case GammaBranch::WithPrefix: out << 'P'; break;
      case GammaBranch::WithoutPrefix: out << 'N'; break;
    }
    out << ':' << g.color_exponent << ":[" << g.word.str() << "];";
  }
  for (std::size_t k = 0; k < orderings.size(); ++k) {
    const OrderingFactor& o = orderings[k];
    out << 'o' << (k + 1) << ':' << o.from_pos << '>' << o.to_pos << ":["
        << o.word.str() << "];";
  }
  return out.str();
}

CanonicalDecomposition structured_decomposition(const ColoredPermutation& pi) {
  if (!is_alternating(pi)) {
    throw NotAlternating("structured decomposition is defined on A_{r,n} only"
                         " (element " + pi.str() + ")");
  }
  const GroupParams params = pi.params();
  validate_params(params.r, params.n, true);
  const int n = params.n;
  const int r = params.r;

  CanonicalDecomposition d;
  d.params = params;
  d.gammas.resize(static_cast<std::size_t>(n) + 1);

  // Coloring factors. A colored digit whose factor has odd S-length keeps
  // back one s_0; the debt prepends to the next colored digit's factor
  // (skipping uncolored digits) or lands in gamma_{n+1}.
  const std::vector<int> z = pi.z_vector();
  int debt = 0;
  for (int i = 1; i <= n; ++i) {
    if (z[i - 1] == 0) continue;  // gamma_i stays trivial; debt rides over
    const int total = debt + (i - 1) + z[i - 1];
    const int z_keep = (total % 2 == 0) ? z[i - 1] : z[i - 1] - 1;

    SWord factor;
    factor.letters.reserve(static_cast<std::size_t>(debt + i - 1 + z_keep));
    factor.letters.insert(factor.letters.end(),
                          static_cast<std::size_t>(debt), 0);
    for (int t = i - 1; t >= 1; --t) factor.letters.push_back(t);
    factor.letters.insert(factor.letters.end(),
                          static_cast<std::size_t>(z_keep), 0);

    GammaFactor g;
    g.word = translate_pairs(params, factor);
    g.branch = debt ? GammaBranch::WithPrefix : GammaBranch::WithoutPrefix;
    g.color_exponent = trailing_a0_exponent(g.word);
    d.gammas[static_cast<std::size_t>(i) - 1] = std::move(g);
    debt = (total % 2 == 0) ? 0 : 1;
  }

  // gamma_{n+1} in C_{n+1} = {1, a_0^{(r+2)/4}}: absorbs the leftover s_0 of
  // the coloring part together with the s_0^{r/2} remainder of the ordering
  // part.
  if (debt) {
    GammaFactor g;
    const int e = ((r + 2) / 4) % (r / 2);  // reduces to 0 only for r = 2
    g.word.letters.assign(static_cast<std::size_t>(e), 0);
    g.branch = GammaBranch::WithPrefix;
    g.color_exponent = e;
    d.gammas[static_cast<std::size_t>(n)] = std::move(g);
  }

  // Ordering factors from the sorting simulation. o_k carries an s_0^{r/2}
  // suffix exactly when the pushing word has odd length, which makes the pair
  // translation close; the suffix's a_0 run cancels, leaving a_{p-1}...a_k.
  std::vector<ColoredValue> work = pi.window();
  const ColoredPermutation sigma = ordered_target(pi);
  if (n >= 2) d.orderings.resize(static_cast<std::size_t>(n) - 1);
  for (int k = 1; k <= n - 1; ++k) {
    const int digit = sigma.digit_at(k);
    int p = k;
    while (work[p - 1].digit != digit) ++p;

    SWord push;
    for (int t = p - 1; t >= k; --t) {
      push.letters.push_back(t);
      std::swap(work[t - 1], work[t]);
    }
    if ((p - k) % 2 == 1) {
      push.letters.insert(push.letters.end(),
                          static_cast<std::size_t>(r / 2), 0);
    }

    OrderingFactor o;
    o.from_pos = p;
    o.to_pos = k;
    o.word = translate_pairs(params, push);
    d.orderings[static_cast<std::size_t>(k) - 1] = std::move(o);
  }
  return d;
}

std::optional<std::string> decomposition_structure_error(
    const CanonicalDecomposition& d) {
  const int n = d.params.n;
  const int r = d.params.r;
  const int half = r / 2;
  const int quarter = (r + 2) / 4;

  if (static_cast<int>(d.gammas.size()) != n + 1) {
    return "expected " + std::to_string(n + 1) + " coloring factors";
  }
  if (static_cast<int>(d.orderings.size()) != std::max(n - 1, 0)) {
    return "expected " + std::to_string(std::max(n - 1, 0)) +
           " ordering factors";
  }

  for (int i = 1; i <= n; ++i) {
    const GammaFactor& g = d.gammas[static_cast<std::size_t>(i) - 1];
    if (g.color_exponent < 0 || g.color_exponent >= half) {
      return "gamma_" + std::to_string(i) + " color exponent out of range";
    }
    if (g.branch == GammaBranch::Trivial) {
      if (!g.word.empty()) {
        return "trivial gamma_" + std::to_string(i) + " has a nonempty word";
      }
      continue;
    }
    // Expected shape: [a_0^{(r+2)/4} if debt] a_{i-1} ... a_2 a_1^{+-1}
    // a_0^e, degenerating to a_0^e alone for i = 1.
    std::vector<int> expected;
    const bool debt = g.branch == GammaBranch::WithPrefix;
    if (debt) {
      if (i == 1) return "gamma_1 cannot carry an s_0 debt prefix";
      expected.insert(expected.end(),
                      static_cast<std::size_t>(quarter % half), 0);
    }
    if (i >= 2) {
      for (int t = i - 1; t >= 2; --t) expected.push_back(t);
      const bool negative = ((i - 1 - (debt ? 1 : 0)) % 2) != 0;
      expected.push_back(negative ? -1 : 1);
    }
    expected.insert(expected.end(),
                    static_cast<std::size_t>(g.color_exponent), 0);
    if (g.word.letters != expected) {
      return "gamma_" + std::to_string(i) + " = [" + g.word.str() +
             "] does not match its C_" + std::to_string(i) + " pattern";
    }
  }

  {
    const GammaFactor& g = d.gammas[static_cast<std::size_t>(n)];
    if (g.branch == GammaBranch::Trivial) {
      if (!g.word.empty()) return "trivial gamma_{n+1} has a nonempty word";
    } else {
      std::vector<int> expected(static_cast<std::size_t>(quarter % half), 0);
      if (g.word.letters != expected) {
        return "gamma_{n+1} = [" + g.word.str() + "] is not a_0^{(r+2)/4}";
      }
    }
  }

  for (int k = 1; k <= n - 1; ++k) {
    const OrderingFactor& o = d.orderings[static_cast<std::size_t>(k) - 1];
    if (o.to_pos != k) {
      return "o_" + std::to_string(k) + " records target position " +
             std::to_string(o.to_pos);
    }
    if (o.from_pos < k || o.from_pos > n) {
      return "o_" + std::to_string(k) + " records source position " +
             std::to_string(o.from_pos);
    }
    std::vector<int> expected;
    for (int t = o.from_pos - 1; t >= k; --t) expected.push_back(t);
    if (k == 1 && !expected.empty() && (o.from_pos - 1) % 2 == 1) {
      expected.back() = -1;  // O_1 words of odd push length end in a_1^{-1}
    }
    if (o.word.letters != expected) {
      return "o_" + std::to_string(k) + " = [" + o.word.str() +
             "] does not match its O_" + std::to_string(k) + " pattern";
    }
  }
  return std::nullopt;
}

std::vector<ColoredPermutation> enumerate_alternating(GroupParams params) {
  validate_params(params.r, params.n, true);
  std::vector<ColoredPermutation> out;
  out.reserve(alternating_order(params));
  for_each_alternating(params, [&out](const ColoredPermutation& pi) {
    out.push_back(pi);
  });
  return out;
}

void for_each_element(
    GroupParams params,
    const std::function<void(const ColoredPermutation&)>& fn) {
  validate_params(params.r, params.n, false);
  const std::uint64_t order = group_order(params);
  for (std::uint64_t k = 0; k < order; ++k) {
    fn(ColoredPermutation::unrank(params, k));
  }
}

void for_each_alternating(
    GroupParams params,
    const std::function<void(const ColoredPermutation&)>& fn) {
  validate_params(params.r, params.n, true);
  for_each_element(params, [&fn](const ColoredPermutation& pi) {
    if (is_alternating(pi)) fn(pi);
  });
}

}  // namespace altperm
