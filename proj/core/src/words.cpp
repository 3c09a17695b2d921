#include "altperm/words.hpp"

#include <sstream>

#include "altperm/errors.hpp"

namespace altperm {

namespace {

// Shared run-collapsing printer; spell(letter) renders a single letter.
template <typename Spell>
std::string format_word(const std::vector<int>& letters, Spell&& spell) {
  std::string out;
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    if (!out.empty()) out += ' ';
    out += spell(letters[i]);
    if (j - i > 1) {
      out += '^';
      out += std::to_string(j - i);
    }
    i = j;
  }
  return out;
}

// Parses "x3", "x0^2" style tokens; returns (letter-text, repeat).
std::pair<std::string, int> split_token(const std::string& token) {
  const std::size_t caret = token.find('^');
  if (caret == std::string::npos) return {token, 1};
  const std::string count_text = token.substr(caret + 1);
  try {
    std::size_t used = 0;
    const int count = std::stoi(count_text, &used);
    if (used != count_text.size() || count < 0) {
      throw ParseError("bad exponent in token '" + token + "'");
    }
    return {token.substr(0, caret), count};
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad exponent in token '" + token + "'");
  }
}

int parse_index(const std::string& token, const std::string& body) {
  try {
    std::size_t used = 0;
    const int idx = std::stoi(body, &used);
    if (used != body.size() || idx < 0) throw ParseError("bad token '" + token + "'");
    return idx;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad token '" + token + "'");
  }
}

}  // namespace

std::string SWord::str() const {
  return format_word(letters, [](int l) { return "s" + std::to_string(l); });
}

SWord SWord::parse(std::string_view text) {
  SWord word;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    auto [body, repeat] = split_token(token);
    if (body.size() < 2 || body[0] != 's') {
      throw ParseError("bad S-word token '" + token + "'");
    }
    const int idx = parse_index(token, body.substr(1));
    word.letters.insert(word.letters.end(), static_cast<std::size_t>(repeat), idx);
  }
  return word;
}

AWord AWord::inverse_word() const {
  AWord out;
  out.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    int l = *it;
    if (l == 1) {
      l = -1;
    } else if (l == -1) {
      l = 1;
    }
    out.letters.push_back(l);
  }
  return out;
}

std::string AWord::str() const {
  return format_word(letters, [](int l) {
    if (l == -1) return std::string("a1'");
    return "a" + std::to_string(l);
  });
}

AWord AWord::parse(std::string_view text) {
  AWord word;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    auto [body, repeat] = split_token(token);
    if (body.size() < 2 || body[0] != 'a') {
      throw ParseError("bad A-word token '" + token + "'");
    }
    bool inverse = false;
    if (body.back() == '\'') {
      inverse = true;
      body.pop_back();
    }
    const int idx = parse_index(token, body.substr(1));
    if (inverse && idx != 1) {
      throw ParseError("only a1 has an inverse letter (token '" + token + "')");
    }
    word.letters.insert(word.letters.end(), static_cast<std::size_t>(repeat),
                        inverse ? -1 : idx);
  }
  return word;
}

ColoredPermutation generator_a(GroupParams params, int letter) {
  validate_params(params.r, params.n, true);
  if (letter < -1 || letter > params.n - 1 ||
      (letter == -1 && params.n < 2)) {
    throw IndexOutOfRange("A-generator letter " + std::to_string(letter) +
                          " outside the alphabet of A_{r," +
                          std::to_string(params.n) + "}");
  }
  std::vector<ColoredValue> window =
      ColoredPermutation::identity(params).window();
  detail::apply_a_inplace(window, letter, params.r);
  return ColoredPermutation::from_window(params, std::move(window));
}

ColoredPermutation eval_s_word(GroupParams params, const SWord& word) {
  validate_params(params.r, params.n, false);
  std::vector<ColoredValue> window =
      ColoredPermutation::identity(params).window();
  for (int letter : word.letters) {
    if (letter < 0 || letter > params.n - 1) {
      throw IndexOutOfRange("S-letter s" + std::to_string(letter) +
                            " outside 0.." + std::to_string(params.n - 1));
    }
    detail::apply_s_inplace(window, letter, params.r);
  }
  return ColoredPermutation::from_window(params, std::move(window));
}

ColoredPermutation eval_a_word(GroupParams params, const AWord& word) {
  validate_params(params.r, params.n, true);
  std::vector<ColoredValue> window =
      ColoredPermutation::identity(params).window();
  for (int letter : word.letters) {
    if (letter < -1 || letter > params.n - 1 ||
        (letter == -1 && params.n < 2)) {
      throw IndexOutOfRange("A-letter " + std::to_string(letter) +
                            " outside the alphabet of A_{r," +
                            std::to_string(params.n) + "}");
    }
    detail::apply_a_inplace(window, letter, params.r);
  }
  return ColoredPermutation::from_window(params, std::move(window));
}

}  // namespace altperm
