#include "altperm/element.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "altperm/errors.hpp"

namespace altperm {

bool length_order_less(const ColoredValue& a, const ColoredValue& b) {
  const bool a_colored = a.color != 0;
  const bool b_colored = b.color != 0;
  if (a_colored != b_colored) return a_colored;
  if (!a_colored) return a.digit < b.digit;
  if (a.digit != b.digit) return a.digit > b.digit;
  return a.color > b.color;
}

ColoredPermutation::ColoredPermutation(GroupParams params)
    : params_(params), window_(static_cast<std::size_t>(params.n)) {
  validate_params(params.r, params.n, false);
  for (int j = 0; j < params.n; ++j) window_[j] = ColoredValue{j + 1, 0};
}

ColoredPermutation ColoredPermutation::from_window(
    GroupParams params, std::vector<ColoredValue> window) {
  validate_params(params.r, params.n, false);
  if (static_cast<int>(window.size()) != params.n) {
    throw InvalidParams("window length " + std::to_string(window.size()) +
                        " does not match n=" + std::to_string(params.n));
  }
  std::vector<bool> seen(static_cast<std::size_t>(params.n), false);
  for (const ColoredValue& v : window) {
    if (v.digit < 1 || v.digit > params.n) {
      throw InvalidParams("digit " + std::to_string(v.digit) +
                          " outside 1.." + std::to_string(params.n));
    }
    if (seen[v.digit - 1]) {
      throw InvalidParams("digit " + std::to_string(v.digit) + " repeated");
    }
    seen[v.digit - 1] = true;
    if (v.color < 0 || v.color >= params.r) {
      throw InvalidParams("color " + std::to_string(v.color) +
                          " outside 0.." + std::to_string(params.r - 1));
    }
  }
  return ColoredPermutation(params, std::move(window), unchecked_t{});
}

int ColoredPermutation::z(int digit) const {
  return window_[position_of(digit) - 1].color;
}

int ColoredPermutation::position_of(int digit) const {
  for (int j = 0; j < params_.n; ++j) {
    if (window_[j].digit == digit) return j + 1;
  }
  throw IndexOutOfRange("digit " + std::to_string(digit) + " outside 1.." +
                        std::to_string(params_.n));
}

std::vector<int> ColoredPermutation::z_vector() const {
  std::vector<int> z(static_cast<std::size_t>(params_.n), 0);
  for (const ColoredValue& v : window_) z[v.digit - 1] = v.color;
  return z;
}

std::vector<int> ColoredPermutation::c_vector() const {
  std::vector<int> c(static_cast<std::size_t>(params_.n));
  for (int j = 0; j < params_.n; ++j) c[j] = window_[j].color;
  return c;
}

std::vector<int> ColoredPermutation::digits() const {
  std::vector<int> d(static_cast<std::size_t>(params_.n));
  for (int j = 0; j < params_.n; ++j) d[j] = window_[j].digit;
  return d;
}

bool ColoredPermutation::is_identity() const {
  for (int j = 0; j < params_.n; ++j) {
    if (window_[j].digit != j + 1 || window_[j].color != 0) return false;
  }
  return true;
}

ColoredPermutation ColoredPermutation::inverse() const {
  // tau^{ -1 } with z_j(pi^{-1}) = (r - z_{tau(j)}(pi)) mod r: the window
  // entry at position tau(j) of the inverse is digit j with that color.
  std::vector<ColoredValue> window(static_cast<std::size_t>(params_.n));
  for (int j = 0; j < params_.n; ++j) {
    const ColoredValue& v = window_[j];
    window[v.digit - 1] =
        ColoredValue{j + 1, v.color == 0 ? 0 : params_.r - v.color};
  }
  return ColoredPermutation(params_, std::move(window), unchecked_t{});
}

ColoredPermutation operator*(const ColoredPermutation& left,
                             const ColoredPermutation& right) {
  if (!(left.params_ == right.params_)) {
    throw ParamMismatch("cannot multiply elements of G_{" +
                        std::to_string(left.r()) + "," +
                        std::to_string(left.n()) + "} and G_{" +
                        std::to_string(right.r()) + "," +
                        std::to_string(right.n()) + "}");
  }
  const int r = left.r();
  std::vector<ColoredValue> window(static_cast<std::size_t>(left.n()));
  for (int j = 0; j < left.n(); ++j) {
    const ColoredValue& rv = right.window_[j];
    const ColoredValue& lv = left.window_[rv.digit - 1];
    window[j] = ColoredValue{lv.digit, (lv.color + rv.color) % r};
  }
  return ColoredPermutation(left.params_, std::move(window),
                            ColoredPermutation::unchecked_t{});
}

ColoredPermutation multiply(const ColoredPermutation& left,
                            const ColoredPermutation& right) {
  return left * right;
}

std::uint64_t ColoredPermutation::rank() const {
  return detail::rank_of_window(params_, window_);
}

ColoredPermutation ColoredPermutation::unrank(GroupParams params,
                                              std::uint64_t rank) {
  validate_params(params.r, params.n, false);
  if (rank >= group_order(params)) {
    throw IndexOutOfRange("rank " + std::to_string(rank) +
                          " outside the group of order " +
                          std::to_string(group_order(params)));
  }
  std::vector<ColoredValue> window;
  detail::unrank_window(params, rank, window);
  return ColoredPermutation(params, std::move(window), unchecked_t{});
}

std::string ColoredPermutation::str() const {
  std::string out;
  for (int j = 0; j < params_.n; ++j) {
    if (j > 0) out += ' ';
    out += std::to_string(window_[j].digit);
    if (window_[j].color > 0) {
      out += '^';
      out += std::to_string(window_[j].color);
    }
  }
  return out;
}

ColoredPermutation ColoredPermutation::parse(GroupParams params,
                                             std::string_view text) {
  std::vector<ColoredValue> window;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const std::size_t caret = token.find('^');
    ColoredValue v;
    try {
      std::size_t used = 0;
      v.digit = std::stoi(token.substr(0, caret), &used);
      if (used != (caret == std::string::npos ? token.size() : caret)) {
        throw ParseError("bad token '" + token + "'");
      }
      if (caret != std::string::npos) {
        const std::string color_text = token.substr(caret + 1);
        v.color = std::stoi(color_text, &used);
        if (used != color_text.size()) {
          throw ParseError("bad token '" + token + "'");
        }
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad token '" + token + "' in window text");
    }
    window.push_back(v);
  }
  if (window.empty()) throw ParseError("empty window text");
  try {
    return from_window(params, std::move(window));
  } catch (const InvalidParams& e) {
    throw ParseError(std::string("invalid window: ") + e.what());
  }
}

ColoredPermutation generator_s(GroupParams params, int i) {
  validate_params(params.r, params.n, false);
  if (i < 0 || i > params.n - 1) {
    throw IndexOutOfRange("generator index " + std::to_string(i) +
                          " outside 0.." + std::to_string(params.n - 1));
  }
  ColoredPermutation e = ColoredPermutation::identity(params);
  std::vector<ColoredValue> window = e.window();
  detail::apply_s_inplace(window, i, params.r);
  return ColoredPermutation::from_window(params, std::move(window));
}

ColoredPermutation conjugate_by_half_twist(const ColoredPermutation& pi) {
  const GroupParams params = pi.params();
  if (params.r % 2 != 0) {
    throw InvalidParams("conjugation by s_0^{r/2} requires even r");
  }
  std::vector<ColoredValue> twist(static_cast<std::size_t>(params.n));
  for (int j = 0; j < params.n; ++j) twist[j] = ColoredValue{j + 1, 0};
  twist[0].color = params.r / 2;
  const ColoredPermutation t =
      ColoredPermutation::from_window(params, std::move(twist));
  return t * pi * t;
}

int inv_colored(const ColoredPermutation& pi) {
  const auto& w = pi.window();
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (length_order_less(w[j], w[i])) ++count;
    }
  }
  return count;
}

int inv_plain(std::span<const int> window_digits) {
  int count = 0;
  for (std::size_t i = 0; i < window_digits.size(); ++i) {
    for (std::size_t j = i + 1; j < window_digits.size(); ++j) {
      if (window_digits[i] > window_digits[j]) ++count;
    }
  }
  return count;
}

int inv_plain(const ColoredPermutation& pi) {
  int count = 0;
  const auto& w = pi.window();
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i].digit > w[j].digit) ++count;
    }
  }
  return count;
}

int csum(const ColoredPermutation& pi) {
  int sum = 0;
  for (const ColoredValue& v : pi.window()) sum += v.color;
  return sum;
}

std::vector<int> col_set(const ColoredPermutation& pi) {
  std::vector<int> out;
  for (const ColoredValue& v : pi.window()) {
    if (v.color != 0) out.push_back(v.digit);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

void apply_s_inplace(std::vector<ColoredValue>& window, int letter, int r) {
  if (letter == 0) {
    window[0].color = (window[0].color + 1) % r;
  } else {
    std::swap(window[letter - 1], window[letter]);
  }
}

void apply_a_inplace(std::vector<ColoredValue>& window, int letter, int r) {
  const int half = r / 2;
  if (letter == 0) {
    // a_0 = s_0^2
    window[0].color = (window[0].color + 2) % r;
  } else if (letter == -1) {
    // a_1^{-1} = s_1 s_0^{r/2}
    std::swap(window[0], window[1]);
    window[0].color = (window[0].color + half) % r;
  } else {
    // a_i = s_0^{r/2} s_i
    window[0].color = (window[0].color + half) % r;
    std::swap(window[letter - 1], window[letter]);
  }
}

std::uint64_t rank_of_window(const GroupParams& params,
                             std::span<const ColoredValue> window) {
  const int n = params.n;
  std::uint64_t perm_rank = 0;
  for (int j = 0; j < n; ++j) {
    int smaller_after = 0;
    for (int k = j + 1; k < n; ++k) {
      if (window[k].digit < window[j].digit) ++smaller_after;
    }
    perm_rank = perm_rank * static_cast<std::uint64_t>(n - j) +
                static_cast<std::uint64_t>(smaller_after);
  }
  std::uint64_t color_rank = 0;
  // z-vector base r, z_1 most significant
  std::vector<int> z(static_cast<std::size_t>(n), 0);
  for (const ColoredValue& v : window) z[v.digit - 1] = v.color;
  std::uint64_t r_pow = 1;
  for (int i = 0; i < n; ++i) {
    color_rank = color_rank * static_cast<std::uint64_t>(params.r) +
                 static_cast<std::uint64_t>(z[i]);
    r_pow *= static_cast<std::uint64_t>(params.r);
  }
  return perm_rank * r_pow + color_rank;
}

void unrank_window(const GroupParams& params, std::uint64_t rank,
                   std::vector<ColoredValue>& out) {
  const int n = params.n;
  std::uint64_t r_pow = 1;
  for (int i = 0; i < n; ++i) r_pow *= static_cast<std::uint64_t>(params.r);
  std::uint64_t perm_rank = rank / r_pow;
  std::uint64_t color_rank = rank % r_pow;

  std::vector<int> z(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    z[i] = static_cast<int>(color_rank % static_cast<std::uint64_t>(params.r));
    color_rank /= static_cast<std::uint64_t>(params.r);
  }

  std::vector<std::uint64_t> fact(static_cast<std::size_t>(n), 1);
  for (int i = 1; i < n; ++i) fact[i] = fact[i - 1] * static_cast<std::uint64_t>(i);
  std::vector<int> unused(static_cast<std::size_t>(n));
  std::iota(unused.begin(), unused.end(), 1);

  out.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const std::uint64_t f = fact[n - 1 - j];
    const auto idx = static_cast<std::size_t>(perm_rank / f);
    perm_rank %= f;
    const int digit = unused[idx];
    unused.erase(unused.begin() + static_cast<std::ptrdiff_t>(idx));
    out[j] = ColoredValue{digit, z[digit - 1]};
  }
}

}  // namespace detail

}  // namespace altperm
