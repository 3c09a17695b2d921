#include "altperm/oracle.hpp"

#include <algorithm>
#include <unordered_set>

#include "altperm/errors.hpp"

namespace altperm {

namespace {

using Clock = std::chrono::steady_clock;

void check_cap(GroupParams params, std::uint64_t cap) {
  const std::uint64_t order = group_order(params);
  if (order > cap) {
    throw CapExceeded("group order " + std::to_string(order) +
                      " exceeds the cap " + std::to_string(cap));
  }
}

ColoredPermutation power(const ColoredPermutation& base, int exponent) {
  ColoredPermutation acc = ColoredPermutation::identity(base.params());
  for (int k = 0; k < exponent; ++k) acc = acc * base;
  return acc;
}

std::string pair_text(const ColoredPermutation& a, const ColoredPermutation& b) {
  return "(" + a.str() + ") , (" + b.str() + ")";
}

}  // namespace

std::vector<std::int32_t> bfs_lengths(GroupParams params, BfsTarget target,
                                      std::uint64_t cap) {
  const bool with_a = target == BfsTarget::AlternatingWithA;
  validate_params(params.r, params.n, with_a);
  check_cap(params, cap);

  // The declared generating set, exactly. Identity letters (a_0 when r = 2,
  // s_0 when r = 1) are dropped: a length function must not use them.
  std::vector<int> letters;
  if (with_a) {
    if (!params.degenerate()) letters.push_back(0);
    if (params.n >= 2) {
      letters.push_back(1);
      letters.push_back(-1);
      for (int i = 2; i <= params.n - 1; ++i) letters.push_back(i);
    }
  } else {
    if (params.r >= 2) letters.push_back(0);
    for (int i = 1; i <= params.n - 1; ++i) letters.push_back(i);
  }

  const std::uint64_t order = group_order(params);
  std::vector<std::int32_t> dist(order, -1);
  std::vector<std::vector<ColoredValue>> frontier;
  {
    const ColoredPermutation id = ColoredPermutation::identity(params);
    dist[detail::rank_of_window(params, id.window())] = 0;
    frontier.push_back(id.window());
  }

  std::int32_t level = 0;
  std::vector<std::vector<ColoredValue>> next;
  while (!frontier.empty()) {
    ++level;
    next.clear();
    for (const std::vector<ColoredValue>& window : frontier) {
      for (int letter : letters) {
        std::vector<ColoredValue> neighbor = window;
        if (with_a) {
          detail::apply_a_inplace(neighbor, letter, params.r);
        } else {
          detail::apply_s_inplace(neighbor, letter, params.r);
        }
        const std::uint64_t rk = detail::rank_of_window(params, neighbor);
        if (dist[rk] < 0) {
          dist[rk] = level;
          next.push_back(std::move(neighbor));
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckStatus::Fail;
  });
}

void VerificationReport::add(std::string id, bool ok,
                             std::string counterexample, std::string detail) {
  checks.push_back(CheckResult{std::move(id),
                               ok ? CheckStatus::Pass : CheckStatus::Fail,
                               ok ? std::string{} : std::move(counterexample),
                               std::move(detail)});
}

void VerificationReport::skip(std::string id, std::string detail) {
  checks.push_back(
      CheckResult{std::move(id), CheckStatus::Skip, {}, std::move(detail)});
}

VerificationReport check_presentation(GroupParams params) {
  validate_params(params.r, params.n, true);
  const auto start = Clock::now();
  VerificationReport report{"presentation", params, {}, {}};

  const int n = params.n;
  const int r = params.r;
  const int quarter = (r + 2) / 4;
  const ColoredPermutation id = ColoredPermutation::identity(params);

  std::vector<ColoredPermutation> s;
  for (int i = 0; i < n; ++i) s.push_back(generator_s(params, i));
  const auto a = [&params](int letter) { return generator_a(params, letter); };

  // Evaluates a family of instances; the family passes when every instance
  // holds, and reports the first violating instance otherwise.
  struct Family {
    VerificationReport& report;
    void run(const std::string& id, bool vacuous,
             const std::function<bool(std::string&)>& all_hold) {
      if (vacuous) {
        report.skip(id, "outside this relation's index range");
        return;
      }
      std::string witness;
      const bool ok = all_hold(witness);
      report.add(id, ok, witness);
    }
  } family{report};

  // A_{r,n} presentation, relations (1)-(9).
  family.run("presentation.A1: a0^{r/2} = 1", false, [&](std::string&) {
    return power(a(0), r / 2) == id;
  });
  family.run("presentation.A2: a1^4 = 1", n < 2, [&](std::string&) {
    return power(a(1), 4) == id;
  });
  family.run("presentation.A3: ai^2 = 1 (i > 1)", n < 3, [&](std::string& w) {
    for (int i = 2; i <= n - 1; ++i) {
      if (!(a(i) * a(i) == id)) {
        w = "a" + std::to_string(i);
        return false;
      }
    }
    return true;
  });
  family.run("presentation.A4: ai aj = aj ai (|i-j| > 1, i,j != 1)", n < 3,
             [&](std::string& w) {
               for (int i = 0; i <= n - 1; ++i) {
                 for (int j = i + 2; j <= n - 1; ++j) {
                   if (i == 1 || j == 1) continue;
                   if (!(a(i) * a(j) == a(j) * a(i))) {
                     w = "a" + std::to_string(i) + ", a" + std::to_string(j);
                     return false;
                   }
                 }
               }
               return true;
             });
  family.run("presentation.A5: (ai a(i+1))^3 = 1 (i >= 1)", n < 3,
             [&](std::string& w) {
               for (int i = 1; i <= n - 2; ++i) {
                 if (!(power(a(i) * a(i + 1), 3) == id)) {
                   w = "a" + std::to_string(i);
                   return false;
                 }
               }
               return true;
             });
  family.run("presentation.A6: (a0 a1)^{2r} = 1", n < 2, [&](std::string&) {
    return power(a(0) * a(1), 2 * r) == id;
  });
  family.run("presentation.A7: (a0 a1')^{2r} = 1", n < 2, [&](std::string&) {
    return power(a(0) * a(-1), 2 * r) == id;
  });
  family.run("presentation.A8: a0 a1^2 = a1^2 a0", n < 2, [&](std::string&) {
    const ColoredPermutation a1_sq = a(1) * a(1);
    return a(0) * a1_sq == a1_sq * a(0);
  });
  family.run("presentation.A9: a1 ai = ai a1' (i > 2)", n < 4,
             [&](std::string& w) {
               for (int i = 3; i <= n - 1; ++i) {
                 if (!(a(1) * a(i) == a(i) * a(-1))) {
                   w = "a" + std::to_string(i);
                   return false;
                 }
               }
               return true;
             });

  // Remark consequences.
  family.run("presentation.R1: (a1' a2)^3 = 1", n < 3, [&](std::string&) {
    return power(a(-1) * a(2), 3) == id;
  });
  family.run("presentation.R2: a1' a0 a1' = a1 a0 a1", n < 2,
             [&](std::string&) {
               return a(-1) * a(0) * a(-1) == a(1) * a(0) * a(1);
             });
  family.run("presentation.R3: a1' a0 a1 = a1 a0 a1'", n < 2,
             [&](std::string&) {
               return a(-1) * a(0) * a(1) == a(1) * a(0) * a(-1);
             });

  // Translation relations between the S- and A-generators.
  family.run("translation.T1: si sj = ai aj (i,j >= 2)", n < 3,
             [&](std::string& w) {
               for (int i = 2; i <= n - 1; ++i) {
                 for (int j = 2; j <= n - 1; ++j) {
                   if (!(s[i] * s[j] == a(i) * a(j))) {
                     w = "s" + std::to_string(i) + " s" + std::to_string(j);
                     return false;
                   }
                 }
               }
               return true;
             });
  family.run("translation.T2: s1 si = a1' ai (i >= 2)", n < 3,
             [&](std::string& w) {
               for (int i = 2; i <= n - 1; ++i) {
                 if (!(s[1] * s[i] == a(-1) * a(i))) {
                   w = "s1 s" + std::to_string(i);
                   return false;
                 }
               }
               return true;
             });
  family.run("translation.T3: si s1 = ai a1 (i >= 2)", n < 3,
             [&](std::string& w) {
               for (int i = 2; i <= n - 1; ++i) {
                 if (!(s[i] * s[1] == a(i) * a(1))) {
                   w = "s" + std::to_string(i) + " s1";
                   return false;
                 }
               }
               return true;
             });
  family.run("translation.T4: s0 s1 = a0^{(r+2)/4} a1", n < 2,
             [&](std::string&) {
               return s[0] * s[1] == power(a(0), quarter) * a(1);
             });
  family.run("translation.T5: s1 s0 = a1' a0^{(r+2)/4}", n < 2,
             [&](std::string&) {
               return s[1] * s[0] == a(-1) * power(a(0), quarter);
             });
  family.run("translation.T6: a0^{r/2} = 1", false, [&](std::string&) {
    return power(a(0), r / 2) == id;
  });
  family.run("translation.T7: s0 si = a0^{(r+2)/4} ai (i >= 2)", n < 3,
             [&](std::string& w) {
               for (int i = 2; i <= n - 1; ++i) {
                 if (!(s[0] * s[i] == power(a(0), quarter) * a(i))) {
                   w = "s0 s" + std::to_string(i);
                   return false;
                 }
               }
               return true;
             });

  // The Coxeter-like presentation of G_{r,n}.
  family.run("grn.G1: s0^r = 1", false, [&](std::string&) {
    return power(s[0], r) == id;
  });
  family.run("grn.G2: si^2 = 1 (i >= 1)", n < 2, [&](std::string& w) {
    for (int i = 1; i <= n - 1; ++i) {
      if (!(s[i] * s[i] == id)) {
        w = "s" + std::to_string(i);
        return false;
      }
    }
    return true;
  });
  family.run("grn.G3: si s(i+1) si = s(i+1) si s(i+1)", n < 3,
             [&](std::string& w) {
               for (int i = 1; i <= n - 2; ++i) {
                 if (!(s[i] * s[i + 1] * s[i] == s[i + 1] * s[i] * s[i + 1])) {
                   w = "s" + std::to_string(i);
                   return false;
                 }
               }
               return true;
             });
  family.run("grn.G4: si sj = sj si (j - i > 1, i >= 1)", n < 4,
             [&](std::string& w) {
               for (int i = 1; i <= n - 1; ++i) {
                 for (int j = i + 2; j <= n - 1; ++j) {
                   if (!(s[i] * s[j] == s[j] * s[i])) {
                     w = "s" + std::to_string(i) + ", s" + std::to_string(j);
                     return false;
                   }
                 }
               }
               return true;
             });
  family.run("grn.G5: (s0 s1)^{2r} = 1", n < 2, [&](std::string&) {
    return power(s[0] * s[1], 2 * r) == id;
  });

  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return report;
}

VerificationReport check_group_order(GroupParams params, std::uint64_t cap) {
  validate_params(params.r, params.n, true);
  check_cap(params, cap);
  const auto start = Clock::now();
  VerificationReport report{"order", params, {}, {}};
  if (params.degenerate()) {
    report.skip("order.degenerate",
                "degenerate r=2: a_0 = s_0^2 is the identity and is dropped"
                " from BFS generating sets");
  }

  const std::uint64_t order = group_order(params);
  const std::uint64_t expected = alternating_order(params);

  std::vector<char> alternating_mask(order, 0);
  std::uint64_t count = 0;
  for_each_element(params, [&](const ColoredPermutation& pi) {
    if (is_alternating(pi)) {
      alternating_mask[pi.rank()] = 1;
      ++count;
    }
  });
  report.add("order.count: |A_{r,n}| = r^n n!/2", count == expected, {},
             "counted " + std::to_string(count) + ", expected " +
                 std::to_string(expected));

  {
    const std::vector<std::int32_t> dist =
        bfs_lengths(params, BfsTarget::AlternatingWithA, cap);
    std::uint64_t reached = 0;
    std::uint64_t mismatch_rank = order;
    for (std::uint64_t k = 0; k < order; ++k) {
      const bool reachable = dist[k] >= 0;
      if (reachable) ++reached;
      if (reachable != (alternating_mask[k] != 0)) {
        if (mismatch_rank == order) mismatch_rank = k;
      }
    }
    const bool ok = mismatch_rank == order && reached == expected;
    report.add("order.generation: orbit of the A-generators = A_{r,n}", ok,
               ok ? std::string{}
                  : ColoredPermutation::unrank(params, mismatch_rank).str(),
               "reached " + std::to_string(reached) + " elements");
  }

  {
    const std::vector<std::int32_t> dist =
        bfs_lengths(params, BfsTarget::FullWithS, cap);
    std::uint64_t bad_rank = order;
    for (std::uint64_t k = 0; k < order && bad_rank == order; ++k) {
      const bool even_distance = dist[k] % 2 == 0;
      if (even_distance != (alternating_mask[k] != 0)) bad_rank = k;
    }
    report.add("order.parity_vs_bfs: membership = even S-distance",
               bad_rank == order,
               bad_rank == order
                   ? std::string{}
                   : ColoredPermutation::unrank(params, bad_rank).str());
  }

  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return report;
}

VerificationReport check_decomposition(GroupParams params, std::uint64_t cap) {
  validate_params(params.r, params.n, true);
  check_cap(params, cap);
  const auto start = Clock::now();
  VerificationReport report{"decomposition", params, {}, {}};
  if (params.degenerate()) {
    report.skip("decomposition.degenerate",
                "degenerate r=2: a_0 = s_0^2 is the identity and is dropped"
                " from BFS generating sets");
  }

  const std::vector<std::int32_t> dist =
      bfs_lengths(params, BfsTarget::AlternatingWithA, cap);

  std::string roundtrip_bad, length_bad, bfs_bad, structure_bad, product_bad,
      word_bad;
  std::string structure_reason;
  std::unordered_set<std::string> keys;
  std::uint64_t total = 0;

  for_each_alternating(params, [&](const ColoredPermutation& pi) {
    ++total;
    const AWord word = canonical_a_word(pi);
    if (roundtrip_bad.empty() && !(eval_a_word(params, word) == pi)) {
      roundtrip_bad = pi.str();
    }
    const int closed_form = length_LA(pi);
    if (length_bad.empty() &&
        static_cast<int>(word.size()) != closed_form) {
      length_bad = pi.str();
    }
    if (bfs_bad.empty() && dist[pi.rank()] != closed_form) {
      bfs_bad = pi.str();
    }
    const CanonicalDecomposition d = structured_decomposition(pi);
    if (structure_bad.empty()) {
      if (auto error = decomposition_structure_error(d)) {
        structure_bad = pi.str();
        structure_reason = *error;
      }
    }
    if (product_bad.empty() && !(d.product() == pi)) product_bad = pi.str();
    if (word_bad.empty() && !(d.word() == word)) word_bad = pi.str();
    keys.insert(d.str());
  });

  const std::uint64_t expected = alternating_order(params);
  report.add("decomposition.roundtrip: eval(canonical word) = element",
             roundtrip_bad.empty(), roundtrip_bad);
  report.add("decomposition.length: letter count = L_A", length_bad.empty(),
             length_bad);
  report.add("decomposition.bfs: L_A = A-BFS distance", bfs_bad.empty(),
             bfs_bad);
  report.add("decomposition.structure: factors lie in C_i / O_k",
             structure_bad.empty(), structure_bad, structure_reason);
  report.add("decomposition.product: factors multiply back",
             product_bad.empty(), product_bad);
  report.add("decomposition.word: reduced factor word = canonical word",
             word_bad.empty(), word_bad);
  report.add("decomposition.injective: " + std::to_string(keys.size()) +
                 " distinct decompositions",
             keys.size() == expected && total == expected, {},
             "expected " + std::to_string(expected));

  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return report;
}

VerificationReport check_covering(GroupParams params, std::uint64_t cap) {
  validate_params(params.r, params.n, true);
  check_cap(params, cap);
  const auto start = Clock::now();
  VerificationReport report{"covering", params, {}, {}};

  const GroupParams base_params{params.r / 2, params.n};
  const std::vector<ColoredPermutation> alternating =
      enumerate_alternating(params);

  // Homomorphism p(x y) = p(x) p(y): exhaustive while the number of pairs
  // stays reasonable, deterministically strided otherwise.
  {
    const std::size_t count = alternating.size();
    std::string bad;
    std::string mode = "exhaustive";
    if (count * count <= 2'000'000) {
      for (std::size_t i = 0; i < count && bad.empty(); ++i) {
        for (std::size_t j = 0; j < count && bad.empty(); ++j) {
          if (!(project(alternating[i] * alternating[j]) ==
                project(alternating[i]) * project(alternating[j]))) {
            bad = pair_text(alternating[i], alternating[j]);
          }
        }
      }
    } else {
      mode = "strided sample";
      for (std::size_t i = 0; i < count && bad.empty(); ++i) {
        for (std::size_t t = 1; t <= 16 && bad.empty(); ++t) {
          const std::size_t j = (i * 2654435761u + t * 40503u) % count;
          if (!(project(alternating[i] * alternating[j]) ==
                project(alternating[i]) * project(alternating[j]))) {
            bad = pair_text(alternating[i], alternating[j]);
          }
        }
      }
    }
    report.add("covering.homomorphism: p(xy) = p(x)p(y)", bad.empty(), bad,
               mode);
  }

  // Surjectivity onto G_{r/2,n}.
  {
    std::unordered_set<std::uint64_t> image;
    for (const ColoredPermutation& pi : alternating) {
      image.insert(project(pi).rank());
    }
    const std::uint64_t base_order = group_order(base_params);
    report.add("covering.surjectivity: image = G_{r/2,n}",
               image.size() == base_order, {},
               std::to_string(image.size()) + " of " +
                   std::to_string(base_order) + " base elements hit");
  }

  // Kernel: combinatorial characterization and size 2^{n-1}.
  const std::vector<ColoredPermutation> kernel = kernel_elements(params);
  {
    std::vector<std::uint64_t> from_projection;
    for (const ColoredPermutation& pi : alternating) {
      if (project(pi).is_identity()) from_projection.push_back(pi.rank());
    }
    std::vector<std::uint64_t> expected;
    for (const ColoredPermutation& k : kernel) expected.push_back(k.rank());
    const bool ok =
        from_projection == expected &&
        expected.size() == (std::uint64_t{1} << (params.n - 1));
    report.add("covering.kernel: ker p = even-support {0, r/2} colorings", ok,
               {}, std::to_string(from_projection.size()) + " elements");
  }

  // Kernel = subgroup generated by the conjugates of a_1^2 (small n only).
  if (params.n >= 2 && params.n <= 3) {
    const ColoredPermutation a1 = generator_a(params, 1);
    const ColoredPermutation a1_sq = a1 * a1;
    std::vector<ColoredPermutation> conjugates;
    for (const ColoredPermutation& g : alternating) {
      conjugates.push_back(g * a1_sq * g.inverse());
    }
    std::unordered_set<std::uint64_t> closure;
    std::vector<ColoredPermutation> frontier{
        ColoredPermutation::identity(params)};
    closure.insert(frontier.front().rank());
    while (!frontier.empty()) {
      std::vector<ColoredPermutation> next;
      for (const ColoredPermutation& g : frontier) {
        for (const ColoredPermutation& c : conjugates) {
          ColoredPermutation h = g * c;
          if (closure.insert(h.rank()).second) next.push_back(std::move(h));
        }
      }
      frontier.swap(next);
    }
    std::unordered_set<std::uint64_t> kernel_ranks;
    for (const ColoredPermutation& k : kernel) kernel_ranks.insert(k.rank());
    report.add("covering.kernel_closure: ker p = <<a1^2>>",
               closure == kernel_ranks, {},
               std::to_string(closure.size()) + " elements generated");
  } else {
    report.skip("covering.kernel_closure: ker p = <<a1^2>>",
                "normal-closure sweep runs for n <= 3");
  }

  // Per-element length facts through the quotient.
  {
    std::string section_bad, transfer_bad, decomp_bad, difference_bad,
        even_bad, formula_bad;
    for (const ColoredPermutation& pi : alternating) {
      const ColoredPermutation projected = project(pi);
      const ColoredPermutation base_point = section(projected);
      if (section_bad.empty() && !(project(base_point) == projected)) {
        section_bad = pi.str();
      }
      const int lg = length_g(projected);
      if (transfer_bad.empty() && length_LA(base_point) != lg) {
        transfer_bad = pi.str();
      }
      const int lf = fibral_length(pi);
      if (decomp_bad.empty() && length_LA(pi) != lf + lg) {
        decomp_bad = pi.str();
      }
      if (difference_bad.empty()) {
        const auto colored_weight = [](const ColoredPermutation& x) {
          int weight = 0;
          const std::vector<int> z = x.z_vector();
          for (int i = 1; i <= x.n(); ++i) {
            if (z[i - 1] != 0) weight += i - 1;
          }
          return weight;
        };
        const int lhs = lf;
        const int rhs = colored_weight(pi) - colored_weight(base_point) +
                        inv_colored(pi) - inv_colored(base_point);
        if (lhs != rhs) difference_bad = pi.str();
      }
      if (even_bad.empty() && (lf < 0 || lf % 2 != 0)) even_bad = pi.str();
      if (formula_bad.empty() &&
          lf != length_LA(pi) - length_LA(base_point)) {
        formula_bad = pi.str();
      }
    }
    report.add("covering.section_id: p(s(p(x))) = p(x)", section_bad.empty(),
               section_bad);
    report.add("covering.length_transfer: L_A(s(p(x))) = l_G(p(x))",
               transfer_bad.empty(), transfer_bad);
    report.add("covering.length_decomposition: L_A = l_F + l_G o p",
               decomp_bad.empty(), decomp_bad);
    report.add("covering.fibral_difference: l_F = dc + dinv",
               difference_bad.empty(), difference_bad);
    report.add("covering.fibral_even_nonneg: l_F >= 0 and even",
               even_bad.empty(), even_bad);
    report.add("covering.fibral_formula: combinatorial l_F = length difference",
               formula_bad.empty(), formula_bad);
  }

  // Per-coset facts: the F(pi) product formula and fiber-fixed statistics.
  {
    std::string genfun_bad, finv_bad, rtlmin_bad;
    QPolynomial fibral_total;
    std::uint64_t cosets = 0;
    for_each_element(base_params, [&](const ColoredPermutation& sigma) {
      ++cosets;
      const ColoredPermutation base_point = section(sigma);
      const FiberReport fr = fiber_report(base_point);
      if (genfun_bad.empty() && !fr.formula_matches) {
        genfun_bad = base_point.str();
      }
      fibral_total = fibral_total + fr.bruteforce_poly;
      const long long expected_finv = finv_g(sigma);
      const int expected_rtlmin = rtlmin_g(sigma);
      for (const FiberMember& member : fr.members) {
        if (finv_bad.empty() && finv_a(member.element) != expected_finv) {
          finv_bad = member.element.str();
        }
        if (rtlmin_bad.empty() &&
            rtlmin_a(member.element) != expected_rtlmin) {
          rtlmin_bad = member.element.str();
        }
      }
    });
    report.add("covering.fiber_genfun: F product formula = fiber sum",
               genfun_bad.empty(), genfun_bad,
               std::to_string(cosets) + " cosets");
    report.add("covering.fiber_fixed_finv: finv_A constant = finv o p",
               finv_bad.empty(), finv_bad);
    report.add("covering.fiber_fixed_rtlmin: RtlMin_A constant = RtlMin o p",
               rtlmin_bad.empty(), rtlmin_bad);
    const QPolynomial brute =
        genfun_bruteforce(params, Statistic::Fibral, cap);
    report.add("covering.fibral_distribution: coset sum = brute force",
               fibral_total == brute);
  }

  // Fibers partition A_{r,n}.
  {
    std::unordered_set<std::uint64_t> seen;
    std::string overlap_bad;
    std::uint64_t member_total = 0;
    for_each_element(base_params, [&](const ColoredPermutation& sigma) {
      for (const ColoredPermutation& member : fiber(section(sigma))) {
        ++member_total;
        if (!seen.insert(member.rank()).second && overlap_bad.empty()) {
          overlap_bad = member.str();
        }
      }
    });
    const bool ok = overlap_bad.empty() &&
                    member_total == alternating.size() &&
                    seen.size() == alternating.size();
    report.add("covering.partition: fibers partition A_{r,n}", ok,
               overlap_bad,
               std::to_string(member_total) + " members across cosets");
  }

  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return report;
}

VerificationReport check_genfun(GroupParams params, std::uint64_t cap) {
  validate_params(params.r, params.n, true);
  check_cap(params, cap);
  const auto start = Clock::now();
  VerificationReport report{"genfun", params, {}, {}};

  const Int128 expected_q1 = alternating_order(params);
  const auto compare = [&](const std::string& id, const QPolynomial& formula,
                           Statistic stat) {
    const QPolynomial brute = genfun_bruteforce(params, stat, cap);
    std::string detail;
    bool ok = formula == brute;
    if (!ok) {
      const int degree = std::max(formula.degree(), brute.degree());
      for (int k = 0; k <= degree; ++k) {
        if (formula.coefficient(k) != brute.coefficient(k)) {
          detail = "first differing coefficient at q^" + std::to_string(k) +
                   ": formula " + int128_to_string(formula.coefficient(k)) +
                   ", brute force " + int128_to_string(brute.coefficient(k));
          break;
        }
      }
    }
    ok = ok && formula.evaluate_at(1) == expected_q1;
    report.add(id, ok, {}, detail);
  };

  compare("genfun.length: closed form = brute force",
          genfun_length_formula(params), Statistic::Length);
  compare("genfun.finv: closed form = brute force",
          genfun_finv_formula(params), Statistic::Finv);
  compare("genfun.rtlmin: closed form = brute force",
          genfun_rtlmin_formula(params), Statistic::Rtlmin);

  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return report;
}

VerificationReport run_suite(GroupParams params,
                             const std::vector<std::string>& selection,
                             std::uint64_t cap) {
  static const std::vector<std::string> kAll = {
      "presentation", "order", "decomposition", "covering", "genfun"};

  std::vector<std::string> suites;
  for (const std::string& name : selection) {
    if (name == "all") {
      suites = kAll;
      break;
    }
    if (std::find(kAll.begin(), kAll.end(), name) == kAll.end()) {
      throw UnknownSuite("unknown suite '" + name + "'");
    }
    if (std::find(suites.begin(), suites.end(), name) == suites.end()) {
      suites.push_back(name);
    }
  }

  VerificationReport aggregate{"", params, {}, {}};
  for (const std::string& name : suites) {
    VerificationReport part =
        name == "presentation"    ? check_presentation(params)
        : name == "order"         ? check_group_order(params, cap)
        : name == "decomposition" ? check_decomposition(params, cap)
        : name == "covering"      ? check_covering(params, cap)
                                  : check_genfun(params, cap);
    if (!aggregate.suite.empty()) aggregate.suite += "+";
    aggregate.suite += part.suite;
    aggregate.elapsed += part.elapsed;
    aggregate.checks.insert(aggregate.checks.end(),
                            std::make_move_iterator(part.checks.begin()),
                            std::make_move_iterator(part.checks.end()));
  }
  return aggregate;
}

}  // namespace altperm
