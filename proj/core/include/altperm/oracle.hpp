#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "altperm/genfun.hpp"

namespace altperm {

inline constexpr std::uint64_t kDefaultCap = 1'000'000;

enum class BfsTarget {
  /// BFS over A_{r,n} with right multiplication by exactly
  /// {a_0, a_1, a_1^{-1}, a_2, ..., a_{n-1}}. The set is not inverse closed
  /// (a_0^{-1} is not a generator) and the search respects that.
  AlternatingWithA,
  /// BFS over G_{r,n} with {s_0, ..., s_{n-1}}.
  FullWithS,
};

/// Distance table from the identity, indexed by element rank; -1 marks
/// unreached elements (the non-alternating coset under the A target).
/// Throws CapExceeded when r^n n! exceeds the cap.
std::vector<std::int32_t> bfs_lengths(GroupParams params, BfsTarget target,
                                      std::uint64_t cap = kDefaultCap);

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  std::string counterexample;  // witness element or pair, window text
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  GroupParams params;
  std::vector<CheckResult> checks;
  std::chrono::milliseconds elapsed{0};

  bool passed() const;
  void add(std::string id, bool ok, std::string counterexample = {},
           std::string detail = {});
  void skip(std::string id, std::string detail);
};

/// Every relation of the A_{r,n} presentation, the remark consequences, the
/// seven S-to-A translation relations and the five G_{r,n} presentation
/// relations, each evaluated as a concrete permutation identity.
VerificationReport check_presentation(GroupParams params);

/// |A_{r,n}| = r^n n!/2 three ways: the parity criterion count, the orbit
/// closure of the A-generators, and evenness of the S-BFS distance.
VerificationReport check_group_order(GroupParams params,
                                     std::uint64_t cap = kDefaultCap);

/// For every element of A_{r,n}: the canonical A-word round-trips, its letter
/// count equals L_A and the A-BFS distance, and the structured decomposition
/// is valid, reconstructs the element and is injective overall.
VerificationReport check_decomposition(GroupParams params,
                                       std::uint64_t cap = kDefaultCap);

/// The covering suite: homomorphism, surjectivity, kernel shape, p ∘ s = id,
/// the length decomposition through the quotient, fibral-length facts, the
/// F(pi) product formula per coset, and fiber-fixedness of finv_A and
/// RtlMin_A.
VerificationReport check_covering(GroupParams params,
                                  std::uint64_t cap = kDefaultCap);

/// The three closed-form generating functions against brute force, plus the
/// q = 1 normalizations.
VerificationReport check_genfun(GroupParams params,
                                std::uint64_t cap = kDefaultCap);

/// Runs the selected suites ("presentation", "order", "decomposition",
/// "covering", "genfun", or "all") and aggregates their reports.
/// Throws UnknownSuite for anything else.
VerificationReport run_suite(GroupParams params,
                             const std::vector<std::string>& selection,
                             std::uint64_t cap = kDefaultCap);

}  // namespace altperm
