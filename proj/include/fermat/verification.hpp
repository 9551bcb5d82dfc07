#pragma once

// Sweeps of the structural identities over ranges of (n, p).

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fermat/report.hpp"

namespace fermat {

struct VerificationEntry {
  std::size_t n;
  Residue p;
  IdentityRecord identity;
};

struct VerificationSummary {
  std::vector<VerificationEntry> entries;
  // (n, p) pairs left out because they exceed the enumeration budget.
  std::vector<std::pair<std::size_t, Residue>> skipped;

  [[nodiscard]] bool passed() const;
};

struct VerifyOptions {
  bool force = false;
};

// Runs, for every n in [n_lo, n_hi] and p in primes: the dimension identity,
// the hyperplane partition identity, multiplicity-formula agreement, and the
// character block-sum identity. Every prime is validated before any work is
// done; invalid input throws.
[[nodiscard]] VerificationSummary run_verification(std::size_t n_lo,
                                                   std::size_t n_hi,
                                                   std::span<const Residue> primes,
                                                   VerifyOptions options = {});

[[nodiscard]] std::string render(const VerificationSummary& summary,
                                 Format format);

}  // namespace fermat
