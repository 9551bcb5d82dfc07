#pragma once

// Pullback kernels and the Prym-Tyurin classification of the factors
// pi_H^* J(X_T/H).
//
// For a fixed-point-free abelian action the kernel of pi^* is isomorphic to
// the acting group, so a factor with |T| = t has a pullback kernel of order
// |H| = p^(n-t-1). If the pullback polarization were a multiple of a
// principal one, that order would have to be p^g or p^(2g) with g the
// factor dimension. For p >= 5 it is strictly smaller than p^g, which rules
// the factor out. For p = 3 it equals p^g and nothing can be concluded. For
// p = 2 the factors are known Prym-Tyurin varieties of exponent 2^(n-3).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "fermat/fermat_group.hpp"
#include "fermat/genus.hpp"

namespace fermat {

struct KernelDescriptor {
  Integer order;     // p^rank
  std::size_t rank;  // elementary abelian of exponent p

  friend bool operator==(const KernelDescriptor&,
                         const KernelDescriptor&) = default;
};

enum class PrymStatus {
  not_prym_tyurin,
  inconclusive,
  prym_tyurin_known,
};

[[nodiscard]] std::string_view to_string(PrymStatus status) noexcept;
[[nodiscard]] std::optional<PrymStatus> parse_prym_status(std::string_view text);

struct PrymVerdict {
  PrymStatus status = PrymStatus::inconclusive;
  std::optional<Integer> exponent;  // only for p = 2
  std::string rationale;
  // Number of intermediate quotients X_T' (T' ⊆ T) for which the order
  // inequality was checked; zero unless p >= 5.
  std::uint64_t intermediate_checks = 0;

  friend bool operator==(const PrymVerdict&, const PrymVerdict&) = default;
};

// Kernel of pi_H^* : J(X_T/H) -> J(X_T). Rejects subgroups whose lift to E
// contains a generator, since the order formula needs a free action.
[[nodiscard]] KernelDescriptor pullback_kernel(const QuotientContext& quotient,
                                               const AdmissibleSubgroup& subgroup);

// True iff kernel_order is p^g or p^(2g): the necessary condition for the
// pullback of a principal polarization along an isogeny of exponent p to be
// a multiple of a principal polarization.
[[nodiscard]] bool principal_multiple_possible(const Integer& genus, Residue p,
                                               const Integer& kernel_order);

// Verdict for a factor with |T| = t. Requires the factor to exist:
// t <= n-2, and n-t odd when p = 2.
[[nodiscard]] PrymVerdict prym_verdict(std::size_t n, Residue p, std::size_t t);

}  // namespace fermat
