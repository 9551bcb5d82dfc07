#pragma once

// Characters of E = (Z/pZ)^n and their grouping by kernel.
//
// A character is held by its exponent vector a: chi(x) = zeta_p^(a·x). Roots
// of unity never appear numerically. The characters sharing a kernel H are
// the p-1 nonzero multiples of one canonical functional, and the sum of
// their weight spaces is the H-invariant part of the tangent space of the
// Jacobian, of dimension genus(X/H).

#include <cstdint>
#include <vector>

#include "fermat/fermat_group.hpp"
#include "fermat/genus.hpp"

namespace fermat {

// Refuse to enumerate more than this many characters unless forced.
inline constexpr std::uint64_t kCharacterBudget = 10'000'000;

struct CharacterVector {
  FpVector exponents;         // a_1..a_n, the values on sigma_1..sigma_n
  Residue exponent_on_sigma0;  // -(a_1+...+a_n)

  [[nodiscard]] bool is_trivial() const noexcept { return exponents.is_zero(); }
  // Exponent e with chi(x) = zeta_p^e.
  [[nodiscard]] Residue exponent_at(const FpVector& element) const {
    return dot(exponents, element);
  }

  friend bool operator==(const CharacterVector&,
                         const CharacterVector&) = default;
};

[[nodiscard]] CharacterVector make_character(FpVector exponents);

// All p^n characters, trivial first, exponent vectors in lexicographic order.
[[nodiscard]] std::vector<CharacterVector> enumerate_characters(
    const FermatGroup& group, bool force = false);

struct KernelClass {
  Functional kernel;
  std::vector<CharacterVector> members;
  GenusValue block_dimension;
};

// (p^n-1)/(p-1) classes of p-1 characters each, sorted by kernel
// functional. The trivial character forms no class: its weight space is 0.
[[nodiscard]] std::vector<KernelClass> group_by_kernel(const FermatGroup& group,
                                                       bool force = false);

// genus(X/ker chi) for the class.
[[nodiscard]] GenusValue weight_block_dimension(const FermatGroup& group,
                                                const KernelClass& kernel_class);

}  // namespace fermat
