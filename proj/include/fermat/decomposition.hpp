#pragma once

// Isogeny decomposition of J(X_(n,p)) into the factors pi_H^* J(X_T/H),
// indexed by T ⊂ {0..n} with n-|T| >= 2 and H an index-p subgroup of E_T
// missing every generator image. A factor has dimension (n-|T|-1)(p-1)/2.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fermat/fermat_group.hpp"
#include "fermat/genus.hpp"
#include "fermat/prym.hpp"

namespace fermat {

// Refuse to enumerate more canonical functionals than this unless forced.
inline constexpr std::uint64_t kHyperplaneBudget = 10'000'000;

struct DecomposeOptions {
  bool force = false;
};

// Throws Error{budget_exceeded} when (p^n-1)/(p-1) exceeds the budget and
// force is not set. Validates n and p.
void check_budget(std::size_t n, Residue p, bool force);

struct DecompositionFactor {
  IndexSet removed;
  Functional functional;  // on E_T
  std::uint64_t dimension;
  Integer kernel_order;
  PrymVerdict verdict;
};

struct DecompositionReport {
  std::size_t n = 0;
  Residue p = 0;
  std::vector<DecompositionFactor> factors;
  Integer total_dimension;
  Integer genus;
  std::map<std::uint64_t, std::uint64_t> multiplicity;  // dimension -> count
  std::map<std::size_t, std::uint64_t> census;  // |H ∩ S| -> hyperplanes of E
  // Admissible pairs with n-|T| = 1; dimension zero, kept out of `factors`.
  std::uint64_t zero_dimensional = 0;
};

[[nodiscard]] DecompositionReport decompose(std::size_t n, Residue p,
                                            DecomposeOptions options = {});

// N(m,p): canonical functionals on F_p^m nonzero on e_1..e_m and on
// -(e_1+...+e_m), counted by enumeration and cross-checked against the
// closed form below.
[[nodiscard]] std::uint64_t count_admissible(std::size_t m, Residue p);

// ((p-1)^m - c_m)/(p-1) with c_m = ((p-1)^m + (-1)^m (p-1))/p.
[[nodiscard]] Integer admissible_closed_form(std::size_t m, Residue p);

// Tally of factor dimensions in the report.
[[nodiscard]] std::map<std::uint64_t, std::uint64_t> multiplicity_table(
    const DecompositionReport& report);

// C(n+1, n-m') N(m',p) factors of dimension (m'-1)(p-1)/2 for m' = 2..n,
// zero counts omitted.
[[nodiscard]] std::map<std::uint64_t, std::uint64_t> multiplicity_formula(
    std::size_t n, Residue p);

[[nodiscard]] Integer binomial(std::size_t n, std::size_t k);

struct IdentityCheck {
  std::string name;
  Integer lhs;
  Integer rhs;
  bool pass = false;

  [[nodiscard]] Integer residual() const { return rhs - lhs; }
};

// lhs = total factor dimension, rhs = genus.
[[nodiscard]] IdentityCheck verify_dimension_identity(
    const DecompositionReport& report);

// lhs = sum_t C(n+1,t) N(n-t,p), rhs = (p^n-1)/(p-1); also requires the
// report's census to match term by term.
[[nodiscard]] IdentityCheck verify_partition_identity(
    const DecompositionReport& report);

// lhs = number of mismatching dimensions between multiplicity_table and
// multiplicity_formula, rhs = 0.
[[nodiscard]] IdentityCheck verify_multiplicity_formula(
    const DecompositionReport& report);

struct HumbertEdgeSummary {
  std::size_t n = 0;
  std::map<std::uint64_t, std::uint64_t> multiplicity;
  Integer total_dimension;
  Integer genus;
  Integer prym_exponent;  // 2^(n-3)
  // Order of the kernel of the sum map, (2^(n-3))^genus. Reported, not
  // checked: there is no abelian-variety model to verify it against.
  Integer kernel_order_base;
  Integer kernel_order_power;
  std::string kernel_order_formula;
  bool kernel_order_checked = false;
};

[[nodiscard]] HumbertEdgeSummary humbert_edge_summary(
    std::size_t n, DecomposeOptions options = {});
// Summary of an existing p = 2 report.
[[nodiscard]] HumbertEdgeSummary humbert_edge_summary(
    const DecompositionReport& report);

}  // namespace fermat
