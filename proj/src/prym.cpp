#include "fermat/prym.hpp"

#include "fermat/error.hpp"

namespace fermat {

std::string_view to_string(PrymStatus status) noexcept {
  switch (status) {
    case PrymStatus::not_prym_tyurin:
      return "NotPrymTyurin";
    case PrymStatus::inconclusive:
      return "Inconclusive";
    case PrymStatus::prym_tyurin_known:
      return "PrymTyurinKnown";
  }
  return "Inconclusive";
}

std::optional<PrymStatus> parse_prym_status(std::string_view text) {
  for (auto s : {PrymStatus::not_prym_tyurin, PrymStatus::inconclusive,
                 PrymStatus::prym_tyurin_known}) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

KernelDescriptor pullback_kernel(const QuotientContext& quotient,
                                 const AdmissibleSubgroup& subgroup) {
  if (!is_admissible(quotient, subgroup.functional)) {
    throw Error(ErrorCode::invalid_argument,
                "subgroup meets the generator images");
  }
  // H acts freely on X_T iff its preimage in E picks up no generator beyond
  // those in T.
  const auto lifted = lift_subgroup(quotient, subgroup);
  const auto& group = quotient.parent();
  for (std::size_t i = 0; i <= group.n(); ++i) {
    if (span_contains(lifted, group.generator(i)) !=
        quotient.removed().contains(i)) {
      throw Error(ErrorCode::invalid_argument,
                  "subgroup does not act freely on X_T");
    }
  }
  const auto kernel = subgroup.functional.kernel();
  if (kernel.rank() + 1 != quotient.dim()) {
    throw Error(ErrorCode::internal, "hyperplane of wrong rank");
  }
  return {integer_pow(quotient.p(), kernel.rank()), kernel.rank()};
}

bool principal_multiple_possible(const Integer& genus, Residue p,
                                 const Integer& kernel_order) {
  if (genus < 1) throw Error(ErrorCode::invalid_argument, "genus must be >= 1");
  const auto g = to_u64(genus);
  return kernel_order == integer_pow(p, g) ||
         kernel_order == integer_pow(p, 2 * g);
}

PrymVerdict prym_verdict(std::size_t n, Residue p, std::size_t t) {
  require_prime(p);
  if (n < 2 || t + 2 > n) {
    throw Error(ErrorCode::invalid_argument,
                "no positive-dimensional factor for n = " + std::to_string(n) +
                    ", |T| = " + std::to_string(t));
  }
  const std::size_t m = n - t;
  if (p == 2 && m % 2 == 0) {
    throw Error(ErrorCode::invalid_argument,
                "no admissible subgroup for p = 2 with n-|T| even");
  }
  const Integer genus = factor_dimension(n, t, p).value();
  const Integer order = integer_pow(p, m - 1);
  const Integer bound = integer_pow(p, to_u64(genus));
  const std::string ps = std::to_string(p);

  PrymVerdict verdict;
  if (p >= 5) {
    // The comparison |H| < p^g does not depend on the intermediate quotient
    // X_T', so each T' ⊆ T repeats the same check.
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << t); ++sub) {
      if (!(order < bound) || principal_multiple_possible(genus, p, order)) {
        throw Error(ErrorCode::internal, "order inequality failed");
      }
      ++verdict.intermediate_checks;
    }
    verdict.status = PrymStatus::not_prym_tyurin;
    verdict.rationale = "free action with |H| = " + ps + "^" +
                        std::to_string(m - 1) + " < " + ps + "^" +
                        genus.str() +
                        " = p^g, so the pullback polarization is not a "
                        "multiple of a principal one";
  } else if (p == 3) {
    verdict.status = PrymStatus::inconclusive;
    verdict.rationale = "|H| = 3^" + std::to_string(m - 1) +
                        " = p^g exactly; the order obstruction does not apply";
  } else {
    if (n < 3) throw Error(ErrorCode::internal, "p = 2 factor with n < 3");
    verdict.status = PrymStatus::prym_tyurin_known;
    verdict.exponent = integer_pow(2, n - 3);
    verdict.rationale = "Humbert-Edge factor: Prym-Tyurin of exponent 2^" +
                        std::to_string(n - 3);
  }
  return verdict;
}

}  // namespace fermat
