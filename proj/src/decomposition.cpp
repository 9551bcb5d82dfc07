#include "fermat/decomposition.hpp"

#include <set>

#include "fermat/error.hpp"

namespace fermat {

void check_budget(std::size_t n, Residue p, bool force) {
  require_prime(p);
  if (n < 2) {
    throw Error(ErrorCode::invalid_argument,
                "n must be at least 2 (got " + std::to_string(n) + ")");
  }
  if (n > kMaxN) {
    throw Error(ErrorCode::invalid_argument,
                "n must not exceed " + std::to_string(kMaxN));
  }
  if (!force && hyperplane_count(n, p) > kHyperplaneBudget) {
    throw Error(ErrorCode::budget_exceeded,
                "(p^n-1)/(p-1) = " + hyperplane_count(n, p).str() +
                    " exceeds the enumeration budget of " +
                    std::to_string(kHyperplaneBudget) + " (use --force)");
  }
}

Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Integer result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

Integer admissible_closed_form(std::size_t m, Residue p) {
  require_prime(p);
  if (m < 1) throw Error(ErrorCode::invalid_argument, "m must be >= 1");
  const Integer units = integer_pow(p - 1, m);
  const Integer sign = (m % 2 == 0) ? 1 : -1;
  const Integer zero_sum_numerator = units + sign * (p - 1);
  if (zero_sum_numerator % p != 0) {
    throw Error(ErrorCode::internal, "zero-sum count is not integral");
  }
  const Integer zero_sum = zero_sum_numerator / p;
  if ((units - zero_sum) % (p - 1) != 0) {
    throw Error(ErrorCode::internal, "admissible count is not integral");
  }
  return (units - zero_sum) / (p - 1);
}

std::uint64_t count_admissible(std::size_t m, Residue p) {
  std::uint64_t count = 0;
  for (const auto& phi : enumerate_hyperplanes(m, p)) {
    std::uint64_t sum = 0;
    bool nonzero = true;
    for (Residue c : phi.coefficients().entries()) {
      if (c == 0) {
        nonzero = false;
        break;
      }
      sum += c;
    }
    if (nonzero && sum % p != 0) ++count;
  }
  if (m >= 1 && admissible_closed_form(m, p) != count) {
    throw Error(ErrorCode::internal,
                "admissible count " + std::to_string(count) +
                    " disagrees with closed form " +
                    admissible_closed_form(m, p).str());
  }
  return count;
}

DecompositionReport decompose(std::size_t n, Residue p,
                              DecomposeOptions options) {
  check_budget(n, p, options.force);
  const FermatGroup group = build_group(n, p);

  DecompositionReport report;
  report.n = n;
  report.p = p;
  report.genus = genus_gfc(n, p).value();

  std::map<std::size_t, PrymVerdict> verdicts;
  for (IndexSet removed : subsets_by_size(n + 1, n - 1)) {
    const QuotientContext quotient = quotient_by(group, removed);
    auto admissible = admissible_hyperplanes(quotient);
    const std::size_t t = removed.size();
    if (t + 1 == n) {
      report.zero_dimensional += admissible.size();
      continue;
    }
    if (admissible.empty()) continue;
    const std::uint64_t dimension = factor_dimension(n, t, p).to_u64();
    auto cached = verdicts.find(t);
    if (cached == verdicts.end()) {
      cached = verdicts.emplace(t, prym_verdict(n, p, t)).first;
    }
    for (auto& subgroup : admissible) {
      Integer order = pullback_kernel(quotient, subgroup).order;
      report.total_dimension += dimension;
      report.factors.push_back({removed, std::move(subgroup.functional),
                                dimension, std::move(order), cached->second});
    }
  }
  report.multiplicity = multiplicity_table(report);

  for (std::size_t t = 0; t < n; ++t) report.census[t] = 0;
  for (const auto& classified : classify_hyperplanes(group)) {
    ++report.census[classified.intersection.size()];
  }
  return report;
}

std::map<std::uint64_t, std::uint64_t> multiplicity_table(
    const DecompositionReport& report) {
  std::map<std::uint64_t, std::uint64_t> table;
  for (const auto& f : report.factors) ++table[f.dimension];
  return table;
}

std::map<std::uint64_t, std::uint64_t> multiplicity_formula(std::size_t n,
                                                            Residue p) {
  std::map<std::uint64_t, std::uint64_t> table;
  for (std::size_t m = 2; m <= n; ++m) {
    const Integer count = binomial(n + 1, n - m) * admissible_closed_form(m, p);
    if (count == 0) continue;
    table[to_u64(Integer(m - 1) * (p - 1) / 2)] += to_u64(count);
  }
  return table;
}

IdentityCheck verify_dimension_identity(const DecompositionReport& report) {
  IdentityCheck check{"dimension", report.total_dimension, report.genus, false};
  check.pass = check.lhs == check.rhs;
  return check;
}

IdentityCheck verify_partition_identity(const DecompositionReport& report) {
  const std::size_t n = report.n;
  IdentityCheck check{"hyperplane_partition", 0,
                      hyperplane_count(n, report.p), true};
  for (std::size_t t = 0; t < n; ++t) {
    const Integer term =
        binomial(n + 1, t) * count_admissible(n - t, report.p);
    check.lhs += term;
    const auto it = report.census.find(t);
    const Integer censused = it == report.census.end() ? 0 : it->second;
    if (censused != term) check.pass = false;
  }
  check.pass = check.pass && check.lhs == check.rhs;
  return check;
}

IdentityCheck verify_multiplicity_formula(const DecompositionReport& report) {
  const auto enumerated = multiplicity_table(report);
  const auto formula = multiplicity_formula(report.n, report.p);
  std::set<std::uint64_t> keys;
  for (const auto& [d, c] : enumerated) keys.insert(d);
  for (const auto& [d, c] : formula) keys.insert(d);
  Integer mismatches = 0;
  for (auto d : keys) {
    const auto a = enumerated.find(d);
    const auto b = formula.find(d);
    if (a == enumerated.end() || b == formula.end() || a->second != b->second) {
      ++mismatches;
    }
  }
  return {"multiplicity_formula", mismatches, 0, mismatches == 0};
}

HumbertEdgeSummary humbert_edge_summary(std::size_t n,
                                        DecomposeOptions options) {
  if (n < 3) {
    throw Error(ErrorCode::invalid_argument,
                "Humbert-Edge summary needs n >= 3 (got " + std::to_string(n) +
                    ")");
  }
  return humbert_edge_summary(decompose(n, 2, options));
}

HumbertEdgeSummary humbert_edge_summary(const DecompositionReport& report) {
  if (report.p != 2 || report.n < 3) {
    throw Error(ErrorCode::invalid_argument,
                "Humbert-Edge summary needs p = 2 and n >= 3");
  }
  HumbertEdgeSummary summary;
  summary.n = report.n;
  summary.multiplicity = report.multiplicity;
  summary.total_dimension = report.total_dimension;
  summary.genus = report.genus;
  summary.prym_exponent = integer_pow(2, report.n - 3);
  summary.kernel_order_base = summary.prym_exponent;
  summary.kernel_order_power = report.genus;
  summary.kernel_order_formula =
      summary.kernel_order_base.str() + "^" + summary.kernel_order_power.str();
  return summary;
}

}  // namespace fermat
