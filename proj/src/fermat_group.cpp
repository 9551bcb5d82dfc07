#include "fermat/fermat_group.hpp"

#include <algorithm>

#include "fermat/error.hpp"

namespace fermat {

IndexSet IndexSet::of(const std::vector<std::size_t>& indices) {
  IndexSet out;
  for (std::size_t i : indices) {
    if (i >= 64) throw Error(ErrorCode::invalid_argument, "index too large");
    out.insert(i);
  }
  return out;
}

std::vector<std::size_t> IndexSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 64; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string IndexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : indices()) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

std::vector<IndexSet> subsets_by_size(std::size_t universe,
                                      std::size_t max_size) {
  if (universe > 63) {
    throw Error(ErrorCode::invalid_argument, "index universe too large");
  }
  std::vector<IndexSet> out;
  max_size = std::min(max_size, universe);
  for (std::size_t k = 0; k <= max_size; ++k) {
    if (k == 0) {
      out.emplace_back();
      continue;
    }
    // Gosper's hack walks the k-subsets in increasing bitmask order.
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << universe;
    while (mask < limit) {
      out.emplace_back(mask);
      const std::uint64_t low = mask & (~mask + 1);
      const std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  return out;
}

FermatGroup build_group(std::size_t n, Residue p) {
  require_prime(p);
  if (n < 2) {
    throw Error(ErrorCode::invalid_argument,
                "n must be at least 2 (got " + std::to_string(n) + ")");
  }
  if (n > kMaxN) {
    throw Error(ErrorCode::invalid_argument,
                "n must not exceed " + std::to_string(kMaxN));
  }
  std::vector<FpVector> generators;
  generators.reserve(n + 1);
  generators.emplace_back(std::vector<Residue>(n, p - 1), p);
  for (std::size_t i = 0; i < n; ++i) {
    generators.push_back(FpVector::unit(n, i, p));
  }
  return FermatGroup(n, p, std::move(generators));
}

QuotientContext quotient_by(const FermatGroup& group, IndexSet removed) {
  const std::size_t n = group.n();
  if (!removed.is_subset_of(IndexSet((std::uint64_t{1} << (n + 1)) - 1))) {
    throw Error(ErrorCode::invalid_argument,
                "generator index out of range in " + removed.to_string());
  }
  if (removed.size() >= n) {
    throw Error(ErrorCode::invalid_argument,
                "quotient by " + std::to_string(removed.size()) +
                    " generators leaves no curve quotient (need |T| <= n-1)");
  }
  std::vector<FpVector> spanning;
  for (std::size_t i : removed.indices()) {
    spanning.push_back(group.generator(i));
  }
  SubspaceBasis collapsed = rref_basis(spanning, n, group.p());
  if (collapsed.rank() != removed.size()) {
    throw Error(ErrorCode::internal, "generators are not independent");
  }
  LinearMap projection = quotient_map(n, collapsed);
  std::vector<FpVector> images;
  images.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    images.push_back(projection.apply(group.generator(i)));
    if (images.back().is_zero() != removed.contains(i)) {
      throw Error(ErrorCode::internal, "generator image has wrong support");
    }
  }
  return QuotientContext(group, removed, std::move(collapsed),
                         std::move(projection), std::move(images));
}

bool is_admissible(const QuotientContext& quotient,
                   const Functional& functional) {
  if (functional.dim() != quotient.dim() ||
      functional.modulus() != quotient.p()) {
    throw Error(ErrorCode::dimension_mismatch,
                "functional does not live on the quotient group");
  }
  const auto& images = quotient.images();
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (quotient.removed().contains(i)) continue;
    if (functional.evaluate(images[i]) == 0) return false;
  }
  return true;
}

std::vector<AdmissibleSubgroup> admissible_hyperplanes(
    const QuotientContext& quotient) {
  std::vector<AdmissibleSubgroup> out;
  for (auto& phi : enumerate_hyperplanes(quotient.dim(), quotient.p())) {
    if (is_admissible(quotient, phi)) {
      out.push_back({quotient.removed(), std::move(phi)});
    }
  }
  return out;
}

std::vector<ClassifiedHyperplane> classify_hyperplanes(
    const FermatGroup& group) {
  std::vector<ClassifiedHyperplane> out;
  for (auto& phi : enumerate_hyperplanes(group.n(), group.p())) {
    IndexSet hit;
    for (std::size_t i = 0; i <= group.n(); ++i) {
      if (phi.evaluate(group.generator(i)) == 0) hit.insert(i);
    }
    out.push_back({std::move(phi), hit});
  }
  return out;
}

AdmissibleSubgroup descend(const QuotientContext& quotient,
                           const Functional& on_group) {
  const auto& group = quotient.parent();
  if (on_group.dim() != group.n() || on_group.modulus() != group.p()) {
    throw Error(ErrorCode::dimension_mismatch,
                "functional does not live on the parent group");
  }
  for (const auto& row : quotient.collapsed().rows()) {
    if (on_group.evaluate(row) != 0) {
      throw Error(ErrorCode::invalid_argument,
                  "subgroup does not contain <T> for T = " +
                      quotient.removed().to_string());
    }
  }
  // e_{free_j} maps to the j-th unit vector of E_T, so the descended
  // functional reads off the free coordinates.
  const auto pivots = quotient.collapsed().pivot_columns();
  std::vector<Residue> coefficients;
  coefficients.reserve(quotient.dim());
  for (std::size_t c = 0; c < group.n(); ++c) {
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) {
      coefficients.push_back(on_group.coefficients()[c]);
    }
  }
  Functional descended(FpVector(std::move(coefficients), group.p()));
  if (!is_admissible(quotient, descended)) {
    throw Error(ErrorCode::invalid_argument,
                "subgroup contains generators outside T = " +
                    quotient.removed().to_string());
  }
  return {quotient.removed(), std::move(descended)};
}

Functional lift_functional(const QuotientContext& quotient,
                           const AdmissibleSubgroup& subgroup) {
  if (subgroup.removed != quotient.removed()) {
    throw Error(ErrorCode::invalid_argument,
                "subgroup belongs to a different quotient");
  }
  const auto& rows = quotient.projection().rows();
  const auto& psi = subgroup.functional.coefficients();
  if (psi.size() != rows.size()) {
    throw Error(ErrorCode::dimension_mismatch,
                "functional does not live on the quotient group");
  }
  const std::size_t n = quotient.parent().n();
  FpVector pulled(n, quotient.p());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    pulled.add_scaled(rows[j], psi[j]);
  }
  return Functional(pulled);
}

SubspaceBasis lift_subgroup(const QuotientContext& quotient,
                            const AdmissibleSubgroup& subgroup) {
  return lift_functional(quotient, subgroup).kernel();
}

}  // namespace fermat
