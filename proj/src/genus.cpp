#include "fermat/genus.hpp"

#include <limits>

#include "fermat/error.hpp"

namespace fermat {

Integer integer_pow(const Integer& base, std::uint64_t exponent) {
  Integer result = 1;
  Integer b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

Integer hyperplane_count(std::size_t m, Residue p) {
  require_prime(p);
  return (integer_pow(p, m) - 1) / (p - 1);
}

std::uint64_t to_u64(const Integer& value) {
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::internal,
                "integer " + value.str() + " does not fit in 64 bits");
  }
  return value.convert_to<std::uint64_t>();
}

GenusValue::GenusValue(Integer value) : value_(std::move(value)) {
  if (value_ < 0) {
    throw Error(ErrorCode::internal, "negative genus " + value_.str());
  }
}

GenusValue genus_gfc(std::size_t n, Residue p) {
  require_prime(p);
  if (n < 1) throw Error(ErrorCode::invalid_argument, "n must be >= 1");
  const Integer twice = 2 + integer_pow(p, n - 1) *
                                (Integer(n - 1) * (p - 1) - 2);
  if (twice % 2 != 0) {
    throw Error(ErrorCode::internal, "odd genus numerator");
  }
  return GenusValue(twice / 2);
}

RamificationProfile ramification_profile(const FermatGroup& group,
                                         const SubspaceBasis& subgroup) {
  if (subgroup.ambient_dim() != group.n() || subgroup.modulus() != group.p()) {
    throw Error(ErrorCode::dimension_mismatch,
                "subgroup does not live in the Fermat group");
  }
  RamificationProfile profile;
  profile.subgroup_order = integer_pow(group.p(), subgroup.rank());
  // <sigma_i> has prime order, so it meets H either trivially or entirely.
  for (const auto& sigma : group.generators()) {
    profile.stabilizer_orders.push_back(span_contains(subgroup, sigma) ? group.p()
                                                                       : 1);
  }
  return profile;
}

GenusValue genus_quotient(const FermatGroup& group,
                          const SubspaceBasis& subgroup) {
  const auto profile = ramification_profile(group, subgroup);
  const Integer fiber = integer_pow(group.p(), group.n() - 1);
  const Integer euler_cover = 2 * genus_gfc(group.n(), group.p()).value() - 2;
  Integer ramification = 0;
  for (Residue d : profile.stabilizer_orders) ramification += fiber * (d - 1);

  const Integer balance = euler_cover - ramification;
  if (balance % profile.subgroup_order != 0) {
    throw Error(ErrorCode::internal,
                "Riemann-Hurwitz balance not divisible by |H|");
  }
  const Integer euler_quotient = balance / profile.subgroup_order;
  if (euler_quotient < -2 || euler_quotient % 2 != 0) {
    throw Error(ErrorCode::internal,
                "Riemann-Hurwitz gives 2g-2 = " + euler_quotient.str());
  }
  return GenusValue((euler_quotient + 2) / 2);
}

GenusValue factor_dimension(std::size_t n, std::size_t t, Residue p) {
  require_prime(p);
  if (t >= n) {
    throw Error(ErrorCode::invalid_argument,
                "factor dimension needs |T| <= n-1");
  }
  const Integer twice = Integer(n - t - 1) * (p - 1);
  if (twice % 2 != 0) {
    throw Error(ErrorCode::invalid_argument,
                "no admissible subgroup exists for n-|T| = " +
                    std::to_string(n - t) + " and p = 2");
  }
  return GenusValue(twice / 2);
}

bool is_etale(const FermatGroup& group, const SubspaceBasis& subgroup) {
  if (subgroup.ambient_dim() != group.n() || subgroup.modulus() != group.p()) {
    throw Error(ErrorCode::dimension_mismatch,
                "subgroup does not live in the Fermat group");
  }
  for (const auto& sigma : group.generators()) {
    if (span_contains(subgroup, sigma)) return false;
  }
  return true;
}

}  // namespace fermat
