#pragma once

// Genus of X_(n,p) and of its quotients by subgroups of E.
//
// Model axiom: the only elements of E with fixed points are the nontrivial
// powers of the sigma_i, and each such cyclic group <sigma_i> fixes the
// p^(n-1) points over the i-th branch point. Riemann-Hurwitz for X -> X/H
// then reads
//   2 g_X - 2 = |H| (2 g' - 2) + sum_i p^(n-1) (d_i - 1),
// where d_i = |H ∩ <sigma_i>| is 1 or p.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fermat/fermat_group.hpp"
#include "fermat/fp_linalg.hpp"

namespace fermat {

using Integer = boost::multiprecision::cpp_int;

[[nodiscard]] Integer integer_pow(const Integer& base, std::uint64_t exponent);

// Number of index-p subgroups of (Z/pZ)^m: (p^m - 1)/(p - 1).
[[nodiscard]] Integer hyperplane_count(std::size_t m, Residue p);

// Converts to uint64, throwing Error{internal} if the value does not fit.
[[nodiscard]] std::uint64_t to_u64(const Integer& value);

// A genus (equivalently a dimension of an abelian variety); never negative.
class GenusValue {
 public:
  GenusValue() = default;
  explicit GenusValue(Integer value);

  [[nodiscard]] const Integer& value() const noexcept { return value_; }
  [[nodiscard]] std::uint64_t to_u64() const { return fermat::to_u64(value_); }
  [[nodiscard]] std::string to_string() const { return value_.str(); }

  friend bool operator==(const GenusValue& a, const GenusValue& b) {
    return a.value_ == b.value_;
  }
  friend bool operator==(const GenusValue& a, std::uint64_t b) {
    return a.value_ == b;
  }

 private:
  Integer value_ = 0;
};

struct RamificationProfile {
  // d_i for i = 0..n.
  std::vector<Residue> stabilizer_orders;
  Integer subgroup_order;
};

// g_(n,p) = (2 + p^(n-1) ((n-1)(p-1) - 2)) / 2 for n >= 1.
[[nodiscard]] GenusValue genus_gfc(std::size_t n, Residue p);

[[nodiscard]] RamificationProfile ramification_profile(
    const FermatGroup& group, const SubspaceBasis& subgroup);

// Genus of X_(n,p)/H for any H <= E, by Riemann-Hurwitz. Throws
// Error{internal} if the balance fails to close.
[[nodiscard]] GenusValue genus_quotient(const FermatGroup& group,
                                        const SubspaceBasis& subgroup);

// (n-t-1)(p-1)/2, the dimension of a factor indexed by |T| = t.
[[nodiscard]] GenusValue factor_dimension(std::size_t n, std::size_t t,
                                          Residue p);

// True iff no sigma_i lies in H, i.e. H acts without fixed points.
[[nodiscard]] bool is_etale(const FermatGroup& group,
                            const SubspaceBasis& subgroup);

}  // namespace fermat
