#pragma once

// The generalized Fermat group E = (Z/pZ)^n with its distinguished
// generators sigma_0..sigma_n, quotients E_T = E/<T> by subsets of the
// generators, and the index-p subgroups of E_T that avoid every generator
// image.
//
// Everything is written additively: sigma_1..sigma_n are the standard basis
// of F_p^n and sigma_0 = -(sigma_1 + ... + sigma_n).

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fermat/fp_linalg.hpp"

namespace fermat {

// Largest n supported; subsets of {0..n} are 64-bit masks.
inline constexpr std::size_t kMaxN = 62;

// A subset of generator indices, stored as a bitmask.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
  static IndexSet of(const std::vector<std::size_t>& indices);

  [[nodiscard]] constexpr std::uint64_t bits() const noexcept { return bits_; }
  [[nodiscard]] constexpr std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  [[nodiscard]] constexpr bool empty() const noexcept { return bits_ == 0; }
  [[nodiscard]] constexpr bool contains(std::size_t i) const noexcept {
    return i < 64 && ((bits_ >> i) & 1U) != 0;
  }
  [[nodiscard]] constexpr bool is_subset_of(IndexSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }

  [[nodiscard]] std::vector<std::size_t> indices() const;
  // "{0,2,3}"
  [[nodiscard]] std::string to_string() const;

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) {
    return IndexSet(a.bits_ | b.bits_);
  }
  friend constexpr bool operator==(IndexSet, IndexSet) = default;
  friend constexpr auto operator<=>(IndexSet, IndexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Subsets of {0..universe-1} with at most max_size elements, ordered by size
// and then by bitmask value.
[[nodiscard]] std::vector<IndexSet> subsets_by_size(std::size_t universe,
                                                    std::size_t max_size);

class FermatGroup {
 public:
  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] Residue p() const noexcept { return p_; }
  [[nodiscard]] const std::vector<FpVector>& generators() const noexcept {
    return generators_;
  }
  [[nodiscard]] const FpVector& generator(std::size_t i) const {
    return generators_.at(i);
  }

 private:
  friend FermatGroup build_group(std::size_t n, Residue p);
  FermatGroup(std::size_t n, Residue p, std::vector<FpVector> generators)
      : n_(n), p_(p), generators_(std::move(generators)) {}

  std::size_t n_;
  Residue p_;
  std::vector<FpVector> generators_;
};

// Requires 2 <= n <= kMaxN and p prime.
[[nodiscard]] FermatGroup build_group(std::size_t n, Residue p);

// E_T = E/<T> with coordinates given by quotient_map, and the image list S_T.
class QuotientContext {
 public:
  [[nodiscard]] const FermatGroup& parent() const noexcept { return parent_; }
  [[nodiscard]] IndexSet removed() const noexcept { return removed_; }
  [[nodiscard]] std::size_t dim() const noexcept { return projection_.target_dim(); }
  [[nodiscard]] Residue p() const noexcept { return parent_.p(); }
  [[nodiscard]] const LinearMap& projection() const noexcept {
    return projection_;
  }
  // <T> inside E.
  [[nodiscard]] const SubspaceBasis& collapsed() const noexcept {
    return collapsed_;
  }
  // Images of sigma_0..sigma_n; zero exactly at the indices in T.
  [[nodiscard]] const std::vector<FpVector>& images() const noexcept {
    return images_;
  }

 private:
  friend QuotientContext quotient_by(const FermatGroup&, IndexSet);
  QuotientContext(FermatGroup parent, IndexSet removed, SubspaceBasis collapsed,
                  LinearMap projection, std::vector<FpVector> images)
      : parent_(std::move(parent)),
        removed_(removed),
        collapsed_(std::move(collapsed)),
        projection_(std::move(projection)),
        images_(std::move(images)) {}

  FermatGroup parent_;
  IndexSet removed_;
  SubspaceBasis collapsed_;
  LinearMap projection_;
  std::vector<FpVector> images_;
};

// Requires T inside {0..n} with |T| <= n-1; larger T collapse E_T to a point
// or to a group with no curve quotient of interest and are rejected.
[[nodiscard]] QuotientContext quotient_by(const FermatGroup& group,
                                          IndexSet removed);

// An index-p subgroup H of E_T with H meeting S_T trivially, held as the
// canonical functional on E_T whose kernel is H.
struct AdmissibleSubgroup {
  IndexSet removed;
  Functional functional;

  friend bool operator==(const AdmissibleSubgroup&,
                         const AdmissibleSubgroup&) = default;
};

// For prime p, H = ker(phi) meets S_T trivially iff phi is nonzero on every
// image sigma_i with i outside T.
[[nodiscard]] bool is_admissible(const QuotientContext& quotient,
                                 const Functional& functional);

[[nodiscard]] std::vector<AdmissibleSubgroup> admissible_hyperplanes(
    const QuotientContext& quotient);

struct ClassifiedHyperplane {
  Functional functional;  // on E
  IndexSet intersection;  // {i : sigma_i in ker(functional)}
};

// Every index-p subgroup of E, in lexicographic functional order, tagged
// with the generators it contains.
[[nodiscard]] std::vector<ClassifiedHyperplane> classify_hyperplanes(
    const FermatGroup& group);

// Image in E_T of an index-p subgroup of E containing <T>.
[[nodiscard]] AdmissibleSubgroup descend(const QuotientContext& quotient,
                                         const Functional& on_group);

// Preimage in E of H <= E_T, as a functional on E and as a subspace.
[[nodiscard]] Functional lift_functional(const QuotientContext& quotient,
                                         const AdmissibleSubgroup& subgroup);
[[nodiscard]] SubspaceBasis lift_subgroup(const QuotientContext& quotient,
                                          const AdmissibleSubgroup& subgroup);

}  // namespace fermat
