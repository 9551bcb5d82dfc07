#pragma once

// Exact linear algebra over the prime field F_p.
//
// Subspaces are always held in reduced row-echelon form, which is unique, so
// subgroup equality is plain basis equality. Index-p subgroups (hyperplanes)
// are held as functionals normalized so that the first nonzero coefficient
// is 1.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fermat {

using Residue = std::uint32_t;

// Largest modulus accepted anywhere in the library.
inline constexpr Residue kMaxPrime = 97;

[[nodiscard]] bool is_prime(std::uint64_t value) noexcept;

// Throws Error{not_prime} for composite input and Error{invalid_argument}
// for primes above kMaxPrime.
void require_prime(std::uint64_t p);

[[nodiscard]] Residue inverse_mod(Residue a, Residue p);

class FpVector {
 public:
  // Zero vector of the given length.
  FpVector(std::size_t length, Residue modulus);
  FpVector(std::vector<Residue> entries, Residue modulus);

  static FpVector unit(std::size_t length, std::size_t index, Residue modulus);

  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] Residue modulus() const noexcept { return modulus_; }
  [[nodiscard]] Residue operator[](std::size_t i) const { return entries_[i]; }
  [[nodiscard]] std::span<const Residue> entries() const noexcept {
    return entries_;
  }
  [[nodiscard]] bool is_zero() const noexcept;

  void set(std::size_t i, Residue value);

  FpVector& operator+=(const FpVector& other);
  FpVector& operator-=(const FpVector& other);
  [[nodiscard]] FpVector operator-() const;
  [[nodiscard]] FpVector scaled(Residue factor) const;
  // this += factor * other
  void add_scaled(const FpVector& other, Residue factor);

  // Comma-joined residues, e.g. "1,0,4".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const FpVector&, const FpVector&) = default;
  friend std::strong_ordering operator<=>(const FpVector& a,
                                          const FpVector& b) {
    if (auto c = a.entries_ <=> b.entries_; c != 0) return c;
    return a.modulus_ <=> b.modulus_;
  }

 private:
  void check_compatible(const FpVector& other) const;

  std::vector<Residue> entries_;
  Residue modulus_;
};

[[nodiscard]] FpVector operator+(FpVector a, const FpVector& b);
[[nodiscard]] FpVector operator-(FpVector a, const FpVector& b);
[[nodiscard]] Residue dot(const FpVector& a, const FpVector& b);

class SubspaceBasis {
 public:
  static SubspaceBasis zero(std::size_t ambient_dim, Residue modulus);
  static SubspaceBasis whole(std::size_t ambient_dim, Residue modulus);

  [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }
  [[nodiscard]] std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  [[nodiscard]] Residue modulus() const noexcept { return modulus_; }
  [[nodiscard]] const std::vector<FpVector>& rows() const noexcept {
    return rows_;
  }
  // Pivot column of each row, strictly increasing.
  [[nodiscard]] std::vector<std::size_t> pivot_columns() const;

  friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

 private:
  friend SubspaceBasis rref_basis(std::span<const FpVector>, std::size_t,
                                  Residue);
  SubspaceBasis(std::vector<FpVector> rows, std::size_t ambient_dim,
                Residue modulus);

  std::vector<FpVector> rows_;
  std::size_t ambient_dim_;
  Residue modulus_;
};

// Unique RREF basis of the span of `vectors` inside F_p^ambient_dim.
[[nodiscard]] SubspaceBasis rref_basis(std::span<const FpVector> vectors,
                                       std::size_t ambient_dim, Residue p);

// Representative of v modulo span(basis): every pivot coordinate is cleared.
[[nodiscard]] FpVector reduce_modulo(const SubspaceBasis& basis, FpVector v);

[[nodiscard]] bool span_contains(const SubspaceBasis& basis, const FpVector& v);

// Linear map F_p^source -> F_p^target stored as `target` rows of length
// `source`; row j is the functional giving coordinate j of the image.
class LinearMap {
 public:
  LinearMap(std::vector<FpVector> rows, std::size_t source_dim,
            Residue modulus);

  [[nodiscard]] std::size_t source_dim() const noexcept { return source_dim_; }
  [[nodiscard]] std::size_t target_dim() const noexcept { return rows_.size(); }
  [[nodiscard]] Residue modulus() const noexcept { return modulus_; }
  [[nodiscard]] const std::vector<FpVector>& rows() const noexcept {
    return rows_;
  }

  [[nodiscard]] FpVector apply(const FpVector& v) const;

 private:
  std::vector<FpVector> rows_;
  std::size_t source_dim_;
  Residue modulus_;
};

// Surjection F_p^n -> F_p^(n - rank) with kernel exactly span(sub). The
// non-pivot coordinates of `sub`, in index order, parametrize the target.
[[nodiscard]] LinearMap quotient_map(std::size_t ambient_dim,
                                     const SubspaceBasis& sub);

// A nonzero linear functional up to nonzero scalars, i.e. a hyperplane.
// Construction normalizes the first nonzero coefficient to 1.
class Functional {
 public:
  explicit Functional(const FpVector& coefficients);

  [[nodiscard]] const FpVector& coefficients() const noexcept {
    return coefficients_;
  }
  [[nodiscard]] std::size_t dim() const noexcept { return coefficients_.size(); }
  [[nodiscard]] Residue modulus() const noexcept {
    return coefficients_.modulus();
  }
  [[nodiscard]] std::size_t leading_index() const noexcept { return leading_; }

  [[nodiscard]] Residue evaluate(const FpVector& v) const {
    return dot(coefficients_, v);
  }
  [[nodiscard]] SubspaceBasis kernel() const;
  [[nodiscard]] std::string to_string() const {
    return coefficients_.to_string();
  }

  friend bool operator==(const Functional& a, const Functional& b) {
    return a.coefficients_ == b.coefficients_;
  }
  friend std::strong_ordering operator<=>(const Functional& a,
                                          const Functional& b) {
    return a.coefficients_ <=> b.coefficients_;
  }

 private:
  FpVector coefficients_;
  std::size_t leading_ = 0;
};

// All (p^m - 1)/(p - 1) canonical functionals on F_p^m in lexicographic
// order. Empty for m = 0.
[[nodiscard]] std::vector<Functional> enumerate_hyperplanes(std::size_t m,
                                                            Residue p);

}  // namespace fermat
