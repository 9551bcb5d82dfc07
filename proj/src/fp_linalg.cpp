#include "fermat/fp_linalg.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "fermat/error.hpp"

namespace fermat {

namespace {

constexpr std::array<bool, kMaxPrime + 1> make_small_prime_table() {
  std::array<bool, kMaxPrime + 1> table{};
  for (std::size_t v = 2; v <= kMaxPrime; ++v) {
    bool prime = true;
    for (std::size_t d = 2; d * d <= v; ++d) {
      if (v % d == 0) {
        prime = false;
        break;
      }
    }
    table[v] = prime;
  }
  return table;
}

constexpr auto kSmallPrimes = make_small_prime_table();

void check_modulus(Residue p) {
  if (p > kMaxPrime || !kSmallPrimes[p]) require_prime(p);
}

}  // namespace

bool is_prime(std::uint64_t value) noexcept {
  if (value <= kMaxPrime) return kSmallPrimes[value];
  if (value % 2 == 0) return false;
  for (std::uint64_t d = 3; d <= value / d; d += 2) {
    if (value % d == 0) return false;
  }
  return true;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::not_prime,
                "p must be prime (got " + std::to_string(p) + ")");
  }
  if (p > kMaxPrime) {
    throw Error(ErrorCode::invalid_argument,
                "p must not exceed " + std::to_string(kMaxPrime) + " (got " +
                    std::to_string(p) + ")");
  }
}

Residue inverse_mod(Residue a, Residue p) {
  a %= p;
  if (a == 0) throw Error(ErrorCode::invalid_argument, "zero has no inverse");
  // Fermat: a^(p-2)
  std::uint64_t result = 1;
  std::uint64_t base = a;
  for (Residue e = p - 2; e > 0; e >>= 1) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<Residue>(result);
}

// ---------------------------------------------------------------------------
// FpVector

FpVector::FpVector(std::size_t length, Residue modulus)
    : entries_(length, 0), modulus_(modulus) {
  check_modulus(modulus);
  if (length == 0) {
    throw Error(ErrorCode::invalid_argument, "vector length must be >= 1");
  }
}

FpVector::FpVector(std::vector<Residue> entries, Residue modulus)
    : entries_(std::move(entries)), modulus_(modulus) {
  check_modulus(modulus);
  if (entries_.empty()) {
    throw Error(ErrorCode::invalid_argument, "vector length must be >= 1");
  }
  for (Residue e : entries_) {
    if (e >= modulus_) {
      throw Error(ErrorCode::invalid_argument,
                  "entry " + std::to_string(e) + " is not reduced mod " +
                      std::to_string(modulus_));
    }
  }
}

FpVector FpVector::unit(std::size_t length, std::size_t index,
                        Residue modulus) {
  FpVector v(length, modulus);
  v.set(index, 1);
  return v;
}

bool FpVector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](Residue e) { return e == 0; });
}

void FpVector::set(std::size_t i, Residue value) {
  if (i >= entries_.size()) {
    throw Error(ErrorCode::dimension_mismatch, "index out of range");
  }
  entries_[i] = value % modulus_;
}

void FpVector::check_compatible(const FpVector& other) const {
  if (other.size() != size() || other.modulus_ != modulus_) {
    throw Error(ErrorCode::dimension_mismatch,
                "vectors differ in length or modulus");
  }
}

FpVector& FpVector::operator+=(const FpVector& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] = (entries_[i] + other.entries_[i]) % modulus_;
  }
  return *this;
}

FpVector& FpVector::operator-=(const FpVector& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] = (entries_[i] + modulus_ - other.entries_[i]) % modulus_;
  }
  return *this;
}

FpVector FpVector::operator-() const {
  FpVector out = *this;
  for (auto& e : out.entries_) e = (modulus_ - e) % modulus_;
  return out;
}

FpVector FpVector::scaled(Residue factor) const {
  FpVector out = *this;
  factor %= modulus_;
  for (auto& e : out.entries_) e = e * factor % modulus_;
  return out;
}

void FpVector::add_scaled(const FpVector& other, Residue factor) {
  check_compatible(other);
  factor %= modulus_;
  if (factor == 0) return;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] = (entries_[i] + factor * other.entries_[i]) % modulus_;
  }
}

std::string FpVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

FpVector operator+(FpVector a, const FpVector& b) { return a += b; }
FpVector operator-(FpVector a, const FpVector& b) { return a -= b; }

Residue dot(const FpVector& a, const FpVector& b) {
  if (a.size() != b.size() || a.modulus() != b.modulus()) {
    throw Error(ErrorCode::dimension_mismatch,
                "dot product of incompatible vectors");
  }
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::uint64_t{a[i]} * b[i];
  return static_cast<Residue>(acc % a.modulus());
}

// ---------------------------------------------------------------------------
// SubspaceBasis

SubspaceBasis::SubspaceBasis(std::vector<FpVector> rows,
                             std::size_t ambient_dim, Residue modulus)
    : rows_(std::move(rows)), ambient_dim_(ambient_dim), modulus_(modulus) {}

SubspaceBasis SubspaceBasis::zero(std::size_t ambient_dim, Residue modulus) {
  return rref_basis({}, ambient_dim, modulus);
}

SubspaceBasis SubspaceBasis::whole(std::size_t ambient_dim, Residue modulus) {
  std::vector<FpVector> units;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    units.push_back(FpVector::unit(ambient_dim, i, modulus));
  }
  return rref_basis(units, ambient_dim, modulus);
}

std::vector<std::size_t> SubspaceBasis::pivot_columns() const {
  std::vector<std::size_t> pivots;
  pivots.reserve(rows_.size());
  for (const auto& row : rows_) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    pivots.push_back(c);
  }
  return pivots;
}

SubspaceBasis rref_basis(std::span<const FpVector> vectors,
                         std::size_t ambient_dim, Residue p) {
  check_modulus(p);
  if (ambient_dim == 0) {
    throw Error(ErrorCode::invalid_argument, "ambient dimension must be >= 1");
  }
  std::vector<FpVector> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim || v.modulus() != p) {
      throw Error(ErrorCode::dimension_mismatch,
                  "vector does not live in F_" + std::to_string(p) + "^" +
                      std::to_string(ambient_dim));
    }
    if (!v.is_zero()) rows.push_back(v);
  }

  // Gauss-Jordan elimination.
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ambient_dim && rank < rows.size(); ++col) {
    auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank),
                              rows.end(),
                              [col](const FpVector& r) { return r[col] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
    FpVector& lead = rows[rank];
    lead = lead.scaled(inverse_mod(lead[col], p));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][col] != 0) {
        rows[r].add_scaled(lead, p - rows[r][col]);
      }
    }
    ++rank;
  }
  rows.resize(rank, FpVector(ambient_dim, p));
  return SubspaceBasis(std::move(rows), ambient_dim, p);
}

FpVector reduce_modulo(const SubspaceBasis& basis, FpVector v) {
  if (v.size() != basis.ambient_dim() || v.modulus() != basis.modulus()) {
    throw Error(ErrorCode::dimension_mismatch,
                "vector and subspace live in different spaces");
  }
  const auto pivots = basis.pivot_columns();
  const Residue p = basis.modulus();
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const Residue c = v[pivots[r]];
    if (c != 0) v.add_scaled(basis.rows()[r], p - c);
  }
  return v;
}

bool span_contains(const SubspaceBasis& basis, const FpVector& v) {
  return reduce_modulo(basis, v).is_zero();
}

// ---------------------------------------------------------------------------
// LinearMap

LinearMap::LinearMap(std::vector<FpVector> rows, std::size_t source_dim,
                     Residue modulus)
    : rows_(std::move(rows)), source_dim_(source_dim), modulus_(modulus) {
  for (const auto& r : rows_) {
    if (r.size() != source_dim_ || r.modulus() != modulus_) {
      throw Error(ErrorCode::dimension_mismatch, "malformed linear map row");
    }
  }
}

FpVector LinearMap::apply(const FpVector& v) const {
  if (rows_.empty()) {
    throw Error(ErrorCode::dimension_mismatch,
                "cannot evaluate a map into the zero space");
  }
  FpVector out(rows_.size(), modulus_);
  for (std::size_t j = 0; j < rows_.size(); ++j) out.set(j, dot(rows_[j], v));
  return out;
}

LinearMap quotient_map(std::size_t ambient_dim, const SubspaceBasis& sub) {
  if (sub.ambient_dim() != ambient_dim) {
    throw Error(ErrorCode::dimension_mismatch,
                "subspace does not live in the given ambient space");
  }
  const Residue p = sub.modulus();
  const auto pivots = sub.pivot_columns();
  std::vector<std::size_t> free_columns;
  for (std::size_t c = 0, k = 0; c < ambient_dim; ++c) {
    if (k < pivots.size() && pivots[k] == c) {
      ++k;
    } else {
      free_columns.push_back(c);
    }
  }
  // Coordinate j of the image is coordinate free_columns[j] of the reduced
  // representative; as a functional on e_i that is
  //   e_i            if i is free,
  //   -row_r[free]   if i is the pivot of row r.
  std::vector<FpVector> rows;
  rows.reserve(free_columns.size());
  for (std::size_t f : free_columns) {
    FpVector row = FpVector::unit(ambient_dim, f, p);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const Residue c = sub.rows()[r][f];
      if (c != 0) row.set(pivots[r], p - c);
    }
    rows.push_back(std::move(row));
  }
  return LinearMap(std::move(rows), ambient_dim, p);
}

// ---------------------------------------------------------------------------
// Functional

Functional::Functional(const FpVector& coefficients)
    : coefficients_(coefficients) {
  const auto entries = coefficients_.entries();
  const auto it = std::find_if(entries.begin(), entries.end(),
                               [](Residue e) { return e != 0; });
  if (it == entries.end()) {
    throw Error(ErrorCode::invalid_argument, "functional must be nonzero");
  }
  leading_ = static_cast<std::size_t>(it - entries.begin());
  if (*it != 1) {
    coefficients_ = coefficients_.scaled(inverse_mod(*it, modulus()));
  }
}

SubspaceBasis Functional::kernel() const {
  // e_j - c_j e_lead for every j != lead spans the kernel.
  const std::size_t m = dim();
  const Residue p = modulus();
  std::vector<FpVector> spanning;
  spanning.reserve(m - 1);
  for (std::size_t j = 0; j < m; ++j) {
    if (j == leading_) continue;
    FpVector v = FpVector::unit(m, j, p);
    v.set(leading_, (p - coefficients_[j]) % p);
    spanning.push_back(std::move(v));
  }
  return rref_basis(spanning, m, p);
}

std::vector<Functional> enumerate_hyperplanes(std::size_t m, Residue p) {
  check_modulus(p);
  std::vector<Functional> out;
  if (m == 0) return out;
  // Canonical vectors with more leading zeros sort first; within a fixed
  // leading position the tail runs through F_p^(m-lead-1) in odometer order.
  for (std::size_t lead = m; lead-- > 0;) {
    std::vector<Residue> entries(m, 0);
    entries[lead] = 1;
    while (true) {
      out.emplace_back(FpVector(entries, p));
      bool carry = true;
      for (std::size_t pos = m; carry && pos > lead + 1;) {
        --pos;
        if (++entries[pos] == p) {
          entries[pos] = 0;
        } else {
          carry = false;
        }
      }
      if (carry) break;
    }
  }
  return out;
}

}  // namespace fermat
