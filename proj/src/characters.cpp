#include "fermat/characters.hpp"

#include <map>

#include "fermat/error.hpp"

namespace fermat {

namespace {

void check_character_budget(const FermatGroup& group, bool force) {
  if (!force && integer_pow(group.p(), group.n()) > kCharacterBudget) {
    throw Error(ErrorCode::budget_exceeded,
                "p^n = " + integer_pow(group.p(), group.n()).str() +
                    " characters exceeds the enumeration budget of " +
                    std::to_string(kCharacterBudget) + " (use --force)");
  }
}

}  // namespace

CharacterVector make_character(FpVector exponents) {
  const Residue p = exponents.modulus();
  std::uint64_t sum = 0;
  for (Residue a : exponents.entries()) sum += a;
  const auto a0 = static_cast<Residue>((p - sum % p) % p);
  return {std::move(exponents), a0};
}

std::vector<CharacterVector> enumerate_characters(const FermatGroup& group,
                                                  bool force) {
  check_character_budget(group, force);
  const std::size_t n = group.n();
  const Residue p = group.p();
  std::vector<CharacterVector> out;
  out.reserve(to_u64(integer_pow(p, n)));
  std::vector<Residue> a(n, 0);
  while (true) {
    out.push_back(make_character(FpVector(a, p)));
    std::size_t pos = n;
    bool carry = true;
    while (carry && pos > 0) {
      --pos;
      if (++a[pos] == p) {
        a[pos] = 0;
      } else {
        carry = false;
      }
    }
    if (carry) break;
  }
  return out;
}

std::vector<KernelClass> group_by_kernel(const FermatGroup& group, bool force) {
  std::map<Functional, std::vector<CharacterVector>> buckets;
  for (auto& chi : enumerate_characters(group, force)) {
    if (chi.is_trivial()) continue;
    Functional key(chi.exponents);
    buckets[key].push_back(std::move(chi));
  }
  std::vector<KernelClass> classes;
  classes.reserve(buckets.size());
  for (auto& [kernel, members] : buckets) {
    if (members.size() != group.p() - 1) {
      throw Error(ErrorCode::internal, "kernel class of unexpected size");
    }
    KernelClass kc{kernel, std::move(members), {}};
    kc.block_dimension = weight_block_dimension(group, kc);
    classes.push_back(std::move(kc));
  }
  return classes;
}

GenusValue weight_block_dimension(const FermatGroup& group,
                                  const KernelClass& kernel_class) {
  return genus_quotient(group, kernel_class.kernel.kernel());
}

}  // namespace fermat
