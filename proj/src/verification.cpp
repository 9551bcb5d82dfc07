#include "fermat/verification.hpp"

#include <sstream>

#include <json.hpp>

#include "fermat/error.hpp"

namespace fermat {

bool VerificationSummary::passed() const {
  for (const auto& e : entries) {
    if (!e.identity.pass) return false;
  }
  return true;
}

VerificationSummary run_verification(std::size_t n_lo, std::size_t n_hi,
                                     std::span<const Residue> primes,
                                     VerifyOptions options) {
  if (primes.empty()) {
    throw Error(ErrorCode::invalid_argument, "no primes given");
  }
  for (Residue p : primes) require_prime(p);
  if (n_lo < 2 || n_lo > n_hi || n_hi > kMaxN) {
    throw Error(ErrorCode::invalid_argument,
                "malformed n range " + std::to_string(n_lo) + ".." +
                    std::to_string(n_hi));
  }

  VerificationSummary summary;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    for (Residue p : primes) {
      if (!options.force && hyperplane_count(n, p) > kHyperplaneBudget) {
        summary.skipped.emplace_back(n, p);
        continue;
      }
      const auto report = decompose(n, p, {options.force});
      for (const auto& check : {verify_dimension_identity(report),
                                verify_partition_identity(report),
                                verify_multiplicity_formula(report)}) {
        summary.entries.push_back({n, p, to_record(check)});
      }
      if (!options.force && integer_pow(p, n) > kCharacterBudget) {
        summary.skipped.emplace_back(n, p);
        continue;
      }
      const auto group = build_group(n, p);
      const auto doc = character_document(group, group_by_kernel(group, true));
      for (const auto& id : doc.identities) summary.entries.push_back({n, p, id});
    }
  }
  return summary;
}

std::string render(const VerificationSummary& summary, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::json: {
      nlohmann::json j;
      j["schema_version"] = kSchemaVersion;
      j["command"] = "verify";
      j["passed"] = summary.passed();
      nlohmann::json entries = nlohmann::json::array();
      for (const auto& e : summary.entries) {
        entries.push_back({{"n", e.n},
                           {"p", e.p},
                           {"identity", e.identity.name},
                           {"lhs", e.identity.lhs},
                           {"rhs", e.identity.rhs},
                           {"pass", e.identity.pass}});
      }
      j["checks"] = std::move(entries);
      nlohmann::json skipped = nlohmann::json::array();
      for (const auto& [n, p] : summary.skipped) {
        skipped.push_back({{"n", n}, {"p", p}});
      }
      j["skipped"] = std::move(skipped);
      return j.dump(2) + "\n";
    }
    case Format::csv:
      out << "n,p,identity,lhs,rhs,pass\n";
      for (const auto& e : summary.entries) {
        out << e.n << ',' << e.p << ',' << e.identity.name << ','
            << e.identity.lhs << ',' << e.identity.rhs << ','
            << (e.identity.pass ? "pass" : "FAIL") << '\n';
      }
      return out.str();
    case Format::markdown:
      out << "| n | p | identity | lhs | rhs | result |\n"
          << "|---|---|---|---|---|---|\n";
      for (const auto& e : summary.entries) {
        out << "| " << e.n << " | " << e.p << " | " << e.identity.name << " | "
            << e.identity.lhs << " | " << e.identity.rhs << " | "
            << (e.identity.pass ? "pass" : "FAIL") << " |\n";
      }
      for (const auto& [n, p] : summary.skipped) {
        out << "\nskipped (n, p) = (" << n << ", " << p
            << "): over the enumeration budget";
      }
      if (!summary.skipped.empty()) out << '\n';
      out << "\n" << summary.entries.size() << " checks, "
          << (summary.passed() ? "all passed" : "FAILURES") << "\n";
      return out.str();
  }
  return out.str();
}

}  // namespace fermat
