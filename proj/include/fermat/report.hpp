#pragma once

// Machine-readable documents for decompositions, Prym verdicts and character
// tables, with JSON, CSV and Markdown renderings.
//
// Output is byte-deterministic: JSON keys are sorted, factors keep the
// engine's order (|T|, then T bitmask, then functional), and the JSON form
// parses back to an equal document.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fermat/characters.hpp"
#include "fermat/decomposition.hpp"

namespace fermat {

inline constexpr std::uint64_t kSchemaVersion = 1;

enum class Format { json, csv, markdown };

[[nodiscard]] std::optional<Format> parse_format(std::string_view text);

struct FactorRecord {
  std::vector<std::uint64_t> removed;
  std::uint64_t removed_bitmask = 0;
  std::string functional;  // comma-joined canonical residues
  std::uint64_t dimension = 0;
  std::uint64_t kernel_order = 0;
  std::string prym_status;
  std::optional<std::uint64_t> prym_exponent;
  std::string rationale;
  std::uint64_t intermediate_checks = 0;

  friend bool operator==(const FactorRecord&, const FactorRecord&) = default;
};

struct IdentityRecord {
  std::string name;
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  bool pass = false;

  friend bool operator==(const IdentityRecord&, const IdentityRecord&) = default;
};

struct KernelClassRecord {
  std::string kernel;
  std::vector<std::string> members;
  std::uint64_t block_dimension = 0;

  friend bool operator==(const KernelClassRecord&,
                         const KernelClassRecord&) = default;
};

struct HumbertEdgeRecord {
  std::uint64_t prym_exponent = 0;
  std::uint64_t kernel_order_base = 0;
  std::uint64_t kernel_order_power = 0;
  std::string kernel_order;  // "base^power"
  bool kernel_order_checked = false;

  friend bool operator==(const HumbertEdgeRecord&,
                         const HumbertEdgeRecord&) = default;
};

struct ReportDocument {
  std::uint64_t schema_version = kSchemaVersion;
  std::string command;  // decompose | prym | characters | humbert-edge
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  std::uint64_t genus = 0;
  std::uint64_t total_dimension = 0;
  std::vector<FactorRecord> factors;
  std::map<std::uint64_t, std::uint64_t> multiplicity;
  std::map<std::uint64_t, std::uint64_t> census;
  std::vector<IdentityRecord> identities;
  std::vector<KernelClassRecord> kernel_classes;
  std::optional<HumbertEdgeRecord> humbert_edge;

  [[nodiscard]] bool all_identities_pass() const;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

[[nodiscard]] IdentityRecord to_record(const IdentityCheck& check);

// `command` is "decompose" or "prym"; both carry the same data.
[[nodiscard]] ReportDocument decomposition_document(
    const DecompositionReport& report, std::string command = "decompose");

[[nodiscard]] ReportDocument character_document(
    const FermatGroup& group, const std::vector<KernelClass>& classes);

[[nodiscard]] ReportDocument humbert_edge_document(
    const DecompositionReport& report, const HumbertEdgeSummary& summary);

[[nodiscard]] std::string to_json(const ReportDocument& doc);
// Throws Error{parse_error} on malformed input or unknown schema_version.
[[nodiscard]] ReportDocument from_json(std::string_view text);

[[nodiscard]] std::string render(const ReportDocument& doc, Format format);

// RFC 4180 quoting when needed.
[[nodiscard]] std::string csv_field(std::string_view field);

}  // namespace fermat
