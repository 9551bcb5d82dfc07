#include "fermat/report.hpp"

#include <sstream>

#include <json.hpp>

#include "fermat/error.hpp"

namespace fermat {

using nlohmann::json;

std::optional<Format> parse_format(std::string_view text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "md" || text == "markdown") return Format::markdown;
  return std::nullopt;
}

bool ReportDocument::all_identities_pass() const {
  for (const auto& id : identities) {
    if (!id.pass) return false;
  }
  return true;
}

IdentityRecord to_record(const IdentityCheck& check) {
  return {check.name, to_u64(check.lhs), to_u64(check.rhs), check.pass};
}

ReportDocument decomposition_document(const DecompositionReport& report,
                                      std::string command) {
  ReportDocument doc;
  doc.command = std::move(command);
  doc.n = report.n;
  doc.p = report.p;
  doc.genus = to_u64(report.genus);
  doc.total_dimension = to_u64(report.total_dimension);
  for (const auto& f : report.factors) {
    FactorRecord rec;
    for (auto i : f.removed.indices()) rec.removed.push_back(i);
    rec.removed_bitmask = f.removed.bits();
    rec.functional = f.functional.to_string();
    rec.dimension = f.dimension;
    rec.kernel_order = to_u64(f.kernel_order);
    rec.prym_status = std::string(to_string(f.verdict.status));
    if (f.verdict.exponent) rec.prym_exponent = to_u64(*f.verdict.exponent);
    rec.rationale = f.verdict.rationale;
    rec.intermediate_checks = f.verdict.intermediate_checks;
    doc.factors.push_back(std::move(rec));
  }
  doc.multiplicity = report.multiplicity;
  for (const auto& [t, count] : report.census) doc.census[t] = count;
  doc.identities = {to_record(verify_dimension_identity(report)),
                    to_record(verify_partition_identity(report)),
                    to_record(verify_multiplicity_formula(report))};
  return doc;
}

ReportDocument character_document(const FermatGroup& group,
                                  const std::vector<KernelClass>& classes) {
  ReportDocument doc;
  doc.command = "characters";
  doc.n = group.n();
  doc.p = group.p();
  doc.genus = genus_gfc(group.n(), group.p()).to_u64();
  std::uint64_t sum = 0;
  std::uint64_t full_classes = 0;
  for (const auto& kc : classes) {
    KernelClassRecord rec;
    rec.kernel = kc.kernel.to_string();
    for (const auto& chi : kc.members) {
      rec.members.push_back(chi.exponents.to_string());
    }
    rec.block_dimension = kc.block_dimension.to_u64();
    sum += rec.block_dimension;
    if (kc.members.size() == group.p() - 1) ++full_classes;
    doc.kernel_classes.push_back(std::move(rec));
  }
  doc.total_dimension = sum;
  doc.identities = {
      {"character_block_sum", sum, doc.genus, sum == doc.genus},
      {"kernel_class_count", classes.size(),
       to_u64(hyperplane_count(group.n(), group.p())),
       hyperplane_count(group.n(), group.p()) == classes.size()},
      {"kernel_class_size", full_classes, classes.size(),
       full_classes == classes.size()},
  };
  return doc;
}

ReportDocument humbert_edge_document(const DecompositionReport& report,
                                     const HumbertEdgeSummary& summary) {
  ReportDocument doc = decomposition_document(report, "humbert-edge");
  HumbertEdgeRecord he;
  he.prym_exponent = to_u64(summary.prym_exponent);
  he.kernel_order_base = to_u64(summary.kernel_order_base);
  he.kernel_order_power = to_u64(summary.kernel_order_power);
  he.kernel_order = summary.kernel_order_formula;
  he.kernel_order_checked = summary.kernel_order_checked;
  doc.humbert_edge = he;
  return doc;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

json count_map_to_json(const std::map<std::uint64_t, std::uint64_t>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

std::map<std::uint64_t, std::uint64_t> count_map_from_json(const json& j) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& [k, v] : j.items()) {
    std::size_t used = 0;
    const auto key = std::stoull(k, &used);
    if (used != k.size()) throw std::invalid_argument("bad map key " + k);
    out[key] = v.get<std::uint64_t>();
  }
  return out;
}

}  // namespace

std::string to_json(const ReportDocument& doc) {
  json j;
  j["schema_version"] = doc.schema_version;
  j["command"] = doc.command;
  j["parameters"] = {{"n", doc.n}, {"p", doc.p}};
  j["genus"] = doc.genus;
  j["total_dimension"] = doc.total_dimension;

  json factors = json::array();
  json verdicts = json::array();
  for (const auto& f : doc.factors) {
    factors.push_back({{"T", f.removed},
                       {"T_bitmask", f.removed_bitmask},
                       {"functional", f.functional},
                       {"dimension", f.dimension},
                       {"kernel_order", f.kernel_order},
                       {"prym_status", f.prym_status}});
    json v = {{"T_bitmask", f.removed_bitmask},
              {"functional", f.functional},
              {"status", f.prym_status},
              {"exponent", nullptr},
              {"rationale", f.rationale},
              {"intermediate_checks", f.intermediate_checks}};
    if (f.prym_exponent) v["exponent"] = *f.prym_exponent;
    verdicts.push_back(std::move(v));
  }
  j["factors"] = std::move(factors);
  j["verdicts"] = std::move(verdicts);
  j["multiplicity_table"] = count_map_to_json(doc.multiplicity);
  j["census"] = count_map_to_json(doc.census);

  json identities = json::array();
  for (const auto& id : doc.identities) {
    identities.push_back(
        {{"name", id.name}, {"lhs", id.lhs}, {"rhs", id.rhs}, {"pass", id.pass}});
  }
  j["identities"] = std::move(identities);

  json classes = json::array();
  for (const auto& kc : doc.kernel_classes) {
    classes.push_back({{"kernel", kc.kernel},
                       {"members", kc.members},
                       {"block_dimension", kc.block_dimension}});
  }
  j["kernel_classes"] = std::move(classes);

  if (doc.humbert_edge) {
    const auto& he = *doc.humbert_edge;
    j["humbert_edge"] = {{"prym_exponent", he.prym_exponent},
                         {"kernel_order", he.kernel_order},
                         {"kernel_order_base", he.kernel_order_base},
                         {"kernel_order_power", he.kernel_order_power},
                         {"kernel_order_checked", he.kernel_order_checked}};
  } else {
    j["humbert_edge"] = nullptr;
  }
  return j.dump(2) + "\n";
}

ReportDocument from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    ReportDocument doc;
    doc.schema_version = j.at("schema_version").get<std::uint64_t>();
    if (doc.schema_version != kSchemaVersion) {
      throw Error(ErrorCode::parse_error,
                  "unsupported schema_version " +
                      std::to_string(doc.schema_version));
    }
    doc.command = j.at("command").get<std::string>();
    doc.n = j.at("parameters").at("n").get<std::uint64_t>();
    doc.p = j.at("parameters").at("p").get<std::uint64_t>();
    doc.genus = j.at("genus").get<std::uint64_t>();
    doc.total_dimension = j.at("total_dimension").get<std::uint64_t>();

    const auto& factors = j.at("factors");
    const auto& verdicts = j.at("verdicts");
    if (factors.size() != verdicts.size()) {
      throw Error(ErrorCode::parse_error, "factors and verdicts differ in length");
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto& f = factors[i];
      const auto& v = verdicts[i];
      FactorRecord rec;
      rec.removed = f.at("T").get<std::vector<std::uint64_t>>();
      rec.removed_bitmask = f.at("T_bitmask").get<std::uint64_t>();
      rec.functional = f.at("functional").get<std::string>();
      rec.dimension = f.at("dimension").get<std::uint64_t>();
      rec.kernel_order = f.at("kernel_order").get<std::uint64_t>();
      rec.prym_status = f.at("prym_status").get<std::string>();
      if (v.at("T_bitmask").get<std::uint64_t>() != rec.removed_bitmask ||
          v.at("functional").get<std::string>() != rec.functional ||
          v.at("status").get<std::string>() != rec.prym_status) {
        throw Error(ErrorCode::parse_error,
                    "verdict " + std::to_string(i) + " does not match its factor");
      }
      if (!v.at("exponent").is_null()) {
        rec.prym_exponent = v.at("exponent").get<std::uint64_t>();
      }
      rec.rationale = v.at("rationale").get<std::string>();
      rec.intermediate_checks = v.at("intermediate_checks").get<std::uint64_t>();
      doc.factors.push_back(std::move(rec));
    }
    doc.multiplicity = count_map_from_json(j.at("multiplicity_table"));
    doc.census = count_map_from_json(j.at("census"));
    for (const auto& id : j.at("identities")) {
      doc.identities.push_back({id.at("name").get<std::string>(),
                                id.at("lhs").get<std::uint64_t>(),
                                id.at("rhs").get<std::uint64_t>(),
                                id.at("pass").get<bool>()});
    }
    for (const auto& kc : j.at("kernel_classes")) {
      doc.kernel_classes.push_back(
          {kc.at("kernel").get<std::string>(),
           kc.at("members").get<std::vector<std::string>>(),
           kc.at("block_dimension").get<std::uint64_t>()});
    }
    if (const auto& he = j.at("humbert_edge"); !he.is_null()) {
      doc.humbert_edge = HumbertEdgeRecord{
          he.at("prym_exponent").get<std::uint64_t>(),
          he.at("kernel_order_base").get<std::uint64_t>(),
          he.at("kernel_order_power").get<std::uint64_t>(),
          he.at("kernel_order").get<std::string>(),
          he.at("kernel_order_checked").get<bool>()};
    }
    return doc;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("malformed report: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// CSV / Markdown

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string set_string(const std::vector<std::uint64_t>& indices) {
  std::vector<std::string> parts;
  for (auto i : indices) parts.push_back(std::to_string(i));
  return "{" + join(parts, ",") + "}";
}

std::string exponent_string(const FactorRecord& f) {
  return f.prym_exponent ? std::to_string(*f.prym_exponent) : "";
}

void markdown_row(std::ostringstream& out, const std::vector<std::string>& cells) {
  out << "|";
  for (const auto& c : cells) out << ' ' << c << " |";
  out << '\n';
}

void markdown_header(std::ostringstream& out,
                     const std::vector<std::string>& cells) {
  markdown_row(out, cells);
  out << "|";
  for (std::size_t i = 0; i < cells.size(); ++i) out << "---|";
  out << '\n';
}

void markdown_counts(std::ostringstream& out, const std::string& title,
                     const std::string& key, const std::string& value,
                     const std::map<std::uint64_t, std::uint64_t>& counts) {
  out << "\n## " << title << "\n\n";
  markdown_header(out, {key, value});
  for (const auto& [k, v] : counts) {
    markdown_row(out, {std::to_string(k), std::to_string(v)});
  }
}

void markdown_identities(std::ostringstream& out, const ReportDocument& doc) {
  out << "\n## Identities\n\n";
  markdown_header(out, {"identity", "lhs", "rhs", "result"});
  for (const auto& id : doc.identities) {
    markdown_row(out, {id.name, std::to_string(id.lhs), std::to_string(id.rhs),
                       id.pass ? "pass" : "FAIL"});
  }
}

std::string render_factors_csv(const ReportDocument& doc) {
  std::ostringstream out;
  out << "T_bitmask,functional,dimension,kernel_order,prym_status\n";
  for (const auto& f : doc.factors) {
    out << f.removed_bitmask << ',' << csv_field(f.functional) << ','
        << f.dimension << ',' << f.kernel_order << ',' << f.prym_status << '\n';
  }
  return out.str();
}

std::string render_prym_csv(const ReportDocument& doc) {
  std::ostringstream out;
  out << "T_bitmask,functional,dimension,kernel_order,prym_status,"
         "prym_exponent,rationale\n";
  for (const auto& f : doc.factors) {
    out << f.removed_bitmask << ',' << csv_field(f.functional) << ','
        << f.dimension << ',' << f.kernel_order << ',' << f.prym_status << ','
        << exponent_string(f) << ',' << csv_field(f.rationale) << '\n';
  }
  return out.str();
}

std::string render_characters_csv(const ReportDocument& doc) {
  std::ostringstream out;
  out << "kernel,members,block_dimension\n";
  for (const auto& kc : doc.kernel_classes) {
    out << csv_field(kc.kernel) << ',' << csv_field(join(kc.members, ";"))
        << ',' << kc.block_dimension << '\n';
  }
  return out.str();
}

std::string render_decomposition_md(const ReportDocument& doc) {
  std::ostringstream out;
  out << "# Jacobian decomposition for (n, p) = (" << doc.n << ", " << doc.p
      << ")\n\n";
  out << "genus: " << doc.genus << ", total dimension: " << doc.total_dimension
      << ", factors: " << doc.factors.size() << "\n\n";
  markdown_header(out, {"T", "functional", "dimension", "kernel order",
                        "Prym-Tyurin status"});
  for (const auto& f : doc.factors) {
    markdown_row(out, {set_string(f.removed), f.functional,
                       std::to_string(f.dimension),
                       std::to_string(f.kernel_order), f.prym_status});
  }
  markdown_counts(out, "Multiplicities", "dimension", "factors",
                  doc.multiplicity);
  markdown_counts(out, "Hyperplane census", "generators in H", "hyperplanes",
                  doc.census);
  if (doc.humbert_edge) {
    const auto& he = *doc.humbert_edge;
    out << "\n## Humbert-Edge summary\n\n";
    out << "- Prym-Tyurin exponent of every factor: " << he.prym_exponent
        << "\n";
    out << "- kernel order of the sum map: " << he.kernel_order
        << (he.kernel_order_checked ? "" : " (reported, not checked)") << "\n";
  }
  markdown_identities(out, doc);
  return out.str();
}

std::string render_prym_md(const ReportDocument& doc) {
  std::ostringstream out;
  out << "# Prym-Tyurin verdicts for (n, p) = (" << doc.n << ", " << doc.p
      << ")\n\n";
  markdown_header(out, {"T", "functional", "dimension", "kernel order",
                        "status", "exponent", "rationale"});
  for (const auto& f : doc.factors) {
    markdown_row(out, {set_string(f.removed), f.functional,
                       std::to_string(f.dimension),
                       std::to_string(f.kernel_order), f.prym_status,
                       exponent_string(f), f.rationale});
  }
  return out.str();
}

std::string render_characters_md(const ReportDocument& doc) {
  std::ostringstream out;
  out << "# Character kernel classes for (n, p) = (" << doc.n << ", " << doc.p
      << ")\n\n";
  markdown_header(out, {"kernel", "characters", "block dimension"});
  for (const auto& kc : doc.kernel_classes) {
    markdown_row(out, {kc.kernel, join(kc.members, "; "),
                       std::to_string(kc.block_dimension)});
  }
  out << "\nclasses: " << doc.kernel_classes.size()
      << ", block dimension sum: " << doc.total_dimension
      << ", genus: " << doc.genus << "\n";
  markdown_identities(out, doc);
  return out.str();
}

}  // namespace

std::string render(const ReportDocument& doc, Format format) {
  if (format == Format::json) return to_json(doc);
  const bool characters = doc.command == "characters";
  const bool prym = doc.command == "prym";
  if (format == Format::csv) {
    if (characters) return render_characters_csv(doc);
    return prym ? render_prym_csv(doc) : render_factors_csv(doc);
  }
  if (characters) return render_characters_md(doc);
  return prym ? render_prym_md(doc) : render_decomposition_md(doc);
}

}  // namespace fermat
