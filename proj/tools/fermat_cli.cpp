// fermat-decomp: command-line front end over the C API in fermat/fermat.h.
//
// Exit codes: 0 success, 1 a checked identity failed, 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fermat/fermat.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct DocumentDeleter {
  void operator()(fermat_document* d) const { fermat_document_free(d); }
};
struct VerificationDeleter {
  void operator()(fermat_verification* v) const { fermat_verification_free(v); }
};
struct StringDeleter {
  void operator()(char* s) const { fermat_string_free(s); }
};
using DocumentPtr = std::unique_ptr<fermat_document, DocumentDeleter>;
using VerificationPtr = std::unique_ptr<fermat_verification, VerificationDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

struct Options {
  std::uint32_t n = 0;
  std::uint32_t p = 0;
  std::string n_range;
  std::vector<std::uint32_t> primes;
  std::string format = "json";
  std::string out_path;
  bool force = false;
};

int report_error(fermat_status status) {
  std::cerr << "error: " << fermat_last_error() << '\n';
  return status == FERMAT_ERR_INTERNAL ? kExitFailed : kExitUsage;
}

std::optional<fermat_format> to_format(const std::string& name) {
  if (name == "json") return FERMAT_FORMAT_JSON;
  if (name == "csv") return FERMAT_FORMAT_CSV;
  if (name == "md" || name == "markdown") return FERMAT_FORMAT_MARKDOWN;
  return std::nullopt;
}

bool emit(const Options& opts, const char* text) {
  if (opts.out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return static_cast<bool>(std::cout);
  }
  std::ofstream file(opts.out_path, std::ios::binary);
  file << text;
  if (!file) {
    std::cerr << "error: cannot write " << opts.out_path << '\n';
    return false;
  }
  return true;
}

using DocumentBuilder = fermat_status (*)(const Options&, fermat_document**);

int run_document(const Options& opts, DocumentBuilder build) {
  const auto format = to_format(opts.format);
  if (!format) {
    std::cerr << "error: unknown format '" << opts.format
              << "' (expected json, csv or md)\n";
    return kExitUsage;
  }
  fermat_document* raw = nullptr;
  if (auto st = build(opts, &raw); st != FERMAT_OK) return report_error(st);
  DocumentPtr doc(raw);

  char* text = nullptr;
  if (auto st = fermat_document_render(doc.get(), *format, &text);
      st != FERMAT_OK) {
    return report_error(st);
  }
  StringPtr rendered(text);
  if (!emit(opts, rendered.get())) return kExitUsage;
  if (!fermat_document_identities_pass(doc.get())) {
    std::cerr << "error: a structural identity failed for (n, p) = (" << opts.n
              << ", " << opts.p << ")\n";
    return kExitFailed;
  }
  return kExitOk;
}

// "a..b" or a single "a".
std::optional<std::pair<std::uint32_t, std::uint32_t>> parse_range(
    const std::string& text) {
  static const std::regex range(R"(^\s*(\d{1,9})\s*(?:\.\.\s*(\d{1,9})\s*)?$)");
  std::smatch m;
  if (!std::regex_match(text, m, range)) return std::nullopt;
  const auto lo = static_cast<std::uint32_t>(std::stoul(m[1].str()));
  const auto hi =
      m[2].matched ? static_cast<std::uint32_t>(std::stoul(m[2].str())) : lo;
  if (lo > hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

int run_verify(const Options& opts) {
  const auto format = to_format(opts.format);
  if (!format) {
    std::cerr << "error: unknown format '" << opts.format << "'\n";
    return kExitUsage;
  }
  const auto range = parse_range(opts.n_range);
  if (!range) {
    std::cerr << "error: malformed --n range '" << opts.n_range
              << "' (expected a..b)\n";
    return kExitUsage;
  }
  fermat_verification* raw = nullptr;
  if (auto st = fermat_verify(range->first, range->second, opts.primes.data(),
                              opts.primes.size(), opts.force, &raw);
      st != FERMAT_OK) {
    return report_error(st);
  }
  VerificationPtr verification(raw);
  char* text = nullptr;
  if (auto st = fermat_verification_render(verification.get(), *format, &text);
      st != FERMAT_OK) {
    return report_error(st);
  }
  StringPtr rendered(text);
  if (!emit(opts, rendered.get())) return kExitUsage;
  if (!fermat_verification_passed(verification.get())) {
    std::cerr << "error: verification failed (see FAIL rows)\n";
    return kExitFailed;
  }
  return kExitOk;
}

int run_genus(const Options& opts) {
  char* text = nullptr;
  if (auto st = fermat_genus(opts.n, opts.p, &text); st != FERMAT_OK) {
    return report_error(st);
  }
  StringPtr genus(text);
  const std::string line = std::string(genus.get()) + "\n";
  return emit(opts, line.c_str()) ? kExitOk : kExitUsage;
}

void add_common(CLI::App* cmd, Options& opts, bool needs_p) {
  cmd->add_option("--n", opts.n, "Type parameter n")->required();
  if (needs_p) cmd->add_option("--p", opts.p, "Prime p")->required();
  cmd->add_option("--format", opts.format, "Output format: json, csv or md");
  cmd->add_option("--out", opts.out_path, "Write output to FILE");
  cmd->add_flag("--force", opts.force, "Ignore the enumeration budget");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isogeny decomposition of Jacobians of generalized Fermat curves"};
  app.require_subcommand(1);
  Options opts;

  auto* decompose = app.add_subcommand("decompose", "Factors of J(X_(n,p))");
  add_common(decompose, opts, true);
  auto* prym = app.add_subcommand("prym", "Prym-Tyurin verdict per factor");
  add_common(prym, opts, true);
  auto* characters =
      app.add_subcommand("characters", "Character kernel classes and blocks");
  add_common(characters, opts, true);
  auto* humbert = app.add_subcommand("humbert-edge", "p = 2 summary");
  add_common(humbert, opts, false);
  auto* genus = app.add_subcommand("genus", "Genus of X_(n,p)");
  genus->add_option("--n", opts.n, "Type parameter n")->required();
  genus->add_option("--p", opts.p, "Prime p")->required();
  genus->add_option("--out", opts.out_path, "Write output to FILE");

  auto* verify = app.add_subcommand("verify", "Check identities over a sweep");
  verify->add_option("--n", opts.n_range, "Range a..b")->required();
  verify->add_option("--primes", opts.primes, "Comma-separated primes")
      ->required()
      ->delimiter(',');
  verify->add_option("--format", opts.format, "Output format: json, csv or md");
  verify->add_option("--out", opts.out_path, "Write output to FILE");
  verify->add_flag("--force", opts.force, "Ignore the enumeration budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*decompose) {
    return run_document(opts, [](const Options& o, fermat_document** out) {
      return fermat_decompose(o.n, o.p, o.force, out);
    });
  }
  if (*prym) {
    return run_document(opts, [](const Options& o, fermat_document** out) {
      return fermat_prym(o.n, o.p, o.force, out);
    });
  }
  if (*characters) {
    return run_document(opts, [](const Options& o, fermat_document** out) {
      return fermat_characters(o.n, o.p, o.force, out);
    });
  }
  if (*humbert) {
    opts.p = 2;
    return run_document(opts, [](const Options& o, fermat_document** out) {
      return fermat_humbert_edge(o.n, o.force, out);
    });
  }
  if (*genus) return run_genus(opts);
  if (*verify) return run_verify(opts);
  return kExitUsage;
}
