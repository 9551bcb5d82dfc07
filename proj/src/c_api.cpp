#include "fermat/fermat.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "fermat/characters.hpp"
#include "fermat/decomposition.hpp"
#include "fermat/error.hpp"
#include "fermat/report.hpp"
#include "fermat/verification.hpp"

struct fermat_document {
  fermat::ReportDocument doc;
};

struct fermat_verification {
  fermat::VerificationSummary summary;
};

namespace {

thread_local std::string g_last_error;

fermat_status to_status(fermat::ErrorCode code) {
  using fermat::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return FERMAT_ERR_INVALID_ARGUMENT;
    case ErrorCode::not_prime: return FERMAT_ERR_NOT_PRIME;
    case ErrorCode::budget_exceeded: return FERMAT_ERR_BUDGET_EXCEEDED;
    case ErrorCode::dimension_mismatch: return FERMAT_ERR_DIMENSION_MISMATCH;
    case ErrorCode::parse_error: return FERMAT_ERR_PARSE;
    case ErrorCode::internal: return FERMAT_ERR_INTERNAL;
  }
  return FERMAT_ERR_INTERNAL;
}

fermat_status fail(fermat_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename Fn>
fermat_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const fermat::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(FERMAT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FERMAT_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fermat::Format to_format(fermat_format format) {
  switch (format) {
    case FERMAT_FORMAT_JSON: return fermat::Format::json;
    case FERMAT_FORMAT_CSV: return fermat::Format::csv;
    case FERMAT_FORMAT_MARKDOWN: return fermat::Format::markdown;
  }
  throw fermat::Error(fermat::ErrorCode::invalid_argument, "unknown format");
}

template <typename Build>
fermat_status make_document(fermat_document** out, Build&& build) {
  if (!out) return fail(FERMAT_ERR_NULL_POINTER, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    *out = new fermat_document{build()};
    return FERMAT_OK;
  });
}

}  // namespace

extern "C" {

const char* fermat_version(void) { return "1.0.0"; }

const char* fermat_status_name(fermat_status status) {
  switch (status) {
    case FERMAT_OK: return "ok";
    case FERMAT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case FERMAT_ERR_NOT_PRIME: return "not prime";
    case FERMAT_ERR_BUDGET_EXCEEDED: return "budget exceeded";
    case FERMAT_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case FERMAT_ERR_PARSE: return "parse error";
    case FERMAT_ERR_INTERNAL: return "internal error";
    case FERMAT_ERR_NULL_POINTER: return "null pointer";
    case FERMAT_ERR_OUT_OF_RANGE: return "out of range";
  }
  return "unknown status";
}

const char* fermat_last_error(void) { return g_last_error.c_str(); }

void fermat_string_free(char* str) { std::free(str); }

fermat_status fermat_genus(uint32_t n, uint32_t p, char** out) {
  if (!out) return fail(FERMAT_ERR_NULL_POINTER, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    *out = copy_string(fermat::genus_gfc(n, p).to_string());
    return FERMAT_OK;
  });
}

fermat_status fermat_decompose(uint32_t n, uint32_t p, int force,
                               fermat_document** out) {
  return make_document(out, [&] {
    return fermat::decomposition_document(
        fermat::decompose(n, p, {force != 0}), "decompose");
  });
}

fermat_status fermat_prym(uint32_t n, uint32_t p, int force,
                          fermat_document** out) {
  return make_document(out, [&] {
    return fermat::decomposition_document(
        fermat::decompose(n, p, {force != 0}), "prym");
  });
}

fermat_status fermat_characters(uint32_t n, uint32_t p, int force,
                                fermat_document** out) {
  return make_document(out, [&] {
    const auto group = fermat::build_group(n, p);
    return fermat::character_document(
        group, fermat::group_by_kernel(group, force != 0));
  });
}

fermat_status fermat_humbert_edge(uint32_t n, int force, fermat_document** out) {
  return make_document(out, [&] {
    if (n < 3) {
      throw fermat::Error(fermat::ErrorCode::invalid_argument,
                          "Humbert-Edge summary needs n >= 3");
    }
    const auto report = fermat::decompose(n, 2, {force != 0});
    return fermat::humbert_edge_document(report,
                                         fermat::humbert_edge_summary(report));
  });
}

fermat_status fermat_document_from_json(const char* json,
                                        fermat_document** out) {
  if (!json) return fail(FERMAT_ERR_NULL_POINTER, "null json");
  return make_document(out, [&] { return fermat::from_json(json); });
}

void fermat_document_free(fermat_document* doc) { delete doc; }

fermat_status fermat_document_render(const fermat_document* doc,
                                     fermat_format format, char** out) {
  if (!doc || !out) return fail(FERMAT_ERR_NULL_POINTER, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = copy_string(fermat::render(doc->doc, to_format(format)));
    return FERMAT_OK;
  });
}

size_t fermat_document_factor_count(const fermat_document* doc) {
  return doc ? doc->doc.factors.size() : 0;
}

fermat_status fermat_document_factor(const fermat_document* doc, size_t index,
                                     fermat_factor_info* out) {
  if (!doc || !out) return fail(FERMAT_ERR_NULL_POINTER, "null argument");
  if (index >= doc->doc.factors.size()) {
    return fail(FERMAT_ERR_OUT_OF_RANGE,
                "factor index " + std::to_string(index) + " out of range");
  }
  const auto& f = doc->doc.factors[index];
  return guarded([&] {
    const auto status = fermat::parse_prym_status(f.prym_status);
    if (!status) {
      throw fermat::Error(fermat::ErrorCode::parse_error,
                          "unknown Prym status " + f.prym_status);
    }
    out->removed_mask = f.removed_bitmask;
    out->dimension = f.dimension;
    out->kernel_order = f.kernel_order;
    out->prym_status = static_cast<fermat_prym_status>(*status);
    out->prym_exponent = f.prym_exponent.value_or(0);
    return FERMAT_OK;
  });
}

uint64_t fermat_document_genus(const fermat_document* doc) {
  return doc ? doc->doc.genus : 0;
}

uint64_t fermat_document_total_dimension(const fermat_document* doc) {
  return doc ? doc->doc.total_dimension : 0;
}

int fermat_document_identities_pass(const fermat_document* doc) {
  return doc && doc->doc.all_identities_pass() ? 1 : 0;
}

int fermat_document_equal(const fermat_document* a, const fermat_document* b) {
  return a && b && a->doc == b->doc ? 1 : 0;
}

fermat_status fermat_verify(uint32_t n_lo, uint32_t n_hi,
                            const uint32_t* primes, size_t prime_count,
                            int force, fermat_verification** out) {
  if (!out || (!primes && prime_count > 0)) {
    return fail(FERMAT_ERR_NULL_POINTER, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    std::vector<fermat::Residue> list(primes, primes + prime_count);
    *out = new fermat_verification{
        fermat::run_verification(n_lo, n_hi, list, {force != 0})};
    return FERMAT_OK;
  });
}

int fermat_verification_passed(const fermat_verification* v) {
  return v && v->summary.passed() ? 1 : 0;
}

size_t fermat_verification_check_count(const fermat_verification* v) {
  return v ? v->summary.entries.size() : 0;
}

fermat_status fermat_verification_render(const fermat_verification* v,
                                         fermat_format format, char** out) {
  if (!v || !out) return fail(FERMAT_ERR_NULL_POINTER, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = copy_string(fermat::render(v->summary, to_format(format)));
    return FERMAT_OK;
  });
}

void fermat_verification_free(fermat_verification* v) { delete v; }

}  // extern "C"
