#include "udc/udc.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "udc/channel.hpp"
#include "udc/container.hpp"
#include "udc/designer.hpp"
#include "udc/ecp_decoder.hpp"
#include "udc/error.hpp"
#include "udc/oracle.hpp"
#include "udc/selftest.hpp"

struct udc_field {
  udc::FieldPtr field;
};

struct udc_code {
  udc::LinearCode code;
};

namespace {

thread_local std::string last_error;

udc_status set_error(udc_status s, const std::string& what) {
  last_error = what;
  return s;
}

template <typename Fn>
udc_status guard(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const udc::Error& e) {
    return set_error(static_cast<udc_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(UDC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(UDC_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(UDC_ERR_INTERNAL, "unknown error");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (!p) udc::fail(udc::ErrorCode::invalid_argument, std::string(what) + " is NULL");
}

}  // namespace

extern "C" {

const char* udc_last_error(void) { return last_error.c_str(); }

const char* udc_version(void) { return "1.0.0"; }

void udc_string_free(char* s) { std::free(s); }

udc_status udc_field_parse(const char* spec, udc_field** out) {
  return guard([&] {
    need(spec, "spec");
    need(out, "out");
    *out = new udc_field{udc::make_field(spec)};
    return UDC_OK;
  });
}

void udc_field_free(udc_field* field) { delete field; }

udc_status udc_field_to_string(const udc_field* field, char** out) {
  return guard([&] {
    need(field, "field");
    need(out, "out");
    *out = dup(udc::to_string(field->field->spec()));
    return UDC_OK;
  });
}

uint64_t udc_field_order(const udc_field* field) { return field ? field->field->order() : 0; }

udc_status udc_field_mul(const udc_field* field, uint64_t a, uint64_t b, uint64_t* out) {
  return guard([&] {
    need(field, "field");
    need(out, "out");
    if (!field->field->contains(a) || !field->field->contains(b)) {
      udc::fail(udc::ErrorCode::invalid_argument, "operand outside field");
    }
    *out = field->field->mul(a, b);
    return UDC_OK;
  });
}

udc_status udc_field_inv(const udc_field* field, uint64_t a, uint64_t* out) {
  return guard([&] {
    need(field, "field");
    need(out, "out");
    if (!field->field->contains(a)) udc::fail(udc::ErrorCode::invalid_argument, "operand outside field");
    *out = field->field->inv(a);
    return UDC_OK;
  });
}

udc_status udc_field_element_order(const udc_field* field, uint64_t a, uint64_t* out) {
  return guard([&] {
    need(field, "field");
    need(out, "out");
    if (!field->field->contains(a)) udc::fail(udc::ErrorCode::invalid_argument, "operand outside field");
    *out = field->field->element_order(a);
    return UDC_OK;
  });
}

udc_status udc_field_find_element_of_order(const udc_field* field, uint64_t n, uint64_t* out) {
  return guard([&] {
    need(field, "field");
    need(out, "out");
    *out = field->field->find_element_of_order(n);
    return UDC_OK;
  });
}

udc_status udc_code_create(const udc_field* field, size_t n, size_t r, size_t start, size_t step, udc_kind kind,
                           udc_code** out) {
  return guard([&] {
    need(field, "field");
    need(out, "out");
    udc::CodeDescriptor d;
    d.field = field->field->spec();
    d.n = n;
    d.r = r;
    d.start = start;
    d.step = step;
    if (kind != UDC_KIND_FOURIER && kind != UDC_KIND_VANDERMONDE) {
      udc::fail(udc::ErrorCode::invalid_argument, "unknown scheme kind");
    }
    d.kind = kind == UDC_KIND_FOURIER ? udc::SchemeKind::fourier : udc::SchemeKind::vandermonde;
    *out = new udc_code{udc::make_code(d)};
    return UDC_OK;
  });
}

udc_status udc_code_parse(const char* descriptor, udc_code** out) {
  return guard([&] {
    need(descriptor, "descriptor");
    need(out, "out");
    *out = new udc_code{udc::make_code(udc::parse_code_descriptor(descriptor))};
    return UDC_OK;
  });
}

void udc_code_free(udc_code* code) { delete code; }

udc_status udc_code_descriptor(const udc_code* code, char** out) {
  return guard([&] {
    need(code, "code");
    need(out, "out");
    *out = dup(udc::to_string(udc::describe(code->code)));
    return UDC_OK;
  });
}

udc_status udc_code_info_get(const udc_code* code, udc_code_info* out) {
  return guard([&] {
    need(code, "code");
    need(out, "out");
    const auto& c = code->code;
    out->n = c.n();
    out->r = c.r();
    out->t = c.t();
    out->start = c.selection().start;
    out->step = c.selection().step;
    out->kind = c.scheme().kind() == udc::SchemeKind::fourier ? UDC_KIND_FOURIER : UDC_KIND_VANDERMONDE;
    out->mds = c.mds() ? 1 : 0;
    out->decodable = c.check_structure() ? 1 : 0;
    out->field_order = c.field().order();
    return UDC_OK;
  });
}

udc_status udc_code_encode(const udc_code* code, const uint64_t* message, size_t message_len, uint64_t* codeword,
                           size_t codeword_len) {
  return guard([&] {
    need(code, "code");
    need(message, "message");
    need(codeword, "codeword");
    if (codeword_len != code->code.n()) udc::fail(udc::ErrorCode::invalid_argument, "codeword buffer must hold n symbols");
    const udc::Vector word = code->code.encode(std::span<const uint64_t>(message, message_len));
    std::copy(word.begin(), word.end(), codeword);
    return UDC_OK;
  });
}

udc_status udc_code_decode(const udc_code* code, const uint64_t* received, size_t received_len, uint64_t* corrected,
                           uint64_t* error_out, uint64_t* message_out, udc_decode_status* status,
                           size_t* error_count) {
  return guard([&] {
    need(code, "code");
    need(received, "received");
    need(corrected, "corrected");
    need(status, "status");
    const auto out = udc::decode(code->code, std::span<const uint64_t>(received, received_len));
    std::copy(out.corrected.begin(), out.corrected.end(), corrected);
    if (error_out) std::copy(out.error.begin(), out.error.end(), error_out);
    if (message_out && out.status != udc::DecodeStatus::failure) {
      std::copy(out.message.begin(), out.message.end(), message_out);
    }
    switch (out.status) {
      case udc::DecodeStatus::no_error: *status = UDC_DECODE_NO_ERROR; break;
      case udc::DecodeStatus::corrected: *status = UDC_DECODE_CORRECTED; break;
      case udc::DecodeStatus::failure: *status = UDC_DECODE_FAILURE; break;
    }
    if (error_count) *error_count = out.error_count;
    return UDC_OK;
  });
}

udc_status udc_code_min_distance(const udc_code* code, size_t* distance) {
  return guard([&] {
    need(code, "code");
    need(distance, "distance");
    *distance = udc::min_distance(code->code).measured;
    return UDC_OK;
  });
}

udc_status udc_encode_file(const char* descriptor, const char* in_path, const char* out_path) {
  return guard([&] {
    need(descriptor, "descriptor");
    need(in_path, "in_path");
    need(out_path, "out_path");
    udc::encode_file(in_path, out_path, udc::parse_code_descriptor(descriptor));
    return UDC_OK;
  });
}

udc_status udc_decode_file(const char* in_path, const char* out_path, int best_effort, size_t* corrected_blocks,
                           size_t* failed_blocks) {
  return guard([&] {
    need(in_path, "in_path");
    need(out_path, "out_path");
    const auto rep = udc::decode_file(in_path, out_path, best_effort != 0);
    if (corrected_blocks) *corrected_blocks = rep.corrected_blocks;
    if (failed_blocks) *failed_blocks = rep.failed_blocks.size();
    return UDC_OK;
  });
}

udc_status udc_simulate(const udc_code* code, double p, uint64_t trials, uint64_t seed, udc_format format,
                        char** out) {
  return guard([&] {
    need(code, "code");
    need(out, "out");
    const auto rep = udc::run_simulation(code->code, p, trials, seed);
    *out = dup(format == UDC_FORMAT_JSON ? udc::report_json(rep) : udc::report_text(rep));
    return UDC_OK;
  });
}

udc_status udc_design(const char* rate, size_t t, int prime_field_only, udc_format format, char** out) {
  return guard([&] {
    need(rate, "rate");
    need(out, "out");
    bool exact = true;
    const udc::Rational r = udc::parse_rate(rate, &exact);
    udc::CandidateOptions opts;
    opts.prime_field_only = prime_field_only != 0;
    udc::CodePlan plan = udc::plan_code(r, t, opts);
    plan.exact_rate = exact;
    *out = dup(format == UDC_FORMAT_JSON ? udc::plan_json(plan) : udc::plan_table(plan));
    return UDC_OK;
  });
}

udc_status udc_selftest(char** report) {
  return guard([&] {
    const auto checks = udc::run_selftest();
    std::ostringstream os;
    bool all = true;
    for (const auto& c : checks) {
      os << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
      all = all && c.passed;
    }
    if (report) *report = dup(os.str());
    if (!all) return set_error(UDC_ERR_INTERNAL, "selftest failed");
    return UDC_OK;
  });
}

}  // extern "C"
